#include <doctest.h>

#include <cmath>

#include "entmom/density.hpp"
#include "entmom/eigensolver.hpp"
#include "entmom/errors.hpp"
#include "entmom/matrix.hpp"
#include "entmom/rng.hpp"
#include "entmom/states.hpp"

using namespace entmom;

namespace {

ComplexMatrix random_hermitian(std::size_t d, std::uint64_t seed) {
    SeededRng rng(seed);
    ComplexMatrix m(d, d);
    for (std::size_t i = 0; i < d; ++i) {
        m(i, i) = rng.uniform() - 0.5;
        for (std::size_t j = i + 1; j < d; ++j) {
            const Complex v{rng.uniform() - 0.5, rng.uniform() - 0.5};
            m(i, j) = v;
            m(j, i) = std::conj(v);
        }
    }
    return m;
}

}  // namespace

TEST_SUITE("matrix") {
    TEST_CASE("kron identities") {
        const ComplexMatrix i2 = ComplexMatrix::identity(2);
        CHECK(kron(i2, i2).approx_equal(ComplexMatrix::identity(4), 0.0));

        const ComplexMatrix a = ComplexMatrix::from_rows({{1.0, 0.0}, {0.0, 0.0}});
        const ComplexMatrix b = ComplexMatrix::from_rows({{0.0, 0.0}, {0.0, 1.0}});
        ComplexMatrix expect(4, 4);
        expect(1, 1) = 1.0;
        CHECK(kron(a, b).approx_equal(expect, 0.0));
    }

    TEST_CASE("kron of sigma_x flips |00> to |11>") {
        const ComplexMatrix sx = ComplexMatrix::from_rows({{0.0, 1.0}, {1.0, 0.0}});
        ComplexMatrix ket00(4, 1);
        ket00(0, 0) = 1.0;
        const ComplexMatrix flipped = kron(sx, sx) * ket00;
        ComplexMatrix ket11(4, 1);
        ket11(3, 0) = 1.0;
        CHECK(flipped.approx_equal(ket11, 0.0));
    }

    TEST_CASE("trace powers") {
        CHECK(trace_power(ComplexMatrix::identity(5), 7) == doctest::Approx(5.0).epsilon(1e-14));

        ComplexMatrix mixed = ComplexMatrix::identity(4);
        mixed *= 0.25;
        CHECK(trace_power(mixed, 3) == doctest::Approx(1.0 / 16.0).epsilon(1e-14));

        const ComplexMatrix pt = partial_transpose(werner(1.0), 1);
        CHECK(trace_power(pt, 3) == doctest::Approx(0.25).epsilon(1e-12));
    }

    TEST_CASE("trace power rejects amplified imaginary parts") {
        // Hermitian within 1e-10 but with an off-diagonal defect that doubles
        // into the k=2 trace
        ComplexMatrix m(2, 2);
        m(0, 1) = Complex{1.0, 6e-11};
        m(1, 0) = Complex{1.0, 0.0};
        CHECK(m.is_hermitian(1e-10));
        CHECK_THROWS_AS(trace_power(m, 2), NonRealTrace);
    }

    TEST_CASE("trace power equals eigenvalue power sum up to k=6") {
        for (std::uint64_t seed = 0; seed < 20; ++seed) {
            const std::size_t d = 3 + seed % 7;
            const ComplexMatrix m = random_hermitian(d, 1000 + seed);
            const Spectrum spec = hermitian_eigenvalues(m);
            for (int k = 1; k <= 6; ++k) {
                double expect = 0.0;
                for (double ev : spec.eigenvalues)
                    expect += std::pow(ev, k);
                CHECK(std::abs(trace_power(m, k) - expect) <= 1e-9);
            }
        }
    }
}

TEST_SUITE("eigensolver") {
    TEST_CASE("diagonal input") {
        const ComplexMatrix m = ComplexMatrix::from_rows(
            {{3.0, 0.0, 0.0}, {0.0, 1.0, 0.0}, {0.0, 0.0, 2.0}});
        const Spectrum spec = hermitian_eigenvalues(m);
        REQUIRE(spec.eigenvalues.size() == 3);
        CHECK(spec.eigenvalues[0] == doctest::Approx(1.0).epsilon(1e-14));
        CHECK(spec.eigenvalues[1] == doctest::Approx(2.0).epsilon(1e-14));
        CHECK(spec.eigenvalues[2] == doctest::Approx(3.0).epsilon(1e-14));
    }

    TEST_CASE("pauli-y-like matrix") {
        const ComplexMatrix m = ComplexMatrix::from_rows(
            {{0.0, Complex{0.0, 1.0}}, {Complex{0.0, -1.0}, 0.0}});
        const Spectrum spec = hermitian_eigenvalues(m);
        CHECK(spec.min() == doctest::Approx(-1.0).epsilon(1e-13));
        CHECK(spec.max() == doctest::Approx(1.0).epsilon(1e-13));
    }

    TEST_CASE("bell partial transpose spectrum") {
        const Spectrum spec = hermitian_eigenvalues(partial_transpose(werner(1.0), 1));
        REQUIRE(spec.eigenvalues.size() == 4);
        CHECK(spec.eigenvalues[0] == doctest::Approx(-0.5).epsilon(1e-12));
        CHECK(spec.eigenvalues[1] == doctest::Approx(0.5).epsilon(1e-12));
        CHECK(spec.eigenvalues[2] == doctest::Approx(0.5).epsilon(1e-12));
        CHECK(spec.eigenvalues[3] == doctest::Approx(0.5).epsilon(1e-12));
    }

    TEST_CASE("rejects non-hermitian input") {
        ComplexMatrix m(2, 2);
        m(0, 1) = 1.0;
        CHECK_THROWS_AS(hermitian_eigenvalues(m), NotHermitian);
        CHECK_THROWS_AS(hermitian_eigenvalues(ComplexMatrix(2, 3)), NotHermitian);
    }

    TEST_CASE("reports non-convergence when the sweep budget is exhausted") {
        const ComplexMatrix m = random_hermitian(5, 99);
        CHECK_THROWS_AS(hermitian_eigenvalues(m, 1e-10, 1e-13, 0), NoConvergence);
    }

    TEST_CASE("eigenvalue sum matches trace on random matrices") {
        for (std::uint64_t seed = 0; seed < 50; ++seed) {
            const std::size_t d = 2 + seed % 9;
            const ComplexMatrix m = random_hermitian(d, 2000 + seed);
            const Spectrum spec = hermitian_eigenvalues(m);
            CHECK(std::abs(spec.sum() - m.trace().real()) <= 1e-9);
        }
    }
}

TEST_SUITE("partial operations") {
    TEST_CASE("partial transpose of a symmetric product factor is a no-op") {
        const ComplexMatrix a = ComplexMatrix::from_rows({{0.7, 0.0}, {0.0, 0.3}});
        const ComplexMatrix b = ComplexMatrix::from_rows({{0.2, 0.1}, {0.1, 0.8}});
        const ComplexMatrix prod = kron(a, b);
        const DensityMatrix sym(prod, Dims{2, 2});
        CHECK(partial_transpose(sym, 1).approx_equal(prod, 0.0));
    }

    TEST_CASE("maximally mixed is invariant") {
        ComplexMatrix mixed = ComplexMatrix::identity(4);
        mixed *= 0.25;
        const DensityMatrix rho(mixed, Dims{2, 2});
        CHECK(partial_transpose(rho, 0).approx_equal(mixed, 0.0));
        CHECK(partial_transpose(rho, 1).approx_equal(mixed, 0.0));
    }

    TEST_CASE("bell partial transpose has eigenvalue -1/2") {
        const Spectrum spec = hermitian_eigenvalues(partial_transpose(werner(1.0), 1));
        CHECK(spec.min() == doctest::Approx(-0.5).epsilon(1e-12));
    }

    TEST_CASE("partial transpose is an exact involution") {
        for (std::uint64_t seed = 0; seed < 10; ++seed) {
            const DensityMatrix rho = random_density(Dims{2, 4}, 300 + seed);
            for (std::size_t party = 0; party < 2; ++party) {
                const ComplexMatrix once = partial_transpose(rho, party);
                const ComplexMatrix twice =
                    partial_transpose(once, rho.dims(), party);
                CHECK(twice.max_abs_diff(rho.matrix()) == 0.0);
            }
        }
    }

    TEST_CASE("partial transpose spectrum is invariant under local basis permutations") {
        // swap the B basis: rho -> (I (x) P) rho (I (x) P)^T
        const ComplexMatrix p = ComplexMatrix::from_rows({{0.0, 1.0}, {1.0, 0.0}});
        const ComplexMatrix u = kron(ComplexMatrix::identity(2), p);
        for (std::uint64_t seed = 0; seed < 10; ++seed) {
            const DensityMatrix rho = random_density(Dims{2, 2}, 400 + seed);
            const DensityMatrix permuted(u * rho.matrix() * u.adjoint(), Dims{2, 2});
            const Spectrum base = hermitian_eigenvalues(partial_transpose(rho, 1));
            const Spectrum perm = hermitian_eigenvalues(partial_transpose(permuted, 1));
            for (std::size_t i = 0; i < base.eigenvalues.size(); ++i)
                CHECK(std::abs(base.eigenvalues[i] - perm.eigenvalues[i]) <= 1e-9);
        }
    }

    TEST_CASE("bad party index") {
        const DensityMatrix rho = werner(0.5);
        CHECK_THROWS_AS(partial_transpose(rho, 2), BadParty);
        CHECK_THROWS_AS(partial_trace(rho, 2), BadParty);
    }

    TEST_CASE("partial trace of product and bell states") {
        const ComplexMatrix a = ComplexMatrix::from_rows({{0.7, 0.0}, {0.0, 0.3}});
        const ComplexMatrix b = ComplexMatrix::from_rows({{0.2, 0.1}, {0.1, 0.8}});
        const DensityMatrix prod(kron(a, b), Dims{2, 2});
        CHECK(partial_trace(prod, 0).approx_equal(a, 1e-12));
        CHECK(partial_trace(prod, 1).approx_equal(b, 1e-12));

        ComplexMatrix half = ComplexMatrix::identity(2);
        half *= 0.5;
        CHECK(partial_trace(werner(1.0), 0).approx_equal(half, 1e-12));
        CHECK(partial_trace(ghz_noise(0.0), 2).approx_equal(half, 1e-12));
    }

    TEST_CASE("partial trace contracts kron to a scaled factor") {
        for (std::uint64_t seed = 0; seed < 10; ++seed) {
            const ComplexMatrix a = random_hermitian(3, 500 + seed);
            const ComplexMatrix b = random_hermitian(2, 600 + seed);
            ComplexMatrix scaled = a;
            scaled *= b.trace();
            CHECK(partial_trace(kron(a, b), Dims{3, 2}, 0).max_abs_diff(scaled) <= 1e-12);
        }
    }
}

TEST_SUITE("density matrix invariants") {
    TEST_CASE("constructor validates") {
        ComplexMatrix not_unit = ComplexMatrix::identity(4);
        CHECK_THROWS_AS(DensityMatrix(not_unit, Dims{2, 2}), InvalidDensityMatrix);

        ComplexMatrix not_psd(2, 2);
        not_psd(0, 0) = 1.5;
        not_psd(1, 1) = -0.5;
        CHECK_THROWS_AS(DensityMatrix(not_psd, Dims{2}), InvalidDensityMatrix);

        ComplexMatrix wrong_dims = ComplexMatrix::identity(4);
        wrong_dims *= 0.25;
        CHECK_THROWS_AS(DensityMatrix(wrong_dims, Dims{2, 3}), InvalidDensityMatrix);
    }
}

#include <doctest.h>

#include <cmath>

#include "entmom/detect.hpp"
#include "entmom/errors.hpp"
#include "entmom/oracles.hpp"
#include "entmom/rng.hpp"
#include "entmom/states.hpp"

using namespace entmom;

namespace {

// raw realignment index shuffle, for the involution property
ComplexMatrix realign_raw(const ComplexMatrix& m, std::size_t da, std::size_t db) {
    ComplexMatrix r(da * da, db * db);
    for (std::size_t i = 0; i < da; ++i)
        for (std::size_t k = 0; k < da; ++k)
            for (std::size_t j = 0; j < db; ++j)
                for (std::size_t l = 0; l < db; ++l)
                    r(i * da + k, j * db + l) = m(i * db + j, k * db + l);
    return r;
}

}  // namespace

TEST_SUITE("ppt oracle") {
    TEST_CASE("known verdicts") {
        CHECK(ppt_check(werner(0.5)).npt);
        CHECK_FALSE(ppt_check(sigma_b(0.5)).npt);
        CHECK(ppt_check(rho_alpha(4.5)).npt);
        CHECK_FALSE(ppt_check(rho_alpha(3.5)).npt);
    }

    TEST_CASE("per-party eigenvalues are reported") {
        const PptReport rep = ppt_check(ghz_noise(0.0));
        REQUIRE(rep.min_eig_per_party.size() == 3);
        for (double v : rep.min_eig_per_party)
            CHECK(v == doctest::Approx(-0.5).epsilon(1e-10));
    }
}

TEST_SUITE("mapped spectrum oracle") {
    TEST_CASE("bell state under lambda1") {
        const Spectrum spec = mapped_spectrum(werner(1.0), lambda1(), 1);
        CHECK(spec.eigenvalues[0] == doctest::Approx(-0.5).epsilon(1e-12));
        CHECK(spec.eigenvalues[1] == doctest::Approx(0.5).epsilon(1e-12));
        CHECK(spec.eigenvalues[2] == doctest::Approx(0.5).epsilon(1e-12));
        CHECK(spec.eigenvalues[3] == doctest::Approx(0.5).epsilon(1e-12));
    }

    TEST_CASE("reduction map output is PSD on separable and PPT states") {
        for (std::uint64_t seed = 0; seed < 20; ++seed) {
            const DensityMatrix rho = random_separable(Dims{3, 3}, 1 + seed % 5, 8000 + seed);
            CHECK(mapped_spectrum(rho, reduction_map(3), 1).min() >= -1e-10);
        }
        for (double a : {0.2, 0.5, 0.8})
            for (std::size_t party = 0; party < 2; ++party)
                CHECK(mapped_spectrum(sigma_a(a), reduction_map(3), party).min() >= -1e-10);
    }
}

TEST_SUITE("realignment") {
    TEST_CASE("maximally mixed two qubits") {
        ComplexMatrix mixed = ComplexMatrix::identity(4);
        mixed *= 0.25;
        const DensityMatrix rho(mixed, Dims{2, 2});
        const ComplexMatrix r = realignment(rho);
        ComplexMatrix expect(4, 4);
        expect(0, 0) = expect(0, 3) = expect(3, 0) = expect(3, 3) = 0.25;
        CHECK(r.max_abs_diff(expect) <= 1e-15);
        const auto moments = realignment_moments(rho, 1);
        CHECK(std::abs(moments[0] - Complex{0.5, 0.0}) <= 1e-14);
    }

    TEST_CASE("product states realign to an outer product of vectorizations") {
        const DensityMatrix a2 = random_density(Dims{2}, 311);
        const DensityMatrix b2 = random_density(Dims{2}, 312);
        const DensityMatrix prod(kron(a2.matrix(), b2.matrix()), Dims{2, 2});
        const ComplexMatrix r = realignment(prod);
        ComplexMatrix expect(4, 4);
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t k = 0; k < 2; ++k)
                for (std::size_t j = 0; j < 2; ++j)
                    for (std::size_t l = 0; l < 2; ++l)
                        expect(i * 2 + k, j * 2 + l) = a2.matrix()(i, k) * b2.matrix()(j, l);
        CHECK(r.max_abs_diff(expect) <= 1e-14);

        // r1 = Tr(rho_A rho_B^T)
        const Complex r1 = realignment_moments(prod, 1)[0];
        const Complex expect_r1 = (a2.matrix() * b2.matrix().transpose()).trace();
        CHECK(std::abs(r1 - expect_r1) <= 1e-14);
    }

    TEST_CASE("bell state trace norm and moments") {
        const DensityMatrix bell = werner(1.0);
        CHECK(realignment_trace_norm(bell) == doctest::Approx(2.0).epsilon(1e-10));
        const auto moments = realignment_moments(bell, 3);
        CHECK(std::abs(moments[0] - Complex{2.0, 0.0}) <= 1e-12);
        CHECK(std::abs(moments[1] - Complex{1.0, 0.0}) <= 1e-12);
        CHECK(std::abs(moments[2] - Complex{0.5, 0.0}) <= 1e-12);
    }

    TEST_CASE("the index shuffle is its own inverse on square dims") {
        for (std::size_t d : {2, 3}) {
            const DensityMatrix rho = random_density(Dims{d, d}, 42 + d);
            const ComplexMatrix once = realign_raw(rho.matrix(), d, d);
            const ComplexMatrix twice = realign_raw(once, d, d);
            CHECK(twice.max_abs_diff(rho.matrix()) == 0.0);
            CHECK(realignment(rho).max_abs_diff(once) == 0.0);
        }
    }

    TEST_CASE("shape and errors") {
        const ComplexMatrix r = realignment(sigma_b(0.5));
        CHECK(r.rows() == 4);
        CHECK(r.cols() == 16);
        CHECK_THROWS_AS(realignment_moments(sigma_b(0.5), 3), DimensionMismatch);
        CHECK_THROWS_AS(realignment(ghz_noise(0.5)), NotBipartite);
    }
}

TEST_SUITE("consistency checking") {
    TEST_CASE("synthetic violation is caught") {
        HankelReport fake;
        fake.min_eig_s1 = -1e-3;
        fake.min_eig_s2 = 0.0;
        CHECK_FALSE(hankel_consistent(1e-12, fake));
        CHECK(hankel_consistent(-1e-3, fake));  // not PSD: nothing to assert
        fake.min_eig_s1 = 0.0;
        CHECK(hankel_consistent(1e-12, fake));

        ConsistencyLog log;
        fake.min_eig_s1 = -1e-3;
        log.record(0.0, fake, "synthetic");
        CHECK(log.checks == 1);
        REQUIRE(log.violations.size() == 1);
        CHECK(log.violations[0].find("synthetic") != std::string::npos);
    }

    TEST_CASE("NPT is equivalent to a negative deep Hankel matrix for two qubits") {
        // with all seven moments of a 4x4 partial transpose, the shifted
        // Hankel matrices B1..B3 are PSD exactly when the spectrum is
        std::size_t npt_count = 0;
        for (std::uint64_t seed = 0; seed < 200; ++seed) {
            const DensityMatrix rho = random_density(Dims{2, 2}, 12000 + seed);
            const ComplexMatrix pt = partial_transpose(rho, 1);
            const Spectrum spec = hermitian_eigenvalues(pt);
            const MomentSequence p = moment_sequence(pt, 7, true);
            double min_hankel = 1.0;
            for (std::size_t k = 1; k <= 3; ++k) {
                ComplexMatrix b(k + 1, k + 1);
                for (std::size_t i = 0; i <= k; ++i)
                    for (std::size_t j = 0; j <= k; ++j)
                        b(i, j) = p.m(i + j + 1);
                min_hankel = std::min(min_hankel, hermitian_eigenvalues(b).min());
            }
            if (std::abs(spec.min()) < 1e-6)
                continue;  // too close to the boundary to classify
            if (spec.min() < 0.0) {
                ++npt_count;
                CHECK(min_hankel < -1e-12);
            } else {
                CHECK(min_hankel >= -1e-10);
            }
        }
        CHECK(npt_count > 50);  // the sample actually exercises both branches
    }
}

TEST_SUITE("separable sweep") {
    TEST_CASE("two qubits, the three qubit maps") {
        ConsistencyLog log;
        const SweepReport rep = separable_sweep(
            1000, Dims{2, 2}, {"transpose", "lambda1", "lambda2"}, 13000, 5, &log);
        CHECK(rep.worst_witness >= -1e-9);
        CHECK(rep.evaluations == 6000);
        CHECK(log.violations.empty());
    }

    TEST_CASE("two qutrits with phi1 and the reduction map") {
        const SweepReport rep =
            separable_sweep(500, Dims{3, 3}, {"phi1", "reduction:3"}, 14000);
        CHECK(rep.worst_witness >= -1e-9);
        CHECK(rep.evaluations == 2000);
    }

    TEST_CASE("2x4 with the elementary-operator reduction map") {
        const SweepReport rep =
            separable_sweep(200, Dims{2, 4}, {"hou:4:unordered"}, 15000);
        CHECK(rep.worst_witness >= -1e-9);
        CHECK(rep.evaluations == 200);
    }
}

TEST_SUITE("detection evaluation") {
    TEST_CASE("werner 0.5 under lambda1 is detected and NPT") {
        const DetectionResult det = evaluate_detection(werner(0.5), lambda1(), 1, 5);
        CHECK(det.hankel_verdict.detected);
        CHECK(det.q3_lambda_verdict->detected);
        CHECK(det.q3_optimal_verdict->detected);
        CHECK(det.mapped.min() < -1e-3);
        CHECK(det.consistent);

        const PtResult pt = evaluate_pt(werner(0.5), 1, 5);
        CHECK(pt.p3_verdict.detected);
        CHECK(pt.p3_oppt_verdict.detected);
        CHECK(pt.min_pt_eig == doctest::Approx(-0.125).epsilon(1e-10));
    }

    TEST_CASE("unnormalized evaluation skips the q3 criteria") {
        const DetectionResult det =
            evaluate_detection(werner(0.5), lambda2(), 1, 5, false);
        CHECK_FALSE(det.q3_lambda_verdict.has_value());
        CHECK_FALSE(det.q3_optimal_verdict.has_value());
        CHECK_FALSE(det.hankel.minors.has_value());
    }
}

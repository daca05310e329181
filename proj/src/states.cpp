#include "entmom/states.hpp"

#include <cmath>
#include <fstream>
#include <utility>
#include <vector>

#include "entmom/errors.hpp"
#include "entmom/matrix_io.hpp"
#include "entmom/rng.hpp"

namespace entmom {

namespace {

ComplexMatrix projector(const std::vector<Complex>& v) {
    ComplexMatrix p(v.size(), v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j)
            p(i, j) = v[i] * std::conj(v[j]);
    return p;
}

// |i> tensor |j> ... as a column vector over the composite space
std::vector<Complex> basis_vector(const Dims& dims, const std::vector<std::size_t>& digits) {
    std::size_t idx = 0;
    for (std::size_t k = 0; k < dims.size(); ++k)
        idx = idx * dims[k] + digits[k];
    std::vector<Complex> v(total_dim(dims), Complex{0.0, 0.0});
    v[idx] = 1.0;
    return v;
}

std::vector<Complex> add_scaled(std::vector<Complex> a, const std::vector<Complex>& b,
                                Complex s) {
    for (std::size_t i = 0; i < a.size(); ++i)
        a[i] += s * b[i];
    return a;
}

void require_range(const char* family, double value, double lo, double hi, bool open) {
    const bool ok = open ? (value > lo && value < hi) : (value >= lo && value <= hi);
    if (!ok)
        throw OutOfRange(std::string(family) + " parameter " + std::to_string(value) +
                         " outside " + (open ? "(" : "[") + std::to_string(lo) + ", " +
                         std::to_string(hi) + (open ? ")" : "]"));
}

}  // namespace

FamilyParam::FamilyParam(std::string family_in, double value_in)
    : family(std::move(family_in)), value(value_in) {
    if (family == "werner")
        require_range("werner", value, 0.0, 1.0, false);
    else if (family == "sigma_b")
        require_range("sigma_b", value, 0.0, 1.0, true);
    else if (family == "rho_alpha")
        require_range("rho_alpha", value, 2.0, 5.0, false);
    else if (family == "sigma_a")
        require_range("sigma_a", value, 0.0, 1.0, true);
    else if (family == "ghz")
        require_range("ghz", value, 0.0, 1.0, false);
    else if (family == "w")
        require_range("w", value, 0.0, 1.0, false);
    else
        throw UnknownId("unknown state family '" + family + "'");
}

DensityMatrix werner(double w) {
    require_range("werner", w, 0.0, 1.0, false);
    const Dims dims{2, 2};
    auto phi = add_scaled(basis_vector(dims, {0, 0}), basis_vector(dims, {1, 1}), 1.0);
    for (auto& a : phi)
        a /= std::sqrt(2.0);
    ComplexMatrix m = projector(phi);
    m *= Complex{w, 0.0};
    ComplexMatrix noise = ComplexMatrix::identity(4);
    noise *= Complex{(1.0 - w) / 4.0, 0.0};
    m += noise;
    return DensityMatrix(std::move(m), dims);
}

DensityMatrix sigma_b(double b) {
    require_range("sigma_b", b, 0.0, 1.0, true);
    ComplexMatrix m(8, 8);
    for (std::size_t i = 0; i < 4; ++i)
        m(i, i) = b;
    m(5, 5) = b;
    m(6, 6) = b;
    m(0, 5) = m(5, 0) = b;
    m(1, 6) = m(6, 1) = b;
    m(2, 7) = m(7, 2) = b;
    m(4, 4) = m(7, 7) = (1.0 + b) / 2.0;
    m(4, 7) = m(7, 4) = std::sqrt(1.0 - b * b) / 2.0;
    m *= Complex{1.0 / (7.0 * b + 1.0), 0.0};
    return DensityMatrix(std::move(m), Dims{2, 4});
}

DensityMatrix rho_alpha(double alpha) {
    require_range("rho_alpha", alpha, 2.0, 5.0, false);
    const Dims dims{3, 3};
    auto psi = basis_vector(dims, {0, 0});
    psi = add_scaled(std::move(psi), basis_vector(dims, {1, 1}), 1.0);
    psi = add_scaled(std::move(psi), basis_vector(dims, {2, 2}), 1.0);
    for (auto& a : psi)
        a /= std::sqrt(3.0);

    ComplexMatrix m = projector(psi);
    m *= Complex{2.0 / 7.0, 0.0};
    // sigma_plus: |01>,|12>,|20>; sigma_minus: |10>,|21>,|02>
    const std::vector<std::vector<std::size_t>> plus{{0, 1}, {1, 2}, {2, 0}};
    const std::vector<std::vector<std::size_t>> minus{{1, 0}, {2, 1}, {0, 2}};
    for (const auto& digits : plus) {
        ComplexMatrix p = projector(basis_vector(dims, digits));
        p *= Complex{alpha / 21.0, 0.0};
        m += p;
    }
    for (const auto& digits : minus) {
        ComplexMatrix p = projector(basis_vector(dims, digits));
        p *= Complex{(5.0 - alpha) / 21.0, 0.0};
        m += p;
    }
    return DensityMatrix(std::move(m), dims);
}

DensityMatrix sigma_a(double a) {
    require_range("sigma_a", a, 0.0, 1.0, true);
    ComplexMatrix m(9, 9);
    for (std::size_t i : {0, 1, 2, 3, 4, 5, 7})
        m(i, i) = a;
    m(0, 4) = m(4, 0) = a;
    m(0, 8) = m(8, 0) = a;
    m(4, 8) = m(8, 4) = a;
    m(6, 6) = m(8, 8) = (1.0 + a) / 2.0;
    m(6, 8) = m(8, 6) = std::sqrt(1.0 - a * a) / 2.0;
    m *= Complex{1.0 / (8.0 * a + 1.0), 0.0};
    return DensityMatrix(std::move(m), Dims{3, 3});
}

DensityMatrix upb_tiles() {
    const Dims dims{3, 3};
    const double s2 = std::sqrt(2.0);
    const double s3 = std::sqrt(3.0);

    auto local = [](std::size_t i) {
        std::vector<Complex> v(3, Complex{0.0, 0.0});
        v[i] = 1.0;
        return v;
    };
    auto minus = [&](std::size_t i, std::size_t j) {
        auto v = local(i);
        for (std::size_t k = 0; k < 3; ++k)
            v[k] -= local(j)[k];
        for (auto& a : v)
            a /= s2;
        return v;
    };
    auto uniform = [&]() {
        std::vector<Complex> v(3, Complex{1.0 / s3, 0.0});
        return v;
    };
    auto tensor = [](const std::vector<Complex>& a, const std::vector<Complex>& b) {
        std::vector<Complex> v(a.size() * b.size());
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = 0; j < b.size(); ++j)
                v[i * b.size() + j] = a[i] * b[j];
        return v;
    };

    const std::vector<std::vector<Complex>> upb = {
        tensor(local(0), minus(0, 1)), tensor(minus(0, 1), local(2)),
        tensor(local(2), minus(1, 2)), tensor(minus(1, 2), local(0)),
        tensor(uniform(), uniform())};

    ComplexMatrix m = ComplexMatrix::identity(9);
    for (const auto& v : upb)
        m -= projector(v);
    m *= Complex{0.25, 0.0};
    return DensityMatrix(std::move(m), dims);
}

namespace {

DensityMatrix noisy_three_qubit(double noise, const std::vector<Complex>& pure,
                                const char* family) {
    require_range(family, noise, 0.0, 1.0, false);
    ComplexMatrix m = projector(pure);
    m *= Complex{1.0 - noise, 0.0};
    ComplexMatrix id = ComplexMatrix::identity(8);
    id *= Complex{noise / 8.0, 0.0};
    m += id;
    return DensityMatrix(std::move(m), Dims{2, 2, 2});
}

}  // namespace

DensityMatrix ghz_noise(double gamma) {
    const Dims dims{2, 2, 2};
    auto v = add_scaled(basis_vector(dims, {0, 0, 0}), basis_vector(dims, {1, 1, 1}), 1.0);
    for (auto& a : v)
        a /= std::sqrt(2.0);
    return noisy_three_qubit(gamma, v, "ghz");
}

DensityMatrix w_noise(double kappa) {
    const Dims dims{2, 2, 2};
    auto v = basis_vector(dims, {0, 0, 1});
    v = add_scaled(std::move(v), basis_vector(dims, {0, 1, 0}), 1.0);
    v = add_scaled(std::move(v), basis_vector(dims, {1, 0, 0}), 1.0);
    for (auto& a : v)
        a /= std::sqrt(3.0);
    return noisy_three_qubit(kappa, v, "w");
}

namespace {

std::vector<Complex> haar_pure(SeededRng& rng, std::size_t d) {
    std::vector<Complex> v(d);
    double norm2 = 0.0;
    for (auto& a : v) {
        a = rng.complex_normal();
        norm2 += std::norm(a);
    }
    const double inv = 1.0 / std::sqrt(norm2);
    for (auto& a : v)
        a *= inv;
    return v;
}

}  // namespace

DensityMatrix random_separable(const Dims& dims, std::size_t terms, std::uint64_t seed) {
    if (terms < 1)
        throw DomainError("random_separable needs at least one term");
    const std::size_t d = total_dim(dims);
    SeededRng rng(seed);

    std::vector<double> weights(terms);
    std::vector<ComplexMatrix> products;
    products.reserve(terms);
    double wsum = 0.0;
    for (std::size_t t = 0; t < terms; ++t) {
        weights[t] = rng.exponential();
        wsum += weights[t];
        ComplexMatrix prod = ComplexMatrix::identity(1);
        for (std::size_t party = 0; party < dims.size(); ++party)
            prod = kron(prod, projector(haar_pure(rng, dims[party])));
        products.push_back(std::move(prod));
    }

    ComplexMatrix m(d, d);
    for (std::size_t t = 0; t < terms; ++t) {
        products[t] *= Complex{weights[t] / wsum, 0.0};
        m += products[t];
    }
    return DensityMatrix(std::move(m), dims);
}

DensityMatrix random_density(const Dims& dims, std::uint64_t seed) {
    const std::size_t d = total_dim(dims);
    SeededRng rng(seed);
    ComplexMatrix g(d, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            g(i, j) = rng.complex_normal();
    ComplexMatrix m = g * g.adjoint();
    m *= Complex{1.0 / m.trace().real(), 0.0};
    return DensityMatrix(std::move(m), dims);
}

DensityMatrix make_state(const FamilyParam& param) {
    if (param.family == "werner")
        return werner(param.value);
    if (param.family == "sigma_b")
        return sigma_b(param.value);
    if (param.family == "rho_alpha")
        return rho_alpha(param.value);
    if (param.family == "sigma_a")
        return sigma_a(param.value);
    if (param.family == "ghz")
        return ghz_noise(param.value);
    if (param.family == "w")
        return w_noise(param.value);
    throw UnknownId("unknown state family '" + param.family + "'");
}

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = s.find(sep, start);
        if (pos == std::string::npos) {
            out.push_back(s.substr(start));
            return out;
        }
        out.push_back(s.substr(start, pos - start));
        start = pos + 1;
    }
}

double parse_real(const std::string& tok, const std::string& id) {
    try {
        std::size_t used = 0;
        const double v = std::stod(tok, &used);
        if (used != tok.size())
            throw UnknownId("state id '" + id + "': bad parameter '" + tok + "'");
        return v;
    } catch (const std::logic_error&) {
        throw UnknownId("state id '" + id + "': bad parameter '" + tok + "'");
    }
}

std::uint64_t parse_unsigned(const std::string& tok, const std::string& id) {
    try {
        std::size_t used = 0;
        const unsigned long long v = std::stoull(tok, &used);
        if (used != tok.size())
            throw UnknownId("state id '" + id + "': bad integer '" + tok + "'");
        return v;
    } catch (const std::logic_error&) {
        throw UnknownId("state id '" + id + "': bad integer '" + tok + "'");
    }
}

Dims parse_dims(const std::string& tok, const std::string& id) {
    Dims dims;
    for (const auto& part : split(tok, 'x'))
        dims.push_back(static_cast<std::size_t>(parse_unsigned(part, id)));
    if (dims.empty())
        throw UnknownId("state id '" + id + "': empty dimension list");
    return dims;
}

}  // namespace

DensityMatrix make_state(const std::string& id) {
    if (id == "upb_tiles")
        return upb_tiles();
    const auto parts = split(id, ':');
    const std::string& kind = parts[0];
    if (kind == "sep") {
        if (parts.size() != 4)
            throw UnknownId("state id '" + id + "': expected sep:<dims>:<terms>:<seed>");
        const Dims dims = parse_dims(parts[1], id);
        const std::uint64_t terms = parse_unsigned(parts[2], id);
        const std::uint64_t seed = parse_unsigned(parts[3], id);
        if (terms < 1)
            throw UnknownId("state id '" + id + "': terms must be >= 1");
        return random_separable(dims, static_cast<std::size_t>(terms), seed);
    }
    if (kind == "file") {
        if (parts.size() < 2)
            throw UnknownId("state id '" + id + "': expected file:<path>");
        const std::string path = id.substr(5);
        std::ifstream in(path);
        if (!in)
            throw UnknownId("cannot open state file '" + path + "'");
        auto [m, dims] = read_matrix(in);
        return DensityMatrix(std::move(m), std::move(dims));
    }
    if (parts.size() == 2)
        return make_state(FamilyParam(kind, parse_real(parts[1], id)));
    throw UnknownId("unknown state id '" + id + "'");
}

}  // namespace entmom

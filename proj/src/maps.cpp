#include "entmom/maps.hpp"

#include <cmath>

#include "entmom/errors.hpp"
#include "entmom/rng.hpp"

namespace entmom {

ComplexMatrix elementary(std::size_t i, std::size_t j, std::size_t d) {
    ComplexMatrix m(d, d);
    m(i, j) = 1.0;
    return m;
}

ComplexMatrix SignedKrausMap::apply(const ComplexMatrix& x) const {
    if (!x.square() || x.rows() != in_dim)
        throw DimensionMismatch("map " + name + " expects a " + std::to_string(in_dim) +
                                "-dimensional input");
    ComplexMatrix out(out_dim, out_dim);
    for (const auto& term : terms) {
        const ComplexMatrix contrib = term.op * x * term.op.adjoint();
        if (term.sign > 0)
            out += contrib;
        else
            out -= contrib;
    }
    return out;
}

SignedKrausMap transpose_map(std::size_t d) {
    if (d < 2)
        throw DomainError("transpose map needs dimension >= 2");
    SignedKrausMap map{d, d, {}, "transpose"};
    for (std::size_t i = 0; i < d; ++i)
        map.terms.push_back({elementary(i, i, d), +1});
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i + 1; j < d; ++j) {
            ComplexMatrix sym = elementary(i, j, d);
            sym += elementary(j, i, d);
            sym *= inv_sqrt2;
            map.terms.push_back({sym, +1});
            ComplexMatrix asym = elementary(i, j, d);
            asym -= elementary(j, i, d);
            asym *= inv_sqrt2;
            map.terms.push_back({asym, -1});
        }
    return map;
}

SignedKrausMap lambda1() {
    SignedKrausMap map{2, 2, {}, "lambda1"};
    map.terms.push_back({elementary(0, 0, 2), +1});
    map.terms.push_back({elementary(1, 1, 2), +1});
    map.terms.push_back({elementary(0, 1, 2), +1});
    map.terms.push_back({elementary(1, 0, 2), +1});
    map.terms.push_back({ComplexMatrix::identity(2), -1});
    return map;
}

SignedKrausMap lambda2() {
    SignedKrausMap map{2, 2, {}, "lambda2"};
    ComplexMatrix k = elementary(0, 0, 2);
    k *= 2.0;
    k += elementary(1, 1, 2);
    map.terms.push_back({std::move(k), +1});
    map.terms.push_back({elementary(0, 1, 2), +1});
    map.terms.push_back({elementary(1, 0, 2), +1});
    map.terms.push_back({ComplexMatrix::identity(2), -1});
    return map;
}

SignedKrausMap reduction_map(std::size_t d) {
    if (d < 2)
        throw DomainError("reduction map needs dimension >= 2");
    SignedKrausMap map{d, d, {}, "reduction:" + std::to_string(d)};
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            map.terms.push_back({elementary(i, j, d), +1});
    map.terms.push_back({ComplexMatrix::identity(d), -1});
    return map;
}

SignedKrausMap hou_reduction_map(std::size_t d, HouConvention convention) {
    if (d < 2)
        throw DomainError("hou reduction map needs dimension >= 2");
    const bool ordered = convention == HouConvention::Ordered;
    SignedKrausMap map{d, d, {},
                       "hou:" + std::to_string(d) + (ordered ? ":ordered" : ":unordered")};
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            if (i != j)
                map.terms.push_back({elementary(i, j, d), +1});
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = (ordered ? 0 : i + 1); j < d; ++j) {
            if (i == j)
                continue;
            ComplexMatrix g = elementary(i, i, d);
            g -= elementary(j, j, d);
            g *= inv_sqrt2;
            map.terms.push_back({std::move(g), +1});
            ComplexMatrix f = elementary(i, i, d);
            f += elementary(j, j, d);
            f *= inv_sqrt2;
            map.terms.push_back({std::move(f), -1});
        }
    return map;
}

SignedKrausMap phi1() {
    SignedKrausMap map{3, 3, {}, "phi1"};
    const double sqrt2 = std::sqrt(2.0);
    for (std::size_t i = 0; i < 3; ++i) {
        ComplexMatrix k = elementary(i, i, 3);
        k *= sqrt2;  // coefficient 2 on E_ii A E_ii^dagger
        map.terms.push_back({std::move(k), +1});
    }
    map.terms.push_back({elementary(0, 1, 3), +1});
    map.terms.push_back({elementary(1, 2, 3), +1});
    map.terms.push_back({elementary(2, 0, 3), +1});
    map.terms.push_back({ComplexMatrix::identity(3), -1});
    return map;
}

ComplexMatrix apply_partial(const SignedKrausMap& map, const ComplexMatrix& m, const Dims& dims,
                            std::size_t party) {
    if (party >= dims.size())
        throw BadParty("party index " + std::to_string(party) + " out of range");
    if (map.in_dim != map.out_dim || map.in_dim != dims[party])
        throw DimensionMismatch("map " + map.name + " does not fit party of dimension " +
                                std::to_string(dims[party]));
    std::size_t pre = 1, post = 1;
    for (std::size_t k = 0; k < party; ++k)
        pre *= dims[k];
    for (std::size_t k = party + 1; k < dims.size(); ++k)
        post *= dims[k];

    const ComplexMatrix ipre = ComplexMatrix::identity(pre);
    const ComplexMatrix ipost = ComplexMatrix::identity(post);
    ComplexMatrix out(m.rows(), m.cols());
    for (const auto& term : map.terms) {
        const ComplexMatrix lifted = kron(kron(ipre, term.op), ipost);
        const ComplexMatrix contrib = lifted * m * lifted.adjoint();
        if (term.sign > 0)
            out += contrib;
        else
            out -= contrib;
    }
    return out;
}

ComplexMatrix apply_partial(const SignedKrausMap& map, const DensityMatrix& rho,
                            std::size_t party) {
    return apply_partial(map, rho.matrix(), rho.dims(), party);
}

PositivityWitness sampled_positivity(const SignedKrausMap& map, std::size_t trials,
                                     std::uint64_t seed, double tol) {
    SeededRng rng(seed);
    double worst = 0.0;
    for (std::size_t t = 0; t < trials; ++t) {
        std::vector<Complex> v(map.in_dim);
        double norm2 = 0.0;
        for (auto& amp : v) {
            amp = rng.complex_normal();
            norm2 += std::norm(amp);
        }
        const double inv = 1.0 / std::sqrt(norm2);
        ComplexMatrix proj(map.in_dim, map.in_dim);
        for (std::size_t i = 0; i < map.in_dim; ++i)
            for (std::size_t j = 0; j < map.in_dim; ++j)
                proj(i, j) = v[i] * std::conj(v[j]) * (inv * inv);
        const Spectrum spec = hermitian_eigenvalues(map.apply(proj));
        worst = std::min(worst, spec.min());
    }
    return {worst >= -tol, worst, trials};
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

std::size_t parse_dim(const std::string& tok, const std::string& id) {
    try {
        const long v = std::stol(tok);
        if (v < 2)
            throw UnknownId("map id '" + id + "': dimension must be >= 2");
        return static_cast<std::size_t>(v);
    } catch (const std::logic_error&) {
        throw UnknownId("map id '" + id + "': bad dimension '" + tok + "'");
    }
}

}  // namespace

SignedKrausMap make_map(const std::string& id, std::size_t party_dim) {
    const auto parts = split(id, ':');
    const std::string& kind = parts[0];

    auto check_dim = [&](std::size_t need) {
        if (party_dim != need)
            throw DimensionMismatch("map '" + id + "' has dimension " + std::to_string(need) +
                                    " but the party has dimension " + std::to_string(party_dim));
    };

    if (kind == "transpose" && parts.size() == 1)
        return transpose_map(party_dim);
    if (kind == "lambda1" && parts.size() == 1) {
        check_dim(2);
        return lambda1();
    }
    if (kind == "lambda2" && parts.size() == 1) {
        check_dim(2);
        return lambda2();
    }
    if (kind == "phi1" && parts.size() == 1) {
        check_dim(3);
        return phi1();
    }
    if (kind == "reduction" && parts.size() == 2) {
        const std::size_t d = parse_dim(parts[1], id);
        check_dim(d);
        return reduction_map(d);
    }
    if (kind == "hou" && parts.size() == 3) {
        const std::size_t d = parse_dim(parts[1], id);
        check_dim(d);
        if (parts[2] == "unordered")
            return hou_reduction_map(d, HouConvention::Unordered);
        if (parts[2] == "ordered")
            return hou_reduction_map(d, HouConvention::Ordered);
        throw UnknownId("map id '" + id + "': convention must be 'unordered' or 'ordered'");
    }
    throw UnknownId("unknown map id '" + id + "'");
}

std::string map_convention(const std::string& id) {
    const auto parts = split(id, ':');
    if (parts.size() == 3 && parts[0] == "hou")
        return parts[2];
    return "-";
}

}  // namespace entmom

#include "entmom/moments.hpp"

#include <cmath>

#include "entmom/errors.hpp"

namespace entmom {

namespace {

MomentSequence from_eigenvalues(std::vector<double> ev, std::size_t n, bool normalize,
                                double trace) {
    if (normalize) {
        if (std::abs(trace) <= 1e-12)
            throw ZeroTrace("cannot normalize a matrix with trace " + std::to_string(trace));
        for (double& v : ev)
            v /= trace;
    }
    MomentSequence out;
    out.normalized = normalize;
    out.values.resize(n);
    std::vector<double> powers = ev;
    for (std::size_t k = 1; k <= n; ++k) {
        double s = 0.0;
        for (double p : powers)
            s += p;
        out.values[k - 1] = s;
        for (std::size_t i = 0; i < powers.size(); ++i)
            powers[i] *= ev[i];
    }
    return out;
}

}  // namespace

MomentSequence moment_sequence(const ComplexMatrix& m, std::size_t n, bool normalize) {
    if (n < 1)
        throw DomainError("moment count must be >= 1");
    const Spectrum spec = hermitian_eigenvalues(m);
    return from_eigenvalues(spec.eigenvalues, n, normalize, m.trace().real());
}

MomentSequence moment_sequence_by_power(const ComplexMatrix& m, std::size_t n, bool normalize) {
    if (n < 1)
        throw DomainError("moment count must be >= 1");
    if (!m.is_hermitian(1e-10))
        throw NotHermitian("moment sequence requires a Hermitian matrix");
    const double trace = m.trace().real();
    ComplexMatrix base = m;
    if (normalize) {
        if (std::abs(trace) <= 1e-12)
            throw ZeroTrace("cannot normalize a matrix with trace " + std::to_string(trace));
        base *= Complex{1.0 / trace, 0.0};
    }
    MomentSequence out;
    out.normalized = normalize;
    out.values.resize(n);
    ComplexMatrix power = base;
    for (std::size_t k = 1; k <= n; ++k) {
        out.values[k - 1] = power.trace().real();
        if (k < n)
            power = power * base;
    }
    return out;
}

const std::array<const char*, 6> MinorResiduals::kNames = {
    "q3", "q5", "q3-q2^2", "q3q5-q4^2", "q5-q3^2", "detS2"};

double MinorResiduals::min() const {
    double m = values[0];
    for (double v : values)
        m = std::min(m, v);
    return m;
}

HankelReport hankel_report(const MomentSequence& q) {
    if (q.order() < 5)
        throw TooFewMoments("Hankel report needs at least 5 moments, got " +
                            std::to_string(q.order()));
    const double q1 = q.m(1), q2 = q.m(2), q3 = q.m(3), q4 = q.m(4), q5 = q.m(5);

    HankelReport rep;
    rep.s1 = ComplexMatrix::from_rows({{q1, q2}, {q2, q3}});
    rep.s2 = ComplexMatrix::from_rows({{q1, q2, q3}, {q2, q3, q4}, {q3, q4, q5}});
    rep.min_eig_s1 = hermitian_eigenvalues(rep.s1).min();
    rep.min_eig_s2 = hermitian_eigenvalues(rep.s2).min();
    if (q.order() >= 7) {
        ComplexMatrix s3(4, 4);
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j)
                s3(i, j) = q.m(i + j + 1);
        rep.min_eig_s3 = hermitian_eigenvalues(s3).min();
        rep.s3 = std::move(s3);
    }
    if (q.normalized) {
        MinorResiduals minors;
        minors.values = {q3,
                         q5,
                         q3 - q2 * q2,
                         q3 * q5 - q4 * q4,
                         q5 - q3 * q3,
                         q3 * q5 - q4 * q4 - q2 * q2 * q5 + 2.0 * q2 * q3 * q4 - q3 * q3 * q3};
        rep.minors = minors;
    }
    return rep;
}

CriterionVerdict make_verdict(std::string criterion, double witness,
                              std::vector<std::pair<std::string, double>> parameters) {
    CriterionVerdict v;
    v.criterion = std::move(criterion);
    v.witness_value = witness;
    v.detected = witness < -kDetectionTol;
    v.boundary = !v.detected && witness < 0.0;
    v.parameters = std::move(parameters);
    return v;
}

namespace {

// floor(1/m2) with a snap to the nearest integer when 1/m2 sits within
// 1e-12 of one, so that m2 = 1/k maps to k under floating point
long floor_snapped_inverse(double m2) {
    const double inv = 1.0 / m2;
    const double nearest = std::round(inv);
    if (std::abs(inv - nearest) < 1e-12)
        return static_cast<long>(nearest);
    return static_cast<long>(std::floor(inv));
}

CriterionVerdict optimal_bound(const std::string& criterion, const char* count_name,
                               const char* point_name, double m2, double m3) {
    if (!(m2 > 1e-12))
        throw DomainError(criterion + ": second moment " + std::to_string(m2) +
                          " must be positive");
    if (m2 > 1.0 + 1e-12)
        throw DomainError(criterion + ": second moment " + std::to_string(m2) + " exceeds 1");
    m2 = std::min(m2, 1.0);

    const long a = floor_snapped_inverse(m2);
    const double af = static_cast<double>(a);
    double radicand = af * ((af + 1.0) * m2 - 1.0);
    if (radicand < -1e-12)
        throw DomainError(criterion + ": negative square-root argument " +
                          std::to_string(radicand));
    radicand = std::max(radicand, 0.0);
    const double x = (af + std::sqrt(radicand)) / (af * (af + 1.0));
    const double bound = af * x * x * x + std::pow(1.0 - af * x, 3);
    return make_verdict(criterion, m3 - bound, {{count_name, af}, {point_name, x}});
}

}  // namespace

CriterionVerdict p3_oppt(double p2, double p3) {
    return optimal_bound("p3-oppt", "alpha", "y", p2, p3);
}

CriterionVerdict q3_lambda(const MomentSequence& q) {
    if (!q.normalized)
        throw NotNormalized("q3-lambda criterion requires normalized moments");
    if (q.order() < 3)
        throw TooFewMoments("q3-lambda criterion needs 3 moments");
    return make_verdict("q3-lambda", q.m(3) - q.m(2) * q.m(2));
}

CriterionVerdict q3_optimal(const MomentSequence& q) {
    if (!q.normalized)
        throw NotNormalized("q3-olambda criterion requires normalized moments");
    if (q.order() < 3)
        throw TooFewMoments("q3-olambda criterion needs 3 moments");
    return optimal_bound("q3-olambda", "beta", "x", q.m(2), q.m(3));
}

MomentSequence tripartite_moments(const DensityMatrix& rho, const SignedKrausMap& map,
                                  std::size_t n, bool normalize) {
    if (rho.parties() != 3)
        throw DimensionMismatch("tripartite moments need exactly 3 subsystems");
    for (std::size_t d : rho.dims())
        if (d != map.in_dim || map.in_dim != map.out_dim)
            throw DimensionMismatch("map " + map.name + " does not fit every party");

    std::array<MomentSequence, 3> per_party;
    for (std::size_t party = 0; party < 3; ++party)
        per_party[party] = moment_sequence(apply_partial(map, rho, party), n, normalize);

    MomentSequence out;
    out.normalized = normalize;
    out.values.resize(n);
    for (std::size_t k = 0; k < n; ++k) {
        const double a = per_party[0].values[k];
        const double b = per_party[1].values[k];
        const double c = per_party[2].values[k];
        const double lo = std::min({a, b, c});
        const double hi = std::max({a, b, c});
        if (lo <= 0.0 && hi > 0.0)
            throw NegativeGeometricMeanInput(
                "per-party moments of order " + std::to_string(k + 1) +
                " have mixed signs: " + std::to_string(a) + ", " + std::to_string(b) + ", " +
                std::to_string(c));
        out.values[k] = std::cbrt(a * b * c);
    }
    return out;
}

}  // namespace entmom

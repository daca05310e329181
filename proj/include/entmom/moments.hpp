// Moment sequences of mapped matrices, their Hankel matrices, the principal
// minor inequalities, and the moment-based detection criteria. A criterion
// "detects" only when its witness drops below -1e-10; witnesses in
// [-1e-10, 0) are flagged as boundary cases so that thresholds sitting
// exactly on zero are not misclassified.

#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "entmom/density.hpp"
#include "entmom/maps.hpp"
#include "entmom/matrix.hpp"

namespace entmom {

inline constexpr double kDetectionTol = 1e-10;

struct MomentSequence {
    std::vector<double> values;  // m_1..m_n
    bool normalized = false;

    std::size_t order() const { return values.size(); }
    // 1-based accessor: m(k) = values[k-1]
    double m(std::size_t k) const { return values.at(k - 1); }
};

// values[k-1] = Tr(m_hat^k) with m_hat = m / Tr(m) when normalizing.
// Computed from the spectrum (sum of lambda^k); ZeroTrace when normalizing a
// matrix with |trace| <= 1e-12.
MomentSequence moment_sequence(const ComplexMatrix& m, std::size_t n, bool normalize);

// Same contract via repeated matrix multiplication; kept as the independent
// second route for cross-checks.
MomentSequence moment_sequence_by_power(const ComplexMatrix& m, std::size_t n, bool normalize);

// Residuals of the six principal-minor inequalities of the 3x3 moment
// Hankel matrix with m_1 = 1; negative means violated.
struct MinorResiduals {
    std::array<double, 6> values;
    static const std::array<const char*, 6> kNames;
    double min() const;
};

struct HankelReport {
    ComplexMatrix s1;  // [[q1,q2],[q2,q3]]
    ComplexMatrix s2;  // [[q1,q2,q3],[q2,q3,q4],[q3,q4,q5]]
    double min_eig_s1 = 0.0;
    double min_eig_s2 = 0.0;
    // next Hankel order, available when the sequence carries >= 7 moments
    std::optional<ComplexMatrix> s3;
    std::optional<double> min_eig_s3;
    // present only for normalized sequences, where the minor list reduces to
    // these closed forms
    std::optional<MinorResiduals> minors;

    double min_eig() const {
        const double base = std::min(min_eig_s1, min_eig_s2);
        return min_eig_s3 ? std::min(base, *min_eig_s3) : base;
    }
};

// Requires at least 5 moments (TooFewMoments otherwise); S3 is filled in
// when 7 or more are supplied.
HankelReport hankel_report(const MomentSequence& q);

struct CriterionVerdict {
    std::string criterion;
    double witness_value = 0.0;        // negative signals entanglement
    bool detected = false;             // witness < -1e-10
    bool boundary = false;             // witness in [-1e-10, 0)
    std::vector<std::pair<std::string, double>> parameters;
};

CriterionVerdict make_verdict(std::string criterion, double witness,
                              std::vector<std::pair<std::string, double>> parameters = {});

// Optimal moment criterion on the second and third moments of a
// trace-normalized partially transposed matrix. DomainError if p2 is outside
// (0, 1] beyond tolerance or the square-root argument is negative beyond
// -1e-12 (values within tolerance are clamped).
CriterionVerdict p3_oppt(double p2, double p3);

// witness q3 - q2^2; requires a normalized sequence
CriterionVerdict q3_lambda(const MomentSequence& q);

// the p3_oppt bound applied to general positive-map moments (beta, x in
// place of alpha, y); requires a normalized sequence
CriterionVerdict q3_optimal(const MomentSequence& q);

// Per-party moments r_n^X of a tripartite state under the map applied to
// each party in turn, combined by geometric mean per order. Mixed-sign
// per-party moments have no defined geometric mean and raise
// NegativeGeometricMeanInput.
MomentSequence tripartite_moments(const DensityMatrix& rho, const SignedKrausMap& map,
                                  std::size_t n, bool normalize);

}  // namespace entmom

// Positive-but-not-completely-positive maps in a uniform signed-Kraus
// representation: Lambda(X) = sum_i s_i K_i X K_i^dagger with s_i = +/-1.
// Maps are stored term by term, not as superoperator matrices, because the
// sign bookkeeping of the defining term lists is exactly where mistakes
// happen; tests verify every map against its closed-form action.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "entmom/density.hpp"
#include "entmom/matrix.hpp"

namespace entmom {

// Summation ranges for the G/F terms of the elementary-operator reduction
// map construction. Unordered (pairs i<j) reproduces Tr(X)I - X; Ordered
// (all pairs i != j) yields Tr(X)I + diag(X) - 2X, which is not a positive
// map. Both are first-class so criteria can be evaluated under either.
enum class HouConvention { Unordered, Ordered };

struct KrausTerm {
    ComplexMatrix op;  // out_dim x in_dim
    int sign;          // +1 or -1
};

struct SignedKrausMap {
    std::size_t in_dim = 0;
    std::size_t out_dim = 0;
    std::vector<KrausTerm> terms;
    std::string name;

    // Lambda(X) = sum_i s_i K_i X K_i^dagger
    ComplexMatrix apply(const ComplexMatrix& x) const;
};

// elementary operator |i><j| on dimension d
ComplexMatrix elementary(std::size_t i, std::size_t j, std::size_t d);

// X -> X^T, via symmetric/antisymmetric Kraus operators
SignedKrausMap transpose_map(std::size_t d);

// qubit map: [[a11,a12],[a21,a22]] -> [[a22,-a12],[-a21,a11]]
SignedKrausMap lambda1();

// qubit map: [[a11,a12],[a21,a22]] -> [[3a11+a22,a12],[a21,a11]]; trace
// becomes 4a11+a22, i.e. not trace-preserving
SignedKrausMap lambda2();

// X -> Tr(X) I - X
SignedKrausMap reduction_map(std::size_t d);

// elementary-operator construction of the reduction map; see HouConvention
SignedKrausMap hou_reduction_map(std::size_t d, HouConvention convention);

// qutrit map: diagonal (a11,a22,a33) -> (a11+a22, a22+a33, a33+a11),
// off-diagonal entries negated
SignedKrausMap phi1();

// identity on all other factors, map on the selected one; requires
// map.in_dim == map.out_dim == dims[party]
ComplexMatrix apply_partial(const SignedKrausMap& map, const DensityMatrix& rho,
                            std::size_t party);
ComplexMatrix apply_partial(const SignedKrausMap& map, const ComplexMatrix& m,
                            const Dims& dims, std::size_t party);

// Sampled positivity witness: worst minimum eigenvalue of Lambda(|psi><psi|)
// over seeded Haar-random pure states. A failing map is flagged, never
// rejected.
struct PositivityWitness {
    bool positive;
    double worst_eigenvalue;
    std::size_t trials;
};
PositivityWitness sampled_positivity(const SignedKrausMap& map, std::size_t trials,
                                     std::uint64_t seed, double tol = 1e-9);

// String ids: transpose | lambda1 | lambda2 | phi1 | reduction:<d> |
// hou:<d>:<unordered|ordered>. For "transpose" the dimension is taken from
// party_dim; explicit dimensions must match it.
SignedKrausMap make_map(const std::string& id, std::size_t party_dim);

// convention tag for tabular output: "unordered", "ordered" or "-"
std::string map_convention(const std::string& id);

}  // namespace entmom

// Independent ground-truth computations: partial-transpose spectra, mapped
// spectra, realignment, and the separable-state sweep. Every moment-based
// verdict elsewhere is validated against these. The central self-check is
// the consistency theorem: a mapped matrix with nonnegative spectrum has
// positive-semidefinite moment Hankel matrices, so a negative Hankel paired
// with a PSD mapped spectrum is an internal error, never a detection.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "entmom/density.hpp"
#include "entmom/maps.hpp"
#include "entmom/moments.hpp"

namespace entmom {

struct PptReport {
    std::vector<double> min_eig_per_party;
    bool npt = false;  // some party's partial transpose has eigenvalue < -tol

    double min_eig() const;
};

PptReport ppt_check(const DensityMatrix& rho, double tol = 1e-10);

// full spectrum of the partially applied map: the ground truth any
// Hankel-negativity verdict must be consistent with
Spectrum mapped_spectrum(const DensityMatrix& rho, const SignedKrausMap& map, std::size_t party);

// R(rho)_{(i,k),(j,l)} = rho_{(i,j),(k,l)}; shape dA^2 x dB^2. Bipartite
// states only (NotBipartite otherwise).
ComplexMatrix realignment(const DensityMatrix& rho);

// Tr(R^n); complex in general since R is not Hermitian. Defined only for
// square R, i.e. equal local dimensions.
std::vector<Complex> realignment_moments(const DensityMatrix& rho, std::size_t n);

// sum of singular values of R; > 1 certifies entanglement (informational)
double realignment_trace_norm(const DensityMatrix& rho);

// Everything the ground-truth side knows about one (state, map, party)
// combination. realignment moments stay empty unless the state is bipartite
// with equal local dimensions; the trace norm is NaN unless bipartite.
struct OracleReport {
    PptReport ppt;
    Spectrum mapped;
    std::vector<Complex> realignment_moments;
    double realignment_trace_norm;
    std::vector<std::string> notes;  // discrepancy flags (map positivity, realignment)
};

OracleReport oracle_report(const DensityMatrix& rho, const SignedKrausMap& map,
                           std::size_t party, std::size_t n = 5);

// Records every (mapped spectrum, Hankel report) pair seen; a PSD spectrum
// with a negative Hankel (below -1e-8) is logged as a violation.
struct ConsistencyLog {
    std::size_t checks = 0;
    std::vector<std::string> violations;

    void record(double min_mapped_eig, const HankelReport& hankel, const std::string& context,
                double spectrum_tol = 1e-10, double hankel_tol = 1e-8);
};

// true when the pair passes the consistency theorem
bool hankel_consistent(double min_mapped_eig, const HankelReport& hankel,
                       double spectrum_tol = 1e-10, double hankel_tol = 1e-8);

// Random separable states pushed through every listed map at every
// compatible party; returns the most negative witness observed across
// Hankel minimum eigenvalues, minor residuals and both q3 criteria.
// Separability guarantees worst >= 0 up to roundoff for positive maps.
struct SweepReport {
    std::size_t trials = 0;
    std::size_t evaluations = 0;
    double worst_witness = 0.0;
    std::string worst_context;
};

SweepReport separable_sweep(std::size_t trials, const Dims& dims,
                            const std::vector<std::string>& map_ids, std::uint64_t seed,
                            std::size_t moments_n = 5, ConsistencyLog* log = nullptr);

}  // namespace entmom

#include "entmom/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "entmom/errors.hpp"
#include "entmom/states.hpp"

namespace entmom {

double PptReport::min_eig() const {
    double m = min_eig_per_party.front();
    for (double v : min_eig_per_party)
        m = std::min(m, v);
    return m;
}

PptReport ppt_check(const DensityMatrix& rho, double tol) {
    PptReport rep;
    for (std::size_t party = 0; party < rho.parties(); ++party) {
        const Spectrum spec = hermitian_eigenvalues(partial_transpose(rho, party));
        rep.min_eig_per_party.push_back(spec.min());
    }
    rep.npt = rep.min_eig() < -tol;
    return rep;
}

Spectrum mapped_spectrum(const DensityMatrix& rho, const SignedKrausMap& map,
                         std::size_t party) {
    return hermitian_eigenvalues(apply_partial(map, rho, party));
}

ComplexMatrix realignment(const DensityMatrix& rho) {
    if (rho.parties() != 2)
        throw NotBipartite("realignment is defined for bipartite states");
    const std::size_t da = rho.dims()[0];
    const std::size_t db = rho.dims()[1];
    const ComplexMatrix& m = rho.matrix();
    ComplexMatrix r(da * da, db * db);
    for (std::size_t i = 0; i < da; ++i)
        for (std::size_t k = 0; k < da; ++k)
            for (std::size_t j = 0; j < db; ++j)
                for (std::size_t l = 0; l < db; ++l)
                    r(i * da + k, j * db + l) = m(i * db + j, k * db + l);
    return r;
}

std::vector<Complex> realignment_moments(const DensityMatrix& rho, std::size_t n) {
    const ComplexMatrix r = realignment(rho);
    if (r.rows() != r.cols())
        throw DimensionMismatch(
            "realignment moments need equal local dimensions; realigned shape is " +
            std::to_string(r.rows()) + "x" + std::to_string(r.cols()));
    std::vector<Complex> out(n);
    ComplexMatrix power = r;
    for (std::size_t k = 1; k <= n; ++k) {
        out[k - 1] = power.trace();
        if (k < n)
            power = power * r;
    }
    return out;
}

double realignment_trace_norm(const DensityMatrix& rho) {
    const ComplexMatrix r = realignment(rho);
    const Spectrum gram = hermitian_eigenvalues(r.adjoint() * r);
    double sum = 0.0;
    for (double v : gram.eigenvalues)
        sum += std::sqrt(std::max(v, 0.0));
    return sum;
}

OracleReport oracle_report(const DensityMatrix& rho, const SignedKrausMap& map,
                           std::size_t party, std::size_t n) {
    OracleReport rep;
    rep.ppt = ppt_check(rho);
    rep.mapped = mapped_spectrum(rho, map, party);
    rep.realignment_trace_norm = std::numeric_limits<double>::quiet_NaN();
    if (rho.parties() == 2) {
        rep.realignment_trace_norm = realignment_trace_norm(rho);
        if (rho.dims()[0] == rho.dims()[1])
            rep.realignment_moments = realignment_moments(rho, n);
        if (rep.realignment_trace_norm > 1.0 + 1e-10)
            rep.notes.push_back("realignment trace norm exceeds 1 (entangled)");
    }
    const PositivityWitness positivity = sampled_positivity(map, 1000, 424242);
    if (!positivity.positive)
        rep.notes.push_back("map " + map.name + " failed the sampled positivity check (worst " +
                            std::to_string(positivity.worst_eigenvalue) +
                            "); its verdicts are not entanglement witnesses");
    return rep;
}

bool hankel_consistent(double min_mapped_eig, const HankelReport& hankel, double spectrum_tol,
                       double hankel_tol) {
    if (min_mapped_eig < -spectrum_tol)
        return true;  // nothing to assert: the mapped matrix is not PSD
    if (hankel.min_eig_s1 < -hankel_tol || hankel.min_eig_s2 < -hankel_tol)
        return false;
    if (hankel.minors && hankel.minors->min() < -hankel_tol)
        return false;
    return true;
}

void ConsistencyLog::record(double min_mapped_eig, const HankelReport& hankel,
                            const std::string& context, double spectrum_tol,
                            double hankel_tol) {
    ++checks;
    if (!hankel_consistent(min_mapped_eig, hankel, spectrum_tol, hankel_tol))
        violations.push_back(context + ": mapped spectrum min " +
                             std::to_string(min_mapped_eig) + " but Hankel min " +
                             std::to_string(hankel.min_eig()));
}

namespace {

void track_worst(SweepReport& rep, double value, const std::string& context) {
    if (value < rep.worst_witness) {
        rep.worst_witness = value;
        rep.worst_context = context;
    }
}

}  // namespace

SweepReport separable_sweep(std::size_t trials, const Dims& dims,
                            const std::vector<std::string>& map_ids, std::uint64_t seed,
                            std::size_t moments_n, ConsistencyLog* log) {
    SweepReport rep;
    rep.trials = trials;
    for (std::size_t t = 0; t < trials; ++t) {
        const std::size_t terms = 1 + (t % 8);
        const DensityMatrix rho = random_separable(dims, terms, seed + t);
        for (const auto& id : map_ids) {
            for (std::size_t party = 0; party < dims.size(); ++party) {
                SignedKrausMap map;
                try {
                    map = make_map(id, dims[party]);
                } catch (const DimensionMismatch&) {
                    continue;  // map does not fit this party
                }
                const std::string context =
                    id + "@" + std::to_string(party) + " trial " + std::to_string(t);
                const ComplexMatrix mapped = apply_partial(map, rho, party);
                const Spectrum spec = hermitian_eigenvalues(mapped);
                const MomentSequence q = moment_sequence(mapped, moments_n, true);
                const HankelReport hankel = hankel_report(q);
                if (log)
                    log->record(spec.min(), hankel, context);
                ++rep.evaluations;

                track_worst(rep, hankel.min_eig_s1, context + " S1");
                track_worst(rep, hankel.min_eig_s2, context + " S2");
                for (std::size_t i = 0; i < hankel.minors->values.size(); ++i)
                    track_worst(rep, hankel.minors->values[i],
                                context + " " + MinorResiduals::kNames[i]);
                track_worst(rep, q3_lambda(q).witness_value, context + " q3-lambda");
                track_worst(rep, q3_optimal(q).witness_value, context + " q3-olambda");
            }
        }
    }
    return rep;
}

}  // namespace entmom

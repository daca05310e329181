#include "entmom/detect.hpp"

#include "entmom/errors.hpp"

namespace entmom {

DetectionResult evaluate_detection(const DensityMatrix& rho, const SignedKrausMap& map,
                                   std::size_t party, std::size_t n, bool normalize,
                                   ConsistencyLog* log) {
    DetectionResult r;
    r.map_id = map.name;
    r.party = party;

    const ComplexMatrix mapped = apply_partial(map, rho, party);
    r.mapped_trace = mapped.trace().real();
    r.mapped = hermitian_eigenvalues(mapped);
    r.q = moment_sequence(mapped, n, normalize);
    r.hankel = hankel_report(r.q);
    r.hankel_verdict = make_verdict("hankel", r.hankel.min_eig());
    if (normalize) {
        r.q3_lambda_verdict = q3_lambda(r.q);
        try {
            r.q3_optimal_verdict = q3_optimal(r.q);
        } catch (const DomainError& e) {
            r.q3_optimal_error = e.what();
        }
    }
    const std::string context = map.name + "@" + std::to_string(party);
    r.consistent = hankel_consistent(r.mapped.min(), r.hankel);
    if (log)
        log->record(r.mapped.min(), r.hankel, context);
    return r;
}

PtResult evaluate_pt(const DensityMatrix& rho, std::size_t party, std::size_t n,
                     ConsistencyLog* log) {
    PtResult r;
    r.party = party;
    const ComplexMatrix pt = partial_transpose(rho, party);
    const Spectrum spec = hermitian_eigenvalues(pt);
    r.min_pt_eig = spec.min();
    r.p = moment_sequence(pt, n, true);
    r.hankel = hankel_report(r.p);
    r.p3_verdict = make_verdict("p3", r.hankel.min_eig());
    r.p3_oppt_verdict = p3_oppt(r.p.m(2), r.p.m(3));
    if (log)
        log->record(r.min_pt_eig, r.hankel, "transpose@" + std::to_string(party));
    return r;
}

}  // namespace entmom

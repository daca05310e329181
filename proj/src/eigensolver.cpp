#include "entmom/eigensolver.hpp"

#include <algorithm>
#include <cmath>

#include "entmom/errors.hpp"

namespace entmom {

double Spectrum::sum() const {
    double s = 0.0;
    for (double v : eigenvalues)
        s += v;
    return s;
}

namespace {

double off_diagonal_norm(const ComplexMatrix& a) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = i + 1; j < a.cols(); ++j)
            s += 2.0 * std::norm(a(i, j));
    return std::sqrt(s);
}

// One complex Jacobi rotation annihilating a(p,q). The pair (p,q) is first
// phase-rotated so the pivot becomes real, then a standard real rotation is
// applied; both are folded into a single unitary J = diag(e^{i phi},1)*G.
void rotate(ComplexMatrix& a, std::size_t p, std::size_t q) {
    const double r = std::abs(a(p, q));
    if (r == 0.0)
        return;
    const Complex phase = a(p, q) / r;  // e^{i phi}
    const double app = a(p, p).real();
    const double aqq = a(q, q).real();
    const double tau = (aqq - app) / (2.0 * r);
    const double t = (tau >= 0.0) ? 1.0 / (tau + std::sqrt(1.0 + tau * tau))
                                  : 1.0 / (tau - std::sqrt(1.0 + tau * tau));
    const double c = 1.0 / std::sqrt(1.0 + t * t);
    const double s = t * c;

    const std::size_t n = a.rows();
    // columns: A <- A J with J(p,p)=c e^{i phi}, J(q,p)=-s, J(p,q)=s e^{i phi}, J(q,q)=c
    for (std::size_t i = 0; i < n; ++i) {
        const Complex aip = a(i, p);
        const Complex aiq = a(i, q);
        a(i, p) = aip * (c * phase) - aiq * s;
        a(i, q) = aip * (s * phase) + aiq * c;
    }
    // rows: A <- J^dagger A
    for (std::size_t j = 0; j < n; ++j) {
        const Complex apj = a(p, j);
        const Complex aqj = a(q, j);
        a(p, j) = apj * (c * std::conj(phase)) - aqj * s;
        a(q, j) = apj * (s * std::conj(phase)) + aqj * c;
    }
    // restore exact symmetry against roundoff
    a(p, q) = 0.0;
    a(q, p) = 0.0;
    a(p, p) = Complex{a(p, p).real(), 0.0};
    a(q, q) = Complex{a(q, q).real(), 0.0};
}

}  // namespace

Spectrum hermitian_eigenvalues(const ComplexMatrix& m, double herm_tol, double off_tol,
                               int max_sweeps) {
    if (!m.square())
        throw NotHermitian("eigensolver requires a square matrix");
    const double defect = m.hermiticity_defect();
    if (defect > herm_tol)
        throw NotHermitian("Hermiticity defect " + std::to_string(defect) +
                           " exceeds tolerance");

    const std::size_t n = m.rows();
    const double input_trace = m.trace().real();

    // start from the symmetrized copy (m + m^dagger)/2
    ComplexMatrix a(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        a(i, i) = Complex{m(i, i).real(), 0.0};
        for (std::size_t j = i + 1; j < n; ++j) {
            const Complex v = 0.5 * (m(i, j) + std::conj(m(j, i)));
            a(i, j) = v;
            a(j, i) = std::conj(v);
        }
    }

    int sweeps = 0;
    while (off_diagonal_norm(a) > off_tol) {
        if (++sweeps > max_sweeps)
            throw NoConvergence("Jacobi iteration exceeded " + std::to_string(max_sweeps) +
                                " sweeps");
        for (std::size_t p = 0; p + 1 < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q)
                rotate(a, p, q);
    }

    Spectrum out;
    out.eigenvalues.resize(n);
    for (std::size_t i = 0; i < n; ++i)
        out.eigenvalues[i] = a(i, i).real();
    std::sort(out.eigenvalues.begin(), out.eigenvalues.end());

    if (std::abs(out.sum() - input_trace) > 1e-9)
        throw NoConvergence("eigenvalue sum drifted from trace");
    return out;
}

}  // namespace entmom

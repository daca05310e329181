// Hermitian eigenvalues by cyclic Jacobi rotations. Dimensions in this
// project stay below ~16, where Jacobi is simple, accurate and bit-stable
// across platforms.

#pragma once

#include <vector>

#include "entmom/matrix.hpp"

namespace entmom {

struct Spectrum {
    std::vector<double> eigenvalues;  // ascending, with multiplicity

    double min() const { return eigenvalues.front(); }
    double max() const { return eigenvalues.back(); }
    double sum() const;
};

// Requires m square and Hermitian to herm_tol (NotHermitian otherwise).
// Iterates sweeps until the off-diagonal Frobenius norm drops below off_tol;
// NoConvergence after max_sweeps. The eigenvalue sum is verified against the
// trace to 1e-9.
Spectrum hermitian_eigenvalues(const ComplexMatrix& m,
                               double herm_tol = 1e-10,
                               double off_tol = 1e-13,
                               int max_sweeps = 100);

}  // namespace entmom

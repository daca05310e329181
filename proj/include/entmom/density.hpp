// Density matrices carrying a subsystem-dimension signature, plus the
// index-shuffling operations (partial transpose, partial trace) defined
// relative to that signature. Subsystems are zero-indexed left to right.

#pragma once

#include <cstddef>
#include <vector>

#include "entmom/eigensolver.hpp"
#include "entmom/matrix.hpp"

namespace entmom {

using Dims = std::vector<std::size_t>;

std::size_t total_dim(const Dims& dims);

class DensityMatrix {
public:
    // Validates: square with dim = prod(dims), Hermitian to herm_tol,
    // unit trace to trace_tol, min eigenvalue >= -psd_tol.
    DensityMatrix(ComplexMatrix m, Dims dims, double herm_tol = 1e-12,
                  double trace_tol = 1e-12, double psd_tol = 1e-10);

    const ComplexMatrix& matrix() const { return mat_; }
    const Dims& dims() const { return dims_; }
    std::size_t dim() const { return mat_.rows(); }
    std::size_t parties() const { return dims_.size(); }

private:
    ComplexMatrix mat_;
    Dims dims_;
};

// Transposition of the indexed tensor factor only (a pure entry permutation,
// hence an exact involution).
ComplexMatrix partial_transpose(const DensityMatrix& rho, std::size_t party);
ComplexMatrix partial_transpose(const ComplexMatrix& m, const Dims& dims, std::size_t party);

// Reduced matrix on the kept factor; all other subsystems traced out.
ComplexMatrix partial_trace(const DensityMatrix& rho, std::size_t keep);
ComplexMatrix partial_trace(const ComplexMatrix& m, const Dims& dims, std::size_t keep);

}  // namespace entmom

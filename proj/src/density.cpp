#include "entmom/density.hpp"

#include <cmath>
#include <string>

#include "entmom/errors.hpp"

namespace entmom {

std::size_t total_dim(const Dims& dims) {
    std::size_t d = 1;
    for (std::size_t k : dims)
        d *= k;
    return d;
}

DensityMatrix::DensityMatrix(ComplexMatrix m, Dims dims, double herm_tol, double trace_tol,
                             double psd_tol)
    : mat_(std::move(m)), dims_(std::move(dims)) {
    if (dims_.empty())
        throw InvalidDensityMatrix("empty dimension signature");
    for (std::size_t d : dims_)
        if (d < 1)
            throw InvalidDensityMatrix("subsystem dimension must be >= 1");
    if (!mat_.square() || mat_.rows() != total_dim(dims_))
        throw InvalidDensityMatrix("matrix dimension does not match subsystem dimensions");
    const double defect = mat_.hermiticity_defect();
    if (defect > herm_tol)
        throw InvalidDensityMatrix("not Hermitian: defect " + std::to_string(defect));
    const Complex tr = mat_.trace();
    if (std::abs(tr - Complex{1.0, 0.0}) > trace_tol)
        throw InvalidDensityMatrix("trace differs from 1 by " +
                                   std::to_string(std::abs(tr - Complex{1.0, 0.0})));
    const Spectrum spec = hermitian_eigenvalues(mat_, herm_tol * 10.0);
    if (spec.min() < -psd_tol)
        throw InvalidDensityMatrix("negative eigenvalue " + std::to_string(spec.min()));
}

namespace {

// digits of a composite index, most significant subsystem first
void decompose(std::size_t idx, const Dims& dims, std::vector<std::size_t>& digits) {
    for (std::size_t k = dims.size(); k-- > 0;) {
        digits[k] = idx % dims[k];
        idx /= dims[k];
    }
}

std::size_t compose(const std::vector<std::size_t>& digits, const Dims& dims) {
    std::size_t idx = 0;
    for (std::size_t k = 0; k < dims.size(); ++k)
        idx = idx * dims[k] + digits[k];
    return idx;
}

}  // namespace

ComplexMatrix partial_transpose(const ComplexMatrix& m, const Dims& dims, std::size_t party) {
    if (party >= dims.size())
        throw BadParty("party index " + std::to_string(party) + " out of range");
    const std::size_t d = total_dim(dims);
    if (!m.square() || m.rows() != d)
        throw DimensionMismatch("matrix does not match dimension signature");

    ComplexMatrix out(d, d);
    std::vector<std::size_t> ri(dims.size()), ci(dims.size());
    for (std::size_t r = 0; r < d; ++r) {
        decompose(r, dims, ri);
        for (std::size_t c = 0; c < d; ++c) {
            decompose(c, dims, ci);
            std::swap(ri[party], ci[party]);
            out(compose(ri, dims), compose(ci, dims)) = m(r, c);
            std::swap(ri[party], ci[party]);
        }
    }
    return out;
}

ComplexMatrix partial_transpose(const DensityMatrix& rho, std::size_t party) {
    return partial_transpose(rho.matrix(), rho.dims(), party);
}

ComplexMatrix partial_trace(const ComplexMatrix& m, const Dims& dims, std::size_t keep) {
    if (keep >= dims.size())
        throw BadParty("party index " + std::to_string(keep) + " out of range");
    const std::size_t d = total_dim(dims);
    if (!m.square() || m.rows() != d)
        throw DimensionMismatch("matrix does not match dimension signature");

    const std::size_t dk = dims[keep];
    ComplexMatrix out(dk, dk);
    std::vector<std::size_t> ri(dims.size()), ci(dims.size());
    for (std::size_t r = 0; r < d; ++r) {
        decompose(r, dims, ri);
        ci = ri;
        for (std::size_t b = 0; b < dk; ++b) {
            ci[keep] = b;
            out(ri[keep], b) += m(r, compose(ci, dims));
        }
    }
    return out;
}

ComplexMatrix partial_trace(const DensityMatrix& rho, std::size_t keep) {
    return partial_trace(rho.matrix(), rho.dims(), keep);
}

}  // namespace entmom

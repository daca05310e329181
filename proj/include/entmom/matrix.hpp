// Dense complex matrices in row-major order, sized for density matrices up
// to dimension ~16. Equality is always tolerance-based and the tolerance is
// an explicit argument.

#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <vector>

namespace entmom {

using Complex = std::complex<double>;

class ComplexMatrix {
public:
    ComplexMatrix() = default;
    ComplexMatrix(std::size_t rows, std::size_t cols);

    static ComplexMatrix identity(std::size_t d);
    static ComplexMatrix from_rows(std::initializer_list<std::initializer_list<Complex>> rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_ && rows_ > 0; }

    Complex& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Complex& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    ComplexMatrix transpose() const;
    ComplexMatrix adjoint() const;
    Complex trace() const;
    double frobenius_norm() const;

    // max entrywise |a_ij - b_ij|; infinity if shapes differ
    double max_abs_diff(const ComplexMatrix& other) const;
    bool approx_equal(const ComplexMatrix& other, double tol) const;

    // max entrywise |M - M^dagger|
    double hermiticity_defect() const;
    bool is_hermitian(double tol) const { return square() && hermiticity_defect() <= tol; }

    ComplexMatrix& operator+=(const ComplexMatrix& other);
    ComplexMatrix& operator-=(const ComplexMatrix& other);
    ComplexMatrix& operator*=(Complex scalar);

    friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
    friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
    friend ComplexMatrix operator*(Complex s, ComplexMatrix m) { return m *= s; }
    friend ComplexMatrix operator*(ComplexMatrix m, Complex s) { return m *= s; }
    friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Complex> data_;
};

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

// Tr(m^k) by repeated multiplication. For inputs Hermitian to 1e-10 the
// imaginary part must stay below 1e-10 (NonRealTrace otherwise); it is
// discarded from the return value.
double trace_power(const ComplexMatrix& m, int k);

// Same computation without the reality requirement (realigned matrices are
// generally non-Hermitian).
Complex trace_power_complex(const ComplexMatrix& m, int k);

}  // namespace entmom

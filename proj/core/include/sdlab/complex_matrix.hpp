#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace sdlab {

using Complex = std::complex<double>;

/// Dense complex matrix, row-major storage. The universal carrier type:
/// every structured family in the library is eventually materialized as one
/// of these before any spectral computation.
class ComplexMatrix {
public:
    ComplexMatrix() = default;

    /// Zero-filled rows x cols matrix.
    ComplexMatrix(std::size_t rows, std::size_t cols);

    /// Takes ownership of row-major entries; entries.size() must equal rows*cols.
    ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);

    /// Row-by-row brace construction, mostly for tests and small fixtures.
    ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

    static ComplexMatrix zero(std::size_t rows, std::size_t cols) { return {rows, cols}; }
    static ComplexMatrix identity(std::size_t n);
    static ComplexMatrix diagonal(std::span<const Complex> entries);
    static ComplexMatrix diagonal(std::initializer_list<Complex> entries);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    Complex& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Complex& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::span<const Complex> data() const { return data_; }
    std::span<Complex> data() { return data_; }

    ComplexMatrix adjoint() const;    // conjugate transpose
    ComplexMatrix transpose() const;
    ComplexMatrix conjugate() const;

    /// Copy of the r x c submatrix with top-left corner (i0, j0).
    ComplexMatrix block(std::size_t i0, std::size_t j0, std::size_t r, std::size_t c) const;
    /// Writes `b` into this matrix with top-left corner (i0, j0).
    void set_block(std::size_t i0, std::size_t j0, const ComplexMatrix& b);

    Complex trace() const;
    double frobenius_norm() const;
    double max_abs() const;
    bool all_finite() const;
    bool is_hermitian(double tol) const;   // ||X - X*||_F <= tol * (1 + ||X||_F)

    ComplexMatrix& operator+=(const ComplexMatrix& rhs);
    ComplexMatrix& operator-=(const ComplexMatrix& rhs);
    ComplexMatrix& operator*=(Complex scalar);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Complex> data_;
};

ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs);
ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs);
ComplexMatrix operator-(const ComplexMatrix& m);
ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs);
ComplexMatrix operator*(Complex scalar, ComplexMatrix m);
ComplexMatrix operator*(ComplexMatrix m, Complex scalar);
ComplexMatrix operator*(double scalar, ComplexMatrix m);

/// Entrywise comparison: max |a_ij - b_ij| <= tol.
bool approx_equal(const ComplexMatrix& a, const ComplexMatrix& b, double tol);

/// k-th matrix power by repeated multiplication; power(X, 0) = I.
ComplexMatrix power(const ComplexMatrix& x, std::size_t k);

} // namespace sdlab

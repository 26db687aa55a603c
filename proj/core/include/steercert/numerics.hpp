#pragma once
// Dense complex linear algebra for small Hilbert spaces: products, tensor
// products, traces, and a Jacobi eigensolver for Hermitian matrices.  All
// functions are pure; matrices are plain values.

#include <complex>
#include <cstddef>
#include <vector>

namespace steercert {

using Complex = std::complex<double>;

// Largest admissible matrix dimension (rows or columns).  Tensor products
// whose result would exceed the cap raise DimensionError.  Default 4096.
std::size_t dimension_cap();
void set_dimension_cap(std::size_t cap);

class ComplexMatrix {
public:
    ComplexMatrix() = default;
    ComplexMatrix(std::size_t rows, std::size_t cols); // zero-filled
    ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);

    static ComplexMatrix identity(std::size_t n);
    static ComplexMatrix column(std::vector<Complex> entries); // n x 1

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Complex& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const Complex& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
    const std::vector<Complex>& entries() const { return entries_; }

    ComplexMatrix adjoint() const;
    ComplexMatrix transpose() const;
    ComplexMatrix conjugate() const;
    Complex trace() const;

    double max_abs() const;        // entrywise max modulus
    double frobenius_norm() const;

    bool is_hermitian(double tol = 1e-9) const;
    bool is_unitary(double tol = 1e-9) const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Complex> entries_; // row-major
};

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(Complex scale, const ComplexMatrix& m);
ComplexMatrix operator*(double scale, const ComplexMatrix& m);

// Kronecker product.  Result dimensions must stay within the cap.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

// Tr[a b] without forming the product.  Requires a.cols == b.rows and
// a.rows == b.cols.
Complex trace_product(const ComplexMatrix& a, const ComplexMatrix& b);

struct HermitianEigensystem {
    std::vector<double> eigenvalues; // ascending
    ComplexMatrix eigenvectors;      // column k pairs with eigenvalues[k]
};

// Cyclic Jacobi rotations on the Hermitian input; converges when the
// off-diagonal Frobenius norm drops below 1e-12 (at most 100 sweeps).
// Eigenvectors carry a canonical phase (first non-negligible component real
// positive) so repeated calls give identical output.
HermitianEigensystem hermitian_eig(const ComplexMatrix& m);

} // namespace steercert

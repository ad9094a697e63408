#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <vector>

#include "grasspack/errors.hpp"
#include "grasspack/tolerance.hpp"

namespace grasspack {

using Complex = std::complex<double>;

// ============================================================================
// Dense matrix over complex doubles, row-major storage.
//
// All real-field data in this library rides in the imaginary-zero subset of
// this type; complex multiplication of (x, 0) values keeps imaginary parts
// exactly zero, so no separate real matrix type is needed.
// ============================================================================
class Matrix {
public:
    /// Empty 0x0 matrix.
    Matrix() = default;

    /// Zero-filled rows x cols matrix. cols may be 0 (empty basis).
    Matrix(std::size_t rows, std::size_t cols);

    /// Matrix from row-major entries. Every entry must be finite.
    Matrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);

    /// Brace construction from rows, e.g. Matrix{{1, 2}, {3, 4}}.
    Matrix(std::initializer_list<std::initializer_list<Complex>> rows);

    static Matrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Complex& operator()(std::size_t i, std::size_t j) {
        return entries_[i * cols_ + j];
    }
    const Complex& operator()(std::size_t i, std::size_t j) const {
        return entries_[i * cols_ + j];
    }

    const std::vector<Complex>& entries() const { return entries_; }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Complex> entries_;
};

bool operator==(const Matrix& a, const Matrix& b);

Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator*(Complex s, const Matrix& a);
inline Matrix operator*(const Matrix& a, Complex s) { return s * a; }

/// Conjugate transpose.
Matrix adjoint(const Matrix& a);

/// Kronecker product; output is (a.rows*b.rows) x (a.cols*b.cols),
/// with a(i,j)*b occupying block (i,j).
Matrix kron(const Matrix& a, const Matrix& b);

Complex trace(const Matrix& a);

/// Largest entry modulus; 0 for an empty matrix.
double max_abs(const Matrix& a);

/// Largest entrywise difference modulus between equal-shaped matrices.
double max_abs_diff(const Matrix& a, const Matrix& b);

double frobenius_norm(const Matrix& a);

/// Eigenvalues of a Hermitian matrix, descending. Input must be Hermitian
/// within tol (throws DomainError with the deviation otherwise).
///
/// Cyclic Jacobi rotations; self-contained so results depend only on this
/// code, not on an external decomposition backend.
std::vector<double> hermitian_eigenvalues(const Matrix& a, Tolerance tol = {});

/// Singular values, descending, min(rows, cols) entries, all >= 0.
std::vector<double> singular_values(const Matrix& a);

/// Orthonormal basis with the same column span, via column-pivoted
/// Gram-Schmidt. Deterministic: pivot order picks the largest remaining
/// residual (lowest index on near-ties), and each output column is scaled
/// so its leading nonzero entry is real and positive.
/// Requires full column rank (smallest singular value > tol * largest);
/// throws RankError carrying the numerical rank otherwise.
Matrix orthonormalize(const Matrix& a, Tolerance tol = {});

/// Orthonormal basis of the kernel {x : a*x = 0}, via singular vectors whose
/// singular value falls at or below tol * (largest singular value). The
/// result has cols() == a.cols() - numerical rank; a zero-dimensional kernel
/// yields a matrix with 0 columns. Same determinism conventions as
/// orthonormalize.
Matrix null_space_basis(const Matrix& a, Tolerance tol = {});

} // namespace grasspack

#include "grasspack/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <utility>

#include "grasspack/detail/format.hpp"

namespace grasspack {

namespace {

std::size_t checked_mul(std::size_t a, std::size_t b, const char* what) {
    if (a != 0 && b > std::numeric_limits<std::size_t>::max() / a) {
        throw SizeError(std::string(what) + ": dimension product overflows");
    }
    return a * b;
}

void require_finite(const std::vector<Complex>& entries) {
    for (const Complex& z : entries) {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
            throw ValidationError("matrix entries must be finite");
        }
    }
}

void require_same_shape(const Matrix& a, const Matrix& b, const char* op) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw SizeError(std::string(op) + ": shape mismatch, " +
                        std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                        " vs " + std::to_string(b.rows()) + "x" +
                        std::to_string(b.cols()));
    }
}

// Unitary 2x2 similarity that diagonalizes the Hermitian block
//   ((alpha, beta), (conj(beta), gamma)),  alpha and gamma real, |beta| > 0.
// Returns {c, s, u} with u = beta/|beta|; the rotation acting on coordinate
// pair (p, q) is J = ((c, s), (-s*conj(u), c*conj(u))), and J^adj M J is
// diagonal.
struct Rotation {
    double c;
    double s;
    Complex u;
};

Rotation make_rotation(double alpha, double gamma, Complex beta) {
    const double absb = std::abs(beta);
    const Complex u = beta / absb;
    const double tau = (gamma - alpha) / (2.0 * absb);
    const double t =
        (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
    const double c = 1.0 / std::sqrt(1.0 + t * t);
    return Rotation{c, t * c, u};
}

// Columns p and q of a <- columns of a * J (J as above).
void apply_rotation_to_columns(Matrix& a, std::size_t p, std::size_t q,
                               const Rotation& r) {
    const Complex ubar = std::conj(r.u);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        const Complex aip = a(i, p);
        const Complex aiq = a(i, q);
        a(i, p) = r.c * aip - r.s * ubar * aiq;
        a(i, q) = r.s * aip + r.c * ubar * aiq;
    }
}

// Rows p and q of a <- rows of J^adj * a.
void apply_rotation_to_rows(Matrix& a, std::size_t p, std::size_t q,
                            const Rotation& r) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
        const Complex apj = a(p, j);
        const Complex aqj = a(q, j);
        a(p, j) = r.c * apj - r.s * r.u * aqj;
        a(q, j) = r.s * apj + r.c * r.u * aqj;
    }
}

constexpr int kMaxSweeps = 200;
constexpr double kConvergence = 1e-14;  // scaled by the largest input entry

struct Svd {
    std::vector<double> sigma;  // one per column of the input, descending
    Matrix v;                   // cols x cols, input * v has orthogonal columns
};

// One-sided Jacobi: orthogonalizes the columns of a working copy by right
// rotations, accumulating them into v. Column norms at convergence are the
// singular values. Columns whose norm falls at or below
// kConvergence * (largest initial column norm) are treated as null and left
// alone, which keeps exactly rank-deficient inputs from cycling on noise.
Svd jacobi_svd(const Matrix& a) {
    const std::size_t q = a.cols();
    Matrix w = a;
    Matrix v = Matrix::identity(q);
    if (q == 0 || a.rows() == 0) {
        return Svd{std::vector<double>(q, 0.0), std::move(v)};
    }

    std::vector<double> norm2(q, 0.0);
    auto column_norm2 = [&w](std::size_t j) {
        double s = 0.0;
        for (std::size_t i = 0; i < w.rows(); ++i) s += std::norm(w(i, j));
        return s;
    };
    double max_norm2 = 0.0;
    for (std::size_t j = 0; j < q; ++j) {
        norm2[j] = column_norm2(j);
        max_norm2 = std::max(max_norm2, norm2[j]);
    }
    const double null2 = kConvergence * kConvergence * max_norm2;
    const double eps_rel = 1e-15;

    bool converged = false;
    for (int sweep = 0; sweep < kMaxSweeps && !converged; ++sweep) {
        converged = true;
        for (std::size_t i = 0; i + 1 < q; ++i) {
            for (std::size_t j = i + 1; j < q; ++j) {
                const double gii = column_norm2(i);
                const double gjj = column_norm2(j);
                if (gii <= null2 || gjj <= null2) continue;
                Complex gij = 0.0;
                for (std::size_t r = 0; r < w.rows(); ++r) {
                    gij += std::conj(w(r, i)) * w(r, j);
                }
                if (std::abs(gij) <= eps_rel * std::sqrt(gii * gjj)) continue;
                const Rotation rot = make_rotation(gii, gjj, gij);
                apply_rotation_to_columns(w, i, j, rot);
                apply_rotation_to_columns(v, i, j, rot);
                converged = false;
            }
        }
    }
    if (!converged) {
        throw Error("singular value iteration failed to converge");
    }

    std::vector<double> sigma(q, 0.0);
    for (std::size_t j = 0; j < q; ++j) sigma[j] = std::sqrt(column_norm2(j));

    std::vector<std::size_t> order(q);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&sigma](std::size_t x, std::size_t y) {
        return sigma[x] > sigma[y];
    });

    Svd out;
    out.sigma.resize(q);
    out.v = Matrix(q, q);
    for (std::size_t j = 0; j < q; ++j) {
        out.sigma[j] = sigma[order[j]];
        for (std::size_t i = 0; i < q; ++i) out.v(i, j) = v(i, order[j]);
    }
    return out;
}

// Scales each column so its first entry of modulus > 1e-12 becomes real and
// positive. Unit-norm columns always have one (largest modulus >= 1/sqrt(rows)).
void fix_column_phases(Matrix& a) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
        for (std::size_t i = 0; i < a.rows(); ++i) {
            const double mag = std::abs(a(i, j));
            if (mag > 1e-12) {
                const Complex phase = std::conj(a(i, j)) / mag;
                for (std::size_t r = 0; r < a.rows(); ++r) a(r, j) *= phase;
                break;
            }
        }
    }
}

} // namespace

// ============================================================================
// Matrix basics
// ============================================================================

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(checked_mul(rows, cols, "Matrix"), Complex(0.0, 0.0)) {}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != checked_mul(rows, cols, "Matrix")) {
        throw SizeError("Matrix: entry count " + std::to_string(entries_.size()) +
                        " does not match " + std::to_string(rows) + "x" +
                        std::to_string(cols));
    }
    require_finite(entries_);
}

Matrix::Matrix(std::initializer_list<std::initializer_list<Complex>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    entries_.reserve(checked_mul(rows_, cols_, "Matrix"));
    for (const auto& row : rows) {
        if (row.size() != cols_) {
            throw SizeError("Matrix: ragged initializer rows");
        }
        entries_.insert(entries_.end(), row.begin(), row.end());
    }
    require_finite(entries_);
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows() == b.rows() && a.cols() == b.cols() &&
           a.entries() == b.entries();
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    require_same_shape(a, b, "operator+");
    Matrix out(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j) + b(i, j);
    return out;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
    require_same_shape(a, b, "operator-");
    Matrix out(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j) - b(i, j);
    return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) {
        throw SizeError("operator*: inner dimensions disagree, " +
                        std::to_string(a.cols()) + " vs " + std::to_string(b.rows()));
    }
    Matrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t t = 0; t < a.cols(); ++t) {
            const Complex ait = a(i, t);
            if (ait == Complex(0.0, 0.0)) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) {
                out(i, j) += ait * b(t, j);
            }
        }
    }
    return out;
}

Matrix operator*(Complex s, const Matrix& a) {
    Matrix out(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = s * a(i, j);
    return out;
}

Matrix adjoint(const Matrix& a) {
    Matrix out(a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out(j, i) = std::conj(a(i, j));
    return out;
}

Matrix kron(const Matrix& a, const Matrix& b) {
    const std::size_t rows = checked_mul(a.rows(), b.rows(), "kron");
    const std::size_t cols = checked_mul(a.cols(), b.cols(), "kron");
    checked_mul(rows, cols, "kron");
    Matrix out(rows, cols);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const Complex aij = a(i, j);
            for (std::size_t p = 0; p < b.rows(); ++p) {
                for (std::size_t q = 0; q < b.cols(); ++q) {
                    out(i * b.rows() + p, j * b.cols() + q) = aij * b(p, q);
                }
            }
        }
    }
    return out;
}

Complex trace(const Matrix& a) {
    if (a.rows() != a.cols()) {
        throw SizeError("trace: matrix is " + std::to_string(a.rows()) + "x" +
                        std::to_string(a.cols()) + ", expected square");
    }
    Complex t = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i) t += a(i, i);
    return t;
}

double max_abs(const Matrix& a) {
    double m = 0.0;
    for (const Complex& z : a.entries()) m = std::max(m, std::abs(z));
    return m;
}

double max_abs_diff(const Matrix& a, const Matrix& b) {
    require_same_shape(a, b, "max_abs_diff");
    double m = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            m = std::max(m, std::abs(a(i, j) - b(i, j)));
    return m;
}

double frobenius_norm(const Matrix& a) {
    double s = 0.0;
    for (const Complex& z : a.entries()) s += std::norm(z);
    return std::sqrt(s);
}

// ============================================================================
// Eigenvalues and singular values
// ============================================================================

std::vector<double> hermitian_eigenvalues(const Matrix& a, Tolerance tol) {
    if (a.rows() != a.cols()) {
        throw SizeError("hermitian_eigenvalues: matrix is " +
                        std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                        ", expected square");
    }
    const std::size_t n = a.rows();
    if (n == 0) return {};
    const double herm_dev = max_abs_diff(a, adjoint(a));
    if (herm_dev > tol.absolute()) {
        throw DomainError("hermitian_eigenvalues: input deviates from Hermitian by " +
                          detail::fmt(herm_dev));
    }

    // Work on the Hermitian average so roundoff asymmetry cannot bias the sweep.
    Matrix w = Complex(0.5) * (a + adjoint(a));
    const double scale = max_abs(w);
    if (scale == 0.0) return std::vector<double>(n, 0.0);
    const double thresh = kConvergence * scale;

    bool converged = false;
    for (int sweep = 0; sweep < kMaxSweeps && !converged; ++sweep) {
        converged = true;
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const Complex beta = w(p, q);
                if (std::abs(beta) <= thresh) continue;
                const Rotation rot =
                    make_rotation(w(p, p).real(), w(q, q).real(), beta);
                apply_rotation_to_columns(w, p, q, rot);
                apply_rotation_to_rows(w, p, q, rot);
                converged = false;
            }
        }
    }
    if (!converged) {
        throw Error("hermitian_eigenvalues: Jacobi iteration failed to converge");
    }

    std::vector<double> eig(n);
    for (std::size_t i = 0; i < n; ++i) eig[i] = w(i, i).real();
    std::sort(eig.begin(), eig.end(), std::greater<double>());
    return eig;
}

std::vector<double> singular_values(const Matrix& a) {
    Svd svd = jacobi_svd(a);
    const std::size_t keep = std::min(a.rows(), a.cols());
    svd.sigma.resize(keep);
    return svd.sigma;
}

// ============================================================================
// Orthonormal bases
// ============================================================================

Matrix orthonormalize(const Matrix& a, Tolerance tol) {
    const std::size_t p = a.rows();
    const std::size_t q = a.cols();
    if (q == 0) return a;

    const std::vector<double> sv = singular_values(a);
    const double sigma_max = sv.empty() ? 0.0 : sv[0];
    std::size_t rank = 0;
    for (double s : sv) {
        if (s > tol.absolute() * sigma_max) ++rank;
    }
    if (rank < q) {
        throw RankError("orthonormalize: rank-deficient input, numerical rank " +
                            std::to_string(rank) + " with " + std::to_string(q) +
                            " columns",
                        rank);
    }

    std::vector<std::vector<Complex>> work(q, std::vector<Complex>(p));
    for (std::size_t j = 0; j < q; ++j)
        for (std::size_t i = 0; i < p; ++i) work[j][i] = a(i, j);

    auto norm_of = [p](const std::vector<Complex>& col) {
        double s = 0.0;
        for (std::size_t i = 0; i < p; ++i) s += std::norm(col[i]);
        return std::sqrt(s);
    };
    auto project_out = [p](const std::vector<Complex>& dir, std::vector<Complex>& col) {
        Complex inner = 0.0;
        for (std::size_t i = 0; i < p; ++i) inner += std::conj(dir[i]) * col[i];
        for (std::size_t i = 0; i < p; ++i) col[i] -= inner * dir[i];
    };

    // Column-pivoted modified Gram-Schmidt. The pivot is the remaining column
    // with the largest residual norm; norms within a 1e-8 relative band count
    // as tied and the lowest index wins, which keeps already-orthonormal
    // input in its original order.
    std::vector<std::size_t> remaining(q);
    std::iota(remaining.begin(), remaining.end(), 0);
    std::vector<std::vector<Complex>> out;
    out.reserve(q);

    while (!remaining.empty()) {
        double nmax = 0.0;
        for (std::size_t idx : remaining) nmax = std::max(nmax, norm_of(work[idx]));
        std::size_t pick = remaining.size();
        for (std::size_t t = 0; t < remaining.size(); ++t) {
            if (norm_of(work[remaining[t]]) >= nmax * (1.0 - 1e-8)) {
                pick = t;
                break;
            }
        }
        std::vector<Complex> col = std::move(work[remaining[pick]]);
        remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(pick));

        // A second projection pass keeps the basis orthonormal to roundoff.
        for (int pass = 0; pass < 2; ++pass) {
            for (const auto& dir : out) project_out(dir, col);
        }
        const double nrm = norm_of(col);
        if (!(nrm > 0.0)) {
            throw RankError("orthonormalize: column collapsed during elimination",
                            out.size());
        }
        for (std::size_t i = 0; i < p; ++i) col[i] /= nrm;
        for (std::size_t idx : remaining) project_out(col, work[idx]);
        out.push_back(std::move(col));
    }

    Matrix result(p, q);
    for (std::size_t j = 0; j < q; ++j)
        for (std::size_t i = 0; i < p; ++i) result(i, j) = out[j][i];
    fix_column_phases(result);
    return result;
}

Matrix null_space_basis(const Matrix& a, Tolerance tol) {
    const std::size_t q = a.cols();
    if (q == 0) return Matrix(0, 0);

    const Svd svd = jacobi_svd(a);
    const double sigma_max = svd.sigma.empty() ? 0.0 : svd.sigma[0];
    const double cutoff = tol.absolute() * sigma_max;

    std::size_t kernel_dim = 0;
    for (double s : svd.sigma) {
        if (s <= cutoff) ++kernel_dim;
    }
    if (kernel_dim == 0) return Matrix(q, 0);

    // Kernel columns sit at the tail of the descending singular-value order;
    // collect them smallest-sigma first, then canonicalize.
    Matrix kernel(q, kernel_dim);
    for (std::size_t t = 0; t < kernel_dim; ++t) {
        const std::size_t src = q - 1 - t;
        for (std::size_t i = 0; i < q; ++i) kernel(i, t) = svd.v(i, src);
    }
    return orthonormalize(kernel, tol);
}

} // namespace grasspack

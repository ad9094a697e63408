#include "grasspack/model.hpp"

#include <cmath>
#include <utility>

#include "grasspack/detail/format.hpp"

namespace grasspack {

const char* field_name(FieldTag f) {
    return f == FieldTag::Real ? "Real" : "Complex";
}

Subspace::Subspace(FieldTag f, Matrix basis)
    : field_(f), basis_(std::move(basis)) {}

Subspace make_subspace(FieldTag f, const Matrix& basis, Tolerance tol) {
    const std::size_t k = basis.rows();
    const std::size_t m = basis.cols();
    if (k < 1 || m < 1 || m > k) {
        throw ValidationError("subspace basis must be k x m with 1 <= m <= k, got " +
                              std::to_string(k) + "x" + std::to_string(m));
    }
    for (const Complex& z : basis.entries()) {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
            throw ValidationError("subspace basis contains a non-finite entry");
        }
    }
    if (f == FieldTag::Real) {
        double imax = 0.0;
        for (const Complex& z : basis.entries()) {
            imax = std::max(imax, std::abs(z.imag()));
        }
        if (imax > tol.absolute()) {
            throw ValidationError(
                "field violation: imaginary magnitude " + detail::fmt(imax) +
                " in a Real-tagged subspace (tolerance " + detail::fmt(tol.absolute()) +
                ")");
        }
    }
    const Matrix gram = adjoint(basis) * basis;
    const double dev = max_abs_diff(gram, Matrix::identity(m));
    if (dev > tol.absolute()) {
        throw ValidationError("basis columns are not orthonormal: max Gram deviation " +
                              detail::fmt(dev) + " (tolerance " +
                              detail::fmt(tol.absolute()) + ")");
    }
    return Subspace(f, basis);
}

Matrix projector(const Subspace& w) {
    return w.basis() * adjoint(w.basis());
}

bool subspaces_equal(const Subspace& a, const Subspace& b, Tolerance tol) {
    if (a.field() != b.field() || a.ambient_dim() != b.ambient_dim() ||
        a.dim() != b.dim()) {
        throw ValidationError(
            std::string("subspaces_equal: parameter mismatch, Gr(") +
            field_name(a.field()) + "," + std::to_string(a.ambient_dim()) + "," +
            std::to_string(a.dim()) + ") vs Gr(" + field_name(b.field()) + "," +
            std::to_string(b.ambient_dim()) + "," + std::to_string(b.dim()) + ")");
    }
    return max_abs_diff(projector(a), projector(b)) <= tol.absolute();
}

Packing::Packing(FieldTag f, std::size_t k, std::size_t m, std::vector<Subspace> ws)
    : field_(f), ambient_dim_(k), dim_(m), subspaces_(std::move(ws)) {}

Packing make_packing(std::vector<Subspace> subspaces) {
    if (subspaces.empty()) {
        throw ValidationError("packing requires at least one subspace");
    }
    const FieldTag f = subspaces.front().field();
    const std::size_t k = subspaces.front().ambient_dim();
    const std::size_t m = subspaces.front().dim();
    for (std::size_t i = 1; i < subspaces.size(); ++i) {
        const Subspace& w = subspaces[i];
        if (w.field() != f || w.ambient_dim() != k || w.dim() != m) {
            throw ValidationError(
                "subspace " + std::to_string(i) + " lives in Gr(" +
                field_name(w.field()) + "," + std::to_string(w.ambient_dim()) + "," +
                std::to_string(w.dim()) + "), expected Gr(" + field_name(f) + "," +
                std::to_string(k) + "," + std::to_string(m) + ")");
        }
    }
    return Packing(f, k, m, std::move(subspaces));
}

} // namespace grasspack

#include "grasspack/construct.hpp"

#include <string>
#include <utility>
#include <vector>

#include "grasspack/detail/format.hpp"

namespace grasspack {

namespace {

void require_unitary(const Matrix& u, std::size_t r, std::size_t index,
                     FieldTag f, Tolerance tol) {
    if (u.rows() != r || u.cols() != r) {
        throw ValidationError("unitary " + std::to_string(index) + " is " +
                              std::to_string(u.rows()) + " x " +
                              std::to_string(u.cols()) + ", expected " +
                              std::to_string(r) + " x " + std::to_string(r));
    }
    const double dev = max_abs_diff(adjoint(u) * u, Matrix::identity(r));
    if (dev > tol.absolute()) {
        throw ValidationError("unitary " + std::to_string(index) +
                              " is not unitary: max deviation " +
                              detail::fmt(dev) + " (tolerance " +
                              detail::fmt(tol.absolute()) + ")");
    }
    if (f == FieldTag::Real) {
        double imag = 0.0;
        for (const Complex& z : u.entries())
            imag = std::max(imag, std::abs(z.imag()));
        if (imag > tol.absolute()) {
            throw ValidationError(
                "unitary " + std::to_string(index) +
                " has imaginary magnitude " + detail::fmt(imag) +
                " but the packing is tagged Real (tolerance " +
                detail::fmt(tol.absolute()) + ")");
        }
    }
}

} // namespace

Packing tensor_with_unitaries(const Packing& p, const UnitaryList& us,
                              Tolerance tol) {
    if (us.matrices.size() != p.size()) {
        throw ValidationError("unitary count " +
                              std::to_string(us.matrices.size()) +
                              " does not match packing size " +
                              std::to_string(p.size()));
    }
    if (us.size == 0) {
        throw ValidationError("unitary size must be >= 1, got 0");
    }
    for (std::size_t i = 0; i < us.matrices.size(); ++i) {
        require_unitary(us.matrices[i], us.size, i, p.field(), tol);
    }

    std::vector<Subspace> out;
    out.reserve(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
        out.push_back(make_subspace(
            p.field(), kron(p[i].basis(), us.matrices[i]), tol));
    }
    return make_packing(std::move(out));
}

Packing tensor_packings(const Packing& p, const Packing& q, Tolerance tol) {
    if (p.size() != q.size()) {
        throw ValidationError("tensor_packings: packings have different sizes " +
                              std::to_string(p.size()) + " and " +
                              std::to_string(q.size()));
    }
    if (p.field() != q.field()) {
        throw ValidationError(std::string("tensor_packings: fields differ, ") +
                              field_name(p.field()) + " vs " +
                              field_name(q.field()));
    }

    std::vector<Subspace> out;
    out.reserve(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
        out.push_back(make_subspace(
            p.field(), kron(p[i].basis(), q[i].basis()), tol));
    }
    return make_packing(std::move(out));
}

Packing complement(const Packing& p, Tolerance tol) {
    const std::size_t k = p.ambient_dim();
    const std::size_t m = p.dim();
    if (m >= k) {
        throw DomainError("complement: requires dim < ambient_dim, got dim = "
                          "ambient_dim = " + std::to_string(k));
    }

    std::vector<Subspace> out;
    out.reserve(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
        // Columns spanning ker(Li^adj), i.e. the orthogonal complement.
        const Matrix kernel = null_space_basis(adjoint(p[i].basis()), tol);
        if (kernel.cols() != k - m) {
            throw Error("complement: kernel of subspace " + std::to_string(i) +
                        " has dimension " + std::to_string(kernel.cols()) +
                        ", expected " + std::to_string(k - m));
        }
        out.push_back(make_subspace(p.field(), kernel, tol));
    }
    return make_packing(std::move(out));
}

} // namespace grasspack

#pragma once

#include <cstddef>
#include <vector>

#include "grasspack/linalg.hpp"
#include "grasspack/tolerance.hpp"

namespace grasspack {

/// Scalar field of a packing. Real data is stored with zero imaginary parts;
/// the tag records which field the packing claims to live over.
enum class FieldTag { Real, Complex };

const char* field_name(FieldTag f);

// ============================================================================
// Subspace: a point of the Grassmannian Gr(F, k, m), held as a k x m matrix
// whose columns form an orthonormal basis. Construct via make_subspace, which
// enforces orthonormality and the field claim.
// ============================================================================
class Subspace {
public:
    FieldTag field() const { return field_; }
    const Matrix& basis() const { return basis_; }
    std::size_t ambient_dim() const { return basis_.rows(); }
    std::size_t dim() const { return basis_.cols(); }

private:
    Subspace(FieldTag f, Matrix basis);
    friend Subspace make_subspace(FieldTag f, const Matrix& basis, Tolerance tol);

    FieldTag field_;
    Matrix basis_;
};

/// Validates 1 <= m <= k, finite entries, ||basis* basis - I||_max <= tol,
/// and (for FieldTag::Real) that every imaginary part is <= tol in modulus.
/// Throws ValidationError with the measured deviation on failure.
Subspace make_subspace(FieldTag f, const Matrix& basis, Tolerance tol = {});

/// Orthogonal projector basis * basis^adj onto the subspace (k x k,
/// Hermitian, idempotent, trace m).
Matrix projector(const Subspace& w);

/// True when the two subspaces coincide as sets: parameters must match
/// (throws ValidationError otherwise) and the projector difference must be
/// <= tol entrywise. Basis-choice independent.
bool subspaces_equal(const Subspace& a, const Subspace& b, Tolerance tol = {});

// ============================================================================
// Packing: n >= 1 subspaces sharing one (field, k, m). The order of the list
// is part of the value; operations that pair packings match entries by index.
// ============================================================================
class Packing {
public:
    FieldTag field() const { return field_; }
    std::size_t ambient_dim() const { return ambient_dim_; }
    std::size_t dim() const { return dim_; }
    /// Number of subspaces.
    std::size_t size() const { return subspaces_.size(); }

    const Subspace& operator[](std::size_t i) const { return subspaces_[i]; }
    const std::vector<Subspace>& subspaces() const { return subspaces_; }

private:
    Packing(FieldTag f, std::size_t k, std::size_t m, std::vector<Subspace> ws);
    friend Packing make_packing(std::vector<Subspace> subspaces);

    FieldTag field_;
    std::size_t ambient_dim_;
    std::size_t dim_;
    std::vector<Subspace> subspaces_;
};

/// Bundles subspaces into a packing. Requires a non-empty list whose members
/// all share the same field, ambient dimension, and subspace dimension;
/// throws ValidationError naming the first offender otherwise.
Packing make_packing(std::vector<Subspace> subspaces);

} // namespace grasspack

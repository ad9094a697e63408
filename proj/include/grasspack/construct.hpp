#pragma once

#include <cstddef>
#include <vector>

#include "grasspack/model.hpp"

namespace grasspack {

/// One r x r unitary per subspace of the packing it will be applied to.
struct UnitaryList {
    std::size_t size = 0;  // r
    std::vector<Matrix> matrices;
};

/// Inflates each subspace Li (k x m) to Li (x) Ui (kr x mr). The pairwise
/// principal-angle spectrum of the output replicates each input eigenvalue
/// r times, so tightness, equichordality, strong simpliciality, and
/// equiisoclinicity transfer in both directions, with the frame bound
/// unchanged. Requires us.matrices.size() == p.size(), each matrix r x r and
/// unitary within tol; a Real packing additionally requires real entries.
Packing tensor_with_unitaries(const Packing& p, const UnitaryList& us,
                              Tolerance tol = {});

/// Componentwise Kronecker product of two packings with the same length and
/// field: subspace i becomes Lp_i (x) Lq_i in Gr(F, kp*kq, mp*mq). Pairwise
/// principal-angle cosines multiply, so the shared-spectrum properties
/// survive when both factors have them. Tightness does not transfer: the
/// output projectors sum to sum_i P_i (x) Q_i, which is generally not a
/// multiple of the identity even when both factor sums are (already the
/// self-product of the four hadamard lines fails).
Packing tensor_packings(const Packing& p, const Packing& q, Tolerance tol = {});

/// Orthogonal complement of every subspace: Gr(F, k, m) -> Gr(F, k, k - m),
/// kernel bases extracted by null_space_basis. Requires m < k (DomainError
/// otherwise). Tight inputs stay tight with bound n - A; nonzero
/// principal-angle spectra are preserved pairwise.
Packing complement(const Packing& p, Tolerance tol = {});

} // namespace grasspack

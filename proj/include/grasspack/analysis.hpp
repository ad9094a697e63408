#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "grasspack/model.hpp"

namespace grasspack {

// ============================================================================
// Pairwise geometry
// ============================================================================

/// Per-pair spectral data. The eigenvalues are those of Li^adj Lj Lj^adj Li
/// (descending, m values in [0, 1]); the cosines are the principal-angle
/// cosines, i.e. the singular values of Li^adj Lj, so eigenvalues[t] ==
/// cosines[t]^2. chordal_sq = m - sum(eigenvalues).
struct CrossGramSpectrum {
    std::size_t i = 0;
    std::size_t j = 0;
    std::vector<double> eigenvalues;
    std::vector<double> cosines;
    double chordal_sq = 0.0;
};

/// Li^adj Lj (m x m). i == j is allowed and gives the identity up to
/// roundoff; out-of-range indices throw DomainError.
Matrix cross_gram(const Packing& p, std::size_t i, std::size_t j);

/// Spectral data for a pair of distinct subspaces (i == j throws DomainError).
CrossGramSpectrum pair_spectrum(const Packing& p, std::size_t i, std::size_t j,
                                Tolerance tol = {});

/// Squared chordal distance m - tr(Li^adj Lj Lj^adj Li), computed as
/// m - ||Li^adj Lj||_F^2. Zero for i == j.
double chordal_distance_sq(const Packing& p, std::size_t i, std::size_t j);

/// Sum of the projectors (k x k, Hermitian positive semidefinite, trace n*m).
Matrix fusion_frame_operator(const Packing& p);

// ============================================================================
// Property checks
// ============================================================================

/// Outcome of a pairwise property check. For a single-subspace packing there
/// are no pairs, so every pairwise property holds vacuously and carries no
/// witnessing value.
template <typename T>
struct Verdict {
    bool holds = false;
    bool vacuous = false;
    std::optional<T> value;

    explicit operator bool() const { return holds; }
};

/// Frame bound A = n*m/k when ||operator - A*I||_max <= tol, else empty.
std::optional<double> check_tight(const Packing& p, Tolerance tol = {});

/// Holds when max and min pairwise chordal_sq differ by <= tol; the value is
/// the mean pairwise chordal_sq.
Verdict<double> check_equichordal(const Packing& p, Tolerance tol = {});

/// Holds when all pairs share one principal-angle spectrum (descending
/// eigenvalue lists agree entrywise within tol); the value is the entrywise
/// mean spectrum.
Verdict<std::vector<double>> check_strongly_simplicial(const Packing& p,
                                                       Tolerance tol = {});

/// Holds when every cross-Gram product Li^adj Lj Lj^adj Li (i != j) is
/// alpha * I within tol entrywise, for one shared alpha >= 0. Alpha is
/// estimated as the mean diagonal entry over all pairs, then residual-checked.
Verdict<double> check_equiisoclinic(const Packing& p, Tolerance tol = {});

// ============================================================================
// Bounds and certification
// ============================================================================

/// Largest n for which the simplex bound can be met in Gr(F, k, .):
/// k*(k+1)/2 over the reals, k^2 over the complexes.
std::int64_t gerzon_bound(FieldTag f, std::int64_t k);

/// m*(k-m)*n / (k*(n-1)). Requires 1 <= m <= k and n >= 2 (DomainError
/// otherwise). Zero when m == k.
double simplex_bound(std::int64_t k, std::int64_t m, std::int64_t n);

/// m*(k-m)/k. Requires 1 <= m <= k. Zero when m == k.
double orthoplex_bound(std::int64_t k, std::int64_t m);

/// Which distance bound governs n subspaces given the Gerzon number Z:
/// n <= Z, then Z < n <= 2(Z-1), then beyond.
enum class Regime { SimplexApplies, OrthoplexApplies, BeyondOrthoplex };

const char* regime_name(Regime r);

struct CertificationReport {
    bool vacuous = false;

    std::optional<double> tight_bound;
    Verdict<double> equichordal;
    Verdict<std::vector<double>> strongly_simplicial;
    Verdict<double> equiisoclinic;

    /// Smallest pairwise squared chordal distance; +infinity when there are
    /// no pairs (serialized as null).
    double min_chordal_sq = 0.0;

    std::optional<double> simplex_bound;  // absent when n == 1
    double orthoplex_bound = 0.0;
    std::int64_t gerzon = 0;
    Regime regime = Regime::SimplexApplies;
    bool simplex_saturated = false;
    bool orthoplex_saturated = false;
};

/// Full report: tightness, the three pairwise properties, the distance
/// bounds, the applicable regime, and the saturation flags. The property
/// verdicts always respect the implication chain
/// equiisoclinic => strongly simplicial => equichordal.
CertificationReport certify(const Packing& p, Tolerance tol = {});

} // namespace grasspack

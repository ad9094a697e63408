#pragma once

#include <cstdint>

#include "grasspack/construct.hpp"
#include "grasspack/model.hpp"

namespace grasspack {

/// Seed for the deterministic generators. Equal seeds reproduce equal output
/// bit for bit; the underlying stream is pinned by algorithm, not by any
/// standard-library engine, so regenerated corpora stay stable.
struct Seed {
    std::uint64_t value = 0;
};

/// Standard-normal stream: SplitMix64 run in counter mode (output t mixes
/// seed + (t+1) * 0x9E3779B97F4A7C15) feeding a Box-Muller transform over
/// 53-bit uniforms in (0, 1].
class GaussianStream {
public:
    explicit GaussianStream(Seed seed) : seed_(seed.value) {}

    /// Next N(0, 1) draw.
    double next();

private:
    std::uint64_t next_raw();
    double next_uniform();

    std::uint64_t seed_;
    std::uint64_t counter_ = 0;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

/// Four lines in Gr(R, 3, 1) spanned by the columns of
///   (1/sqrt(3)) * ((1, -1, 1, -1), (1, 1, -1, -1), (1, -1, -1, 1)).
/// A tight equiisoclinic packing meeting the simplex bound.
Packing hadamard_etf();

/// The orthogonal complements of hadamard_etf() in Gr(R, 3, 2), as four
/// fixed reference bases written with a = 1/sqrt(2), b = 1/sqrt(6). Tight
/// and strongly simplicial but not equiisoclinic.
Packing hadamard_complement();

/// The k coordinate lines of F^k (an orthonormal-basis packing).
Packing onb_lines(FieldTag f, std::size_t k);

/// Six lines in Gr(C, 2, 1) from the classical mutually unbiased bases of
/// C^2: (1,0), (0,1), (1,1)/sqrt(2), (1,-1)/sqrt(2), (1,i)/sqrt(2),
/// (1,-i)/sqrt(2). Meets the orthoplex bound 1/2 with n past the Gerzon
/// number 4.
Packing mub_c2();

/// Haar-like r x r unitary (orthogonal for FieldTag::Real): a seeded
/// Gaussian matrix passed through orthonormalize, inheriting its
/// determinism conventions.
Matrix random_unitary(FieldTag f, std::size_t r, Seed seed);

/// n independent unitaries drawn from one stream, for pairing with an
/// n-subspace packing.
UnitaryList random_unitaries(FieldTag f, std::size_t r, std::size_t n, Seed seed);

/// n Haar-like random subspaces in Gr(F, k, m), one Gaussian stream,
/// each basis orthonormalized and validated. Requires 1 <= m <= k and n >= 1.
Packing random_packing(FieldTag f, std::size_t k, std::size_t m, std::size_t n,
                       Seed seed);

} // namespace grasspack

#include "grasspack/generators.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

namespace grasspack {

// ============================================================================
// GaussianStream
// ============================================================================

std::uint64_t GaussianStream::next_raw() {
    // SplitMix64 finalizer applied to seed + counter * golden gamma. Counter
    // mode keeps draw t a pure function of (seed, t).
    std::uint64_t z = seed_ + (++counter_) * 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

double GaussianStream::next_uniform() {
    // Top 53 bits, shifted into (0, 1] so the Box-Muller logarithm is finite.
    return static_cast<double>((next_raw() >> 11) + 1) * 0x1.0p-53;
}

double GaussianStream::next() {
    if (have_spare_) {
        have_spare_ = false;
        return spare_;
    }
    const double u1 = next_uniform();
    const double u2 = next_uniform();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * std::numbers::pi * u2;
    spare_ = radius * std::sin(angle);
    have_spare_ = true;
    return radius * std::cos(angle);
}

// ============================================================================
// Fixed reference packings
// ============================================================================

Packing hadamard_etf() {
    const double s = 1.0 / std::sqrt(3.0);
    const Matrix h{{s, -s, s, -s},
                   {s, s, -s, -s},
                   {s, -s, -s, s}};
    std::vector<Subspace> lines;
    lines.reserve(4);
    for (std::size_t j = 0; j < 4; ++j) {
        Matrix col(3, 1);
        for (std::size_t i = 0; i < 3; ++i) col(i, 0) = h(i, j);
        lines.push_back(make_subspace(FieldTag::Real, col));
    }
    return make_packing(std::move(lines));
}

Packing hadamard_complement() {
    const double a = 1.0 / std::sqrt(2.0);
    const double b = 1.0 / std::sqrt(6.0);
    const std::vector<Matrix> bases{
        Matrix{{-2 * b, 0.0}, {b, -a}, {b, a}},
        Matrix{{-2 * b, 0.0}, {-b, -a}, {b, -a}},
        Matrix{{-2 * b, 0.0}, {-b, -a}, {-b, a}},
        Matrix{{-2 * b, 0.0}, {b, -a}, {-b, -a}},
    };
    std::vector<Subspace> planes;
    planes.reserve(bases.size());
    for (const Matrix& l : bases) {
        planes.push_back(make_subspace(FieldTag::Real, l));
    }
    return make_packing(std::move(planes));
}

Packing onb_lines(FieldTag f, std::size_t k) {
    if (k == 0) {
        throw DomainError("onb_lines: k must be >= 1, got 0");
    }
    std::vector<Subspace> lines;
    lines.reserve(k);
    for (std::size_t j = 0; j < k; ++j) {
        Matrix col(k, 1);
        col(j, 0) = 1.0;
        lines.push_back(make_subspace(f, col));
    }
    return make_packing(std::move(lines));
}

Packing mub_c2() {
    const double r = 1.0 / std::sqrt(2.0);
    const Complex i(0.0, 1.0);
    const std::vector<std::pair<Complex, Complex>> vectors{
        {1.0, 0.0}, {0.0, 1.0},         {r, r}, {r, -r},
        {r, r * i}, {r, -r * i},
    };
    std::vector<Subspace> lines;
    lines.reserve(vectors.size());
    for (const auto& [x, y] : vectors) {
        lines.push_back(make_subspace(FieldTag::Complex, Matrix{{x}, {y}}));
    }
    return make_packing(std::move(lines));
}

// ============================================================================
// Seeded random inputs
// ============================================================================

namespace {

// Row-major fill; a Complex entry consumes two draws, real part first.
Matrix gaussian_matrix(GaussianStream& g, FieldTag f, std::size_t rows,
                       std::size_t cols) {
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) {
            const double re = g.next();
            const double im = f == FieldTag::Complex ? g.next() : 0.0;
            m(i, j) = Complex(re, im);
        }
    }
    return m;
}

} // namespace

Matrix random_unitary(FieldTag f, std::size_t r, Seed seed) {
    if (r == 0) {
        throw DomainError("random_unitary: r must be >= 1, got 0");
    }
    GaussianStream g(seed);
    return orthonormalize(gaussian_matrix(g, f, r, r));
}

UnitaryList random_unitaries(FieldTag f, std::size_t r, std::size_t n,
                             Seed seed) {
    if (r == 0) {
        throw DomainError("random_unitaries: r must be >= 1, got 0");
    }
    GaussianStream g(seed);
    UnitaryList us;
    us.size = r;
    us.matrices.reserve(n);
    for (std::size_t t = 0; t < n; ++t) {
        us.matrices.push_back(orthonormalize(gaussian_matrix(g, f, r, r)));
    }
    return us;
}

Packing random_packing(FieldTag f, std::size_t k, std::size_t m, std::size_t n,
                       Seed seed) {
    if (m < 1 || k < m) {
        throw DomainError("random_packing: need 1 <= m <= k, got m = " +
                          std::to_string(m) + ", k = " + std::to_string(k));
    }
    if (n == 0) {
        throw DomainError("random_packing: n must be >= 1, got 0");
    }
    GaussianStream g(seed);
    std::vector<Subspace> out;
    out.reserve(n);
    for (std::size_t t = 0; t < n; ++t) {
        out.push_back(make_subspace(f, orthonormalize(gaussian_matrix(g, f, k, m))));
    }
    return make_packing(std::move(out));
}

} // namespace grasspack

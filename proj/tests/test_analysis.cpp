#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include <doctest.h>

#include "grasspack/analysis.hpp"
#include "grasspack/generators.hpp"
#include "test_support.hpp"

using namespace grasspack;
using testsupport::equichordal_not_strong;
using testsupport::isoclinic_pair_r4;
using testsupport::mercedes_lines;
using testsupport::two_onb_lines_r2;
using testsupport::unequal_three_lines;

namespace {

// Rebuild p with each basis multiplied on the right by a random unitary:
// the same subspaces through different representatives. An extra sign or
// phase twist makes sure even 1-dimensional bases actually change.
Packing rebase(const Packing& p, std::uint64_t seed) {
    std::vector<Subspace> out;
    for (std::size_t i = 0; i < p.size(); ++i) {
        const Matrix u = random_unitary(p.field(), p.dim(), Seed{seed + i});
        const Complex twist =
            p.field() == FieldTag::Real
                ? Complex(i % 2 == 0 ? -1.0 : 1.0, 0.0)
                : std::exp(Complex(0.0, 0.4 * static_cast<double>(i) + 0.3));
        out.push_back(make_subspace(p.field(), p[i].basis() * (twist * u)));
    }
    return make_packing(std::move(out));
}

std::vector<Packing> property_corpus() {
    return {
        hadamard_etf(),
        hadamard_complement(),
        onb_lines(FieldTag::Real, 3),
        mub_c2(),
        mercedes_lines(),
        two_onb_lines_r2(),
        unequal_three_lines(),
        equichordal_not_strong(),
        isoclinic_pair_r4(0.7),
        random_packing(FieldTag::Real, 4, 2, 3, Seed{81}),
        random_packing(FieldTag::Complex, 3, 1, 5, Seed{82}),
    };
}

} // namespace

TEST_CASE("cross_gram computes conjugate inner products of basis columns") {
    const Packing p = hadamard_etf();
    const Matrix g01 = cross_gram(p, 0, 1);
    REQUIRE(g01.rows() == 1);
    // direct oracle over the stored columns
    Complex expect = 0.0;
    for (std::size_t t = 0; t < 3; ++t)
        expect += std::conj(p[0].basis()(t, 0)) * p[1].basis()(t, 0);
    CHECK(std::abs(g01(0, 0) - expect) <= 1e-15);
    CHECK_NEAR(g01(0, 0).real(), -1.0 / 3.0, 1e-12);

    const Matrix self = cross_gram(p, 2, 2);
    CHECK(max_abs_diff(self, Matrix::identity(1)) <= 1e-12);

    CHECK_THROWS_AS(cross_gram(p, 0, 4), DomainError);
    CHECK_THROWS_AS(cross_gram(p, 9, 0), DomainError);
}

TEST_CASE("pair_spectrum on the hadamard lines") {
    const Packing p = hadamard_etf();
    const CrossGramSpectrum s = pair_spectrum(p, 0, 1);
    CHECK(s.i == 0);
    CHECK(s.j == 1);
    REQUIRE(s.eigenvalues.size() == 1);
    CHECK_NEAR(s.eigenvalues[0], 1.0 / 9.0, 1e-12);
    REQUIRE(s.cosines.size() == 1);
    CHECK_NEAR(s.cosines[0], 1.0 / 3.0, 1e-12);
    CHECK_NEAR(s.chordal_sq, 8.0 / 9.0, 1e-12);

    CHECK_THROWS_AS(pair_spectrum(p, 1, 1), DomainError);
    CHECK_THROWS_AS(pair_spectrum(p, 0, 7), DomainError);
}

TEST_CASE("pair_spectrum eigenvalues are squared cosines in [0, 1]") {
    const Packing p = random_packing(FieldTag::Complex, 5, 2, 4, Seed{17});
    for (std::size_t i = 0; i < p.size(); ++i) {
        for (std::size_t j = 0; j < p.size(); ++j) {
            if (i == j) continue;
            const CrossGramSpectrum s = pair_spectrum(p, i, j);
            REQUIRE(s.eigenvalues.size() == 2);
            for (std::size_t t = 0; t < 2; ++t) {
                CHECK(s.eigenvalues[t] >= -1e-12);
                CHECK(s.eigenvalues[t] <= 1.0 + 1e-12);
                CHECK_NEAR(s.eigenvalues[t], s.cosines[t] * s.cosines[t], 1e-10);
            }
            CHECK_NEAR(s.chordal_sq, chordal_distance_sq(p, i, j), 1e-12);
        }
    }
}

TEST_CASE("chordal_distance_sq is symmetric and zero on the diagonal") {
    const Packing p = random_packing(FieldTag::Real, 4, 2, 3, Seed{23});
    for (std::size_t i = 0; i < 3; ++i) {
        CHECK_NEAR(chordal_distance_sq(p, i, i), 0.0, 1e-12);
        for (std::size_t j = 0; j < 3; ++j) {
            CHECK_NEAR(chordal_distance_sq(p, i, j),
                       chordal_distance_sq(p, j, i), 1e-12);
        }
    }
    CHECK_THROWS_AS(chordal_distance_sq(p, 0, 3), DomainError);
}

TEST_CASE("fusion_frame_operator sums projectors") {
    CHECK(max_abs_diff(fusion_frame_operator(onb_lines(FieldTag::Real, 3)),
                       Matrix::identity(3)) <= 1e-12);

    const Matrix s = fusion_frame_operator(hadamard_etf());
    CHECK(max_abs_diff(s, Complex(4.0 / 3.0) * Matrix::identity(3)) <= 1e-12);

    const Packing p = random_packing(FieldTag::Complex, 4, 2, 5, Seed{29});
    CHECK_NEAR(trace(fusion_frame_operator(p)).real(), 10.0, 1e-10);
}

TEST_CASE("check_tight finds the frame bound when it exists") {
    const auto a = check_tight(hadamard_etf());
    REQUIRE(a.has_value());
    CHECK_NEAR(*a, 4.0 / 3.0, 1e-12);

    const auto b = check_tight(mub_c2());
    REQUIRE(b.has_value());
    CHECK_NEAR(*b, 3.0, 1e-12);

    const auto c = check_tight(two_onb_lines_r2());
    REQUIRE(c.has_value());
    CHECK_NEAR(*c, 2.0, 1e-12);

    CHECK(!check_tight(unequal_three_lines()).has_value());
    CHECK(!check_tight(equichordal_not_strong()).has_value());
}

TEST_CASE("check_equichordal verdicts across the witnesses") {
    const auto yes = check_equichordal(hadamard_etf());
    CHECK(yes.holds);
    CHECK(!yes.vacuous);
    REQUIRE(yes.value.has_value());
    CHECK_NEAR(*yes.value, 8.0 / 9.0, 1e-12);

    const auto merc = check_equichordal(mercedes_lines());
    CHECK(merc.holds);
    CHECK_NEAR(*merc.value, 3.0 / 4.0, 1e-12);

    CHECK(!check_equichordal(two_onb_lines_r2()).holds);
    CHECK(!check_equichordal(unequal_three_lines()).holds);
    CHECK(check_equichordal(equichordal_not_strong()).holds);
}

TEST_CASE("check_strongly_simplicial separates spectra from distances") {
    const auto strong = check_strongly_simplicial(hadamard_complement());
    CHECK(strong.holds);
    REQUIRE(strong.value.has_value());
    REQUIRE(strong.value->size() == 2);
    CHECK_NEAR((*strong.value)[0], 1.0, 1e-9);
    CHECK_NEAR((*strong.value)[1], 1.0 / 9.0, 1e-9);

    // equal distances, different spectra: the separating witness
    const Packing sep = equichordal_not_strong();
    CHECK(check_equichordal(sep).holds);
    CHECK(!check_strongly_simplicial(sep).holds);

    // for lines the two notions coincide
    CHECK(check_strongly_simplicial(mercedes_lines()).holds);
    CHECK(!check_strongly_simplicial(two_onb_lines_r2()).holds);
}

TEST_CASE("check_equiisoclinic estimates alpha and rejects near misses") {
    const auto h = check_equiisoclinic(hadamard_etf());
    CHECK(h.holds);
    REQUIRE(h.value.has_value());
    CHECK_NEAR(*h.value, 1.0 / 9.0, 1e-12);

    const auto m = check_equiisoclinic(mercedes_lines());
    CHECK(m.holds);
    CHECK_NEAR(*m.value, 1.0 / 4.0, 1e-12);

    const auto iso = check_equiisoclinic(isoclinic_pair_r4(0.7));
    CHECK(iso.holds);
    const double c = std::cos(0.7);
    CHECK_NEAR(*iso.value, c * c, 1e-12);

    // strongly simplicial but spectrally spread
    CHECK(!check_equiisoclinic(hadamard_complement()).holds);
    CHECK(!check_equiisoclinic(two_onb_lines_r2()).holds);
}

TEST_CASE("single-subspace packings are vacuously everything") {
    const Packing solo = random_packing(FieldTag::Complex, 4, 2, 1, Seed{31});
    const auto eq = check_equichordal(solo);
    CHECK(eq.holds);
    CHECK(eq.vacuous);
    CHECK(!eq.value.has_value());
    CHECK(check_strongly_simplicial(solo).vacuous);
    CHECK(check_equiisoclinic(solo).vacuous);

    const CertificationReport r = certify(solo);
    CHECK(r.vacuous);
    CHECK(std::isinf(r.min_chordal_sq));
    CHECK(!r.simplex_bound.has_value());
    CHECK(!r.simplex_saturated);
    CHECK(!r.orthoplex_saturated);
    CHECK(r.tight_bound.has_value() == false);  // one plane cannot tile C^4
}

TEST_CASE("gerzon_bound by field") {
    CHECK(gerzon_bound(FieldTag::Real, 3) == 6);
    CHECK(gerzon_bound(FieldTag::Complex, 2) == 4);
    CHECK(gerzon_bound(FieldTag::Real, 1) == 1);
    CHECK(gerzon_bound(FieldTag::Complex, 3) == 9);
    CHECK_THROWS_AS(gerzon_bound(FieldTag::Real, 0), DomainError);
}

TEST_CASE("simplex_bound values and domain") {
    CHECK_NEAR(simplex_bound(3, 1, 4), 8.0 / 9.0, 1e-15);
    CHECK_NEAR(simplex_bound(4, 2, 3), 3.0 / 2.0, 1e-15);
    CHECK_NEAR(simplex_bound(2, 1, 2), 1.0, 1e-15);
    CHECK(simplex_bound(3, 3, 4) == 0.0);
    CHECK_THROWS_AS(simplex_bound(3, 1, 1), DomainError);
    CHECK_THROWS_AS(simplex_bound(3, 0, 4), DomainError);
    CHECK_THROWS_AS(simplex_bound(2, 3, 4), DomainError);
}

TEST_CASE("orthoplex_bound values and domain") {
    CHECK_NEAR(orthoplex_bound(2, 1), 0.5, 1e-15);
    CHECK_NEAR(orthoplex_bound(3, 1), 2.0 / 3.0, 1e-15);
    CHECK_NEAR(orthoplex_bound(4, 2), 1.0, 1e-15);
    CHECK(orthoplex_bound(3, 3) == 0.0);
    CHECK_THROWS_AS(orthoplex_bound(0, 0), DomainError);
    CHECK_THROWS_AS(orthoplex_bound(2, 3), DomainError);
}

TEST_CASE("certify on the hadamard lines") {
    const CertificationReport r = certify(hadamard_etf());
    CHECK(!r.vacuous);
    REQUIRE(r.tight_bound.has_value());
    CHECK_NEAR(*r.tight_bound, 4.0 / 3.0, 1e-9);
    CHECK(r.equichordal.holds);
    CHECK(r.strongly_simplicial.holds);
    CHECK(r.equiisoclinic.holds);
    CHECK_NEAR(*r.equiisoclinic.value, 1.0 / 9.0, 1e-9);
    CHECK_NEAR(r.min_chordal_sq, 8.0 / 9.0, 1e-9);
    REQUIRE(r.simplex_bound.has_value());
    CHECK_NEAR(*r.simplex_bound, 8.0 / 9.0, 1e-9);
    CHECK(r.gerzon == 6);
    CHECK(r.regime == Regime::SimplexApplies);
    CHECK(r.simplex_saturated);
    CHECK(!r.orthoplex_saturated);
}

TEST_CASE("certify regime thresholds follow n against the gerzon number") {
    // Gr(C, 2, 1): Z = 4, orthoplex window ends at 2 (Z - 1) = 6
    CHECK(certify(random_packing(FieldTag::Complex, 2, 1, 4, Seed{41})).regime ==
          Regime::SimplexApplies);
    CHECK(certify(random_packing(FieldTag::Complex, 2, 1, 5, Seed{42})).regime ==
          Regime::OrthoplexApplies);
    CHECK(certify(random_packing(FieldTag::Complex, 2, 1, 6, Seed{43})).regime ==
          Regime::OrthoplexApplies);
    CHECK(certify(random_packing(FieldTag::Complex, 2, 1, 7, Seed{44})).regime ==
          Regime::BeyondOrthoplex);

    CHECK(std::string(regime_name(Regime::SimplexApplies)) == "SimplexApplies");
    CHECK(std::string(regime_name(Regime::OrthoplexApplies)) ==
          "OrthoplexApplies");
    CHECK(std::string(regime_name(Regime::BeyondOrthoplex)) ==
          "BeyondOrthoplex");
}

TEST_CASE("certify on the mutually unbiased lines") {
    const CertificationReport r = certify(mub_c2());
    REQUIRE(r.tight_bound.has_value());
    CHECK_NEAR(*r.tight_bound, 3.0, 1e-9);
    CHECK(!r.equichordal.holds);
    CHECK(r.regime == Regime::OrthoplexApplies);
    CHECK(r.gerzon == 4);
    CHECK_NEAR(r.min_chordal_sq, 0.5, 1e-9);
    CHECK_NEAR(r.orthoplex_bound, 0.5, 1e-9);
    CHECK(r.orthoplex_saturated);
    CHECK(!r.simplex_saturated);
}

TEST_CASE("certified properties never violate the implication chain") {
    for (const Packing& p : property_corpus()) {
        const CertificationReport r = certify(p);
        if (r.equiisoclinic.holds) CHECK(r.strongly_simplicial.holds);
        if (r.strongly_simplicial.holds) CHECK(r.equichordal.holds);
    }
}

TEST_CASE("saturating the simplex bound is equivalent to equichordal and tight") {
    for (const Packing& p : property_corpus()) {
        const CertificationReport r = certify(p);
        if (r.vacuous || r.regime != Regime::SimplexApplies) continue;
        const bool rhs = r.equichordal.holds && r.tight_bound.has_value();
        CHECK(r.simplex_saturated == rhs);
    }
}

TEST_CASE("certification is invariant under change of basis") {
    std::uint64_t seed = 1000;
    for (const Packing& p : property_corpus()) {
        const CertificationReport a = certify(p);
        const CertificationReport b = certify(rebase(p, seed += 100));

        CHECK(a.tight_bound.has_value() == b.tight_bound.has_value());
        if (a.tight_bound) CHECK_NEAR(*a.tight_bound, *b.tight_bound, 2e-9);
        CHECK(a.equichordal.holds == b.equichordal.holds);
        CHECK(a.strongly_simplicial.holds == b.strongly_simplicial.holds);
        CHECK(a.equiisoclinic.holds == b.equiisoclinic.holds);
        if (a.equiisoclinic.value && b.equiisoclinic.value) {
            CHECK_NEAR(*a.equiisoclinic.value, *b.equiisoclinic.value, 2e-9);
        }
        if (std::isfinite(a.min_chordal_sq)) {
            CHECK_NEAR(a.min_chordal_sq, b.min_chordal_sq, 2e-9);
        }
        CHECK(a.regime == b.regime);
        CHECK(a.simplex_saturated == b.simplex_saturated);
        CHECK(a.orthoplex_saturated == b.orthoplex_saturated);
    }
}

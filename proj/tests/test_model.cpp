#include <cmath>
#include <string>
#include <vector>

#include <doctest.h>

#include "grasspack/generators.hpp"
#include "grasspack/model.hpp"
#include "test_support.hpp"

using namespace grasspack;

TEST_CASE("make_subspace accepts orthonormal bases and records parameters") {
    const Subspace w = make_subspace(FieldTag::Real, Matrix{{1.0}, {0.0}, {0.0}});
    CHECK(w.field() == FieldTag::Real);
    CHECK(w.ambient_dim() == 3);
    CHECK(w.dim() == 1);

    // the whole space is a legal subspace
    const Subspace full = make_subspace(FieldTag::Real, Matrix::identity(2));
    CHECK(full.dim() == 2);
}

TEST_CASE("make_subspace rejects bad dimensions") {
    CHECK_THROWS_AS(make_subspace(FieldTag::Real, Matrix(3, 0)), ValidationError);
    CHECK_THROWS_AS(make_subspace(FieldTag::Real, Matrix{{1.0, 0.0}}),
                    ValidationError);  // m = 2 > k = 1
}

TEST_CASE("make_subspace rejects non-orthonormal columns with the deviation") {
    try {
        make_subspace(FieldTag::Real, Matrix{{1.0}, {1.0}});
        FAIL("expected ValidationError");
    } catch (const ValidationError& e) {
        CHECK(std::string(e.what()).find("orthonormal") != std::string::npos);
    }

    // nearly orthonormal: admitted only once tol covers the deviation
    const double eps = 1e-6;
    const Matrix tilted{{std::sqrt(1.0 - eps)}, {std::sqrt(eps)},
                        {0.0}};  // unit column
    const Matrix pair = [&] {
        Matrix m(3, 2);
        m(0, 0) = tilted(0, 0);
        m(1, 0) = tilted(1, 0);
        m(1, 1) = 1.0;  // overlaps column 0 by sqrt(eps)
        return m;
    }();
    CHECK_THROWS_AS(make_subspace(FieldTag::Real, pair), ValidationError);
    CHECK_NOTHROW(make_subspace(FieldTag::Real, pair, Tolerance(5e-3)));
}

TEST_CASE("make_subspace enforces the field claim") {
    const Complex i(0.0, 1.0);
    const Matrix cx{{i}, {0.0}};
    CHECK_THROWS_AS(make_subspace(FieldTag::Real, cx), ValidationError);
    CHECK_NOTHROW(make_subspace(FieldTag::Complex, cx));
}

TEST_CASE("projector is Hermitian, idempotent, and basis independent") {
    const double r = 1.0 / std::sqrt(2.0);
    const Subspace w =
        make_subspace(FieldTag::Real, Matrix{{r, r}, {r, -r}, {0.0, 0.0}});
    const Matrix p = projector(w);
    REQUIRE(p.rows() == 3);
    CHECK(max_abs_diff(p, adjoint(p)) <= 1e-12);
    CHECK(max_abs_diff(p * p, p) <= 1e-12);
    CHECK_NEAR(trace(p).real(), 2.0, 1e-12);

    // same plane through a different basis: the coordinate planes
    const Subspace same = make_subspace(
        FieldTag::Real, Matrix{{1.0, 0.0}, {0.0, 1.0}, {0.0, 0.0}});
    CHECK(max_abs_diff(projector(w), projector(same)) <= 1e-12);
}

TEST_CASE("subspaces_equal compares spans, not bases") {
    const double r = 1.0 / std::sqrt(2.0);
    const Subspace a = make_subspace(
        FieldTag::Real, Matrix{{1.0, 0.0}, {0.0, 1.0}, {0.0, 0.0}});
    const Subspace b =
        make_subspace(FieldTag::Real, Matrix{{r, r}, {r, -r}, {0.0, 0.0}});
    CHECK(subspaces_equal(a, b));

    const Subspace c = make_subspace(
        FieldTag::Real, Matrix{{1.0, 0.0}, {0.0, 0.0}, {0.0, 1.0}});
    CHECK(!subspaces_equal(a, c));

    // parameter mismatch is an error, not false
    const Subspace line = make_subspace(FieldTag::Real, Matrix{{1.0}, {0.0}, {0.0}});
    CHECK_THROWS_AS(subspaces_equal(a, line), ValidationError);
    const Subspace complex_plane = make_subspace(
        FieldTag::Complex, Matrix{{1.0, 0.0}, {0.0, 1.0}, {0.0, 0.0}});
    CHECK_THROWS_AS(subspaces_equal(a, complex_plane), ValidationError);
}

TEST_CASE("subspaces_equal is an equivalence relation on a mixed set") {
    std::vector<Subspace> set;
    const Packing rp = random_packing(FieldTag::Complex, 3, 1, 4, Seed{42});
    for (std::size_t i = 0; i < rp.size(); ++i) set.push_back(rp[i]);
    set.push_back(rp[0]);  // duplicate on purpose

    for (std::size_t x = 0; x < set.size(); ++x) {
        CHECK(subspaces_equal(set[x], set[x]));
        for (std::size_t y = 0; y < set.size(); ++y) {
            CHECK(subspaces_equal(set[x], set[y]) ==
                  subspaces_equal(set[y], set[x]));
            for (std::size_t z = 0; z < set.size(); ++z) {
                if (subspaces_equal(set[x], set[y]) &&
                    subspaces_equal(set[y], set[z])) {
                    CHECK(subspaces_equal(set[x], set[z]));
                }
            }
        }
    }
}

TEST_CASE("make_packing requires a uniform non-empty family") {
    CHECK_THROWS_AS(make_packing({}), ValidationError);

    const Subspace r3 = make_subspace(FieldTag::Real, Matrix{{1.0}, {0.0}, {0.0}});
    const Subspace r2 = make_subspace(FieldTag::Real, Matrix{{1.0}, {0.0}});
    CHECK_THROWS_AS(make_packing({r3, r2}), ValidationError);

    const Subspace c3 =
        make_subspace(FieldTag::Complex, Matrix{{1.0}, {0.0}, {0.0}});
    CHECK_THROWS_AS(make_packing({r3, c3}), ValidationError);

    const Subspace plane = make_subspace(
        FieldTag::Real, Matrix{{1.0, 0.0}, {0.0, 1.0}, {0.0, 0.0}});
    CHECK_THROWS_AS(make_packing({r3, plane}), ValidationError);
}

TEST_CASE("packing accessors and single-subspace packings") {
    const Packing p = testsupport::mercedes_lines();
    CHECK(p.field() == FieldTag::Real);
    CHECK(p.ambient_dim() == 2);
    CHECK(p.dim() == 1);
    CHECK(p.size() == 3);
    CHECK(p[1].basis()(0, 0).real() == doctest::Approx(0.5));
    CHECK(p.subspaces().size() == 3);

    const Subspace w = make_subspace(FieldTag::Real, Matrix{{1.0}, {0.0}});
    const Packing solo = make_packing({w});
    CHECK(solo.size() == 1);
}

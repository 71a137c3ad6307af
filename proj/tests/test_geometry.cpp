// Projective points, the Jacobian criterion, curve smoothness with its
// certificates, projection from P_0, fibers, and genus summaries.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include <grodeg/corpus.hpp>
#include <grodeg/error.hpp>
#include <grodeg/geometry.hpp>
#include <grodeg/groebner.hpp>
#include <grodeg/poly_text.hpp>

using namespace grodeg;

namespace {

const Field QQ = Field::rationals();
const MonomialOrder LEX = MonomialOrder::lex();

Ideal ideal_of(const Field& f, int nvars, std::vector<std::string> texts) {
  std::vector<Polynomial> gens;
  for (const auto& t : texts) gens.push_back(parse_polynomial(t, f, nvars));
  return Ideal::from_generators(f, nvars, std::move(gens));
}

Scalar q(long v) { return Scalar::from_int(QQ, v); }

}  // namespace

TEST_CASE("projective points normalize on construction") {
  ProjectivePoint p = ProjectivePoint::from_coords(QQ, {q(0), q(2), q(4)});
  CHECK(p.coord(0) == q(0));
  CHECK(p.coord(1) == q(1));
  CHECK(p.coord(2) == q(2));
  CHECK(p == ProjectivePoint::from_coords(QQ, {q(0), q(-1), q(-2)}));
  CHECK(p.to_string() == "[0:1:2]");
  CHECK_FALSE(p.coordinate_index().has_value());

  ProjectivePoint e2 = ProjectivePoint::coordinate(QQ, 4, 2);
  CHECK(e2.to_string() == "[0:0:1:0]");
  CHECK(e2.coordinate_index() == 2);
  CHECK_THROWS(ProjectivePoint::from_coords(QQ, {q(0), q(0)}));
}

TEST_CASE("point membership on the twisted cubic") {
  Ideal tc = rational_normal_curve(QQ, 3);
  // [1 : t : t^2 : t^3] at t = 2
  CHECK(point_on_variety(tc, ProjectivePoint::from_coords(QQ, {q(1), q(2), q(4), q(8)})));
  CHECK(point_on_variety(tc, ProjectivePoint::coordinate(QQ, 4, 0)));
  CHECK(point_on_variety(tc, ProjectivePoint::coordinate(QQ, 4, 3)));
  CHECK_FALSE(point_on_variety(tc, ProjectivePoint::from_coords(QQ, {q(1), q(1), q(2), q(3)})));
}

TEST_CASE("jacobian ranks at coordinate points, worked examples") {
  // star minor ideal: rank 2 at P_0, and the curve has codimension 2
  Ideal star = star_example(QQ);
  ProjectivePoint p0 = ProjectivePoint::coordinate(QQ, 4, 0);
  CHECK(jacobian_rank_at(star, p0) == 2);
  CHECK(is_nonsingular_at(star, p0, 1));

  // the triangle relation X0X1X2 has a vanishing gradient at every
  // coordinate point
  Ideal tri = ideal_of(QQ, 3, {"X0*X1*X2"});
  ProjectivePoint e0 = ProjectivePoint::coordinate(QQ, 3, 0);
  CHECK(jacobian_rank_at(tri, e0) == 0);
  CHECK_FALSE(is_nonsingular_at(tri, e0, 1));

  // smooth conic
  Ideal conic = ideal_of(QQ, 3, {"X0*X2 - X1^2"});
  CHECK(jacobian_rank_at(conic, e0) == 1);
  CHECK(is_nonsingular_at(conic, e0, 1));

  CHECK_THROWS(jacobian_rank_at(conic, ProjectivePoint::from_coords(QQ, {q(1), q(1), q(2)})));
}

TEST_CASE("free vertex zero transfers to nonsingularity at P0 on the corpus") {
  // initial complexes with 0 free: path (twisted cubic), star, pendant triangle
  ProjectivePoint p0 = ProjectivePoint::coordinate(QQ, 4, 0);
  CHECK(is_nonsingular_at(rational_normal_curve(QQ, 3), p0, 1));
  CHECK(is_nonsingular_at(star_example(QQ), p0, 1));
  Ideal pend = ideal_of(QQ, 4, {"X0*X2", "X0*X3", "X1*X2*X3"});
  CHECK(is_nonsingular_at(pend, p0, 1));
  // 0 not free: the 4-cycle and the triangle are singular at P0
  CHECK_FALSE(is_nonsingular_at(ideal_of(QQ, 4, {"X0*X2", "X1*X3"}), p0, 1));
  CHECK_FALSE(is_nonsingular_at(ideal_of(QQ, 3, {"X0*X1*X2"}),
                                ProjectivePoint::coordinate(QQ, 3, 0), 1));
}

TEST_CASE("smoothness of the rational normal curves with early stopping") {
  // minors_used pins the deterministic minor stream; powers certify emptiness
  struct Expect {
    int n;
    long used, total;
  };
  for (auto [n, used, total] : {Expect{3, 18, 18}, Expect{4, 88, 200},
                                Expect{5, 704, 3150}}) {
    SmoothnessReport r = is_smooth_projective_curve(rational_normal_curve(QQ, n));
    CHECK(r.smooth());
    CHECK(r.minors_used == used);
    CHECK(r.minors_total == total);
    CHECK_FALSE(r.witness.has_value());
    REQUIRE(r.certified_powers.size() == static_cast<size_t>(n) + 1);
    for (long p : r.certified_powers) {
      CHECK(p >= 1);
      CHECK(p <= 8);
    }
  }
  CHECK(is_smooth_projective_curve(star_example(QQ)).smooth());
}

TEST_CASE("singular curves give coordinate witnesses when one exists") {
  SmoothnessReport c4 = is_smooth_projective_curve(ideal_of(QQ, 4, {"X0*X2", "X1*X3"}));
  CHECK(c4.verdict == SmoothVerdict::singular);
  REQUIRE(c4.witness.has_value());
  CHECK(*c4.witness == ProjectivePoint::coordinate(QQ, 4, 0));
  CHECK(c4.minors_used == 0);  // the probe finds the witness before any minor

  SmoothnessReport tri = is_smooth_projective_curve(ideal_of(QQ, 3, {"X0*X1*X2"}));
  CHECK(tri.verdict == SmoothVerdict::singular);
  CHECK(*tri.witness == ProjectivePoint::coordinate(QQ, 3, 0));

  // nodal cubic, node at the coordinate point [0:0:1]
  SmoothnessReport nodal =
      is_smooth_projective_curve(ideal_of(QQ, 3, {"X1^2*X2 - X0^3 - X0^2*X2"}));
  CHECK(nodal.verdict == SmoothVerdict::singular);
  CHECK(*nodal.witness == ProjectivePoint::coordinate(QQ, 3, 2));
}

TEST_CASE("singularities away from coordinate points") {
  // (X0-X1)^2 X2 = (X0-X2)^3 is singular exactly at [1:1:1]
  Ideal hidden = ideal_of(
      QQ, 3,
      {"4*X0^2*X2 - 2*X0*X1*X2 + X1^2*X2 - X0^3 - 3*X0*X2^2 + X2^3"});
  SUBCASE("over the rationals the verdict carries no witness") {
    SmoothnessReport r = is_smooth_projective_curve(hidden);
    CHECK(r.verdict == SmoothVerdict::singular);
    CHECK_FALSE(r.witness.has_value());
    CHECK(r.certificate.find("dimension 1") != std::string::npos);
  }
  SUBCASE("over F2 exhaustive point search finds it") {
    Field f2 = Field::prime(2);
    Ideal mod2 = ideal_of(f2, 3, {"X1^2*X2 + X0^3 + X0*X2^2 + X2^3"});
    SmoothnessReport r = is_smooth_projective_curve(mod2);
    CHECK(r.verdict == SmoothVerdict::singular);
    REQUIRE(r.witness.has_value());
    CHECK(*r.witness == ProjectivePoint::from_coords(
                            f2, {Scalar::one(f2), Scalar::one(f2), Scalar::one(f2)}));
  }
}

TEST_CASE("tight power bounds leave the verdict inconclusive") {
  SmoothnessOptions tight;
  tight.power_bound = 1;
  SmoothnessReport r = is_smooth_projective_curve(rational_normal_curve(QQ, 3), tight);
  CHECK(r.verdict == SmoothVerdict::inconclusive);
  CHECK_FALSE(r.smooth());
  for (long p : r.certified_powers) CHECK(p == 0);
}

TEST_CASE("smoothness rejects non-curves") {
  CHECK_THROWS_AS(is_smooth_projective_curve(ideal_of(QQ, 4, {"X0*X1"})),
                  DimensionError);
  CHECK_THROWS_AS(is_smooth_projective_curve(ideal_of(QQ, 3, {"X0", "X1", "X2^2"})),
                  DimensionError);
}

TEST_CASE("genus summaries of the named curves") {
  CurveSummary tc = genus(rational_normal_curve(QQ, 3), LEX);
  CHECK(tc.hilbert_polynomial == std::vector<mpq_class>{1, 3});
  CHECK(tc.degree == 3);
  CHECK(tc.genus == 0);
  CHECK(tc.smooth == SmoothVerdict::smooth);
  CHECK(tc.singular_coordinate_points.empty());

  CurveSummary star = genus(star_example(QQ), LEX);
  CHECK(star.hilbert_polynomial == std::vector<mpq_class>{1, 3});
  CHECK(star.genus == 0);
  CHECK(star.smooth == SmoothVerdict::smooth);

  // the 4-cycle is a square of lines: arithmetic genus 1, nodes at all four
  // coordinate points
  CurveSummary c4 = genus(ideal_of(QQ, 4, {"X0*X2", "X1*X3"}), LEX);
  CHECK(c4.hilbert_polynomial == std::vector<mpq_class>{0, 4});
  CHECK(c4.degree == 4);
  CHECK(c4.genus == 1);
  CHECK(c4.smooth == SmoothVerdict::singular);
  CHECK(c4.singular_coordinate_points.size() == 4);

  // smooth elliptic quartic: intersection of two quadrics in P^3
  CurveSummary ci = genus(
      ideal_of(QQ, 4, {"X0^2 + X1*X2 + X3^2", "X1^2 + X2*X3"}), LEX);
  CHECK(ci.hilbert_polynomial == std::vector<mpq_class>{0, 4});
  CHECK(ci.degree == 4);
  CHECK(ci.genus == 1);
  CHECK(ci.smooth == SmoothVerdict::smooth);

  // Fermat cubic
  CurveSummary fermat = genus(ideal_of(QQ, 3, {"X0^3 + X1^3 + X2^3"}), LEX);
  CHECK(fermat.degree == 3);
  CHECK(fermat.genus == 1);
  CHECK(fermat.smooth == SmoothVerdict::smooth);

  CHECK_THROWS_AS(genus(ideal_of(QQ, 4, {"X0*X1"}), LEX), DimensionError);
  CHECK_THROWS_AS(genus(ideal_of(QQ, 3, {"X0", "X1", "X2^2"}), LEX), DimensionError);
}

TEST_CASE("projection from P0 extracts the X0-free subbasis") {
  SUBCASE("twisted cubic onto the conic") {
    Ideal tc = rational_normal_curve(QQ, 3);
    GroebnerBasis basis = reduced_basis(buchberger(tc, LEX));
    ProjectionResult pr = project_from_p0(tc, basis);
    CHECK(pr.variable_map == std::vector<int>{1, 2, 3});
    REQUIRE(pr.basis.size() == 1);
    CHECK(pr.basis.elements()[0] == parse_polynomial("X0*X2 - X1^2", QQ, 3));

    // route comparison: block elimination gives the same ideal downstairs
    Ideal big = eliminate(tc, 1, LEX);
    std::vector<Polynomial> dropped;
    for (const auto& g : big.generators()) dropped.push_back(drop_variable(g, 0));
    CHECK(same_ideal(Ideal::from_generators(QQ, 3, dropped),
                     pr.basis.as_ideal(), LEX));
  }
  SUBCASE("star example") {
    Ideal star = star_example(QQ);
    GroebnerBasis basis = reduced_basis(buchberger(star, LEX));
    ProjectionResult pr = project_from_p0(star, basis);
    REQUIRE(pr.basis.size() == 1);
    CHECK(pr.basis.elements()[0] ==
          parse_polynomial("X0*X1 - X0*X2 - X2^2", QQ, 3));
  }
  SUBCASE("0 must be free in the initial complex") {
    Ideal c4 = ideal_of(QQ, 4, {"X0*X2", "X1*X3"});
    GroebnerBasis basis = reduced_basis(buchberger(c4, LEX));
    CHECK_THROWS_AS(project_from_p0(c4, basis), PreconditionError);
  }
  SUBCASE("the basis must be 0-reduced") {
    // X0*X3 leads the first element and sits in the second support
    Ideal raw = ideal_of(QQ, 4, {"X0*X3 - X2^2", "X0*X2 + X0*X3"});
    GroebnerBasis dirty =
        GroebnerBasis::unchecked(QQ, 4, raw.generators(), LEX);
    CHECK_THROWS_AS(project_from_p0(raw, dirty), PreconditionError);
  }
}

TEST_CASE("fibers over coordinate points of the image") {
  SUBCASE("star example over P'_1") {
    Ideal star = star_example(QQ);
    GroebnerBasis basis = reduced_basis(buchberger(star, LEX));
    FiberResult f = fiber_over_coordinate_point(star, basis, 1);
    CHECK(f.q == ProjectivePoint::coordinate(QQ, 4, 1));
    CHECK(f.mu.is_zero());
    CHECK(f.lambda == Scalar::one(QQ));
    CHECK(f.alpha.is_zero());
    CHECK(f.witness_index == 1);
    CHECK(f.on_curve);
    CHECK_FALSE(f.q_singular);
    CHECK_FALSE(f.image_singular);
    CHECK(f.transfer_agrees());
  }
  SUBCASE("twisted cubic over P'_3, and the missing-witness hypothesis") {
    Ideal tc = rational_normal_curve(QQ, 3);
    GroebnerBasis basis = reduced_basis(buchberger(tc, LEX));
    FiberResult f = fiber_over_coordinate_point(tc, basis, 3);
    CHECK(f.q == ProjectivePoint::coordinate(QQ, 4, 3));
    CHECK(f.witness_index == 3);
    CHECK(f.mu.is_zero());
    CHECK(f.transfer_agrees());
    // no basis element with leading monomial X0*X_j carries X0*X1
    CHECK_THROWS_AS(fiber_over_coordinate_point(tc, basis, 1), PreconditionError);
    // P'_2 = [0:1:0] does not lie on the image conic X1*X3 = X2^2
    CHECK_THROWS_AS(fiber_over_coordinate_point(tc, basis, 2), PreconditionError);
  }
  SUBCASE("a nonzero mu appears after a triangular change of coordinates") {
    // X0 -> X0 + 2*X3 applied to the twisted cubic
    Ideal moved = ideal_of(QQ, 4,
                           {"X0*X2 - X1^2 + 2*X2*X3", "X0*X3 - X1*X2 + 2*X3^2",
                            "X1*X3 - X2^2"});
    GroebnerBasis basis = reduced_basis(buchberger(moved, LEX));
    FiberResult f = fiber_over_coordinate_point(moved, basis, 3);
    CHECK(f.lambda == Scalar::one(QQ));
    CHECK(f.alpha == q(2));
    CHECK(f.mu == q(-2));
    CHECK(f.q == ProjectivePoint::from_coords(QQ, {q(-2), q(0), q(0), q(1)}));
    CHECK(f.on_curve);
    CHECK(f.transfer_agrees());
  }
  SUBCASE("a singular fiber point maps to a singular image point") {
    // pendant triangle: 0 is free, the triangle part stays singular
    Ideal pend = ideal_of(QQ, 4, {"X0*X2", "X0*X3", "X1*X2*X3"});
    GroebnerBasis basis = reduced_basis(buchberger(pend, LEX));
    FiberResult f = fiber_over_coordinate_point(pend, basis, 2);
    CHECK(f.q == ProjectivePoint::coordinate(QQ, 4, 2));
    CHECK(f.on_curve);
    CHECK(f.q_singular);
    CHECK(f.image_singular);
    CHECK(f.transfer_agrees());
  }
}

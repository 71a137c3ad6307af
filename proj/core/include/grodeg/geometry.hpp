#ifndef GRODEG_GEOMETRY_HPP
#define GRODEG_GEOMETRY_HPP

#include <optional>
#include <string>
#include <vector>

#include "grodeg/groebner.hpp"
#include "grodeg/hilbert.hpp"

namespace grodeg {

// Point of projective space P^{nvars-1}, normalized so the first nonzero
// coordinate is 1; equality is equality of normalized vectors.
class ProjectivePoint {
 public:
  static ProjectivePoint from_coords(const Field& f,
                                     std::vector<Scalar> coords);
  // P_a: the point with a 1 in position a and zeros elsewhere.
  static ProjectivePoint coordinate(const Field& f, int nvars, int a);

  const Field& field() const { return field_; }
  int nvars() const { return static_cast<int>(coords_.size()); }
  const std::vector<Scalar>& coords() const { return coords_; }
  const Scalar& coord(int i) const { return coords_[static_cast<size_t>(i)]; }
  // Index of P_a when the point is a coordinate point, otherwise nullopt.
  std::optional<int> coordinate_index() const;

  bool operator==(const ProjectivePoint& o) const {
    return field_ == o.field_ && coords_ == o.coords_;
  }

  std::string to_string() const;  // "[1:0:3]"

 private:
  ProjectivePoint(const Field& f, std::vector<Scalar> coords)
      : field_(f), coords_(std::move(coords)) {}
  Field field_;
  std::vector<Scalar> coords_;
};

// True iff every generator vanishes at the point.  The ideal must be
// homogeneous for this to be well defined.
bool point_on_variety(const Ideal& ideal, const ProjectivePoint& p);

// Rank of the Jacobian of the generators evaluated at p, over the exact
// field.  Requires p to lie on the variety.  The generators should form a
// Groebner basis (or any honest generating set) of the ideal: the rank at a
// point of the variety does not depend on that choice.
long jacobian_rank_at(const Ideal& ideal, const ProjectivePoint& p);

// Jacobian criterion: nonsingular iff the rank equals the codimension
// (nvars - 1) - dim_x of the variety in its projective space.
bool is_nonsingular_at(const Ideal& ideal, const ProjectivePoint& p,
                       long dim_x);

enum class SmoothVerdict { smooth, singular, inconclusive };
std::string to_string(SmoothVerdict v);

struct SmoothnessOptions {
  // Emptiness of the singular locus is certified per variable: some
  // X_i^k, k <= power_bound, must have normal form 0 modulo the singular
  // locus ideal.
  long power_bound = 8;
  // Search for an explicit singular point after a singular verdict:
  // coordinate points first, then (over a prime field) every point of
  // projective space.
  bool witness_search = true;
  BuchbergerOptions gb;
};

struct SmoothnessReport {
  SmoothVerdict verdict = SmoothVerdict::inconclusive;
  Field field = Field::rationals();
  std::string certificate;
  std::optional<ProjectivePoint> witness;
  // certified_powers[i] = smallest k with X_i^k in the singular locus ideal,
  // 0 when none was found within the bound.
  std::vector<long> certified_powers;
  long minors_used = 0;
  long minors_total = 0;

  bool smooth() const { return verdict == SmoothVerdict::smooth; }
};

// Decides whether the projective curve V(I) is smooth over the coefficient
// field.  Forms the singular-locus ideal J = I + (c x c minors of the
// Jacobian of a reduced Groebner basis), c the codimension, feeding minors in
// a deterministic shuffled order and stopping early once every variable has a
// power certificate X_i^k in J (then V(J) is empty a fortiori).  When
// certificates stay out of reach, a positive-dimensional initial ideal of the
// full J certifies a nonempty singular locus; otherwise the verdict is
// inconclusive.  DimensionError unless V(I) has projective dimension 1.
SmoothnessReport is_smooth_projective_curve(const Ideal& ideal,
                                            const SmoothnessOptions& opts = {});

struct ProjectionResult {
  GroebnerBasis basis;            // over nvars-1 variables, new X_i = old X_{i+1}
  std::vector<int> variable_map;  // new index -> old index
};

// Projection of the curve from P_0 onto the hyperplane X0 = 0: the ideal
// I' = I cap K[X1..Xn], computed by extracting the basis elements whose
// leading monomial avoids X0 and cross-checked against block-order
// elimination.  Requires a 0-reduced basis whose initial complex has 0 as a
// free vertex; the extracted set is re-verified as a Groebner basis of the
// smaller ring.
ProjectionResult project_from_p0(const Ideal& ideal,
                                 const GroebnerBasis& basis,
                                 const BuchbergerOptions& opts = {});

struct FiberResult {
  ProjectivePoint q;   // the unique preimage on the curve, in the big space
  Scalar mu;           // first coordinate of q: mu = -alpha/lambda
  Scalar lambda;       // coefficient of X0*X_a in g_{0j}
  Scalar alpha;        // coefficient of X_a^2 in g_{0j}
  int witness_index;   // the j of g_{0j}
  bool on_curve;       // q satisfies every generator
  bool q_singular;
  bool image_singular;  // the coordinate point downstairs
  bool transfer_agrees() const { return q_singular == image_singular; }
};

// The fiber of the projection over the coordinate point P'_a of the image
// curve.  Needs a basis element g_{0j} (leading monomial X0*X_j) whose
// support contains X0*X_a; its restriction to the line through P_0 and P_a
// has degree 1, which pins the unique preimage q = [mu:0:...:1:...:0].
// PreconditionError when P'_a is not on the image curve or no witness j
// exists.
FiberResult fiber_over_coordinate_point(const Ideal& ideal,
                                        const GroebnerBasis& basis, int a,
                                        const BuchbergerOptions& opts = {});

struct CurveSummary {
  std::vector<mpq_class> hilbert_polynomial;  // constant term first
  mpz_class degree;
  mpz_class genus;  // arithmetic genus 1 - P(0)
  SmoothVerdict smooth = SmoothVerdict::inconclusive;
  std::vector<ProjectivePoint> singular_coordinate_points;
};

// Degree, arithmetic genus, and smoothness of the curve V(I).  The Hilbert
// polynomial is computed from the initial ideal under `ord` (the Hilbert
// functions of I and in(I) agree).  DimensionError unless the Hilbert
// polynomial is linear.
CurveSummary genus(const Ideal& ideal, const MonomialOrder& ord,
                   const SmoothnessOptions& opts = {});

}  // namespace grodeg

#endif

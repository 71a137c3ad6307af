#include "grodeg/geometry.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "grodeg/collapse.hpp"
#include "grodeg/error.hpp"
#include "grodeg/linalg.hpp"

namespace grodeg {

ProjectivePoint ProjectivePoint::from_coords(const Field& f,
                                             std::vector<Scalar> coords) {
  if (coords.empty()) throw DimensionError("projective point needs coordinates");
  size_t lead = coords.size();
  for (size_t i = 0; i < coords.size(); ++i) {
    if (coords[i].field() != f) {
      throw FieldMismatchError("point coordinate over " +
                               coords[i].field().to_string() + " in a " +
                               f.to_string() + " point");
    }
    if (lead == coords.size() && !coords[i].is_zero()) lead = i;
  }
  if (lead == coords.size()) {
    throw PreconditionError("all projective coordinates are zero");
  }
  Scalar inv = coords[lead].inverse();
  for (Scalar& c : coords) c = c * inv;
  return ProjectivePoint(f, std::move(coords));
}

ProjectivePoint ProjectivePoint::coordinate(const Field& f, int nvars, int a) {
  if (a < 0 || a >= nvars) {
    throw DimensionError("coordinate point index " + std::to_string(a) +
                         " out of range");
  }
  std::vector<Scalar> coords(static_cast<size_t>(nvars), Scalar::zero(f));
  coords[static_cast<size_t>(a)] = Scalar::one(f);
  return ProjectivePoint(f, std::move(coords));
}

std::optional<int> ProjectivePoint::coordinate_index() const {
  int hit = -1;
  for (int i = 0; i < nvars(); ++i) {
    if (coord(i).is_zero()) continue;
    if (hit >= 0 || !coord(i).is_one()) return std::nullopt;
    hit = i;
  }
  return hit;
}

std::string ProjectivePoint::to_string() const {
  std::string out = "[";
  for (size_t i = 0; i < coords_.size(); ++i) {
    if (i > 0) out += ":";
    out += coords_[i].to_string();
  }
  out += "]";
  return out;
}

bool point_on_variety(const Ideal& ideal, const ProjectivePoint& p) {
  if (!ideal.is_homogeneous()) {
    throw PreconditionError("projective membership needs a homogeneous ideal");
  }
  if (ideal.nvars() != p.nvars()) {
    throw DimensionError("point in P^" + std::to_string(p.nvars() - 1) +
                         " against an ideal in " +
                         std::to_string(ideal.nvars()) + " variables");
  }
  for (const Polynomial& g : ideal.generators()) {
    if (!g.evaluate(p.coords()).is_zero()) return false;
  }
  return true;
}

namespace {

std::vector<std::vector<Polynomial>> jacobian(
    const std::vector<Polynomial>& gens, const Field& field, int nvars) {
  std::vector<std::vector<Polynomial>> jac;
  jac.reserve(gens.size());
  for (const Polynomial& g : gens) {
    std::vector<Polynomial> row;
    row.reserve(static_cast<size_t>(nvars));
    for (int k = 0; k < nvars; ++k) row.push_back(g.derivative(k));
    jac.push_back(std::move(row));
  }
  (void)field;
  return jac;
}

long jacobian_rank(const std::vector<std::vector<Polynomial>>& jac,
                   const ProjectivePoint& p) {
  if (jac.empty()) return 0;
  std::vector<std::vector<Scalar>> rows;
  rows.reserve(jac.size());
  for (const auto& jrow : jac) {
    std::vector<Scalar> row;
    row.reserve(jrow.size());
    for (const Polynomial& entry : jrow) row.push_back(entry.evaluate(p.coords()));
    rows.push_back(std::move(row));
  }
  return matrix_rank(std::move(rows), p.field());
}

}  // namespace

long jacobian_rank_at(const Ideal& ideal, const ProjectivePoint& p) {
  if (!point_on_variety(ideal, p)) {
    throw PreconditionError("Jacobian rank requested at " + p.to_string() +
                            ", which is not on the variety");
  }
  return jacobian_rank(jacobian(ideal.generators(), ideal.field(),
                                ideal.nvars()),
                       p);
}

bool is_nonsingular_at(const Ideal& ideal, const ProjectivePoint& p,
                       long dim_x) {
  long codim = ideal.nvars() - 1 - dim_x;
  return jacobian_rank_at(ideal, p) == codim;
}

std::string to_string(SmoothVerdict v) {
  switch (v) {
    case SmoothVerdict::smooth: return "smooth";
    case SmoothVerdict::singular: return "singular";
    case SmoothVerdict::inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

namespace {

uint64_t fnv1a(uint64_t seed, uint64_t value) {
  uint64_t h = seed;
  for (int i = 0; i < 8; ++i) {
    h ^= (value >> (8 * i)) & 0xff;
    h *= 0x100000001b3ULL;
  }
  return h;
}

// Determinant of the square polynomial matrix by Laplace expansion along
// rows, memoized over column subsets.
Polynomial poly_det(const std::vector<std::vector<const Polynomial*>>& m,
                    const Field& field, int nvars) {
  size_t c = m.size();
  std::map<uint32_t, Polynomial> memo;
  auto rec = [&](auto&& self, uint32_t mask) -> Polynomial {
    auto it = memo.find(mask);
    if (it != memo.end()) return it->second;
    size_t row = c - static_cast<size_t>(__builtin_popcount(mask));
    Polynomial det(field, nvars);
    if (row == c) {
      det = Polynomial::constant(field, nvars, Scalar::one(field));
    } else {
      bool negate = false;
      for (size_t j = 0; j < c; ++j) {
        if (!(mask & (uint32_t{1} << j))) continue;
        const Polynomial& entry = *m[row][j];
        if (!entry.is_zero()) {
          Polynomial sub = self(self, mask & ~(uint32_t{1} << j));
          Polynomial contrib = entry * sub;
          det = negate ? det - contrib : det + contrib;
        }
        negate = !negate;
      }
    }
    memo.emplace(mask, det);
    return det;
  };
  return rec(rec, (uint32_t{1} << c) - 1);
}

// All normalized points of P^{n-1} over a prime field, first nonzero
// coordinate 1.
std::vector<ProjectivePoint> all_points(const Field& f, int nvars) {
  uint32_t p = f.characteristic();
  std::vector<ProjectivePoint> out;
  for (int lead = 0; lead < nvars; ++lead) {
    int tail = nvars - lead - 1;
    std::vector<uint32_t> digits(static_cast<size_t>(tail), 0);
    while (true) {
      std::vector<Scalar> coords(static_cast<size_t>(nvars), Scalar::zero(f));
      coords[static_cast<size_t>(lead)] = Scalar::one(f);
      for (int i = 0; i < tail; ++i) {
        coords[static_cast<size_t>(lead + 1 + i)] =
            Scalar::from_int(f, digits[static_cast<size_t>(i)]);
      }
      out.push_back(ProjectivePoint::from_coords(f, std::move(coords)));
      int i = tail - 1;
      while (i >= 0 && digits[static_cast<size_t>(i)] == p - 1) {
        digits[static_cast<size_t>(i)] = 0;
        --i;
      }
      if (i < 0) break;
      ++digits[static_cast<size_t>(i)];
    }
  }
  return out;
}

// Coordinate points of the variety whose Jacobian rank falls short of the
// expected codimension.
std::vector<ProjectivePoint> singular_coordinate_points(
    const Ideal& ideal, const std::vector<std::vector<Polynomial>>& jac,
    long codim) {
  std::vector<ProjectivePoint> out;
  for (int a = 0; a < ideal.nvars(); ++a) {
    ProjectivePoint pa =
        ProjectivePoint::coordinate(ideal.field(), ideal.nvars(), a);
    if (!point_on_variety(ideal, pa)) continue;
    if (jacobian_rank(jac, pa) < codim) out.push_back(std::move(pa));
  }
  return out;
}

}  // namespace

SmoothnessReport is_smooth_projective_curve(const Ideal& ideal,
                                            const SmoothnessOptions& opts) {
  const Field& field = ideal.field();
  int n = ideal.nvars();
  MonomialOrder ord = MonomialOrder::degrevlex();
  GroebnerBasis gb = reduced_basis(buchberger(ideal, ord, opts.gb));
  HilbertSeries hs = HilbertSeries::from_monomial_ideal(gb.initial_ideal());
  if (hs.krull_dimension() != 2) {
    throw DimensionError("V(I) has projective dimension " +
                         std::to_string(hs.krull_dimension() - 1) +
                         ", expected a curve");
  }
  long codim = n - 2;

  SmoothnessReport report;
  report.field = field;
  report.certified_powers.assign(static_cast<size_t>(n), 0);

  Ideal curve = gb.as_ideal();
  std::vector<std::vector<Polynomial>> jac =
      jacobian(gb.elements(), field, n);

  // fast path: a singular coordinate point settles the verdict outright
  std::vector<ProjectivePoint> bad =
      singular_coordinate_points(curve, jac, codim);
  long g = static_cast<long>(gb.size());
  long row_sets = 1, col_sets = 1;
  for (long k = 0; k < codim; ++k) {
    row_sets = row_sets * (g - k) / (k + 1);
    col_sets = col_sets * (n - k) / (k + 1);
  }
  report.minors_total = row_sets * col_sets;
  if (!bad.empty()) {
    report.verdict = SmoothVerdict::singular;
    report.witness = bad.front();
    report.certificate = "coordinate point " + bad.front().to_string() +
                         " lies on the curve with Jacobian rank below " +
                         std::to_string(codim);
    return report;
  }

  // enumerate (row set, column set) pairs and visit them in a deterministic
  // shuffled order so structured inputs cannot push the useful minors last
  std::vector<std::pair<std::vector<int>, std::vector<int>>> minors;
  std::vector<int> rows(static_cast<size_t>(codim));
  std::iota(rows.begin(), rows.end(), 0);
  auto next_subset = [](std::vector<int>& idx, int limit) {
    int k = static_cast<int>(idx.size());
    int i = k - 1;
    while (i >= 0 && idx[static_cast<size_t>(i)] == limit - (k - i)) --i;
    if (i < 0) return false;
    ++idx[static_cast<size_t>(i)];
    for (int j = i + 1; j < k; ++j)
      idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
    return true;
  };
  if (g >= codim && codim > 0) {
    do {
      std::vector<int> cols(static_cast<size_t>(codim));
      std::iota(cols.begin(), cols.end(), 0);
      do {
        minors.emplace_back(rows, cols);
      } while (next_subset(cols, n));
    } while (next_subset(rows, static_cast<int>(g)));
  }
  std::vector<size_t> visit(minors.size());
  std::iota(visit.begin(), visit.end(), 0);
  std::stable_sort(visit.begin(), visit.end(), [&](size_t a, size_t b) {
    uint64_t ha = 0xcbf29ce484222325ULL, hb = ha;
    for (int r : minors[a].first) ha = fnv1a(ha, static_cast<uint64_t>(r));
    for (int col : minors[a].second) ha = fnv1a(ha, 64 + static_cast<uint64_t>(col));
    for (int r : minors[b].first) hb = fnv1a(hb, static_cast<uint64_t>(r));
    for (int col : minors[b].second) hb = fnv1a(hb, 64 + static_cast<uint64_t>(col));
    return ha < hb;
  });

  GroebnerBasis sing = gb;  // grows into a basis of J = I + minors
  auto certify = [&]() {
    bool all = true;
    for (int i = 0; i < n; ++i) {
      if (report.certified_powers[static_cast<size_t>(i)] > 0) continue;
      bool found = false;
      for (long k = 1; k <= opts.power_bound; ++k) {
        Polynomial pow = Polynomial::term(
            Monomial::variable(n, i, static_cast<uint32_t>(k)),
            Scalar::one(field));
        if (normal_form(pow, sing).is_zero()) {
          report.certified_powers[static_cast<size_t>(i)] = k;
          found = true;
          break;
        }
      }
      if (!found) all = false;
    }
    return all;
  };

  try {
    size_t cursor = 0;
    bool certified = certify();
    const size_t batch = 8;
    while (!certified && cursor < visit.size()) {
      std::vector<Polynomial> fresh;
      for (size_t b = 0; b < batch && cursor < visit.size(); ++b, ++cursor) {
        const auto& [rset, cset] = minors[visit[cursor]];
        std::vector<std::vector<const Polynomial*>> sub(
            static_cast<size_t>(codim));
        for (size_t r = 0; r < sub.size(); ++r) {
          for (int col : cset) {
            sub[r].push_back(&jac[static_cast<size_t>(rset[r])]
                                 [static_cast<size_t>(col)]);
          }
        }
        Polynomial det = poly_det(sub, field, n);
        ++report.minors_used;
        if (det.is_zero()) continue;
        if (!normal_form(det, sing).is_zero()) fresh.push_back(std::move(det));
      }
      if (!fresh.empty()) {
        sing = buchberger_extend(sing, std::move(fresh), opts.gb);
      }
      certified = certify();
    }
    if (certified) {
      report.verdict = SmoothVerdict::smooth;
      report.certificate =
          "every variable has a power inside the singular locus ideal "
          "(projective singular locus empty)";
      return report;
    }
    // every minor is in; decide by the dimension of the singular locus
    HilbertSeries hj = HilbertSeries::from_monomial_ideal(sing.initial_ideal());
    if (hj.krull_dimension() >= 1) {
      report.verdict = SmoothVerdict::singular;
      report.certificate = "singular locus ideal has Krull dimension " +
                           std::to_string(hj.krull_dimension()) +
                           " (nonempty in projective space)";
      if (opts.witness_search && field.is_prime_field()) {
        for (const ProjectivePoint& p : all_points(field, n)) {
          if (point_on_variety(curve, p) && jacobian_rank(jac, p) < codim) {
            report.witness = p;
            break;
          }
        }
      }
    } else {
      report.verdict = SmoothVerdict::inconclusive;
      report.certificate =
          "power bound " + std::to_string(opts.power_bound) +
          " exhausted and no positive-dimensional certificate: the singular "
          "locus ideal is zero-dimensional but its emptiness is uncertified";
    }
  } catch (const BudgetError& e) {
    report.verdict = SmoothVerdict::inconclusive;
    report.certificate =
        std::string("budget exhausted while completing the singular locus "
                    "ideal: ") +
        e.what();
  }
  return report;
}

ProjectionResult project_from_p0(const Ideal& ideal,
                                 const GroebnerBasis& basis,
                                 const BuchbergerOptions& opts) {
  const Field& field = basis.field();
  int n = basis.nvars();
  if (ideal.field() != field) {
    throw FieldMismatchError("ideal over " + ideal.field().to_string() +
                             ", basis over " + field.to_string());
  }
  if (ideal.nvars() != n) {
    throw DimensionError("ideal and basis live in different rings");
  }
  MonomialIdeal init = basis.initial_ideal();
  if (!init.is_squarefree()) {
    throw PreconditionError("initial ideal is not squarefree");
  }
  SimplicialComplex delta = complex_of(init);
  if (delta.dim() > 1 || !delta.has_full_vertex_set()) {
    throw PreconditionError("initial complex is not a graph on the full "
                            "vertex set");
  }
  Graph graph = Graph::from_complex(delta);
  if (graph.degree(0) != 1) {
    throw PreconditionError(
        "vertex 0 is not free in the initial complex; use general "
        "elimination instead");
  }
  if (!is_zero_reduced(basis.elements(), basis.order())) {
    throw PreconditionError("basis is not 0-reduced; run zero_reduce first");
  }
  for (const Polynomial& g : ideal.generators()) {
    if (!normal_form(g, basis).is_zero()) {
      throw PreconditionError("basis does not present the given ideal");
    }
  }

  std::vector<Polynomial> kept_big;
  std::vector<Polynomial> kept_small;
  for (const Polynomial& g : basis.elements()) {
    if (g.leading_monomial(basis.order()).contains_variable(0)) continue;
    // the extraction lemma: with 0 free and the basis 0-reduced, a leading
    // monomial away from X0 forces the whole element away from X0
    kept_small.push_back(drop_variable(g, 0));
    kept_big.push_back(g);
  }

  Ideal route_b = Ideal::from_generators(field, n, kept_big);
  Ideal route_a = eliminate(ideal, 1, basis.order(), opts);
  if (!same_ideal(route_a, route_b, basis.order(), opts)) {
    throw InternalConsistencyError(
        "projection routes disagree: extraction vs block elimination");
  }

  MonomialOrder small_ord = basis.order().without_variable(0);
  ProjectionResult result{
      GroebnerBasis::verified(field, n - 1, std::move(kept_small), small_ord),
      {}};
  for (int j = 0; j < n - 1; ++j) result.variable_map.push_back(j + 1);
  return result;
}

FiberResult fiber_over_coordinate_point(const Ideal& ideal,
                                        const GroebnerBasis& basis, int a,
                                        const BuchbergerOptions& opts) {
  const Field& field = basis.field();
  int n = basis.nvars();
  if (a < 1 || a >= n) {
    throw PreconditionError("fiber index must name one of X1..X" +
                            std::to_string(n - 1));
  }
  ProjectionResult proj = project_from_p0(ideal, basis, opts);
  Ideal image = proj.basis.as_ideal();
  ProjectivePoint pa_small =
      ProjectivePoint::coordinate(field, n - 1, a - 1);
  if (!point_on_variety(image, pa_small)) {
    throw PreconditionError("P'_" + std::to_string(a) +
                            " is not on the projected curve");
  }

  // witness element g_{0j}: leading monomial X0*Xj, support meeting X0*X_a
  int witness = -1;
  Polynomial g0j(field, n);
  Monomial x0xa = Monomial::variable(n, 0) * Monomial::variable(n, a);
  for (int j = 1; j < n && witness < 0; ++j) {
    Monomial x0xj = Monomial::variable(n, 0) * Monomial::variable(n, j);
    for (size_t i = 0; i < basis.size(); ++i) {
      if (basis.leading_monomials()[i] != x0xj) continue;
      if (!basis.elements()[i].coefficient(x0xa).is_zero()) {
        witness = j;
        g0j = basis.elements()[i];
      }
      break;
    }
  }
  if (witness < 0) {
    throw PreconditionError(
        "no basis element g_{0j} carries X0*X" + std::to_string(a) +
        " in its support; the fiber lemma does not apply");
  }

  Scalar lambda = g0j.coefficient(x0xa);
  Scalar alpha = g0j.coefficient(Monomial::variable(n, a, 2));
  Scalar mu = (Scalar::zero(field) - alpha) / lambda;

  std::vector<Scalar> coords(static_cast<size_t>(n), Scalar::zero(field));
  coords[0] = mu;
  coords[static_cast<size_t>(a)] = Scalar::one(field);
  ProjectivePoint q = ProjectivePoint::from_coords(field, std::move(coords));

  Ideal curve = basis.as_ideal();
  FiberResult result{q,     mu,    lambda, alpha,
                     witness, false, false,  false};
  result.on_curve = point_on_variety(curve, q);
  if (result.on_curve) {
    result.q_singular = !is_nonsingular_at(curve, q, 1);
    result.image_singular = !is_nonsingular_at(image, pa_small, 1);
  }
  return result;
}

CurveSummary genus(const Ideal& ideal, const MonomialOrder& ord,
                   const SmoothnessOptions& opts) {
  GroebnerBasis gb = buchberger(ideal, ord, opts.gb);
  HilbertSeries hs = HilbertSeries::from_monomial_ideal(gb.initial_ideal());
  if (hs.krull_dimension() != 2) {
    throw DimensionError("Hilbert polynomial of degree " +
                         std::to_string(hs.krull_dimension() - 1) +
                         ", expected a linear one");
  }
  std::vector<mpq_class> hp = hs.hilbert_polynomial();
  CurveSummary summary;
  summary.hilbert_polynomial = hp;
  for (const mpq_class& c : hp) {
    if (c.get_den() != 1) {
      throw InternalConsistencyError(
          "non-integral Hilbert polynomial for a curve");
    }
  }
  summary.degree = hp.size() > 1 ? hp[1].get_num() : mpz_class(0);
  summary.genus = 1 - hp[0].get_num();

  SmoothnessReport report = is_smooth_projective_curve(ideal, opts);
  summary.smooth = report.verdict;
  std::vector<std::vector<Polynomial>> jac =
      jacobian(gb.elements(), ideal.field(), ideal.nvars());
  summary.singular_coordinate_points =
      singular_coordinate_points(gb.as_ideal(), jac, ideal.nvars() - 2);
  return summary;
}

}  // namespace grodeg

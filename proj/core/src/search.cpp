#include "grodeg/search.hpp"

#include <algorithm>
#include <chrono>
#include <set>
#include <utility>

#include "grodeg/error.hpp"

namespace grodeg {

long CandidateSlots::total() const {
  long n = 0;
  for (const auto& s : slots) n += static_cast<long>(s.size());
  return n;
}

CandidateSlots candidate_slots(const SimplicialComplex& delta,
                               const MonomialOrder& ord) {
  MonomialIdeal sr = stanley_reisner(delta);
  CandidateSlots out;
  out.leads = sr.generators();
  for (const Monomial& lead : out.leads) {
    std::vector<Monomial> slot;
    for (const Monomial& m : monomials_of_degree(delta.nverts(), lead.degree()))
      if (ord.less(m, lead) && !sr.contains(m)) slot.push_back(m);
    out.slots.push_back(std::move(slot));
  }
  return out;
}

std::vector<Scalar> full_grid(const Field& f, long height) {
  std::vector<Scalar> grid;
  if (f.is_prime_field()) {
    for (long r = 0; r < static_cast<long>(f.characteristic()); ++r)
      grid.push_back(Scalar::from_int(f, r));
  } else {
    if (height < 1) throw PreconditionError("grid height must be positive");
    grid.push_back(Scalar::zero(f));
    for (long v = 1; v <= height; ++v) {
      grid.push_back(Scalar::from_int(f, v));
      grid.push_back(Scalar::from_int(f, -v));
    }
  }
  return grid;
}

CandidateFamily CandidateFamily::exhaustive_grid(SimplicialComplex delta,
                                                 MonomialOrder order,
                                                 Field field,
                                                 std::vector<Scalar> grid) {
  CandidateFamily fam;
  fam.delta = std::move(delta);
  fam.order = std::move(order);
  fam.field = std::move(field);
  fam.mode = Mode::exhaustive;
  fam.grid = std::move(grid);
  return fam;
}

CandidateFamily CandidateFamily::random_sample(SimplicialComplex delta,
                                               MonomialOrder order, Field field,
                                               uint64_t seed, long count,
                                               long coeff_height) {
  CandidateFamily fam;
  fam.delta = std::move(delta);
  fam.order = std::move(order);
  fam.field = std::move(field);
  fam.mode = Mode::random;
  fam.seed = seed;
  fam.count = count;
  fam.coeff_height = coeff_height;
  return fam;
}

namespace {

Ideal build_candidate(const Field& f, int nvars, const CandidateSlots& slots,
                      const std::vector<Scalar>& assignment) {
  std::vector<Polynomial> gens;
  size_t k = 0;
  for (size_t i = 0; i < slots.leads.size(); ++i) {
    Polynomial g = Polynomial::term(slots.leads[i], Scalar::one(f));
    for (const Monomial& m : slots.slots[i]) {
      const Scalar& c = assignment[k++];
      if (!c.is_zero()) g = g + Polynomial::term(m, c);
    }
    gens.push_back(std::move(g));
  }
  return Ideal::from_generators(f, nvars, std::move(gens));
}

std::string describe(const GroebnerBasis& basis) {
  std::string s = "[";
  for (size_t i = 0; i < basis.size(); ++i) {
    if (i) s += ", ";
    s += basis.elements()[i].to_string(basis.order());
  }
  return s + "]";
}

}  // namespace

CandidateStream::CandidateStream(CandidateFamily family)
    : family_(std::move(family)),
      slots_(candidate_slots(family_.delta, family_.order)),
      target_(stanley_reisner(family_.delta)),
      rng_(family_.seed) {
  if (family_.mode == CandidateFamily::Mode::exhaustive) {
    if (family_.grid.empty())
      throw PreconditionError(
          "exhaustive candidate family needs a nonempty coefficient grid");
  } else {
    random_grid_ = full_grid(family_.field, family_.coeff_height);
  }
  for (const Ideal& seed : family_.seeded) {
    if (seed.field() != family_.field ||
        seed.nvars() != family_.delta.nverts())
      throw PreconditionError("seeded ideal does not live in the family ring");
  }
  odometer_.assign(static_cast<size_t>(slots_.total()), 0);
}

bool CandidateStream::advance_odometer() {
  for (size_t i = odometer_.size(); i-- > 0;) {
    if (++odometer_[i] < family_.grid.size()) return true;
    odometer_[i] = 0;
  }
  return false;
}

std::optional<Ideal> CandidateStream::propose() {
  if (next_seed_ < family_.seeded.size()) {
    last_assignment_.clear();
    return family_.seeded[next_seed_++];
  }
  std::vector<Scalar> assignment;
  assignment.reserve(odometer_.size());
  if (family_.mode == CandidateFamily::Mode::exhaustive) {
    if (!started_)
      started_ = true;
    else if (!advance_odometer())
      return std::nullopt;
    for (size_t digit : odometer_) assignment.push_back(family_.grid[digit]);
  } else {
    if (drawn_ >= family_.count) return std::nullopt;
    ++drawn_;
    for (size_t i = 0; i < odometer_.size(); ++i)
      assignment.push_back(random_grid_[static_cast<size_t>(
          rng_() % random_grid_.size())]);
  }
  last_assignment_ = assignment;
  return build_candidate(family_.field, family_.delta.nverts(), slots_,
                         assignment);
}

std::optional<CandidateStream::Candidate> CandidateStream::next() {
  while (!exhausted_ && !truncated_) {
    if (family_.max_candidates > 0 && generated_ >= family_.max_candidates) {
      if (propose())
        truncated_ = true;
      else
        exhausted_ = true;
      return std::nullopt;
    }
    std::optional<Ideal> ideal = propose();
    if (!ideal) {
      exhausted_ = true;
      return std::nullopt;
    }
    ++generated_;
    try {
      GroebnerBasis gb = buchberger(*ideal, family_.order, family_.gb);
      if (gb.initial_ideal() == target_)
        return Candidate{std::move(*ideal), reduced_basis(gb),
                         last_assignment_};
    } catch (const BudgetError&) {
    }
    ++rejected_;
  }
  return std::nullopt;
}

namespace {

// Shared sweep loop.  `on_smooth` sees each smooth candidate and returns true
// to stop the sweep.
template <typename OnSmooth>
VerificationReport run_sweep(CandidateStream& stream, bool zero_free,
                             OnSmooth on_smooth) {
  const auto t0 = std::chrono::steady_clock::now();
  const CandidateFamily& fam = stream.family();
  VerificationReport rep;
  std::set<std::string> witnesses;
  ProjectivePoint p0 =
      ProjectivePoint::coordinate(fam.field, fam.delta.nverts(), 0);
  bool stopped = false;
  while (auto cand = stream.next()) {
    ++rep.valid;
    std::string shown = describe(cand->basis);
    if (!point_on_variety(cand->ideal, p0))
      throw InternalConsistencyError(
          "P0 escaped a variety with squarefree initial ideal: " + shown);
    if (is_nonsingular_at(cand->ideal, p0, 1) != zero_free)
      rep.alarms.push_back(
          "free-vertex criterion violated at P0 by " + shown);
    SmoothnessReport sm = is_smooth_projective_curve(cand->ideal,
                                                     fam.smoothness);
    switch (sm.verdict) {
      case SmoothVerdict::smooth:
        ++rep.smooth;
        if (!rep.smooth_exemplar) rep.smooth_exemplar = shown;
        if (on_smooth(*cand, shown)) stopped = true;
        break;
      case SmoothVerdict::singular:
        ++rep.singular;
        if (!rep.singular_exemplar) rep.singular_exemplar = shown;
        if (sm.witness) witnesses.insert(sm.witness->to_string());
        break;
      case SmoothVerdict::inconclusive:
        ++rep.inconclusive;
        if (!rep.inconclusive_exemplar) rep.inconclusive_exemplar = shown;
        break;
    }
    if (stopped) break;
  }
  rep.generated = stream.generated();
  rep.rejected = stream.rejected();
  rep.truncated = stream.truncated();
  rep.singular_points.assign(witnesses.begin(), witnesses.end());
  rep.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  return rep;
}

}  // namespace

VerificationReport verify_non_tree_is_singular(const Graph& graph,
                                               const CandidateFamily& family) {
  if (is_tree(graph))
    throw PreconditionError(
        "graph is a tree; use find_tree_smoothing instead");
  if (stanley_reisner(family.delta) != stanley_reisner(graph.as_complex()))
    throw PreconditionError("candidate family was built for a different graph");
  CandidateStream stream(family);
  bool zero_free = graph.degree(0) == 1;
  std::vector<std::string> alarms;
  VerificationReport rep = run_sweep(
      stream, zero_free,
      [&](const CandidateStream::Candidate&, const std::string& shown) {
        alarms.push_back("smooth candidate over a non-tree: " + shown);
        return false;
      });
  rep.alarms.insert(rep.alarms.end(), alarms.begin(), alarms.end());
  return rep;
}

SmoothingResult find_tree_smoothing(const CandidateFamily& family) {
  Graph graph = Graph::from_complex(family.delta);
  if (!is_tree(graph))
    throw PreconditionError(
        "find_tree_smoothing expects a tree; use verify_non_tree_is_singular");
  CandidateStream stream(family);
  bool zero_free = graph.degree(0) == 1;
  SmoothingResult out;
  std::vector<std::string> alarms;
  out.report = run_sweep(
      stream, zero_free,
      [&](const CandidateStream::Candidate& cand, const std::string& shown) {
        CurveSummary cs = genus(cand.ideal, family.order, family.smoothness);
        if (cs.genus != 0) {
          alarms.push_back(
              "smooth candidate of genus " + cs.genus.get_str() + ": " + shown);
          return false;
        }
        out.found = true;
        out.ideal = cand.ideal;
        out.summary = std::move(cs);
        return true;
      });
  out.report.alarms.insert(out.report.alarms.end(), alarms.begin(),
                           alarms.end());
  if (!out.found)
    out.note = out.report.truncated
                   ? "candidate budget reached before a smoothing was found"
                   : "no smoothing found in the family";
  return out;
}

}  // namespace grodeg

#ifndef GRODEG_SEARCH_HPP
#define GRODEG_SEARCH_HPP

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "grodeg/collapse.hpp"
#include "grodeg/geometry.hpp"
#include "grodeg/groebner.hpp"
#include "grodeg/simplicial.hpp"

namespace grodeg {

// Per-generator trailing-term slots: for each minimal non-face sigma, the
// standard monomials (divisible by no Stanley-Reisner generator) of the same
// degree strictly below X_sigma in the order.  Any candidate with the target
// initial ideal is equivalent modulo the ideal to one supported on these
// slots, so the grid loses no generality.
struct CandidateSlots {
  std::vector<Monomial> leads;
  std::vector<std::vector<Monomial>> slots;  // aligned with leads
  long total() const;
};

CandidateSlots candidate_slots(const SimplicialComplex& delta,
                               const MonomialOrder& ord);

// A family of perturbation candidates J = (X_sigma + trailing terms) aimed at
// in(J) = I_Delta.
struct CandidateFamily {
  enum class Mode { exhaustive, random };

  SimplicialComplex delta = SimplicialComplex::void_complex(1);
  MonomialOrder order = MonomialOrder::lex();
  Field field = Field::rationals();
  Mode mode = Mode::exhaustive;
  // exhaustive: the cartesian product of this grid over all slots, in
  // odometer order (last slot fastest)
  std::vector<Scalar> grid;
  // random: `count` draws with every slot coefficient uniform on the grid
  // induced by coeff_height (integers in [-h, h] over QQ, all residues over
  // a prime field), reproducible from the seed
  uint64_t seed = 1;
  long count = 0;
  long coeff_height = 2;
  // hard cap on candidates taken from the stream; 0 = no cap.  Hitting the
  // cap marks the stream truncated.
  long max_candidates = 0;
  // known-witness ideals fed through the stream first, re-certified like any
  // other candidate
  std::vector<Ideal> seeded;
  BuchbergerOptions gb;
  SmoothnessOptions smoothness;

  static CandidateFamily exhaustive_grid(SimplicialComplex delta,
                                         MonomialOrder order, Field field,
                                         std::vector<Scalar> grid);
  static CandidateFamily random_sample(SimplicialComplex delta,
                                       MonomialOrder order, Field field,
                                       uint64_t seed, long count,
                                       long coeff_height);
};

// The full coefficient grid of a prime field, 0 first; over the rationals the
// integers -h..h with 0 first.
std::vector<Scalar> full_grid(const Field& f, long height = 1);

// Pull-based candidate stream.  Only CERTIFIED candidates are yielded: the
// Groebner basis is computed and its initial ideal compared with I_Delta;
// failures (including degree-ceiling blowups) count as rejected.
class CandidateStream {
 public:
  explicit CandidateStream(CandidateFamily family);

  struct Candidate {
    Ideal ideal;
    GroebnerBasis basis;
    std::vector<Scalar> assignment;  // flat slot coefficients; empty for seeds
  };

  std::optional<Candidate> next();

  long generated() const { return generated_; }
  long rejected() const { return rejected_; }
  bool truncated() const { return truncated_; }
  bool exhausted() const { return exhausted_; }
  const CandidateSlots& slots() const { return slots_; }
  const CandidateFamily& family() const { return family_; }

 private:
  std::optional<Ideal> propose();
  bool advance_odometer();

  CandidateFamily family_;
  CandidateSlots slots_;
  MonomialIdeal target_;
  std::vector<Scalar> random_grid_;
  std::mt19937_64 rng_;
  std::vector<size_t> odometer_;
  size_t next_seed_ = 0;
  bool started_ = false;
  bool exhausted_ = false;
  bool truncated_ = false;
  long generated_ = 0;
  long rejected_ = 0;
  long drawn_ = 0;
  std::vector<Scalar> last_assignment_;
};

struct VerificationReport {
  long generated = 0;
  long rejected = 0;
  long valid = 0;
  long smooth = 0;
  long singular = 0;
  long inconclusive = 0;
  bool truncated = false;
  // theorem-contradiction alarms: a smooth candidate over a non-tree, a
  // thm0 mismatch, or a smooth candidate of nonzero genus
  std::vector<std::string> alarms;
  std::optional<std::string> smooth_exemplar;
  std::optional<std::string> singular_exemplar;
  std::optional<std::string> inconclusive_exemplar;
  std::vector<std::string> singular_points;  // distinct witnesses observed
  double wall_seconds = 0;  // informational; excluded from canonical reports

  bool counts_consistent() const {
    return generated == valid + rejected &&
           valid == smooth + singular + inconclusive;
  }
  bool pass() const {
    return smooth == 0 && inconclusive == 0 && !truncated;
  }
};

// Contrapositive harness for the main theorem: over a connected non-tree
// every valid candidate must be singular.  PASS iff no candidate is smooth
// or inconclusive and the stream was not truncated; smooth candidates are
// recorded in full as alarms.  Each valid candidate is also cross-checked
// against the free-vertex criterion at P_0.
VerificationReport verify_non_tree_is_singular(const Graph& graph,
                                               const CandidateFamily& family);

struct SmoothingResult {
  bool found = false;
  std::optional<Ideal> ideal;
  std::optional<CurveSummary> summary;
  VerificationReport report;
  std::string note;  // "not found within budget" when applicable
};

// Searches a tree's candidate family for a Groebner smoothing: the first
// valid candidate that is smooth with genus 0.  Absence within the budget is
// reported as such, never as nonexistence.
SmoothingResult find_tree_smoothing(const CandidateFamily& family);

}  // namespace grodeg

#endif

#ifndef GRODEG_GROEBNER_HPP
#define GRODEG_GROEBNER_HPP

#include <span>
#include <utility>
#include <vector>

#include "grodeg/ideal.hpp"
#include "grodeg/order.hpp"
#include "grodeg/polynomial.hpp"

namespace grodeg {

// Basis of an ideal with cached leading monomials under a fixed order.
// `verified` re-checks the Groebner property (every S-polynomial reduces to
// zero); `unchecked` trusts the caller.
class GroebnerBasis {
 public:
  static GroebnerBasis unchecked(const Field& f, int nvars,
                                 std::vector<Polynomial> elems,
                                 MonomialOrder ord);
  static GroebnerBasis verified(const Field& f, int nvars,
                                std::vector<Polynomial> elems,
                                MonomialOrder ord);

  const Field& field() const { return field_; }
  int nvars() const { return nvars_; }
  const std::vector<Polynomial>& elements() const { return elems_; }
  const MonomialOrder& order() const { return ord_; }
  const std::vector<Monomial>& leading_monomials() const { return lms_; }
  size_t size() const { return elems_.size(); }

  bool is_reduced() const { return reduced_; }
  bool is_zero_reduced() const { return zero_reduced_; }

  Ideal as_ideal() const;
  MonomialIdeal initial_ideal() const;

 private:
  GroebnerBasis(const Field& f, int nvars, MonomialOrder ord)
      : field_(f), nvars_(nvars), ord_(std::move(ord)) {}
  void cache_leading_monomials();

  Field field_;
  int nvars_;
  MonomialOrder ord_;
  std::vector<Polynomial> elems_;
  std::vector<Monomial> lms_;
  bool reduced_ = false;
  bool zero_reduced_ = false;

  friend GroebnerBasis reduced_basis(const GroebnerBasis&);
  friend GroebnerBasis zero_reduce(const GroebnerBasis&);
};

struct BuchbergerOptions {
  long degree_ceiling = 12;  // abort past this total degree
};

// S-polynomial (lcm/in(f)) f lc(g) - (lcm/in(g)) g lc(f); DomainError on zero
// input.
Polynomial s_polynomial(const Polynomial& f, const Polynomial& g,
                        const MonomialOrder& ord);

struct ReductionResult {
  Polynomial normal_form;
  std::vector<Polynomial> quotients;  // aligned with the divisor list
};

// Multivariate division: f = sum quotients[i] * divisors[i] + normal_form and
// no monomial of the normal form is divisible by any divisor leading monomial.
// Among applicable divisors the one with the order-largest leading monomial is
// chosen (ties by list position).
ReductionResult reduce(const Polynomial& f, std::span<const Polynomial> divisors,
                       const MonomialOrder& ord);

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& basis);

// Buchberger completion with the normal selection strategy (smallest lcm
// degree first) and the coprimality and chain discard criteria.  Throws
// BudgetError when a basis element would exceed the degree ceiling.
GroebnerBasis buchberger(const Ideal& ideal, const MonomialOrder& ord,
                         const BuchbergerOptions& opts = {});

// Completes an existing basis after adjoining extra generators; pairs inside
// the old basis are not revisited.
GroebnerBasis buchberger_extend(const GroebnerBasis& basis,
                                std::vector<Polynomial> extra,
                                const BuchbergerOptions& opts = {});

// Full pairwise S-polynomial check, no discard criteria.
bool is_groebner_basis(std::span<const Polynomial> elems,
                       const MonomialOrder& ord);

// Unique reduced basis: minimal, monic, no element monomial divisible by
// another leading monomial.
GroebnerBasis reduced_basis(const GroebnerBasis& basis);

// 0-reduced form: for i != j with X0 dividing in(G[i]), in(G[i]) does not
// appear in the support of G[j].  Weaker than full reduction; obtained by
// cancelling exact occurrences.
GroebnerBasis zero_reduce(const GroebnerBasis& basis);
bool is_zero_reduced(std::span<const Polynomial> elems, const MonomialOrder& ord);

// Elimination of the variable prefix X0..X{drop-1} via a block order (lex on
// the prefix, `inner` on the rest).  The result lives in the same ambient
// ring; its generators do not mention the dropped variables.
Ideal eliminate(const Ideal& ideal, int drop, const MonomialOrder& inner,
                const BuchbergerOptions& opts = {});

// Equality test by mutual normal-form membership of generators.
bool same_ideal(const Ideal& a, const Ideal& b, const MonomialOrder& ord,
                const BuchbergerOptions& opts = {});

struct SubstitutionResult {
  GroebnerBasis basis;            // over nvars-1 variables
  std::vector<int> variable_map;  // new index -> old index
};

// Applies X_v -> -sum coeffs[i] X_i (coefficients only on variables smaller in
// the order, i.e. indices > v) to every element, drops the ones that vanish,
// and reinterprets the result over the smaller ring.  Requires the linear form
// X_v + sum coeffs[i] X_i to lie in the ideal; the substituted basis is
// re-verified and its initial ideal checked against the input's.
SubstitutionResult substitute_linear(
    const GroebnerBasis& basis, int v,
    const std::vector<std::pair<int, Scalar>>& coeffs,
    const BuchbergerOptions& opts = {});

// When enabled, buchberger() re-verifies every computed basis.  Defaults to on
// in debug builds, off under NDEBUG.
void set_auto_verify(bool enabled);
bool auto_verify_enabled();

}  // namespace grodeg

#endif

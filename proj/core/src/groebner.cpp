#include "grodeg/groebner.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <set>
#include <tuple>

namespace grodeg {
namespace {

#ifdef NDEBUG
std::atomic<bool> g_auto_verify{false};
#else
std::atomic<bool> g_auto_verify{true};
#endif

// Primitive integer form over QQ (content 1, positive leading coefficient),
// monic over a prime field.  Keeps Buchberger intermediates small.
Polynomial normalize_element(const Polynomial& p, const MonomialOrder& ord) {
  if (p.is_zero()) return p;
  if (p.field().is_prime_field()) return p.monic(ord);
  mpz_class den_lcm = 1, num_gcd = 0;
  for (const Term& t : p.terms()) {
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(),
            t.coefficient.rational().get_den().get_mpz_t());
  }
  for (const Term& t : p.terms()) {
    mpz_class scaled = t.coefficient.rational().get_num() *
                       (den_lcm / t.coefficient.rational().get_den());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), scaled.get_mpz_t());
  }
  mpq_class factor(den_lcm, num_gcd);
  factor.canonicalize();
  Polynomial out = p * Scalar::from_rational(factor);
  if (out.leading_term(ord).coefficient.rational() < 0) out = -out;
  return out;
}

struct PairKey {
  long deg;
  int j, i;  // j > i; newer element first in the tie break
  auto operator<=>(const PairKey&) const = default;
};

}  // namespace

void set_auto_verify(bool enabled) { g_auto_verify = enabled; }
bool auto_verify_enabled() { return g_auto_verify; }

GroebnerBasis GroebnerBasis::unchecked(const Field& f, int nvars,
                                       std::vector<Polynomial> elems,
                                       MonomialOrder ord) {
  GroebnerBasis b(f, nvars, std::move(ord));
  for (const Polynomial& e : elems) {
    if (e.field() != f) throw FieldMismatchError("basis element field");
    if (e.nvars() != nvars) throw DimensionError("basis element variable count");
    if (e.is_zero()) throw DomainError("zero polynomial in basis");
  }
  b.elems_ = std::move(elems);
  b.cache_leading_monomials();
  return b;
}

GroebnerBasis GroebnerBasis::verified(const Field& f, int nvars,
                                      std::vector<Polynomial> elems,
                                      MonomialOrder ord) {
  if (!is_groebner_basis(elems, ord))
    throw InternalConsistencyError("set is not a Groebner basis");
  return unchecked(f, nvars, std::move(elems), std::move(ord));
}

void GroebnerBasis::cache_leading_monomials() {
  lms_.clear();
  lms_.reserve(elems_.size());
  for (const Polynomial& e : elems_) lms_.push_back(e.leading_monomial(ord_));
}

Ideal GroebnerBasis::as_ideal() const {
  return Ideal::from_generators(field_, nvars_, elems_);
}

MonomialIdeal GroebnerBasis::initial_ideal() const {
  return MonomialIdeal::from_generators(nvars_, lms_);
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g,
                        const MonomialOrder& ord) {
  if (f.is_zero() || g.is_zero())
    throw DomainError("S-polynomial of the zero polynomial");
  const Term& tf = f.leading_term(ord);
  const Term& tg = g.leading_term(ord);
  Monomial lcm = Monomial::lcm(tf.monomial, tg.monomial);
  return f * Term{lcm / tf.monomial, tg.coefficient} -
         g * Term{lcm / tg.monomial, tf.coefficient};
}

ReductionResult reduce(const Polynomial& f, std::span<const Polynomial> divisors,
                       const MonomialOrder& ord) {
  const Field& field = f.field();
  int nvars = f.nvars();
  std::vector<Monomial> lms;
  lms.reserve(divisors.size());
  for (const Polynomial& d : divisors) {
    if (d.is_zero()) throw DomainError("zero divisor in reduction");
    if (d.field() != field) throw FieldMismatchError("divisor field");
    if (d.nvars() != nvars) throw DimensionError("divisor variable count");
    lms.push_back(d.leading_monomial(ord));
  }

  auto greater = [&ord](const Monomial& a, const Monomial& b) {
    return ord.greater(a, b);
  };
  std::map<Monomial, Scalar, decltype(greater)> work(greater);
  for (const Term& t : f.terms()) work.emplace(t.monomial, t.coefficient);

  std::vector<std::vector<Term>> quot_terms(divisors.size());
  std::vector<Term> rem_terms;

  while (!work.empty()) {
    auto it = work.begin();
    Monomial m = it->first;
    Scalar c = it->second;
    work.erase(it);
    if (c.is_zero()) continue;

    size_t best = divisors.size();
    for (size_t d = 0; d < divisors.size(); ++d) {
      if (!lms[d].divides(m)) continue;
      if (best == divisors.size() || ord.greater(lms[d], lms[best])) best = d;
    }
    if (best == divisors.size()) {
      rem_terms.push_back(Term{m, c});
      continue;
    }
    const Polynomial& d = divisors[best];
    Term factor{m / lms[best], c / d.leading_term(ord).coefficient};
    quot_terms[best].push_back(factor);
    for (const Term& t : d.terms()) {
      if (t.monomial == lms[best]) continue;
      Monomial pm = t.monomial * factor.monomial;
      Scalar pc = t.coefficient * factor.coefficient;
      auto [pos, inserted] = work.emplace(pm, -pc);
      if (!inserted) pos->second -= pc;
    }
  }

  ReductionResult result{Polynomial::from_terms(field, nvars, std::move(rem_terms)),
                         {}};
  result.quotients.reserve(divisors.size());
  for (auto& terms : quot_terms)
    result.quotients.push_back(
        Polynomial::from_terms(field, nvars, std::move(terms)));
  return result;
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& basis) {
  return reduce(f, basis.elements(), basis.order()).normal_form;
}

namespace {

// Shared Buchberger completion.  `seed` holds trusted elements whose mutual
// pairs are skipped; `fresh` are the generators still to be paired.
GroebnerBasis complete(const Field& field, int nvars, const MonomialOrder& ord,
                       std::vector<Polynomial> seed, size_t trusted_prefix,
                       const BuchbergerOptions& opts, bool verify) {
  std::vector<Polynomial> basis;
  std::vector<Monomial> lms;
  for (Polynomial& g : seed) {
    if (g.is_zero()) continue;
    Polynomial n = normalize_element(g, ord);
    basis.push_back(n);
    lms.push_back(basis.back().leading_monomial(ord));
  }

  std::set<PairKey> queue;
  std::set<std::pair<int, int>> pending;  // (i, j), i < j
  auto push_pair = [&](int i, int j) {
    long deg = Monomial::lcm(lms[static_cast<size_t>(i)],
                             lms[static_cast<size_t>(j)])
                   .degree();
    queue.insert(PairKey{deg, j, i});
    pending.emplace(i, j);
  };
  for (int j = 1; j < static_cast<int>(basis.size()); ++j)
    for (int i = 0; i < j; ++i)
      if (j >= static_cast<int>(trusted_prefix)) push_pair(i, j);

  while (!queue.empty()) {
    PairKey key = *queue.begin();
    queue.erase(queue.begin());
    int i = key.i, j = key.j;
    pending.erase({i, j});
    const Monomial& mi = lms[static_cast<size_t>(i)];
    const Monomial& mj = lms[static_cast<size_t>(j)];
    if (mi.coprime_with(mj)) continue;  // product criterion
    Monomial lcm = Monomial::lcm(mi, mj);
    bool discard = false;
    for (int k = 0; k < static_cast<int>(basis.size()) && !discard; ++k) {
      if (k == i || k == j) continue;
      const Monomial& mk = lms[static_cast<size_t>(k)];
      if (!mk.divides(lcm)) continue;
      if (Monomial::lcm(mi, mk) == lcm || Monomial::lcm(mj, mk) == lcm) continue;
      auto mk_pending = [&](int a, int b) {
        if (a > b) std::swap(a, b);
        return pending.count({a, b}) != 0;
      };
      if (!mk_pending(i, k) && !mk_pending(j, k)) discard = true;  // chain
    }
    if (discard) continue;

    Polynomial s = s_polynomial(basis[static_cast<size_t>(i)],
                                basis[static_cast<size_t>(j)], ord);
    Polynomial nf = reduce(s, basis, ord).normal_form;
    if (nf.is_zero()) continue;
    if (nf.degree() > opts.degree_ceiling)
      throw BudgetError("Groebner degree ceiling " +
                        std::to_string(opts.degree_ceiling) +
                        " exceeded (element of degree " +
                        std::to_string(nf.degree()) + ")");
    basis.push_back(normalize_element(nf, ord));
    lms.push_back(basis.back().leading_monomial(ord));
    int t = static_cast<int>(basis.size()) - 1;
    for (int k = 0; k < t; ++k) push_pair(k, t);
  }

  if (verify && g_auto_verify && !is_groebner_basis(basis, ord))
    throw InternalConsistencyError("Buchberger output failed verification");
  return GroebnerBasis::unchecked(field, nvars, std::move(basis), ord);
}

}  // namespace

GroebnerBasis buchberger(const Ideal& ideal, const MonomialOrder& ord,
                         const BuchbergerOptions& opts) {
  return complete(ideal.field(), ideal.nvars(), ord, ideal.generators(), 0,
                  opts, true);
}

GroebnerBasis buchberger_extend(const GroebnerBasis& basis,
                                std::vector<Polynomial> extra,
                                const BuchbergerOptions& opts) {
  std::vector<Polynomial> seed = basis.elements();
  size_t trusted = seed.size();
  for (Polynomial& p : extra) seed.push_back(std::move(p));
  return complete(basis.field(), basis.nvars(), basis.order(), std::move(seed),
                  trusted, opts, false);
}

bool is_groebner_basis(std::span<const Polynomial> elems,
                       const MonomialOrder& ord) {
  for (size_t j = 1; j < elems.size(); ++j)
    for (size_t i = 0; i < j; ++i) {
      Polynomial s = s_polynomial(elems[i], elems[j], ord);
      if (!reduce(s, elems, ord).normal_form.is_zero()) return false;
    }
  return true;
}

GroebnerBasis reduced_basis(const GroebnerBasis& basis) {
  const MonomialOrder& ord = basis.order();
  // minimal subset: drop elements whose leading monomial another one divides
  std::vector<size_t> idx(basis.size());
  for (size_t k = 0; k < idx.size(); ++k) idx[k] = k;
  std::sort(idx.begin(), idx.end(), [&](size_t a, size_t b) {
    auto c = ord.compare(basis.leading_monomials()[a],
                         basis.leading_monomials()[b]);
    if (c != std::strong_ordering::equal) return c == std::strong_ordering::less;
    return a < b;
  });
  std::vector<Polynomial> kept;
  std::vector<Monomial> kept_lms;
  for (size_t k : idx) {
    const Monomial& m = basis.leading_monomials()[k];
    bool divisible = false;
    for (const Monomial& g : kept_lms)
      if (g.divides(m)) {
        divisible = true;
        break;
      }
    if (!divisible) {
      kept.push_back(basis.elements()[k]);
      kept_lms.push_back(m);
    }
  }
  // tail interreduction to the unique fixpoint
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t k = 0; k < kept.size(); ++k) {
      std::vector<Polynomial> others;
      others.reserve(kept.size() - 1);
      for (size_t t = 0; t < kept.size(); ++t)
        if (t != k) others.push_back(kept[t]);
      Polynomial nf = reduce(kept[k], others, ord).normal_form;
      if (nf != kept[k]) {
        kept[k] = nf;
        changed = true;
      }
    }
  }
  for (Polynomial& p : kept) p = p.monic(ord);
  std::sort(kept.begin(), kept.end(), [&](const Polynomial& a, const Polynomial& b) {
    return ord.greater(a.leading_monomial(ord), b.leading_monomial(ord));
  });
  GroebnerBasis out = GroebnerBasis::unchecked(basis.field(), basis.nvars(),
                                               std::move(kept), ord);
  out.reduced_ = true;
  out.zero_reduced_ = true;
  return out;
}

bool is_zero_reduced(std::span<const Polynomial> elems,
                     const MonomialOrder& ord) {
  for (size_t i = 0; i < elems.size(); ++i) {
    Monomial lm = elems[i].leading_monomial(ord);
    if (!lm.contains_variable(0)) continue;
    for (size_t j = 0; j < elems.size(); ++j) {
      if (i == j) continue;
      if (!elems[j].coefficient(lm).is_zero()) return false;
    }
  }
  return true;
}

GroebnerBasis zero_reduce(const GroebnerBasis& basis) {
  const MonomialOrder& ord = basis.order();
  std::vector<Polynomial> elems = basis.elements();
  bool changed_any = false;
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t j = 0; j < elems.size(); ++j) {
      if (elems[j].is_zero()) continue;
      for (size_t i = 0; i < elems.size(); ++i) {
        if (i == j || elems[i].is_zero()) continue;
        const Term& lead = elems[i].leading_term(ord);
        if (!lead.monomial.contains_variable(0)) continue;
        Scalar c = elems[j].coefficient(lead.monomial);
        if (c.is_zero()) continue;
        elems[j] = elems[j] - elems[i] * (c / lead.coefficient);
        changed = true;
        changed_any = true;
        if (elems[j].is_zero()) break;
      }
    }
  }
  std::erase_if(elems, [](const Polynomial& p) { return p.is_zero(); });
  GroebnerBasis out = GroebnerBasis::unchecked(basis.field(), basis.nvars(),
                                               std::move(elems), ord);
  out.zero_reduced_ = true;
  out.reduced_ = basis.is_reduced() && !changed_any;
  return out;
}

Ideal eliminate(const Ideal& ideal, int drop, const MonomialOrder& inner,
                const BuchbergerOptions& opts) {
  if (drop < 1 || drop >= ideal.nvars())
    throw PreconditionError("can only eliminate a proper nonempty prefix of "
                            "the variables");
  MonomialOrder block = inner.with_elimination_block(drop);
  GroebnerBasis gb = buchberger(ideal, block, opts);
  std::vector<Polynomial> kept;
  for (size_t k = 0; k < gb.size(); ++k) {
    const Monomial& lm = gb.leading_monomials()[k];
    bool touches = false;
    for (int v = 0; v < drop; ++v)
      if (lm.contains_variable(v)) {
        touches = true;
        break;
      }
    if (touches) continue;
    // under the block order a leading monomial outside the prefix forces the
    // whole polynomial outside it
    for (const Term& t : gb.elements()[k].terms())
      for (int v = 0; v < drop; ++v)
        if (t.monomial.contains_variable(v))
          throw InternalConsistencyError(
              "eliminated element still mentions a dropped variable");
    kept.push_back(gb.elements()[k]);
  }
  return Ideal::from_generators(ideal.field(), ideal.nvars(), std::move(kept));
}

bool same_ideal(const Ideal& a, const Ideal& b, const MonomialOrder& ord,
                const BuchbergerOptions& opts) {
  if (a.field() != b.field() || a.nvars() != b.nvars()) return false;
  GroebnerBasis ga = buchberger(a, ord, opts);
  GroebnerBasis gb = buchberger(b, ord, opts);
  for (const Polynomial& g : a.generators())
    if (!normal_form(g, gb).is_zero()) return false;
  for (const Polynomial& g : b.generators())
    if (!normal_form(g, ga).is_zero()) return false;
  return true;
}

SubstitutionResult substitute_linear(
    const GroebnerBasis& basis, int v,
    const std::vector<std::pair<int, Scalar>>& coeffs,
    const BuchbergerOptions& opts) {
  (void)opts;
  const Field& field = basis.field();
  int nvars = basis.nvars();
  if (v < 0 || v >= nvars) throw DimensionError("substituted variable out of range");
  if (nvars < 2)
    throw DimensionError("cannot shrink a one-variable ring");
  Polynomial replacement(field, nvars);
  Polynomial linear_form = Polynomial::variable(field, nvars, v);
  for (const auto& [idx, lambda] : coeffs) {
    if (idx <= v)
      throw PreconditionError(
          "order violation: substitution coefficients may only touch "
          "variables smaller than X" +
          std::to_string(v));
    if (idx >= nvars) throw DimensionError("substitution coefficient index");
    if (lambda.field() != field) throw FieldMismatchError("substitution coefficient");
    Polynomial xi = Polynomial::variable(field, nvars, idx);
    replacement = replacement - xi * lambda;
    linear_form = linear_form + xi * lambda;
  }
  if (!normal_form(linear_form, basis).is_zero())
    throw PreconditionError("the linear form X" + std::to_string(v) +
                            " + ... does not lie in the ideal");

  std::vector<int> var_map;
  for (int j = 0; j < nvars - 1; ++j) var_map.push_back(j < v ? j : j + 1);

  std::vector<Polynomial> shrunk;
  for (const Polynomial& g : basis.elements()) {
    Polynomial image = g.substitute(v, replacement);
    if (image.is_zero()) continue;
    std::vector<Term> terms;
    for (const Term& t : image.terms()) {
      std::vector<uint32_t> exps;
      exps.reserve(static_cast<size_t>(nvars) - 1);
      for (int j = 0; j < nvars - 1; ++j)
        exps.push_back(t.monomial.exponent(var_map[static_cast<size_t>(j)]));
      terms.push_back(Term{Monomial::from_exponents(std::move(exps)),
                           t.coefficient});
    }
    shrunk.push_back(Polynomial::from_terms(field, nvars - 1, std::move(terms)));
  }

  MonomialOrder small_ord = basis.order().without_variable(v);
  if (!is_groebner_basis(shrunk, small_ord))
    throw InternalConsistencyError(
        "substituted basis failed Groebner verification");

  // expected initial ideal: the old one with the X_v generator removed
  MonomialIdeal old_init = basis.initial_ideal();
  std::vector<Monomial> expected;
  for (const Monomial& m : old_init.generators()) {
    if (m.contains_variable(v)) {
      if (m != Monomial::variable(nvars, v))
        throw InternalConsistencyError(
            "initial ideal mentions X" + std::to_string(v) +
            " beyond the linear generator");
      continue;
    }
    std::vector<uint32_t> exps;
    for (int j = 0; j < nvars - 1; ++j)
      exps.push_back(m.exponent(var_map[static_cast<size_t>(j)]));
    expected.push_back(Monomial::from_exponents(std::move(exps)));
  }
  GroebnerBasis out = GroebnerBasis::unchecked(field, nvars - 1,
                                               std::move(shrunk), small_ord);
  if (out.initial_ideal() !=
      MonomialIdeal::from_generators(nvars - 1, std::move(expected)))
    throw InternalConsistencyError(
        "substitution changed the initial ideal unexpectedly");
  return SubstitutionResult{std::move(out), std::move(var_map)};
}

}  // namespace grodeg

#include "grodeg/hilbert.hpp"

#include <algorithm>
#include <map>

#include "grodeg/error.hpp"
#include "grodeg/linalg.hpp"
#include "grodeg/monomial.hpp"
#include "grodeg/polynomial.hpp"

namespace grodeg {

namespace {

using Poly = std::vector<mpz_class>;  // coefficients of a polynomial in t

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly add(const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  trim(r);
  return r;
}

Poly shift(const Poly& a, size_t k) {
  if (a.empty()) return {};
  Poly r(a.size() + k, 0);
  for (size_t i = 0; i < a.size(); ++i) r[i + k] = a[i];
  return r;
}

// (1-t)^k
Poly one_minus_t_power(int k) {
  Poly r{1};
  for (int i = 0; i < k; ++i) {
    Poly next(r.size() + 1, 0);
    for (size_t j = 0; j < r.size(); ++j) {
      next[j] += r[j];
      next[j + 1] -= r[j];
    }
    r = std::move(next);
  }
  return r;
}

// Numerator of the Hilbert series of S/M over (1-t)^nvars.
Poly numerator_recursive(int nvars, std::vector<Monomial> gens) {
  // gens are assumed minimal; keep them that way through the recursion
  if (gens.empty()) return {1};
  for (const Monomial& g : gens) {
    if (g.is_one()) return {};
  }
  bool all_linear = true;
  for (const Monomial& g : gens) {
    if (g.degree() != 1) {
      all_linear = false;
      break;
    }
  }
  if (all_linear) return one_minus_t_power(static_cast<int>(gens.size()));

  // pivot: most frequent variable among generators of degree >= 2
  std::vector<long> freq(static_cast<size_t>(nvars), 0);
  for (const Monomial& g : gens) {
    if (g.degree() < 2) continue;
    for (int i = 0; i < nvars; ++i) {
      if (g.contains_variable(i)) ++freq[static_cast<size_t>(i)];
    }
  }
  int pivot = static_cast<int>(std::max_element(freq.begin(), freq.end()) -
                               freq.begin());
  Monomial x = Monomial::variable(nvars, pivot);

  std::vector<Monomial> plus;  // gens + (x), minimalized
  plus.push_back(x);
  std::vector<Monomial> colon;  // gens : x
  for (const Monomial& g : gens) {
    if (g.contains_variable(pivot)) {
      colon.push_back(g / x);
    } else {
      plus.push_back(g);
      colon.push_back(g);
    }
  }
  auto minimalize = [nvars](std::vector<Monomial> ms) {
    return MonomialIdeal::from_generators(nvars, std::move(ms)).generators();
  };
  Poly a = numerator_recursive(nvars, minimalize(std::move(plus)));
  Poly b = numerator_recursive(nvars, minimalize(std::move(colon)));
  return add(a, shift(b, 1));
}

// Divide p by (1-t) as often as it stays a polynomial; returns the number of
// factors removed.
int cancel_one_minus_t(Poly& p) {
  int removed = 0;
  while (!p.empty()) {
    mpz_class at_one = 0;
    for (const mpz_class& c : p) at_one += c;
    if (at_one != 0) break;
    // p = (1-t) q with q_k = sum_{j<=k} p_j
    Poly q(p.size() - 1, 0);
    mpz_class run = 0;
    for (size_t k = 0; k + 1 < p.size(); ++k) {
      run += p[k];
      q[k] = run;
    }
    p = std::move(q);
    trim(p);
    ++removed;
  }
  return removed;
}

mpz_class binom(long n, long k) {
  if (k < 0 || n < k) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return r;
}

}  // namespace

HilbertSeries HilbertSeries::from_monomial_ideal(const MonomialIdeal& ideal) {
  Poly numer = numerator_recursive(ideal.nvars(), ideal.generators());
  HilbertSeries series;
  if (numer.empty()) return series;
  int cancelled = cancel_one_minus_t(numer);
  series.numerator = std::move(numer);
  series.denominator_power = ideal.nvars() - cancelled;
  if (series.denominator_power < 0) {
    throw InternalConsistencyError("Hilbert series cancelled below 1");
  }
  return series;
}

HilbertSeries HilbertSeries::from_complex(const SimplicialComplex& complex) {
  // h(t) = sum_i f_{i-1} t^i (1-t)^{D-i} over (1-t)^D with D = dim + 1
  std::vector<long> f = complex.f_vector();
  HilbertSeries series;
  if (f.empty()) return series;
  int D = static_cast<int>(f.size()) - 1;
  Poly numer;
  for (int i = 0; i <= D; ++i) {
    Poly part = one_minus_t_power(D - i);
    for (mpz_class& c : part) c *= f[static_cast<size_t>(i)];
    numer = add(numer, shift(part, static_cast<size_t>(i)));
  }
  int cancelled = cancel_one_minus_t(numer);
  series.numerator = std::move(numer);
  series.denominator_power = D - cancelled;
  if (series.denominator_power < 0) {
    throw InternalConsistencyError("Hilbert series cancelled below 1");
  }
  return series;
}

mpz_class HilbertSeries::value_at(long m) const {
  if (m < 0) return 0;
  mpz_class total = 0;
  if (denominator_power == 0) {
    if (m < static_cast<long>(numerator.size())) {
      total = numerator[static_cast<size_t>(m)];
    }
    return total;
  }
  long D = denominator_power;
  for (size_t j = 0; j < numerator.size(); ++j) {
    long shift = m - static_cast<long>(j);
    if (shift < 0) break;
    total += numerator[j] * binom(shift + D - 1, D - 1);
  }
  return total;
}

std::vector<mpq_class> HilbertSeries::hilbert_polynomial() const {
  if (denominator_power == 0 || is_zero()) return {};
  long D = denominator_power;
  // binom(m - j + D - 1, D - 1) as a polynomial in m: expand the product
  // (m - j + 1)(m - j + 2)...(m - j + D - 1) / (D-1)!
  std::vector<mpq_class> acc(static_cast<size_t>(D), 0);
  mpz_class fact = 1;
  for (long r = 2; r < D; ++r) fact *= r;
  for (size_t j = 0; j < numerator.size(); ++j) {
    std::vector<mpq_class> prod{mpq_class(numerator[j])};
    for (long r = 1; r <= D - 1; ++r) {
      mpq_class c = mpq_class(r) - mpq_class(static_cast<long>(j));
      std::vector<mpq_class> next(prod.size() + 1, 0);
      for (size_t k = 0; k < prod.size(); ++k) {
        next[k] += prod[k] * c;
        next[k + 1] += prod[k];
      }
      prod = std::move(next);
    }
    for (size_t k = 0; k < prod.size(); ++k) acc[k] += prod[k];
  }
  for (mpq_class& c : acc) {
    c /= mpq_class(fact);
    c.canonicalize();
  }
  while (acc.size() > 1 && acc.back() == 0) acc.pop_back();
  return acc;
}

mpz_class HilbertSeries::projective_degree() const {
  if (denominator_power == 0 || is_zero()) {
    throw DimensionError("projective degree of a finite-dimensional quotient");
  }
  mpz_class total = 0;
  for (const mpz_class& c : numerator) total += c;
  return total;
}

std::string HilbertSeries::to_string() const {
  if (is_zero()) return "0";
  std::string out = "(";
  bool first = true;
  for (size_t j = 0; j < numerator.size(); ++j) {
    if (numerator[j] == 0) continue;
    mpz_class c = numerator[j];
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    mpz_class a = abs(c);
    if (a != 1 || j == 0) out += a.get_str();
    if (j > 0) {
      if (a != 1) out += "*";
      out += "t";
      if (j > 1) out += "^" + std::to_string(j);
    }
  }
  out += ")";
  if (denominator_power > 0) {
    out += " / (1-t)";
    if (denominator_power > 1) {
      out += "^" + std::to_string(denominator_power);
    }
  }
  return out;
}

long quotient_graded_dimension(const Ideal& ideal, long m) {
  if (!ideal.is_homogeneous()) {
    throw PreconditionError(
        "graded dimension needs a homogeneous ideal");
  }
  if (m < 0) return 0;
  int n = ideal.nvars();
  std::vector<Monomial> basis = monomials_of_degree(n, m);
  std::map<std::vector<uint32_t>, size_t> index;
  for (size_t i = 0; i < basis.size(); ++i) index[basis[i].exponents()] = i;
  std::vector<std::vector<Scalar>> rows;
  for (const Polynomial& g : ideal.generators()) {
    if (g.is_zero()) continue;
    long dg = g.degree();
    if (dg > m) continue;
    for (const Monomial& mult : monomials_of_degree(n, m - dg)) {
      std::vector<Scalar> row(basis.size(), Scalar::zero(ideal.field()));
      for (const Term& t : g.terms()) {
        Monomial prod = t.monomial * mult;
        row[index.at(prod.exponents())] = t.coefficient;
      }
      rows.push_back(std::move(row));
    }
  }
  long rank = rows.empty() ? 0 : matrix_rank(std::move(rows), ideal.field());
  return static_cast<long>(basis.size()) - rank;
}

}  // namespace grodeg

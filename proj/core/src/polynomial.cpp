#include "grodeg/polynomial.hpp"

#include <algorithm>
#include <map>

namespace grodeg {
namespace {

struct CanonicalGreater {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return Monomial::lex_less(b, a);
  }
};

}  // namespace

Polynomial::Polynomial(const Field& f, int nvars) : field_(f), nvars_(nvars) {
  if (nvars <= 0) throw DimensionError("polynomial needs at least one variable");
}

Polynomial Polynomial::constant(const Field& f, int nvars, const Scalar& c) {
  Polynomial p(f, nvars);
  if (c.field() != f) throw FieldMismatchError("constant from foreign field");
  if (!c.is_zero()) p.normalize({Term{Monomial::one(nvars), c}});
  return p;
}

Polynomial Polynomial::term(const Monomial& m, const Scalar& c) {
  Polynomial p(c.field(), m.nvars());
  if (!c.is_zero()) p.normalize({Term{m, c}});
  return p;
}

Polynomial Polynomial::variable(const Field& f, int nvars, int i) {
  return term(Monomial::variable(nvars, i), Scalar::one(f));
}

Polynomial Polynomial::from_terms(const Field& f, int nvars,
                                  std::vector<Term> terms) {
  Polynomial p(f, nvars);
  for (const Term& t : terms) {
    if (t.monomial.nvars() != nvars)
      throw DimensionError("term over wrong variable count");
    if (t.coefficient.field() != f)
      throw FieldMismatchError("term coefficient from foreign field");
  }
  p.normalize(std::move(terms));
  return p;
}

void Polynomial::normalize(std::vector<Term> raw) {
  std::map<Monomial, Scalar, CanonicalGreater> acc;
  for (Term& t : raw) {
    auto it = acc.find(t.monomial);
    if (it == acc.end())
      acc.emplace(std::move(t.monomial), std::move(t.coefficient));
    else
      it->second += t.coefficient;
  }
  terms_.clear();
  terms_.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (!c.is_zero()) terms_.push_back(Term{m, c});
  recompute_degree();
}

void Polynomial::recompute_degree() {
  degree_ = -1;
  homogeneous_ = true;
  long first = -1;
  for (const Term& t : terms_) {
    long d = t.monomial.degree();
    degree_ = std::max(degree_, d);
    if (first < 0)
      first = d;
    else if (d != first)
      homogeneous_ = false;
  }
}

Scalar Polynomial::coefficient(const Monomial& m) const {
  for (const Term& t : terms_)
    if (t.monomial == m) return t.coefficient;
  return Scalar::zero(field_);
}

std::vector<Monomial> Polynomial::support() const {
  std::vector<Monomial> s;
  s.reserve(terms_.size());
  for (const Term& t : terms_) s.push_back(t.monomial);
  return s;
}

Polynomial Polynomial::operator-() const {
  Polynomial p(field_, nvars_);
  p.terms_ = terms_;
  for (Term& t : p.terms_) t.coefficient = -t.coefficient;
  p.degree_ = degree_;
  p.homogeneous_ = homogeneous_;
  return p;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  if (field_ != o.field_) throw FieldMismatchError("adding over different fields");
  if (nvars_ != o.nvars_)
    throw DimensionError("adding over different variable counts");
  // merge of two canonically sorted term lists
  Polynomial p(field_, nvars_);
  p.terms_.reserve(terms_.size() + o.terms_.size());
  size_t i = 0, j = 0;
  while (i < terms_.size() || j < o.terms_.size()) {
    if (j == o.terms_.size() ||
        (i < terms_.size() &&
         Monomial::lex_less(o.terms_[j].monomial, terms_[i].monomial))) {
      p.terms_.push_back(terms_[i++]);
    } else if (i == terms_.size() ||
               Monomial::lex_less(terms_[i].monomial, o.terms_[j].monomial)) {
      p.terms_.push_back(o.terms_[j++]);
    } else {
      Scalar c = terms_[i].coefficient + o.terms_[j].coefficient;
      if (!c.is_zero()) p.terms_.push_back(Term{terms_[i].monomial, c});
      ++i;
      ++j;
    }
  }
  p.recompute_degree();
  return p;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
  if (field_ != o.field_)
    throw FieldMismatchError("multiplying over different fields");
  if (nvars_ != o.nvars_)
    throw DimensionError("multiplying over different variable counts");
  std::map<Monomial, Scalar, CanonicalGreater> acc;
  for (const Term& a : terms_) {
    for (const Term& b : o.terms_) {
      Monomial m = a.monomial * b.monomial;
      Scalar c = a.coefficient * b.coefficient;
      auto it = acc.find(m);
      if (it == acc.end())
        acc.emplace(std::move(m), std::move(c));
      else
        it->second += c;
    }
  }
  Polynomial p(field_, nvars_);
  for (auto& [m, c] : acc)
    if (!c.is_zero()) p.terms_.push_back(Term{m, c});
  p.recompute_degree();
  return p;
}

Polynomial Polynomial::operator*(const Scalar& c) const {
  if (c.field() != field_) throw FieldMismatchError("scaling by foreign scalar");
  if (c.is_zero()) return Polynomial(field_, nvars_);
  Polynomial p(field_, nvars_);
  p.terms_ = terms_;
  for (Term& t : p.terms_) t.coefficient *= c;
  p.degree_ = degree_;
  p.homogeneous_ = homogeneous_;
  return p;
}

Polynomial Polynomial::operator*(const Term& t) const {
  if (t.coefficient.field() != field_)
    throw FieldMismatchError("scaling by foreign term");
  if (t.coefficient.is_zero()) return Polynomial(field_, nvars_);
  Polynomial p(field_, nvars_);
  p.terms_.reserve(terms_.size());
  for (const Term& a : terms_)
    p.terms_.push_back(Term{a.monomial * t.monomial, a.coefficient * t.coefficient});
  p.recompute_degree();
  return p;
}

bool Polynomial::operator==(const Polynomial& o) const {
  return field_ == o.field_ && nvars_ == o.nvars_ && terms_ == o.terms_;
}

Polynomial Polynomial::derivative(int k) const {
  if (k < 0 || k >= nvars_) throw DimensionError("derivative variable out of range");
  std::vector<Term> out;
  for (const Term& t : terms_) {
    uint32_t e = t.monomial.exponent(k);
    if (e == 0) continue;
    Scalar c = t.coefficient * Scalar::from_int(field_, static_cast<long>(e));
    if (c.is_zero()) continue;  // characteristic p kills p-th powers
    std::vector<uint32_t> exps = t.monomial.exponents();
    exps[static_cast<size_t>(k)] = e - 1;
    out.push_back(Term{Monomial::from_exponents(std::move(exps)), c});
  }
  return from_terms(field_, nvars_, std::move(out));
}

Scalar Polynomial::evaluate(std::span<const Scalar> point) const {
  if (static_cast<int>(point.size()) != nvars_)
    throw DimensionError("evaluation point has wrong length");
  for (const Scalar& x : point)
    if (x.field() != field_) throw FieldMismatchError("evaluation point field");
  Scalar sum = Scalar::zero(field_);
  for (const Term& t : terms_) {
    Scalar v = t.coefficient;
    for (int i = 0; i < nvars_; ++i) {
      for (uint32_t e = t.monomial.exponent(i); e > 0; --e) {
        v *= point[static_cast<size_t>(i)];
        if (v.is_zero()) break;
      }
      if (v.is_zero()) break;
    }
    sum += v;
  }
  return sum;
}

Polynomial Polynomial::substitute(int k, const Polynomial& value) const {
  if (k < 0 || k >= nvars_) throw DimensionError("substitution variable out of range");
  if (value.field() != field_ || value.nvars() != nvars_)
    throw FieldMismatchError("substitution value over wrong ring");
  std::vector<Polynomial> powers{Polynomial::constant(field_, nvars_, Scalar::one(field_))};
  Polynomial result(field_, nvars_);
  for (const Term& t : terms_) {
    uint32_t e = t.monomial.exponent(k);
    while (powers.size() <= e) powers.push_back(powers.back() * value);
    std::vector<uint32_t> exps = t.monomial.exponents();
    exps[static_cast<size_t>(k)] = 0;
    result = result +
             powers[e] * Term{Monomial::from_exponents(std::move(exps)), t.coefficient};
  }
  return result;
}

Polynomial Polynomial::monic(const MonomialOrder& ord) const {
  return *this * leading_term(ord).coefficient.inverse();
}

const Term& Polynomial::leading_term(const MonomialOrder& ord) const {
  if (terms_.empty()) throw DomainError("leading term of the zero polynomial");
  const Term* best = &terms_[0];
  for (size_t i = 1; i < terms_.size(); ++i)
    if (ord.greater(terms_[i].monomial, best->monomial)) best = &terms_[i];
  return *best;
}

const Monomial& Polynomial::leading_monomial(const MonomialOrder& ord) const {
  return leading_term(ord).monomial;
}

std::vector<Term> Polynomial::sorted_terms(const MonomialOrder& ord) const {
  std::vector<Term> out = terms_;
  std::stable_sort(out.begin(), out.end(), [&](const Term& a, const Term& b) {
    return ord.greater(a.monomial, b.monomial);
  });
  return out;
}

namespace {

std::string format_terms(const std::vector<Term>& terms) {
  std::string s;
  for (const Term& t : terms) {
    std::string c = t.coefficient.to_string();
    bool neg = !c.empty() && c[0] == '-';
    if (neg) c.erase(0, 1);
    if (s.empty()) {
      if (neg) s += '-';
    } else {
      s += neg ? " - " : " + ";
    }
    bool unit_coeff = c == "1";
    if (!unit_coeff || t.monomial.is_one()) s += c;
    if (!t.monomial.is_one()) {
      if (!unit_coeff) s += '*';
      s += t.monomial.to_string();
    }
  }
  return s.empty() ? "0" : s;
}

}  // namespace

std::string Polynomial::to_string() const { return format_terms(terms_); }

std::string Polynomial::to_string(const MonomialOrder& ord) const {
  return format_terms(sorted_terms(ord));
}

Polynomial drop_variable(const Polynomial& p, int v) {
  int n = p.nvars();
  if (v < 0 || v >= n) throw DimensionError("dropped variable out of range");
  if (n < 2) throw DimensionError("cannot shrink a one-variable ring");
  std::vector<Term> terms;
  terms.reserve(p.term_count());
  for (const Term& t : p.terms()) {
    if (t.monomial.contains_variable(v)) {
      throw PreconditionError("polynomial mentions dropped variable X" +
                              std::to_string(v));
    }
    std::vector<uint32_t> exps;
    exps.reserve(static_cast<size_t>(n) - 1);
    for (int j = 0; j < n; ++j) {
      if (j != v) exps.push_back(t.monomial.exponent(j));
    }
    terms.push_back(Term{Monomial::from_exponents(std::move(exps)),
                         t.coefficient});
  }
  return Polynomial::from_terms(p.field(), n - 1, std::move(terms));
}

}  // namespace grodeg

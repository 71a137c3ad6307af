#ifndef GRODEG_POLYNOMIAL_HPP
#define GRODEG_POLYNOMIAL_HPP

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "grodeg/monomial.hpp"
#include "grodeg/order.hpp"
#include "grodeg/scalar.hpp"

namespace grodeg {

struct Term {
  Monomial monomial;
  Scalar coefficient;
  bool operator==(const Term&) const = default;
};

// Multivariate polynomial over a fixed field and variable count.
// Terms are stored with nonzero coefficients in a canonical order; views
// sorted by a user-selected monomial order are computed on demand.
class Polynomial {
 public:
  Polynomial(const Field& f, int nvars);
  static Polynomial zero(const Field& f, int nvars) { return Polynomial(f, nvars); }
  static Polynomial constant(const Field& f, int nvars, const Scalar& c);
  static Polynomial term(const Monomial& m, const Scalar& c);
  static Polynomial variable(const Field& f, int nvars, int i);
  static Polynomial from_terms(const Field& f, int nvars, std::vector<Term> terms);

  const Field& field() const { return field_; }
  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }

  Scalar coefficient(const Monomial& m) const;
  std::vector<Monomial> support() const;
  bool is_homogeneous() const { return homogeneous_; }
  long degree() const { return degree_; }  // max total degree, -1 for zero

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator*(const Scalar& c) const;
  Polynomial operator*(const Term& t) const;
  bool operator==(const Polynomial& o) const;
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  // Formal partial derivative with respect to X_k.
  Polynomial derivative(int k) const;
  Scalar evaluate(std::span<const Scalar> point) const;
  // Simultaneous substitution X_k -> value; the value may mention X_k.
  Polynomial substitute(int k, const Polynomial& value) const;
  // Monic rescaling by the inverse leading coefficient.
  Polynomial monic(const MonomialOrder& ord) const;

  const Term& leading_term(const MonomialOrder& ord) const;  // DomainError on 0
  const Monomial& leading_monomial(const MonomialOrder& ord) const;
  std::vector<Term> sorted_terms(const MonomialOrder& ord) const;  // descending

  std::string to_string() const;  // canonical order
  std::string to_string(const MonomialOrder& ord) const;

 private:
  void normalize(std::vector<Term> raw);
  void recompute_degree();

  Field field_;
  int nvars_;
  std::vector<Term> terms_;  // canonical: Monomial::lex_less descending
  bool homogeneous_ = true;
  long degree_ = -1;
};

inline Polynomial operator*(const Scalar& c, const Polynomial& p) { return p * c; }

// Reinterprets p over the ring with variable X_v removed, shifting the later
// variables down by one.  PreconditionError if p mentions X_v.
Polynomial drop_variable(const Polynomial& p, int v);

}  // namespace grodeg

#endif

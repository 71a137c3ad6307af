#ifndef GRODEG_MONOMIAL_HPP
#define GRODEG_MONOMIAL_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "grodeg/error.hpp"

namespace grodeg {

// Monomial in variables X0..X{n-1}, dense exponent vector.
class Monomial {
 public:
  explicit Monomial(int nvars) : exp_(check_nvars(nvars), 0) {}
  static Monomial one(int nvars) { return Monomial(nvars); }
  static Monomial variable(int nvars, int i, uint32_t power = 1);
  static Monomial from_exponents(std::vector<uint32_t> exps);

  int nvars() const { return static_cast<int>(exp_.size()); }
  uint32_t exponent(int i) const { return exp_[static_cast<size_t>(i)]; }
  const std::vector<uint32_t>& exponents() const { return exp_; }
  long degree() const;
  bool is_one() const;
  bool is_squarefree() const;
  bool contains_variable(int i) const { return exponent(i) > 0; }

  bool divides(const Monomial& m) const;
  bool coprime_with(const Monomial& m) const;
  Monomial operator*(const Monomial& m) const;
  // Quotient this / m; PreconditionError unless m divides this.
  Monomial operator/(const Monomial& m) const;
  static Monomial lcm(const Monomial& a, const Monomial& b);

  bool operator==(const Monomial&) const = default;

  // Fixed tie-free total order used for canonical storage, independent of any
  // user-selected monomial order.
  static bool lex_less(const Monomial& a, const Monomial& b);

  std::string to_string() const;  // "X0*X2^2", "1"

 private:
  static int check_nvars(int nvars);
  void require_same_nvars(const Monomial& m) const;
  std::vector<uint32_t> exp_;
};

// All monomials of the given total degree, ascending under lex_less.
std::vector<Monomial> monomials_of_degree(int nvars, long degree);

}  // namespace grodeg

#endif

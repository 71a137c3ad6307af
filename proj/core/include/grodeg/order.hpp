#ifndef GRODEG_ORDER_HPP
#define GRODEG_ORDER_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "grodeg/monomial.hpp"

namespace grodeg {

// Multiplicative monomial order with 1 as the minimum.  All supported kinds
// respect X0 > X1 > ... > Xn.  An elimination block of size k compares the
// exponents of X0..X{k-1} lexicographically first, so any monomial touching
// the block beats any monomial outside it.
class MonomialOrder {
 public:
  enum class Kind { lex, degrevlex, weighted };

  static MonomialOrder lex() { return MonomialOrder(Kind::lex, {}, 0); }
  static MonomialOrder degrevlex() { return MonomialOrder(Kind::degrevlex, {}, 0); }
  // Weighted degree with degrevlex tie break.  Weights must be non-negative
  // and non-increasing, else the order would not respect X0 > ... > Xn.
  static MonomialOrder weighted(std::vector<int64_t> weights);

  MonomialOrder with_elimination_block(int k) const;
  // Restriction of the order to the ring with variable v removed.
  MonomialOrder without_variable(int v) const;

  Kind kind() const { return kind_; }
  int elimination_block() const { return block_; }
  const std::vector<int64_t>& weights() const { return weights_; }

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
  bool less(const Monomial& a, const Monomial& b) const {
    return compare(a, b) == std::strong_ordering::less;
  }
  bool greater(const Monomial& a, const Monomial& b) const {
    return compare(a, b) == std::strong_ordering::greater;
  }

  bool operator==(const MonomialOrder&) const = default;

  std::string to_string() const;  // "lex", "degrevlex", "weighted[...]"
  // Accepts "lex" or "degrevlex" (the command line surface).
  static MonomialOrder parse(std::string_view text);

 private:
  MonomialOrder(Kind k, std::vector<int64_t> w, int block)
      : kind_(k), weights_(std::move(w)), block_(block) {}
  std::strong_ordering compare_range(const Monomial& a, const Monomial& b,
                                     int lo, int hi) const;

  Kind kind_;
  std::vector<int64_t> weights_;
  int block_;
};

}  // namespace grodeg

#endif

#include "grodeg/order.hpp"

namespace grodeg {

MonomialOrder MonomialOrder::weighted(std::vector<int64_t> weights) {
  for (size_t i = 0; i < weights.size(); ++i) {
    if (weights[i] < 0)
      throw DomainError("weighted order needs non-negative weights");
    if (i > 0 && weights[i] > weights[i - 1])
      throw DomainError(
          "weighted order needs non-increasing weights to respect X0 > ... > Xn");
  }
  return MonomialOrder(Kind::weighted, std::move(weights), 0);
}

MonomialOrder MonomialOrder::with_elimination_block(int k) const {
  if (k < 0) throw DomainError("elimination block must be non-negative");
  MonomialOrder o = *this;
  o.block_ = k;
  return o;
}

MonomialOrder MonomialOrder::without_variable(int v) const {
  switch (kind_) {
    case Kind::lex:
      return lex();
    case Kind::degrevlex:
      return degrevlex();
    case Kind::weighted: {
      std::vector<int64_t> w = weights_;
      if (v >= 0 && v < static_cast<int>(w.size())) w.erase(w.begin() + v);
      return weighted(std::move(w));
    }
  }
  return lex();
}

std::strong_ordering MonomialOrder::compare_range(const Monomial& a,
                                                  const Monomial& b, int lo,
                                                  int hi) const {
  switch (kind_) {
    case Kind::lex:
      for (int i = lo; i < hi; ++i)
        if (a.exponent(i) != b.exponent(i))
          return a.exponent(i) <=> b.exponent(i);
      return std::strong_ordering::equal;
    case Kind::degrevlex: {
      long da = 0, db = 0;
      for (int i = lo; i < hi; ++i) {
        da += a.exponent(i);
        db += b.exponent(i);
      }
      if (da != db) return da <=> db;
      for (int i = hi - 1; i >= lo; --i)
        if (a.exponent(i) != b.exponent(i))
          return b.exponent(i) <=> a.exponent(i);  // smaller last exponent wins
      return std::strong_ordering::equal;
    }
    case Kind::weighted: {
      if (static_cast<int>(weights_.size()) < hi)
        throw DimensionError("weight vector shorter than variable count");
      int64_t wa = 0, wb = 0;
      for (int i = lo; i < hi; ++i) {
        wa += weights_[static_cast<size_t>(i)] * a.exponent(i);
        wb += weights_[static_cast<size_t>(i)] * b.exponent(i);
      }
      if (wa != wb) return wa <=> wb;
      long da = 0, db = 0;
      for (int i = lo; i < hi; ++i) {
        da += a.exponent(i);
        db += b.exponent(i);
      }
      if (da != db) return da <=> db;
      for (int i = hi - 1; i >= lo; --i)
        if (a.exponent(i) != b.exponent(i))
          return b.exponent(i) <=> a.exponent(i);
      return std::strong_ordering::equal;
    }
  }
  return std::strong_ordering::equal;
}

std::strong_ordering MonomialOrder::compare(const Monomial& a,
                                            const Monomial& b) const {
  if (a.nvars() != b.nvars())
    throw DimensionError("comparing monomials over different variable counts");
  int n = a.nvars();
  if (block_ > 0) {
    int k = std::min(block_, n);
    for (int i = 0; i < k; ++i)
      if (a.exponent(i) != b.exponent(i)) return a.exponent(i) <=> b.exponent(i);
    return compare_range(a, b, k, n);
  }
  return compare_range(a, b, 0, n);
}

std::string MonomialOrder::to_string() const {
  std::string s;
  switch (kind_) {
    case Kind::lex: s = "lex"; break;
    case Kind::degrevlex: s = "degrevlex"; break;
    case Kind::weighted: {
      s = "weighted[";
      for (size_t i = 0; i < weights_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(weights_[i]);
      }
      s += ']';
      break;
    }
  }
  if (block_ > 0) s += "+elim" + std::to_string(block_);
  return s;
}

MonomialOrder MonomialOrder::parse(std::string_view text) {
  if (text == "lex") return lex();
  if (text == "degrevlex") return degrevlex();
  throw DomainError("bad order spec '" + std::string(text) +
                    "', expected lex or degrevlex");
}

}  // namespace grodeg

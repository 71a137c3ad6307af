#include "grodeg/ideal.hpp"

#include <algorithm>

namespace grodeg {

Ideal Ideal::from_generators(const Field& f, int nvars,
                             std::vector<Polynomial> gens) {
  Ideal ideal(f, nvars);
  if (nvars <= 0) throw DimensionError("ideal needs at least one variable");
  for (const Polynomial& g : gens) {
    if (g.field() != f) throw FieldMismatchError("generator over foreign field");
    if (g.nvars() != nvars)
      throw DimensionError("generator over wrong variable count");
    if (g.is_zero()) throw DomainError("zero polynomial among ideal generators");
    if (!g.is_homogeneous()) ideal.homogeneous_ = false;
  }
  ideal.gens_ = std::move(gens);
  return ideal;
}

MonomialIdeal MonomialIdeal::from_generators(int nvars,
                                             std::vector<Monomial> gens) {
  if (nvars <= 0) throw DimensionError("ideal needs at least one variable");
  MonomialIdeal ideal(nvars);
  for (const Monomial& m : gens)
    if (m.nvars() != nvars)
      throw DimensionError("monomial generator over wrong variable count");
  // drop duplicates and non-minimal generators
  std::sort(gens.begin(), gens.end(), Monomial::lex_less);
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  for (const Monomial& m : gens) {
    bool redundant = false;
    for (const Monomial& g : gens) {
      if (g == m) continue;
      if (g.divides(m)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) ideal.gens_.push_back(m);
  }
  return ideal;
}

bool MonomialIdeal::contains(const Monomial& m) const {
  if (m.nvars() != nvars_)
    throw DimensionError("membership test over wrong variable count");
  for (const Monomial& g : gens_)
    if (g.divides(m)) return true;
  return false;
}

bool MonomialIdeal::is_squarefree() const {
  for (const Monomial& g : gens_)
    if (!g.is_squarefree()) return false;
  return true;
}

std::string MonomialIdeal::to_string() const {
  std::string s = "(";
  for (size_t i = 0; i < gens_.size(); ++i) {
    if (i) s += ", ";
    s += gens_[i].to_string();
  }
  if (gens_.empty()) s += "0";
  return s + ")";
}

}  // namespace grodeg

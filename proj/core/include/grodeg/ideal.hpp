#ifndef GRODEG_IDEAL_HPP
#define GRODEG_IDEAL_HPP

#include <string>
#include <vector>

#include "grodeg/polynomial.hpp"

namespace grodeg {

// Finitely generated ideal of K[X0..X{n-1}].  Generators are nonzero; the
// empty list is the zero ideal.
class Ideal {
 public:
  static Ideal from_generators(const Field& f, int nvars,
                               std::vector<Polynomial> gens);

  const Field& field() const { return field_; }
  int nvars() const { return nvars_; }
  const std::vector<Polynomial>& generators() const { return gens_; }
  bool is_zero() const { return gens_.empty(); }
  bool is_homogeneous() const { return homogeneous_; }

  bool operator==(const Ideal& o) const {
    return field_ == o.field_ && nvars_ == o.nvars_ && gens_ == o.gens_;
  }

 private:
  Ideal(const Field& f, int nvars) : field_(f), nvars_(nvars) {}
  Field field_;
  int nvars_;
  std::vector<Polynomial> gens_;
  bool homogeneous_ = true;
};

// Monomial ideal kept as its unique minimal generating set, canonically
// sorted; supports membership by divisibility.
class MonomialIdeal {
 public:
  static MonomialIdeal from_generators(int nvars, std::vector<Monomial> gens);
  static MonomialIdeal zero(int nvars) { return from_generators(nvars, {}); }

  int nvars() const { return nvars_; }
  const std::vector<Monomial>& generators() const { return gens_; }
  bool is_zero() const { return gens_.empty(); }
  bool contains(const Monomial& m) const;
  bool is_squarefree() const;

  bool operator==(const MonomialIdeal& o) const {
    return nvars_ == o.nvars_ && gens_ == o.gens_;
  }
  bool operator!=(const MonomialIdeal& o) const { return !(*this == o); }

  std::string to_string() const;  // "(X0*X2, X1*X3)"

 private:
  explicit MonomialIdeal(int nvars) : nvars_(nvars) {}
  int nvars_;
  std::vector<Monomial> gens_;
};

}  // namespace grodeg

#endif

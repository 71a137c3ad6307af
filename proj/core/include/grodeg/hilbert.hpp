#ifndef GRODEG_HILBERT_HPP
#define GRODEG_HILBERT_HPP

#include <gmpxx.h>

#include <vector>

#include "grodeg/ideal.hpp"
#include "grodeg/simplicial.hpp"

namespace grodeg {

// Hilbert series of a graded quotient S/I, written with the (1-t) factors
// fully cancelled: numerator / (1-t)^denominator_power with numerator(1) != 0.
// The denominator power is then the Krull dimension of the quotient.
struct HilbertSeries {
  std::vector<mpz_class> numerator;  // empty for the zero ring
  int denominator_power = 0;

  static HilbertSeries from_monomial_ideal(const MonomialIdeal& ideal);
  static HilbertSeries from_complex(const SimplicialComplex& complex);

  long krull_dimension() const { return denominator_power; }
  bool is_zero() const { return numerator.empty(); }

  // Exact Hilbert function value dim (S/I)_m.
  mpz_class value_at(long m) const;

  // Coefficients of the Hilbert polynomial, constant term first; degree is
  // denominator_power - 1.  Empty when the quotient is finite-dimensional.
  std::vector<mpq_class> hilbert_polynomial() const;

  // Degree of the projective scheme: (dim-1)! times the leading coefficient
  // of the Hilbert polynomial.  DimensionError when the quotient is
  // finite-dimensional.
  mpz_class projective_degree() const;

  bool operator==(const HilbertSeries&) const = default;

  std::string to_string() const;
};

// Dimension of the graded piece (S/I)_m for a homogeneous ideal, computed by
// exact linear algebra on the multiplication maps into degree m.  Slow but
// independent of the Hilbert series recursion.
long quotient_graded_dimension(const Ideal& ideal, long m);

}  // namespace grodeg

#endif

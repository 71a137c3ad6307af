// Hilbert series against brute-force monomial counting, Hilbert polynomials,
// projective degrees, and the graded-dimension cross check.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include <grodeg/corpus.hpp>
#include <grodeg/error.hpp>
#include <grodeg/hilbert.hpp>
#include <grodeg/ideal.hpp>
#include <grodeg/poly_text.hpp>
#include <grodeg/simplicial.hpp>

#include "complex_enumeration.hpp"

using namespace grodeg;
using grodeg_tests::for_each_complex;

namespace {

const Field QQ = Field::rationals();

// number of degree-m monomials outside the ideal, counted one by one
long standard_monomials(const MonomialIdeal& ideal, long m) {
  long count = 0;
  for (const auto& mono : monomials_of_degree(ideal.nvars(), m))
    if (!ideal.contains(mono)) ++count;
  return count;
}

mpq_class eval_poly(const std::vector<mpq_class>& coeffs, long m) {
  mpq_class acc = 0, pow = 1;
  for (const auto& c : coeffs) {
    acc += c * pow;
    pow *= m;
  }
  return acc;
}

}  // namespace

TEST_CASE("series values match brute force counting on random monomial ideals") {
  std::mt19937_64 rng(123456);
  for (int trial = 0; trial < 150; ++trial) {
    int nvars = 2 + static_cast<int>(rng() % 3);
    std::vector<Monomial> gens;
    size_t k = rng() % 5;
    for (size_t i = 0; i < k; ++i) {
      std::vector<uint32_t> e(static_cast<size_t>(nvars));
      long deg = 0;
      for (auto& x : e) {
        x = static_cast<uint32_t>(rng() % 3);
        deg += x;
      }
      if (deg == 0) continue;
      gens.push_back(Monomial::from_exponents(e));
    }
    MonomialIdeal ideal = MonomialIdeal::from_generators(nvars, gens);
    HilbertSeries hs = HilbertSeries::from_monomial_ideal(ideal);
    for (long m = 0; m <= 8; ++m)
      CHECK(hs.value_at(m) == standard_monomials(ideal, m));
  }
}

TEST_CASE("series of polynomial rings, empty quotients and the zero ring") {
  HilbertSeries full = HilbertSeries::from_monomial_ideal(MonomialIdeal::zero(3));
  CHECK(full.numerator == std::vector<mpz_class>{1});
  CHECK(full.denominator_power == 3);
  CHECK(full.value_at(3) == 10);

  HilbertSeries point = HilbertSeries::from_complex(SimplicialComplex::empty_complex(3));
  CHECK(point.numerator == std::vector<mpz_class>{1});
  CHECK(point.denominator_power == 0);
  CHECK(point.value_at(0) == 1);
  CHECK(point.value_at(1) == 0);

  HilbertSeries zero = HilbertSeries::from_monomial_ideal(
      MonomialIdeal::from_generators(2, {Monomial::one(2)}));
  CHECK(zero.is_zero());
  CHECK(zero.value_at(0) == 0);
  CHECK(zero.krull_dimension() == 0);
  CHECK(HilbertSeries::from_complex(SimplicialComplex::void_complex(2)).is_zero());
}

TEST_CASE("star and square complexes, worked series") {
  auto star = SimplicialComplex::graph(4, {{0, 3}, {1, 3}, {2, 3}});
  HilbertSeries hs = HilbertSeries::from_complex(star);
  CHECK(hs.numerator == std::vector<mpz_class>{1, 2});
  CHECK(hs.denominator_power == 2);
  CHECK(hs.hilbert_polynomial() == std::vector<mpq_class>{1, 3});
  CHECK(hs.projective_degree() == 3);
  CHECK(hs.value_at(2) == 7);

  auto square = SimplicialComplex::graph(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
  HilbertSeries hc = HilbertSeries::from_complex(square);
  CHECK(hc.numerator == std::vector<mpz_class>{1, 2, 1});
  CHECK(hc.hilbert_polynomial() == std::vector<mpq_class>{0, 4});
  CHECK(hc.projective_degree() == 4);
  CHECK(hc.value_at(1) == 4);
  CHECK(hc.value_at(2) == 8);
}

TEST_CASE("path complexes of the rational normal curves") {
  for (int n = 3; n <= 6; ++n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) edges.push_back({i, i + 1});
    HilbertSeries hs =
        HilbertSeries::from_complex(SimplicialComplex::graph(n + 1, edges));
    CHECK(hs.hilbert_polynomial() == std::vector<mpq_class>{1, n});
    CHECK(hs.projective_degree() == n);
    CHECK(hs.krull_dimension() == 2);
  }
}

TEST_CASE("finite dimensional quotients have no hilbert polynomial") {
  MonomialIdeal ideal = MonomialIdeal::from_generators(
      2, {Monomial::variable(2, 0, 2), Monomial::variable(2, 1)});
  HilbertSeries hs = HilbertSeries::from_monomial_ideal(ideal);
  CHECK(hs.numerator == std::vector<mpz_class>{1, 1});
  CHECK(hs.denominator_power == 0);
  CHECK(hs.hilbert_polynomial().empty());
  CHECK_THROWS_AS(hs.projective_degree(), DimensionError);
  CHECK(hs.value_at(1) == 1);
  CHECK(hs.value_at(2) == 0);
}

TEST_CASE("complex and stanley-reisner routes agree across the census") {
  for_each_complex(4, [&](const SimplicialComplex& cx) {
    HilbertSeries a = HilbertSeries::from_complex(cx);
    HilbertSeries b = HilbertSeries::from_monomial_ideal(stanley_reisner(cx));
    CHECK(a == b);
    if (!cx.is_void()) CHECK(a.krull_dimension() == cx.dim() + 1);
    // the polynomial reproduces the function from the numerator degree on
    auto hp = a.hilbert_polynomial();
    long start = static_cast<long>(a.numerator.size());
    for (long m = start; m <= start + 2; ++m)
      CHECK(eval_poly(hp, m) == mpq_class(a.value_at(m)));
  });
}

TEST_CASE("graded dimensions of a quotient match the initial ideal series") {
  auto check_flat = [](const Ideal& ideal, const SimplicialComplex& cx) {
    HilbertSeries hs = HilbertSeries::from_complex(cx);
    for (long m = 0; m <= 6; ++m)
      CHECK(mpz_class(quotient_graded_dimension(ideal, m)) == hs.value_at(m));
  };
  check_flat(rational_normal_curve(QQ, 3),
             SimplicialComplex::graph(4, {{0, 1}, {1, 2}, {2, 3}}));
  check_flat(star_example(QQ),
             SimplicialComplex::graph(4, {{0, 3}, {1, 3}, {2, 3}}));

  // complete intersection of two quadrics in P^3: series (1+t)^2 / (1-t)^2
  Ideal ci = Ideal::from_generators(
      QQ, 4, {parse_polynomial("X0^2 + X1*X2 + X3^2", QQ, 4),
              parse_polynomial("X1^2 + X2*X3", QQ, 4)});
  HilbertSeries koszul = HilbertSeries::from_monomial_ideal(
      MonomialIdeal::from_generators(4, {Monomial::variable(4, 0, 2),
                                         Monomial::variable(4, 1, 2)}));
  CHECK(koszul.numerator == std::vector<mpz_class>{1, 2, 1});
  CHECK(koszul.hilbert_polynomial() == std::vector<mpq_class>{0, 4});
  for (long m = 0; m <= 6; ++m)
    CHECK(mpz_class(quotient_graded_dimension(ci, m)) == koszul.value_at(m));
}

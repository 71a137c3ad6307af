// Faces, complexes, Stanley-Reisner translation, reduced homology, the
// Reisner criterion.  The small-complex cases run over the full census of
// complexes on 4 and 5 vertices (168 and 7581 of them).
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <set>
#include <vector>

#include <grodeg/corpus.hpp>
#include <grodeg/error.hpp>
#include <grodeg/simplicial.hpp>

#include "complex_enumeration.hpp"

using namespace grodeg;
using grodeg_tests::for_each_complex;

namespace {

const Field QQ = Field::rationals();
const Field F2 = Field::prime(2);

SimplicialComplex c4() {
  return SimplicialComplex::graph(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
}

SimplicialComplex hollow_triangle() {
  return SimplicialComplex::graph(3, {{0, 1}, {1, 2}, {0, 2}});
}

// the unique 6-vertex triangulation of the real projective plane
SimplicialComplex rp2() {
  return SimplicialComplex::from_facets(
      6, {Face{0, 1, 4}, Face{0, 1, 5}, Face{0, 2, 3}, Face{0, 2, 5},
          Face{0, 3, 4}, Face{1, 2, 3}, Face{1, 2, 4}, Face{1, 3, 5},
          Face{2, 4, 5}, Face{3, 4, 5}});
}

long reduced_euler(const SimplicialComplex& cx) {
  // -f_{-1} + f_0 - f_1 + ... ; zero for the void complex
  if (cx.is_void()) return 0;
  long chi = 0, sign = -1;
  for (long f : cx.f_vector()) {
    chi += sign * f;
    sign = -sign;
  }
  return chi;
}

long homology_euler(const HomologyProfile& h) {
  long chi = 0, sign = -1;
  for (size_t i = 0; i < h.ranks.size(); ++i) {
    chi += sign * h.ranks[i];
    sign = -sign;
  }
  return chi;
}

}  // namespace

TEST_CASE("faces normalize and compare") {
  Face f({2, 0, 2});
  CHECK(f.vertices() == std::vector<int>{0, 2});
  CHECK(f.to_string() == "{0,2}");
  CHECK(f.dim() == 1);
  CHECK(f.contains(2));
  CHECK_FALSE(f.contains(1));
  CHECK(Face{0}.subset_of(f));
  CHECK_FALSE(f.subset_of(Face{0, 1}));
  CHECK(f.with(1) == Face{0, 1, 2});
  CHECK(f.without(0) == Face{2});
  CHECK(f.union_with(Face{1, 3}) == Face{0, 1, 2, 3});
  CHECK(f.intersects(Face{2, 3}));
  CHECK_FALSE(f.intersects(Face{1, 3}));
  CHECK(Face{}.empty());
  CHECK(Face{}.dim() == -1);
  CHECK(Face{} < f);
}

TEST_CASE("facet lists are canonicalized") {
  auto cx = SimplicialComplex::from_facets(
      3, {Face{0, 1}, Face{0}, Face{0, 1}, Face{2}});
  CHECK(cx.facets() == std::vector<Face>{Face{0, 1}, Face{2}});
  CHECK(cx.dim() == 1);
  CHECK(cx.contains(Face{1}));
  CHECK(cx.contains(Face{}));
  CHECK_FALSE(cx.contains(Face{1, 2}));
  CHECK_THROWS_AS(SimplicialComplex::from_facets(2, {Face{0, 2}}), PreconditionError);
}

TEST_CASE("void and empty complexes are distinct") {
  auto v = SimplicialComplex::void_complex(3);
  auto e = SimplicialComplex::empty_complex(3);
  CHECK(v.is_void());
  CHECK_FALSE(e.is_void());
  CHECK(v.dim() == -2);
  CHECK(e.dim() == -1);
  CHECK_FALSE(v.contains(Face{}));
  CHECK(e.contains(Face{}));
  CHECK(v.all_faces().empty());
  CHECK(e.all_faces().empty());
  CHECK_FALSE(v == e);
  CHECK(SimplicialComplex::full_simplex(3).dim() == 2);
}

TEST_CASE("graph complexes keep isolated vertices") {
  auto cx = SimplicialComplex::graph(4, {{0, 1}});
  CHECK(cx.faces_of_dim(0).size() == 4);
  CHECK(cx.faces_of_dim(1).size() == 1);
  CHECK(cx.has_full_vertex_set());
  CHECK_FALSE(SimplicialComplex::from_facets(3, {Face{0, 1}}).has_full_vertex_set());
}

TEST_CASE("f-vectors count faces by dimension") {
  auto path = SimplicialComplex::graph(4, {{0, 1}, {1, 2}, {2, 3}});
  CHECK(path.f_vector() == std::vector<long>{1, 4, 3});
  CHECK(SimplicialComplex::full_simplex(3).f_vector() ==
        std::vector<long>{1, 3, 3, 1});
  CHECK(SimplicialComplex::empty_complex(2).f_vector() == std::vector<long>{1});
  CHECK(path.all_faces().size() == 7);
}

TEST_CASE("links") {
  auto path = SimplicialComplex::graph(4, {{0, 1}, {1, 2}, {2, 3}});
  CHECK(path.link(Face{1}).facets() == std::vector<Face>{Face{0}, Face{2}});
  CHECK(path.link(Face{}) == path);
  CHECK(path.link(Face{0, 2}).is_void());
  auto full = SimplicialComplex::full_simplex(4);
  CHECK(full.link(Face{0, 1}).facets() == std::vector<Face>{Face{2, 3}});
}

TEST_CASE("minimal non-faces, worked examples") {
  CHECK(minimal_nonfaces(c4()) == std::vector<Face>{Face{0, 2}, Face{1, 3}});
  CHECK(minimal_nonfaces(hollow_triangle()) == std::vector<Face>{Face{0, 1, 2}});
  auto path = SimplicialComplex::graph(4, {{0, 1}, {1, 2}, {2, 3}});
  CHECK(minimal_nonfaces(path) ==
        std::vector<Face>{Face{0, 2}, Face{0, 3}, Face{1, 3}});
  CHECK(minimal_nonfaces(SimplicialComplex::full_simplex(3)).empty());
  CHECK(minimal_nonfaces(SimplicialComplex::void_complex(2)) ==
        std::vector<Face>{Face{}});
  CHECK(minimal_nonfaces(SimplicialComplex::empty_complex(2)) ==
        std::vector<Face>{Face{0}, Face{1}});
  CHECK(minimal_nonfaces(SimplicialComplex::graph(2, {})) ==
        std::vector<Face>{Face{0, 1}});
}

TEST_CASE("stanley-reisner ideals of the running examples") {
  MonomialIdeal sr = stanley_reisner(c4());
  CHECK(sr == MonomialIdeal::from_generators(
                  4, {Monomial::from_exponents({1, 0, 1, 0}),
                      Monomial::from_exponents({0, 1, 0, 1})}));
  CHECK(sr.is_squarefree());

  auto star = SimplicialComplex::graph(4, {{0, 3}, {1, 3}, {2, 3}});
  CHECK(stanley_reisner(star) ==
        MonomialIdeal::from_generators(4, {Monomial::from_exponents({1, 1, 0, 0}),
                                           Monomial::from_exponents({1, 0, 1, 0}),
                                           Monomial::from_exponents({0, 1, 1, 0})}));

  CHECK_THROWS_AS(
      complex_of(MonomialIdeal::from_generators(2, {Monomial::variable(2, 0, 2)})),
      DomainError);
}

TEST_CASE("stanley-reisner is a bijection on the 4 and 5 vertex census") {
  long count4 = 0;
  for_each_complex(4, [&](const SimplicialComplex& cx) {
    ++count4;
    MonomialIdeal sr = stanley_reisner(cx);
    CHECK(sr.is_squarefree());
    CHECK(complex_of(sr) == cx);
  });
  CHECK(count4 == 168);

  long count5 = 0;
  for_each_complex(5, [&](const SimplicialComplex& cx) {
    ++count5;
    if (complex_of(stanley_reisner(cx)) != cx) {
      CHECK(complex_of(stanley_reisner(cx)) == cx);
    }
    long faces = 0;
    for (long f : cx.f_vector()) faces += f;
    if (!cx.is_void())
      CHECK(faces == 1 + static_cast<long>(cx.all_faces().size()));
  });
  CHECK(count5 == 7581);
}

TEST_CASE("reduced homology of model spaces") {
  auto check_ranks = [](const SimplicialComplex& cx, const Field& f,
                        std::vector<std::pair<int, long>> expect) {
    HomologyProfile h = reduced_homology(cx, f);
    long total = std::accumulate(h.ranks.begin(), h.ranks.end(), 0L);
    long expected_total = 0;
    for (auto [i, r] : expect) {
      CHECK(h.rank(i) == r);
      expected_total += r;
    }
    CHECK(total == expected_total);
  };

  for (const Field& f : {QQ, F2}) {
    check_ranks(hollow_triangle(), f, {{1, 1}});
    check_ranks(c4(), f, {{1, 1}});
    // boundary of the tetrahedron is a 2-sphere
    check_ranks(SimplicialComplex::from_facets(4, {Face{0, 1, 2}, Face{0, 1, 3},
                                                   Face{0, 2, 3}, Face{1, 2, 3}}),
                f, {{2, 1}});
    check_ranks(SimplicialComplex::graph(2, {}), f, {{0, 1}});
    check_ranks(SimplicialComplex::empty_complex(3), f, {{-1, 1}});
    check_ranks(SimplicialComplex::void_complex(3), f, {});
    check_ranks(SimplicialComplex::full_simplex(4), f, {});
    // two disjoint circles
    check_ranks(SimplicialComplex::graph(6, {{0, 1}, {1, 2}, {0, 2},
                                             {3, 4}, {4, 5}, {3, 5}}),
                f, {{0, 1}, {1, 2}});
  }
}

TEST_CASE("projective plane homology depends on the field") {
  auto cx = rp2();
  CHECK(cx.f_vector() == std::vector<long>{1, 6, 15, 10});
  HomologyProfile hq = reduced_homology(cx, QQ);
  CHECK(hq.rank(0) == 0);
  CHECK(hq.rank(1) == 0);
  CHECK(hq.rank(2) == 0);
  HomologyProfile h2 = reduced_homology(cx, F2);
  CHECK(h2.rank(0) == 0);
  CHECK(h2.rank(1) == 1);
  CHECK(h2.rank(2) == 1);
  CHECK(a_invariant_negative(cx, QQ));
  CHECK_FALSE(a_invariant_negative(cx, F2));
}

TEST_CASE("graph homology matches the component and cycle counts") {
  for (const Field& f : {QQ, F2}) {
    for (uint32_t mask = 0; mask < (1u << 10); ++mask) {
      std::vector<std::pair<int, int>> edges;
      int bit = 0;
      for (int a = 0; a < 5; ++a)
        for (int b = a + 1; b < 5; ++b, ++bit)
          if (mask & (1u << bit)) edges.push_back({a, b});

      // union-find component count over all 5 vertices
      std::vector<int> parent(5);
      std::iota(parent.begin(), parent.end(), 0);
      std::function<int(int)> find = [&](int x) {
        return parent[x] == x ? x : parent[x] = find(parent[x]);
      };
      for (auto [a, b] : edges) parent[find(a)] = find(b);
      std::set<int> roots;
      for (int v = 0; v < 5; ++v) roots.insert(find(v));
      long comps = static_cast<long>(roots.size());

      HomologyProfile h =
          reduced_homology(SimplicialComplex::graph(5, edges), f);
      CHECK(h.rank(0) == comps - 1);
      CHECK(h.rank(1) == static_cast<long>(edges.size()) - 5 + comps);
      CHECK(h.rank(-1) == 0);
    }
  }
}

TEST_CASE("euler characteristic agrees between faces and homology") {
  for (const Field& f : {QQ, F2}) {
    for_each_complex(4, [&](const SimplicialComplex& cx) {
      CHECK(reduced_euler(cx) == homology_euler(reduced_homology(cx, f)));
    });
  }
}

TEST_CASE("acyclicity") {
  CHECK(is_acyclic(SimplicialComplex::graph(4, {{0, 1}, {1, 2}, {2, 3}}), QQ, 1));
  CHECK_FALSE(is_acyclic(c4(), QQ, 1));
  CHECK(is_acyclic(SimplicialComplex::full_simplex(4), F2, 3));
  // acyclic in low dimensions only
  CHECK(is_acyclic(c4(), QQ, 0));
}

TEST_CASE("reisner criterion") {
  for (const Field& f : {QQ, F2}) {
    CHECK(is_cohen_macaulay(c4(), f));
    CHECK(is_cohen_macaulay(hollow_triangle(), f));
    CHECK(is_cohen_macaulay(SimplicialComplex::graph(4, {{0, 1}, {1, 2}, {2, 3}}), f));
    CHECK(is_cohen_macaulay(SimplicialComplex::full_simplex(3), f));
    CHECK(is_cohen_macaulay(SimplicialComplex::from_facets(
                                4, {Face{0, 1, 2}, Face{0, 1, 3}, Face{0, 2, 3},
                                    Face{1, 2, 3}}),
                            f));
    // disconnected: fails at the empty face
    CHECK_FALSE(is_cohen_macaulay(SimplicialComplex::graph(4, {{0, 1}, {2, 3}}), f));
    // not pure: a triangle with a pendant edge
    CHECK_FALSE(is_cohen_macaulay(
        SimplicialComplex::from_facets(4, {Face{0, 1, 2}, Face{2, 3}}), f));
  }
  // the projective plane is 2-dimensional, so CM needs H_1 = 0: true over QQ only
  CHECK(is_cohen_macaulay(rp2(), QQ));
  CHECK_FALSE(is_cohen_macaulay(rp2(), F2));
}

TEST_CASE("negative a-invariant means vanishing top homology") {
  CHECK(a_invariant_negative(SimplicialComplex::graph(4, {{0, 1}, {1, 2}, {2, 3}}), QQ));
  CHECK_FALSE(a_invariant_negative(c4(), QQ));
  CHECK_FALSE(a_invariant_negative(hollow_triangle(), F2));
  CHECK(a_invariant_negative(SimplicialComplex::full_simplex(3), QQ));
}

TEST_CASE("degree zero local cohomology repeats the homology ranks") {
  for (const Field& f : {QQ, F2}) {
    for (const auto& cx :
         {c4(), hollow_triangle(), rp2(),
          SimplicialComplex::graph(4, {{0, 1}, {1, 2}, {2, 3}})}) {
      HomologyProfile h = reduced_homology(cx, f);
      std::vector<long> local = hochster_degree_zero(cx, f);
      for (size_t i = 0; i < local.size(); ++i)
        CHECK(local[i] == h.rank(static_cast<int>(i)));
    }
  }
}

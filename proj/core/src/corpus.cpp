#include "grodeg/corpus.hpp"

#include "grodeg/error.hpp"
#include "grodeg/simplicial.hpp"

namespace grodeg {

Ideal rational_normal_curve(const Field& f, int n) {
  if (n < 1) throw PreconditionError("rational normal curve needs degree >= 1");
  int N = n + 1;
  std::vector<Polynomial> gens;
  for (int i = 0; i < n - 1; ++i) {
    for (int j = i + 1; j < n; ++j) {
      Polynomial a =
          Polynomial::variable(f, N, i) * Polynomial::variable(f, N, j + 1);
      Polynomial b =
          Polynomial::variable(f, N, i + 1) * Polynomial::variable(f, N, j);
      gens.push_back(a - b);
    }
  }
  return Ideal::from_generators(f, N, std::move(gens));
}

Ideal star_example(const Field& f) {
  const int n = 4;
  auto X = [&](int i) { return Polynomial::variable(f, n, i); };
  Polynomial m[2][3] = {
      {X(1) + X(2) + X(3), X(1) + X(3), X(1)},
      {X(1) + X(3), X(1), X(0) + X(1)},
  };
  std::vector<Polynomial> gens;
  for (int a = 0; a < 3; ++a) {
    for (int b = a + 1; b < 3; ++b) {
      gens.push_back(m[0][a] * m[1][b] - m[0][b] * m[1][a]);
    }
  }
  return Ideal::from_generators(f, n, std::move(gens));
}

Graph path_graph(int nverts) {
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v + 1 < nverts; ++v) edges.emplace_back(v, v + 1);
  return Graph::from_edges(nverts, std::move(edges));
}

Graph cycle_graph(int nverts) {
  if (nverts < 3) throw PreconditionError("cycle needs at least 3 vertices");
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v + 1 < nverts; ++v) edges.emplace_back(v, v + 1);
  edges.emplace_back(nverts - 1, 0);
  return Graph::from_edges(nverts, std::move(edges));
}

Graph star_graph() {
  return Graph::from_edges(4, {{0, 3}, {1, 3}, {2, 3}});
}

Graph triangle_graph() {
  return Graph::from_edges(3, {{0, 1}, {0, 2}, {1, 2}});
}

Graph pendant_triangle_graph() {
  return Graph::from_edges(4, {{0, 1}, {1, 2}, {1, 3}, {2, 3}});
}

std::vector<Graph> connected_graphs(int nverts) {
  if (nverts < 1 || nverts > 7) {
    throw BudgetError("connected-graph enumeration supports 1..7 vertices");
  }
  std::vector<std::pair<int, int>> all_edges;
  for (int a = 0; a < nverts; ++a) {
    for (int b = a + 1; b < nverts; ++b) all_edges.emplace_back(a, b);
  }
  std::vector<Graph> out;
  uint64_t limit = uint64_t{1} << all_edges.size();
  for (uint64_t mask = 0; mask < limit; ++mask) {
    std::vector<std::pair<int, int>> edges;
    for (size_t e = 0; e < all_edges.size(); ++e) {
      if (mask & (uint64_t{1} << e)) edges.push_back(all_edges[e]);
    }
    Graph g = Graph::from_edges(nverts, std::move(edges));
    if (is_connected(g)) out.push_back(std::move(g));
  }
  return out;
}

Graph random_tree_with_free_zero(std::mt19937_64& rng, int nverts) {
  if (nverts < 2) {
    throw PreconditionError("a tree with a free vertex needs >= 2 vertices");
  }
  std::vector<std::pair<int, int>> edges;
  for (int v = 2; v < nverts; ++v) {
    int parent = 1 + static_cast<int>(rng() % static_cast<uint64_t>(v - 1));
    edges.emplace_back(parent, v);
  }
  int anchor = 1 + static_cast<int>(rng() % static_cast<uint64_t>(nverts - 1));
  edges.emplace_back(0, anchor);
  return Graph::from_edges(nverts, std::move(edges));
}

Ideal triangular_deformation(const SimplicialComplex& delta, const Field& f,
                             std::mt19937_64& rng, long coeff_height,
                             int moves) {
  int n = delta.nverts();
  if (n < 2) throw PreconditionError("deformation needs at least 2 vertices");
  if (coeff_height < 1) throw PreconditionError("coefficient height >= 1");
  MonomialIdeal sr = stanley_reisner(delta);
  std::vector<Polynomial> gens;
  for (const Monomial& m : sr.generators()) {
    gens.push_back(Polynomial::term(m, Scalar::one(f)));
  }
  for (int step = 0; step < moves; ++step) {
    int c = static_cast<int>(rng() % static_cast<uint64_t>(n - 1));
    int d = c + 1 +
            static_cast<int>(rng() % static_cast<uint64_t>(n - 1 - c));
    Scalar u = Scalar::zero(f);
    if (f.is_prime_field()) {
      u = Scalar::from_int(
          f, 1 + static_cast<long>(rng() % (f.characteristic() - 1)));
    } else {
      long v = 1 + static_cast<long>(rng() % static_cast<uint64_t>(coeff_height));
      if (rng() % 2) v = -v;
      u = Scalar::from_int(f, v);
    }
    Polynomial value = Polynomial::variable(f, n, c) +
                       Polynomial::variable(f, n, d) * u;
    for (Polynomial& g : gens) g = g.substitute(c, value);
  }
  return Ideal::from_generators(f, n, std::move(gens));
}

}  // namespace grodeg

#ifndef GRODEG_COLLAPSE_HPP
#define GRODEG_COLLAPSE_HPP

#include <string>
#include <utility>
#include <vector>

#include "grodeg/simplicial.hpp"

namespace grodeg {

// Finite simple graph on the vertex pool {0..n-1}; isolated vertices allowed.
class Graph {
 public:
  static Graph from_edges(int nverts, std::vector<std::pair<int, int>> edges);
  // Requires dim <= 1 and full vertex set.
  static Graph from_complex(const SimplicialComplex& complex);

  int nverts() const { return nverts_; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  bool has_edge(int a, int b) const;
  long degree(int v) const;
  std::vector<int> neighbors(int v) const;
  SimplicialComplex as_complex() const;

  bool operator==(const Graph&) const = default;

  std::string to_string() const;

 private:
  Graph(int nverts, std::vector<std::pair<int, int>> edges)
      : nverts_(nverts), edges_(std::move(edges)) {}
  int nverts_;
  std::vector<std::pair<int, int>> edges_;  // canonical: a < b, sorted
};

// Vertices of `within` whose degree in the induced subgraph is exactly 1.
std::vector<int> free_vertices(const Graph& graph,
                               const std::vector<int>& within);

struct CollapseResult {
  std::vector<int> removed;  // removal order for the greedy run
  std::vector<int> core;     // sorted surviving vertices
  long count() const { return static_cast<long>(removed.size()); }
  bool operator==(const CollapseResult&) const = default;
};

// Deterministic collapse: repeatedly delete the smallest-index free vertex of
// the current induced subgraph until none remains.
CollapseResult collapse(const Graph& graph);

// Every terminal state reachable by some removal order.  The removed list of
// each branch is reported sorted.  BudgetError above max_vertices.
std::vector<CollapseResult> collapse_all_branches(const Graph& graph,
                                                  int max_vertices = 8);

bool is_connected(const Graph& graph);
bool is_tree(const Graph& graph);

}  // namespace grodeg

#endif

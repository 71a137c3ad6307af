#include "grodeg/collapse.hpp"

#include <algorithm>
#include <cstdint>
#include <set>

#include "grodeg/error.hpp"

namespace grodeg {

Graph Graph::from_edges(int nverts, std::vector<std::pair<int, int>> edges) {
  if (nverts < 0) throw PreconditionError("negative vertex count");
  for (auto& [a, b] : edges) {
    if (a == b) throw PreconditionError("loop edge " + std::to_string(a));
    if (a > b) std::swap(a, b);
    if (a < 0 || b >= nverts) {
      throw PreconditionError("edge endpoint outside vertex pool");
    }
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return Graph(nverts, std::move(edges));
}

Graph Graph::from_complex(const SimplicialComplex& complex) {
  if (complex.dim() > 1) {
    throw PreconditionError("complex of dimension " +
                            std::to_string(complex.dim()) + " is not a graph");
  }
  if (!complex.has_full_vertex_set()) {
    throw PreconditionError("graph complex must contain every vertex");
  }
  std::vector<std::pair<int, int>> edges;
  for (const Face& f : complex.faces_of_dim(1)) {
    edges.emplace_back(f.vertices()[0], f.vertices()[1]);
  }
  return from_edges(complex.nverts(), std::move(edges));
}

bool Graph::has_edge(int a, int b) const {
  if (a > b) std::swap(a, b);
  return std::binary_search(edges_.begin(), edges_.end(), std::pair{a, b});
}

long Graph::degree(int v) const {
  long d = 0;
  for (auto [a, b] : edges_) {
    if (a == v || b == v) ++d;
  }
  return d;
}

std::vector<int> Graph::neighbors(int v) const {
  std::vector<int> out;
  for (auto [a, b] : edges_) {
    if (a == v) out.push_back(b);
    if (b == v) out.push_back(a);
  }
  std::sort(out.begin(), out.end());
  return out;
}

SimplicialComplex Graph::as_complex() const {
  return SimplicialComplex::graph(nverts_, edges_);
}

std::string Graph::to_string() const {
  std::string out = "V" + std::to_string(nverts_) + ":";
  for (auto [a, b] : edges_) {
    out += " " + std::to_string(a) + "-" + std::to_string(b);
  }
  return out;
}

std::vector<int> free_vertices(const Graph& graph,
                               const std::vector<int>& within) {
  std::set<int> present(within.begin(), within.end());
  std::vector<int> out;
  for (int v : within) {
    long deg = 0;
    for (int u : graph.neighbors(v)) {
      if (present.count(u)) ++deg;
    }
    if (deg == 1) out.push_back(v);
  }
  std::sort(out.begin(), out.end());
  return out;
}

CollapseResult collapse(const Graph& graph) {
  std::vector<int> alive(graph.nverts());
  for (int v = 0; v < graph.nverts(); ++v) alive[static_cast<size_t>(v)] = v;
  CollapseResult result;
  while (true) {
    std::vector<int> free = free_vertices(graph, alive);
    if (free.empty()) break;
    int v = free.front();
    result.removed.push_back(v);
    alive.erase(std::find(alive.begin(), alive.end(), v));
  }
  result.core = alive;
  return result;
}

namespace {

using Mask = uint32_t;

long induced_degree(const Graph& g, Mask mask, int v) {
  long d = 0;
  for (int u : g.neighbors(v)) {
    if (mask & (Mask{1} << u)) ++d;
  }
  return d;
}

// Terminal masks reachable from the given induced subgraph.
void branch(const Graph& g, Mask mask, std::set<Mask>& terminal,
            std::set<Mask>& seen) {
  if (!seen.insert(mask).second) return;
  bool any = false;
  for (int v = 0; v < g.nverts(); ++v) {
    if (!(mask & (Mask{1} << v))) continue;
    if (induced_degree(g, mask, v) == 1) {
      any = true;
      branch(g, mask & ~(Mask{1} << v), terminal, seen);
    }
  }
  if (!any) terminal.insert(mask);
}

}  // namespace

std::vector<CollapseResult> collapse_all_branches(const Graph& graph,
                                                  int max_vertices) {
  if (graph.nverts() > max_vertices) {
    throw BudgetError("all-branch collapse limited to " +
                      std::to_string(max_vertices) + " vertices, got " +
                      std::to_string(graph.nverts()));
  }
  Mask full = graph.nverts() == 32 ? ~Mask{0}
                                   : (Mask{1} << graph.nverts()) - 1;
  std::set<Mask> terminal;
  std::set<Mask> seen;
  branch(graph, full, terminal, seen);
  std::vector<CollapseResult> out;
  for (Mask m : terminal) {
    CollapseResult r;
    for (int v = 0; v < graph.nverts(); ++v) {
      if (m & (Mask{1} << v)) {
        r.core.push_back(v);
      } else {
        r.removed.push_back(v);
      }
    }
    out.push_back(std::move(r));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.core < b.core;
  });
  return out;
}

bool is_connected(const Graph& graph) {
  int n = graph.nverts();
  if (n == 0) return true;
  std::vector<bool> seen(static_cast<size_t>(n), false);
  std::vector<int> stack{0};
  seen[0] = true;
  int count = 0;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    ++count;
    for (int u : graph.neighbors(v)) {
      if (!seen[static_cast<size_t>(u)]) {
        seen[static_cast<size_t>(u)] = true;
        stack.push_back(u);
      }
    }
  }
  return count == n;
}

bool is_tree(const Graph& graph) {
  return is_connected(graph) &&
         static_cast<long>(graph.edges().size()) == graph.nverts() - 1;
}

}  // namespace grodeg

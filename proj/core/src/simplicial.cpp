#include "grodeg/simplicial.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "grodeg/error.hpp"
#include "grodeg/linalg.hpp"
#include "grodeg/monomial.hpp"

namespace grodeg {

Face::Face(std::vector<int> vs) : verts_(std::move(vs)) {
  std::sort(verts_.begin(), verts_.end());
  verts_.erase(std::unique(verts_.begin(), verts_.end()), verts_.end());
  if (!verts_.empty() && verts_.front() < 0) {
    throw PreconditionError("negative vertex index in face");
  }
}

bool Face::contains(int v) const {
  return std::binary_search(verts_.begin(), verts_.end(), v);
}

bool Face::subset_of(const Face& o) const {
  return std::includes(o.verts_.begin(), o.verts_.end(), verts_.begin(),
                       verts_.end());
}

bool Face::intersects(const Face& o) const {
  for (int v : verts_) {
    if (o.contains(v)) return true;
  }
  return false;
}

Face Face::with(int v) const {
  std::vector<int> vs = verts_;
  vs.push_back(v);
  return Face(std::move(vs));
}

Face Face::without(int v) const {
  std::vector<int> vs;
  vs.reserve(verts_.size());
  for (int u : verts_) {
    if (u != v) vs.push_back(u);
  }
  return Face(std::move(vs));
}

Face Face::union_with(const Face& o) const {
  std::vector<int> vs = verts_;
  vs.insert(vs.end(), o.verts_.begin(), o.verts_.end());
  return Face(std::move(vs));
}

std::string Face::to_string() const {
  std::string out = "{";
  for (size_t i = 0; i < verts_.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(verts_[i]);
  }
  out += "}";
  return out;
}

SimplicialComplex SimplicialComplex::from_facets(int nverts,
                                                 std::vector<Face> facets) {
  if (nverts < 0) throw PreconditionError("negative vertex count");
  for (const Face& f : facets) {
    if (!f.empty() && f.vertices().back() >= nverts) {
      throw PreconditionError("facet vertex " +
                              std::to_string(f.vertices().back()) +
                              " outside vertex pool of size " +
                              std::to_string(nverts));
    }
  }
  std::sort(facets.begin(), facets.end());
  facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
  std::vector<Face> maximal;
  for (size_t i = 0; i < facets.size(); ++i) {
    bool redundant = false;
    for (size_t j = 0; j < facets.size() && !redundant; ++j) {
      if (i != j && facets[i].subset_of(facets[j])) redundant = true;
    }
    if (!redundant) maximal.push_back(facets[i]);
  }
  return SimplicialComplex(nverts, std::move(maximal));
}

SimplicialComplex SimplicialComplex::empty_complex(int nverts) {
  return from_facets(nverts, {Face{}});
}

SimplicialComplex SimplicialComplex::void_complex(int nverts) {
  return SimplicialComplex(nverts, {});
}

SimplicialComplex SimplicialComplex::full_simplex(int nverts) {
  std::vector<int> all(nverts);
  for (int i = 0; i < nverts; ++i) all[i] = i;
  return from_facets(nverts, {Face(all)});
}

SimplicialComplex SimplicialComplex::graph(
    int nverts, const std::vector<std::pair<int, int>>& edges) {
  std::vector<Face> facets;
  for (int v = 0; v < nverts; ++v) facets.push_back(Face{v});
  for (auto [a, b] : edges) {
    if (a == b) throw PreconditionError("loop edge in graph complex");
    facets.push_back(Face{a, b});
  }
  return from_facets(nverts, std::move(facets));
}

int SimplicialComplex::dim() const {
  int d = -2;
  for (const Face& f : facets_) d = std::max(d, f.dim());
  return d;
}

bool SimplicialComplex::contains(const Face& f) const {
  for (const Face& g : facets_) {
    if (f.subset_of(g)) return true;
  }
  return false;
}

bool SimplicialComplex::has_full_vertex_set() const {
  for (int v = 0; v < nverts_; ++v) {
    if (!contains(Face{v})) return false;
  }
  return true;
}

std::vector<Face> SimplicialComplex::faces_of_dim(int d) const {
  std::set<Face> out;
  if (d == -1 && !is_void()) out.insert(Face{});
  if (d >= 0) {
    for (const Face& fac : facets_) {
      const std::vector<int>& vs = fac.vertices();
      int n = static_cast<int>(vs.size());
      if (d + 1 > n) continue;
      // enumerate (d+1)-subsets of vs
      std::vector<int> idx(d + 1);
      for (int i = 0; i <= d; ++i) idx[i] = i;
      while (true) {
        std::vector<int> sub(d + 1);
        for (int i = 0; i <= d; ++i) sub[i] = vs[idx[i]];
        out.insert(Face(std::move(sub)));
        int k = d;
        while (k >= 0 && idx[k] == n - (d + 1 - k)) --k;
        if (k < 0) break;
        ++idx[k];
        for (int i = k + 1; i <= d; ++i) idx[i] = idx[i - 1] + 1;
      }
    }
  }
  return {out.begin(), out.end()};
}

std::vector<Face> SimplicialComplex::all_faces() const {
  std::vector<Face> out;
  for (int d = 0; d <= dim(); ++d) {
    auto fs = faces_of_dim(d);
    out.insert(out.end(), fs.begin(), fs.end());
  }
  return out;
}

std::vector<long> SimplicialComplex::f_vector() const {
  if (is_void()) return {};
  std::vector<long> f;
  for (int d = -1; d <= dim(); ++d) {
    f.push_back(static_cast<long>(faces_of_dim(d).size()));
  }
  return f;
}

SimplicialComplex SimplicialComplex::link(const Face& f) const {
  std::vector<Face> lk;
  for (const Face& fac : facets_) {
    if (f.subset_of(fac)) {
      Face rest = fac;
      for (int v : f.vertices()) rest = rest.without(v);
      lk.push_back(rest);
    }
  }
  return from_facets(nverts_, std::move(lk));
}

std::string SimplicialComplex::to_string() const {
  if (is_void()) return "void";
  std::string out;
  for (size_t i = 0; i < facets_.size(); ++i) {
    if (i > 0) out += " ";
    out += facets_[i].to_string();
  }
  return out;
}

namespace {

// All subsets of {0..nverts-1} of the given size, in lexicographic order.
void for_each_subset(int nverts, int size,
                     const std::function<void(const Face&)>& fn) {
  if (size == 0) {
    fn(Face{});
    return;
  }
  if (size > nverts) return;
  std::vector<int> idx(size);
  for (int i = 0; i < size; ++i) idx[i] = i;
  while (true) {
    fn(Face(std::vector<int>(idx)));
    int k = size - 1;
    while (k >= 0 && idx[k] == nverts - (size - k)) --k;
    if (k < 0) break;
    ++idx[k];
    for (int i = k + 1; i < size; ++i) idx[i] = idx[i - 1] + 1;
  }
}

}  // namespace

std::vector<Face> minimal_nonfaces(const SimplicialComplex& complex) {
  std::vector<Face> out;
  int bound = std::min(complex.nverts(), complex.dim() + 2);
  for (int size = 0; size <= std::max(bound, 0); ++size) {
    for_each_subset(complex.nverts(), size, [&](const Face& f) {
      if (complex.contains(f)) return;
      for (int v : f.vertices()) {
        if (!complex.contains(f.without(v))) return;
      }
      out.push_back(f);
    });
  }
  return out;
}

MonomialIdeal stanley_reisner(const SimplicialComplex& complex) {
  std::vector<Monomial> gens;
  for (const Face& f : minimal_nonfaces(complex)) {
    Monomial m = Monomial(complex.nverts());
    for (int v : f.vertices()) {
      m = m * Monomial::variable(complex.nverts(), v);
    }
    gens.push_back(m);
  }
  return MonomialIdeal::from_generators(complex.nverts(), std::move(gens));
}

SimplicialComplex complex_of(const MonomialIdeal& ideal) {
  if (!ideal.is_squarefree()) {
    throw DomainError("Stanley-Reisner correspondence needs a squarefree ideal");
  }
  int n = ideal.nvars();
  if (n > 24) {
    throw BudgetError("complex_of limited to 24 vertices, got " +
                      std::to_string(n));
  }
  std::vector<Face> faces;
  for (int size = 0; size <= n; ++size) {
    for_each_subset(n, size, [&](const Face& f) {
      Monomial m = Monomial(n);
      for (int v : f.vertices()) m = m * Monomial::variable(n, v);
      if (!ideal.contains(m)) faces.push_back(f);
    });
  }
  return SimplicialComplex::from_facets(n, std::move(faces));
}

namespace {

// Boundary matrix from d-faces to (d-1)-faces over the field; empty when
// either side has no faces.
std::vector<std::vector<Scalar>> boundary_matrix(
    const std::vector<Face>& lower, const std::vector<Face>& upper,
    const Field& field) {
  std::vector<std::vector<Scalar>> rows(
      lower.size(), std::vector<Scalar>(upper.size(), Scalar::zero(field)));
  for (size_t c = 0; c < upper.size(); ++c) {
    const std::vector<int>& vs = upper[c].vertices();
    for (size_t k = 0; k < vs.size(); ++k) {
      Face sub = upper[c].without(vs[k]);
      auto it = std::lower_bound(lower.begin(), lower.end(), sub);
      if (it == lower.end() || *it != sub) {
        throw InternalConsistencyError("boundary face missing from complex");
      }
      size_t r = static_cast<size_t>(it - lower.begin());
      Scalar sign = (k % 2 == 0) ? Scalar::one(field)
                                 : Scalar::zero(field) - Scalar::one(field);
      rows[r][c] = sign;
    }
  }
  return rows;
}

}  // namespace

HomologyProfile reduced_homology(const SimplicialComplex& complex,
                                 const Field& field) {
  HomologyProfile profile;
  profile.field = field;
  if (complex.is_void()) return profile;
  int top = complex.dim();
  std::vector<std::vector<Face>> faces(top + 2);
  for (int d = -1; d <= top; ++d) faces[d + 1] = complex.faces_of_dim(d);
  // boundary_rank[k] is the rank of the map leaving dimension k-1
  std::vector<long> boundary_rank(top + 3, 0);
  for (int d = 0; d <= top; ++d) {
    auto rows = boundary_matrix(faces[d], faces[d + 1], field);
    if (!rows.empty() && !rows[0].empty()) {
      boundary_rank[d + 1] = matrix_rank(std::move(rows), field);
    }
  }
  profile.ranks.resize(top + 2, 0);
  for (int d = -1; d <= top; ++d) {
    long chains = static_cast<long>(faces[d + 1].size());
    profile.ranks[d + 1] = chains - boundary_rank[d + 1] - boundary_rank[d + 2];
  }
  return profile;
}

bool is_acyclic(const SimplicialComplex& complex, const Field& field,
                int up_to_dim) {
  HomologyProfile profile = reduced_homology(complex, field);
  for (int i = 0; i <= up_to_dim; ++i) {
    if (profile.rank(i) != 0) return false;
  }
  return true;
}

bool is_cohen_macaulay(const SimplicialComplex& complex, const Field& field) {
  if (complex.is_void()) {
    throw PreconditionError("Cohen-Macaulay test on the void complex");
  }
  std::vector<Face> faces = complex.all_faces();
  faces.push_back(Face{});
  for (const Face& f : faces) {
    SimplicialComplex lk = complex.link(f);
    HomologyProfile profile = reduced_homology(lk, field);
    for (int i = -1; i < lk.dim(); ++i) {
      if (profile.rank(i) != 0) return false;
    }
  }
  return true;
}

bool a_invariant_negative(const SimplicialComplex& complex,
                          const Field& field) {
  if (complex.is_void()) {
    throw PreconditionError("a-invariant of the zero ring");
  }
  return reduced_homology(complex, field).rank(complex.dim()) == 0;
}

std::vector<long> hochster_degree_zero(const SimplicialComplex& complex,
                                       const Field& field) {
  HomologyProfile profile = reduced_homology(complex, field);
  std::vector<long> out;
  for (int i = 0; i <= complex.dim(); ++i) out.push_back(profile.rank(i));
  return out;
}

}  // namespace grodeg

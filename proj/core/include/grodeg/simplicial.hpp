#ifndef GRODEG_SIMPLICIAL_HPP
#define GRODEG_SIMPLICIAL_HPP

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "grodeg/ideal.hpp"
#include "grodeg/scalar.hpp"

namespace grodeg {

// Face of a simplicial complex: sorted distinct vertex indices.
class Face {
 public:
  Face() = default;
  Face(std::initializer_list<int> vs) : Face(std::vector<int>(vs)) {}
  explicit Face(std::vector<int> vs);

  int size() const { return static_cast<int>(verts_.size()); }
  int dim() const { return size() - 1; }
  bool empty() const { return verts_.empty(); }
  const std::vector<int>& vertices() const { return verts_; }
  bool contains(int v) const;
  bool subset_of(const Face& o) const;
  bool intersects(const Face& o) const;
  Face with(int v) const;
  Face without(int v) const;
  Face union_with(const Face& o) const;

  auto operator<=>(const Face&) const = default;

  std::string to_string() const;  // "{0,2}"

 private:
  std::vector<int> verts_;
};

// Simplicial complex on the vertex pool {0..n-1}, stored by its facets.
// The complex {empty face} and the void complex (no faces at all) are
// distinct; dim is -1 and -2 respectively.
class SimplicialComplex {
 public:
  static SimplicialComplex from_facets(int nverts, std::vector<Face> facets);
  static SimplicialComplex empty_complex(int nverts);
  static SimplicialComplex void_complex(int nverts);
  static SimplicialComplex full_simplex(int nverts);
  static SimplicialComplex graph(int nverts,
                                 const std::vector<std::pair<int, int>>& edges);

  int nverts() const { return nverts_; }
  const std::vector<Face>& facets() const { return facets_; }
  bool is_void() const { return facets_.empty(); }
  int dim() const;
  bool contains(const Face& f) const;
  // True when every vertex of the pool is a face (the standing assumption of
  // the theorem-checking entry points).
  bool has_full_vertex_set() const;

  std::vector<Face> faces_of_dim(int d) const;
  std::vector<Face> all_faces() const;  // without the empty face
  // f_vector()[i] counts faces of dimension i-1, so f_vector()[0] == 1.
  std::vector<long> f_vector() const;
  SimplicialComplex link(const Face& f) const;

  bool operator==(const SimplicialComplex&) const = default;

  std::string to_string() const;

 private:
  SimplicialComplex(int nverts, std::vector<Face> facets)
      : nverts_(nverts), facets_(std::move(facets)) {}
  int nverts_;
  std::vector<Face> facets_;  // canonical: sorted, none contained in another
};

// Inclusion-minimal non-faces; {} for the full simplex, {empty face} for the
// void complex.
std::vector<Face> minimal_nonfaces(const SimplicialComplex& complex);

// Stanley-Reisner ideal: generated by the products X_sigma over the minimal
// non-faces sigma.
MonomialIdeal stanley_reisner(const SimplicialComplex& complex);

// Inverse bijection; DomainError unless the ideal is squarefree.
SimplicialComplex complex_of(const MonomialIdeal& ideal);

struct HomologyProfile {
  Field field = Field::rationals();
  std::vector<long> ranks;  // ranks[0] is the rank in dimension -1
  long rank(int i) const {
    size_t k = static_cast<size_t>(i + 1);
    return k < ranks.size() ? ranks[k] : 0;
  }
  bool operator==(const HomologyProfile&) const = default;
};

// Ranks of reduced simplicial homology over the field, computed from exact
// boundary-matrix ranks.  Over a field these equal the reduced cohomology
// ranks.
HomologyProfile reduced_homology(const SimplicialComplex& complex,
                                 const Field& field);

// All ranks zero in dimensions 0..up_to_dim.
bool is_acyclic(const SimplicialComplex& complex, const Field& field,
                int up_to_dim);

// Reisner criterion: every link (the empty face included) has vanishing
// reduced homology below its dimension.
bool is_cohen_macaulay(const SimplicialComplex& complex, const Field& field);

// True when the top reduced homology of the complex vanishes, i.e. the
// a-invariant of the Stanley-Reisner ring is negative.
bool a_invariant_negative(const SimplicialComplex& complex, const Field& field);

// Degree-0 graded pieces of local cohomology of the Stanley-Reisner ring:
// entry i holds dim H_m^{i+1}(S/I)_0, which is the reduced homology rank in
// dimension i.
std::vector<long> hochster_degree_zero(const SimplicialComplex& complex,
                                       const Field& field);

}  // namespace grodeg

#endif

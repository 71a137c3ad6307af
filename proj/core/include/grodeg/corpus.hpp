#ifndef GRODEG_CORPUS_HPP
#define GRODEG_CORPUS_HPP

#include <random>
#include <vector>

#include "grodeg/collapse.hpp"
#include "grodeg/ideal.hpp"

namespace grodeg {

// Built-in examples: the two curves discussed at length (the rational normal
// curve and the star-tree minor ideal) plus the small graph families the
// harness sweeps.

// 2-minors of the 2 x n catalecticant matrix (X0..X{n-1} over X1..Xn):
// the rational normal curve of degree n in P^n, over n+1 variables.
Ideal rational_normal_curve(const Field& f, int n);

// 2-minors of the 2 x 3 matrix
//   X1+X2+X3  X1+X3  X1
//   X1+X3     X1     X0+X1
// whose initial ideal is (X0X1, X0X2, X1X2) under any order with
// X0 > X1 > X2 > X3, over any field: the star-tree example.
Ideal star_example(const Field& f);

Graph path_graph(int nverts);   // 0-1-...-k
Graph cycle_graph(int nverts);  // 0-1-...-k-0, nverts >= 3
Graph star_graph();             // edges 03, 13, 23
Graph triangle_graph();         // K3 on {0,1,2}
// Edges 01, 12, 13, 23: vertex 0 is free but the graph contains a cycle.
Graph pendant_triangle_graph();

// Every connected simple graph on exactly nverts labeled vertices.
std::vector<Graph> connected_graphs(int nverts);

// Uniform-ish random tree in which vertex 0 has degree 1 (so 0 is free).
Graph random_tree_with_free_zero(std::mt19937_64& rng, int nverts);

// Image of the Stanley-Reisner ideal of the complex under a random
// composition of `moves` triangular substitutions X_c -> X_c + u X_d with
// d > c and u nonzero.  Such substitutions only add order-smaller monomials,
// so the initial ideal is preserved for every supported order; the result is
// a non-monomial ideal with in(J) = I_Delta, useful as a certified-by-
// construction candidate (callers still re-certify).
Ideal triangular_deformation(const SimplicialComplex& delta, const Field& f,
                             std::mt19937_64& rng, long coeff_height = 2,
                             int moves = 3);

}  // namespace grodeg

#endif

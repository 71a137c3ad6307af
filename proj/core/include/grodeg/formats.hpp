#ifndef GRODEG_FORMATS_HPP
#define GRODEG_FORMATS_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "grodeg/ideal.hpp"
#include "grodeg/order.hpp"
#include "grodeg/search.hpp"
#include "grodeg/simplicial.hpp"

namespace grodeg {

// Whole file as a string; ParseError when it cannot be read.
std::string read_file(const std::string& path);

// 64-bit FNV-1a of the bytes as 16 hex digits; stamps inputs in reports.
std::string fnv1a_hex(std::string_view bytes);

// Ideal file:
//   # comment
//   vars: 4
//   field: QQ          optional, also Fp:<p>
//   order: lex         optional, lex | degrevlex
//   X0*X2 - X1^2       one polynomial per line
struct IdealFile {
  int nvars = 0;
  std::optional<Field> field;
  std::optional<MonomialOrder> order;
  std::vector<std::string> polynomials;  // raw lines, file order
  std::vector<int> lines;                // 1-based, aligned with polynomials
  std::string source = "<string>";       // for parse error positions

  // Command-line override beats the file header beats the default.
  Field choose_field(const std::optional<Field>& override_field) const;
  MonomialOrder choose_order(
      const std::optional<MonomialOrder>& override_order) const;
  Ideal resolve(const Field& f) const;
};

IdealFile parse_ideal_text(const std::string& text,
                           const std::string& source = "<string>");
IdealFile read_ideal_file(const std::string& path);

// Complex file: JSON object {"n": 3, "facets": [[0,1],[1,2,3]]} or
// {"n": 3, "edges": [[0,1],[1,2]]}.  The vertex pool is {0..n}, so the
// complex has n+1 vertices; the edges form always keeps every vertex as a
// face.
SimplicialComplex parse_complex_text(const std::string& text,
                                     const std::string& source = "<string>");
SimplicialComplex read_complex_file(const std::string& path);

// Sweep specification, JSON:
//   {
//     "complex": {"n": 3, "edges": [[0,1],[1,2],[2,3],[0,3]]},
//     "order": "lex",                      optional, default lex
//     "field": "Fp:2",                     optional, default QQ
//     "coeff_grid": [0, 1, -1] | "full",   exhaustive mode
//     "grid_height": 1,                    height of the "full" grid over QQ
//     "sampler": {"seed": 7, "count": 10000, "height": 2},   random mode
//     "deformations": {"seed": 5, "count": 100, "height": 2, "moves": 3},
//     "max_candidates": 0,                 optional
//     "degree_ceiling": 12,                optional
//     "power_bound": 8,                    optional
//     "witness_search": true               optional
//   }
// Exactly one of coeff_grid / sampler.  Grid entries are integers or "a/b"
// strings.  "deformations" seeds the stream with random triangular
// coordinate changes of the Stanley-Reisner generators, tried first.
CandidateFamily parse_sweep_text(const std::string& text,
                                 const std::string& source = "<string>");
CandidateFamily read_sweep_file(const std::string& path);

}  // namespace grodeg

#endif

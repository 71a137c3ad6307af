#ifndef GRODEG_LINALG_HPP
#define GRODEG_LINALG_HPP

#include <vector>

#include "grodeg/scalar.hpp"

namespace grodeg {

// Exact rank of a dense matrix given as rows of equal length.  Over a prime
// field this is plain Gaussian elimination; over the rationals rows are
// cleared to integers and eliminated fraction-free (Bareiss) to keep
// intermediate entries small.
long matrix_rank(std::vector<std::vector<Scalar>> rows, const Field& field);

}  // namespace grodeg

#endif

#include "grodeg/linalg.hpp"

namespace grodeg {
namespace {

long rank_prime_field(std::vector<std::vector<Scalar>>& m, const Field& f) {
  size_t rows = m.size(), cols = m[0].size();
  long rank = 0;
  for (size_t col = 0; col < cols && static_cast<size_t>(rank) < rows; ++col) {
    size_t pivot = rows;
    for (size_t r = static_cast<size_t>(rank); r < rows; ++r)
      if (!m[r][col].is_zero()) {
        pivot = r;
        break;
      }
    if (pivot == rows) continue;
    std::swap(m[static_cast<size_t>(rank)], m[pivot]);
    const Scalar inv = m[static_cast<size_t>(rank)][col].inverse();
    for (size_t c = col; c < cols; ++c)
      m[static_cast<size_t>(rank)][c] *= inv;
    for (size_t r = 0; r < rows; ++r) {
      if (r == static_cast<size_t>(rank) || m[r][col].is_zero()) continue;
      const Scalar factor = m[r][col];
      for (size_t c = col; c < cols; ++c)
        m[r][c] -= factor * m[static_cast<size_t>(rank)][c];
    }
    ++rank;
  }
  return rank;
}

long rank_bareiss(const std::vector<std::vector<Scalar>>& scalar_rows) {
  size_t rows = scalar_rows.size(), cols = scalar_rows[0].size();
  std::vector<std::vector<mpz_class>> m(rows, std::vector<mpz_class>(cols));
  for (size_t r = 0; r < rows; ++r) {
    mpz_class denom_lcm = 1;
    for (size_t c = 0; c < cols; ++c)
      mpz_lcm(denom_lcm.get_mpz_t(), denom_lcm.get_mpz_t(),
              scalar_rows[r][c].rational().get_den().get_mpz_t());
    for (size_t c = 0; c < cols; ++c) {
      const mpq_class& q = scalar_rows[r][c].rational();
      m[r][c] = q.get_num() * (denom_lcm / q.get_den());
    }
  }
  mpz_class prev = 1;
  long rank = 0;
  for (size_t col = 0; col < cols && static_cast<size_t>(rank) < rows; ++col) {
    size_t pivot = rows;
    for (size_t r = static_cast<size_t>(rank); r < rows; ++r)
      if (m[r][col] != 0) {
        pivot = r;
        break;
      }
    if (pivot == rows) continue;
    std::swap(m[static_cast<size_t>(rank)], m[pivot]);
    const size_t pr = static_cast<size_t>(rank);
    for (size_t r = pr + 1; r < rows; ++r) {
      for (size_t c = col + 1; c < cols; ++c) {
        m[r][c] = (m[pr][col] * m[r][c] - m[r][col] * m[pr][c]) / prev;
      }
      m[r][col] = 0;
    }
    prev = m[pr][col];
    ++rank;
  }
  return rank;
}

}  // namespace

long matrix_rank(std::vector<std::vector<Scalar>> rows, const Field& field) {
  if (rows.empty()) return 0;
  size_t cols = rows[0].size();
  for (const auto& row : rows) {
    if (row.size() != cols) throw DimensionError("ragged matrix");
    for (const Scalar& x : row)
      if (x.field() != field) throw FieldMismatchError("matrix entry field");
  }
  if (cols == 0) return 0;
  if (field.is_prime_field()) return rank_prime_field(rows, field);
  return rank_bareiss(rows);
}

}  // namespace grodeg

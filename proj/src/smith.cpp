#include <algorithm>
#include <optional>
#include <utility>

#include "trisect/int_matrix.hpp"

namespace trisect {

std::vector<Integer> SmithForm::divisors() const {
  std::vector<Integer> out;
  out.reserve(rank);
  for (std::size_t i = 0; i < rank; ++i) out.push_back(D(i, i));
  return out;
}

// Pivot is the entry of least absolute value in the trailing block, ties going to the lowest
// row and then the lowest column.
SmithForm smith_normal_form(const IntMatrix& m) {
  SmithForm f{IntMatrix::identity(m.rows()), m, IntMatrix::identity(m.cols()),
              IntMatrix::identity(m.cols()), 0};
  IntMatrix& d = f.D;
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  const std::size_t limit = std::min(rows, cols);

  std::size_t t = 0;
  while (t < limit) {
    std::optional<std::pair<std::size_t, std::size_t>> pivot;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j) {
        if (d(i, j) == 0) continue;
        if (!pivot || abs(d(i, j)) < abs(d(pivot->first, pivot->second))) pivot = {i, j};
      }
    if (!pivot) break;

    d.swap_rows(t, pivot->first);
    f.U.swap_rows(t, pivot->first);
    d.swap_cols(t, pivot->second);
    f.V.swap_cols(t, pivot->second);
    f.V_inverse.swap_rows(t, pivot->second);

    bool clean = true;
    for (std::size_t i = t + 1; i < rows; ++i) {
      if (d(i, t) == 0) continue;
      Integer q = d(i, t) / d(t, t);
      d.add_row_multiple(i, t, -q);
      f.U.add_row_multiple(i, t, -q);
      if (d(i, t) != 0) clean = false;
    }
    for (std::size_t j = t + 1; j < cols; ++j) {
      if (d(t, j) == 0) continue;
      Integer q = d(t, j) / d(t, t);
      d.add_col_multiple(j, t, -q);
      f.V.add_col_multiple(j, t, -q);
      f.V_inverse.add_row_multiple(t, j, q);
      if (d(t, j) != 0) clean = false;
    }
    if (!clean) continue;

    std::optional<std::size_t> offending;
    for (std::size_t i = t + 1; i < rows && !offending; ++i)
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (d(i, j) % d(t, t) != 0) {
          offending = i;
          break;
        }
      }
    if (offending) {
      d.add_row_multiple(t, *offending, 1);
      f.U.add_row_multiple(t, *offending, 1);
      continue;
    }

    if (d(t, t) < 0) {
      d.negate_row(t);
      f.U.negate_row(t);
    }
    ++t;
  }
  f.rank = t;
  return f;
}

}  // namespace trisect

#include "quotbn/linalg.hpp"

#include <utility>

namespace quotbn {

int QMatrix::rref() {
  int lead = 0;
  for (int col = 0; col < cols_ && lead < rows_; ++col) {
    int pivot = -1;
    for (int r = lead; r < rows_; ++r)
      if (at(r, col) != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != lead)
      for (int c = 0; c < cols_; ++c) std::swap(at(pivot, c), at(lead, c));
    Rational inv = Rational(1) / at(lead, col);
    for (int c = col; c < cols_; ++c) at(lead, c) *= inv;
    for (int r = 0; r < rows_; ++r) {
      if (r == lead || at(r, col) == 0) continue;
      Rational f = at(r, col);
      for (int c = col; c < cols_; ++c) at(r, c) -= f * at(lead, c);
    }
    ++lead;
  }
  return lead;
}

int rank(QMatrix m) { return m.rref(); }

std::vector<std::vector<Rational>> nullspace(QMatrix m) {
  const int rank = m.rref();
  const int cols = m.cols();

  std::vector<int> pivot_col;
  std::vector<bool> is_pivot(cols, false);
  for (int r = 0; r < rank; ++r) {
    for (int c = 0; c < cols; ++c)
      if (m.at(r, c) != 0) {
        pivot_col.push_back(c);
        is_pivot[c] = true;
        break;
      }
  }

  std::vector<std::vector<Rational>> basis;
  for (int free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(cols, Rational(0));
    v[free] = 1;
    for (int r = 0; r < rank; ++r) v[pivot_col[r]] = -m.at(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

int nullspace_dimension(QMatrix m) { return m.cols() - m.rref(); }

}  // namespace quotbn

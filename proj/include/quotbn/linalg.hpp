#pragma once

#include "quotbn/rational.hpp"

#include <vector>

namespace quotbn {

/// Dense exact-rational matrix, row major. Small sizes only; everything here
/// is Gauss-Jordan with exact pivots and a deterministic pivot choice.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(int rows, int cols)
      : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rational& at(int r, int c) { return a_[static_cast<std::size_t>(r) * cols_ + c]; }
  const Rational& at(int r, int c) const {
    return a_[static_cast<std::size_t>(r) * cols_ + c];
  }

  /// Reduced row echelon form in place; returns the rank. Pivots are the
  /// first nonzero entry per column, scanned left to right, so the result is
  /// canonical.
  int rref();

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Rational> a_;
};

int rank(QMatrix m);

/// Canonical nullspace basis read off the RREF: one vector per free column,
/// in ascending column order.
std::vector<std::vector<Rational>> nullspace(QMatrix m);

int nullspace_dimension(QMatrix m);

}  // namespace quotbn

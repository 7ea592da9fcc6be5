#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "jzero/repring.hpp"

namespace jzero {

template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  T& operator()(int r, int c) { return a_[static_cast<std::size_t>(r) * cols_ + c]; }
  const T& operator()(int r, int c) const { return a_[static_cast<std::size_t>(r) * cols_ + c]; }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<T> a_;
};

using RMatrix = Matrix<VirtualCharacter>;
using GradedMatrix = Matrix<GradedCharacter>;

// Ring operations need the representation ring for entry products.
template <class C>
Matrix<CharacterCombination<C>> mat_mul(const RepresentationRing& R, const Matrix<CharacterCombination<C>>& a,
                                        const Matrix<CharacterCombination<C>>& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix dimension mismatch");
  Matrix<CharacterCombination<C>> out(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      if (a(i, k).is_zero()) continue;
      for (int j = 0; j < b.cols(); ++j)
        if (!b(k, j).is_zero()) out(i, j) += R.multiply(a(i, k), b(k, j));
    }
  return out;
}

template <class C>
Matrix<CharacterCombination<C>> mat_add(const Matrix<CharacterCombination<C>>& a, const Matrix<CharacterCombination<C>>& b) {
  Matrix<CharacterCombination<C>> out = a;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) out(i, j) += b(i, j);
  return out;
}

template <class C>
Matrix<CharacterCombination<C>> mat_scale(const Matrix<CharacterCombination<C>>& a, const C& k) {
  Matrix<CharacterCombination<C>> out(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) out(i, j) = a(i, j).scaled(k);
  return out;
}

// The identity element triv = [V(0)] in the given rank.
VirtualCharacter triv(int rank);
RMatrix identity_rmatrix(int n, int rank);
GradedMatrix identity_gmatrix(int n, int rank);
GradedMatrix to_graded(const RMatrix& m);

// +1 / -1 if v = ±triv, 0 otherwise.
int unit_sign(const VirtualCharacter& v);

struct UnitPivotResult {
  bool ok = false;  // every pivot was ±triv
  VirtualCharacter det;
  RMatrix inverse;
};

// Gauss-Jordan over R(G) using only ±triv pivots (exact, no division).
UnitPivotResult unit_pivot_invert(const RepresentationRing& R, const RMatrix& m);

}  // namespace jzero

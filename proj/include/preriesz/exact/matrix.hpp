#pragma once

#include <optional>
#include <vector>

#include "preriesz/exact/rational.hpp"

namespace preriesz {

class QMatrix {
 public:
  QMatrix() : rows_(0), cols_(0) {}
  QMatrix(int rows, int cols);
  static QMatrix identity(int n);
  static QMatrix from_rows(const std::vector<QVector>& rows, int cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rational& at(int i, int j) { return a_[size_t(i) * cols_ + j]; }
  const Rational& at(int i, int j) const { return a_[size_t(i) * cols_ + j]; }
  QVector row(int i) const;
  std::vector<QVector> row_list() const;

  QMatrix transpose() const;
  QVector apply(const QVector& x) const;  // M x
  friend QMatrix operator*(const QMatrix& a, const QMatrix& b);
  bool operator==(const QMatrix& o) const = default;

  // reduced row echelon form in place; returns rank, pivot columns appended
  int rref_in_place(std::vector<int>* pivot_cols = nullptr);

  QMatrix vstack(const QMatrix& below) const;

 private:
  int rows_, cols_;
  QVector a_;
};

int rank_of(QMatrix m);

// canonical basis of {x : Mx = 0}, rows in reduced row echelon form
std::vector<QVector> kernel_basis_rows(const QMatrix& M);

// one solution of Mx = b, if any
std::optional<QVector> solve_linear(const QMatrix& M, const QVector& b);

}  // namespace preriesz

#include "preriesz/exact/matrix.hpp"

#include <stdexcept>

namespace preriesz {

QMatrix::QMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), a_(size_t(rows) * cols, Rational(0)) {}

QMatrix QMatrix::identity(int n) {
  QMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

QMatrix QMatrix::from_rows(const std::vector<QVector>& rows, int cols) {
  QMatrix m(int(rows.size()), cols);
  for (size_t i = 0; i < rows.size(); ++i) {
    if (int(rows[i].size()) != cols)
      throw std::invalid_argument("from_rows: ragged rows");
    for (int j = 0; j < cols; ++j) m.at(int(i), j) = rows[i][j];
  }
  return m;
}

QVector QMatrix::row(int i) const {
  QVector r(cols_);
  for (int j = 0; j < cols_; ++j) r[j] = at(i, j);
  return r;
}

std::vector<QVector> QMatrix::row_list() const {
  std::vector<QVector> rs;
  rs.reserve(rows_);
  for (int i = 0; i < rows_; ++i) rs.push_back(row(i));
  return rs;
}

QMatrix QMatrix::transpose() const {
  QMatrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

QVector QMatrix::apply(const QVector& x) const {
  if (int(x.size()) != cols_) throw std::invalid_argument("apply: size mismatch");
  QVector y(rows_, Rational(0));
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) y[i] += at(i, j) * x[j];
  return y;
}

QMatrix operator*(const QMatrix& a, const QMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matmul: size mismatch");
  QMatrix c(a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int k = 0; k < a.cols_; ++k) {
      if (a.at(i, k) == 0) continue;
      for (int j = 0; j < b.cols_; ++j) c.at(i, j) += a.at(i, k) * b.at(k, j);
    }
  return c;
}

int QMatrix::rref_in_place(std::vector<int>* pivot_cols) {
  int rank = 0;
  for (int col = 0; col < cols_ && rank < rows_; ++col) {
    int pivot = -1;
    for (int i = rank; i < rows_; ++i)
      if (at(i, col) != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != rank)
      for (int j = 0; j < cols_; ++j) std::swap(at(pivot, j), at(rank, j));
    Rational inv = 1 / at(rank, col);
    for (int j = col; j < cols_; ++j) at(rank, j) *= inv;
    for (int i = 0; i < rows_; ++i) {
      if (i == rank || at(i, col) == 0) continue;
      Rational f = at(i, col);
      for (int j = col; j < cols_; ++j) at(i, j) -= f * at(rank, j);
    }
    if (pivot_cols) pivot_cols->push_back(col);
    ++rank;
  }
  return rank;
}

QMatrix QMatrix::vstack(const QMatrix& below) const {
  if (cols_ != below.cols_ && rows_ != 0 && below.rows_ != 0)
    throw std::invalid_argument("vstack: column mismatch");
  int cols = rows_ ? cols_ : below.cols_;
  QMatrix m(rows_ + below.rows_, cols);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols; ++j) m.at(i, j) = at(i, j);
  for (int i = 0; i < below.rows_; ++i)
    for (int j = 0; j < cols; ++j) m.at(rows_ + i, j) = below.at(i, j);
  return m;
}

int rank_of(QMatrix m) { return m.rref_in_place(); }

std::vector<QVector> kernel_basis_rows(const QMatrix& M) {
  QMatrix r = M;
  std::vector<int> pivots;
  int rank = r.rref_in_place(&pivots);
  std::vector<bool> is_pivot(M.cols(), false);
  for (int c : pivots) is_pivot[c] = true;

  std::vector<QVector> basis;
  for (int free = 0; free < M.cols(); ++free) {
    if (is_pivot[free]) continue;
    QVector v(M.cols(), Rational(0));
    v[free] = 1;
    for (int i = 0; i < rank; ++i) v[pivots[i]] = -r.at(i, free);
    basis.push_back(std::move(v));
  }
  // canonicalize the basis itself
  QMatrix b = QMatrix::from_rows(basis, M.cols());
  b.rref_in_place();
  std::vector<QVector> out;
  for (int i = 0; i < int(basis.size()); ++i) out.push_back(b.row(i));
  return out;
}

std::optional<QVector> solve_linear(const QMatrix& M, const QVector& b) {
  if (int(b.size()) != M.rows()) throw std::invalid_argument("solve: size mismatch");
  QMatrix aug(M.rows(), M.cols() + 1);
  for (int i = 0; i < M.rows(); ++i) {
    for (int j = 0; j < M.cols(); ++j) aug.at(i, j) = M.at(i, j);
    aug.at(i, M.cols()) = b[i];
  }
  std::vector<int> pivots;
  int rank = aug.rref_in_place(&pivots);
  for (int i = 0; i < rank; ++i)
    if (pivots[i] == M.cols()) return std::nullopt;  // inconsistent
  QVector x(M.cols(), Rational(0));
  for (int i = 0; i < rank; ++i) x[pivots[i]] = aug.at(i, M.cols());
  return x;
}

}  // namespace preriesz

#include "preriesz/exact/subspace.hpp"

#include <algorithm>
#include <stdexcept>

namespace preriesz {

Subspace::Subspace(int ambient) : ambient_(ambient), basis_(0, ambient) {}

Subspace Subspace::full(int ambient) {
  Subspace s(ambient);
  s.basis_ = QMatrix::identity(ambient);
  return s;
}

Subspace Subspace::span_of(const std::vector<QVector>& generators, int ambient) {
  for (const auto& g : generators)
    if (int(g.size()) != ambient)
      throw std::invalid_argument("span_of: ambient mismatch");
  QMatrix m = QMatrix::from_rows(generators, ambient);
  int rank = m.rref_in_place();
  Subspace s(ambient);
  std::vector<QVector> rows;
  for (int i = 0; i < rank; ++i) rows.push_back(m.row(i));
  s.basis_ = QMatrix::from_rows(rows, ambient);
  return s;
}

Subspace Subspace::coordinate(const std::vector<int>& coords, int ambient) {
  std::vector<int> sorted = coords;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<QVector> rows;
  for (int c : sorted) rows.push_back(unit_vector(ambient, c));
  Subspace s(ambient);
  s.basis_ = QMatrix::from_rows(rows, ambient);
  return s;
}

bool Subspace::contains(const QVector& v) const {
  if (int(v.size()) != ambient_) throw std::invalid_argument("contains: ambient mismatch");
  if (is_zero_vector(v)) return true;
  QMatrix m = basis_.vstack(QMatrix::from_rows({v}, ambient_));
  return m.rref_in_place() == dim();
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_)
    throw std::invalid_argument("contains: ambient mismatch");
  QMatrix m = basis_.vstack(other.basis_);
  return m.rref_in_place() == dim();
}

Subspace Subspace::sum(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw std::invalid_argument("sum: ambient mismatch");
  auto rows = basis_rows();
  auto more = other.basis_rows();
  rows.insert(rows.end(), more.begin(), more.end());
  return span_of(rows, ambient_);
}

Subspace Subspace::intersect(const Subspace& other) const {
  if (other.ambient_ != ambient_)
    throw std::invalid_argument("intersect: ambient mismatch");
  // x in A iff x is annihilated by ker(A-basis); same for B
  Subspace na = annihilator(*this);
  Subspace nb = annihilator(other);
  QMatrix stacked = na.basis().vstack(nb.basis());
  return kernel_subspace(stacked);
}

bool Subspace::is_coordinate(std::vector<int>* coords) const {
  std::vector<int> cs;
  for (int i = 0; i < basis_.rows(); ++i) {
    int nonzero = -1;
    for (int j = 0; j < ambient_; ++j) {
      if (basis_.at(i, j) != 0) {
        if (nonzero >= 0) return false;
        nonzero = j;
      }
    }
    if (nonzero < 0 || basis_.at(i, nonzero) != 1) return false;
    cs.push_back(nonzero);
  }
  if (coords) *coords = cs;
  return true;
}

Subspace kernel_subspace(const QMatrix& M) {
  auto rows = kernel_basis_rows(M);
  Subspace s(M.cols());
  if (!rows.empty()) return Subspace::span_of(rows, M.cols());
  return s;
}

Subspace annihilator(const Subspace& S) {
  if (S.dim() == 0) return Subspace::full(S.ambient());
  return kernel_subspace(S.basis());
}

}  // namespace preriesz

#pragma once

#include <vector>

#include "preriesz/exact/matrix.hpp"

namespace preriesz {

// Linear subspace of Q^n with a canonical basis: the rows of `basis()`
// are in reduced row echelon form, so equal subspaces compare equal
// structurally.
class Subspace {
 public:
  explicit Subspace(int ambient);  // zero subspace
  static Subspace zero(int ambient) { return Subspace(ambient); }
  static Subspace full(int ambient);
  static Subspace span_of(const std::vector<QVector>& generators, int ambient);
  static Subspace coordinate(const std::vector<int>& coords, int ambient);

  int ambient() const { return ambient_; }
  int dim() const { return basis_.rows(); }
  const QMatrix& basis() const { return basis_; }
  std::vector<QVector> basis_rows() const { return basis_.row_list(); }

  bool contains(const QVector& v) const;
  bool contains(const Subspace& other) const;
  Subspace intersect(const Subspace& other) const;
  Subspace sum(const Subspace& other) const;

  bool is_zero() const { return dim() == 0; }
  bool is_full() const { return dim() == ambient_; }
  // true iff spanned by standard basis vectors; fills coords when so
  bool is_coordinate(std::vector<int>* coords = nullptr) const;

  bool operator==(const Subspace& o) const = default;

 private:
  int ambient_;
  QMatrix basis_;
};

// canonical basis of {x : Mx = 0} as a Subspace of Q^cols
Subspace kernel_subspace(const QMatrix& M);

// the annihilator {c : c . v = 0 for all v in S}
Subspace annihilator(const Subspace& S);

}  // namespace preriesz

#pragma once

#include <stdexcept>
#include <vector>

#include "preriesz/cone/dd.hpp"

namespace preriesz {

struct NotPointedError : std::runtime_error {
  NotPointedError() : std::runtime_error("cone is not pointed") {}
};
struct NotGeneratingError : std::runtime_error {
  NotGeneratingError() : std::runtime_error("cone is not generating") {}
};

// Polyhedral cone with both descriptions kept canonical and mutually
// verified at construction. Rays are the extremal rays modulo lineality;
// generators() additionally lists +/- a basis of the lineality space, so
// the cone is always pos(generators()).
class PolyCone {
 public:
  static PolyCone from_generators(int dim, const std::vector<QVector>& gens);
  static PolyCone from_inequalities(int dim, const std::vector<QVector>& normals);
  static PolyCone standard(int dim);

  int dim() const { return dim_; }
  const std::vector<QVector>& rays() const { return rays_; }
  const std::vector<QVector>& inequalities() const { return ineqs_; }
  const Subspace& lineality() const { return lineality_; }
  std::vector<QVector> generators() const;

  bool is_pointed() const { return lineality_.dim() == 0; }
  bool is_generating() const;
  bool contains(const QVector& x) const;
  // partial order induced by the cone: x <= y iff y - x in cone
  bool leq(const QVector& x, const QVector& y) const;

  PolyCone dual() const;
  const std::vector<QVector>& extremal_rays() const;  // requires pointed

  bool equals(const PolyCone& other) const;

 private:
  PolyCone() : lineality_(0) {}
  static PolyCone build(int dim, const std::vector<QVector>& normals);
  void verify() const;

  int dim_ = 0;
  std::vector<QVector> rays_;
  std::vector<QVector> ineqs_;
  Subspace lineality_;
};

}  // namespace preriesz

#pragma once

#include <vector>

#include "preriesz/cone/cone.hpp"

namespace preriesz {

// Pointed polyhedron conv(vertices) + pos(rays) with a matching
// irredundant H-description { x : a.x >= b }.
class Polyhedron {
 public:
  struct HalfSpace {
    QVector a;
    Rational b;
  };

  static Polyhedron from_hrep(int dim, const std::vector<HalfSpace>& ineqs);

  int dim() const { return dim_; }
  bool empty() const { return empty_; }
  const std::vector<QVector>& vertices() const { return vertices_; }
  const std::vector<QVector>& rays() const { return rays_; }
  const std::vector<HalfSpace>& inequalities() const { return ineqs_; }

  bool contains(const QVector& x) const;
  bool contains_ray(const QVector& r) const;  // recession direction

  bool equals(const Polyhedron& other) const;

 private:
  int dim_ = 0;
  bool empty_ = true;
  std::vector<QVector> vertices_;
  std::vector<QVector> rays_;
  std::vector<HalfSpace> ineqs_;
};

bool polyhedron_equal(const Polyhedron& p, const Polyhedron& q);

// { w : w >= a and w >= -a } in the order of the cone; cone must be
// pointed and generating. With a = 0 this is the cone itself.
Polyhedron upper_set(const PolyCone& cone, const QVector& a);

}  // namespace preriesz

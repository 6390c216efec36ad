#include "preriesz/cone/polyhedron.hpp"

#include <algorithm>

namespace preriesz {

Polyhedron Polyhedron::from_hrep(int dim, const std::vector<HalfSpace>& ineqs) {
  // homogenize: lift to { (t, x) : t >= 0, a.x - b t >= 0 }
  std::vector<QVector> normals;
  {
    QVector tpos(dim + 1, Rational(0));
    tpos[0] = 1;
    normals.push_back(std::move(tpos));
  }
  for (const auto& h : ineqs) {
    if (int(h.a.size()) != dim)
      throw std::invalid_argument("from_hrep: dimension mismatch");
    QVector n(dim + 1);
    n[0] = -h.b;
    for (int j = 0; j < dim; ++j) n[j + 1] = h.a[j];
    normals.push_back(std::move(n));
  }
  DDResult v = dd_from_inequalities(dim + 1, normals);
  if (v.lineality.dim() > 0)
    throw std::invalid_argument("from_hrep: polyhedron has a lineality space");

  Polyhedron p;
  p.dim_ = dim;
  std::vector<QVector> lifted;
  for (const auto& r : v.rays) {
    QVector x(r.begin() + 1, r.end());
    if (r[0] > 0) {
      p.vertices_.push_back(scale(1 / r[0], x));
    } else {
      p.rays_.push_back(primitive(x));
    }
  }
  p.empty_ = p.vertices_.empty();
  if (p.empty_) {
    p.rays_.clear();
    return p;
  }
  std::sort(p.vertices_.begin(), p.vertices_.end(), lex_less);
  std::sort(p.rays_.begin(), p.rays_.end(), lex_less);

  // canonical facets from the lifted V-description
  for (const auto& vert : p.vertices_) {
    QVector l(dim + 1);
    l[0] = 1;
    for (int j = 0; j < dim; ++j) l[j + 1] = vert[j];
    lifted.push_back(std::move(l));
  }
  for (const auto& ray : p.rays_) {
    QVector l(dim + 1, Rational(0));
    for (int j = 0; j < dim; ++j) l[j + 1] = ray[j];
    lifted.push_back(std::move(l));
  }
  DDResult facets = dd_from_inequalities(dim + 1, lifted);
  auto emit = [&](const QVector& n) {
    QVector a(n.begin() + 1, n.end());
    if (is_zero_vector(a)) return;  // facet at infinity
    p.ineqs_.push_back({std::move(a), -n[0]});
  };
  for (const auto& n : facets.rays) emit(n);
  for (const auto& l : facets.lineality.basis_rows()) {
    emit(primitive(l));
    emit(primitive(scale(rat(-1), l)));
  }
  return p;
}

bool Polyhedron::contains(const QVector& x) const {
  if (empty_) return false;
  for (const auto& h : ineqs_)
    if (dot(h.a, x) < h.b) return false;
  return true;
}

bool Polyhedron::contains_ray(const QVector& r) const {
  if (empty_) return false;
  for (const auto& h : ineqs_)
    if (dot(h.a, r) < 0) return false;
  return true;
}

bool Polyhedron::equals(const Polyhedron& other) const {
  if (dim_ != other.dim_) return false;
  if (empty_ || other.empty_) return empty_ == other.empty_;
  for (const auto& v : vertices_)
    if (!other.contains(v)) return false;
  for (const auto& r : rays_)
    if (!other.contains_ray(r)) return false;
  for (const auto& v : other.vertices_)
    if (!contains(v)) return false;
  for (const auto& r : other.rays_)
    if (!contains_ray(r)) return false;
  return true;
}

bool polyhedron_equal(const Polyhedron& p, const Polyhedron& q) {
  return p.equals(q);
}

Polyhedron upper_set(const PolyCone& cone, const QVector& a) {
  if (!cone.is_pointed()) throw NotPointedError();
  if (!cone.is_generating()) throw NotGeneratingError();
  std::vector<Polyhedron::HalfSpace> hs;
  for (const auto& f : cone.inequalities()) {
    hs.push_back({f, abs_q(dot(f, a))});
  }
  return Polyhedron::from_hrep(cone.dim(), hs);
}

}  // namespace preriesz

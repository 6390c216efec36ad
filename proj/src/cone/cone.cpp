#include "preriesz/cone/cone.hpp"

#include <algorithm>

namespace preriesz {

namespace {

// irredundant inequality list for the cone described by V-data: the
// extremal rays of the dual plus +/- pairs spanning its lineality
std::vector<QVector> dual_description(int dim, const std::vector<QVector>& vdata) {
  DDResult dual = dd_from_inequalities(dim, vdata);
  std::vector<QVector> ineqs = dual.rays;
  for (const auto& l : dual.lineality.basis_rows()) {
    ineqs.push_back(primitive(l));
    ineqs.push_back(primitive(scale(rat(-1), l)));
  }
  return ineqs;
}

}  // namespace

PolyCone PolyCone::build(int dim, const std::vector<QVector>& normals) {
  PolyCone c;
  c.dim_ = dim;
  DDResult v = dd_from_inequalities(dim, normals);
  c.rays_ = v.rays;
  c.lineality_ = v.lineality;
  std::vector<QVector> vdata = c.generators();
  c.ineqs_ = dual_description(dim, vdata);
  c.verify();
  return c;
}

PolyCone PolyCone::from_inequalities(int dim, const std::vector<QVector>& normals) {
  return build(dim, normals);
}

PolyCone PolyCone::from_generators(int dim, const std::vector<QVector>& gens) {
  for (const auto& g : gens)
    if (int(g.size()) != dim)
      throw std::invalid_argument("from_generators: dimension mismatch");
  // dualize twice for canonical mutually-consistent descriptions
  return build(dim, dual_description(dim, gens));
}

PolyCone PolyCone::standard(int dim) {
  std::vector<QVector> normals;
  for (int i = 0; i < dim; ++i) normals.push_back(unit_vector(dim, i));
  return from_inequalities(dim, normals);
}

std::vector<QVector> PolyCone::generators() const {
  std::vector<QVector> gens = rays_;
  for (const auto& l : lineality_.basis_rows()) {
    gens.push_back(primitive(l));
    gens.push_back(primitive(scale(rat(-1), l)));
  }
  if (gens.empty()) return gens;
  return gens;
}

bool PolyCone::is_generating() const {
  std::vector<QVector> gens = generators();
  if (gens.empty()) return dim_ == 0;
  return rank_of(QMatrix::from_rows(gens, dim_)) == dim_;
}

bool PolyCone::contains(const QVector& x) const {
  if (int(x.size()) != dim_) throw std::invalid_argument("contains: dimension mismatch");
  for (const auto& a : ineqs_)
    if (dot(a, x) < 0) return false;
  return true;
}

bool PolyCone::leq(const QVector& x, const QVector& y) const {
  return contains(sub(y, x));
}

PolyCone PolyCone::dual() const {
  // the dual of {x : f_i . x >= 0} is pos{f_i}
  return from_generators(dim_, ineqs_);
}

const std::vector<QVector>& PolyCone::extremal_rays() const {
  if (!is_pointed()) throw NotPointedError();
  return rays_;
}

bool PolyCone::equals(const PolyCone& other) const {
  if (other.dim_ != dim_) return false;
  auto inside = [](const PolyCone& c, const std::vector<QVector>& gens) {
    for (const auto& g : gens)
      if (!c.contains(g)) return false;
    return true;
  };
  return inside(*this, other.generators()) && inside(other, generators());
}

void PolyCone::verify() const {
  for (const auto& r : generators())
    for (const auto& a : ineqs_)
      if (dot(a, r) < 0)
        throw std::logic_error("cone: inconsistent descriptions");
  // the lineality space is exactly the kernel of the inequality matrix
  Subspace ker = ineqs_.empty()
                     ? Subspace::full(dim_)
                     : kernel_subspace(QMatrix::from_rows(ineqs_, dim_));
  if (!(ker == lineality_))
    throw std::logic_error("cone: lineality mismatch");
}

}  // namespace preriesz

#include "preriesz/cone/dd.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>

namespace preriesz {

namespace {

struct Ray {
  QVector v;
  std::vector<uint32_t> tight;  // indices of processed inequalities with a.v == 0
};

bool subset(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

std::vector<uint32_t> intersect_sorted(const std::vector<uint32_t>& a,
                                       const std::vector<uint32_t>& b) {
  std::vector<uint32_t> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return out;
}

}  // namespace

DDResult dd_from_inequalities(int dim, const std::vector<QVector>& normals) {
  for (const auto& a : normals)
    if (int(a.size()) != dim)
      throw std::invalid_argument("dd: normal dimension mismatch");

  // deduplicated primitive normals, zero rows dropped
  std::vector<QVector> As;
  for (const auto& a : normals) {
    if (is_zero_vector(a)) continue;
    QVector p = primitive(a);
    if (std::find(As.begin(), As.end(), p) == As.end()) As.push_back(p);
  }

  std::vector<QVector> lin;  // current lineality basis
  for (int i = 0; i < dim; ++i) lin.push_back(unit_vector(dim, i));
  std::vector<Ray> rays;

  for (uint32_t step = 0; step < As.size(); ++step) {
    const QVector& a = As[step];
    // lineality directions not orthogonal to a get folded into one ray
    int k = -1;
    for (int i = 0; i < int(lin.size()); ++i)
      if (dot(a, lin[i]) != 0) {
        k = i;
        break;
      }
    if (k >= 0) {
      QVector pivot = lin[k];
      if (dot(a, pivot) < 0) pivot = scale(rat(-1), pivot);
      Rational ap = dot(a, pivot);
      std::vector<QVector> newlin;
      for (int i = 0; i < int(lin.size()); ++i) {
        if (i == k) continue;
        newlin.push_back(sub(lin[i], scale(dot(a, lin[i]) / ap, pivot)));
      }
      lin = std::move(newlin);
      for (auto& r : rays) {
        r.v = sub(r.v, scale(dot(a, r.v) / ap, pivot));
        r.v = primitive(r.v);
        r.tight.push_back(step);
        // previously tight inequalities stay tight: pivot was folded out
        // of the lineality, and r.v changes only along pivot
      }
      Ray born;
      born.v = primitive(pivot);
      // the folded direction was orthogonal to every earlier inequality
      for (uint32_t i = 0; i < step; ++i) born.tight.push_back(i);
      rays.push_back(std::move(born));
      continue;
    }

    // split rays by the sign of a
    std::vector<Ray> plus, zero, minus;
    for (auto& r : rays) {
      int s = sgn(dot(a, r.v));
      if (s > 0) plus.push_back(std::move(r));
      else if (s == 0) zero.push_back(std::move(r));
      else minus.push_back(std::move(r));
    }
    std::vector<Ray> next;
    for (auto& r : plus) next.push_back(r);
    for (auto& r : zero) {
      r.tight.push_back(step);
      next.push_back(r);
    }
    // adjacent (+,-) pairs combine into new boundary rays
    for (const auto& p : plus) {
      for (const auto& m : minus) {
        auto common = intersect_sorted(p.tight, m.tight);
        bool adjacent = true;
        // combinatorial adjacency: no other ray is tight on a superset
        for (const auto& grp : {std::cref(plus), std::cref(zero), std::cref(minus)}) {
          for (const auto& o : grp.get()) {
            if (o.v == p.v || o.v == m.v) continue;
            if (subset(common, o.tight)) {
              adjacent = false;
              break;
            }
          }
          if (!adjacent) break;
        }
        if (!adjacent) continue;
        Ray fresh;
        fresh.v = primitive(
            sub(scale(dot(a, p.v), m.v), scale(dot(a, m.v), p.v)));
        fresh.tight = common;
        fresh.tight.push_back(step);
        std::sort(fresh.tight.begin(), fresh.tight.end());
        next.push_back(std::move(fresh));
      }
    }
    rays = std::move(next);
  }

  DDResult out;
  out.lineality = Subspace::span_of(lin, dim);
  // canonical representatives: project onto the orthogonal complement of
  // the lineality space
  for (auto& r : rays) {
    QVector v = r.v;
    for (const auto& l : out.lineality.basis_rows())
      v = sub(v, scale(dot(v, l) / dot(l, l), l));
    if (is_zero_vector(v)) continue;  // ray inside lineality: drop
    out.rays.push_back(primitive(v));
  }
  std::sort(out.rays.begin(), out.rays.end(),
            [](const QVector& a, const QVector& b) { return lex_less(b, a); });
  out.rays.erase(std::unique(out.rays.begin(), out.rays.end()), out.rays.end());
  return out;
}

}  // namespace preriesz

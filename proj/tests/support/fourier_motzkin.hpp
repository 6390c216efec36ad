#pragma once

#include <algorithm>
#include <vector>

#include "preriesz/exact/rational.hpp"
#include "preriesz/exact/simplex.hpp"

namespace preriesz::testsupport {

// Fourier-Motzkin elimination of one variable from a homogeneous system
// of inequalities c . z >= 0.
inline std::vector<QVector> fm_eliminate(const std::vector<QVector>& rows, int var) {
  std::vector<QVector> pos, neg, out;
  for (const auto& r : rows) {
    if (r[var] > 0) pos.push_back(r);
    else if (r[var] < 0) neg.push_back(r);
    else out.push_back(r);
  }
  for (const auto& p : pos)
    for (const auto& n : neg) {
      QVector combo = add(scale(-n[var], p), scale(p[var], n));
      if (!is_zero_vector(combo)) out.push_back(primitive(combo));
    }
  std::sort(out.begin(), out.end(), lex_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// f . x >= 0 is implied by { a . x >= 0 } iff f is a nonnegative
// combination of the rows
inline bool implied_by(const QVector& f, const std::vector<QVector>& rows, int n) {
  std::vector<LinConstraint> cons;
  int k = int(rows.size());
  for (int j = 0; j < n; ++j) {
    QVector coef(k);
    for (int i = 0; i < k; ++i) coef[i] = rows[i][j];
    cons.push_back(eq(coef, f[j]));
  }
  for (int i = 0; i < k; ++i) {
    QVector coef(k, Rational(0));
    coef[i] = 1;
    cons.push_back(ge(coef, Rational(0)));
  }
  return lp_feasible(k, cons).status == LpStatus::Optimal;
}

inline std::vector<QVector> prune_redundant(std::vector<QVector> rows, int n) {
  for (size_t i = rows.size(); i-- > 0;) {
    std::vector<QVector> rest;
    for (size_t j = 0; j < rows.size(); ++j)
      if (j != i) rest.push_back(rows[j]);
    if (!rest.empty() && implied_by(rows[i], rest, n)) rows = std::move(rest);
  }
  return rows;
}

// H-description of pos(gens) obtained by eliminating the multipliers from
// { (x, t) : x = sum t_i g_i, t >= 0 }; independent of the double
// description path. Redundant rows are pruned after each elimination to
// keep the intermediate systems small, leaving an irredundant facet list.
inline std::vector<QVector> fm_inequalities(int dim, const std::vector<QVector>& gens) {
  int k = int(gens.size());
  std::vector<QVector> rows;
  for (int j = 0; j < dim; ++j) {
    QVector a(dim + k, Rational(0)), b(dim + k, Rational(0));
    a[j] = 1;
    b[j] = -1;
    for (int i = 0; i < k; ++i) {
      a[dim + i] = -gens[i][j];
      b[dim + i] = gens[i][j];
    }
    rows.push_back(a);
    rows.push_back(b);
  }
  for (int i = 0; i < k; ++i) {
    QVector t(dim + k, Rational(0));
    t[dim + i] = 1;
    rows.push_back(t);
  }
  for (int v = dim + k - 1; v >= dim; --v) {
    rows = fm_eliminate(rows, v);
    rows = prune_redundant(std::move(rows), v);
  }
  std::vector<QVector> out;
  for (const auto& r : rows) {
    QVector a(r.begin(), r.begin() + dim);
    if (!is_zero_vector(a)) out.push_back(primitive(a));
  }
  std::sort(out.begin(), out.end(), lex_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return prune_redundant(std::move(out), dim);
}

// both systems must present the same irredundant primitive facet normals;
// canonical for full-dimensional cones
inline bool same_facet_set(std::vector<QVector> sys1, std::vector<QVector> sys2) {
  std::sort(sys1.begin(), sys1.end(), lex_less);
  std::sort(sys2.begin(), sys2.end(), lex_less);
  return sys1 == sys2;
}

}  // namespace preriesz::testsupport

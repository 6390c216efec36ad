#include "preriesz/exact/simplex.hpp"

#include <stdexcept>

namespace preriesz {

namespace {

// dense tableau with an explicit objective row of reduced costs
struct Tableau {
  int ncols = 0;  // structural columns (no RHS)
  std::vector<QVector> rows;  // each of size ncols + 1, last entry = RHS
  QVector obj;                // size ncols + 1, last entry = -objective
  std::vector<int> basis;     // basic column per row

  Rational& rhs(int i) { return rows[i][ncols]; }

  void pivot(int r, int col) {
    Rational inv = 1 / rows[r][col];
    for (auto& v : rows[r]) v *= inv;
    for (int i = 0; i < int(rows.size()); ++i) {
      if (i == r || rows[i][col] == 0) continue;
      Rational f = rows[i][col];
      for (int j = 0; j <= ncols; ++j) rows[i][j] -= f * rows[r][j];
    }
    if (obj[col] != 0) {
      Rational f = obj[col];
      for (int j = 0; j <= ncols; ++j) obj[j] -= f * rows[r][j];
    }
    basis[r] = col;
  }

  // Bland's rule; returns false when optimal, throws on unboundedness
  // when allow_unbounded is false
  bool step(bool* unbounded) {
    int enter = -1;
    for (int j = 0; j < ncols; ++j)
      if (obj[j] < 0) {
        enter = j;
        break;
      }
    if (enter < 0) return false;
    int leave = -1;
    Rational best;
    for (int i = 0; i < int(rows.size()); ++i) {
      if (rows[i][enter] <= 0) continue;
      Rational ratio = rhs(i) / rows[i][enter];
      if (leave < 0 || ratio < best ||
          (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave < 0) {
      *unbounded = true;
      return false;
    }
    pivot(leave, enter);
    return true;
  }

  void run(bool* unbounded) {
    *unbounded = false;
    while (step(unbounded)) {
    }
  }
};

}  // namespace

bool verify_farkas(int num_vars, const std::vector<LinConstraint>& cons,
                   const QVector& farkas) {
  if (farkas.size() != cons.size()) return false;
  QVector combo(num_vars, Rational(0));
  Rational rhs = 0;
  for (size_t i = 0; i < cons.size(); ++i) {
    if (cons[i].rel == Rel::Ge && farkas[i] < 0) return false;
    for (int j = 0; j < num_vars; ++j) combo[j] += farkas[i] * cons[i].a[j];
    rhs += farkas[i] * cons[i].b;
  }
  return is_zero_vector(combo) && rhs > 0;
}

LpResult solve_lp(int num_vars, const QVector& c,
                  const std::vector<LinConstraint>& cons) {
  if (int(c.size()) != num_vars)
    throw std::invalid_argument("solve_lp: objective size mismatch");
  for (const auto& con : cons)
    if (int(con.a.size()) != num_vars)
      throw std::invalid_argument("solve_lp: constraint size mismatch");

  const int m = int(cons.size());
  int nge = 0;
  for (const auto& con : cons) nge += con.rel == Rel::Ge ? 1 : 0;
  // columns: u (num_vars), v (num_vars), slacks (nge), artificials (m)
  const int nu = num_vars, nv = num_vars;
  const int nstruct = nu + nv + nge;
  const int ncols = nstruct + m;

  Tableau t;
  t.ncols = ncols;
  t.rows.assign(m, QVector(ncols + 1, Rational(0)));
  t.basis.assign(m, 0);
  std::vector<int> flip(m, 1);
  {
    int slack = 0;
    for (int i = 0; i < m; ++i) {
      const auto& con = cons[i];
      int s = con.b < 0 ? -1 : 1;
      flip[i] = s;
      for (int j = 0; j < num_vars; ++j) {
        t.rows[i][j] = s * con.a[j];
        t.rows[i][nu + j] = -s * con.a[j];
      }
      if (con.rel == Rel::Ge) {
        t.rows[i][nu + nv + slack] = -s;
        ++slack;
      }
      t.rows[i][nstruct + i] = 1;
      t.rows[i][ncols] = s * con.b;
      t.basis[i] = nstruct + i;
    }
  }

  // phase 1: minimize the sum of artificials
  t.obj.assign(ncols + 1, Rational(0));
  for (int i = 0; i < m; ++i) t.obj[nstruct + i] = 1;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j <= ncols; ++j) t.obj[j] -= t.rows[i][j];

  bool unbounded = false;
  t.run(&unbounded);
  Rational phase1 = -t.obj[ncols];

  LpResult result;
  if (phase1 > 0) {
    result.status = LpStatus::Infeasible;
    result.farkas.assign(m, Rational(0));
    for (int i = 0; i < m; ++i) {
      Rational y = Rational(1) - t.obj[nstruct + i];
      result.farkas[i] = flip[i] * y;
    }
    if (!verify_farkas(num_vars, cons, result.farkas))
      throw std::logic_error("simplex: invalid infeasibility certificate");
    return result;
  }

  // drive leftover artificials out of the basis, dropping redundant rows
  for (int i = int(t.rows.size()) - 1; i >= 0; --i) {
    if (t.basis[i] < nstruct) continue;
    int col = -1;
    for (int j = 0; j < nstruct; ++j)
      if (t.rows[i][j] != 0) {
        col = j;
        break;
      }
    if (col >= 0) {
      t.pivot(i, col);
    } else {
      t.rows.erase(t.rows.begin() + i);
      t.basis.erase(t.basis.begin() + i);
    }
  }

  // phase 2 on structural columns only
  for (auto& row : t.rows) {
    row.erase(row.begin() + nstruct, row.begin() + ncols);
  }
  t.obj.assign(nstruct + 1, Rational(0));
  t.ncols = nstruct;
  for (int j = 0; j < num_vars; ++j) {
    t.obj[j] = c[j];
    t.obj[nu + j] = -c[j];
  }
  for (int i = 0; i < int(t.rows.size()); ++i) {
    int b = t.basis[i];
    if (t.obj[b] == 0) continue;
    Rational f = t.obj[b];
    for (int j = 0; j <= nstruct; ++j) t.obj[j] -= f * t.rows[i][j];
  }
  t.run(&unbounded);
  if (unbounded) {
    result.status = LpStatus::Unbounded;
    return result;
  }

  result.status = LpStatus::Optimal;
  QVector z(nstruct, Rational(0));
  for (int i = 0; i < int(t.rows.size()); ++i) z[t.basis[i]] = t.rhs(i);
  result.x.assign(num_vars, Rational(0));
  for (int j = 0; j < num_vars; ++j) result.x[j] = z[j] - z[nu + j];
  result.objective = dot(c, result.x);
  return result;
}

LpResult lp_feasible(int num_vars, const std::vector<LinConstraint>& cons) {
  return solve_lp(num_vars, QVector(num_vars, Rational(0)), cons);
}

}  // namespace preriesz

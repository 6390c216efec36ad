#pragma once

#include <vector>

#include "preriesz/exact/rational.hpp"

namespace preriesz {

enum class Rel { Eq, Ge };

struct LinConstraint {
  QVector a;
  Rel rel;
  Rational b;
};

inline LinConstraint ge(QVector a, Rational b) {
  return {std::move(a), Rel::Ge, std::move(b)};
}
inline LinConstraint eq(QVector a, Rational b) {
  return {std::move(a), Rel::Eq, std::move(b)};
}

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  QVector x;           // minimizer when Optimal
  Rational objective;  // value when Optimal
  // Infeasible: one multiplier per constraint with
  //   sum_i farkas[i] * a_i = 0,  sum_i farkas[i] * b_i > 0,
  //   farkas[i] >= 0 on Ge rows. Verified before returning.
  QVector farkas;
};

// minimize c . x over free variables x in Q^num_vars subject to the
// constraints; exact two-phase simplex with Bland's rule
LpResult solve_lp(int num_vars, const QVector& c,
                  const std::vector<LinConstraint>& cons);

LpResult lp_feasible(int num_vars, const std::vector<LinConstraint>& cons);

// checks the Farkas conditions above; used by certificate consumers
bool verify_farkas(int num_vars, const std::vector<LinConstraint>& cons,
                   const QVector& farkas);

}  // namespace preriesz

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "preriesz/exact/poly.hpp"
#include "preriesz/exact/sturm.hpp"

namespace preriesz {

// A real algebraic number of degree at most 2 over Q: a defining
// polynomial together with an isolating interval. Rationals are stored
// exactly (degenerate interval); irrationals carry their irreducible
// primitive-integer quadratic. Quadratics with rational roots are snapped
// to the rational representation at construction, so an instance is
// irrational exactly when its defining polynomial has degree 2.
class AlgebraicNumber {
 public:
  AlgebraicNumber() : AlgebraicNumber(Rational(0)) {}
  AlgebraicNumber(const Rational& r);
  AlgebraicNumber(long n) : AlgebraicNumber(Rational(n)) {}

  // the unique root of p (degree 1 or 2) inside [lo, hi]
  static AlgebraicNumber make_root(const Poly& p, const Rational& lo,
                                   const Rational& hi);

  bool is_rational() const { return lo_ == hi_; }
  const Rational& rational_value() const;
  const Poly& defining() const { return defining_; }
  const Rational& lo() const { return lo_; }
  const Rational& hi() const { return hi_; }

  int sign() const;
  AlgebraicNumber operator-() const;

  // halves the isolating interval; logical value unchanged
  void refine() const;

  static int compare(const AlgebraicNumber& a, const AlgebraicNumber& b);
  friend bool operator==(const AlgebraicNumber& a, const AlgebraicNumber& b) {
    return compare(a, b) == 0;
  }
  friend bool operator<(const AlgebraicNumber& a, const AlgebraicNumber& b) {
    return compare(a, b) < 0;
  }
  friend bool operator<=(const AlgebraicNumber& a, const AlgebraicNumber& b) {
    return compare(a, b) <= 0;
  }
  friend bool operator>(const AlgebraicNumber& a, const AlgebraicNumber& b) {
    return compare(a, b) > 0;
  }
  friend bool operator>=(const AlgebraicNumber& a, const AlgebraicNumber& b) {
    return compare(a, b) >= 0;
  }

  std::string to_string() const;

 private:
  Poly defining_;            // degree 1 (t - r) or irreducible quadratic
  mutable Rational lo_, hi_;  // isolator; lo_ == hi_ iff rational
};

// exact sign of p at an algebraic point (any degree p)
int sign_at(const Poly& p, const AlgebraicNumber& x);

// -1 / 0 / +1 for x - c
int compare_with_rational(const AlgebraicNumber& x, const Rational& c);

// a rational strictly between a and b (requires a < b)
Rational rational_between(const AlgebraicNumber& a, const AlgebraicNumber& b);

// all real roots of p in the closed interval [lo, hi], ascending, with
// pairwise disjoint isolators. Throws if a root cannot be represented
// with a degree <= 2 defining polynomial.
std::vector<AlgebraicNumber> isolate_roots(const Poly& p,
                                           const AlgebraicNumber& lo,
                                           const AlgebraicNumber& hi);

// exact sign classification of p on the closed interval [lo, hi]
SignClass sturm_sign(const Poly& p, const AlgebraicNumber& lo,
                     const AlgebraicNumber& hi);

}  // namespace preriesz

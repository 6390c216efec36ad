#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "preriesz/exact/rational.hpp"

namespace preriesz {

// Dense univariate polynomial over Q, coefficients lowest degree first.
// The zero polynomial has an empty coefficient list; otherwise the
// leading coefficient is nonzero.
class Poly {
 public:
  Poly() = default;
  explicit Poly(QVector coeffs);
  Poly(std::initializer_list<Rational> coeffs);
  static Poly constant(const Rational& c);
  static Poly variable();                    // t
  static Poly linear_root(const Rational& r);  // t - r

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  Rational coeff(size_t k) const { return k < c_.size() ? c_[k] : Rational(0); }
  const QVector& coeffs() const { return c_; }
  const Rational& leading() const;

  Rational eval(const Rational& t) const;
  Poly derivative() const;
  Poly shift(const Rational& a) const;  // p(t + a)

  Poly operator-() const;
  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const Rational& c, const Poly& p);
  bool operator==(const Poly& o) const { return c_ == o.c_; }

  // quotient/remainder with deg(rem) < deg(divisor); divisor nonzero
  static std::pair<Poly, Poly> divmod(const Poly& num, const Poly& den);
  bool divides(const Poly& p) const;  // *this | p

  Poly monic() const;
  // integer, content-free, positive leading coefficient
  Poly primitive_integer() const;
  Poly square_free_part() const;

  std::string to_string() const;

 private:
  void trim();
  QVector c_;
};

Poly poly_gcd(const Poly& a, const Poly& b);  // monic gcd, 0 if both zero

}  // namespace preriesz

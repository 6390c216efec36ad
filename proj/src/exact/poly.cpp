#include "preriesz/exact/poly.hpp"

#include <sstream>
#include <stdexcept>

namespace preriesz {

Poly::Poly(QVector coeffs) : c_(std::move(coeffs)) { trim(); }

Poly::Poly(std::initializer_list<Rational> coeffs) : c_(coeffs) { trim(); }

Poly Poly::constant(const Rational& c) { return Poly{c}; }

Poly Poly::variable() { return Poly{Rational(0), Rational(1)}; }

Poly Poly::linear_root(const Rational& r) { return Poly{-r, Rational(1)}; }

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const Rational& Poly::leading() const {
  if (c_.empty()) throw std::logic_error("leading of zero polynomial");
  return c_.back();
}

Rational Poly::eval(const Rational& t) const {
  Rational r = 0;
  for (size_t i = c_.size(); i-- > 0;) r = r * t + c_[i];
  return r;
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return Poly();
  QVector d(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) d[i - 1] = Rational(long(i)) * c_[i];
  return Poly(std::move(d));
}

Poly Poly::shift(const Rational& a) const {
  // Horner on (t + a)
  Poly result;
  Poly base{a, Rational(1)};
  for (size_t i = c_.size(); i-- > 0;)
    result = result * base + Poly::constant(c_[i]);
  return result;
}

Poly Poly::operator-() const {
  QVector r(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) r[i] = -c_[i];
  return Poly(std::move(r));
}

Poly operator+(const Poly& a, const Poly& b) {
  QVector r(std::max(a.c_.size(), b.c_.size()), Rational(0));
  for (size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
  for (size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
  return Poly(std::move(r));
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  QVector r(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (size_t i = 0; i < a.c_.size(); ++i)
    for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  return Poly(std::move(r));
}

Poly operator*(const Rational& c, const Poly& p) {
  QVector r(p.c_.size());
  for (size_t i = 0; i < p.c_.size(); ++i) r[i] = c * p.c_[i];
  return Poly(std::move(r));
}

std::pair<Poly, Poly> Poly::divmod(const Poly& num, const Poly& den) {
  if (den.is_zero()) throw std::invalid_argument("division by zero polynomial");
  Poly rem = num;
  if (num.degree() < den.degree()) return {Poly(), rem};
  QVector q(num.degree() - den.degree() + 1, Rational(0));
  while (!rem.is_zero() && rem.degree() >= den.degree()) {
    int shift = rem.degree() - den.degree();
    Rational factor = rem.leading() / den.leading();
    q[shift] = factor;
    QVector sub(shift, Rational(0));
    sub.insert(sub.end(), den.c_.begin(), den.c_.end());
    for (auto& x : sub) x *= factor;
    rem = rem - Poly(std::move(sub));
  }
  return {Poly(std::move(q)), rem};
}

bool Poly::divides(const Poly& p) const {
  if (is_zero()) return p.is_zero();
  return divmod(p, *this).second.is_zero();
}

Poly Poly::monic() const {
  if (is_zero()) return Poly();
  return (Rational(1) / leading()) * (*this);
}

Poly Poly::primitive_integer() const {
  if (is_zero()) return Poly();
  QVector v = primitive(c_);
  Poly p(std::move(v));
  if (p.leading() < 0) return -p;
  return p;
}

Poly Poly::square_free_part() const {
  if (is_zero()) return Poly();
  if (degree() == 0) return monic();
  Poly g = poly_gcd(*this, derivative());
  if (g.degree() == 0) return monic();
  return divmod(*this, g).first.monic();
}

std::string Poly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    if (!first) os << " + ";
    os << c_[i].get_str();
    if (i >= 1) os << "*t";
    if (i >= 2) os << "^" << i;
    first = false;
  }
  return os.str();
}

Poly poly_gcd(const Poly& a, const Poly& b) {
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = Poly::divmod(x, y).second;
    x = y;
    y = r;
  }
  return x.is_zero() ? Poly() : x.monic();
}

}  // namespace preriesz

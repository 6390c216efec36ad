#include "preriesz/exact/rational.hpp"

#include <sstream>
#include <stdexcept>

namespace preriesz {

Rational rat(long num, long den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational parse_rational(const std::string& s) {
  Rational q;
  if (q.set_str(s, 10) != 0)
    throw std::invalid_argument("not a rational: '" + s + "'");
  if (q.get_den() == 0)
    throw std::invalid_argument("zero denominator: '" + s + "'");
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

Rational abs_q(const Rational& q) { return q < 0 ? Rational(-q) : q; }

bool is_canonical(const Rational& q) {
  if (sgn(q.get_den()) <= 0) return false;
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  return g == 1;
}

bool is_zero_vector(const QVector& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

Rational dot(const QVector& a, const QVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: size mismatch");
  Rational s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

QVector add(const QVector& a, const QVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("add: size mismatch");
  QVector r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

QVector sub(const QVector& a, const QVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("sub: size mismatch");
  QVector r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

QVector scale(const Rational& c, const QVector& v) {
  QVector r(v.size());
  for (size_t i = 0; i < v.size(); ++i) r[i] = c * v[i];
  return r;
}

QVector zero_vector(int n) { return QVector(n, Rational(0)); }

QVector unit_vector(int n, int k) {
  QVector r(n, Rational(0));
  r.at(k) = 1;
  return r;
}

QVector primitive(const QVector& v) {
  mpz_class den_lcm = 1;
  for (const auto& x : v)
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), x.get_den().get_mpz_t());
  std::vector<mpz_class> ints(v.size());
  mpz_class g = 0;
  for (size_t i = 0; i < v.size(); ++i) {
    ints[i] = v[i].get_num() * (den_lcm / v[i].get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ints[i].get_mpz_t());
  }
  if (g == 0) throw std::invalid_argument("primitive: zero vector");
  QVector r(v.size());
  for (size_t i = 0; i < v.size(); ++i) r[i] = Rational(ints[i] / g);
  return r;
}

bool positively_parallel(const QVector& a, const QVector& b) {
  if (a.size() != b.size()) return false;
  if (is_zero_vector(a) || is_zero_vector(b)) return false;
  return primitive(a) == primitive(b);
}

bool lex_less(const QVector& a, const QVector& b) {
  for (size_t i = 0; i < a.size() && i < b.size(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return a.size() < b.size();
}

std::string to_string(const QVector& v) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) os << ",";
    os << v[i].get_str();
  }
  os << ")";
  return os.str();
}

}  // namespace preriesz

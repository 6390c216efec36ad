#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace preriesz {

// Exact rational scalar. GMP keeps values canonical (lowest terms,
// positive denominator) after every arithmetic operation; the helpers
// below canonicalize on construction from raw parts or strings.
using Rational = mpq_class;
using QVector = std::vector<Rational>;

Rational rat(long num, long den = 1);
Rational parse_rational(const std::string& s);
std::string to_string(const Rational& q);

inline int sign(const Rational& q) { return sgn(q); }
Rational abs_q(const Rational& q);

// true iff stored in lowest terms with positive denominator
bool is_canonical(const Rational& q);

bool is_zero_vector(const QVector& v);
Rational dot(const QVector& a, const QVector& b);
QVector add(const QVector& a, const QVector& b);
QVector sub(const QVector& a, const QVector& b);
QVector scale(const Rational& c, const QVector& v);
QVector zero_vector(int n);
QVector unit_vector(int n, int k);

// scales a nonzero rational vector to coprime integers, direction preserved
QVector primitive(const QVector& v);

// true iff a = c*b for some c > 0
bool positively_parallel(const QVector& a, const QVector& b);

// lexicographic comparison, used for canonical ordering of ray lists
bool lex_less(const QVector& a, const QVector& b);

std::string to_string(const QVector& v);

}  // namespace preriesz

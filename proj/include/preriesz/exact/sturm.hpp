#pragma once

#include <vector>

#include "preriesz/exact/poly.hpp"

namespace preriesz {

// Sign behaviour of a polynomial on a closed interval.
enum class SignClass {
  AllPositive,
  AllNegative,
  IdenticallyZero,
  AllNonnegWithZeros,
  AllNonposWithZeros,
  Mixed,
};

std::string to_string(SignClass s);

std::vector<Poly> sturm_chain(const Poly& p);

// number of distinct real roots of p in (a, b], a < b
int count_roots_half_open(const Poly& p, const Rational& a, const Rational& b);

// number of distinct real roots of p in the closed interval [a, b]
int count_roots_closed(const Poly& p, const Rational& a, const Rational& b);

// isolating intervals for the distinct roots of p in the closed interval
// [a, b], sorted ascending. A bracket with lo < hi contains exactly one
// root and satisfies p(lo) != 0, p(hi) != 0; rational roots hit during
// the search are reported with lo == hi == root.
struct RootBracket {
  Rational lo, hi;  // lo == hi means an exact rational root
  bool exact() const { return lo == hi; }
};
std::vector<RootBracket> isolate_roots_rational(const Poly& p, const Rational& a,
                                                const Rational& b);

struct SignSummary {
  bool pos = false, neg = false, zero = false;
  void record(int s);
  void merge(const SignSummary& o);
};
SignClass classify(const SignSummary& s, bool identically_zero = false);

// signs attained by p on the closed rational interval [a, b]
SignSummary summarize_signs_on(const Poly& p, const Rational& a, const Rational& b);

// exact sign classification on a closed rational interval [a, b], a <= b
SignClass sign_class_on(const Poly& p, const Rational& a, const Rational& b);

// all rational roots of p (each once), ascending
std::vector<Rational> rational_roots(const Poly& p);

}  // namespace preriesz

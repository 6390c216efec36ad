#include "preriesz/exact/algebraic.hpp"

#include <sstream>
#include <stdexcept>

namespace preriesz {

namespace {

// exact square root of a nonnegative rational if it is one
std::optional<Rational> rational_sqrt(const Rational& q) {
  if (q < 0) return std::nullopt;
  mpz_class num = q.get_num(), den = q.get_den();
  if (mpz_perfect_square_p(num.get_mpz_t()) == 0) return std::nullopt;
  if (mpz_perfect_square_p(den.get_mpz_t()) == 0) return std::nullopt;
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  Rational r(rn, rd);
  r.canonicalize();
  return r;
}

}  // namespace

AlgebraicNumber::AlgebraicNumber(const Rational& r)
    : defining_(Poly::linear_root(r)), lo_(r), hi_(r) {}

AlgebraicNumber AlgebraicNumber::make_root(const Poly& p, const Rational& lo,
                                           const Rational& hi) {
  if (lo > hi) throw std::invalid_argument("make_root: empty interval");
  if (p.degree() == 1) {
    Rational r = -p.coeff(0) / p.coeff(1);
    if (r < lo || r > hi)
      throw std::invalid_argument("make_root: root outside interval");
    return AlgebraicNumber(r);
  }
  if (p.degree() != 2)
    throw std::invalid_argument("make_root: defining degree must be 1 or 2");
  Rational a = p.coeff(2), b = p.coeff(1), c = p.coeff(0);
  Rational disc = b * b - 4 * a * c;
  if (disc < 0) throw std::invalid_argument("make_root: no real root");
  if (auto s = rational_sqrt(disc)) {
    Rational r1 = (-b - *s) / (2 * a), r2 = (-b + *s) / (2 * a);
    bool in1 = (r1 >= lo && r1 <= hi), in2 = (r2 >= lo && r2 <= hi);
    if (in1 == in2)
      throw std::invalid_argument("make_root: interval does not isolate one root");
    return AlgebraicNumber(in1 ? r1 : r2);
  }
  // irreducible quadratic: exactly one root iff opposite endpoint signs
  Poly def = p.primitive_integer();
  int sl = sgn(def.eval(lo)), sh = sgn(def.eval(hi));
  if (sl == 0 || sh == 0 || sl == sh)
    throw std::invalid_argument("make_root: interval does not isolate one root");
  AlgebraicNumber x(Rational(0));
  x.defining_ = def;
  x.lo_ = lo;
  x.hi_ = hi;
  return x;
}

const Rational& AlgebraicNumber::rational_value() const {
  if (!is_rational()) throw std::logic_error("not a rational value");
  return lo_;
}

void AlgebraicNumber::refine() const {
  if (is_rational()) return;
  Rational mid = (lo_ + hi_) / 2;
  // rational midpoint is never a root of an irreducible quadratic
  if (sgn(defining_.eval(mid)) == sgn(defining_.eval(lo_)))
    lo_ = mid;
  else
    hi_ = mid;
}

int AlgebraicNumber::sign() const {
  if (is_rational()) return sgn(lo_);
  return compare_with_rational(*this, Rational(0));
}

AlgebraicNumber AlgebraicNumber::operator-() const {
  if (is_rational()) return AlgebraicNumber(Rational(-lo_));
  QVector flipped = defining_.coeffs();
  for (size_t i = 1; i < flipped.size(); i += 2) flipped[i] = -flipped[i];
  AlgebraicNumber x(Rational(0));
  x.defining_ = Poly(std::move(flipped)).primitive_integer();
  x.lo_ = -hi_;
  x.hi_ = -lo_;
  return x;
}

int compare_with_rational(const AlgebraicNumber& x, const Rational& c) {
  if (x.is_rational()) return sgn(x.rational_value() - c);
  // irrational, so x != c and the isolator eventually excludes c
  while (x.lo() < c && c < x.hi()) x.refine();
  if (c <= x.lo()) return 1;
  return -1;
}

int AlgebraicNumber::compare(const AlgebraicNumber& a, const AlgebraicNumber& b) {
  if (a.is_rational() && b.is_rational())
    return sgn(a.rational_value() - b.rational_value());
  if (a.is_rational()) return -compare_with_rational(b, a.rational_value());
  if (b.is_rational()) return compare_with_rational(a, b.rational_value());
  if (a.defining_ == b.defining_) {
    // same irreducible quadratic: branch is decided by the vertex
    Rational vertex = -a.defining_.coeff(1) / (2 * a.defining_.coeff(2));
    int sa = compare_with_rational(a, vertex);
    int sb = compare_with_rational(b, vertex);
    if (sa != sb) return sa;
    return 0;  // same polynomial, same side of the vertex
  }
  // distinct irreducible quadratics never share a root
  while (true) {
    if (a.hi_ <= b.lo_) return -1;
    if (b.hi_ <= a.lo_) return 1;
    a.refine();
    b.refine();
  }
}

std::string AlgebraicNumber::to_string() const {
  if (is_rational()) return lo_.get_str();
  std::ostringstream os;
  os << "root(" << defining_.to_string() << ", [" << lo_.get_str() << ","
     << hi_.get_str() << "])";
  return os.str();
}

int sign_at(const Poly& p, const AlgebraicNumber& x) {
  if (p.is_zero()) return 0;
  if (x.is_rational()) return sgn(p.eval(x.rational_value()));
  Poly rem = Poly::divmod(p, x.defining()).second;
  if (rem.is_zero()) return 0;
  if (rem.degree() == 0) return sgn(rem.coeff(0));
  // rem = u + v t, sign of v * (x - (-u/v))
  Rational u = rem.coeff(0), v = rem.coeff(1);
  return sgn(v) * compare_with_rational(x, -u / v);
}

Rational rational_between(const AlgebraicNumber& a, const AlgebraicNumber& b) {
  if (!(AlgebraicNumber::compare(a, b) < 0))
    throw std::invalid_argument("rational_between: requires a < b");
  while (!(a.hi() < b.lo())) {
    a.refine();
    b.refine();
  }
  return (a.hi() + b.lo()) / 2;
}

std::vector<AlgebraicNumber> isolate_roots(const Poly& p,
                                           const AlgebraicNumber& lo,
                                           const AlgebraicNumber& hi) {
  if (p.is_zero())
    throw std::invalid_argument("isolate_roots: zero polynomial");
  int rel = AlgebraicNumber::compare(lo, hi);
  if (rel > 0) throw std::invalid_argument("isolate_roots: empty interval");
  std::vector<AlgebraicNumber> out;
  if (rel == 0) {
    if (sign_at(p, lo) == 0) out.push_back(lo);
    return out;
  }

  Poly sf = p.square_free_part();
  if (sf.degree() == 0) return out;
  auto rr = rational_roots(sf);
  Poly residual = sf;
  for (const auto& r : rr)
    residual = Poly::divmod(residual, Poly::linear_root(r)).first;
  // known quadratic factors this bracket search can match against
  std::vector<Poly> quadratics;
  for (const AlgebraicNumber* e : {&lo, &hi}) {
    if (!e->is_rational() && e->defining().divides(residual)) {
      quadratics.push_back(e->defining());
      residual = Poly::divmod(residual, e->defining()).first;
    }
  }
  if (residual.degree() == 2) quadratics.push_back(residual);

  auto brackets = isolate_roots_rational(sf, lo.lo(), hi.hi());
  for (const auto& br : brackets) {
    std::optional<AlgebraicNumber> root;
    if (br.exact()) {
      root = AlgebraicNumber(br.lo);
    } else {
      for (const auto& r : rr)
        if (br.lo < r && r < br.hi) root = AlgebraicNumber(r);
      for (const auto& quad : quadratics) {
        if (root) break;
        if (sgn(quad.eval(br.lo)) * sgn(quad.eval(br.hi)) < 0)
          root = AlgebraicNumber::make_root(quad, br.lo, br.hi);
      }
      if (!root)
        throw std::domain_error(
            "isolate_roots: root of degree > 2 is not representable");
    }
    if (AlgebraicNumber::compare(*root, lo) >= 0 &&
        AlgebraicNumber::compare(*root, hi) <= 0)
      out.push_back(*root);
  }
  // ensure pairwise disjoint isolators
  for (size_t i = 0; i + 1 < out.size(); ++i)
    while (!(out[i].hi() < out[i + 1].lo())) {
      out[i].refine();
      out[i + 1].refine();
    }
  return out;
}

namespace {

// rational u in (bound, other) with no roots of sf strictly between bound
// and u. dir = +1 clears to the right of bound, -1 to the left.
Rational clearance(const Poly& sf, const AlgebraicNumber& bound,
                   const AlgebraicNumber& other, int dir) {
  if (bound.is_rational()) {
    Rational v = bound.rational_value();
    Rational u = rational_between(dir > 0 ? bound : other,
                                  dir > 0 ? other : bound);
    auto foreign_roots = [&]() {
      // roots strictly between v and u; the count over (min, max] can
      // include the fixed endpoint's own root, which does not matter here
      if (dir > 0) return count_roots_half_open(sf, v, u);
      int c = count_roots_half_open(sf, u, v);
      return sgn(sf.eval(v)) == 0 ? c - 1 : c;
    };
    while (sgn(sf.eval(u)) == 0 || foreign_roots() > 0) u = (v + u) / 2;
    return u;
  }
  // shrink the isolator until it contains no foreign roots and has clean
  // rational endpoints strictly inside (bound, other)
  while (true) {
    const Rational &l = bound.lo(), &h = bound.hi();
    bool clean = sgn(sf.eval(l)) != 0 && sgn(sf.eval(h)) != 0;
    if (clean) {
      int own = sign_at(sf, bound) == 0 ? 1 : 0;
      if (count_roots_half_open(sf, l, h) == own) {
        Rational u = dir > 0 ? h : l;
        int cmp = compare_with_rational(other, u);
        if ((dir > 0 && cmp > 0) || (dir < 0 && cmp < 0)) return u;
      }
    }
    bound.refine();
  }
}

}  // namespace

SignClass sturm_sign(const Poly& p, const AlgebraicNumber& lo,
                     const AlgebraicNumber& hi) {
  if (p.is_zero()) return SignClass::IdenticallyZero;
  int rel = AlgebraicNumber::compare(lo, hi);
  if (rel > 0) throw std::invalid_argument("sturm_sign: empty interval");
  SignSummary s;
  s.record(sign_at(p, lo));
  if (rel == 0) return classify(s);
  s.record(sign_at(p, hi));

  Poly sf = p.square_free_part();
  Rational u = clearance(sf, lo, hi, +1);
  Rational w = clearance(sf, hi, lo, -1);
  if (u >= w) {
    // no interior roots: constant interior sign
    s.record(sgn(p.eval(u)));
  } else {
    s.merge(summarize_signs_on(p, u, w));
  }
  return classify(s);
}

}  // namespace preriesz

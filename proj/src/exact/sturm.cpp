#include "preriesz/exact/sturm.hpp"

#include <algorithm>
#include <stdexcept>

namespace preriesz {

std::string to_string(SignClass s) {
  switch (s) {
    case SignClass::AllPositive: return "AllPositive";
    case SignClass::AllNegative: return "AllNegative";
    case SignClass::IdenticallyZero: return "IdenticallyZero";
    case SignClass::AllNonnegWithZeros: return "AllNonnegWithZeros";
    case SignClass::AllNonposWithZeros: return "AllNonposWithZeros";
    case SignClass::Mixed: return "Mixed";
  }
  return "?";
}

std::vector<Poly> sturm_chain(const Poly& p) {
  std::vector<Poly> chain;
  if (p.is_zero()) return chain;
  chain.push_back(p);
  Poly d = p.derivative();
  if (d.is_zero()) return chain;
  chain.push_back(d);
  while (true) {
    const Poly& a = chain[chain.size() - 2];
    const Poly& b = chain[chain.size() - 1];
    Poly r = Poly::divmod(a, b).second;
    if (r.is_zero()) break;
    chain.push_back(-r);
  }
  return chain;
}

namespace {

int sign_variations(const std::vector<Poly>& chain, const Rational& t) {
  int variations = 0, prev = 0;
  for (const auto& q : chain) {
    int s = sgn(q.eval(t));
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++variations;
    prev = s;
  }
  return variations;
}

}  // namespace

int count_roots_half_open(const Poly& p, const Rational& a, const Rational& b) {
  if (p.is_zero()) throw std::invalid_argument("root count of zero polynomial");
  if (!(a < b)) throw std::invalid_argument("count_roots: empty interval");
  auto chain = sturm_chain(p);
  return sign_variations(chain, a) - sign_variations(chain, b);
}

int count_roots_closed(const Poly& p, const Rational& a, const Rational& b) {
  if (p.is_zero()) throw std::invalid_argument("root count of zero polynomial");
  int at_a = p.eval(a) == 0 ? 1 : 0;
  if (a == b) return at_a;
  return at_a + count_roots_half_open(p, a, b);
}

std::vector<RootBracket> isolate_roots_rational(const Poly& p, const Rational& a,
                                                const Rational& b) {
  if (p.is_zero()) throw std::invalid_argument("isolating roots of zero polynomial");
  Poly sf = p.square_free_part();
  std::vector<RootBracket> out;

  // work queue of (lo, hi) with sf(lo) != 0 and sf(hi) != 0
  struct Seg {
    Rational lo, hi;
  };
  std::vector<Seg> queue;

  auto push_initial = [&](Rational lo, Rational hi) {
    // nudge endpoints off roots of sf, shrinking inward past any root
    while (sf.eval(lo) == 0) {
      out.push_back({lo, lo});
      Rational step = (hi - lo) / 4;
      Rational cand = lo + step;
      while (count_roots_half_open(sf, lo, cand) > 0 || sf.eval(cand) == 0)
        cand = lo + (cand - lo) / 2;
      lo = cand;
    }
    while (sf.eval(hi) == 0) {
      out.push_back({hi, hi});
      Rational step = (hi - lo) / 4;
      Rational cand = hi - step;
      while (count_roots_half_open(sf, cand, hi) > 1 || sf.eval(cand) == 0)
        cand = hi - (hi - cand) / 2;
      hi = cand;
    }
    if (lo < hi) queue.push_back({lo, hi});
  };
  if (!(a < b)) return out;
  push_initial(a, b);

  while (!queue.empty()) {
    Seg s = queue.back();
    queue.pop_back();
    int c = count_roots_half_open(sf, s.lo, s.hi);  // counts (lo, hi], hi not a root
    if (c == 0) continue;
    if (c == 1) {
      out.push_back({s.lo, s.hi});
      continue;
    }
    Rational mid = (s.lo + s.hi) / 2;
    if (sf.eval(mid) == 0) {
      out.push_back({mid, mid});
      // shrink a clearance around mid containing no other root
      Rational eps = (s.hi - s.lo) / 8;
      while (count_roots_half_open(sf, mid - eps, mid + eps) > 1 ||
             sf.eval(mid - eps) == 0 || sf.eval(mid + eps) == 0)
        eps /= 2;
      queue.push_back({s.lo, mid - eps});
      queue.push_back({mid + eps, s.hi});
    } else {
      queue.push_back({s.lo, mid});
      queue.push_back({mid, s.hi});
    }
  }
  std::sort(out.begin(), out.end(),
            [](const RootBracket& x, const RootBracket& y) { return x.lo < y.lo; });
  return out;
}

void SignSummary::record(int s) {
  if (s > 0) pos = true;
  else if (s < 0) neg = true;
  else zero = true;
}

void SignSummary::merge(const SignSummary& o) {
  pos = pos || o.pos;
  neg = neg || o.neg;
  zero = zero || o.zero;
}

SignClass classify(const SignSummary& s, bool identically_zero) {
  if (identically_zero) return SignClass::IdenticallyZero;
  if (s.pos && s.neg) return SignClass::Mixed;
  if (s.pos) return s.zero ? SignClass::AllNonnegWithZeros : SignClass::AllPositive;
  if (s.neg) return s.zero ? SignClass::AllNonposWithZeros : SignClass::AllNegative;
  return SignClass::IdenticallyZero;
}

SignSummary summarize_signs_on(const Poly& p, const Rational& a, const Rational& b) {
  if (p.is_zero()) throw std::invalid_argument("summarize_signs_on: zero polynomial");
  if (a > b) throw std::invalid_argument("summarize_signs_on: bad interval");
  SignSummary s;
  s.record(sgn(p.eval(a)));
  if (a == b) return s;
  s.record(sgn(p.eval(b)));
  auto brackets = isolate_roots_rational(p, a, b);
  // sample between consecutive root brackets and next to the endpoints
  Rational prev = a;
  for (const auto& br : brackets) {
    s.zero = true;
    if (prev < br.lo) s.record(sgn(p.eval((prev + br.lo) / 2)));
    // for a bracketed irrational root the endpoint signs are clean samples
    if (!br.exact()) {
      s.record(sgn(p.eval(br.lo)));
      s.record(sgn(p.eval(br.hi)));
    }
    prev = br.hi;
  }
  if (prev < b) s.record(sgn(p.eval((prev + b) / 2)));
  return s;
}

SignClass sign_class_on(const Poly& p, const Rational& a, const Rational& b) {
  if (p.is_zero()) return SignClass::IdenticallyZero;
  return classify(summarize_signs_on(p, a, b));
}

std::vector<Rational> rational_roots(const Poly& p) {
  if (p.is_zero()) throw std::invalid_argument("rational_roots of zero polynomial");
  std::vector<Rational> roots;
  Poly q = p.primitive_integer();
  // factor out t^k
  size_t low = 0;
  while (low < q.coeffs().size() && q.coeff(low) == 0) ++low;
  if (low > 0) {
    roots.push_back(Rational(0));
    QVector shifted(q.coeffs().begin() + low, q.coeffs().end());
    q = Poly(std::move(shifted));
  }
  if (q.degree() < 1) {
    std::sort(roots.begin(), roots.end());
    return roots;
  }
  mpz_class a0 = q.coeff(0).get_num();
  mpz_class an = q.leading().get_num();
  auto divisors = [](mpz_class v) {
    v = abs(v);
    std::vector<mpz_class> ds;
    for (mpz_class d = 1; d * d <= v; ++d) {
      if (v % d == 0) {
        ds.push_back(d);
        ds.push_back(v / d);
      }
    }
    return ds;
  };
  for (const auto& num : divisors(a0)) {
    for (const auto& den : divisors(an)) {
      for (int s : {1, -1}) {
        Rational cand(s * num, den);
        cand.canonicalize();
        if (q.eval(cand) == 0 &&
            std::find(roots.begin(), roots.end(), cand) == roots.end())
          roots.push_back(cand);
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace preriesz

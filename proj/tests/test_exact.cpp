#include "doctest.h"

#include <algorithm>

#include "preriesz/exact/algebraic.hpp"
#include "preriesz/exact/matrix.hpp"
#include "preriesz/exact/poly.hpp"
#include "preriesz/exact/rational.hpp"
#include "preriesz/exact/simplex.hpp"
#include "preriesz/exact/sturm.hpp"
#include "preriesz/exact/subspace.hpp"
#include "support/random_gen.hpp"

using namespace preriesz;
using testsupport::Rng;

TEST_CASE("rational parsing and canonical form") {
  CHECK(parse_rational("3/6") == rat(1, 2));
  CHECK(parse_rational("-4/2") == rat(-2));
  CHECK(to_string(rat(5, -10)) == "-1/2");
  CHECK_THROWS(parse_rational("1/0"));
  CHECK_THROWS(parse_rational("abc"));

  Rng rng(7);
  for (int i = 0; i < 200; ++i) {
    Rational a = testsupport::rand_rational(rng, 20, 9);
    Rational b = testsupport::rand_rational(rng, 20, 9);
    CHECK(is_canonical(Rational(a + b)));
    CHECK(is_canonical(Rational(a - b)));
    CHECK(is_canonical(Rational(a * b)));
    if (b != 0) CHECK(is_canonical(Rational(a / b)));
  }
}

TEST_CASE("primitive vector normalization") {
  QVector v{rat(2, 3), rat(-4, 3), rat(2)};
  CHECK(primitive(v) == QVector{rat(1), rat(-2), rat(3)});
  CHECK(positively_parallel(QVector{rat(0), rat(2), rat(2)},
                            QVector{rat(0), rat(1), rat(1)}));
  CHECK_FALSE(positively_parallel(QVector{rat(0), rat(1)}, QVector{rat(0), rat(-1)}));
}

TEST_CASE("kernel basis of the k4 functional row") {
  // kernel of (-1, 1, 1) is the plane spanned by (1,0,1) and (0,-1,1)
  QMatrix m = QMatrix::from_rows({{rat(-1), rat(1), rat(1)}}, 3);
  Subspace ker = kernel_subspace(m);
  CHECK(ker.dim() == 2);
  Subspace expected =
      Subspace::span_of({{rat(1), rat(0), rat(1)}, {rat(0), rat(-1), rat(1)}}, 3);
  CHECK(ker == expected);
  for (const auto& b : ker.basis_rows()) CHECK(is_zero_vector(m.apply(b)));
}

TEST_CASE("kernel of identity is zero") {
  CHECK(kernel_subspace(QMatrix::identity(3)).dim() == 0);
}

TEST_CASE("kernel dimension and residual on random rank-2 matrices") {
  Rng rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    // random 3x5 of rank <= 2: rows are combinations of two generators
    QVector g1 = testsupport::rand_vector(rng, 5), g2 = testsupport::rand_vector(rng, 5);
    std::vector<QVector> rows;
    for (int i = 0; i < 3; ++i) {
      Rational c1 = testsupport::rand_rational(rng), c2 = testsupport::rand_rational(rng);
      rows.push_back(add(scale(c1, g1), scale(c2, g2)));
    }
    QMatrix m = QMatrix::from_rows(rows, 5);
    int rank = rank_of(m);
    Subspace ker = kernel_subspace(m);
    CHECK(rank + ker.dim() == 5);
    for (const auto& b : ker.basis_rows()) CHECK(is_zero_vector(m.apply(b)));
  }
}

TEST_CASE("subspace operations") {
  Subspace a = Subspace::span_of({unit_vector(3, 0)}, 3);
  Subspace b = Subspace::span_of({unit_vector(3, 1)}, 3);
  CHECK(a.intersect(b).is_zero());
  CHECK(a.sum(b) == Subspace::span_of({unit_vector(3, 0), unit_vector(3, 1)}, 3));

  Subspace plane = Subspace::span_of(
      {{rat(1), rat(1), rat(0), rat(0)}, {rat(0), rat(1), rat(1), rat(0)}}, 4);
  CHECK_FALSE(plane.contains(QVector{rat(1), rat(0), rat(1), rat(0)}));

  Rng rng(13);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<QVector> ga, gb;
    for (int i = 0; i < int(testsupport::rand_int(rng, 1, 3)); ++i)
      ga.push_back(testsupport::rand_vector(rng, 6));
    for (int i = 0; i < int(testsupport::rand_int(rng, 1, 3)); ++i)
      gb.push_back(testsupport::rand_vector(rng, 6));
    Subspace A = Subspace::span_of(ga, 6), B = Subspace::span_of(gb, 6);
    CHECK(A.dim() + B.dim() == A.intersect(B).dim() + A.sum(B).dim());
    CHECK(A.sum(B).contains(A));
    CHECK(A.contains(A.intersect(B)));
  }
}

TEST_CASE("coordinate subspace recognition") {
  Subspace c = Subspace::coordinate({2, 0}, 4);
  std::vector<int> coords;
  CHECK(c.is_coordinate(&coords));
  CHECK(coords == std::vector<int>{0, 2});
  CHECK_FALSE(Subspace::span_of({{rat(1), rat(1)}}, 2).is_coordinate());
}

TEST_CASE("polynomial arithmetic basics") {
  Poly p{rat(-1, 4), rat(0), rat(1)};  // t^2 - 1/4
  CHECK(p.eval(rat(1, 2)) == 0);
  CHECK(p.eval(rat(1)) == rat(3, 4));
  CHECK(p.derivative() == Poly{rat(0), rat(2)});
  Poly q = Poly::linear_root(rat(1, 2)) * Poly::linear_root(rat(-1, 2));
  CHECK(p == q);
  auto [quo, rem] = Poly::divmod(p, Poly::linear_root(rat(1, 2)));
  CHECK(rem.is_zero());
  CHECK(quo == Poly{rat(1, 2), rat(1)});
  CHECK(poly_gcd(p, p.derivative()).degree() == 0);
}

namespace {

// Classification oracle for factored polynomials: the roots inside the
// interval are known by construction, so sampling strictly between
// consecutive roots plus the endpoints sees every sign region.
SignClass classify_by_sampling(const Poly& p, const std::vector<Rational>& known_roots,
                               const Rational& a, const Rational& b) {
  if (p.is_zero()) return SignClass::IdenticallyZero;
  SignSummary s;
  std::vector<Rational> pts{a, b};
  std::vector<Rational> in;
  for (const auto& r : known_roots)
    if (a <= r && r <= b) in.push_back(r);
  std::sort(in.begin(), in.end());
  for (const auto& r : in) pts.push_back(r);
  Rational prev = a;
  for (const auto& r : in) {
    if (prev < r) pts.push_back((prev + r) / 2);
    prev = r;
  }
  if (prev < b) pts.push_back((prev + b) / 2);
  for (int k = 0; k <= 64; ++k) pts.push_back(a + (b - a) * rat(k, 64));
  for (const auto& t : pts) s.record(sgn(p.eval(t)));
  return classify(s);
}

}  // namespace

TEST_CASE("sturm sign classification") {
  Poly q{rat(-1, 4), rat(0), rat(1)};  // t^2 - 1/4
  CHECK(sturm_sign(q, AlgebraicNumber(rat(-1, 2)), AlgebraicNumber(rat(1, 2))) ==
        SignClass::AllNonposWithZeros);
  CHECK(sturm_sign(Poly(), AlgebraicNumber(rat(0)), AlgebraicNumber(rat(1))) ==
        SignClass::IdenticallyZero);
  CHECK(sturm_sign(Poly::variable(), AlgebraicNumber(rat(1, 4)), AlgebraicNumber(rat(1))) ==
        SignClass::AllPositive);
  CHECK(sturm_sign(q, AlgebraicNumber(rat(-1)), AlgebraicNumber(rat(1))) ==
        SignClass::Mixed);
  CHECK(sturm_sign(q, AlgebraicNumber(rat(1, 2)), AlgebraicNumber(rat(1))) ==
        SignClass::AllNonnegWithZeros);
}

TEST_CASE("sturm sign matches the sampling oracle on factored polynomials") {
  Rng rng(42);
  for (int trial = 0; trial < 100; ++trial) {
    // product of up to 4 linear factors with small rational roots
    int nf = int(testsupport::rand_int(rng, 0, 4));
    Poly p = Poly::constant(rat(testsupport::rand_int(rng, 1, 3) *
                                (testsupport::rand_int(rng, 0, 1) ? 1 : -1)));
    std::vector<Rational> roots;
    for (int i = 0; i < nf; ++i) {
      Rational r = testsupport::rand_rational(rng, 3, 2);
      roots.push_back(r);
      p = p * Poly::linear_root(r);
    }
    Rational a = testsupport::rand_rational(rng, 4, 2);
    Rational b = a + abs_q(testsupport::rand_rational(rng, 3, 2)) + rat(1, 7);
    SignClass mine = sturm_sign(p, AlgebraicNumber(a), AlgebraicNumber(b));
    SignClass oracle = classify_by_sampling(p, roots, a, b);
    CHECK(mine == oracle);
  }
}

TEST_CASE("root isolation") {
  Poly q{rat(-1, 4), rat(0), rat(1)};
  auto roots = isolate_roots(q, AlgebraicNumber(rat(-1)), AlgebraicNumber(rat(1)));
  REQUIRE(roots.size() == 2);
  CHECK(roots[0] == AlgebraicNumber(rat(-1, 2)));
  CHECK(roots[1] == AlgebraicNumber(rat(1, 2)));

  Poly none{rat(1), rat(0), rat(1)};  // t^2 + 1
  CHECK(isolate_roots(none, AlgebraicNumber(rat(-5)), AlgebraicNumber(rat(5))).empty());

  Rng rng(3);
  for (int trial = 0; trial < 25; ++trial) {
    std::vector<Rational> roots_in;
    Poly p = Poly::constant(rat(1));
    for (int i = 0; i < 3; ++i) {
      Rational r = testsupport::rand_rational(rng, 3, 3);
      roots_in.push_back(r);
      p = p * Poly::linear_root(r);
    }
    std::sort(roots_in.begin(), roots_in.end());
    roots_in.erase(std::unique(roots_in.begin(), roots_in.end()), roots_in.end());
    auto found = isolate_roots(p, AlgebraicNumber(rat(-10)), AlgebraicNumber(rat(10)));
    REQUIRE(found.size() == roots_in.size());
    for (size_t i = 0; i < found.size(); ++i) {
      REQUIRE(found[i].is_rational());
      CHECK(found[i].rational_value() == roots_in[i]);
    }
  }
}

TEST_CASE("isolating a quadratic irrational") {
  // sqrt(2)/2 as the positive root of 2t^2 - 1
  Poly p{rat(-1), rat(0), rat(2)};
  auto roots = isolate_roots(p, AlgebraicNumber(rat(0)), AlgebraicNumber(rat(1)));
  REQUIRE(roots.size() == 1);
  const auto& alpha = roots[0];
  CHECK_FALSE(alpha.is_rational());
  CHECK(sign_at(p, alpha) == 0);
  CHECK(AlgebraicNumber::compare(AlgebraicNumber(rat(1, 2)), alpha) < 0);
  CHECK(alpha == alpha);
  CHECK(AlgebraicNumber::compare(AlgebraicNumber(rat(-1, 2)), AlgebraicNumber(rat(1, 2))) < 0);
  // the two roots of the same quadratic are distinguished
  auto both = isolate_roots(p, AlgebraicNumber(rat(-1)), AlgebraicNumber(rat(1)));
  REQUIRE(both.size() == 2);
  CHECK(both[0] < both[1]);
  CHECK(both[0] == -both[1]);
}

TEST_CASE("algebraic comparison is a total order on random triples") {
  Rng rng(5);
  auto random_alg = [&](Rng& rng) -> AlgebraicNumber {
    if (testsupport::rand_int(rng, 0, 1)) {
      return AlgebraicNumber(testsupport::rand_rational(rng, 6, 4));
    }
    // r + sqrt(s): root of (t - r)^2 - s
    Rational r = testsupport::rand_rational(rng, 3, 2);
    Rational s = abs_q(testsupport::rand_rational(rng, 5, 3)) + rat(1, 9);
    Poly def = Poly::linear_root(r) * Poly::linear_root(r) - Poly::constant(s);
    Rational width = s + 1;
    auto roots = isolate_roots(def, AlgebraicNumber(r), AlgebraicNumber(r + width));
    REQUIRE(roots.size() == 1);
    return roots[0];
  };
  for (int trial = 0; trial < 60; ++trial) {
    AlgebraicNumber a = random_alg(rng), b = random_alg(rng), c = random_alg(rng);
    int ab = AlgebraicNumber::compare(a, b);
    int ba = AlgebraicNumber::compare(b, a);
    CHECK(ab == -ba);
    if (ab <= 0 && AlgebraicNumber::compare(b, c) <= 0)
      CHECK(AlgebraicNumber::compare(a, c) <= 0);
    CHECK(AlgebraicNumber::compare(a, a) == 0);
  }
}

TEST_CASE("simplex solves small programs") {
  // min x subject to x >= 3
  auto r = solve_lp(1, {rat(1)}, {ge({rat(1)}, rat(3))});
  REQUIRE(r.status == LpStatus::Optimal);
  CHECK(r.x == QVector{rat(3)});
  CHECK(r.objective == rat(3));

  // min -x - y subject to x + y <= 1 (as -x - y >= -1), x, y >= 0
  auto r2 = solve_lp(2, {rat(-1), rat(-1)},
                     {ge({rat(-1), rat(-1)}, rat(-1)), ge({rat(1), rat(0)}, rat(0)),
                      ge({rat(0), rat(1)}, rat(0))});
  REQUIRE(r2.status == LpStatus::Optimal);
  CHECK(r2.objective == rat(-1));

  // infeasible: x >= 1 and -x >= 0
  auto r3 = lp_feasible(1, {ge({rat(1)}, rat(1)), ge({rat(-1)}, rat(0))});
  REQUIRE(r3.status == LpStatus::Infeasible);
  CHECK(verify_farkas(1, {ge({rat(1)}, rat(1)), ge({rat(-1)}, rat(0))}, r3.farkas));

  // unbounded: min x with x <= 0
  auto r4 = solve_lp(1, {rat(1)}, {ge({rat(-1)}, rat(0))});
  CHECK(r4.status == LpStatus::Unbounded);

  // equality constraints and a degenerate redundant row
  auto r5 = solve_lp(2, {rat(0), rat(1)},
                     {eq({rat(1), rat(1)}, rat(2)), eq({rat(2), rat(2)}, rat(4)),
                      ge({rat(0), rat(1)}, rat(-5))});
  REQUIRE(r5.status == LpStatus::Optimal);
  CHECK(r5.objective == rat(-5));
  CHECK(r5.x[0] + r5.x[1] == rat(2));
}

TEST_CASE("simplex feasibility agrees with farkas verification on random systems") {
  Rng rng(17);
  for (int trial = 0; trial < 60; ++trial) {
    int n = int(testsupport::rand_int(rng, 1, 3));
    std::vector<LinConstraint> cons;
    int m = int(testsupport::rand_int(rng, 1, 5));
    for (int i = 0; i < m; ++i) {
      QVector a = testsupport::rand_vector(rng, n);
      Rational b = testsupport::rand_rational(rng);
      cons.push_back(testsupport::rand_int(rng, 0, 3) == 0 ? eq(a, b) : ge(a, b));
    }
    auto r = lp_feasible(n, cons);
    if (r.status == LpStatus::Optimal) {
      for (const auto& con : cons) {
        Rational lhs = dot(con.a, r.x);
        if (con.rel == Rel::Eq) CHECK(lhs == con.b);
        else CHECK(lhs >= con.b);
      }
    } else {
      REQUIRE(r.status == LpStatus::Infeasible);
      CHECK(verify_farkas(n, cons, r.farkas));
    }
  }
}

#include <cmath>
#include <map>
#include <random>

#include "doctest.h"
#include "lmriv/polynomial.hpp"

using namespace lmriv;

namespace {

bool contains(const RootInterval& iv, const Rational& x) { return iv.lo <= x && x <= iv.hi; }

IntPoly random_poly(std::mt19937& rng, int degree) {
  std::uniform_int_distribution<long> coeff(-9, 9);
  std::vector<Integer> c;
  for (int k = 0; k <= degree; ++k) c.emplace_back(coeff(rng));
  if (c.back() == 0) c.back() = 1;
  return IntPoly(c);
}

}  // namespace

TEST_CASE("multiply") {
  CHECK(multiply(IntPoly{-1, 1}, IntPoly{1, 1}) == IntPoly{-1, 0, 1});
  CHECK(multiply(IntPoly{0, -2, 1}, IntPoly{1}) == IntPoly{0, -2, 1});
  const IntPoly x_minus_2{-2, 1};
  CHECK(multiply(multiply(x_minus_2, x_minus_2), x_minus_2) == IntPoly{-8, 12, -6, 1});
  CHECK(multiply(IntPoly{}, x_minus_2).is_zero());
  CHECK((IntPoly{1, 2} * IntPoly{3, 4, 5}).degree() == 3);
}

TEST_CASE("exact_divide") {
  CHECK(exact_divide(IntPoly{0, -2, 0, 1}, IntPoly::x_power(1)) == IntPoly{-2, 0, 1});
  CHECK(exact_divide(IntPoly{-1, 0, 1}, IntPoly{-1, 1}) == IntPoly{1, 1});
  CHECK(exact_divide(IntPoly{0, 3, -4, 1}, IntPoly::x_power(1)) == IntPoly{3, -4, 1});
  CHECK_THROWS_AS(exact_divide(IntPoly{1, 0, 1}, IntPoly{-1, 1}), NotDivisibleError);
  CHECK_THROWS_AS(exact_divide(IntPoly{1, 1}, IntPoly{}), NotDivisibleError);
  CHECK_THROWS_AS(exact_divide(IntPoly{1, 1}, IntPoly{0, 0, 1}), NotDivisibleError);
}

TEST_CASE("multiply/exact_divide round trip") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const IntPoly p = random_poly(rng, trial % 6);
    const IntPoly q = random_poly(rng, 1 + trial % 4).primitive_part();
    CHECK(exact_divide(p * q, q) == p);
  }
}

TEST_CASE("shift_argument") {
  CHECK(shift_argument(IntPoly{0, 0, 1}, 1) == IntPoly{1, -2, 1});
  CHECK(shift_argument(IntPoly{4, -5, 1}, 1) == IntPoly{10, -7, 1});
  const IntPoly p{3, -1, 4, 1, -5};
  CHECK(shift_argument(p, 0) == p);
  std::mt19937 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const IntPoly q = random_poly(rng, trial % 8);
    const long t = static_cast<long>(rng() % 11) - 5;
    const IntPoly shifted = shift_argument(q, t);
    CHECK(shift_argument(shifted, -t) == q);
    // Pointwise: shifted(x) = q(x - t).
    CHECK(shifted.evaluate(Integer(3)) == q.evaluate(Integer(3 - t)));
  }
}

TEST_CASE("substitute_square and even_part_root") {
  const IntPoly p{-2, 9, -6, 1};
  CHECK(even_part_root(substitute_square(p)) == p);
  CHECK_THROWS_AS(even_part_root(IntPoly{0, 1, 1}), std::domain_error);
}

TEST_CASE("gcd and square-free part") {
  const IntPoly a = IntPoly::from_roots({1, 2, 2, 3});
  const IntPoly b = IntPoly::from_roots({2, 3, 5});
  CHECK(gcd(a, b) == IntPoly::from_roots({2, 3}));
  CHECK(gcd(a * Integer(6), b * Integer(-4)) == IntPoly::from_roots({2, 3}));
  CHECK(squarefree_part(a) == IntPoly::from_roots({1, 2, 3}));
  CHECK(squarefree_part(IntPoly{0, 0, 0, 2}) == IntPoly{0, 1});
  CHECK(gcd(IntPoly{1, 0, 1}, IntPoly{-1, 1}) == IntPoly{1});
}

TEST_CASE("isolate_real_roots: Laplacian matching polynomial of the triangle") {
  // (x - 2)((x - 2)^2 - 3): roots 2 - sqrt 3, 2, 2 + sqrt 3.
  RootSet roots = isolate_real_roots(IntPoly{-2, 9, -6, 1});
  REQUIRE(roots.roots().size() == 3);
  CHECK(roots.total_multiplicity() == 3);
  CHECK(roots.real_rooted());
  for (const auto& r : roots.roots()) CHECK(r.multiplicity == 1);
  CHECK(contains(roots.roots()[1].interval, 2));
  for (const auto& r : roots.roots()) CHECK(r.interval.lo >= 0);
  roots.refine(Rational(1, 1000000) / 1000000);
  CHECK(roots.roots()[0].interval.approx() == doctest::Approx(2 + std::sqrt(3.0)).epsilon(1e-12));
  CHECK(roots.roots()[2].interval.approx() == doctest::Approx(2 - std::sqrt(3.0)).epsilon(1e-11));
}

TEST_CASE("isolate_real_roots: repeated roots of the star K_{1,3}") {
  const RootSet roots = isolate_real_roots(IntPoly{0, -4, 9, -6, 1});
  REQUIRE(roots.roots().size() == 3);
  CHECK(contains(roots.roots()[0].interval, 4));
  CHECK(roots.roots()[0].multiplicity == 1);
  CHECK(contains(roots.roots()[1].interval, 1));
  CHECK(roots.roots()[1].multiplicity == 2);
  CHECK(roots.roots()[2].interval.exact());
  CHECK(roots.roots()[2].interval.lo == 0);
  CHECK(roots.total_multiplicity() == 4);
}

TEST_CASE("isolate_real_roots: no real roots") {
  const RootSet roots = isolate_real_roots(IntPoly{1, 0, 1});
  CHECK(roots.roots().empty());
  CHECK(roots.total_multiplicity() == 0);
  CHECK(!roots.real_rooted());
}

TEST_CASE("isolate_real_roots recovers planted integer roots with multiplicity") {
  std::mt19937 rng(3);
  std::uniform_int_distribution<long> pick(-6, 6);
  for (int trial = 0; trial < 150; ++trial) {
    std::map<long, int> planted;
    IntPoly p{static_cast<long>(1 + trial % 3)};
    const int count = 1 + trial % 6;
    for (int k = 0; k < count; ++k) {
      const long r = pick(rng);
      ++planted[r];
      p *= IntPoly::linear(r);
    }
    p *= IntPoly{1, 0, 1};  // a complex pair must not be counted
    const RootSet roots = isolate_real_roots(p);
    REQUIRE(roots.roots().size() == planted.size());
    auto it = planted.rbegin();
    for (const auto& r : roots.roots()) {
      CHECK(contains(r.interval, it->first));
      CHECK(r.multiplicity == it->second);
      ++it;
    }
    CHECK(roots.total_multiplicity() == count);
  }
}

TEST_CASE("Sturm counts match isolated intervals") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const IntPoly sf = squarefree_part(random_poly(rng, 2 + trial % 6));
    if (sf.degree() <= 0) continue;
    const SturmSequence sturm(sf);
    const RootSet roots = isolate_real_roots(sf);
    CHECK(sturm.count_real() == static_cast<int>(roots.roots().size()));
    const Rational a(static_cast<long>(rng() % 9) - 4, 3);
    const Rational b = a + Rational(static_cast<long>(1 + rng() % 9), 2);
    if (sf.sign_at(a) == 0 || sf.sign_at(b) == 0) continue;
    int inside = 0;
    for (const auto& r : roots.roots()) {
      RootInterval iv = r.interval;
      const auto straddles = [&](const Rational& x) { return iv.lo < x && x < iv.hi; };
      while (!iv.exact() && (straddles(a) || straddles(b))) {
        iv = refine_root(sf, iv, iv.width() / 2);
      }
      if (a <= iv.lo && iv.hi <= b) ++inside;
    }
    CHECK(sturm.count(a, b) == inside);
  }
}

TEST_CASE("refine_root") {
  const IntPoly sqrt2{-2, 0, 1};
  const RootInterval iv = refine_root(sqrt2, {1, 2}, Rational(1, 1024));
  CHECK(iv.width() <= Rational(1, 1024));
  CHECK(iv.lo * iv.lo <= 2);
  CHECK(iv.hi * iv.hi >= 2);

  const RootInterval three = refine_root(IntPoly{-3, 1}, {2, 4}, Rational(1, 2));
  CHECK(contains(three, 3));
  CHECK(three.width() <= Rational(1, 2));

  const IntPoly c3{-2, 9, -6, 1};
  const RootInterval top = refine_root(c3, {3, 4}, parse_rational("1e-12"));
  CHECK(top.width() <= parse_rational("1e-12"));
  // 2 + sqrt 3 = 3.7320508075688772935...
  CHECK(top.lo <= parse_rational("3.7320508075688772935"));
  CHECK(top.hi >= parse_rational("3.7320508075688772935"));
  CHECK(to_decimal(top.midpoint(), 9) == "3.732050808");

  CHECK_THROWS_AS(refine_root(sqrt2, {1, 2}, 0), std::domain_error);
  CHECK_THROWS_AS(refine_root(sqrt2, {2, 3}, Rational(1, 8)), std::domain_error);
}

TEST_CASE("joint root table decides coincidences exactly") {
  const IntPoly p = IntPoly::from_roots({0, 1, 3});
  const IntPoly q{-2, 9, -6, 1};  // 2 - sqrt 3, 2, 2 + sqrt 3
  const JointRootTable t = joint_roots(p, q);
  REQUIRE(t.roots.size() == 6);
  int total_p = 0, total_q = 0;
  for (const auto& r : t.roots) {
    CHECK(r.multiplicity_p + r.multiplicity_q == 1);
    total_p += r.multiplicity_p;
    total_q += r.multiplicity_q;
  }
  CHECK(total_p == 3);
  CHECK(total_q == 3);

  const JointRootTable shared = joint_roots(IntPoly::from_roots({1, 1, 4}), IntPoly::from_roots({1, 4, 4}));
  REQUIRE(shared.roots.size() == 2);
  CHECK(shared.roots[0].multiplicity_p == 1);
  CHECK(shared.roots[0].multiplicity_q == 2);
  CHECK(shared.roots[1].multiplicity_p == 2);
  CHECK(shared.roots[1].multiplicity_q == 1);
}

TEST_CASE("decimal rendering and parsing") {
  CHECK(to_decimal(3) == "3.0");
  CHECK(to_decimal(Rational(1, 4)) == "0.25");
  CHECK(to_decimal(Rational(-1, 3)) == "-0.333333333");
  CHECK(to_decimal(Rational(2, 3), 3) == "0.667");
  CHECK(parse_rational("1e-12") == Rational(Integer(1), Integer("1000000000000")));
  CHECK(parse_rational("0.25") == Rational(1, 4));
  CHECK(parse_rational("3/6") == Rational(1, 2));
  CHECK(parse_rational("-2.5E1") == -25);
  CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1e"), std::invalid_argument);
}

TEST_CASE("cauchy bound encloses every root") {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    const IntPoly p = random_poly(rng, 1 + trial % 7);
    const Rational bound = cauchy_bound(p);
    RootSet roots = isolate_real_roots(p);
    roots.refine(Rational(1, 1 << 16));
    for (const auto& r : roots.roots()) {
      CHECK(r.interval.midpoint() > -bound);
      CHECK(r.interval.midpoint() < bound);
    }
  }
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <limits>
#include <random>

#include "knotminer/error.hpp"
#include "knotminer/laurent.hpp"

using namespace knotminer;
using Terms = LaurentPoly::Terms;

TEST_CASE("laurent_mul basics") {
  const LaurentPoly p(Terms{{-1, -1}, {3, -1}, {5, 2}});
  CHECK(laurent_mul(LaurentPoly(1), p) == p);
  CHECK(laurent_mul(LaurentPoly::monomial(1, 1), LaurentPoly::monomial(1, -1)) == LaurentPoly(1));
  CHECK(laurent_mul(p, LaurentPoly{}).is_zero());
  CHECK(laurent_mul(LaurentPoly(Terms{{0, 1}, {1, 1}}), LaurentPoly(Terms{{0, 1}, {1, -1}})) ==
        LaurentPoly(Terms{{0, 1}, {2, -1}}));
}

TEST_CASE("zero coefficients are never stored") {
  LaurentPoly p(Terms{{0, 0}, {2, 3}});
  CHECK(p.terms().size() == 1);
  p += LaurentPoly::monomial(-3, 2);
  CHECK(p.is_zero());
  CHECK(p == LaurentPoly{});
}

TEST_CASE("overflow is reported") {
  const auto big = std::numeric_limits<LaurentPoly::Coeff>::max();
  CHECK_THROWS_AS(LaurentPoly(big) * LaurentPoly(2), OverflowError);
  LaurentPoly p(big);
  CHECK_THROWS_AS(p += LaurentPoly(1), OverflowError);
  CHECK_THROWS_AS(-LaurentPoly(std::numeric_limits<LaurentPoly::Coeff>::min()), OverflowError);
}

TEST_CASE("text form") {
  CHECK(LaurentPoly(1).to_string() == "1");
  CHECK(LaurentPoly{}.to_string() == "0");
  CHECK(LaurentPoly(Terms{{1, 1}, {3, 1}, {4, -1}}).to_string() == "t + t^3 - t^4");
  CHECK(LaurentPoly(Terms{{-2, -1}, {0, 3}, {1, 2}}).to_string("A") == "-A^-2 + 3 + 2A");
}

TEST_CASE("inversion, evaluation and powers") {
  const LaurentPoly v(Terms{{1, 1}, {3, 1}, {4, -1}});
  CHECK(v.inverted() == LaurentPoly(Terms{{-1, 1}, {-3, 1}, {-4, -1}}));
  CHECK(v.evaluate_at_minus_one() == -3);
  CHECK(v.pow(0) == LaurentPoly(1));
  CHECK(v.pow(3) == v * v * v);
  CHECK(v.span() == 3);
}

TEST_CASE("exact division") {
  const LaurentPoly a(Terms{{1, 1}, {3, 1}, {4, -1}});
  const LaurentPoly b(Terms{{-2, 1}, {-1, -1}, {0, 1}, {1, -1}, {2, 1}});
  CHECK(divide_exact(a * b, a) == b);
  CHECK(divide_exact(a * b, b) == a);
  CHECK(divide_exact(a * a * b, a * a) == b);
  CHECK_FALSE(divide_exact(b, a).has_value());
  CHECK_FALSE(divide_exact(a + LaurentPoly(1), a).has_value());
  CHECK(divide_exact(LaurentPoly{}, a) == LaurentPoly{});
  CHECK_THROWS_AS(divide_exact(a, LaurentPoly{}), RangeError);
}

TEST_CASE("product then exact division recovers the factor on random polynomials") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    Terms pt, qt;
    for (int i = 0; i < 5; ++i) pt[static_cast<int>(rng() % 9) - 4] = static_cast<int>(rng() % 7) - 3;
    for (int i = 0; i < 4; ++i) qt[static_cast<int>(rng() % 7) - 3] = static_cast<int>(rng() % 5) - 2;
    const LaurentPoly p(pt), q(qt);
    if (q.is_zero()) continue;
    CHECK(divide_exact(p * q, q) == p);
    CHECK(p * q == q * p);
  }
}

#include <doctest.h>

#include <cmath>
#include <functional>
#include <vector>

#include "conrad/radii.hpp"

using namespace conrad;

namespace {

// Independent root oracle for the tests: coarse scan for the first sign
// change over plain double evaluation, then bisection. Deliberately avoids
// least_root_in and RPoly so the two routes share no code.
double scan_bisect(const std::vector<double>& ascending, double lo, double hi) {
  const auto eval = [&ascending](double r) {
    double acc = 0.0;
    for (auto it = ascending.rbegin(); it != ascending.rend(); ++it) acc = acc * r + *it;
    return acc;
  };
  const int steps = 10000;
  double prev = lo + 1e-9;
  double fprev = eval(prev);
  for (int i = 1; i <= steps; ++i) {
    const double x = lo + 1e-9 + (hi - lo - 2e-9) * i / steps;
    const double fx = eval(x);
    if ((fprev < 0.0) != (fx < 0.0)) {
      double a = prev, b = x, fa = fprev;
      for (int iter = 0; iter < 80; ++iter) {
        const double m = 0.5 * (a + b);
        const double fm = eval(m);
        if ((fa < 0.0) != (fm < 0.0)) {
          b = m;
        } else {
          a = m;
          fa = fm;
        }
      }
      return 0.5 * (a + b);
    }
    prev = x;
    fprev = fx;
  }
  return -1.0;  // not reached in these tests
}

}  // namespace

TEST_CASE("least root of a linear polynomial") {
  CHECK(std::abs(least_root_in(RPoly{-0.5, 1.0}, 0.0, 1.0) - 0.5) <= 1e-12);
}

TEST_CASE("least root picks the first of several roots") {
  // (r - 0.2)(r - 0.6) = 0.12 - 0.8 r + r^2
  CHECK(std::abs(least_root_in(RPoly{0.12, -0.8, 1.0}, 0.0, 1.0) - 0.2) <= 1e-11);
}

TEST_CASE("starlike-half cubic root at A=2 is 2 - sqrt(3)") {
  const RPoly cubic = polynomial_for(ClassSpec::starlike_half(2.0));
  CHECK(cubic == RPoly{-3.0, 13.0, -7.0, 1.0});
  CHECK(std::abs(least_root_in(cubic, 0.0, 1.0) - (2.0 - std::sqrt(3.0))) <= 1e-9);
}

TEST_CASE("u0 cubic root at lambda=1, A=2 is 1/7") {
  const RPoly cubic = polynomial_for(ClassSpec::u0(2.0, 1.0));
  CHECK(cubic == RPoly{1.0, -5.0, -13.0, -7.0});
  CHECK(std::abs(least_root_in(cubic, 0.0, 1.0) - 1.0 / 7.0) <= 1e-9);
}

TEST_CASE("missing sign change reports endpoint values") {
  try {
    least_root_in(RPoly{1.0, 0.0, 1.0}, 0.0, 1.0);
    FAIL("expected NoRootError");
  } catch (const NoRootError& e) {
    CHECK(e.lo == 0.0);
    CHECK(e.hi == 1.0);
    CHECK(e.f_lo > 0.0);
    CHECK(e.f_hi > 0.0);
  }
  CHECK_THROWS_AS(least_root_in(RPoly{1.0}, 1.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(least_root_in(RPoly{1.0}, 0.0, 1.0, -1.0), std::invalid_argument);
}

TEST_CASE("radius polynomial endpoint values") {
  const RPoly quartic = polynomial_for(ClassSpec::pprime_fixed(2.0, 0.5));
  CHECK(std::abs(quartic(0.0) - 0.2) <= 1e-15);         // (A-1)/(A+3)
  CHECK(std::abs(quartic(1.0) - (-2.4)) <= 1e-14);      // -8(a+1)/(A+3)

  const RPoly cubic = polynomial_for(ClassSpec::starlike_half(2.0));
  CHECK(cubic(0.0) == -3.0);
  CHECK(cubic(1.0) == 4.0);

  const RPoly u0_cubic = polynomial_for(ClassSpec::u0(2.0, 0.5));
  CHECK(u0_cubic(0.0) == 1.0);
  CHECK(std::abs(u0_cubic(1.0) - (-14.0)) <= 1e-14);    // -20 lambda - 4

  const RPoly quintic = polynomial_for(ClassSpec::vp(1.0, 0.5));
  CHECK(quintic(0.0) == 0.5);
  CHECK(std::abs(quintic(0.5) - (-0.46875)) <= 1e-15);  // -4 lambda p^3 (1+p^2)(1-lambda p^2)

  const RPoly convex = polynomial_for(ClassSpec::vp_convex(1.0, 0.5));
  CHECK(convex(0.0) == 0.25);
  CHECK(std::abs(convex(0.5) - (-0.375)) <= 1e-15);     // -8 lambda p^4 (1-lambda p^2)
}

TEST_CASE("closed-form kinds have no radius polynomial") {
  CHECK_THROWS_AS(polynomial_for(ClassSpec::pprime(1.5)), std::invalid_argument);
  CHECK_THROWS_AS(polynomial_for(ClassSpec::lif(1.5, 2.0)), std::invalid_argument);
}

TEST_CASE("closed-form radii") {
  const RadiusResult pp = radius_for(ClassSpec::pprime(2.0));
  CHECK(pp.method == RadiusMethod::ClosedForm);
  CHECK(std::abs(pp.value - (1.0 - 2.0 / std::sqrt(5.0))) <= 1e-15);
  CHECK(std::abs(pp.value - 0.1055728090000841) <= 1e-12);
  CHECK(!pp.r1);
  CHECK(!pp.poly);

  const RadiusResult lif = radius_for(ClassSpec::lif(2.0, 2.0));
  CHECK(std::abs(lif.value - (7.0 - 4.0 * std::sqrt(3.0))) <= 1e-12);
  CHECK(std::abs(lif.value - 0.0717967697244909) <= 1e-12);
}

TEST_CASE("u0 radius takes the smaller component") {
  const RadiusResult r = radius_for(ClassSpec::u0(2.0, 1.0));
  CHECK(r.method == RadiusMethod::MinOfTwo);
  REQUIRE(r.r1);
  REQUIRE(r.r2);
  CHECK(*r.r1 == 1.0);  // the (1-lambda) factor vanishes exactly
  CHECK(std::abs(*r.r2 - 1.0 / 7.0) <= 1e-9);
  CHECK(r.value == *r.r2);
  REQUIRE(r.bracket);
  CHECK(r.bracket->first == 0.0);
  CHECK(r.bracket->second == 1.0);
}

TEST_CASE("vp radius agrees with an independent bisection oracle") {
  const RadiusResult r = radius_for(ClassSpec::vp(1.0, 0.5));
  const double oracle = scan_bisect({0.5, -2.0, -1.625, 3.25, 0.375, 0.25}, 0.0, 0.5);
  CHECK(std::abs(r.value - oracle) <= 1e-9);
  CHECK(std::abs(r.value - 0.2277) <= 1e-3);
  REQUIRE(r.r1);
  CHECK(*r.r1 == 1.0);
  CHECK(r.value == *r.r2);
}

TEST_CASE("vp-convex radius agrees with an independent bisection oracle") {
  const RadiusResult r = radius_for(ClassSpec::vp_convex(1.0, 0.5));
  const double oracle = scan_bisect({0.25, -1.375, -0.25, 0.125, 1.5, 0.5}, 0.0, 0.5);
  CHECK(std::abs(r.value - oracle) <= 1e-9);
  CHECK(std::abs(r.value - 0.1777) <= 1e-3);
}

TEST_CASE("bracket signs hold across the parameter grid") {
  for (int i = 1; i <= 20; ++i) {
    const double A = 1.0 + 0.05 * i;

    for (int j = 0; j < 20; ++j) {
      const double a = static_cast<double>(j) / 19.0;
      const RPoly q = polynomial_for(ClassSpec::pprime_fixed(A, a));
      CHECK(q(0.0) > 0.0);
      CHECK(q(1.0) < 0.0);
    }

    const RPoly u = polynomial_for(ClassSpec::starlike_half(A));
    CHECK(u(0.0) < 0.0);
    CHECK(u(1.0) > 0.0);

    for (int j = 1; j <= 20; ++j) {
      const double lambda = static_cast<double>(j) / 20.0;
      const RPoly c = polynomial_for(ClassSpec::u0(A, lambda));
      CHECK(c(0.0) > 0.0);
      CHECK(c(1.0) < 0.0);
    }
  }

  for (int i = 1; i <= 20; ++i) {
    for (int j = 1; j <= 20; ++j) {
      const double lambda = static_cast<double>(i) / 20.0;
      const double p = static_cast<double>(j) / 21.0;
      const RPoly phi = polynomial_for(ClassSpec::vp(lambda, p));
      CHECK(phi(0.0) > 0.0);
      CHECK(phi(p) < 0.0);
      const RPoly psi = polynomial_for(ClassSpec::vp_convex(lambda, p));
      CHECK(psi(0.0) > 0.0);
      CHECK(psi(p) < 0.0);
    }
  }
}

TEST_CASE("quartic at a=1 reduces to the closed pprime radius") {
  // The quartic factors as (r+1)^2 (r^2 - 2r + (A-1)/(A+3)) at a = 1.
  for (int i = 1; i <= 20; ++i) {
    const double A = 1.0 + 0.05 * i;
    const double fixed = radius_for(ClassSpec::pprime_fixed(A, 1.0)).value;
    const double closed = radius_for(ClassSpec::pprime(A)).value;
    CHECK(std::abs(fixed - closed) <= 1e-10);
  }
}

TEST_CASE("lif radius is the smaller root of its quadratic") {
  for (int i = 1; i <= 20; ++i) {
    for (double alpha : {1.0, 1.5, 2.0, 3.0, 5.0}) {
      const double A = 1.0 + 0.05 * i;
      const double b = (A + 1.0 + 2.0 * alpha) / (A - 1.0);
      const double smaller = b - std::sqrt(b * b - 1.0);
      CHECK(std::abs(radius_for(ClassSpec::lif(A, alpha)).value - smaller) <= 1e-12);
    }
  }
}

TEST_CASE("lif order-2 closed form") {
  for (int i = 1; i <= 20; ++i) {
    const double A = 1.0 + 0.05 * i;
    const double order2 = (A + 5.0 - std::sqrt(12.0 * (A + 2.0))) / (A - 1.0);
    CHECK(std::abs(radius_for(ClassSpec::lif(A, 2.0)).value - order2) <= 1e-12);
  }
  // Spot value at A = 1.5: (6.5 - sqrt(42)) / 0.5.
  CHECK(std::abs(radius_for(ClassSpec::lif(1.5, 2.0)).value - 0.0385186031842795) <= 1e-12);
}

TEST_CASE("radius monotonicity in the parameters") {
  double prev = 0.0;
  for (int i = 1; i <= 20; ++i) {
    const double value = radius_for(ClassSpec::pprime(1.0 + 0.05 * i)).value;
    CHECK(value > prev);
    prev = value;
  }
  prev = 1.0;
  for (double alpha : {1.0, 1.5, 2.0, 3.0, 5.0}) {
    const double value = radius_for(ClassSpec::lif(2.0, alpha)).value;
    CHECK(value < prev);
    prev = value;
  }
}

TEST_CASE("all radii lie in their intervals") {
  for (int i = 1; i <= 10; ++i) {
    const double A = 1.0 + 0.1 * i;
    for (const ClassSpec& spec :
         {ClassSpec::pprime(A), ClassSpec::pprime_fixed(A, 0.3), ClassSpec::lif(A, 2.0),
          ClassSpec::starlike_half(A), ClassSpec::u0(A, 0.6)}) {
      const double v = radius_for(spec).value;
      CHECK(v > 0.0);
      CHECK(v < 1.0);
    }
  }
  for (double lambda : {0.25, 0.5, 1.0}) {
    for (double p : {0.2, 0.5, 0.8}) {
      for (const ClassSpec& spec : {ClassSpec::vp(lambda, p), ClassSpec::vp_convex(lambda, p)}) {
        const double v = radius_for(spec).value;
        CHECK(v > 0.0);
        CHECK(v <= p);
      }
    }
  }
}

TEST_CASE("least-root results satisfy the result invariants") {
  for (const ClassSpec& spec :
       {ClassSpec::pprime_fixed(1.8, 0.4), ClassSpec::starlike_half(1.7),
        ClassSpec::u0(1.9, 0.8), ClassSpec::vp(0.9, 0.6), ClassSpec::vp_convex(0.9, 0.6)}) {
    const RadiusResult r = radius_for(spec);
    REQUIRE(r.poly);
    REQUIRE(r.bracket);
    if (r.method == RadiusMethod::MinOfTwo && r.value != *r.r2) continue;  // closed branch won
    CHECK(std::abs((*r.poly)(r.value)) <= 1e-10);
    // No sign change strictly before the root.
    const double first = (*r.poly)(r.bracket->first + 1e-9);
    for (int i = 1; i <= 1000; ++i) {
      const double x = r.bracket->first + 1e-9 +
                       (r.value - 2e-9 - r.bracket->first) * i / 1000.0;
      CHECK(((*r.poly)(x) < 0.0) == (first < 0.0));
    }
  }
}

TEST_CASE("spec validation rejects out-of-range parameters") {
  CHECK_THROWS_AS(ClassSpec::pprime(1.0), std::invalid_argument);
  CHECK_THROWS_AS(ClassSpec::pprime(2.5), std::invalid_argument);
  CHECK_THROWS_AS(ClassSpec::pprime_fixed(1.5, -0.1), std::invalid_argument);
  CHECK_THROWS_AS(ClassSpec::pprime_fixed(1.5, 1.1), std::invalid_argument);
  CHECK_THROWS_AS(ClassSpec::lif(1.5, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(ClassSpec::u0(1.5, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(ClassSpec::u0(1.5, 1.5), std::invalid_argument);
  CHECK_THROWS_AS(ClassSpec::vp(0.5, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(ClassSpec::vp(0.5, 1.0), std::invalid_argument);
}

#include <doctest.h>

#include <complex>
#include <random>

#include "conrad/polynomial.hpp"

using namespace conrad;
using Complex = std::complex<double>;

namespace {

// Hand-rolled generator: engine output converted directly so draws are
// identical across standard libraries.
struct Rng {
  std::mt19937_64 gen;
  explicit Rng(std::uint64_t seed) : gen(seed) {}
  double unit() { return static_cast<double>(gen() >> 11) * 0x1.0p-53; }
  double sym() { return 2.0 * unit() - 1.0; }
  Complex c() { return {sym(), sym()}; }
  CPoly poly(int degree) {
    std::vector<Complex> coeffs(static_cast<std::size_t>(degree) + 1);
    for (auto& v : coeffs) v = c();
    return CPoly(std::move(coeffs));
  }
};

}  // namespace

TEST_CASE("horner evaluation matches hand-computed values") {
  const CPoly identity{0.0, 1.0};
  CHECK(std::abs(identity(Complex{0.3, 0.4}) - Complex{0.3, 0.4}) == 0.0);

  const CPoly square{1.0, 2.0, 1.0};  // (1+z)^2
  CHECK(std::abs(square(Complex{0.0, 1.0}) - Complex{0.0, 2.0}) < 1e-15);

  const CPoly parabola{0.5, 0.0, -0.25};
  CHECK(std::abs(parabola(Complex{0.2, 0.0}) - 0.49) < 1e-15);
}

TEST_CASE("the zero polynomial is empty and evaluates to zero") {
  const CPoly zero;
  CHECK(zero.degree() == -1);
  CHECK(zero.is_zero());
  CHECK(zero(Complex{0.7, -0.2}) == Complex{});
  CHECK(derivative(zero).degree() == -1);
}

TEST_CASE("derivative works term by term") {
  CHECK(derivative(CPoly{0.0, 0.0, 1.0}) == CPoly{0.0, 2.0});
  CHECK(derivative(CPoly{5.0}).degree() == -1);
  CHECK(derivative(CPoly{1.0, 1.0, 1.0, 1.0}) == CPoly{1.0, 2.0, 3.0});
}

TEST_CASE("antiderivative integrates from zero") {
  CHECK(antiderivative(CPoly{1.0}) == CPoly{0.0, 1.0});
  CHECK(antiderivative(CPoly{0.0, 2.0}) == CPoly{0.0, 0.0, 1.0});
  CHECK(antiderivative(CPoly{3.0, 0.0, 3.0}) == CPoly{0.0, 3.0, 0.0, 1.0});
}

TEST_CASE("derivative inverts antiderivative coefficient-wise") {
  Rng rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const CPoly p = rng.poly(1 + trial % 9);
    const CPoly back = derivative(antiderivative(p));
    REQUIRE(back.degree() == p.degree());
    for (int k = 0; k <= p.degree(); ++k) {
      const double scale = std::max(1.0, std::abs(p.coeff(k)));
      CHECK(std::abs(back.coeff(k) - p.coeff(k)) <= 1e-15 * scale);
    }
  }
}

TEST_CASE("products evaluate multiplicatively") {
  Rng rng(12);
  for (int trial = 0; trial < 50; ++trial) {
    const CPoly p = rng.poly(trial % 7);
    const CPoly q = rng.poly((trial + 3) % 7);
    const Complex z = 0.95 * rng.c();
    const Complex lhs = (p * q)(z);
    const Complex rhs = p(z) * q(z);
    CHECK(std::abs(lhs - rhs) <= 1e-12 * (1.0 + std::abs(rhs)));
  }
}

TEST_CASE("deflate recovers the linear cofactor") {
  Rng rng(13);
  for (int trial = 0; trial < 20; ++trial) {
    const CPoly q = rng.poly(1 + trial % 6);
    const Complex a = 0.8 * rng.c();
    const CPoly p = CPoly{-a, 1.0} * q;
    const CPoly back = deflate(p, a);
    REQUIRE(back.degree() == q.degree());
    for (int k = 0; k <= q.degree(); ++k)
      CHECK(std::abs(back.coeff(k) - q.coeff(k)) <= 1e-12);
  }
}

TEST_CASE("real polynomials evaluate at complex points") {
  const RPoly p{1.0, 0.0, 1.0};  // 1 + r^2
  const Complex v = p(Complex{0.0, 1.0});
  CHECK(std::abs(v) < 1e-15);  // 1 + i^2 = 0
}

TEST_CASE("coefficient access and shifting") {
  const CPoly p{1.0, 2.0};
  CHECK(p.coeff(-1) == Complex{});
  CHECK(p.coeff(5) == Complex{});
  CHECK(shift_up(p, 2) == CPoly{0.0, 0.0, 1.0, 2.0});
  CHECK(CPoly::monomial(3, 2.0) == CPoly{0.0, 0.0, 0.0, 2.0});
}

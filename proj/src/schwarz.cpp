#include "conrad/schwarz.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>
#include <vector>

namespace conrad {

namespace {

using Complex = std::complex<double>;

// Uniform double in [0,1) built from the raw engine output. Avoids
// std::uniform_real_distribution, whose output is not pinned down by the
// standard, so samples are reproducible across toolchains.
double next_unit(std::mt19937_64& gen) {
  return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

Complex draw_in_disc(std::mt19937_64& gen) {
  const double radius = std::sqrt(next_unit(gen));
  const double angle = 2.0 * std::numbers::pi * next_unit(gen);
  return std::polar(radius, angle);
}

void check_args(int degree, double headroom) {
  if (degree < 0 || degree > kMaxSampleDegree)
    throw std::invalid_argument("sample degree must lie in [0, 32]");
  if (!(headroom > 0.0 && headroom <= 1.0))
    throw std::invalid_argument("headroom must lie in (0, 1]");
}

// Rescale coeffs[first..] so that sum |c_k| over that tail equals target.
// Returns the achieved tail sum (0 when every draw is zero).
double rescale_tail(std::vector<Complex>& coeffs, std::size_t first, double target) {
  double raw = 0.0;
  for (std::size_t k = first; k < coeffs.size(); ++k) raw += std::abs(coeffs[k]);
  if (raw == 0.0) return 0.0;
  const double factor = target / raw;
  for (std::size_t k = first; k < coeffs.size(); ++k) coeffs[k] *= factor;
  return target;
}

}  // namespace

SchwarzCert sample_schwarz(std::uint64_t seed, int degree, bool vanish_at_zero,
                           double headroom) {
  check_args(degree, headroom);
  std::mt19937_64 gen(seed);
  std::vector<Complex> coeffs(static_cast<std::size_t>(degree) + 1);
  for (Complex& c : coeffs) c = draw_in_disc(gen);
  if (vanish_at_zero) coeffs[0] = Complex{};

  const double sum = rescale_tail(coeffs, vanish_at_zero ? 1 : 0, headroom);
  return SchwarzCert{CPoly(std::move(coeffs)), sum, vanish_at_zero};
}

SchwarzCert sample_schwarz_fixed_linear(std::uint64_t seed, int degree,
                                        double fixed_linear, double headroom) {
  check_args(degree, headroom);
  if (degree < 1) throw std::invalid_argument("fixed-linear sample needs degree >= 1");
  if (!(fixed_linear >= 0.0 && fixed_linear <= 1.0))
    throw std::invalid_argument("fixed linear coefficient must lie in [0,1]");

  std::mt19937_64 gen(seed);
  std::vector<Complex> coeffs(static_cast<std::size_t>(degree) + 1);
  for (Complex& c : coeffs) c = draw_in_disc(gen);
  coeffs[0] = Complex{};
  coeffs[1] = Complex{fixed_linear, 0.0};

  const double tail = rescale_tail(coeffs, 2, headroom * (1.0 - fixed_linear));
  return SchwarzCert{CPoly(std::move(coeffs)), fixed_linear + tail, true};
}

}  // namespace conrad

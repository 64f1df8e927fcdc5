#pragma once

#include <cstdint>

#include "conrad/polynomial.hpp"

namespace conrad {

inline constexpr int kMaxSampleDegree = 32;
inline constexpr double kDefaultHeadroom = 0.999;

/**
 * A polynomial self-map of the unit disc with a machine-checkable
 * certificate: sum_bound = sum_k |c_k|, and since |poly(z)| <= sum_k |c_k|
 * on the closed disc, sum_bound <= 1 proves sup-norm <= 1 with no search.
 *
 * vanishes_at_zero records that the constant coefficient is exactly zero,
 * which puts the map in the Schwarz-lemma normal form
 * |g'(z)| <= (1 - |g(z)|^2) / (1 - |z|^2).
 */
struct SchwarzCert {
  CPoly poly;
  double sum_bound = 0.0;
  bool vanishes_at_zero = false;
};

/**
 * Seeded deterministic sampler. Each coefficient is drawn uniformly from
 * the unit disc, then the whole vector is rescaled so the coefficient
 * l1-norm equals `headroom` exactly (the all-zero draw is left at zero).
 * Identical arguments always produce identical output; the stream depends
 * only on the arguments, never on global state.
 *
 * headroom must lie in (0,1]; the default keeps samples strictly interior
 * so denominators like 1 - g(z)^2 stay bounded away from zero.
 */
SchwarzCert sample_schwarz(std::uint64_t seed, int degree, bool vanish_at_zero,
                           double headroom = kDefaultHeadroom);

/**
 * Sampler with a pinned linear coefficient: c_0 = 0, c_1 = fixed_linear
 * (real, in [0,1]), and degrees >= 2 drawn then rescaled to l1-norm
 * headroom * (1 - fixed_linear). At fixed_linear = 1 the remaining budget
 * is zero and the sample degenerates to g(z) = z. Used for the class with
 * fixed second coefficient, where a = g'(0).
 */
SchwarzCert sample_schwarz_fixed_linear(std::uint64_t seed, int degree,
                                        double fixed_linear,
                                        double headroom = kDefaultHeadroom);

}  // namespace conrad

#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "conrad/class_spec.hpp"
#include "conrad/operators.hpp"

namespace conrad {

/// Points whose operator real part falls below -kPositivityTolerance count
/// as failures; the slack absorbs rounding right at positivity boundaries.
inline constexpr double kPositivityTolerance = 1e-9;

/**
 * Polar evaluation grid: radii r_j = r_max * j / n_radial (j = 1..n_radial)
 * times angles theta_k = 2 pi k / n_angular. margin_factor shrinks the
 * verified disc slightly inside the computed radius.
 */
struct GridSpec {
  int n_radial = 16;
  int n_angular = 256;
  double margin_factor = 0.999;

  void validate() const;
};

struct DiscMin {
  double min_real = 0.0;
  Complex argmin;
};

/**
 * Minimum of Re(eval(z)) over the polar grid of radius r_max, with its
 * location. Deterministic; evaluator domain errors propagate with the
 * offending point attached.
 */
DiscMin disc_min_real(const ComplexMap& eval, double r_max, const GridSpec& grid);

/**
 * Sign check of the extremal T on the negative real axis on both sides of
 * the computed radius R: passed() requires Re T(-(R-eps)) > 0 and
 * Re T(-(R+eps)) < 0. Only pprime and lif have closed extremals. Throws
 * std::invalid_argument when R + eps >= 1.
 */
struct SharpnessReport {
  double radius = 0.0;
  double eps = 0.0;
  double re_inside = 0.0;   // Re T at -(R - eps)
  double re_outside = 0.0;  // Re T at -(R + eps)

  bool passed() const { return re_inside > 0.0 && re_outside < 0.0; }
};

SharpnessReport sharpness_check(ClassKind kind, double A, double alpha, double eps);

/**
 * Outcome of a sampled positivity run. failures counts grid points whose
 * operator real part fell below -kPositivityTolerance; worst_margin is the
 * minimum observed real part and witness_* locate it (witness_seed is the
 * per-sample seed, seed ^ sample index).
 */
struct VerifyReport {
  ClassSpec spec;
  int samples = 0;
  int failures = 0;
  double worst_margin = 0.0;
  std::uint64_t witness_seed = 0;
  Complex witness_z;
  double radius_used = 0.0;
};

/**
 * Draws n_samples class members from seeded disc maps, evaluates the
 * class's operator (T for analytic kinds, P for vp, 1 + z f''/f' for
 * vp-convex) on the grid shrunk to margin_factor * radius, and aggregates
 * failures and the worst margin. The computed radii are valid lower
 * bounds, so the expected failure count is zero. lif has no constructive
 * sampler and is rejected.
 */
VerifyReport sample_verify(const ClassSpec& spec, int n_samples, std::uint64_t seed,
                           const GridSpec& grid, int degree);

/// One named algebraic identity, with the largest deviation seen.
struct IdentityCheck {
  std::string name;
  bool passed = false;
  double max_error = 0.0;
};

/**
 * The fixed algebraic identity suite: quartic reduction at a = 1, the
 * order-2 lif form, the lif quadratic-root identity, the exact
 * starlike-half and u0 roots, and the quintic endpoint values. Failures
 * are results, not errors.
 */
std::vector<IdentityCheck> identity_checks();

}  // namespace conrad

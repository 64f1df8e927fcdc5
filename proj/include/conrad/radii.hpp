#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

#include "conrad/class_spec.hpp"
#include "conrad/polynomial.hpp"

namespace conrad {

enum class RadiusMethod { ClosedForm, LeastRoot, MinOfTwo };

std::string_view method_name(RadiusMethod method);
std::optional<RadiusMethod> method_from_name(std::string_view name);

/**
 * A computed radius with its provenance. For least-root results `poly` and
 * `bracket` record the radius polynomial and search interval; min-of-two
 * results additionally carry the closed-form component r1 and the least
 * root r2, with value = min(r1, r2).
 */
struct RadiusResult {
  double value = 0.0;
  RadiusMethod method = RadiusMethod::ClosedForm;
  std::optional<double> r1;
  std::optional<double> r2;
  std::optional<RPoly> poly;
  std::optional<std::pair<double, double>> bracket;
};

/// Thrown when the scan finds no sign change; carries the scanned endpoint
/// values for diagnosis.
class NoRootError : public std::runtime_error {
 public:
  NoRootError(double lo, double hi, double f_lo, double f_hi);
  double lo, hi, f_lo, f_hi;
};

/**
 * Least root of `poly` in (lo, hi): scans 4096 equal subintervals of
 * [lo+eps, hi-eps] for the first sign change, then bisects that bracket
 * down to width <= tol and returns the midpoint. The scan resolution is
 * ample for the low-degree radius polynomials handled here. Throws
 * NoRootError when no subinterval changes sign.
 */
double least_root_in(const RPoly& poly, double lo, double hi, double tol = 1e-12);

/**
 * The radius polynomial of the class: quartic for pprime-fixed, cubic for
 * starlike-half and u0, quintic for vp and vp-convex, with coefficients
 * assembled exactly from the parameters. The closed-form-only kinds
 * (pprime, lif) have no radius polynomial and raise std::invalid_argument.
 */
RPoly polynomial_for(const ClassSpec& spec);

/**
 * Radius of concavity (vp-convex: radius of convexity) of the class.
 *
 *   pprime        1 - 2/sqrt(A+3)                                (closed form)
 *   pprime-fixed  least root of the quartic in (0,1)
 *   lif           (A+1+2a - 2 sqrt((A+a)(1+a)))/(A-1), a = alpha (closed form)
 *   starlike-half least root of the cubic in (0,1)
 *   u0            min(r1, least root of the cubic in (0,1))
 *   vp            min(r1, least root of the quintic in (0,p))
 *   vp-convex     min(r1, least root of its quintic in (0,p))
 *
 * The u0/vp closed-form components are capped at 1 (they reach exactly 1
 * at lambda = 1, where the (1-lambda) factor under the root vanishes).
 */
RadiusResult radius_for(const ClassSpec& spec);

}  // namespace conrad

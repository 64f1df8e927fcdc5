#pragma once

#include <complex>
#include <functional>

#include "conrad/class_spec.hpp"
#include "conrad/schwarz.hpp"

namespace conrad {

using Complex = std::complex<double>;
using ComplexMap = std::function<Complex(Complex)>;

/// Raw P-style evaluation refuses points closer than this to the pole
/// unless a pole-cancelled evaluator is available.
inline constexpr double kDefaultPoleGuard = 1e-3;

/**
 * The pre-Schwarzian Q(z) = z f''(z) / f'(z) of a class member, the common
 * ingredient of the concavity and convexity conditions. Q(0) = 0 for every
 * normalized member.
 *
 * For meromorphic members, `regularized` additionally evaluates
 * 1 + z f''/f' + (z+p)/(z-p) in a form with the pole at z = p cancelled
 * exactly, so P can be computed arbitrarily close to the pole. It is empty
 * for analytic members.
 */
struct PreSchwarzian {
  ComplexMap eval;
  ComplexMap regularized;
};

/**
 * Concavity operator for analytic classes with aperture A in (1,2]:
 *
 *   T(z) = (2/(A-1)) [ ((A+1)/2) (1+z)/(1-z) - 1 - Q(z) ].
 *
 * T(0) = 1 whenever Q(0) = 0. Throws std::invalid_argument for A <= 1 and
 * std::domain_error for |z| >= 1.
 */
Complex t_of(double A, const PreSchwarzian& q, Complex z);

/**
 * Concavity operator for meromorphic classes with a simple pole at
 * p in (0,1):
 *
 *   P(z) = -[ 1 + Q(z) + (z+p)/(z-p) - (1+pz)/(1-pz) ].
 *
 * Prefers the pole-cancelled evaluator when present; otherwise requires
 * |z - p| > pole_guard and throws std::domain_error inside the guard.
 */
Complex p_of(double p, const PreSchwarzian& q, Complex z,
             double pole_guard = kDefaultPoleGuard);

/**
 * Builds the pre-Schwarzian of the class member determined by a certified
 * disc map:
 *
 *   pprime / pprime-fixed : f' = (1+g)/(1-g) with g = data (must vanish at
 *                           zero), so Q = 2 z g' / (1 - g^2).
 *   starlike-half         : z f'/f = 1/(1 + z phi) with phi = data, so
 *                           Q = (1 - z phi - z^2 phi') / (1 + z phi) - 1.
 *   u0                    : z/f = 1 + lambda z W with W = integral of
 *                           w1 = data from 0.
 *   vp / vp-convex        : z/f = -(z-p)(1 - lambda p z w)/p with
 *                           w = (integral of w1 from p to z)/(z - p)
 *                           computed as an exact polynomial cofactor; also
 *                           installs the pole-cancelled evaluator.
 *
 * All denominators are bounded away from zero on the open disc by the
 * certificate's sum bound. Throws std::invalid_argument when the
 * certificate does not match the class (pprime kinds need a vanish-at-zero
 * map).
 */
PreSchwarzian presch_for(const ClassSpec& spec, const SchwarzCert& data);

/**
 * The functional U(z) = (z/f)^2 f'(z) - 1 used to define the u0/vp classes.
 * For representation members it reduces to -lambda z^2 w1(z) exactly.
 */
Complex u_functional(const ClassSpec& spec, const SchwarzCert& data, Complex z);

/// Direct form of the same functional for arbitrary fixtures given f and f'.
Complex u_functional(const ComplexMap& f, const ComplexMap& fprime, Complex z);

/**
 * Closed-form T of the extremal function of the class: pprime uses
 * f0(z) = -z + 2 log(1+z), lif the order-alpha extremal. Only the pprime
 * and lif kinds are accepted; alpha is ignored for pprime. Throws
 * std::domain_error at the poles z = +-1.
 */
Complex closed_extremal_t(ClassKind kind, double A, double alpha, Complex z);

}  // namespace conrad

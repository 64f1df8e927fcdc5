#include "conrad/radii.hpp"

#include <algorithm>
#include <cmath>

namespace conrad {

namespace {

constexpr int kScanIntervals = 4096;
constexpr double kEndpointInset = 1e-12;

// Bisect a bracket [a,b] with f(a) f(b) < 0 down to width <= tol.
double bisect(const RPoly& poly, double a, double b, double fa, double tol) {
  while (b - a > tol) {
    const double m = 0.5 * (a + b);
    const double fm = poly(m);
    if (fm == 0.0) return m;
    if ((fa < 0.0) != (fm < 0.0)) {
      b = m;
    } else {
      a = m;
      fa = fm;
    }
  }
  return 0.5 * (a + b);
}

double closed_form_pprime(double A) { return 1.0 - 2.0 / std::sqrt(A + 3.0); }

double closed_form_lif(double A, double alpha) {
  return (A + 1.0 + 2.0 * alpha - 2.0 * std::sqrt((A + alpha) * (1.0 + alpha))) / (A - 1.0);
}

}  // namespace

std::string_view method_name(RadiusMethod method) {
  switch (method) {
    case RadiusMethod::ClosedForm: return "closed-form";
    case RadiusMethod::LeastRoot: return "least-root";
    case RadiusMethod::MinOfTwo: return "min-of-two";
  }
  return "?";
}

std::optional<RadiusMethod> method_from_name(std::string_view name) {
  for (RadiusMethod m :
       {RadiusMethod::ClosedForm, RadiusMethod::LeastRoot, RadiusMethod::MinOfTwo}) {
    if (name == method_name(m)) return m;
  }
  return std::nullopt;
}

NoRootError::NoRootError(double lo_, double hi_, double f_lo_, double f_hi_)
    : std::runtime_error("no sign change in (" + std::to_string(lo_) + ", " +
                         std::to_string(hi_) + "): endpoint values " +
                         std::to_string(f_lo_) + ", " + std::to_string(f_hi_)),
      lo(lo_), hi(hi_), f_lo(f_lo_), f_hi(f_hi_) {}

double least_root_in(const RPoly& poly, double lo, double hi, double tol) {
  if (!(lo < hi)) throw std::invalid_argument("least_root_in needs lo < hi");
  if (!(tol > 0.0)) throw std::invalid_argument("least_root_in needs tol > 0");

  const double a = lo + kEndpointInset;
  const double b = hi - kEndpointInset;
  double x_prev = a;
  double f_prev = poly(x_prev);
  if (f_prev == 0.0) return x_prev;
  for (int i = 1; i <= kScanIntervals; ++i) {
    const double x = a + (b - a) * static_cast<double>(i) / kScanIntervals;
    const double f = poly(x);
    if (f == 0.0) return x;
    if ((f_prev < 0.0) != (f < 0.0)) return bisect(poly, x_prev, x, f_prev, tol);
    x_prev = x;
    f_prev = f;
  }
  throw NoRootError(lo, hi, poly(a), poly(b));
}

RPoly polynomial_for(const ClassSpec& spec) {
  spec.validate();
  const double A = spec.A;
  const double lambda = spec.lambda;
  const double p = spec.p;
  switch (spec.kind) {
    case ClassKind::PprimeFixed: {
      const double a = spec.a;
      return RPoly{(A - 1.0) / (A + 3.0),
                   -2.0 * (A * (1.0 - a) + 3.0 * a + 1.0) / (A + 3.0),
                   2.0 * (A * (1.0 - 2.0 * a) - 2.0 * a - 3.0) / (A + 3.0),
                   -2.0 * (A + 1.0) * (1.0 - a) / (A + 3.0),
                   1.0};
    }
    case ClassKind::StarlikeHalf:
      return RPoly{-(A + 1.0), 3.0 * A + 7.0, -(3.0 * A + 1.0), A - 1.0};
    case ClassKind::U0:
      return RPoly{A - 1.0, -(A + 3.0), -lambda * (A + 11.0), -lambda * (9.0 - A)};
    case ClassKind::Vp:
      return RPoly{p,
                   -(1.0 + p * p + 3.0 * lambda * p * p),
                   p * (1.0 - 4.0 * lambda - lambda * p * p),
                   lambda * (5.0 * lambda * p * p - 4.0 * p * p + 3.0),
                   lambda * p * (3.0 * lambda * p * p - lambda + 1.0),
                   lambda * lambda * p * p};
    case ClassKind::VpConvex:
      return RPoly{p * p,
                   -p * (2.0 + 3.0 * lambda * p * p),
                   1.0 - 5.0 * lambda * p * p,
                   -lambda * p * (1.0 - 5.0 * lambda * p * p),
                   lambda * (1.0 + 2.0 * lambda * p * p),
                   lambda * lambda * p};
    case ClassKind::Pprime:
    case ClassKind::Lif:
      break;
  }
  throw std::invalid_argument("class has a closed-form radius, no radius polynomial");
}

RadiusResult radius_for(const ClassSpec& spec) {
  spec.validate();
  RadiusResult result;
  switch (spec.kind) {
    case ClassKind::Pprime:
      result.value = closed_form_pprime(spec.A);
      result.method = RadiusMethod::ClosedForm;
      return result;
    case ClassKind::Lif:
      result.value = closed_form_lif(spec.A, spec.alpha);
      result.method = RadiusMethod::ClosedForm;
      return result;
    case ClassKind::PprimeFixed:
    case ClassKind::StarlikeHalf: {
      result.poly = polynomial_for(spec);
      result.bracket = {0.0, 1.0};
      result.value = least_root_in(*result.poly, 0.0, 1.0);
      result.method = RadiusMethod::LeastRoot;
      return result;
    }
    case ClassKind::U0: {
      const double lambda = spec.lambda;
      const double r1 = std::sqrt(
          (5.0 + lambda - std::sqrt((1.0 - lambda) * (25.0 - lambda))) / (6.0 * lambda));
      result.r1 = std::min(r1, 1.0);
      result.poly = polynomial_for(spec);
      result.bracket = {0.0, 1.0};
      result.r2 = least_root_in(*result.poly, 0.0, 1.0);
      result.value = std::min(*result.r1, *result.r2);
      result.method = RadiusMethod::MinOfTwo;
      return result;
    }
    case ClassKind::Vp:
    case ClassKind::VpConvex: {
      const double lambda = spec.lambda;
      const double r1 = std::sqrt(
          (3.0 - lambda - std::sqrt((1.0 - lambda) * (9.0 - lambda))) / (2.0 * lambda));
      result.r1 = std::min(r1, 1.0);
      result.poly = polynomial_for(spec);
      result.bracket = {0.0, spec.p};
      result.r2 = least_root_in(*result.poly, 0.0, spec.p);
      result.value = std::min(*result.r1, *result.r2);
      result.method = RadiusMethod::MinOfTwo;
      return result;
    }
  }
  throw std::invalid_argument("unknown class kind");
}

}  // namespace conrad

#include "conrad/verify.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "conrad/radii.hpp"
#include "conrad/schwarz.hpp"

namespace conrad {

namespace {

SchwarzCert draw_member(const ClassSpec& spec, std::uint64_t sample_seed, int degree) {
  switch (spec.kind) {
    case ClassKind::Pprime:
      return sample_schwarz(sample_seed, degree, /*vanish_at_zero=*/true);
    case ClassKind::PprimeFixed:
      return sample_schwarz_fixed_linear(sample_seed, degree, spec.a);
    case ClassKind::StarlikeHalf:
    case ClassKind::U0:
    case ClassKind::Vp:
    case ClassKind::VpConvex:
      return sample_schwarz(sample_seed, degree, /*vanish_at_zero=*/false);
    case ClassKind::Lif:
      break;
  }
  throw std::invalid_argument("no constructive sampler for this class");
}

ComplexMap operator_for(const ClassSpec& spec, const PreSchwarzian& q) {
  switch (spec.kind) {
    case ClassKind::Vp:
      return [p = spec.p, q](Complex z) { return p_of(p, q, z); };
    case ClassKind::VpConvex:
      // Convexity condition Re(1 + z f''/f') > 0, recovered from the
      // pole-cancelled form; the verified disc stays inside |z| < p.
      return [p = spec.p, q](Complex z) { return q.regularized(z) - (z + p) / (z - p); };
    default:
      return [A = spec.A, q](Complex z) { return t_of(A, q, z); };
  }
}

}  // namespace

void GridSpec::validate() const {
  if (n_radial < 1 || n_angular < 1)
    throw std::invalid_argument("grid needs at least one radius and one angle");
  if (!(margin_factor > 0.0 && margin_factor < 1.0))
    throw std::invalid_argument("margin factor must lie in (0,1)");
}

DiscMin disc_min_real(const ComplexMap& eval, double r_max, const GridSpec& grid) {
  grid.validate();
  if (!(r_max > 0.0 && r_max < 1.0))
    throw std::invalid_argument("grid radius must lie in (0,1)");

  DiscMin best{std::numeric_limits<double>::infinity(), Complex{}};
  for (int j = 1; j <= grid.n_radial; ++j) {
    const double r = r_max * static_cast<double>(j) / grid.n_radial;
    for (int k = 0; k < grid.n_angular; ++k) {
      const double theta = 2.0 * std::numbers::pi * k / grid.n_angular;
      const Complex z = std::polar(r, theta);
      double re;
      try {
        re = eval(z).real();
      } catch (const std::domain_error& e) {
        std::ostringstream msg;
        msg << e.what() << " at z = (" << z.real() << ", " << z.imag() << ")";
        throw std::domain_error(msg.str());
      }
      if (re < best.min_real) best = {re, z};
    }
  }
  return best;
}

SharpnessReport sharpness_check(ClassKind kind, double A, double alpha, double eps) {
  if (kind != ClassKind::Pprime && kind != ClassKind::Lif)
    throw std::invalid_argument("sharpness needs a closed extremal (pprime or lif)");
  if (!(eps > 0.0)) throw std::invalid_argument("eps must be positive");
  const RadiusResult radius = kind == ClassKind::Pprime
                                  ? radius_for(ClassSpec::pprime(A))
                                  : radius_for(ClassSpec::lif(A, alpha));
  if (radius.value + eps >= 1.0)
    throw std::invalid_argument("eps too large: radius + eps must stay below 1");

  SharpnessReport report;
  report.radius = radius.value;
  report.eps = eps;
  report.re_inside = closed_extremal_t(kind, A, alpha, Complex{-(radius.value - eps), 0.0}).real();
  report.re_outside = closed_extremal_t(kind, A, alpha, Complex{-(radius.value + eps), 0.0}).real();
  return report;
}

VerifyReport sample_verify(const ClassSpec& spec, int n_samples, std::uint64_t seed,
                           const GridSpec& grid, int degree) {
  spec.validate();
  grid.validate();
  if (n_samples < 1) throw std::invalid_argument("need at least one sample");
  if (degree < 0 || degree > kMaxSampleDegree)
    throw std::invalid_argument("sample degree must lie in [0, 32]");
  if (spec.kind == ClassKind::PprimeFixed && degree < 1)
    throw std::invalid_argument("fixed-linear sample needs degree >= 1");
  if (spec.kind == ClassKind::Lif)
    throw std::invalid_argument("no constructive sampler for this class");

  VerifyReport report;
  report.spec = spec;
  report.samples = n_samples;
  report.radius_used = radius_for(spec).value;
  report.worst_margin = std::numeric_limits<double>::infinity();

  const double r_max = grid.margin_factor * report.radius_used;
  for (int i = 0; i < n_samples; ++i) {
    const std::uint64_t sample_seed = seed ^ static_cast<std::uint64_t>(i);
    SchwarzCert cert;
    PreSchwarzian q;
    try {
      cert = draw_member(spec, sample_seed, degree);
      q = presch_for(spec, cert);
    } catch (const std::exception& e) {
      std::ostringstream msg;
      msg << e.what() << " (sample " << i << ")";
      throw std::runtime_error(msg.str());
    }
    const ComplexMap op = operator_for(spec, q);

    // Count failures per point rather than per sample, so a single bad
    // sample cannot hide multiple offending grid points.
    for (int j = 1; j <= grid.n_radial; ++j) {
      const double r = r_max * static_cast<double>(j) / grid.n_radial;
      for (int k = 0; k < grid.n_angular; ++k) {
        const double theta = 2.0 * std::numbers::pi * k / grid.n_angular;
        const Complex z = std::polar(r, theta);
        const double re = op(z).real();
        if (re < -kPositivityTolerance) ++report.failures;
        if (re < report.worst_margin) {
          report.worst_margin = re;
          report.witness_seed = sample_seed;
          report.witness_z = z;
        }
      }
    }
  }
  return report;
}

std::vector<IdentityCheck> identity_checks() {
  std::vector<IdentityCheck> checks;
  const auto record = [&checks](std::string name, double max_error, double tol) {
    checks.push_back({std::move(name), max_error <= tol, max_error});
  };

  // (1) At a = 1 the quartic factors as (r+1)^2 (r^2 - 2r + (A-1)/(A+3)),
  // so its least root collapses to the closed pprime form.
  {
    double worst = 0.0;
    for (int j = 1; j <= 20; ++j) {
      const double A = 1.0 + 0.05 * j;
      const double quartic = radius_for(ClassSpec::pprime_fixed(A, 1.0)).value;
      const double closed = radius_for(ClassSpec::pprime(A)).value;
      worst = std::max(worst, std::abs(quartic - closed));
    }
    record("pprime-fixed a=1 reduces to pprime", worst, 1e-10);
  }

  // (2) lif at alpha = 2 equals (A+5 - sqrt(12(A+2)))/(A-1).
  {
    double worst = 0.0;
    for (int j = 1; j <= 20; ++j) {
      const double A = 1.0 + 0.05 * j;
      const double lif = radius_for(ClassSpec::lif(A, 2.0)).value;
      const double order2 = (A + 5.0 - std::sqrt(12.0 * (A + 2.0))) / (A - 1.0);
      worst = std::max(worst, std::abs(lif - order2));
    }
    record("lif order 2 closed form", worst, 1e-12);
  }

  // (3) The lif radius is the smaller root of r^2 - 2 B r + 1 with
  // B = (A+1+2 alpha)/(A-1).
  {
    double worst = 0.0;
    for (int j = 1; j <= 20; ++j) {
      for (int k = 0; k <= 8; ++k) {
        const double A = 1.0 + 0.05 * j;
        const double alpha = 1.0 + 0.25 * k;
        const double b = (A + 1.0 + 2.0 * alpha) / (A - 1.0);
        const double root = b - std::sqrt(b * b - 1.0);
        worst = std::max(worst, std::abs(radius_for(ClassSpec::lif(A, alpha)).value - root));
      }
    }
    record("lif equals smaller quadratic root", worst, 1e-12);
  }

  // (4) Exact starlike-half root at A = 2: the cubic vanishes at 2 - sqrt(3)
  // and the solver lands on it to bisection accuracy.
  {
    const double exact = 2.0 - std::sqrt(3.0);
    const RPoly cubic = polynomial_for(ClassSpec::starlike_half(2.0));
    const double residual = std::abs(cubic(exact));
    const double radius_err = std::abs(radius_for(ClassSpec::starlike_half(2.0)).value - exact);
    checks.push_back({"starlike-half A=2 root is 2-sqrt(3)",
                      residual <= 1e-12 && radius_err <= 1e-9,
                      std::max(residual, radius_err)});
  }

  // (5) Exact u0 root at lambda = 1, A = 2: value 1/7.
  {
    const double err = std::abs(radius_for(ClassSpec::u0(2.0, 1.0)).value - 1.0 / 7.0);
    record("u0 A=2 lambda=1 radius is 1/7", err, 1e-9);
  }

  // (6) Quintic endpoint values: phi(p) = -4 lambda p^3 (1+p^2)(1-lambda p^2)
  // and psi(p) = -8 lambda p^4 (1-lambda p^2) over a (lambda, p) grid.
  {
    double worst = 0.0;
    for (int i = 1; i <= 20; ++i) {
      for (int j = 1; j <= 20; ++j) {
        const double lambda = static_cast<double>(i) / 20.0;
        const double p = static_cast<double>(j) / 21.0;
        const double phi_p = polynomial_for(ClassSpec::vp(lambda, p))(p);
        const double psi_p = polynomial_for(ClassSpec::vp_convex(lambda, p))(p);
        const double phi_expect = -4.0 * lambda * p * p * p * (1.0 + p * p) * (1.0 - lambda * p * p);
        const double psi_expect = -8.0 * lambda * p * p * p * p * (1.0 - lambda * p * p);
        worst = std::max(worst, std::abs(phi_p - phi_expect));
        worst = std::max(worst, std::abs(psi_p - psi_expect));
      }
    }
    record("vp quintic endpoint values", worst, 1e-12);
  }

  return checks;
}

}  // namespace conrad

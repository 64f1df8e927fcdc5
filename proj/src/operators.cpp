#include "conrad/operators.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace conrad {

namespace {

void require_in_disc(Complex z) {
  if (std::abs(z) >= 1.0) throw std::domain_error("point must lie in the open unit disc");
}

// Q for f' = (1+g)/(1-g): differentiating gives f''/f' = 2g'/(1-g^2).
PreSchwarzian presch_pprime(const SchwarzCert& data) {
  if (!data.vanishes_at_zero)
    throw std::invalid_argument("pprime member needs a vanish-at-zero disc map");
  CPoly g = data.poly;
  CPoly gp = derivative(g);
  PreSchwarzian q;
  q.eval = [g = std::move(g), gp = std::move(gp)](Complex z) {
    const Complex gz = g(z);
    return 2.0 * z * gp(z) / (1.0 - gz * gz);
  };
  return q;
}

// Q for z f'/f = 1/(1 + z phi). |z phi| < 1 keeps the denominator safe.
PreSchwarzian presch_starlike_half(const SchwarzCert& data) {
  CPoly phi = data.poly;
  CPoly phip = derivative(phi);
  PreSchwarzian q;
  q.eval = [phi = std::move(phi), phip = std::move(phip)](Complex z) {
    const Complex pz = phi(z);
    return (1.0 - z * pz - z * z * phip(z)) / (1.0 + z * pz) - 1.0;
  };
  return q;
}

// Q for z/f = 1 + lambda z W, W = antiderivative of w1. Differentiating the
// representation twice gives
//   Q = -lambda z^2 (2 w1 + z w1') / (1 - lambda z^2 w1)
//       - 2 lambda z (W + z w1) / (1 + lambda z W).
// Denominators: |lambda z^2 w1| <= lambda |z|^2 < 1 and, since
// |W(z)| <= |z| sup|w1|, |lambda z W| <= lambda |z|^2 < 1 as well.
PreSchwarzian presch_u0(double lambda, const SchwarzCert& data) {
  CPoly w1 = data.poly;
  CPoly w1p = derivative(w1);
  CPoly W = antiderivative(w1);
  PreSchwarzian q;
  q.eval = [lambda, w1 = std::move(w1), w1p = std::move(w1p),
            W = std::move(W)](Complex z) {
    const Complex w1z = w1(z);
    const Complex z2 = z * z;
    const Complex first = -lambda * z2 * (2.0 * w1z + z * w1p(z)) / (1.0 - lambda * z2 * w1z);
    const Complex second = -2.0 * lambda * z * (W(z) + z * w1z) / (1.0 + lambda * z * W(z));
    return first + second;
  };
  return q;
}

// Meromorphic member z/f = -(z-p)(1 - lambda p z w)/p. The averaged map
// w(z) = (W(z) - W(p))/(z - p) is an exact polynomial cofactor because
// W - W(p) vanishes at p; likewise the pole-cancelled combination
//   1 + z f''/f' + (z+p)/(z-p)
//     = -lambda z u'/(1 - lambda u) + 2 lambda p v/(1 - lambda p z w)
// with u = z^2 w1 and v = (u - p z w)/(z - p), whose numerator vanishes at
// z = p since w(p) = w1(p).
PreSchwarzian presch_vp(double lambda, double p, const SchwarzCert& data) {
  const Complex cp{p, 0.0};
  CPoly w1 = data.poly;
  CPoly w1p = derivative(w1);
  CPoly W = antiderivative(w1);
  CPoly w = deflate(W - CPoly{W(cp)}, cp);
  CPoly wp = derivative(w);
  CPoly zw = shift_up(w, 1);
  CPoly u = shift_up(w1, 2);
  CPoly up = derivative(u);
  CPoly v = deflate(u - Complex{p, 0.0} * zw, cp);

  PreSchwarzian q;
  q.eval = [lambda, p, w1, w1p, w, wp](Complex z) {
    const Complex w1z = w1(z);
    const Complex wz = w(z);
    const Complex z2 = z * z;
    return -2.0 * z / (z - p)
           - lambda * z2 * (2.0 * w1z + z * w1p(z)) / (1.0 - lambda * z2 * w1z)
           + 2.0 * lambda * p * z * (wz + z * wp(z)) / (1.0 - lambda * p * z * wz);
  };
  q.regularized = [lambda, p, u = std::move(u), up = std::move(up),
                   v = std::move(v), zw = std::move(zw)](Complex z) {
    return -lambda * z * up(z) / (1.0 - lambda * u(z))
           + 2.0 * lambda * p * v(z) / (1.0 - lambda * p * zw(z));
  };
  return q;
}

}  // namespace

Complex t_of(double A, const PreSchwarzian& q, Complex z) {
  if (!(A > 1.0)) throw std::invalid_argument("aperture A must exceed 1");
  require_in_disc(z);
  const Complex half_plane = (1.0 + z) / (1.0 - z);
  return (2.0 / (A - 1.0)) * (0.5 * (A + 1.0) * half_plane - 1.0 - q.eval(z));
}

Complex p_of(double p, const PreSchwarzian& q, Complex z, double pole_guard) {
  if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("pole p must lie in (0,1)");
  require_in_disc(z);
  const Complex moebius = (1.0 + p * z) / (1.0 - p * z);
  if (q.regularized) return -(q.regularized(z) - moebius);
  if (std::abs(z - p) <= pole_guard)
    throw std::domain_error("point too close to the pole for the raw evaluator");
  return -(1.0 + q.eval(z) + (z + p) / (z - p) - moebius);
}

PreSchwarzian presch_for(const ClassSpec& spec, const SchwarzCert& data) {
  spec.validate();
  if (data.sum_bound > 1.0)
    throw std::invalid_argument("disc-map certificate exceeds the unit sup bound");
  switch (spec.kind) {
    case ClassKind::Pprime:
    case ClassKind::PprimeFixed:
      return presch_pprime(data);
    case ClassKind::StarlikeHalf:
      return presch_starlike_half(data);
    case ClassKind::U0:
      return presch_u0(spec.lambda, data);
    case ClassKind::Vp:
    case ClassKind::VpConvex:
      return presch_vp(spec.lambda, spec.p, data);
    case ClassKind::Lif:
      break;
  }
  throw std::invalid_argument("no constructive member representation for this class");
}

Complex u_functional(const ClassSpec& spec, const SchwarzCert& data, Complex z) {
  if (spec.kind != ClassKind::U0 && spec.kind != ClassKind::Vp &&
      spec.kind != ClassKind::VpConvex)
    throw std::invalid_argument("U is only defined for the u0/vp representations");
  require_in_disc(z);
  return -spec.lambda * z * z * data.poly(z);
}

Complex u_functional(const ComplexMap& f, const ComplexMap& fprime, Complex z) {
  require_in_disc(z);
  if (z == Complex{}) return Complex{};  // U(0) = 0 under the normalization
  const Complex ratio = z / f(z);
  return ratio * ratio * fprime(z) - 1.0;
}

Complex closed_extremal_t(ClassKind kind, double A, double alpha, Complex z) {
  if (!(A > 1.0)) throw std::invalid_argument("aperture A must exceed 1");
  const Complex denom = 1.0 - z * z;
  if (std::abs(denom) < 1e-14) throw std::domain_error("extremal T has poles at z = +-1");
  switch (kind) {
    case ClassKind::Pprime:
      return ((A + 3.0) / (A - 1.0)) * (z * z + 2.0 * z + (A - 1.0) / (A + 3.0)) / denom;
    case ClassKind::Lif: {
      if (!(alpha >= 1.0)) throw std::invalid_argument("order alpha must be >= 1");
      const double b = (A + 1.0 + 2.0 * alpha) / (A - 1.0);
      return (z * z + 2.0 * b * z + 1.0) / denom;
    }
    default:
      throw std::invalid_argument("closed extremal T exists for pprime and lif only");
  }
}

}  // namespace conrad

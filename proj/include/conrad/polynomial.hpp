#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <utility>
#include <vector>

namespace conrad {

/**
 * Dense univariate polynomial with coefficients stored in ascending degree
 * order:
 *
 *   p(z) = c[0] + c[1] z + ... + c[n] z^n
 *
 * The zero polynomial is the empty coefficient list (degree -1); it
 * evaluates to zero everywhere. Coefficients are kept verbatim, trailing
 * zeros included, so coefficient-level round trips stay exact.
 */
template <typename Scalar>
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Scalar> coeffs) : coeffs_(std::move(coeffs)) {}
  Polynomial(std::initializer_list<Scalar> coeffs) : coeffs_(coeffs) {}

  /// c * z^k
  static Polynomial monomial(int k, Scalar c) {
    std::vector<Scalar> v(static_cast<std::size_t>(k) + 1, Scalar{});
    v.back() = c;
    return Polynomial(std::move(v));
  }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

  const std::vector<Scalar>& coeffs() const { return coeffs_; }

  /// Coefficient of z^k; zero outside the stored range.
  Scalar coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return Scalar{};
    return coeffs_[static_cast<std::size_t>(k)];
  }

  bool is_zero() const {
    for (const Scalar& c : coeffs_)
      if (c != Scalar{}) return false;
    return true;
  }

  /// Horner evaluation. The result type follows the usual promotion, so a
  /// real polynomial evaluated at a complex point yields a complex value.
  template <typename Arg>
  auto operator()(const Arg& z) const {
    using Result = decltype(std::declval<Scalar>() * z + std::declval<Scalar>());
    Result acc{};
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
      acc = acc * z + *it;
    return acc;
  }

  friend bool operator==(const Polynomial& p, const Polynomial& q) {
    return p.coeffs_ == q.coeffs_;
  }

 private:
  std::vector<Scalar> coeffs_;
};

using CPoly = Polynomial<std::complex<double>>;
using RPoly = Polynomial<double>;

/// Term-by-term derivative; degree drops by one, constants map to the zero
/// polynomial.
template <typename Scalar>
Polynomial<Scalar> derivative(const Polynomial<Scalar>& p) {
  const auto& c = p.coeffs();
  if (c.size() <= 1) return Polynomial<Scalar>{};
  std::vector<Scalar> d(c.size() - 1);
  for (std::size_t k = 0; k + 1 < c.size(); ++k)
    d[k] = c[k + 1] * static_cast<double>(k + 1);
  return Polynomial<Scalar>(std::move(d));
}

/// Antiderivative with zero constant term, i.e. the integral from 0.
template <typename Scalar>
Polynomial<Scalar> antiderivative(const Polynomial<Scalar>& p) {
  const auto& c = p.coeffs();
  std::vector<Scalar> a(c.size() + 1, Scalar{});
  for (std::size_t k = 0; k < c.size(); ++k)
    a[k + 1] = c[k] / static_cast<double>(k + 1);
  return Polynomial<Scalar>(std::move(a));
}

template <typename Scalar>
Polynomial<Scalar> operator+(const Polynomial<Scalar>& p, const Polynomial<Scalar>& q) {
  std::vector<Scalar> s(std::max(p.coeffs().size(), q.coeffs().size()), Scalar{});
  for (std::size_t k = 0; k < s.size(); ++k)
    s[k] = p.coeff(static_cast<int>(k)) + q.coeff(static_cast<int>(k));
  return Polynomial<Scalar>(std::move(s));
}

template <typename Scalar>
Polynomial<Scalar> operator-(const Polynomial<Scalar>& p) {
  std::vector<Scalar> s(p.coeffs());
  for (Scalar& c : s) c = -c;
  return Polynomial<Scalar>(std::move(s));
}

template <typename Scalar>
Polynomial<Scalar> operator-(const Polynomial<Scalar>& p, const Polynomial<Scalar>& q) {
  return p + (-q);
}

template <typename Scalar>
Polynomial<Scalar> operator*(const Polynomial<Scalar>& p, const Polynomial<Scalar>& q) {
  if (p.coeffs().empty() || q.coeffs().empty()) return Polynomial<Scalar>{};
  std::vector<Scalar> c(p.coeffs().size() + q.coeffs().size() - 1, Scalar{});
  for (std::size_t i = 0; i < p.coeffs().size(); ++i)
    for (std::size_t j = 0; j < q.coeffs().size(); ++j)
      c[i + j] += p.coeffs()[i] * q.coeffs()[j];
  return Polynomial<Scalar>(std::move(c));
}

template <typename Scalar>
Polynomial<Scalar> operator*(const Scalar& s, const Polynomial<Scalar>& p) {
  std::vector<Scalar> c(p.coeffs());
  for (Scalar& x : c) x = s * x;
  return Polynomial<Scalar>(std::move(c));
}

template <typename Scalar>
Polynomial<Scalar> operator*(const Polynomial<Scalar>& p, const Scalar& s) {
  return s * p;
}

/// z^k * p for k >= 0.
template <typename Scalar>
Polynomial<Scalar> shift_up(const Polynomial<Scalar>& p, int k) {
  if (p.coeffs().empty()) return p;
  std::vector<Scalar> c(p.coeffs().size() + static_cast<std::size_t>(k), Scalar{});
  for (std::size_t i = 0; i < p.coeffs().size(); ++i)
    c[i + static_cast<std::size_t>(k)] = p.coeffs()[i];
  return Polynomial<Scalar>(std::move(c));
}

/**
 * Synthetic division by the linear factor (z - a): returns the quotient q
 * with p(z) = (z - a) q(z) + p(a). Callers that know a is a root of p get
 * the exact cofactor (the dropped remainder is p(a)).
 */
template <typename Scalar>
Polynomial<Scalar> deflate(const Polynomial<Scalar>& p, const Scalar& a) {
  const auto& c = p.coeffs();
  if (c.size() <= 1) return Polynomial<Scalar>{};
  std::vector<Scalar> q(c.size() - 1);
  q.back() = c.back();
  for (std::size_t k = c.size() - 2; k >= 1; --k)
    q[k - 1] = c[k] + a * q[k];
  return Polynomial<Scalar>(std::move(q));
}

/// Coefficient l1-norm, sum_k |c_k|.
template <typename Scalar>
double abs_coeff_sum(const Polynomial<Scalar>& p) {
  double s = 0.0;
  for (const Scalar& c : p.coeffs()) s += std::abs(c);
  return s;
}

}  // namespace conrad

#pragma once

#include <limits>
#include <optional>
#include <string_view>

namespace conrad {

/**
 * The six function classes handled by the toolkit, plus the convexity
 * variant of the meromorphic class:
 *
 *   Pprime       analytic f with Re f' > 0
 *   PprimeFixed  the Pprime subclass with fixed second coefficient a
 *   Lif          linear-invariant family of order alpha
 *   StarlikeHalf starlike functions of order 1/2
 *   U0           |(z/f)^2 f' - 1| < lambda with f''(0) = 0
 *   Vp           the meromorphic analogue with a simple pole at p
 *   VpConvex     Vp members, checked for convexity instead of concavity
 */
enum class ClassKind { Pprime, PprimeFixed, Lif, StarlikeHalf, U0, Vp, VpConvex };

std::string_view kind_name(ClassKind kind);
std::optional<ClassKind> kind_from_name(std::string_view name);

/**
 * A class together with its parameters. Exactly the parameters relevant to
 * `kind` are set; the rest stay NaN. Instances built through the factories
 * are always validated.
 *
 * Parameter ranges: A in (1,2] (aperture of the concavity operator; the
 * lower end is guarded at 1+1e-9 since A-1 appears in denominators),
 * a in [0,1], alpha >= 1, lambda in (0,1], p in (0,1).
 */
struct ClassSpec {
  ClassKind kind = ClassKind::Pprime;
  double A = std::numeric_limits<double>::quiet_NaN();
  double a = std::numeric_limits<double>::quiet_NaN();
  double alpha = std::numeric_limits<double>::quiet_NaN();
  double lambda = std::numeric_limits<double>::quiet_NaN();
  double p = std::numeric_limits<double>::quiet_NaN();

  static ClassSpec pprime(double A);
  static ClassSpec pprime_fixed(double A, double a);
  static ClassSpec lif(double A, double alpha);
  static ClassSpec starlike_half(double A);
  static ClassSpec u0(double A, double lambda);
  static ClassSpec vp(double lambda, double p);
  static ClassSpec vp_convex(double lambda, double p);

  /// Throws std::invalid_argument naming the offending parameter.
  void validate() const;

  /// True for kinds whose operator is T (uses A); false for the
  /// meromorphic kinds driven by P or the convexity condition.
  bool is_analytic() const { return kind != ClassKind::Vp && kind != ClassKind::VpConvex; }
};

}  // namespace conrad

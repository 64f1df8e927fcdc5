#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "conrad/class_spec.hpp"

namespace conrad::cli {

/**
 * One-parameter sweep over a class family. `param` names the swept
 * parameter (A, a, alpha, lambda or p); the optional slots hold the fixed
 * ones. Every interpolated spec is validated before anything is written,
 * so an out-of-range sweep never produces a partial file.
 */
struct SweepConfig {
  ClassKind kind = ClassKind::Pprime;
  std::optional<double> A, a, alpha, lambda, p;
  std::string param;
  double from = 0.0;
  double to = 0.0;
  int steps = 0;
  std::string output_path;
};

/**
 * Writes `param,value,r1,r2,method` rows (12 significant digits, empty
 * fields for absent components) for steps equally spaced in [from, to].
 * Byte-for-byte deterministic for a given config. Throws
 * std::invalid_argument for bad configs and std::runtime_error on I/O
 * failure.
 */
void emit_sweep(const SweepConfig& config);

/**
 * Full command-line surface:
 *
 *   conrad <radius|poly|verify|sharpness|identities|sweep> [flags]
 *
 * Returns 0 on success, 1 on verification failure or I/O error, 2 on
 * usage errors (unknown class, out-of-range parameter, malformed flag).
 * Usage errors never print partial results.
 */
int run_command(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err);

}  // namespace conrad::cli

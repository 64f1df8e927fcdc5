#include "conrad/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "conrad/radii.hpp"
#include "conrad/verify.hpp"

namespace conrad::cli {

namespace {

using Json = nlohmann::ordered_json;

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

struct Options {
  std::string class_name;
  std::optional<double> A, a, alpha, lambda, p;
  int samples = 200;
  std::uint64_t seed = 1;
  int degree = 4;
  int grid_r = 16;
  int grid_theta = 256;
  double margin = 0.999;
  double eps = 0.01;
  bool json = false;
  std::string param;
  double from = 0.0;
  double to = 0.0;
  int steps = 0;
  std::string out_path;
};

ClassKind parse_kind(const std::string& name) {
  const auto kind = kind_from_name(name);
  if (!kind) throw std::invalid_argument("--class: unknown class '" + name + "'");
  return *kind;
}

double need(const std::optional<double>& slot, const char* flag) {
  if (!slot) throw std::invalid_argument(std::string("missing flag ") + flag +
                                         " required by this class");
  return *slot;
}

ClassSpec build_spec(ClassKind kind, const Options& o) {
  switch (kind) {
    case ClassKind::Pprime: return ClassSpec::pprime(need(o.A, "--A"));
    case ClassKind::PprimeFixed:
      return ClassSpec::pprime_fixed(need(o.A, "--A"), need(o.a, "--a"));
    case ClassKind::Lif: return ClassSpec::lif(need(o.A, "--A"), need(o.alpha, "--alpha"));
    case ClassKind::StarlikeHalf: return ClassSpec::starlike_half(need(o.A, "--A"));
    case ClassKind::U0: return ClassSpec::u0(need(o.A, "--A"), need(o.lambda, "--lambda"));
    case ClassKind::Vp: return ClassSpec::vp(need(o.lambda, "--lambda"), need(o.p, "--p"));
    case ClassKind::VpConvex:
      return ClassSpec::vp_convex(need(o.lambda, "--lambda"), need(o.p, "--p"));
  }
  throw std::invalid_argument("--class: unknown class");
}

std::string spec_label(const ClassSpec& spec) {
  std::ostringstream s;
  s << kind_name(spec.kind) << " (";
  bool first = true;
  const auto item = [&](const char* name, double v, bool set) {
    if (!set) return;
    if (!first) s << ", ";
    s << name << "=" << fmt(v);
    first = false;
  };
  item("A", spec.A, spec.is_analytic());
  item("a", spec.a, spec.kind == ClassKind::PprimeFixed);
  item("alpha", spec.alpha, spec.kind == ClassKind::Lif);
  item("lambda", spec.lambda, !std::isnan(spec.lambda));
  item("p", spec.p, !std::isnan(spec.p));
  s << ")";
  return s.str();
}

Json spec_json(const ClassSpec& spec) {
  Json j;
  j["kind"] = std::string(kind_name(spec.kind));
  if (spec.is_analytic()) j["A"] = spec.A;
  if (spec.kind == ClassKind::PprimeFixed) j["a"] = spec.a;
  if (spec.kind == ClassKind::Lif) j["alpha"] = spec.alpha;
  if (!std::isnan(spec.lambda)) j["lambda"] = spec.lambda;
  if (!std::isnan(spec.p)) j["p"] = spec.p;
  return j;
}

Json radius_json(const ClassSpec& spec, const RadiusResult& r) {
  Json j;
  j["class"] = spec_json(spec);
  j["value"] = r.value;
  j["method"] = std::string(method_name(r.method));
  if (r.r1) j["r1"] = *r.r1;
  if (r.r2) j["r2"] = *r.r2;
  if (r.poly) j["poly"] = r.poly->coeffs();
  if (r.bracket) j["bracket"] = {r.bracket->first, r.bracket->second};
  return j;
}

int cmd_radius(const Options& o, std::ostream& out) {
  const ClassSpec spec = build_spec(parse_kind(o.class_name), o);
  const RadiusResult r = radius_for(spec);
  if (o.json) {
    out << radius_json(spec, r).dump(2) << "\n";
    return 0;
  }
  out << "class: " << spec_label(spec) << "\n";
  out << "value: " << fmt(r.value) << "\n";
  out << "method: " << method_name(r.method) << "\n";
  if (r.r1) out << "r1: " << fmt(*r.r1) << "\n";
  if (r.r2) out << "r2: " << fmt(*r.r2) << "\n";
  return 0;
}

int cmd_poly(const Options& o, std::ostream& out) {
  const ClassSpec spec = build_spec(parse_kind(o.class_name), o);
  const RPoly poly = polynomial_for(spec);
  const double hi = spec.is_analytic() ? 1.0 : spec.p;
  if (o.json) {
    Json j;
    j["class"] = spec_json(spec);
    j["coeffs"] = poly.coeffs();
    j["bracket"] = {0.0, hi};
    j["atLo"] = poly(0.0);
    j["atHi"] = poly(hi);
    out << j.dump(2) << "\n";
    return 0;
  }
  out << "class: " << spec_label(spec) << "\n";
  out << "coeffs (ascending):";
  for (double c : poly.coeffs()) out << " " << fmt(c);
  out << "\n";
  out << "bracket: (0, " << fmt(hi) << ")\n";
  out << "value at 0: " << fmt(poly(0.0)) << "\n";
  out << "value at " << fmt(hi) << ": " << fmt(poly(hi)) << "\n";
  return 0;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const ClassSpec spec = build_spec(parse_kind(o.class_name), o);
  GridSpec grid;
  grid.n_radial = o.grid_r;
  grid.n_angular = o.grid_theta;
  grid.margin_factor = o.margin;
  const VerifyReport report = sample_verify(spec, o.samples, o.seed, grid, o.degree);
  if (o.json) {
    Json j;
    j["class"] = spec_json(spec);
    j["samples"] = report.samples;
    j["seed"] = o.seed;
    j["degree"] = o.degree;
    j["grid"] = {{"nRadial", grid.n_radial},
                 {"nAngular", grid.n_angular},
                 {"marginFactor", grid.margin_factor}};
    j["radiusUsed"] = report.radius_used;
    j["failures"] = report.failures;
    j["worstMargin"] = report.worst_margin;
    j["witness"] = {{"seed", report.witness_seed},
                    {"z", {report.witness_z.real(), report.witness_z.imag()}}};
    out << j.dump(2) << "\n";
  } else {
    out << "class: " << spec_label(spec) << "\n";
    out << "radius: " << fmt(report.radius_used) << " (grid at "
        << fmt(grid.margin_factor) << " * radius)\n";
    out << "samples: " << report.samples << "  degree: " << o.degree << "  grid: "
        << grid.n_radial << "x" << grid.n_angular << "  seed: " << o.seed << "\n";
    out << "failures: " << report.failures << "\n";
    out << "worst margin: " << fmt(report.worst_margin) << " at z = ("
        << fmt(report.witness_z.real()) << ", " << fmt(report.witness_z.imag())
        << "), sample seed " << report.witness_seed << "\n";
  }
  return report.failures == 0 ? 0 : 1;
}

int cmd_sharpness(const Options& o, std::ostream& out) {
  const ClassKind kind = parse_kind(o.class_name);
  if (kind != ClassKind::Pprime && kind != ClassKind::Lif)
    throw std::invalid_argument("--class: sharpness needs a closed extremal (pprime or lif)");
  const double A = need(o.A, "--A");
  const double alpha = kind == ClassKind::Lif ? need(o.alpha, "--alpha") : 0.0;
  const SharpnessReport report = sharpness_check(kind, A, alpha, o.eps);
  if (o.json) {
    Json j;
    j["class"] = std::string(kind_name(kind));
    j["A"] = A;
    if (kind == ClassKind::Lif) j["alpha"] = alpha;
    j["radius"] = report.radius;
    j["eps"] = report.eps;
    j["reInside"] = report.re_inside;
    j["reOutside"] = report.re_outside;
    j["passed"] = report.passed();
    out << j.dump(2) << "\n";
  } else {
    out << "class: " << kind_name(kind) << " (A=" << fmt(A);
    if (kind == ClassKind::Lif) out << ", alpha=" << fmt(alpha);
    out << ")\n";
    out << "radius: " << fmt(report.radius) << "\n";
    out << "Re T at -(R-eps): " << fmt(report.re_inside) << "  (expect > 0)\n";
    out << "Re T at -(R+eps): " << fmt(report.re_outside) << "  (expect < 0)\n";
    out << "result: " << (report.passed() ? "PASS" : "FAIL") << "\n";
  }
  return report.passed() ? 0 : 1;
}

int cmd_identities(const Options& o, std::ostream& out) {
  const std::vector<IdentityCheck> checks = identity_checks();
  bool all = true;
  if (o.json) {
    Json j;
    j["checks"] = Json::array();
    for (const IdentityCheck& c : checks) {
      j["checks"].push_back(
          {{"name", c.name}, {"passed", c.passed}, {"maxError", c.max_error}});
      all = all && c.passed;
    }
    j["passed"] = all;
    out << j.dump(2) << "\n";
  } else {
    for (const IdentityCheck& c : checks) {
      out << (c.passed ? "PASS" : "FAIL") << "  " << c.name << "  (max error "
          << fmt(c.max_error) << ")\n";
      all = all && c.passed;
    }
  }
  return all ? 0 : 1;
}

int cmd_sweep(const Options& o, std::ostream& out) {
  SweepConfig config;
  config.kind = parse_kind(o.class_name);
  config.A = o.A;
  config.a = o.a;
  config.alpha = o.alpha;
  config.lambda = o.lambda;
  config.p = o.p;
  config.param = o.param;
  config.from = o.from;
  config.to = o.to;
  config.steps = o.steps;
  config.output_path = o.out_path;
  emit_sweep(config);
  out << "wrote " << config.steps << " rows to " << config.output_path << "\n";
  return 0;
}

}  // namespace

void emit_sweep(const SweepConfig& config) {
  if (config.steps < 2) throw std::invalid_argument("--steps must be at least 2");
  if (config.param != "A" && config.param != "a" && config.param != "alpha" &&
      config.param != "lambda" && config.param != "p")
    throw std::invalid_argument("--param: unknown sweep parameter '" + config.param + "'");

  // Validate the whole sweep before touching the output file.
  std::vector<std::pair<double, RadiusResult>> rows;
  rows.reserve(static_cast<std::size_t>(config.steps));
  for (int i = 0; i < config.steps; ++i) {
    const double v = config.from + (config.to - config.from) * i / (config.steps - 1);
    Options o;
    o.A = config.A;
    o.a = config.a;
    o.alpha = config.alpha;
    o.lambda = config.lambda;
    o.p = config.p;
    if (config.param == "A") o.A = v;
    else if (config.param == "a") o.a = v;
    else if (config.param == "alpha") o.alpha = v;
    else if (config.param == "lambda") o.lambda = v;
    else o.p = v;
    rows.emplace_back(v, radius_for(build_spec(config.kind, o)));
  }

  std::ofstream file(config.output_path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open output file " + config.output_path);
  file << "param,value,r1,r2,method\n";
  for (const auto& [v, r] : rows) {
    file << fmt(v) << "," << fmt(r.value) << ",";
    if (r.r1) file << fmt(*r.r1);
    file << ",";
    if (r.r2) file << fmt(*r.r2);
    file << "," << method_name(r.method) << "\n";
  }
  if (!file.good()) throw std::runtime_error("write failed for " + config.output_path);
}

int run_command(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err) {
  Options o;
  CLI::App app{"radius-of-concavity toolkit for classes of univalent functions", "conrad"};
  app.require_subcommand(1);

  const auto add_class = [&o](CLI::App* cmd) {
    cmd->add_option("--class", o.class_name, "class kind: pprime, pprime-fixed, lif, "
                                             "starlike-half, u0, vp, vp-convex")
        ->required();
    cmd->add_option("--A", o.A, "aperture A in (1,2]");
    cmd->add_option("--a", o.a, "fixed second coefficient in [0,1]");
    cmd->add_option("--alpha", o.alpha, "family order, >= 1");
    cmd->add_option("--lambda", o.lambda, "defining bound in (0,1]");
    cmd->add_option("--p", o.p, "pole location in (0,1)");
  };
  const auto add_json = [&o](CLI::App* cmd) {
    cmd->add_flag("--json", o.json, "emit a machine-readable JSON object");
  };

  CLI::App* radius = app.add_subcommand("radius", "compute the radius for a class");
  add_class(radius);
  add_json(radius);

  CLI::App* poly = app.add_subcommand("poly", "print the radius polynomial of a class");
  add_class(poly);
  add_json(poly);

  CLI::App* verify = app.add_subcommand("verify", "sampled positivity verification");
  add_class(verify);
  add_json(verify);
  verify->add_option("--samples", o.samples, "number of sampled members")
      ->check(CLI::PositiveNumber);
  verify->add_option("--seed", o.seed, "base seed")->envname("CONRAD_SEED");
  verify->add_option("--degree", o.degree, "degree of sampled disc maps");
  verify->add_option("--grid-r", o.grid_r, "radial grid count");
  verify->add_option("--grid-theta", o.grid_theta, "angular grid count");
  verify->add_option("--margin", o.margin, "fraction of the radius to verify");

  CLI::App* sharp = app.add_subcommand("sharpness", "extremal sign change at the radius");
  add_class(sharp);
  add_json(sharp);
  sharp->add_option("--eps", o.eps, "offset on each side of the radius");

  CLI::App* identities = app.add_subcommand("identities", "run the identity suite");
  add_json(identities);

  CLI::App* sweep = app.add_subcommand("sweep", "CSV sweep of one parameter");
  add_class(sweep);
  sweep->add_option("--param", o.param, "swept parameter: A, a, alpha, lambda or p")
      ->required();
  sweep->add_option("--from", o.from, "start value")->required();
  sweep->add_option("--to", o.to, "end value")->required();
  sweep->add_option("--steps", o.steps, "number of rows, >= 2")->required();
  sweep->add_option("--out", o.out_path, "output CSV path")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (radius->parsed()) return cmd_radius(o, out);
    if (poly->parsed()) return cmd_poly(o, out);
    if (verify->parsed()) return cmd_verify(o, out);
    if (sharp->parsed()) return cmd_sharpness(o, out);
    if (identities->parsed()) return cmd_identities(o, out);
    if (sweep->parsed()) return cmd_sweep(o, out);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  err << "error: no subcommand given\n";
  return 2;
}

}  // namespace conrad::cli

// Copyright 2026 the evar authors
// SPDX-License-Identifier: Apache-2.0
//
// Command-line front end: eval (one EVaR figure), sweep (a confidence grid),
// and compare (closed form against the numerical minimizer, optionally a
// Monte-Carlo estimate). Exit codes: 0 success, 1 numeric or tolerance
// failure, 2 usage or validation error.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "evar/errors.hpp"
#include "evar/evar_analytic.hpp"
#include "evar/numeric_oracle.hpp"

namespace {

constexpr int kExitSuccess = 0;
constexpr int kExitNumericFailure = 1;
constexpr int kExitUsage = 2;

std::string fmt12(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

double parse_number(const std::string& text, const std::string& what) {
  char* end = nullptr;
  const double value = std::strtod(text.c_str(), &end);
  if (end == nullptr || *end != '\0' || text.empty()) {
    throw evar::ParameterError(what + ": not a number: '" + text + "'");
  }
  return value;
}

std::map<std::string, double> parse_params(
    const std::vector<std::string>& raw) {
  std::map<std::string, double> params;
  for (const std::string& item : raw) {
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw evar::ParameterError("--param expects name=value, got '" + item +
                                 "'");
    }
    const std::string name = item.substr(0, eq);
    params[name] = parse_number(item.substr(eq + 1), "--param " + name);
  }
  return params;
}

// Builds the distribution, insisting that exactly the named parameters are
// present; an unknown or missing name is a usage error.
evar::DistributionSpec make_distribution(
    const std::string& name, const std::map<std::string, double>& params) {
  const auto get = [&](const char* key) {
    const auto it = params.find(key);
    if (it == params.end()) {
      throw evar::ParameterError("distribution '" + name +
                                 "' requires --param " + key + "=...");
    }
    return it->second;
  };
  const auto expect_only = [&](std::initializer_list<const char*> keys) {
    for (const auto& [key, value] : params) {
      (void)value;
      bool known = false;
      for (const char* k : keys) {
        known = known || key == k;
      }
      if (!known) {
        throw evar::ParameterError("unknown parameter '" + key +
                                   "' for distribution '" + name + "'");
      }
    }
  };
  if (name == "poisson") {
    expect_only({"lambda"});
    return evar::Poisson(get("lambda"));
  }
  if (name == "compound-poisson-bernoulli") {
    expect_only({"lambda", "p"});
    return evar::CompoundPoissonBernoulli(get("lambda"), get("p"));
  }
  if (name == "compound-poisson-normal") {
    expect_only({"lambda", "sigma"});
    return evar::CompoundPoissonNormal(get("lambda"), get("sigma"));
  }
  if (name == "gamma") {
    expect_only({"k", "theta"});
    return evar::Gamma(get("k"), get("theta"));
  }
  if (name == "exponential") {
    expect_only({"lambda"});
    return evar::Exponential(get("lambda"));
  }
  if (name == "chi-squared") {
    expect_only({"k"});
    const double k = get("k");
    if (k != static_cast<int>(k)) {
      throw evar::ParameterError("chi-squared: k must be an integer");
    }
    return evar::ChiSquared(static_cast<int>(k));
  }
  if (name == "laplace") {
    expect_only({"mu", "b"});
    return evar::Laplace(get("mu"), get("b"));
  }
  if (name == "normal") {
    expect_only({"mu", "sigma"});
    return evar::Normal(get("mu"), get("sigma"));
  }
  if (name == "inverse-gaussian") {
    expect_only({"mu", "lambda"});
    return evar::InverseGaussian(get("mu"), get("lambda"));
  }
  if (name == "nig") {
    expect_only({"alpha", "beta", "mu", "delta"});
    return evar::NormalInverseGaussian(get("alpha"), get("beta"), get("mu"),
                                       get("delta"));
  }
  throw evar::ParameterError("unknown distribution '" + name + "'");
}

struct OutputRecord {
  std::string distribution;
  double alpha = 0.0;
  std::string method;
  double value = 0.0;
  std::optional<double> t_star;
  std::string branch;
  std::map<std::string, double> intermediates;
};

std::string branch_tag(const evar::EvarTrace& trace) {
  if (!trace.branch) {
    return "";
  }
  return *trace.branch == evar::LambertBranch::Principal ? "W0" : "W-1";
}

OutputRecord make_record(const evar::DistributionSpec& dist, double alpha,
                         const std::string& method,
                         const evar::EvarResult& result) {
  OutputRecord record;
  record.distribution = evar::distribution_name(dist);
  record.alpha = alpha;
  record.method = method;
  record.value = result.value;
  record.t_star = result.trace.t_star;
  record.branch = branch_tag(result.trace);
  record.intermediates = result.trace.intermediates;
  return record;
}

void print_csv(const std::vector<OutputRecord>& records, bool trace) {
  std::string header = "distribution,alpha,method,evar,t_star,branch";
  if (trace && !records.empty()) {
    for (const auto& [key, value] : records.front().intermediates) {
      (void)value;
      header += "," + key;
    }
  }
  std::printf("%s\n", header.c_str());
  for (const OutputRecord& r : records) {
    std::string line = r.distribution + "," + fmt12(r.alpha) + "," + r.method +
                       "," + fmt12(r.value) + "," +
                       (r.t_star ? fmt12(*r.t_star) : std::string()) + "," +
                       r.branch;
    if (trace) {
      for (const auto& [key, value] : r.intermediates) {
        (void)key;
        line += "," + fmt12(value);
      }
    }
    std::printf("%s\n", line.c_str());
  }
}

void print_json(const std::vector<OutputRecord>& records, bool trace) {
  for (const OutputRecord& r : records) {
    std::string line = "{\"distribution\":\"" + r.distribution +
                       "\",\"alpha\":" + fmt12(r.alpha) + ",\"method\":\"" +
                       r.method + "\",\"evar\":" + fmt12(r.value) +
                       ",\"t_star\":" +
                       (r.t_star ? fmt12(*r.t_star) : std::string("null")) +
                       ",\"branch\":" +
                       (r.branch.empty() ? std::string("null")
                                         : "\"" + r.branch + "\"");
    if (trace) {
      line += ",\"intermediates\":{";
      bool first = true;
      for (const auto& [key, value] : r.intermediates) {
        line += (first ? "\"" : ",\"") + key + "\":" + fmt12(value);
        first = false;
      }
      line += "}";
    }
    line += "}";
    std::printf("%s\n", line.c_str());
  }
}

struct CommonArgs {
  std::string dist_name;
  std::vector<std::string> raw_params;
  std::string method = "analytic";
  std::string format = "csv";
  bool trace = false;
  std::size_t samples = 1000000;
  std::uint64_t seed = 42;
};

void add_common(CLI::App* cmd, CommonArgs* args, bool with_method) {
  cmd->add_option("--dist", args->dist_name, "distribution tag")->required();
  cmd->add_option("--param", args->raw_params,
                  "distribution parameter as name=value (repeatable)");
  if (with_method) {
    cmd->add_option("--method", args->method, "evaluation method")
        ->check(CLI::IsMember({"analytic", "numeric", "mc"}));
    cmd->add_option("--format", args->format, "output format")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd->add_flag("--trace", args->trace,
                  "append closed-form intermediate symbols to the output");
  }
}

evar::EvarResult evaluate(const evar::DistributionSpec& dist,
                          evar::ConfidenceLevel level,
                          const CommonArgs& args) {
  if (args.method == "analytic") {
    return evar::evar(dist, level);
  }
  if (args.method == "numeric") {
    return evar::evar_numeric(dist, level);
  }
  return evar::evar_monte_carlo(dist, level, args.samples, args.seed);
}

int run_eval(const CommonArgs& args, double alpha) {
  const evar::DistributionSpec dist =
      make_distribution(args.dist_name, parse_params(args.raw_params));
  const evar::ConfidenceLevel level(alpha);
  const evar::EvarResult result = evaluate(dist, level, args);
  const std::vector<OutputRecord> records = {
      make_record(dist, alpha, args.method, result)};
  if (args.format == "json") {
    print_json(records, args.trace);
  } else {
    print_csv(records, args.trace);
  }
  return kExitSuccess;
}

int run_sweep(const CommonArgs& args, double from, double to, int steps) {
  if (steps < 2) {
    throw evar::ParameterError("--alpha-steps must be >= 2");
  }
  if (!(from <= to)) {
    throw evar::ParameterError("--alpha-from must be <= --alpha-to");
  }
  const evar::DistributionSpec dist =
      make_distribution(args.dist_name, parse_params(args.raw_params));
  std::vector<OutputRecord> records;
  records.reserve(steps);
  for (int i = 0; i < steps; ++i) {
    const double alpha = from + (to - from) * i / (steps - 1);
    const evar::ConfidenceLevel level(alpha);
    records.push_back(
        make_record(dist, alpha, args.method, evaluate(dist, level, args)));
  }
  if (args.format == "json") {
    print_json(records, args.trace);
  } else {
    print_csv(records, args.trace);
  }
  return kExitSuccess;
}

int run_compare(const CommonArgs& args, double alpha, double tol,
                bool with_mc) {
  const evar::DistributionSpec dist =
      make_distribution(args.dist_name, parse_params(args.raw_params));
  const evar::ConfidenceLevel level(alpha);
  const double analytic = evar::evar(dist, level).value;
  const double numeric = evar::evar_numeric(dist, level).value;
  const double abs_diff = std::fabs(analytic - numeric);
  const double scale =
      std::max(std::max(std::fabs(analytic), std::fabs(numeric)), 1e-300);
  const double rel_diff = abs_diff == 0.0 ? 0.0 : abs_diff / scale;
  const bool ok = rel_diff <= tol;
  std::printf("distribution: %s\n", evar::distribution_name(dist).c_str());
  std::printf("alpha: %s\n", fmt12(alpha).c_str());
  std::printf("analytic: %s\n", fmt12(analytic).c_str());
  std::printf("numeric: %s\n", fmt12(numeric).c_str());
  std::printf("abs_diff: %s\n", fmt12(abs_diff).c_str());
  std::printf("rel_diff: %s\n", fmt12(rel_diff).c_str());
  std::printf("tol: %s\n", fmt12(tol).c_str());
  if (with_mc) {
    const double mc =
        evar::evar_monte_carlo(dist, level, args.samples, args.seed).value;
    std::printf("mc: %s\n", fmt12(mc).c_str());
    std::printf("mc_abs_diff: %s\n", fmt12(std::fabs(mc - analytic)).c_str());
  }
  std::printf("status: %s\n", ok ? "ok" : "tolerance exceeded");
  return ok ? kExitSuccess : kExitNumericFailure;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"entropic value-at-risk in closed form, with numerical and "
               "Monte-Carlo cross-checks"};
  app.require_subcommand(1);

  CommonArgs eval_args;
  double eval_alpha = 0.0;
  CLI::App* eval_cmd = app.add_subcommand("eval", "evaluate one EVaR figure");
  add_common(eval_cmd, &eval_args, true);
  eval_cmd->add_option("--alpha", eval_alpha, "confidence level in [0, 1)")
      ->required();
  eval_cmd->add_option("--samples", eval_args.samples,
                       "Monte-Carlo sample count (mc method)");
  eval_cmd->add_option("--seed", eval_args.seed, "Monte-Carlo seed");

  CommonArgs sweep_args;
  double sweep_from = 0.0;
  double sweep_to = 0.0;
  int sweep_steps = 0;
  CLI::App* sweep_cmd =
      app.add_subcommand("sweep", "evaluate across a confidence grid");
  add_common(sweep_cmd, &sweep_args, true);
  sweep_cmd->add_option("--alpha-from", sweep_from, "first confidence level")
      ->required();
  sweep_cmd->add_option("--alpha-to", sweep_to, "last confidence level")
      ->required();
  sweep_cmd->add_option("--alpha-steps", sweep_steps, "number of grid points")
      ->required();
  sweep_cmd->add_option("--samples", sweep_args.samples,
                        "Monte-Carlo sample count (mc method)");
  sweep_cmd->add_option("--seed", sweep_args.seed, "Monte-Carlo seed");

  CommonArgs compare_args;
  double compare_alpha = 0.0;
  double compare_tol = 1e-6;
  CLI::App* compare_cmd = app.add_subcommand(
      "compare", "closed form against the numerical minimizer");
  add_common(compare_cmd, &compare_args, false);
  compare_cmd
      ->add_option("--alpha", compare_alpha, "confidence level in [0, 1)")
      ->required();
  compare_cmd->add_option("--tol", compare_tol,
                          "largest accepted relative difference");
  CLI::Option* samples_opt = compare_cmd->add_option(
      "--samples", compare_args.samples, "also report a Monte-Carlo estimate");
  compare_cmd->add_option("--seed", compare_args.seed, "Monte-Carlo seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (eval_cmd->parsed()) {
      return run_eval(eval_args, eval_alpha);
    }
    if (sweep_cmd->parsed()) {
      return run_sweep(sweep_args, sweep_from, sweep_to, sweep_steps);
    }
    return run_compare(compare_args, compare_alpha, compare_tol,
                       samples_opt->count() > 0);
  } catch (const evar::ParameterError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  } catch (const evar::UnsupportedError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitNumericFailure;
  }
}

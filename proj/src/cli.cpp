// SPDX-License-Identifier: Apache-2.0
#include "logquad/cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include "logquad/csv.hpp"
#include "logquad/engine.hpp"
#include "logquad/errors.hpp"
#include "logquad/expr.hpp"
#include "logquad/problems.hpp"

namespace logquad::cli {
namespace {

using Scalar = WorkingScalar;

struct UsageError : Error {
  using Error::Error;
};

struct ProblemFlags {
  std::optional<int> example;
  std::optional<std::string> expr;
  std::optional<std::string> interval;
  std::optional<std::string> decay;
  std::optional<double> K, alpha, beta, d, exact;
  std::optional<std::string> out;
};

void add_problem_flags(CLI::App& cmd, ProblemFlags& f) {
  cmd.add_option("--example", f.example, "Built-in integral 1..4");
  cmd.add_option("--expr", f.expr, "Integrand in t, e.g. \"log(t)/(1+t)\"");
  cmd.add_option("--interval", f.interval, "Integration interval 0:T or 0:inf (with --expr)");
  cmd.add_option("--decay", f.decay, "Decay at infinity for 0:inf: alg or exp");
  cmd.add_option("--K", f.K, "Bound constant K of the singularity profile");
  cmd.add_option("--alpha", f.alpha, "Left singularity exponent alpha");
  cmd.add_option("--beta", f.beta, "Right/decay exponent beta");
  cmd.add_option("--d", f.d, "Strip half-width d");
  cmd.add_option("--exact", f.exact, "Exact value of a user integral (enables abs_error)");
  cmd.add_option("--out", f.out, "Write CSV to FILE instead of stdout");
}

int parse_int(std::string_view text, const char* what) {
  int v = 0;
  const auto res = std::from_chars(text.data(), text.data() + text.size(), v);
  if (res.ec != std::errc() || res.ptr != text.data() + text.size()) {
    throw UsageError(std::string("invalid integer for ") + what + ": '" + std::string(text) + "'");
  }
  return v;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  for (;;) {
    const auto p = s.find(sep);
    parts.push_back(s.substr(0, p));
    if (p == std::string_view::npos) return parts;
    s.remove_prefix(p + 1);
  }
}

/// "lo:hi:step", "lo:hi" or "n".
std::vector<int> parse_n_range(const std::string& text) {
  const auto parts = split(text, ':');
  if (parts.size() > 3) throw UsageError("--n expects lo:hi:step, got '" + text + "'");
  const int lo = parse_int(parts[0], "--n");
  const int hi = parts.size() >= 2 ? parse_int(parts[1], "--n") : lo;
  const int step = parts.size() == 3 ? parse_int(parts[2], "--n") : 1;
  if (lo < 1) throw UsageError("--n values must be positive integers (got " + std::to_string(lo) + ")");
  if (hi < lo) throw UsageError("--n range is empty: " + text);
  if (step < 1) throw UsageError("--n step must be positive");
  std::vector<int> ns;
  for (long n = lo; n <= hi; n += step) ns.push_back(static_cast<int>(n));
  return ns;
}

Problem<Scalar> build_problem(const ProblemFlags& f) {
  if (f.example && f.expr) throw UsageError("--example and --expr are mutually exclusive");
  if (f.example) {
    if (f.interval || f.decay) throw UsageError("--interval/--decay apply to --expr only");
    try {
      return builtin<Scalar>(*f.example);
    } catch (const UnknownExample& e) {
      throw UsageError(e.what());
    }
  }
  if (!f.expr) throw UsageError("one of --example or --expr is required");
  if (!f.interval) throw UsageError("--expr requires --interval 0:T or 0:inf");
  if (!f.K || !f.alpha || !f.beta || !f.d) throw UsageError("--expr requires --K, --alpha, --beta and --d");

  const auto bounds = split(*f.interval, ':');
  if (bounds.size() != 2 || bounds[0] != "0") throw UsageError("--interval must be 0:T or 0:inf");

  Problem<Scalar> p;
  p.label = *f.expr;
  SingularityProfile prof{*f.K, *f.alpha, *f.beta, *f.d, std::nullopt, Family::Finite};
  if (bounds[1] == "inf") {
    if (!f.decay) throw UsageError("--interval 0:inf requires --decay alg|exp");
    if (*f.decay == "alg") {
      p.family = Family::SemiAlg;
    } else if (*f.decay == "exp") {
      p.family = Family::SemiExp;
    } else {
      throw UsageError("--decay must be alg or exp");
    }
  } else {
    if (f.decay) throw UsageError("--decay applies to 0:inf only");
    double T = 0.0;
    const std::string hi(bounds[1]);
    const auto res = std::from_chars(hi.data(), hi.data() + hi.size(), T);
    if (res.ec != std::errc() || res.ptr != hi.data() + hi.size() || !(T > 0.0) || !std::isfinite(T)) {
      throw UsageError("--interval upper end must be a positive number or inf");
    }
    p.family = Family::Finite;
    p.length = T;
    prof.T = T;
  }
  prof.family = p.family;

  Expr expr = [&] {
    try {
      return parse(*f.expr);
    } catch (const SyntaxError& e) {
      throw UsageError(std::string("--expr: ") + e.what());
    }
  }();
  p.integrand = [expr](const MapPoint<Scalar>& x) { return eval(expr, x); };
  if (f.exact) p.exact = static_cast<Scalar>(*f.exact);
  p.se_profile = prof;
  p.de_profile = prof;
  return p;
}

Method resolve(const std::string& rule_text, const Problem<Scalar>& problem) {
  const auto rule = parse_rule_name(rule_text);
  if (!rule) throw UsageError("--method must be one of se-new, de-new, se-existing, de-existing");
  const auto method = resolve_method(*rule, problem.family);
  if (!method) {
    throw RejectedProfile(std::string(to_string(*rule)) + " applies to finite intervals only");
  }
  if (is_existing(*method)) {
    const auto& prof = problem.profile_for(*method);
    if (!prof || prof->alpha != 1.0 || prof->beta != 1.0) {
      throw RejectedProfile(std::string(to_string(*rule)) +
                            " assumes |f(z)| <= K|log z| (alpha = beta = 1); profile has alpha = " +
                            csv::format_real(prof ? prof->alpha : 0.0) +
                            ", beta = " + csv::format_real(prof ? prof->beta : 0.0));
    }
  }
  return *method;
}

class Output {
 public:
  Output(const std::optional<std::string>& path, std::ostream& fallback) : stream_(&fallback) {
    if (path) {
      file_.open(*path, std::ios::binary);
      if (!file_) throw Error("cannot open output file " + *path);
      stream_ = &file_;
    }
  }
  std::ostream& get() { return *stream_; }

 private:
  std::ofstream file_;
  std::ostream* stream_;
};

int report_rows(std::span<const SweepRecord> rows, std::ostream& err) {
  int code = kExitOk;
  for (const auto& r : rows) {
    if (r.skipped) err << "skipped n=" << r.n << ": " << r.skip_reason << '\n';
    if (!r.within_bound()) {
      err << "bound violated at n=" << r.n << ": abs_error " << csv::format_real(*r.abs_error) << " > bound "
          << csv::format_real(r.bound) << '\n';
      code = kExitBoundViolated;
    }
  }
  return code;
}

int cmd_sweep(const ProblemFlags& f, const std::string& method_text, const std::string& n_text, std::ostream& out,
              std::ostream& err) {
  const Problem<Scalar> problem = build_problem(f);
  const Method method = resolve(method_text, problem);
  const std::vector<int> ns = parse_n_range(n_text);
  const auto rows = sweep(problem, method, std::span<const int>(ns));
  Output o(f.out, out);
  csv::write_sweep(o.get(), rows);
  return report_rows(rows, err);
}

int cmd_integrate(const ProblemFlags& f, const std::string& method_text, int n, std::ostream& out, std::ostream& err) {
  if (n < 1) throw UsageError("--n must be a positive integer");
  const Problem<Scalar> problem = build_problem(f);
  const Method method = resolve(method_text, problem);
  const int ns[] = {n};
  const auto rows = sweep(problem, method, std::span<const int>(ns));
  if (rows.front().skipped) throw UsageError(rows.front().skip_reason);
  Output o(f.out, out);
  csv::write_sweep(o.get(), rows);
  return report_rows(rows, err);
}

int cmd_compare(const ProblemFlags& f, const std::string& n_text, std::ostream& out, std::ostream& err) {
  const Problem<Scalar> problem = build_problem(f);
  const std::vector<int> ns = parse_n_range(n_text);
  std::vector<csv::LabeledRecord> rows;
  int code = kExitOk;
  for (const char* rule : {"se-new", "se-existing", "de-new", "de-existing"}) {
    const Method method = resolve(rule, problem);
    const auto records = sweep(problem, method, std::span<const int>(ns));
    const int rc = report_rows(records, err);
    if (rc != kExitOk) code = rc;
    for (const auto& r : records) rows.push_back({rule, r});
  }
  Output o(f.out, out);
  csv::write_compare(o.get(), rows);
  return code;
}

int cmd_check(long samples, std::uint64_t seed, const std::optional<std::string>& out_path, std::ostream& out,
              std::ostream& err) {
  if (samples < 1) throw UsageError("--samples must be >= 1");
  const auto reports = checks::run_all(samples, seed);
  bool ok = true;
  for (const auto& r : reports) {
    err << r.name << ": " << r.samples << " samples, " << r.violations << " violations, worst margin "
        << csv::format_real(r.worst_margin) << (r.passed() ? " [ok]" : " [FAIL]") << '\n';
    ok = ok && r.passed();
  }
  Output o(out_path, out);
  csv::write_checks(o.get(), reports);
  return ok ? kExitOk : kExitBoundViolated;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Quadrature with certified error bounds for log/algebraic endpoint singularities", "logquad"};
  app.require_subcommand(1);

  ProblemFlags sweep_flags, integrate_flags, compare_flags;
  std::string sweep_method, sweep_n, integrate_method, compare_n;
  int integrate_n = 0;
  long samples = 100000;
  std::uint64_t seed = 42;
  std::optional<std::string> check_out;

  auto* sweep_cmd = app.add_subcommand("sweep", "Convergence sweep over n; CSV rows sorted by n");
  add_problem_flags(*sweep_cmd, sweep_flags);
  sweep_cmd->add_option("--method", sweep_method, "se-new | de-new | se-existing | de-existing")->required();
  sweep_cmd->add_option("--n", sweep_n, "lo:hi:step")->required();

  auto* integrate_cmd = app.add_subcommand("integrate", "Single evaluation at one n");
  add_problem_flags(*integrate_cmd, integrate_flags);
  integrate_cmd->add_option("--method", integrate_method, "se-new | de-new | se-existing | de-existing")->required();
  integrate_cmd->add_option("--n", integrate_n, "Level n")->required();

  auto* compare_cmd = app.add_subcommand("compare", "se-new, se-existing, de-new, de-existing side by side");
  add_problem_flags(*compare_cmd, compare_flags);
  compare_cmd->add_option("--n", compare_n, "lo:hi:step")->required();

  auto* check_cmd = app.add_subcommand("check", "Sampled checks of the bounding inequalities");
  check_cmd->add_option("--samples", samples, "Samples per check")->capture_default_str();
  check_cmd->add_option("--seed", seed, "RNG seed")->capture_default_str();
  check_cmd->add_option("--out", check_out, "Write CSV to FILE instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (sweep_cmd->parsed()) return cmd_sweep(sweep_flags, sweep_method, sweep_n, out, err);
    if (integrate_cmd->parsed()) return cmd_integrate(integrate_flags, integrate_method, integrate_n, out, err);
    if (compare_cmd->parsed()) return cmd_compare(compare_flags, compare_n, out, err);
    if (check_cmd->parsed()) return cmd_check(samples, seed, check_out, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const RejectedProfile& e) {
    err << "error: rejected profile: " << e.what() << '\n';
    return kExitUsage;
  } catch (const PreconditionViolated& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const MismatchedFamily& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace logquad::cli

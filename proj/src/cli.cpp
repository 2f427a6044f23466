#include "haar_newton/cli.hpp"

#include <cmath>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "haar_newton/analysis.hpp"
#include "haar_newton/bench.hpp"
#include "haar_newton/methods.hpp"

namespace haar_newton::cli {

namespace {

const std::vector<std::string> kFunctionNames{"f1", "f2", "f3", "f4", "f5", "f6", "f7"};
const std::vector<std::string> kMethodNames{"newton", "wf", "fs", "oz", "klw", "new"};

struct Config {
  std::string function;
  std::vector<std::string> functions;
  std::string method;
  std::vector<std::string> methods{"wf", "fs", "oz", "klw", "new"};
  std::size_t m = 1;
  std::optional<std::size_t> points;
  std::optional<double> x0;
  double tol = 1e-15;
  std::size_t max_iter = 100;
  std::string format = "text";
  std::string fs_variant = "standard-midpoint";
  bool trace = false;
  std::optional<double> c2;
  std::optional<double> c3;
  std::string out_path;
};

std::size_t haar_points(const Config& cfg) { return cfg.points.value_or(2 * cfg.m); }

MethodId make_method(const Config& cfg, const std::string& label) {
  // Labels and variants were checked by the parser.
  MethodId id{*parse_method_label(label)};
  id.haar_points = haar_points(cfg);
  id.fs_variant = *parse_fs_variant(cfg.fs_variant);
  return id;
}

StopCriteria make_criteria(const Config& cfg) {
  StopCriteria criteria;
  criteria.step_tol = cfg.tol;
  criteria.residual_tol = cfg.tol;
  criteria.max_iter = cfg.max_iter;
  return criteria;
}

std::string describe(const MethodId& method) {
  std::string text(method_label(method.tag));
  if (method.tag == MethodTag::HaarNewton) {
    text += " (points=" + std::to_string(method.haar_points) + ")";
  } else if (method.tag == MethodTag::FS) {
    text += " (" + std::string(fs_variant_label(method.fs_variant)) + ")";
  }
  return text;
}

int exit_code_for(Status status) {
  switch (status) {
    case Status::Converged: return kExitOk;
    case Status::DerivativeBreakdown: return kExitBreakdown;
    default: return kExitNotConverged;
  }
}

void write_header(std::ostream& os, const SuiteEntry& entry, const MethodId& method,
                  double x0, const Outcome& out) {
  os << "function: " << entry.problem.name() << '\n'
     << "method: " << describe(method) << '\n'
     << "x0: " << format_shortest(x0) << '\n'
     << "status: " << to_string(out.status) << '\n'
     << "x_n: " << classify(out) << '\n'
     << "iterations: " << out.iterations << '\n'
     << "nfe: " << out.nfe << '\n';
}

int cmd_solve(const Config& cfg, std::ostream& os) {
  const SuiteEntry entry = *find_suite_entry(cfg.function);
  const MethodId method = make_method(cfg, cfg.method);
  const double x0 = cfg.x0.value_or(entry.x0);
  const Outcome out = iterate(method, entry.problem, x0, make_criteria(cfg));

  write_header(os, entry, method, x0, out);
  if (!out.converged()) os << "last iterate: " << format_shortest(out.root) << '\n';
  if (cfg.trace) {
    os << "trace:\n";
    for (std::size_t n = 0; n < out.trace.iterates.size(); ++n) {
      os << "  " << n << ' ' << format_shortest(out.trace.iterates[n]) << ' '
         << format_shortest(out.trace.residuals[n]) << '\n';
    }
  }
  return exit_code_for(out.status);
}

int cmd_compare(const Config& cfg, std::ostream& os) {
  std::vector<SuiteEntry> suite;
  const std::vector<std::string>& names = cfg.functions.empty() ? kFunctionNames : cfg.functions;
  for (const std::string& name : names) {
    SuiteEntry entry = *find_suite_entry(name);
    if (cfg.x0) entry.x0 = *cfg.x0;
    suite.push_back(std::move(entry));
  }
  std::vector<MethodId> methods;
  for (const std::string& label : cfg.methods) methods.push_back(make_method(cfg, label));

  const ComparisonTable table = run_comparison(suite, methods, make_criteria(cfg));
  os << format_table(table, cfg.format);
  return kExitOk;
}

int cmd_coc(const Config& cfg, std::ostream& os) {
  const SuiteEntry entry = *find_suite_entry(cfg.function);
  const MethodId method = make_method(cfg, cfg.method);
  const double x0 = cfg.x0.value_or(entry.x0);
  const Outcome out = iterate(method, entry.problem, x0, make_criteria(cfg));

  std::optional<ErrorCoefficients> coefficients;
  if (method.tag == MethodTag::HaarNewton && cfg.c2 && cfg.c3) {
    coefficients = ErrorCoefficients{*cfg.c2, *cfg.c3, method.haar_points};
  }
  const ConvergenceReport report = analyze(out, std::nullopt, coefficients);

  write_header(os, entry, method, x0, out);
  os << "usable_triples: " << report.usable_triples << '\n';
  const bool have_coc = std::isfinite(report.coc);
  os << "coc: " << (have_coc ? format_shortest(report.coc) : "unavailable (no usable triple)")
     << '\n';
  os << "empirical_error_constant: "
     << (std::isfinite(report.error_constant_empirical)
             ? format_shortest(report.error_constant_empirical)
             : "unavailable (no usable pair)")
     << '\n';
  if (coefficients) {
    os << "theoretical_error_constant: " << format_shortest(report.error_constant_theoretical)
       << '\n';
  }
  return have_coc ? kExitOk : kExitNotConverged;
}

void add_run_options(CLI::App& sub, Config& cfg) {
  sub.add_option("--m", cfg.m, "Haar resolution M; the new method uses 2M nodes")
      ->check(CLI::PositiveNumber);
  sub.add_option("--points", cfg.points, "Haar node count, overrides --m")
      ->check(CLI::PositiveNumber);
  sub.add_option("--x0", cfg.x0, "starting point (default: the suite value)");
  sub.add_option("--tol", cfg.tol, "step and residual tolerance")->check(CLI::PositiveNumber);
  sub.add_option("--max-iter", cfg.max_iter, "iteration cap")->check(CLI::PositiveNumber);
  sub.add_option("--fs-variant", cfg.fs_variant, "inner point of the FS method")
      ->check(CLI::IsMember({"as-printed", "standard-midpoint"}));
  sub.add_option("--out", cfg.out_path, "write the report to PATH instead of stdout");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config cfg;
  CLI::App app{"Third-order Newton-type root finders on the built-in benchmark equations",
               "haar_newton"};
  app.require_subcommand(1);

  CLI::App* solve = app.add_subcommand("solve", "solve one benchmark equation");
  solve->add_option("--function", cfg.function, "f1..f7")
      ->required()
      ->check(CLI::IsMember(kFunctionNames));
  solve->add_option("--method", cfg.method, "newton, wf, fs, oz, klw or new")
      ->required()
      ->check(CLI::IsMember(kMethodNames));
  solve->add_flag("--trace", cfg.trace, "print every iterate and residual");
  add_run_options(*solve, cfg);

  CLI::App* compare = app.add_subcommand("compare", "run the method comparison grid");
  compare->add_option("--functions", cfg.functions, "comma separated subset of f1..f7")
      ->delimiter(',')
      ->check(CLI::IsMember(kFunctionNames));
  compare->add_option("--methods", cfg.methods, "comma separated method labels")
      ->delimiter(',')
      ->check(CLI::IsMember(kMethodNames));
  compare->add_option("--format", cfg.format, "text, csv or json")
      ->check(CLI::IsMember({"text", "csv", "json"}));
  add_run_options(*compare, cfg);

  CLI::App* coc = app.add_subcommand("coc", "convergence order and error constant of one run");
  coc->add_option("--function", cfg.function, "f1..f7")
      ->required()
      ->check(CLI::IsMember(kFunctionNames));
  coc->add_option("--method", cfg.method, "newton, wf, fs, oz, klw or new")
      ->required()
      ->check(CLI::IsMember(kMethodNames));
  coc->add_option("--c2", cfg.c2, "C2 = f''(a)/(2 f'(a)) for the theoretical constant");
  coc->add_option("--c3", cfg.c3, "C3 = f'''(a)/(6 f'(a)) for the theoretical constant");
  add_run_options(*coc, cfg);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  std::ostringstream report;
  int code = kExitUsage;
  try {
    if (*solve) code = cmd_solve(cfg, report);
    else if (*compare) code = cmd_compare(cfg, report);
    else code = cmd_coc(cfg, report);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  if (cfg.out_path.empty()) {
    out << report.str();
  } else {
    std::ofstream file(cfg.out_path, std::ios::binary);
    if (!(file << report.str())) {
      err << "error: cannot write " << cfg.out_path << '\n';
      return kExitUsage;
    }
  }
  return code;
}

}  // namespace haar_newton::cli

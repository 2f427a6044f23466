#include "haar_newton/analysis.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

namespace haar_newton {

namespace {

bool in_coc_window(double e) {
  const double a = std::abs(e);
  return a > kCocErrorFloor && a < kCocErrorCeiling;
}

// Estimate from the triple ending at index n + 1, if it is usable.
std::optional<double> triple_order(std::span<const double> e, std::size_t n) {
  if (!in_coc_window(e[n - 1]) || !in_coc_window(e[n]) || !in_coc_window(e[n + 1])) {
    return std::nullopt;
  }
  const double denom = std::log(std::abs(e[n] / e[n - 1]));
  if (denom == 0.0) return std::nullopt;
  const double rho = std::log(std::abs(e[n + 1] / e[n])) / denom;
  if (!std::isfinite(rho)) return std::nullopt;
  return rho;
}

}  // namespace

std::vector<double> errors_from(const Trace& trace, double root) {
  std::vector<double> e;
  e.reserve(trace.iterates.size());
  for (double x : trace.iterates) e.push_back(x - root);
  return e;
}

std::optional<double> coc_of_errors(std::span<const double> errors) {
  if (errors.size() < 3) return std::nullopt;
  for (std::size_t n = errors.size() - 2; n >= 1; --n) {
    if (auto rho = triple_order(errors, n)) return rho;
  }
  return std::nullopt;
}

std::size_t usable_triples(std::span<const double> errors) {
  std::size_t count = 0;
  for (std::size_t n = 1; n + 1 < errors.size(); ++n) {
    if (triple_order(errors, n)) ++count;
  }
  return count;
}

std::optional<double> coc(const Trace& trace, double root) {
  if (!std::isfinite(root)) return std::nullopt;
  return coc_of_errors(errors_from(trace, root));
}

double theoretical_error_constant(double c2, double c3, std::size_t n_points) {
  if (n_points == 0) throw std::invalid_argument("n_points must be at least 1");
  const double n = static_cast<double>(n_points);
  return c2 * c2 - c3 / (4.0 * n * n);
}

std::optional<double> empirical_error_constant_of_errors(std::span<const double> errors,
                                                         double root) {
  if (!std::isfinite(root)) return std::nullopt;
  const double rounding = 8.0 * std::numeric_limits<double>::epsilon() * std::abs(root);
  for (std::size_t n = errors.size(); n-- > 1;) {
    const double prev = std::abs(errors[n - 1]);
    const double next = std::abs(errors[n]);
    if (!(prev > kConstantErrorFloor && prev <= kConstantErrorCeiling)) continue;
    if (!(next > rounding) || !std::isfinite(next)) continue;
    return next / (prev * prev * prev);
  }
  return std::nullopt;
}

std::optional<double> empirical_error_constant(const Trace& trace, double root) {
  return empirical_error_constant_of_errors(errors_from(trace, root), root);
}

ConvergenceReport analyze(const Outcome& outcome, std::optional<double> root,
                          std::optional<ErrorCoefficients> coefficients) {
  constexpr double nan = std::numeric_limits<double>::quiet_NaN();
  const double alpha = root.value_or(outcome.root);
  const std::vector<double> e = errors_from(outcome.trace, alpha);
  ConvergenceReport report{nan, nan, nan, 0};
  // A run that never converged has no root to measure errors against.
  if ((root || outcome.converged()) && std::isfinite(alpha)) {
    report.usable_triples = usable_triples(e);
    report.coc = coc_of_errors(e).value_or(nan);
    report.error_constant_empirical = empirical_error_constant_of_errors(e, alpha).value_or(nan);
  }
  if (coefficients) {
    report.error_constant_theoretical =
        theoretical_error_constant(coefficients->c2, coefficients->c3, coefficients->n_points);
  }
  return report;
}

std::string format_root(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%#.15g", value);
  return buf;
}

std::string classify(const Outcome& outcome) {
  switch (outcome.status) {
    case Status::Converged: return format_root(outcome.root);
    case Status::Diverged:
    case Status::MaxIterReached: return "Diverse";
    case Status::DerivativeBreakdown: return "Breakdown";
  }
  return "Unknown";
}

}  // namespace haar_newton

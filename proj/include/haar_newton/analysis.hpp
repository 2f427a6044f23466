#ifndef HAAR_NEWTON_ANALYSIS_HPP
#define HAAR_NEWTON_ANALYSIS_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "haar_newton/core.hpp"

namespace haar_newton {

// Error windows. Errors outside them are either pre-asymptotic or dominated
// by rounding.
inline constexpr double kCocErrorFloor = 1e-13;
inline constexpr double kCocErrorCeiling = 1.0;
inline constexpr double kConstantErrorFloor = 1e-10;
inline constexpr double kConstantErrorCeiling = 1e-2;

/// e_n = iterates[n] - root.
std::vector<double> errors_from(const Trace& trace, double root);

/// Computational order of convergence
///
///   rho = ln|e_{n+1}/e_n| / ln|e_n/e_{n-1}|
///
/// from the last triple whose errors all lie strictly inside
/// (kCocErrorFloor, kCocErrorCeiling). Empty when no triple qualifies.
std::optional<double> coc_of_errors(std::span<const double> errors);
std::optional<double> coc(const Trace& trace, double root);

/// Number of triples coc_of_errors() could use.
std::size_t usable_triples(std::span<const double> errors);

/// Asymptotic error constant of the Haar step, C2^2 - C3/(4N^2), where
/// C_k = f^(k)(alpha) / (k! f'(alpha)) and N is the node count.
double theoretical_error_constant(double c2, double c3, std::size_t n_points);

/// |e_{n+1}| / |e_n|^3 for the last pair with e_n in
/// (kConstantErrorFloor, kConstantErrorCeiling] and e_{n+1} nonzero and above
/// the rounding level of the root (8 ulp of |root|). Empty when no pair
/// qualifies.
std::optional<double> empirical_error_constant_of_errors(std::span<const double> errors,
                                                         double root = 0.0);
std::optional<double> empirical_error_constant(const Trace& trace, double root);

struct ConvergenceReport {
  double coc;                         // NaN unless usable_triples >= 1
  double error_constant_empirical;    // NaN when no usable pair
  double error_constant_theoretical;  // NaN unless C2 and C3 were supplied
  std::size_t usable_triples;
};

struct ErrorCoefficients {
  double c2;
  double c3;
  std::size_t n_points;
};

/// Diagnostics for one run. The root defaults to the run's own final
/// iterate; without an explicit root a non-converged run gets no estimates.
ConvergenceReport analyze(const Outcome& outcome, std::optional<double> root = std::nullopt,
                          std::optional<ErrorCoefficients> coefficients = std::nullopt);

/// Table text for an outcome: the root to 15 significant digits when
/// converged, "Diverse" for Diverged or MaxIterReached, "Breakdown" for a
/// derivative breakdown.
std::string classify(const Outcome& outcome);

/// printf("%#.15g"): 15 significant digits, trailing zeros kept.
std::string format_root(double value);

}  // namespace haar_newton

#endif  // HAAR_NEWTON_ANALYSIS_HPP

#ifndef HAAR_NEWTON_CORE_HPP
#define HAAR_NEWTON_CORE_HPP

#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace haar_newton {

using RealFunction = std::function<double(double)>;

/// A scalar equation f(x) = 0 together with its analytic derivative.
///
/// Immutable once built, so one instance can be shared by concurrent runs.
/// The derivative must be supplied by the caller; nothing in the library
/// differentiates numerically.
class Problem {
 public:
  /// Throws std::invalid_argument on an empty name or empty callable.
  Problem(std::string name, RealFunction f, RealFunction df);

  const std::string& name() const { return name_; }
  double f(double x) const { return f_(x); }
  double df(double x) const { return df_(x); }

 private:
  std::string name_;
  RealFunction f_;
  RealFunction df_;
};

struct EvalCounters {
  std::size_t n_f = 0;
  std::size_t n_df = 0;

  /// Number of function evaluations: f calls plus f' calls.
  std::size_t nfe() const { return n_f + n_df; }
  void reset() { n_f = n_df = 0; }
};

// Counted evaluations. Non-finite values are returned untouched.
double evaluate_f(const Problem& problem, double x, EvalCounters& counters);
double evaluate_df(const Problem& problem, double x, EvalCounters& counters);

struct StopCriteria {
  double step_tol = 1e-15;      // |x_{n+1} - x_n| <= step_tol
  double residual_tol = 1e-15;  // |f(x_{n+1})| <= residual_tol
  std::size_t max_iter = 100;
  double escape_radius = 1e8;   // |x_n| > escape_radius means divergence

  /// Throws std::invalid_argument unless every tolerance is positive and
  /// max_iter >= 1.
  void validate() const;
};

struct Trace {
  std::vector<double> iterates;   // x_0, x_1, ...
  std::vector<double> residuals;  // f(x_n) as evaluated during the run
  EvalCounters counters;
};

enum class Status { Converged, Diverged, MaxIterReached, DerivativeBreakdown };

std::string_view to_string(Status status);

struct Outcome {
  Status status = Status::MaxIterReached;
  double root = 0.0;  // final iterate
  std::size_t iterations = 0;
  std::size_t nfe = 0;
  Trace trace;

  bool converged() const { return status == Status::Converged; }
};

}  // namespace haar_newton

#endif  // HAAR_NEWTON_CORE_HPP

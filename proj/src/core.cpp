#include "haar_newton/core.hpp"

#include <stdexcept>
#include <utility>

namespace haar_newton {

Problem::Problem(std::string name, RealFunction f, RealFunction df)
    : name_(std::move(name)), f_(std::move(f)), df_(std::move(df)) {
  if (name_.empty()) throw std::invalid_argument("problem name must not be empty");
  if (!f_ || !df_) throw std::invalid_argument("problem '" + name_ + "' needs both f and f'");
}

double evaluate_f(const Problem& problem, double x, EvalCounters& counters) {
  ++counters.n_f;
  return problem.f(x);
}

double evaluate_df(const Problem& problem, double x, EvalCounters& counters) {
  ++counters.n_df;
  return problem.df(x);
}

void StopCriteria::validate() const {
  // Written as negated comparisons so NaN tolerances are rejected too.
  if (!(step_tol > 0.0)) throw std::invalid_argument("step_tol must be positive");
  if (!(residual_tol > 0.0)) throw std::invalid_argument("residual_tol must be positive");
  if (!(escape_radius > 0.0)) throw std::invalid_argument("escape_radius must be positive");
  if (max_iter < 1) throw std::invalid_argument("max_iter must be at least 1");
}

std::string_view to_string(Status status) {
  switch (status) {
    case Status::Converged: return "Converged";
    case Status::Diverged: return "Diverged";
    case Status::MaxIterReached: return "MaxIterReached";
    case Status::DerivativeBreakdown: return "DerivativeBreakdown";
  }
  return "Unknown";
}

}  // namespace haar_newton

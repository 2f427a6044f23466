#include "haar_newton/methods.hpp"

#include <cmath>
#include <stdexcept>

namespace haar_newton {

namespace {

bool usable_derivative(double value) { return value != 0.0 && std::isfinite(value); }

// Steps written against a residual fx = f(x) that the caller already holds
// and has already charged. These are what the driver runs.

std::optional<double> advance_newton(const Problem& p, double x, double fx, EvalCounters& c) {
  const double dfx = evaluate_df(p, x, c);
  if (!usable_derivative(dfx)) return std::nullopt;
  return x - fx / dfx;
}

std::optional<double> advance_wf(const Problem& p, double x, double fx, EvalCounters& c) {
  const double dfx = evaluate_df(p, x, c);
  if (!usable_derivative(dfx)) return std::nullopt;
  const double z = x - fx / dfx;
  const double denom = evaluate_df(p, z, c) + dfx;
  if (!usable_derivative(denom)) return std::nullopt;
  return x - 2.0 * fx / denom;
}

std::optional<double> advance_fs(const Problem& p, double x, double fx, EvalCounters& c,
                                 FsVariant variant) {
  const double dfx = evaluate_df(p, x, c);
  if (!usable_derivative(dfx)) return std::nullopt;
  const double d = fx / dfx;
  // The midpoint form multiplies by 0.5 after the quotient so that it matches
  // the one-node Haar step bit for bit.
  const double inner = variant == FsVariant::AsPrinted ? x - 2.0 * d : x - d * 0.5;
  const double dfi = evaluate_df(p, inner, c);
  if (!usable_derivative(dfi)) return std::nullopt;
  return x - fx / dfi;
}

std::optional<double> advance_oz(const Problem& p, double x, double fx, EvalCounters& c) {
  const double dfx = evaluate_df(p, x, c);
  if (!usable_derivative(dfx)) return std::nullopt;
  const double z = x - fx / dfx;
  const double dfz = evaluate_df(p, z, c);
  if (!usable_derivative(dfz)) return std::nullopt;
  return x - fx / 2.0 * (1.0 / dfx + 1.0 / dfz);
}

std::optional<double> advance_klw(const Problem& p, double x, double fx, EvalCounters& c) {
  const double dfx = evaluate_df(p, x, c);
  if (!usable_derivative(dfx)) return std::nullopt;
  const double fw = evaluate_f(p, x + fx / dfx, c);
  return x - (fw - fx) / dfx;
}

std::optional<double> advance_haar(const Problem& p, double x, double fx, EvalCounters& c,
                                   std::size_t points) {
  const double dfx = evaluate_df(p, x, c);
  if (!usable_derivative(dfx)) return std::nullopt;
  const double d = fx / dfx;
  const double n = static_cast<double>(points);
  double sum = 0.0;
  for (std::size_t k = 1; k <= points; ++k) {
    sum += evaluate_df(p, x - d * ((static_cast<double>(k) - 0.5) / n), c);
  }
  if (!usable_derivative(sum)) return std::nullopt;
  return x - n * fx / sum;
}

void require_points(std::size_t points) {
  if (points == 0) throw std::invalid_argument("HaarNewton needs at least one quadrature node");
}

std::optional<double> advance(const MethodId& m, const Problem& p, double x, double fx,
                              EvalCounters& c) {
  switch (m.tag) {
    case MethodTag::Newton: return advance_newton(p, x, fx, c);
    case MethodTag::WF: return advance_wf(p, x, fx, c);
    case MethodTag::FS: return advance_fs(p, x, fx, c, m.fs_variant);
    case MethodTag::OZ: return advance_oz(p, x, fx, c);
    case MethodTag::KLW: return advance_klw(p, x, fx, c);
    case MethodTag::HaarNewton: return advance_haar(p, x, fx, c, m.haar_points);
  }
  throw std::logic_error("unhandled method tag");
}

}  // namespace

std::string_view method_label(MethodTag tag) {
  switch (tag) {
    case MethodTag::Newton: return "newton";
    case MethodTag::WF: return "wf";
    case MethodTag::FS: return "fs";
    case MethodTag::OZ: return "oz";
    case MethodTag::KLW: return "klw";
    case MethodTag::HaarNewton: return "new";
  }
  return "unknown";
}

std::string_view method_display_name(MethodTag tag) {
  switch (tag) {
    case MethodTag::Newton: return "Newton";
    case MethodTag::WF: return "MNM(WF)";
    case MethodTag::FS: return "MNM(FS)";
    case MethodTag::OZ: return "MNM(OZ)";
    case MethodTag::KLW: return "MNM(KLW)";
    case MethodTag::HaarNewton: return "MNM New";
  }
  return "unknown";
}

std::optional<MethodTag> parse_method_label(std::string_view label) {
  for (MethodTag tag : {MethodTag::Newton, MethodTag::WF, MethodTag::FS, MethodTag::OZ,
                        MethodTag::KLW, MethodTag::HaarNewton}) {
    if (method_label(tag) == label) return tag;
  }
  return std::nullopt;
}

std::string_view fs_variant_label(FsVariant variant) {
  return variant == FsVariant::AsPrinted ? "as-printed" : "standard-midpoint";
}

std::optional<FsVariant> parse_fs_variant(std::string_view label) {
  if (label == "as-printed") return FsVariant::AsPrinted;
  if (label == "standard-midpoint") return FsVariant::StandardMidpoint;
  return std::nullopt;
}

std::size_t step_cost(const MethodId& method) {
  switch (method.tag) {
    case MethodTag::Newton: return 2;
    case MethodTag::HaarNewton: return 2 + method.haar_points;
    default: return 3;
  }
}

std::optional<double> newton_step(const Problem& problem, double x, EvalCounters& counters) {
  return advance_newton(problem, x, evaluate_f(problem, x, counters), counters);
}

std::optional<double> wf_step(const Problem& problem, double x, EvalCounters& counters) {
  return advance_wf(problem, x, evaluate_f(problem, x, counters), counters);
}

std::optional<double> fs_step(const Problem& problem, double x, EvalCounters& counters,
                              FsVariant variant) {
  return advance_fs(problem, x, evaluate_f(problem, x, counters), counters, variant);
}

std::optional<double> oz_step(const Problem& problem, double x, EvalCounters& counters) {
  return advance_oz(problem, x, evaluate_f(problem, x, counters), counters);
}

std::optional<double> klw_step(const Problem& problem, double x, EvalCounters& counters) {
  return advance_klw(problem, x, evaluate_f(problem, x, counters), counters);
}

std::optional<double> haar_newton_step(const Problem& problem, double x, EvalCounters& counters,
                                       std::size_t points) {
  require_points(points);
  return advance_haar(problem, x, evaluate_f(problem, x, counters), counters, points);
}

std::optional<double> step(const MethodId& method, const Problem& problem, double x,
                           EvalCounters& counters) {
  if (method.tag == MethodTag::HaarNewton) require_points(method.haar_points);
  return advance(method, problem, x, evaluate_f(problem, x, counters), counters);
}

Outcome iterate(const MethodId& method, const Problem& problem, double x0,
                const StopCriteria& criteria) {
  criteria.validate();
  if (!std::isfinite(x0)) throw std::invalid_argument("x0 must be finite");
  if (method.tag == MethodTag::HaarNewton) require_points(method.haar_points);

  Outcome out;
  Trace& trace = out.trace;
  EvalCounters& counters = trace.counters;

  double x = x0;
  double fx = problem.f(x);  // charged by the first step below
  trace.iterates.push_back(x);
  trace.residuals.push_back(fx);

  out.status = Status::MaxIterReached;
  for (std::size_t it = 0; it < criteria.max_iter; ++it) {
    ++counters.n_f;  // this step's own f(x_n)
    const std::optional<double> next = advance(method, problem, x, fx, counters);
    if (!next) {
      out.status = Status::DerivativeBreakdown;
      break;
    }
    const double x_next = *next;
    const double f_next = problem.f(x_next);
    trace.iterates.push_back(x_next);
    trace.residuals.push_back(f_next);

    if (!std::isfinite(x_next) || std::abs(x_next) > criteria.escape_radius) {
      out.status = Status::Diverged;
      x = x_next;
      break;
    }
    const bool small_step = std::abs(x_next - x) <= criteria.step_tol;
    x = x_next;
    fx = f_next;
    if (small_step || std::abs(f_next) <= criteria.residual_tol) {
      out.status = Status::Converged;
      break;
    }
  }

  out.root = x;
  out.iterations = trace.iterates.size() - 1;
  out.nfe = counters.nfe();
  return out;
}

}  // namespace haar_newton

#ifndef HAAR_NEWTON_METHODS_HPP
#define HAAR_NEWTON_METHODS_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "haar_newton/core.hpp"

namespace haar_newton {

enum class MethodTag { Newton, WF, FS, OZ, KLW, HaarNewton };

// Inner point of the Frontini-Sormani step. AsPrinted uses x - 2f/f',
// StandardMidpoint the classical midpoint x - f/(2f').
enum class FsVariant { AsPrinted, StandardMidpoint };

struct MethodId {
  MethodTag tag = MethodTag::HaarNewton;
  std::size_t haar_points = 2;  // HaarNewton only
  FsVariant fs_variant = FsVariant::StandardMidpoint;  // FS only

  static MethodId newton() { return {MethodTag::Newton}; }
  static MethodId wf() { return {MethodTag::WF}; }
  static MethodId fs(FsVariant variant = FsVariant::StandardMidpoint) {
    return {MethodTag::FS, 2, variant};
  }
  static MethodId oz() { return {MethodTag::OZ}; }
  static MethodId klw() { return {MethodTag::KLW}; }
  static MethodId haar_newton(std::size_t points = 2) {
    return {MethodTag::HaarNewton, points};
  }
};

/// Short label used on the command line and in csv/json: newton, wf, fs, oz,
/// klw, new.
std::string_view method_label(MethodTag tag);
/// Long label as printed in comparison tables, e.g. "MNM(WF)" or "MNM New".
std::string_view method_display_name(MethodTag tag);
std::optional<MethodTag> parse_method_label(std::string_view label);

std::string_view fs_variant_label(FsVariant variant);
std::optional<FsVariant> parse_fs_variant(std::string_view label);

/// Function evaluations charged per iteration: 2 for Newton, 3 for the four
/// competitors, 2 + P for HaarNewton.
std::size_t step_cost(const MethodId& method);

// Single steps. Each evaluates f(x) itself and charges every f and f' call to
// `counters`. An empty result is a derivative breakdown: some f' value (or
// the sum of f' values used as a denominator) was zero or non-finite.

std::optional<double> newton_step(const Problem& problem, double x, EvalCounters& counters);

/// Weerakoon-Fernando: x - 2f(x) / (f'(z) + f'(x)), z the Newton point.
std::optional<double> wf_step(const Problem& problem, double x, EvalCounters& counters);

std::optional<double> fs_step(const Problem& problem, double x, EvalCounters& counters,
                              FsVariant variant);

/// Ozban: x - f(x)/2 * (1/f'(x) + 1/f'(z)), z the Newton point.
std::optional<double> oz_step(const Problem& problem, double x, EvalCounters& counters);

/// Kou-Li-Wang: x - (f(x + f/f') - f(x)) / f'(x).
std::optional<double> klw_step(const Problem& problem, double x, EvalCounters& counters);

/// Haar-wavelet modified Newton step with P quadrature nodes:
///
///   d = f(x)/f'(x)
///   x - P f(x) / sum_{k=1..P} f'(x - d (k - 0.5)/P)
///
/// With P = 1 this performs exactly the arithmetic of the standard midpoint
/// FS step. Throws std::invalid_argument if points == 0.
std::optional<double> haar_newton_step(const Problem& problem, double x, EvalCounters& counters,
                                       std::size_t points);

std::optional<double> step(const MethodId& method, const Problem& problem, double x,
                           EvalCounters& counters);

/// Runs `method` from x0 until the stop criteria decide.
///
/// Each iteration is charged exactly step_cost(method) evaluations. The
/// residual f(x_{n+1}) used for the convergence test is the value the next
/// step needs anyway, so it is charged only if another step follows; on the
/// final iterate it is a diagnostic evaluation recorded in the trace but left
/// out of Outcome::nfe.
///
/// Breakdowns and divergence are reported through Outcome::status. Throws
/// std::invalid_argument for a non-finite x0, invalid criteria or a zero
/// HaarNewton node count.
Outcome iterate(const MethodId& method, const Problem& problem, double x0,
                const StopCriteria& criteria = {});

}  // namespace haar_newton

#endif  // HAAR_NEWTON_METHODS_HPP

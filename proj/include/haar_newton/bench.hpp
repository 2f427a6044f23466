#ifndef HAAR_NEWTON_BENCH_HPP
#define HAAR_NEWTON_BENCH_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "haar_newton/core.hpp"
#include "haar_newton/methods.hpp"

namespace haar_newton {

struct SuiteEntry {
  Problem problem;
  double x0;
};

/// The seven benchmark equations f1..f7 with their reference starting points:
///
///   f1 = x^5 - x + 1              x0 = 2
///   f2 = cos x - x                x0 = 1.2
///   f3 = arctan x                 x0 = 3
///   f4 = 10 x exp(-x^2) - 1       x0 = 2.5
///   f5 = exp(-x) sin x + ln(x^2 + 1)   x0 = 1.3
///   f6 = x^3 - exp(-x)            x0 = 2
///   f7 = exp(-x) - cos x          x0 = 2
std::vector<SuiteEntry> builtin_suite();

/// Looks up one entry of builtin_suite() by name.
std::optional<SuiteEntry> find_suite_entry(std::string_view name);

/// WF, FS, OZ, KLW, New: the column order of the reference comparison.
std::vector<MethodId> paper_methods(std::size_t haar_points = 2,
                                    FsVariant fs_variant = FsVariant::StandardMidpoint);

struct ComparisonRow {
  std::string function;
  double x0;
  MethodId method;
  Status status;
  std::size_t iterations;
  std::size_t nfe;
  double root;            // final iterate
  std::string root_text;  // classify() of the run
};

struct ComparisonTable {
  std::vector<ComparisonRow> rows;
};

/// One iterate() per (entry, method), rows in suite order then method order.
/// Throws std::invalid_argument for an empty suite or method list.
ComparisonTable run_comparison(std::span<const SuiteEntry> suite,
                               std::span<const MethodId> methods,
                               const StopCriteria& criteria = {});

enum class TableFormat { Text, Csv, Json };

std::optional<TableFormat> parse_table_format(std::string_view name);

/// Throws std::invalid_argument listing text, csv and json for an unknown name.
std::string format_table(const ComparisonTable& table, std::string_view format);
std::string format_table(const ComparisonTable& table, TableFormat format);

/// Shortest decimal text that parses back to the same double.
std::string format_shortest(double value);

}  // namespace haar_newton

#endif  // HAAR_NEWTON_BENCH_HPP

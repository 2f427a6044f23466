#include "haar_newton/bench.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "haar_newton/analysis.hpp"
#include "json.hpp"

namespace haar_newton {

std::vector<SuiteEntry> builtin_suite() {
  std::vector<SuiteEntry> suite;
  suite.reserve(7);
  suite.push_back({Problem("f1", [](double x) { return std::pow(x, 5) - x + 1.0; },
                           [](double x) { return 5.0 * std::pow(x, 4) - 1.0; }),
                   2.0});
  suite.push_back({Problem("f2", [](double x) { return std::cos(x) - x; },
                           [](double x) { return -std::sin(x) - 1.0; }),
                   1.2});
  suite.push_back({Problem("f3", [](double x) { return std::atan(x); },
                           [](double x) { return 1.0 / (1.0 + x * x); }),
                   3.0});
  suite.push_back({Problem("f4", [](double x) { return 10.0 * x * std::exp(-x * x) - 1.0; },
                           [](double x) { return 10.0 * std::exp(-x * x) * (1.0 - 2.0 * x * x); }),
                   2.5});
  suite.push_back(
      {Problem("f5", [](double x) { return std::exp(-x) * std::sin(x) + std::log(x * x + 1.0); },
               [](double x) {
                 return std::exp(-x) * (std::cos(x) - std::sin(x)) + 2.0 * x / (x * x + 1.0);
               }),
       1.3});
  suite.push_back({Problem("f6", [](double x) { return std::pow(x, 3) - std::exp(-x); },
                           [](double x) { return 3.0 * x * x + std::exp(-x); }),
                   2.0});
  suite.push_back({Problem("f7", [](double x) { return std::exp(-x) - std::cos(x); },
                           [](double x) { return -std::exp(-x) + std::sin(x); }),
                   2.0});
  return suite;
}

std::optional<SuiteEntry> find_suite_entry(std::string_view name) {
  for (SuiteEntry& entry : builtin_suite()) {
    if (entry.problem.name() == name) return std::move(entry);
  }
  return std::nullopt;
}

std::vector<MethodId> paper_methods(std::size_t haar_points, FsVariant fs_variant) {
  return {MethodId::wf(), MethodId::fs(fs_variant), MethodId::oz(), MethodId::klw(),
          MethodId::haar_newton(haar_points)};
}

ComparisonTable run_comparison(std::span<const SuiteEntry> suite,
                               std::span<const MethodId> methods,
                               const StopCriteria& criteria) {
  if (suite.empty()) throw std::invalid_argument("comparison needs at least one suite entry");
  if (methods.empty()) throw std::invalid_argument("comparison needs at least one method");

  ComparisonTable table;
  table.rows.reserve(suite.size() * methods.size());
  for (const SuiteEntry& entry : suite) {
    for (const MethodId& method : methods) {
      const Outcome out = iterate(method, entry.problem, entry.x0, criteria);
      table.rows.push_back({entry.problem.name(), entry.x0, method, out.status, out.iterations,
                            out.nfe, out.root, classify(out)});
    }
  }
  return table;
}

std::optional<TableFormat> parse_table_format(std::string_view name) {
  if (name == "text") return TableFormat::Text;
  if (name == "csv") return TableFormat::Csv;
  if (name == "json") return TableFormat::Json;
  return std::nullopt;
}

std::string format_shortest(double value) {
  std::array<char, 64> buf{};
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  if (ec != std::errc{}) throw std::runtime_error("cannot format number");
  return std::string(buf.data(), end);
}

namespace {

std::string render_csv(const ComparisonTable& table) {
  std::string out = "function,x0,method,status,iterations,nfe,root\n";
  for (const ComparisonRow& row : table.rows) {
    out += row.function;
    out += ',' + format_shortest(row.x0);
    out += ',' + std::string(method_label(row.method.tag));
    out += ',' + std::string(to_string(row.status));
    out += ',' + std::to_string(row.iterations);
    out += ',' + std::to_string(row.nfe);
    out += ",\"" + row.root_text + "\"\n";
  }
  return out;
}

std::string render_json(const ComparisonTable& table) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const ComparisonRow& row : table.rows) {
    rows.push_back({{"function", row.function},
                    {"x0", row.x0},
                    {"method", method_label(row.method.tag)},
                    {"status", to_string(row.status)},
                    {"iterations", row.iterations},
                    {"nfe", row.nfe},
                    {"root", row.root_text}});
  }
  return rows.dump(2) + "\n";
}

// Iteration and evaluation counts are left blank for runs that did not
// converge, as in the published table.
std::string render_text(const ComparisonTable& table) {
  using Cells = std::array<std::string, 6>;
  std::vector<Cells> lines;
  lines.push_back({"Function", "x0", "Method", "IT", "NFE", "x_n"});
  for (const ComparisonRow& row : table.rows) {
    const bool ok = row.status == Status::Converged;
    lines.push_back({row.function, format_shortest(row.x0),
                     std::string(method_display_name(row.method.tag)),
                     ok ? std::to_string(row.iterations) : "", ok ? std::to_string(row.nfe) : "",
                     row.root_text});
  }
  std::array<std::size_t, 6> width{};
  for (const Cells& cells : lines) {
    for (std::size_t i = 0; i < cells.size(); ++i) width[i] = std::max(width[i], cells[i].size());
  }
  std::ostringstream os;
  auto emit = [&](const Cells& cells) {
    std::string line;
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i > 0) line += "  ";
      line += cells[i];
      if (i + 1 < cells.size()) line.append(width[i] - cells[i].size(), ' ');
    }
    os << line << '\n';
  };
  emit(lines.front());
  std::size_t total = 0;
  for (std::size_t w : width) total += w;
  os << std::string(total + 2 * (width.size() - 1), '-') << '\n';
  for (std::size_t i = 1; i < lines.size(); ++i) emit(lines[i]);
  return os.str();
}

}  // namespace

std::string format_table(const ComparisonTable& table, TableFormat format) {
  switch (format) {
    case TableFormat::Text: return render_text(table);
    case TableFormat::Csv: return render_csv(table);
    case TableFormat::Json: return render_json(table);
  }
  throw std::logic_error("unhandled table format");
}

std::string format_table(const ComparisonTable& table, std::string_view format) {
  const std::optional<TableFormat> parsed = parse_table_format(format);
  if (!parsed) {
    throw std::invalid_argument("unknown format '" + std::string(format) +
                                "' (supported: text, csv, json)");
  }
  return format_table(table, *parsed);
}

}  // namespace haar_newton

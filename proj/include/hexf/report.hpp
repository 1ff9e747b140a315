#ifndef HEXF_REPORT_HPP
#define HEXF_REPORT_HPP

#include <array>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace hexf {

/// Tabular experiment output: one row per sweep point plus named fitted
/// constants. Serializes to CSV (one row per entry) and JSON.
struct ExperimentReport {
  std::string method;
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
  std::vector<std::pair<std::string, double>> constants;

  void add_row(std::vector<double> row);
  void set_constant(const std::string& name, double value);
  double constant(const std::string& name) const;

  /// header: free-form comment emitted as a leading '# ' line (CSV only).
  void write_csv(std::ostream& out, const std::string& header = {}) const;
  void write_json(std::ostream& out, const std::string& header = {}) const;
};

/// Least-squares fit y ~ a + b x; returns {a, b, r_squared}.
std::array<double, 3> linear_fit(const std::vector<double>& x,
                                 const std::vector<double>& y);

}  // namespace hexf

#endif

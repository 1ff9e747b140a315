#include "hexf/report.hpp"

#include <array>
#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace hexf {

void ExperimentReport::add_row(std::vector<double> row) {
  if (row.size() != columns.size())
    throw std::invalid_argument("report row width does not match columns");
  rows.push_back(std::move(row));
}

void ExperimentReport::set_constant(const std::string& name, double value) {
  for (auto& [k, v] : constants) {
    if (k == name) {
      v = value;
      return;
    }
  }
  constants.emplace_back(name, value);
}

double ExperimentReport::constant(const std::string& name) const {
  for (const auto& [k, v] : constants) {
    if (k == name) return v;
  }
  throw std::out_of_range("report constant not found: " + name);
}

namespace {

void print_number(std::ostream& out, double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  out << buf;
}

}  // namespace

void ExperimentReport::write_csv(std::ostream& out,
                                 const std::string& header) const {
  if (!header.empty()) out << "# " << header << "\n";
  out << "method";
  for (const auto& c : columns) out << "," << c;
  out << "\n";
  for (const auto& row : rows) {
    out << method;
    for (double v : row) {
      out << ",";
      print_number(out, v);
    }
    out << "\n";
  }
  for (const auto& [k, v] : constants) {
    out << "# " << k << " = ";
    print_number(out, v);
    out << "\n";
  }
}

void ExperimentReport::write_json(std::ostream& out,
                                  const std::string& header) const {
  out << "{\n  \"method\": \"" << method << "\",\n";
  if (!header.empty()) out << "  \"meta\": \"" << header << "\",\n";
  out << "  \"columns\": [";
  for (size_t i = 0; i < columns.size(); ++i)
    out << (i ? ", " : "") << "\"" << columns[i] << "\"";
  out << "],\n  \"rows\": [";
  for (size_t r = 0; r < rows.size(); ++r) {
    out << (r ? ",\n    " : "\n    ") << "[";
    for (size_t i = 0; i < rows[r].size(); ++i) {
      out << (i ? ", " : "");
      print_number(out, rows[r][i]);
    }
    out << "]";
  }
  out << "\n  ],\n  \"constants\": {";
  for (size_t i = 0; i < constants.size(); ++i) {
    out << (i ? ", " : "") << "\"" << constants[i].first << "\": ";
    print_number(out, constants[i].second);
  }
  out << "}\n}\n";
}

std::array<double, 3> linear_fit(const std::vector<double>& x,
                                 const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2)
    throw std::invalid_argument("linear_fit: need matching inputs, >= 2 points");
  const double n = static_cast<double>(x.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
    sxx += x[i] * x[i];
    sxy += x[i] * y[i];
  }
  const double denom = n * sxx - sx * sx;
  if (denom == 0.0) throw std::invalid_argument("linear_fit: degenerate x");
  const double b = (n * sxy - sx * sy) / denom;
  const double a = (sy - b * sx) / n;
  double ss_res = 0, ss_tot = 0;
  const double ybar = sy / n;
  for (size_t i = 0; i < x.size(); ++i) {
    const double fit = a + b * x[i];
    ss_res += (y[i] - fit) * (y[i] - fit);
    ss_tot += (y[i] - ybar) * (y[i] - ybar);
  }
  const double r2 = ss_tot == 0.0 ? 1.0 : 1.0 - ss_res / ss_tot;
  return {a, b, r2};
}

}  // namespace hexf

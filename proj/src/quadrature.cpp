#include "hexf/quadrature.hpp"

#include <cmath>
#include <cstdio>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "hexf/parallel.hpp"

namespace hexf {

GridFunction::GridFunction(int n, std::vector<Cplx> values)
    : n_(n), values_(std::move(values)) {
  if (n_ < 1) throw std::invalid_argument("GridFunction: N must be >= 1");
  if (values_.size() != static_cast<size_t>(n_) * n_)
    throw std::invalid_argument("GridFunction: expected N^2 values");
}

GridFunction sample(const HexFunction& f, int n) {
  if (n < 1) throw std::invalid_argument("sample: N must be >= 1");
  std::vector<Cplx> vals(static_cast<size_t>(n) * n);
  parallel_for(vals.size(), [&](size_t begin, size_t end) {
    for (size_t i = begin; i < end; ++i) {
      const int a = static_cast<int>(i) / n;
      const int b = static_cast<int>(i) % n;
      vals[i] = f(s_to_t(static_cast<double>(a) / n, static_cast<double>(b) / n));
    }
  });
  return GridFunction(n, std::move(vals));
}

Cplx mean_integral(const GridFunction& g) {
  Cplx acc{0.0, 0.0};
  for (const Cplx& v : g.values()) acc += v;
  return acc / static_cast<double>(g.values().size());
}

double lp_norm(const GridFunction& g, double p) {
  if (!(p >= 1.0)) throw std::invalid_argument("lp_norm: p must be >= 1");
  if (std::isinf(p)) {
    double mx = 0.0;
    for (const Cplx& v : g.values()) mx = std::max(mx, std::abs(v));
    return mx;
  }
  double acc = 0.0;
  for (const Cplx& v : g.values()) acc += std::pow(std::abs(v), p);
  acc /= static_cast<double>(g.values().size());
  return std::pow(kOmegaArea * acc, 1.0 / p);
}

Cplx inner_product_h(const GridFunction& f, const GridFunction& g) {
  if (f.grid_n() != g.grid_n())
    throw std::invalid_argument("inner_product_h: grid sizes differ");
  Cplx acc{0.0, 0.0};
  const auto& a = f.values();
  const auto& b = g.values();
  for (size_t i = 0; i < a.size(); ++i) acc += a[i] * std::conj(b[i]);
  return acc / static_cast<double>(a.size());
}

std::vector<HexPoint> triangle_nodes(int m) {
  if (m < 1) throw std::invalid_argument("triangle_nodes: M must be >= 1");
  std::vector<HexPoint> nodes;
  nodes.reserve(static_cast<size_t>(m) * m);
  const double h = 1.0 / m;
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m - i; ++j) {
      // upward subtriangle centroid
      nodes.push_back({(3 * i + 1) * h / 3.0, (3 * j + 1) * h / 3.0});
      if (i + j < m - 1) {
        // downward subtriangle centroid
        nodes.push_back({(3 * i + 2) * h / 3.0, (3 * j + 2) * h / 3.0});
      }
    }
  }
  return nodes;
}

Cplx inner_product_delta(const HexFunction& f, const HexFunction& g, int m) {
  const auto nodes = triangle_nodes(m);
  std::vector<Cplx> terms(nodes.size());
  parallel_for(nodes.size(), [&](size_t begin, size_t end) {
    for (size_t i = begin; i < end; ++i)
      terms[i] = f(nodes[i]) * std::conj(g(nodes[i]));
  });
  Cplx acc{0.0, 0.0};
  for (const Cplx& v : terms) acc += v;
  return acc / static_cast<double>(nodes.size());
}

void write_csv(const GridFunction& g, std::ostream& out) {
  out << g.grid_n() << "\n";
  char buf[128];
  for (int a = 0; a < g.grid_n(); ++a) {
    for (int b = 0; b < g.grid_n(); ++b) {
      const Cplx v = g.at(a, b);
      std::snprintf(buf, sizeof buf, "%d,%d,%.17g,%.17g\n", a, b, v.real(),
                    v.imag());
      out << buf;
    }
  }
}

GridFunction read_grid_csv(std::istream& in) {
  std::string line;
  do {
    if (!std::getline(in, line)) throw std::runtime_error("grid csv: empty input");
  } while (!line.empty() && line[0] == '#');
  const int n = std::stoi(line);
  if (n < 1) throw std::runtime_error("grid csv: bad N header");
  std::vector<Cplx> vals(static_cast<size_t>(n) * n,
                         Cplx{std::numeric_limits<double>::quiet_NaN(), 0.0});
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream row(line);
    int a = 0, b = 0;
    double re = 0.0, im = 0.0;
    char sep = ',';
    if (!(row >> a >> sep >> b >> sep >> re >> sep >> im))
      throw std::runtime_error("grid csv: malformed row: " + line);
    if (a < 0 || a >= n || b < 0 || b >= n)
      throw std::runtime_error("grid csv: index out of range");
    vals[static_cast<size_t>(a) * n + b] = Cplx{re, im};
  }
  for (const Cplx& v : vals) {
    if (std::isnan(v.real())) throw std::runtime_error("grid csv: missing rows");
  }
  return GridFunction(n, std::move(vals));
}

}  // namespace hexf

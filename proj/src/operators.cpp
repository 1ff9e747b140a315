#include "hexf/operators.hpp"

#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "hexf/dft.hpp"
#include "hexf/kernels.hpp"

#include "json.hpp"

namespace hexf {

Cplx CoeffTable::at(HexIndex j) const {
  auto it = entries_.find(j);
  return it == entries_.end() ? Cplx{0.0, 0.0} : it->second;
}

int CoeffTable::max_degree() const {
  int deg = 0;
  for (const auto& [j, c] : entries_) deg = std::max(deg, j.degree());
  return deg;
}

bool CoeffTable::is_real_symmetric(double tol) const {
  for (const auto& [j, c] : entries_) {
    if (std::abs(at(-j) - std::conj(c)) > tol) return false;
  }
  return true;
}

void CoeffTable::write_json(std::ostream& out) const {
  char buf[96];
  out << "{\n  \"entries\": [";
  bool first = true;
  for (const auto& [j, c] : entries_) {
    out << (first ? "\n" : ",\n");
    first = false;
    std::snprintf(buf, sizeof buf,
                  "    {\"j\": [%d, %d, %d], \"re\": %.17g, \"im\": %.17g}",
                  j.j1, j.j2, j.j3(), c.real(), c.imag());
    out << buf;
  }
  out << "\n  ],\n  \"grid_N\": " << grid_n_ << "\n}\n";
}

CoeffTable CoeffTable::read_json(std::istream& in) {
  nlohmann::json doc = nlohmann::json::parse(in);
  CoeffTable table;
  for (const auto& e : doc.at("entries")) {
    const auto& j = e.at("j");
    const int j1 = j.at(0).get<int>();
    const int j2 = j.at(1).get<int>();
    const int j3 = j.at(2).get<int>();
    if (j1 + j2 + j3 != 0)
      throw std::runtime_error("coeff json: index off the plane j1+j2+j3=0");
    table.set(HexIndex{j1, j2},
              Cplx{e.at("re").get<double>(), e.at("im").get<double>()});
  }
  table.set_grid_n(doc.value("grid_N", 0));
  return table;
}

CoeffTable coefficients(const HexFunction& f, int n) {
  if (n < 0) throw std::invalid_argument("coefficients: n must be >= 0");
  const int grid = required_grid(n);
  const GridFunction g = sample(f, grid);
  const auto bins = dft::forward(g.values(), grid);
  const double scale = 1.0 / (static_cast<double>(grid) * grid);
  CoeffTable table;
  for (HexIndex j : index_ball(n)) {
    const int p = ((j.j1 % grid) + grid) % grid;
    const int q = ((j.j2 % grid) + grid) % grid;
    table.set(j, bins[static_cast<size_t>(p) * grid + q] * scale);
  }
  table.set_grid_n(grid);
  return table;
}

Cplx evaluate(const CoeffTable& c, HexPoint t) {
  const auto s = t_to_s(t);
  Cplx acc{0.0, 0.0};
  for (const auto& [j, v] : c.entries()) {
    acc += v * std::polar(1.0, 2.0 * M_PI * (j.j1 * s[0] + j.j2 * s[1]));
  }
  return acc;
}

GridFunction synthesize(const CoeffTable& c, int n) {
  if (n < 1) throw std::invalid_argument("synthesize: N must be >= 1");
  std::vector<Cplx> bins(static_cast<size_t>(n) * n, Cplx{0.0, 0.0});
  for (const auto& [j, v] : c.entries()) {
    const int p = ((j.j1 % n) + n) % n;
    const int q = ((j.j2 % n) + n) % n;
    bins[static_cast<size_t>(p) * n + q] += v;
  }
  return GridFunction(n, dft::inverse(bins, n));
}

CoeffTable partial_sum(const CoeffTable& c, int n) {
  if (n < 0) throw std::invalid_argument("partial_sum: n must be >= 0");
  CoeffTable out;
  for (const auto& [j, v] : c.entries()) {
    if (j.degree() <= n) out.set(j, v);
  }
  out.set_grid_n(c.grid_n());
  return out;
}

CoeffTable cesaro_means(const CoeffTable& c, int n, double delta) {
  if (n < 0) throw std::invalid_argument("cesaro_means: n must be >= 0");
  if (!(delta >= 0.0)) throw std::invalid_argument("cesaro_means: delta must be >= 0");
  CoeffTable out;
  for (const auto& [j, v] : c.entries()) {
    const int d = j.degree();
    if (d <= n) out.set(j, v * cesaro_weight(n, delta, d));
  }
  out.set_grid_n(c.grid_n());
  return out;
}

CoeffTable abel_means(const CoeffTable& c, double r) {
  if (!(r >= 0.0 && r < 1.0))
    throw std::invalid_argument("abel_means: r must be in [0,1)");
  CoeffTable out;
  for (const auto& [j, v] : c.entries()) {
    const int d = j.degree();
    const Cplx w = v * std::pow(r, d);
    if (d == 0 || r > 0.0) out.set(j, w);
  }
  out.set_grid_n(c.grid_n());
  return out;
}

namespace {

// w(m) = sum_{k=m}^{2n} eta(k/n) - sum_{k=m+1}^{2n} eta(k/n): per-shell
// differencing of the literal kernel expansion; collapses to eta(m/n).
std::vector<double> cutoff_weights(int n) {
  std::vector<double> tail(static_cast<size_t>(2 * n) + 2, 0.0);
  for (int k = 2 * n; k >= 0; --k) {
    tail[k] = tail[k + 1] + eta_cutoff(static_cast<double>(k) / n);
  }
  std::vector<double> w(static_cast<size_t>(2 * n) + 1);
  for (int m = 0; m <= 2 * n; ++m) w[m] = tail[m] - tail[m + 1];
  return w;
}

}  // namespace

CoeffTable smoothed_cutoff(const CoeffTable& c, int n) {
  if (n < 1) throw std::invalid_argument("smoothed_cutoff: n must be >= 1");
  const auto w = cutoff_weights(n);
  CoeffTable out;
  for (const auto& [j, v] : c.entries()) {
    const int d = j.degree();
    if (d > 2 * n) continue;
    const double weight = w[static_cast<size_t>(d)];
    if (weight != 0.0) out.set(j, v * weight);
  }
  out.set_grid_n(c.grid_n());
  return out;
}

std::map<HexIndex, double> jackson_multiplier(int n, int r, int rho) {
  if (r < 1) throw std::invalid_argument("jackson_op: r must be >= 1");
  if (rho <= 0) rho = (r + 2 + 1) / 2;  // ceil((r+2)/2)
  if (2 * rho < r + 2)
    throw std::invalid_argument("jackson_op: need rho >= (r+2)/2");
  if (n < rho) throw std::invalid_argument("jackson_op: need n >= rho");
  const int nstar = n / rho + 1;
  const int deg_kernel = 2 * rho * nstar;
  const CoeffTable kernel_hat = coefficients(
      [nstar, rho](HexPoint t) { return Cplx(jackson_kernel(nstar, rho, t), 0.0); },
      deg_kernel);
  std::map<HexIndex, double> mult;
  for (HexIndex l : index_ball(n)) {
    double acc = 0.0;
    double binom = 1.0;
    for (int k = 1; k <= r; ++k) {
      binom = binom * (r - k + 1) / k;  // C(r,k)
      const HexIndex kl = l * k;
      if (kl.degree() <= deg_kernel) {
        const double jh = kernel_hat.at(kl).real();
        acc += ((k % 2 == 1) ? 1.0 : -1.0) * binom * kOmegaArea * jh;
      }
    }
    mult[l] = acc;
  }
  return mult;
}

CoeffTable jackson_op(const HexFunction& f, int n, int r, int rho) {
  const auto mult = jackson_multiplier(n, r, rho);
  const int rho_eff = rho <= 0 ? (r + 2 + 1) / 2 : rho;
  const int nstar = n / rho_eff + 1;
  // Extraction grid sized for the kernel-times-polynomial integrand.
  const int extract_deg = 2 * rho_eff * nstar;
  CoeffTable fc = coefficients(f, extract_deg);
  CoeffTable out;
  for (const auto& [l, w] : mult) {
    out.set(l, fc.at(l) * w);
  }
  out.set_grid_n(fc.grid_n());
  return out;
}

CoeffTable derivative(const CoeffTable& c, std::array<int, 3> alpha) {
  for (int a : alpha) {
    if (a < 0) throw std::invalid_argument("derivative: alpha must be >= 0");
  }
  const int total = alpha[0] + alpha[1] + alpha[2];
  const Cplx scale = std::pow(Cplx{0.0, 2.0 * M_PI / 3.0}, total);
  CoeffTable out;
  for (const auto& [j, v] : c.entries()) {
    double f = 1.0;
    f *= std::pow(static_cast<double>(j.j1), alpha[0]);
    f *= std::pow(static_cast<double>(j.j2), alpha[1]);
    f *= std::pow(static_cast<double>(j.j3()), alpha[2]);
    out.set(j, v * scale * f);
  }
  out.set_grid_n(c.grid_n());
  return out;
}

}  // namespace hexf

#include "hexf/approx.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "hexf/kernels.hpp"

namespace hexf {

void ModulusSpec::validate() const {
  if (r < 1) throw std::invalid_argument("modulus: r must be >= 1");
  if (!(h > 0.0)) throw std::invalid_argument("modulus: h must be > 0");
  if (!(p >= 1.0)) throw std::invalid_argument("modulus: p must be >= 1");
  if (direction_count < 8) throw std::invalid_argument("modulus: need >= 8 directions");
  if (radius_count < 4) throw std::invalid_argument("modulus: need >= 4 radii");
  if (grid_n < 1) throw std::invalid_argument("modulus: grid must be >= 1");
}

HexFunction finite_difference(const HexFunction& f, HexPoint t, int r) {
  if (r < 1) throw std::invalid_argument("finite_difference: r must be >= 1");
  // binomial row with alternating signs, (-1)^{r-k} C(r,k)
  std::vector<double> w(static_cast<size_t>(r) + 1);
  double binom = 1.0;
  for (int k = 0; k <= r; ++k) {
    if (k > 0) binom = binom * (r - k + 1) / k;
    w[static_cast<size_t>(k)] = ((r - k) % 2 == 0 ? 1.0 : -1.0) * binom;
  }
  return [f, t, r, w](HexPoint x) {
    Cplx acc{0.0, 0.0};
    for (int k = 0; k <= r; ++k) {
      acc += w[static_cast<size_t>(k)] * f(x + t * static_cast<double>(k));
    }
    return acc;
  };
}

namespace {

// In-plane direction of planar norm 1 at angle a, built from an
// orthonormal basis of {t1+t2+t3=0} and rescaled to the (t1,t2) length.
HexPoint unit_direction(double a) {
  // e1 = (1,-1,0)/sqrt2, e2 = (1,1,-2)/sqrt6
  const double inv2 = 1.0 / std::sqrt(2.0);
  const double inv6 = 1.0 / std::sqrt(6.0);
  HexPoint u{std::cos(a) * inv2 + std::sin(a) * inv6,
             -std::cos(a) * inv2 + std::sin(a) * inv6};
  const double len = planar_norm(u);
  return u * (1.0 / len);
}

}  // namespace

double modulus(const HexFunction& f, const ModulusSpec& spec) {
  spec.validate();
  double best = 0.0;
  for (int i = 0; i < spec.direction_count; ++i) {
    const HexPoint dir = unit_direction(2.0 * M_PI * i / spec.direction_count);
    for (int k = 1; k <= spec.radius_count; ++k) {
      const HexPoint t = dir * (spec.h * k / spec.radius_count);
      const GridFunction diff = sample(finite_difference(f, t, spec.r), spec.grid_n);
      best = std::max(best, lp_norm(diff, spec.p));
    }
  }
  return best;
}

double best_approx_l2(const CoeffTable& c, int n) {
  if (n < 0) throw std::invalid_argument("best_approx_l2: n must be >= 0");
  double acc = 0.0;
  for (const auto& [j, v] : c.entries()) {
    if (j.degree() > n) acc += std::norm(v);
  }
  return std::sqrt(kOmegaArea * acc);
}

double near_best(const HexFunction& f, int n, double p) {
  if (n < 1) throw std::invalid_argument("near_best: n must be >= 1");
  if (!(p >= 1.0)) throw std::invalid_argument("near_best: p must be >= 1");
  const CoeffTable c = coefficients(f, 2 * n);
  const CoeffTable smoothed = smoothed_cutoff(c, n);
  const int grid = std::max(129, 8 * n + 1);
  GridFunction approx = synthesize(smoothed, grid);
  const GridFunction exact = sample(f, grid);
  for (size_t i = 0; i < approx.values().size(); ++i)
    approx.values()[i] -= exact.values()[i];
  return lp_norm(approx, p);
}

double lebesgue_constant(int n) {
  if (n < 0) throw std::invalid_argument("lebesgue_constant: n must be >= 0");
  const int grid = std::max(513, 8 * n + 1);
  const GridFunction d = sample(
      [n](HexPoint t) { return Cplx(std::fabs(dirichlet(n, t)), 0.0); }, grid);
  return mean_integral(d).real();
}

double bernstein_ratio(const CoeffTable& c, std::array<int, 3> alpha, double p) {
  if (c.empty()) throw std::invalid_argument("bernstein_ratio: empty table");
  double mass = 0.0;
  for (const auto& [j, v] : c.entries()) mass += std::abs(v);
  if (mass == 0.0) throw std::invalid_argument("bernstein_ratio: zero table");
  const int n = c.max_degree();
  if (n == 0) {
    // constants: any derivative vanishes
    return 0.0;
  }
  const int order = alpha[0] + alpha[1] + alpha[2];
  const int grid = 4 * n + 1;
  const double base = lp_norm(synthesize(c, grid), p);
  const double deriv = lp_norm(synthesize(derivative(c, alpha), grid), p);
  return deriv / (std::pow(static_cast<double>(n), order) * base);
}

ExperimentReport inverse_check(const HexFunction& f, int r, double p) {
  if (r < 1) throw std::invalid_argument("inverse_check: r must be >= 1");
  ExperimentReport rep;
  rep.method = "inverse_r" + std::to_string(r);
  rep.columns = {"h", "lhs_modulus", "rhs_sum", "ratio", "vacuous"};

  const int n_max = 32;  // 1/h max
  // E_n proxies shared across the h sweep.
  std::vector<double> err(static_cast<size_t>(n_max) + 1, 0.0);
  if (p == 2.0) {
    const CoeffTable c = coefficients(f, 2 * n_max);
    for (int n = 0; n <= n_max; ++n) err[n] = best_approx_l2(c, n);
  } else {
    // n = 0 term: S_0 error, within a factor 2 of the best constant.
    const int grid = 129;
    GridFunction g = sample(f, grid);
    const Cplx mean = coefficients(f, 0).at(HexIndex{0, 0});
    for (auto& v : g.values()) v -= mean;
    err[0] = lp_norm(g, p);
    for (int n = 1; n <= n_max; ++n) err[n] = near_best(f, n, p);
  }

  double worst_ratio = 0.0;
  for (double h : {1.0 / 8, 1.0 / 16, 1.0 / 32}) {
    ModulusSpec spec;
    spec.r = r;
    spec.h = h;
    spec.p = p;
    const double lhs = modulus(f, spec);
    const int limit = static_cast<int>(1.0 / h);
    double sum = 0.0;
    for (int n = 0; n <= limit && n <= n_max; ++n)
      sum += std::pow(n + 1.0, r - 1.0) * err[static_cast<size_t>(n)];
    const double rhs = std::pow(h, r) * sum;
    const bool vacuous = lhs <= 1e-14 && rhs <= 1e-14;
    const double ratio = vacuous ? 0.0 : lhs / rhs;
    if (!vacuous) worst_ratio = std::max(worst_ratio, ratio);
    rep.add_row({h, lhs, rhs, ratio, vacuous ? 1.0 : 0.0});
  }
  rep.set_constant("max_ratio", worst_ratio);
  return rep;
}

}  // namespace hexf

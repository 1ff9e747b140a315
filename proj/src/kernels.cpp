#include "hexf/kernels.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

#include "hexf/quadrature.hpp"

namespace hexf {

void KernelSpec::validate() const {
  switch (type) {
    case Type::poisson:
      if (!(r >= 0.0 && r < 1.0))
        throw std::invalid_argument("poisson: r must be in [0,1)");
      return;
    case Type::cesaro:
      if (n < 0) throw std::invalid_argument("cesaro: n must be >= 0");
      if (!(delta > 0.0)) throw std::invalid_argument("cesaro: delta must be > 0");
      return;
    case Type::jackson:
      if (n < 0) throw std::invalid_argument("jackson: n must be >= 0");
      if (power < 1) throw std::invalid_argument("jackson: r must be >= 1");
      return;
    case Type::smoothed_cutoff:
      if (n < 1) throw std::invalid_argument("smoothed_cutoff: n must be >= 1");
      return;
    default:
      if (n < 0) throw std::invalid_argument("kernel: n must be >= 0");
      return;
  }
}

std::string KernelSpec::label() const {
  switch (type) {
    case Type::dirichlet: return "dirichlet(" + std::to_string(n) + ")";
    case Type::theta: return "theta(" + std::to_string(n) + ")";
    case Type::poisson: return "poisson(" + std::to_string(r) + ")";
    case Type::cesaro:
      return "cesaro(" + std::to_string(n) + "," + std::to_string(delta) + ")";
    case Type::cesaro2_closed: return "cesaro2(" + std::to_string(n) + ")";
    case Type::jackson:
      return "jackson(" + std::to_string(n) + "," + std::to_string(power) + ")";
    case Type::smoothed_cutoff: return "eta(" + std::to_string(n) + ")";
  }
  return "kernel";
}

namespace {

constexpr double kSinTol = 1e-7;  // factor-local limit threshold

// sin((n+1) u pi/3)/sin(u pi/3) with the argument reduced about the
// nearest singular line u = 3m; exact signs, limit when the denominator
// vanishes to within kSinTol.
double dirichlet_ratio(int n, double u) {
  const long long m = std::llround(u / 3.0);
  const double a = M_PI / 3.0 * (u - 3.0 * m);
  const double sign = ((m * n) % 2 != 0) ? -1.0 : 1.0;
  const double den = std::sin(a);
  if (std::fabs(den) < kSinTol) return sign * (n + 1);
  return sign * std::sin((n + 1) * a) / den;
}

}  // namespace

double theta(int n, HexPoint t) {
  if (n < 0) throw std::invalid_argument("theta: n must be >= 0");
  const double u1 = t.t1 - t.t2;
  const double u2 = t.t2 - t.t3();
  const double u3 = t.t3() - t.t1;
  return dirichlet_ratio(n, u1) * dirichlet_ratio(n, u2) * dirichlet_ratio(n, u3);
}

double dirichlet(int n, HexPoint t) {
  if (n < 0) throw std::invalid_argument("dirichlet: n must be >= 0");
  return theta(n, t) - (n >= 1 ? theta(n - 1, t) : 0.0);
}

double shell_sum(int n, HexPoint t) {
  if (n < 0) throw std::invalid_argument("shell_sum: n must be >= 0");
  if (n == 0) return 1.0;
  return dirichlet(n, t) - dirichlet(n - 1, t);
}

double poisson_q(double r, double u) {
  if (!(r >= 0.0 && r < 1.0))
    throw std::invalid_argument("poisson_q: r must be in [0,1)");
  return 1.0 - 2.0 * r * std::cos(u) + r * r;
}

double poisson_kernel(double r, HexPoint t) {
  if (!(r >= 0.0 && r < 1.0))
    throw std::invalid_argument("poisson_kernel: r must be in [0,1)");
  const double c = 2.0 * M_PI / 3.0;
  const double q1 = poisson_q(r, c * (t.t1 - t.t2));
  const double q2 = poisson_q(r, c * (t.t2 - t.t3()));
  const double q3 = poisson_q(r, c * (t.t3() - t.t1));
  const double w = 1.0 - r;
  return w * w * w * (1.0 - r * r * r) / (q1 * q2 * q3) +
         r * w * w * (1.0 / (q1 * q2) + 1.0 / (q2 * q3) + 1.0 / (q3 * q1));
}

double cesaro_binom(int m, double delta) {
  if (m < 0) throw std::invalid_argument("cesaro_binom: m must be >= 0");
  if (!(delta > -1.0)) throw std::invalid_argument("cesaro_binom: delta must be > -1");
  double v = 1.0;
  for (int k = 1; k <= m; ++k) v *= (k + delta) / k;
  return v;
}

double cesaro_weight(int n, double delta, int k) {
  if (k < 0 || k > n) throw std::invalid_argument("cesaro_weight: need 0 <= k <= n");
  return cesaro_binom(n - k, delta) / cesaro_binom(n, delta);
}

double cesaro_kernel(int n, double delta, HexPoint t) {
  if (n < 0) throw std::invalid_argument("cesaro_kernel: n must be >= 0");
  if (!(delta > -1.0)) throw std::invalid_argument("cesaro_kernel: delta must be > -1");
  const double an = cesaro_binom(n, delta);
  double prev2 = 0.0;  // theta(k-2)
  double prev1 = 0.0;  // theta(k-1)
  double acc = 0.0;
  for (int k = 0; k <= n; ++k) {
    const double cur = theta(k, t);
    const double shell = cur - 2.0 * prev1 + prev2;
    acc += cesaro_binom(n - k, delta) / an * shell;
    prev2 = prev1;
    prev1 = cur;
  }
  return acc;
}

double cesaro2_closed(int n, HexPoint t) {
  if (n < 0) throw std::invalid_argument("cesaro2_closed: n must be >= 0");
  const double p3 = M_PI / 3.0;
  const double u1 = t.t1 - t.t2;
  const double u2 = t.t2 - t.t3();
  const double u3 = t.t3() - t.t1;
  const double s1 = std::sin(p3 * u1);
  const double s2 = std::sin(p3 * u2);
  const double s3 = std::sin(p3 * u3);
  const double least =
      std::min({std::fabs(s1), std::fabs(s2), std::fabs(s3)});
  if (least < 1e-6) return cesaro_kernel(n, 2.0, t);  // slow exact path
  const double a = std::cos(n * t.t1 * p3) * std::sin((n + 2) * u2 * p3) +
                   std::cos(n * t.t2 * p3) * std::sin((n + 2) * u3 * p3) +
                   std::cos(n * t.t3() * p3) * std::sin((n + 2) * u1 * p3);
  const double b = std::sin(n * t.t1 * p3) * std::sin((n + 2) * u2 * p3) +
                   std::sin(n * t.t2 * p3) * std::sin((n + 2) * u3 * p3) +
                   std::sin(n * t.t3() * p3) * std::sin((n + 2) * u1 * p3);
  const double den = s1 * s2 * s3;
  const double binom = (n + 1.0) * (n + 2.0) / 2.0;
  return (a * a + b * b) / (16.0 * den * den) / binom;
}

double jackson_lambda(int n, int r) {
  if (n < 0) throw std::invalid_argument("jackson_lambda: n must be >= 0");
  if (r < 1) throw std::invalid_argument("jackson_lambda: r must be >= 1");
  static std::mutex mtx;
  static std::map<std::pair<int, int>, double> cache;
  {
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find({n, r});
    if (it != cache.end()) return it->second;
  }
  const int grid = required_grid(2 * r * n);
  const GridFunction pow2r = sample(
      [n, r](HexPoint t) {
        return Cplx(std::pow(theta(n, t), 2 * r), 0.0);
      },
      grid);
  const double integral = kOmegaArea * mean_integral(pow2r).real();
  const double lambda = 1.0 / integral;
  std::lock_guard<std::mutex> lock(mtx);
  cache.emplace(std::pair<int, int>{n, r}, lambda);
  return lambda;
}

double jackson_kernel(int n, int r, HexPoint t) {
  return jackson_lambda(n, r) * std::pow(theta(n, t), 2 * r);
}

double eta_cutoff(double u) {
  if (u <= 1.0) return 1.0;
  if (u >= 2.0) return 0.0;
  const double b1 = std::exp(-1.0 / (2.0 - u));
  const double b2 = std::exp(-1.0 / (u - 1.0));
  return b1 / (b1 + b2);
}

double eta_kernel(int n, HexPoint t) {
  if (n < 1) throw std::invalid_argument("eta_kernel: n must be >= 1");
  double prev2 = 0.0;
  double prev1 = 0.0;
  double acc = 0.0;
  for (int k = 0; k <= 2 * n; ++k) {
    const double cur = theta(k, t);
    const double shell = cur - 2.0 * prev1 + prev2;
    acc += eta_cutoff(static_cast<double>(k) / n) * shell;
    prev2 = prev1;
    prev1 = cur;
  }
  return acc;
}

double eval_kernel(const KernelSpec& spec, HexPoint t) {
  spec.validate();
  switch (spec.type) {
    case KernelSpec::Type::dirichlet: return dirichlet(spec.n, t);
    case KernelSpec::Type::theta: return theta(spec.n, t);
    case KernelSpec::Type::poisson: return poisson_kernel(spec.r, t);
    case KernelSpec::Type::cesaro: return cesaro_kernel(spec.n, spec.delta, t);
    case KernelSpec::Type::cesaro2_closed: return cesaro2_closed(spec.n, t);
    case KernelSpec::Type::jackson: return jackson_kernel(spec.n, spec.power, t);
    case KernelSpec::Type::smoothed_cutoff: return eta_kernel(spec.n, t);
  }
  throw std::logic_error("eval_kernel: unknown type");
}

}  // namespace hexf

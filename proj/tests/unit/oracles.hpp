// Test-side oracles, deliberately independent of the library's evaluation
// paths: exponentials go through the raw three-component dot product, sums
// go over explicit index lists, convolutions through plain grid quadrature.
#ifndef HEXF_TESTS_ORACLES_HPP
#define HEXF_TESTS_ORACLES_HPP

#include <cmath>
#include <complex>
#include <functional>
#include <random>
#include <vector>

#include "hexf/hexcoords.hpp"
#include "hexf/quadrature.hpp"

namespace oracles {

using hexf::Cplx;
using hexf::HexIndex;
using hexf::HexPoint;

// e^{(2 pi i/3)(j1 t1 + j2 t2 + j3 t3)} from raw components; also accepts
// off-plane points, which the derivative oracle needs.
inline Cplx phi_raw(int j1, int j2, int j3, double t1, double t2, double t3) {
  const double dot = j1 * t1 + j2 * t2 + j3 * t3;
  return std::polar(1.0, 2.0 * M_PI / 3.0 * dot);
}

inline Cplx phi_ambient(HexIndex j, HexPoint t) {
  return phi_raw(j.j1, j.j2, j.j3(), t.t1, t.t2, t.t3());
}

inline Cplx ball_sum(int n, HexPoint t) {
  Cplx acc{0.0, 0.0};
  for (HexIndex j : hexf::index_ball(n)) acc += phi_ambient(j, t);
  return acc;
}

inline Cplx shell_sum(int n, HexPoint t) {
  Cplx acc{0.0, 0.0};
  for (HexIndex j : hexf::index_shell(n)) acc += phi_ambient(j, t);
  return acc;
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}
  double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  HexPoint cell_point() { return hexf::s_to_t(uniform(), uniform()); }
  HexPoint wide_point() {
    return hexf::s_to_t(uniform(-3.0, 3.0), uniform(-3.0, 3.0));
  }

 private:
  std::mt19937_64 eng_;
};

// (1/|Omega|) Int f(t - s) K(s) ds over the periodic cell at grid size N.
inline Cplx convolve_at(const hexf::HexFunction& f,
                        const std::function<double(HexPoint)>& kernel,
                        HexPoint t, int n) {
  Cplx acc{0.0, 0.0};
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      const HexPoint s = hexf::s_to_t(static_cast<double>(a) / n,
                                      static_cast<double>(b) / n);
      acc += f(t - s) * kernel(s);
    }
  }
  return acc / static_cast<double>(n) * (1.0 / n);
}

// Continuous Fourier transform of exp(-(t1^2+t2^2)/sigma^2) in the
// homogeneous normalization: Int g(t) e^{-(2 pi i/3) j.t} dt1 dt2.
inline double gauss_transform(double sigma, HexIndex j) {
  const double w1 = 2.0 * M_PI / 3.0 * (j.j1 - j.j3());
  const double w2 = 2.0 * M_PI / 3.0 * (j.j2 - j.j3());
  return M_PI * sigma * sigma *
         std::exp(-sigma * sigma * (w1 * w1 + w2 * w2) / 4.0);
}

}  // namespace oracles

#endif

#ifndef HEXF_KERNELS_HPP
#define HEXF_KERNELS_HPP

#include <string>

#include "hexf/hexcoords.hpp"

namespace hexf {

/// Tagged kernel choice for the CLI and the summability operators.
struct KernelSpec {
  enum class Type {
    dirichlet,       // D_n
    theta,           // Theta_n
    poisson,         // P(r; .), 0 <= r < 1
    cesaro,          // K_n^(delta), delta > 0
    cesaro2_closed,  // nonnegative closed form of K_n^(2)
    jackson,         // K_{n,r}, r >= 1 integer
    smoothed_cutoff  // eta_n
  };
  Type type = Type::dirichlet;
  int n = 0;
  double r = 0.0;      // poisson radius
  double delta = 0.0;  // cesaro order
  int power = 1;       // jackson exponent r

  void validate() const;  // throws std::invalid_argument
  std::string label() const;
};

/// Theta_n: product of the three ratios sin((n+1)u pi/3)/sin(u pi/3) at
/// u in {t1-t2, t2-t3, t3-t1}. A factor whose denominator satisfies
/// |sin(u pi/3)| < 1e-7 is replaced by its limit +-(n+1), sign (-1)^{nm}
/// at u -> 3m.
double theta(int n, HexPoint t);

/// Dirichlet kernel D_n = Theta_n - Theta_{n-1} (Theta_{-1} = 0);
/// equals the sum of phi_j over the degree-n ball.
double dirichlet(int n, HexPoint t);

/// Sum of phi_j over the degree-n shell, real by symmetry.
double shell_sum(int n, HexPoint t);

/// q(r,u) = 1 - 2 r cos u + r^2 >= (1-r)^2.
double poisson_q(double r, double u);

/// Nonnegative closed form of the Abel/Poisson kernel, unit mean.
double poisson_kernel(double r, HexPoint t);

/// Generalized binomial A_m^delta = C(m+delta, m), delta > -1.
double cesaro_binom(int m, double delta);

/// Cesaro multiplier A^delta_{n-k}/A^delta_n for shell k <= n.
double cesaro_weight(int n, double delta, int k);

/// (C,delta) kernel: sum over shells k <= n of cesaro_weight * shell_sum.
/// delta = 0 is the Dirichlet kernel, delta = 1 equals Theta_n/(n+1).
double cesaro_kernel(int n, double delta, HexPoint t);

/// Nonnegative closed form of the (C,2) kernel; falls back to the shell
/// sum when any |sin((t_i-t_j) pi/3)| < 1e-6.
double cesaro2_closed(int n, HexPoint t);

/// Normalization lambda_{n,r} = 1/Int_Omega Theta_n^{2r}, evaluated
/// exactly on the grid N = 2(2rn)+1 and memoized per (n,r).
double jackson_lambda(int n, int r);

/// Jackson kernel lambda_{n,r} Theta_n(t)^{2r} >= 0, unit integral.
double jackson_kernel(int n, int r, HexPoint t);

/// C^inf cutoff: 1 on (-inf,1], 0 on [2,inf), exp-glue in between.
double eta_cutoff(double u);

/// Smoothed-cutoff kernel: sum over shells k <= 2n of eta(k/n) shell_k,
/// i.e. sum over the degree-2n ball of eta(|j|_H/n) phi_j. Reproduces
/// every polynomial of degree <= n under convolution.
double eta_kernel(int n, HexPoint t);

/// Dispatch on the tagged spec.
double eval_kernel(const KernelSpec& spec, HexPoint t);

}  // namespace hexf

#endif

#ifndef HEXF_APPROX_HPP
#define HEXF_APPROX_HPP

#include <array>

#include "hexf/operators.hpp"
#include "hexf/report.hpp"

namespace hexf {

/// Parameters of the sampled modulus of smoothness. The sup over shifts
/// is discretized over direction_count equispaced in-plane directions and
/// radius_count radii in (0,h]; consumers of modulus bounds budget a 5%
/// sampling slack for this. Shift length is the planar norm of t.
struct ModulusSpec {
  int r = 1;
  double h = 0.125;
  double p = 2.0;  // infinity() for the sup norm
  int direction_count = 16;
  int radius_count = 4;
  int grid_n = 48;  // evaluation grid for the difference norms

  void validate() const;
};

/// r-th forward difference with step t:
/// x -> sum_{k=0}^r (-1)^{r-k} C(r,k) f(x + k t).
HexFunction finite_difference(const HexFunction& f, HexPoint t, int r);

/// Sampled modulus of smoothness; a lower bound of the true sup.
double modulus(const HexFunction& f, const ModulusSpec& spec);

/// Exact L2 best-approximation error from the degree-n ball:
/// sqrt(|Omega| * sum_{|j|>n} |c_j|^2).
double best_approx_l2(const CoeffTable& c, int n);

/// Near-best error proxy ||eta_n f - f||_p (p in {1,2,inf}); a constant
/// multiple of the true best approximation error.
double near_best(const HexFunction& f, int n, double p);

/// (1/|Omega|) Int |D_n| on the grid N = max(513, 8n+1).
double lebesgue_constant(int n);

/// ||d^alpha S||_p / (n^{|alpha|} ||S||_p) for S given by its coefficients
/// (n = max degree of c). Rejects the zero table.
double bernstein_ratio(const CoeffTable& c, std::array<int, 3> alpha, double p);

/// Inverse-theorem probe: for h in {1/8,1/16,1/32} compares the modulus
/// against h^r sum_{n <= 1/h} (n+1)^{r-1} E_n, with E_n from near_best
/// (p != 2) or best_approx_l2 (p = 2). Reports lhs, rhs, ratio per h.
ExperimentReport inverse_check(const HexFunction& f, int r, double p);

}  // namespace hexf

#endif

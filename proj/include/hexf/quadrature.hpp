#ifndef HEXF_QUADRATURE_HPP
#define HEXF_QUADRATURE_HPP

#include <complex>
#include <functional>
#include <iosfwd>
#include <vector>

#include "hexf/hexcoords.hpp"

namespace hexf {

using Cplx = std::complex<double>;
using HexFunction = std::function<Cplx(HexPoint)>;

/// Samples of an H-periodic function on the uniform N x N grid of the
/// periodic cell: entry (a,b) is the value at the point whose (s1,s2)
/// image is (a/N, b/N).
class GridFunction {
 public:
  GridFunction() = default;
  GridFunction(int n, std::vector<Cplx> values);

  int grid_n() const { return n_; }
  const std::vector<Cplx>& values() const { return values_; }
  std::vector<Cplx>& values() { return values_; }
  Cplx at(int a, int b) const { return values_[static_cast<size_t>(a) * n_ + b]; }
  HexPoint point(int a, int b) const {
    return s_to_t(static_cast<double>(a) / n_, static_cast<double>(b) / n_);
  }

 private:
  int n_ = 0;
  std::vector<Cplx> values_;
};

/// Evaluates f at every grid node; sampling is parallel over points and
/// propagates any evaluation failure. N >= 1.
GridFunction sample(const HexFunction& f, int n);

/// (1/N^2) sum of values; equals (1/|Omega|) Int_Omega f when every
/// per-axis frequency of f in s-coordinates is at most N-1.
Cplx mean_integral(const GridFunction& g);

/// (Int_Omega |f|^p)^{1/p} for 1 <= p < inf on the grid, max |value| for
/// p = inf. Uses |Omega| = 3 for the unnormalized integral.
double lp_norm(const GridFunction& g, double p);

/// (1/N^2) sum f conj(g). Grids must have equal N.
Cplx inner_product_h(const GridFunction& f, const GridFunction& g);

/// Triangle inner product (1/|Delta|) Int_Delta f conj(g): midpoint rule
/// over the M^2 congruent subtriangles of Delta, normalized so <1,1> = 1.
Cplx inner_product_delta(const HexFunction& f, const HexFunction& g, int m);

/// Centroids of the M^2 congruent subtriangles of Delta, row by row;
/// the node set of inner_product_delta.
std::vector<HexPoint> triangle_nodes(int m);

/// CSV round-trip: header line N, then rows a,b,re,im.
void write_csv(const GridFunction& g, std::ostream& out);
GridFunction read_grid_csv(std::istream& in);

}  // namespace hexf

#endif

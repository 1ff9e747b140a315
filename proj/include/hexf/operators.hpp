#ifndef HEXF_OPERATORS_HPP
#define HEXF_OPERATORS_HPP

#include <array>
#include <iosfwd>
#include <map>

#include "hexf/hexcoords.hpp"
#include "hexf/quadrature.hpp"

namespace hexf {

/// Finite Fourier series: sparse association HexIndex -> coefficient.
/// Iteration and serialization are lexicographic in (j1,j2). grid_n
/// records the grid used for coefficient extraction (0 when constructed
/// directly) so aliasing is attributable.
class CoeffTable {
 public:
  using Map = std::map<HexIndex, Cplx>;

  CoeffTable() = default;

  void set(HexIndex j, Cplx c) { entries_[j] = c; }
  Cplx at(HexIndex j) const;
  bool contains(HexIndex j) const { return entries_.count(j) != 0; }
  size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  const Map& entries() const { return entries_; }

  int max_degree() const;
  int grid_n() const { return grid_n_; }
  void set_grid_n(int n) { grid_n_ = n; }

  /// true iff entry(-j) == conj(entry(j)) for all entries, within tol.
  bool is_real_symmetric(double tol = 1e-12) const;

  /// JSON round-trip; numbers carry 17 significant digits.
  void write_json(std::ostream& out) const;
  static CoeffTable read_json(std::istream& in);

 private:
  Map entries_;
  int grid_n_ = 0;
};

/// Fourier coefficients of f over the degree-n ball, computed on the
/// exactness grid N = 2n+1. Exact for polynomials of degree <= n, an
/// aliased approximation otherwise.
CoeffTable coefficients(const HexFunction& f, int n);

/// Synthesis at a point: sum of entries times phi_j(t).
Cplx evaluate(const CoeffTable& c, HexPoint t);

/// Synthesis on the uniform N x N cell grid (exact grid evaluation for
/// any N; aliased bins accumulate).
GridFunction synthesize(const CoeffTable& c, int n);

/// Restriction to the degree-n ball (the partial-sum projection S_n).
CoeffTable partial_sum(const CoeffTable& c, int n);

/// (C,delta) means: entry(j) *= A^delta_{n-|j|}/A^delta_n for |j| <= n,
/// dropped otherwise. delta = 0 is partial_sum.
CoeffTable cesaro_means(const CoeffTable& c, int n, double delta);

/// Abel/Poisson means: entry(j) *= r^{|j|}, 0 <= r < 1.
CoeffTable abel_means(const CoeffTable& c, double r);

/// Smoothed-cutoff operator: entry(j) *= w(|j|) with w(m) = 1 for m <= n,
/// w(m) = 0 for m > 2n, the eta glue in between. Weights are accumulated
/// by per-shell differencing of the literal kernel expansion.
CoeffTable smoothed_cutoff(const CoeffTable& c, int n);

/// Jackson-type smoothing operator. Computes the generalized translation
/// combination against the Jackson kernel K_{n*,rho}, n* = floor(n/rho)+1,
/// as a coefficient multiplier, and returns the degree-n projection of the
/// result (the raw operator spills into degrees up to 2 rho n*).
/// Preconditions: r >= 1, rho >= ceil((r+2)/2), n >= rho. rho <= 0 picks
/// the default ceil((r+2)/2).
CoeffTable jackson_op(const HexFunction& f, int n, int r, int rho = 0);

/// Coefficient-space partial derivative:
/// entry(j) *= (2 pi i/3)^{|alpha|} j1^a1 j2^a2 j3^a3.
CoeffTable derivative(const CoeffTable& c, std::array<int, 3> alpha);

/// Multiplier table of jackson_op restricted to the degree-n ball;
/// exposed for tests.
std::map<HexIndex, double> jackson_multiplier(int n, int r, int rho);

}  // namespace hexf

#endif

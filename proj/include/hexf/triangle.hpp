#ifndef HEXF_TRIANGLE_HPP
#define HEXF_TRIANGLE_HPP

#include <iosfwd>
#include <map>
#include <vector>

#include "hexf/hexcoords.hpp"
#include "hexf/quadrature.hpp"

namespace hexf {

/// Index of a generalized cosine: k1 >= k2 >= 0, k3 = -(k1-k2+...) on the
/// plane. Construction canonicalizes the representative: (k1,k2,k3) and
/// (k2,k1,k3) label the same cosine, so the first two components are kept
/// sorted descending.
struct TriIndex {
  int k1 = 0;
  int k2 = 0;

  TriIndex() = default;
  TriIndex(int a, int b);
  explicit TriIndex(HexIndex k);

  int k3() const { return -k1 - k2; }
  /// Filtration degree -k3 = k1 + k2 (equals the hexagonal degree).
  int degree() const { return k1 + k2; }
  HexIndex hex() const { return HexIndex{k1, k2}; }

  bool operator==(const TriIndex&) const = default;
  auto operator<=>(const TriIndex& o) const {
    if (auto c = degree() <=> o.degree(); c != 0) return c;
    return k1 <=> o.k1;
  }
};

/// Canonical cone indices of degree <= n, ordered by (degree, k1).
std::vector<TriIndex> tri_indices(int n);

/// Symmetrization (sign=+1) or antisymmetrization (sign=-1) over the
/// six reflection-group elements.
HexFunction project_sym(const HexFunction& f, int sign);

/// Generalized cosine: the +-symmetrized average of phi over the twelve
/// signed group images of k. Real up to rounding, invariant under the
/// group, orthogonal family on the triangle.
Cplx tc(TriIndex k, HexPoint t);

/// Generalized sine: anti-invariant companion; real up to rounding,
/// flips sign under each reflection. Identically zero for k = 0.
Cplx ts(TriIndex k, HexPoint t);

/// Expansion coefficients of f against the cosines of degree <= n using
/// the M-subtriangle midpoint rule; each coefficient is normalized by the
/// quadrature norm of its cosine (the norms are not uniform).
class CosineCoeffTable {
 public:
  using Map = std::map<TriIndex, double>;

  void set(TriIndex k, double c) { entries_[k] = c; }
  double at(TriIndex k) const;
  const Map& entries() const { return entries_; }
  size_t size() const { return entries_.size(); }
  int grid_m() const { return grid_m_; }
  void set_grid_m(int m) { grid_m_ = m; }

  void write_json(std::ostream& out) const;
  static CosineCoeffTable read_json(std::istream& in);

 private:
  Map entries_;
  int grid_m_ = 0;
};

CosineCoeffTable cosine_coeffs(const HexFunction& f, int n, int m);

/// (C,1) means of the cosine expansion: coefficients weighted by
/// (n+1-degree)/(n+1). Returns a function evaluable on the triangle.
HexFunction cosine_cesaro1(const HexFunction& f, int n, int m);

/// Max residual of the three opposite-edge identities over m+1 samples of
/// the outer edge t1+t2 = 1. Zero (to rounding) certifies boundary data
/// compatible with a continuous invariant periodic extension. f must be
/// evaluable at the reflected sample points.
double check_compatibility(const HexFunction& f, int m);

/// Representative of t inside the closed triangle under the group and the
/// period lattice; ties on shared edges resolve by fixed group order.
HexPoint reduce_to_delta(HexPoint t);

/// Invariant periodic extension F(t) = f(reduce_to_delta(t)).
HexFunction extend_symmetric(const HexFunction& f);

}  // namespace hexf

#endif

#ifndef HEXF_HEXCOORDS_HPP
#define HEXF_HEXCOORDS_HPP

#include <array>
#include <complex>
#include <vector>

namespace hexf {

/// Area of the hexagonal cell Omega in (t1,t2) measure.
inline constexpr double kOmegaArea = 3.0;

/// A point of the plane t1+t2+t3 = 0 in homogeneous coordinates.
/// Only (t1,t2) is stored; t3 is materialized on read, so the plane
/// constraint holds exactly by construction.
struct HexPoint {
  double t1 = 0.0;
  double t2 = 0.0;

  constexpr double t3() const { return -t1 - t2; }

  constexpr HexPoint operator+(HexPoint o) const { return {t1 + o.t1, t2 + o.t2}; }
  constexpr HexPoint operator-(HexPoint o) const { return {t1 - o.t1, t2 - o.t2}; }
  constexpr HexPoint operator-() const { return {-t1, -t2}; }
  constexpr HexPoint operator*(double c) const { return {c * t1, c * t2}; }
};

inline constexpr HexPoint operator*(double c, HexPoint t) { return t * c; }

/// Euclidean norm of the (t1,t2) projection, the length used by the
/// modulus of smoothness and the kernel moment bounds.
double planar_norm(HexPoint t);

/// An integer frequency on the plane, j1+j2+j3 = 0 exactly.
struct HexIndex {
  int j1 = 0;
  int j2 = 0;

  constexpr int j3() const { return -j1 - j2; }

  /// Hexagonal degree max(|j1|,|j2|,|j3|).
  int degree() const;

  constexpr HexIndex operator-() const { return {-j1, -j2}; }
  constexpr HexIndex operator*(int c) const { return {c * j1, c * j2}; }
  constexpr bool operator==(const HexIndex&) const = default;
  /// Lexicographic on (j1,j2); this order is part of the CoeffTable
  /// serialization contract.
  constexpr auto operator<=>(const HexIndex& o) const {
    if (auto c = j1 <=> o.j1; c != 0) return c;
    return j2 <=> o.j2;
  }
};

/// Elements of the reflection group of the hexagon: identity, the three
/// edge reflections and the two rotations by +-120 degrees.
enum class Reflection { identity, s1, s2, s3, s12, s21 };

inline constexpr std::array<Reflection, 6> kReflectionGroup = {
    Reflection::identity, Reflection::s1,  Reflection::s2,
    Reflection::s3,       Reflection::s12, Reflection::s21};

/// Right action: apply(t, compose(g,h)) == apply(apply(t,g), h).
Reflection compose(Reflection g, Reflection h);
HexPoint apply_reflection(HexPoint t, Reflection g);
HexIndex apply_reflection(HexIndex j, Reflection g);
/// -1 for the reflections s1,s2,s3, +1 for rotations and identity.
int reflection_sign(Reflection g);

/// Cartesian (x1,x2) -> homogeneous coordinates.
HexPoint to_homogeneous(double x1, double x2);
/// Inverse of to_homogeneous.
std::array<double, 2> from_homogeneous(HexPoint t);

/// Periodic-cell coordinates s1 = (t1-t3)/3, s2 = (t2-t3)/3. Lattice
/// translations act on s as integer shifts, so H-periodic functions are
/// 1-periodic in (s1,s2).
std::array<double, 2> t_to_s(HexPoint t);
HexPoint s_to_t(double s1, double s2);

/// Reduce modulo the period lattice: the (s1,s2) image of the result lies
/// in [0,1)^2 and the result differs from the input by a lattice translate.
HexPoint reduce_mod3(HexPoint t);

/// Lattice translate of t that lies in the hexagon Omega.
HexPoint reduce_to_omega(HexPoint t);

/// Hexagon membership, half-open as Omega tiles the plane:
/// -1 <= t1,t2,-t3 < 1. A positive tol expands both boundaries outward.
bool contains_omega(HexPoint t, double tol = 0.0);

/// Closed triangle 0 <= t1, t2, -t3 <= 1.
bool contains_delta(HexPoint t, double tol = 0.0);

/// Basis exponential e^{(2 pi i/3) j.t}.
std::complex<double> phi(HexIndex j, HexPoint t);

/// |H_n| = 3n^2+3n+1.
int ball_size(int n);

/// All indices with degree <= n, lexicographic in (j1,j2). n >= 0.
std::vector<HexIndex> index_ball(int n);

/// Indices with degree exactly n, lexicographic. n >= 0.
std::vector<HexIndex> index_shell(int n);

/// Smallest grid size that integrates a polynomial of hexagonal degree
/// max_degree exactly: 2*max_degree+1.
int required_grid(int max_degree);

}  // namespace hexf

#endif

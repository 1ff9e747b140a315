#include "hexf/hexcoords.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace hexf {

double planar_norm(HexPoint t) { return std::hypot(t.t1, t.t2); }

int HexIndex::degree() const {
  return std::max({std::abs(j1), std::abs(j2), std::abs(j3())});
}

namespace {

// Each group element is a signed permutation of (t1,t2,t3):
// result_i = sign * t_perm[i].
struct Action {
  int perm[3];
  int sign;
};

constexpr Action kActions[6] = {
    {{0, 1, 2}, +1},  // identity
    {{0, 2, 1}, -1},  // s1: -(t1,t3,t2)
    {{1, 0, 2}, -1},  // s2: -(t2,t1,t3)
    {{2, 1, 0}, -1},  // s3: -(t3,t2,t1)
    {{2, 0, 1}, +1},  // s12: (t3,t1,t2)
    {{1, 2, 0}, +1},  // s21: (t2,t3,t1)
};

}  // namespace

Reflection compose(Reflection g, Reflection h) {
  const Action& a = kActions[static_cast<int>(g)];
  const Action& b = kActions[static_cast<int>(h)];
  // (t g) h : component i of the result is sign_b * (tg)_{perm_b[i]}
  //         = sign_b * sign_a * t_{perm_a[perm_b[i]]}.
  Action c;
  c.sign = a.sign * b.sign;
  for (int i = 0; i < 3; ++i) c.perm[i] = a.perm[b.perm[i]];
  for (int k = 0; k < 6; ++k) {
    const Action& cand = kActions[k];
    if (cand.sign == c.sign && cand.perm[0] == c.perm[0] &&
        cand.perm[1] == c.perm[1] && cand.perm[2] == c.perm[2]) {
      return static_cast<Reflection>(k);
    }
  }
  throw std::logic_error("reflection group is not closed");
}

HexPoint apply_reflection(HexPoint t, Reflection g) {
  const Action& a = kActions[static_cast<int>(g)];
  const double v[3] = {t.t1, t.t2, t.t3()};
  return {a.sign * v[a.perm[0]], a.sign * v[a.perm[1]]};
}

HexIndex apply_reflection(HexIndex j, Reflection g) {
  const Action& a = kActions[static_cast<int>(g)];
  const int v[3] = {j.j1, j.j2, j.j3()};
  return {a.sign * v[a.perm[0]], a.sign * v[a.perm[1]]};
}

int reflection_sign(Reflection g) { return kActions[static_cast<int>(g)].sign; }

HexPoint to_homogeneous(double x1, double x2) {
  return {-x2 / 2.0 + std::sqrt(3.0) * x1 / 2.0, x2};
}

std::array<double, 2> from_homogeneous(HexPoint t) {
  // x = (1/3) H (t1-t3, t2-t3)^T with H = [[sqrt3, 0], [-1, 2]].
  const double a = t.t1 - t.t3();
  const double b = t.t2 - t.t3();
  return {std::sqrt(3.0) * a / 3.0, (-a + 2.0 * b) / 3.0};
}

std::array<double, 2> t_to_s(HexPoint t) {
  return {(2.0 * t.t1 + t.t2) / 3.0, (t.t1 + 2.0 * t.t2) / 3.0};
}

HexPoint s_to_t(double s1, double s2) {
  return {2.0 * s1 - s2, 2.0 * s2 - s1};
}

namespace {

double frac_unit(double x) {
  double f = x - std::floor(x);
  if (f >= 1.0) f -= 1.0;  // guards the x = -eps rounding case
  return f;
}

}  // namespace

HexPoint reduce_mod3(HexPoint t) {
  const auto s = t_to_s(t);
  return s_to_t(frac_unit(s[0]), frac_unit(s[1]));
}

HexPoint reduce_to_omega(HexPoint t) {
  const auto s = t_to_s(reduce_mod3(t));
  for (double tol : {0.0, 1e-12}) {
    for (int m1 = -1; m1 <= 1; ++m1) {
      for (int m2 = -1; m2 <= 1; ++m2) {
        HexPoint cand = s_to_t(s[0] + m1, s[1] + m2);
        if (contains_omega(cand, tol)) return cand;
      }
    }
  }
  throw std::logic_error("reduce_to_omega: no hexagon representative found");
}

bool contains_omega(HexPoint t, double tol) {
  const double v[3] = {t.t1, t.t2, -t.t3()};
  for (double x : v) {
    if (!(x >= -1.0 - tol && x < 1.0 + tol)) return false;
  }
  return true;
}

bool contains_delta(HexPoint t, double tol) {
  const double v[3] = {t.t1, t.t2, -t.t3()};
  for (double x : v) {
    if (!(x >= -tol && x <= 1.0 + tol)) return false;
  }
  return true;
}

std::complex<double> phi(HexIndex j, HexPoint t) {
  // j.t = j1 t1 + j2 t2 + j3 t3 reduced with the two plane constraints.
  const double dot = (2.0 * j.j1 + j.j2) * t.t1 + (j.j1 + 2.0 * j.j2) * t.t2;
  return std::polar(1.0, 2.0 * M_PI / 3.0 * dot);
}

int ball_size(int n) {
  if (n < 0) throw std::invalid_argument("ball_size: n must be >= 0");
  return 3 * n * n + 3 * n + 1;
}

std::vector<HexIndex> index_ball(int n) {
  if (n < 0) throw std::invalid_argument("index_ball: n must be >= 0");
  std::vector<HexIndex> out;
  out.reserve(static_cast<size_t>(ball_size(n)));
  for (int j1 = -n; j1 <= n; ++j1) {
    for (int j2 = -n; j2 <= n; ++j2) {
      const int j3 = -j1 - j2;
      if (j3 >= -n && j3 <= n) out.push_back({j1, j2});
    }
  }
  return out;
}

std::vector<HexIndex> index_shell(int n) {
  if (n < 0) throw std::invalid_argument("index_shell: n must be >= 0");
  if (n == 0) return {HexIndex{0, 0}};
  std::vector<HexIndex> out;
  out.reserve(static_cast<size_t>(6 * n));
  for (HexIndex j : index_ball(n)) {
    if (j.degree() == n) out.push_back(j);
  }
  return out;
}

int required_grid(int max_degree) {
  if (max_degree < 0) throw std::invalid_argument("required_grid: degree must be >= 0");
  return 2 * max_degree + 1;
}

}  // namespace hexf

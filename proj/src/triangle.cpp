#include "hexf/triangle.hpp"

#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <utility>

#include "hexf/parallel.hpp"

#include "json.hpp"

namespace hexf {

TriIndex::TriIndex(int a, int b) {
  if (a < b) std::swap(a, b);
  if (b < 0) throw std::invalid_argument("TriIndex: need k1, k2 >= 0");
  k1 = a;
  k2 = b;
}

TriIndex::TriIndex(HexIndex k) {
  if (k.j1 < 0 || k.j2 < 0 || k.j3() > 0)
    throw std::invalid_argument("TriIndex: index outside the cone");
  k1 = std::max(k.j1, k.j2);
  k2 = std::min(k.j1, k.j2);
}

std::vector<TriIndex> tri_indices(int n) {
  if (n < 0) throw std::invalid_argument("tri_indices: n must be >= 0");
  std::vector<TriIndex> out;
  for (int deg = 0; deg <= n; ++deg) {
    for (int k1 = (deg + 1) / 2; k1 <= deg; ++k1)
      out.push_back(TriIndex(k1, deg - k1));
  }
  return out;
}

HexFunction project_sym(const HexFunction& f, int sign) {
  if (sign != 1 && sign != -1)
    throw std::invalid_argument("project_sym: sign must be +1 or -1");
  return [f, sign](HexPoint t) {
    Cplx even{0.0, 0.0};
    Cplx odd{0.0, 0.0};
    for (Reflection g : kReflectionGroup) {
      const Cplx v = f(apply_reflection(t, g));
      if (reflection_sign(g) > 0)
        even += v;
      else
        odd += v;
    }
    return (even + static_cast<double>(sign) * odd) / 6.0;
  };
}

namespace {

// Sum of phi over the six group images of k, with the reflection character
// when anti = true.
Cplx orbit_sum(HexIndex k, HexPoint t, bool anti) {
  Cplx acc{0.0, 0.0};
  for (Reflection g : kReflectionGroup) {
    const Cplx v = phi(apply_reflection(k, g), t);
    if (anti && reflection_sign(g) < 0)
      acc -= v;
    else
      acc += v;
  }
  return acc;
}

}  // namespace

Cplx tc(TriIndex k, HexPoint t) {
  const HexIndex h = k.hex();
  // Averaging the orbit of k with the orbit of -k cancels the imaginary
  // part exactly; the paper's one-sided average is complex off the
  // diagonal k1 = k2.
  return (orbit_sum(h, t, false) + orbit_sum(-h, t, false)) / 12.0;
}

Cplx ts(TriIndex k, HexPoint t) {
  const HexIndex h = k.hex();
  return (orbit_sum(h, t, true) - orbit_sum(-h, t, true)) / Cplx{0.0, 12.0};
}

double CosineCoeffTable::at(TriIndex k) const {
  auto it = entries_.find(k);
  return it == entries_.end() ? 0.0 : it->second;
}

void CosineCoeffTable::write_json(std::ostream& out) const {
  char buf[96];
  out << "{\n  \"tri_entries\": [";
  bool first = true;
  for (const auto& [k, c] : entries_) {
    out << (first ? "\n" : ",\n");
    first = false;
    std::snprintf(buf, sizeof buf,
                  "    {\"j\": [%d, %d, %d], \"re\": %.17g, \"im\": 0}", k.k1,
                  k.k2, k.k3(), c);
    out << buf;
  }
  out << "\n  ],\n  \"grid_M\": " << grid_m_ << "\n}\n";
}

CosineCoeffTable CosineCoeffTable::read_json(std::istream& in) {
  nlohmann::json doc = nlohmann::json::parse(in);
  CosineCoeffTable table;
  for (const auto& e : doc.at("tri_entries")) {
    const auto& j = e.at("j");
    table.set(TriIndex(j.at(0).get<int>(), j.at(1).get<int>()),
              e.at("re").get<double>());
  }
  table.set_grid_m(doc.value("grid_M", 0));
  return table;
}

CosineCoeffTable cosine_coeffs(const HexFunction& f, int n, int m) {
  if (n < 0) throw std::invalid_argument("cosine_coeffs: n must be >= 0");
  const auto nodes = triangle_nodes(m);
  std::vector<Cplx> fv(nodes.size());
  parallel_for(nodes.size(), [&](size_t b, size_t e) {
    for (size_t i = b; i < e; ++i) fv[i] = f(nodes[i]);
  });
  CosineCoeffTable out;
  out.set_grid_m(m);
  for (TriIndex k : tri_indices(n)) {
    std::vector<double> tcv(nodes.size());
    parallel_for(nodes.size(), [&](size_t b, size_t e) {
      for (size_t i = b; i < e; ++i) tcv[i] = tc(k, nodes[i]).real();
    });
    double num = 0.0;
    double den = 0.0;
    for (size_t i = 0; i < nodes.size(); ++i) {
      num += fv[i].real() * tcv[i];
      den += tcv[i] * tcv[i];
    }
    out.set(k, num / den);
  }
  return out;
}

HexFunction cosine_cesaro1(const HexFunction& f, int n, int m) {
  CosineCoeffTable coeffs = cosine_coeffs(f, n, m);
  std::vector<std::pair<TriIndex, double>> weighted;
  for (const auto& [k, c] : coeffs.entries()) {
    const double w = static_cast<double>(n + 1 - k.degree()) / (n + 1);
    if (w > 0.0) weighted.emplace_back(k, c * w);
  }
  return [weighted](HexPoint t) {
    double acc = 0.0;
    for (const auto& [k, c] : weighted) acc += c * tc(k, t).real();
    return Cplx{acc, 0.0};
  };
}

double check_compatibility(const HexFunction& f, int m) {
  if (m < 2) throw std::invalid_argument("check_compatibility: need M >= 2");
  double worst = 0.0;
  for (int i = 0; i <= m; ++i) {
    const double a = static_cast<double>(i) / m;
    const double b = 1.0 - a;
    const HexPoint lhs[3] = {{a, b}, {b, -1.0}, {-1.0, a}};
    const HexPoint rhs[3] = {{-b, -a}, {-a, 1.0}, {1.0, -b}};
    for (int q = 0; q < 3; ++q)
      worst = std::max(worst, std::abs(f(lhs[q]) - f(rhs[q])));
  }
  return worst;
}

HexPoint reduce_to_delta(HexPoint t) {
  const HexPoint base = reduce_mod3(t);
  for (double tol : {0.0, 1e-12}) {
    for (Reflection g : kReflectionGroup) {
      const HexPoint cand = reduce_mod3(apply_reflection(base, g));
      if (contains_delta(cand, tol)) return cand;
    }
  }
  throw std::logic_error("reduce_to_delta: no triangle representative found");
}

HexFunction extend_symmetric(const HexFunction& f) {
  return [f](HexPoint t) { return f(reduce_to_delta(t)); };
}

}  // namespace hexf

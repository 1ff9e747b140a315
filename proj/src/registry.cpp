#include "hexf/registry.hpp"

#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

namespace hexf {

namespace {

// Box-Muller over explicit 53-bit uniforms: identical streams on every
// platform, unlike std::normal_distribution.
class NormalGen {
 public:
  explicit NormalGen(std::uint64_t seed) : eng_(seed) {}

  double operator()() {
    if (have_) {
      have_ = false;
      return cached_;
    }
    double u1 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    const double u2 = uniform();
    const double mag = std::sqrt(-2.0 * std::log(u1));
    cached_ = mag * std::sin(2.0 * M_PI * u2);
    have_ = true;
    return mag * std::cos(2.0 * M_PI * u2);
  }

 private:
  double uniform() {
    return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
  }
  std::mt19937_64 eng_;
  double cached_ = 0.0;
  bool have_ = false;
};

std::vector<double> parse_params(const std::string& spec, size_t colon) {
  std::vector<double> out;
  size_t pos = colon + 1;
  while (pos <= spec.size()) {
    const size_t next = spec.find(',', pos);
    const std::string tok =
        spec.substr(pos, next == std::string::npos ? next : next - pos);
    if (tok.empty()) throw std::invalid_argument("registry: empty parameter in " + spec);
    out.push_back(std::stod(tok));
    if (next == std::string::npos) break;
    pos = next + 1;
  }
  return out;
}

// Periodization over the lattice: in cell coordinates the period lattice
// is the integer lattice, so sum over integer shifts of (s1,s2).
HexFunction periodize(std::function<double(HexPoint)> g, int range) {
  return [g, range](HexPoint t) {
    const auto s = t_to_s(reduce_mod3(t));
    double acc = 0.0;
    for (int m1 = -range; m1 <= range; ++m1) {
      for (int m2 = -range; m2 <= range; ++m2) {
        acc += g(s_to_t(s[0] + m1, s[1] + m2));
      }
    }
    return Cplx{acc, 0.0};
  };
}

}  // namespace

CoeffTable random_polynomial(int n, std::uint64_t seed) {
  if (n < 0) throw std::invalid_argument("random_polynomial: n must be >= 0");
  NormalGen gen(seed);
  CoeffTable c;
  c.set(HexIndex{0, 0}, Cplx{gen(), 0.0});
  for (HexIndex j : index_ball(n)) {
    if (HexIndex{0, 0} < j) {
      const Cplx v{gen() / std::sqrt(2.0), gen() / std::sqrt(2.0)};
      c.set(j, v);
      c.set(-j, std::conj(v));
    }
  }
  return c;
}

RegistryFunction make_registry_function(const std::string& spec,
                                        std::uint64_t seed) {
  const size_t colon = spec.find(':');
  const std::string name = spec.substr(0, colon);

  if (name == "const") {
    RegistryFunction f;
    f.name = spec;
    f.eval = [](HexPoint) { return Cplx{1.0, 0.0}; };
    CoeffTable c;
    c.set(HexIndex{0, 0}, Cplx{1.0, 0.0});
    f.exact_coeffs = c;
    return f;
  }
  if (name == "phi") {
    if (colon == std::string::npos)
      throw std::invalid_argument("registry: phi needs j1,j2,j3");
    const auto p = parse_params(spec, colon);
    if (p.size() != 3) throw std::invalid_argument("registry: phi needs 3 indices");
    const int j1 = static_cast<int>(p[0]);
    const int j2 = static_cast<int>(p[1]);
    const int j3 = static_cast<int>(p[2]);
    if (j1 + j2 + j3 != 0)
      throw std::invalid_argument("registry: phi indices must sum to 0");
    const HexIndex j{j1, j2};
    RegistryFunction f;
    f.name = spec;
    f.eval = [j](HexPoint t) { return phi(j, t); };
    CoeffTable c;
    c.set(j, Cplx{1.0, 0.0});
    f.exact_coeffs = c;
    return f;
  }
  if (name == "gauss" || name == "igauss") {
    if (colon == std::string::npos)
      throw std::invalid_argument("registry: gauss needs sigma");
    const auto p = parse_params(spec, colon);
    if (p.size() != 1 || !(p[0] > 0.0))
      throw std::invalid_argument("registry: gauss needs sigma > 0");
    const double sigma = p[0];
    const bool invariant = (name == "igauss");
    RegistryFunction f;
    f.name = spec;
    f.eval = periodize(
        [sigma, invariant](HexPoint t) {
          double q = t.t1 * t.t1 + t.t2 * t.t2;
          if (invariant) q += t.t3() * t.t3();
          return std::exp(-q / (sigma * sigma));
        },
        3);
    return f;
  }
  if (name == "cone") {
    RegistryFunction f;
    f.name = spec;
    f.smooth = false;
    f.eval = periodize(
        [](HexPoint t) {
          return std::max(0.0, 1.0 - planar_norm(t) / 0.4);
        },
        2);
    return f;
  }
  if (name == "poly") {
    if (colon == std::string::npos)
      throw std::invalid_argument("registry: poly needs a degree");
    const auto p = parse_params(spec, colon);
    if (p.size() != 1 || p[0] < 0)
      throw std::invalid_argument("registry: poly needs degree >= 0");
    const CoeffTable c = random_polynomial(static_cast<int>(p[0]), seed);
    RegistryFunction f;
    f.name = spec;
    f.eval = [c](HexPoint t) { return evaluate(c, t); };
    f.exact_coeffs = c;
    return f;
  }
  throw std::invalid_argument("registry: unknown function " + spec);
}

}  // namespace hexf

#ifndef HEXF_REGISTRY_HPP
#define HEXF_REGISTRY_HPP

#include <cstdint>
#include <optional>
#include <string>

#include "hexf/operators.hpp"

namespace hexf {

/// A named H-periodic test function. Polynomial entries also carry their
/// exact coefficient table.
struct RegistryFunction {
  std::string name;
  HexFunction eval;
  std::optional<CoeffTable> exact_coeffs;
  bool smooth = true;  // false for the cone
};

/// Parses a registry spec:
///   const            constant 1
///   phi:j1,j2,j3     basis exponential (j1+j2+j3 = 0)
///   gauss:sigma      lattice-periodized exp(-(t1^2+t2^2)/sigma^2)
///   igauss:sigma     reflection-invariant periodized Gaussian,
///                    exp(-(t1^2+t2^2+t3^2)/sigma^2)
///   cone             periodized max(0, 1 - |t|/0.4), Lipschitz
///   poly:n           seeded random real-valued polynomial of degree n
/// Throws std::invalid_argument for unknown names or bad parameters.
RegistryFunction make_registry_function(const std::string& spec,
                                        std::uint64_t seed = 0);

/// Deterministic random real-valued coefficient table of degree n
/// (coefficients conjugate-symmetric, standard normal entries).
CoeffTable random_polynomial(int n, std::uint64_t seed);

}  // namespace hexf

#endif

#pragma once

#include <optional>

#include "hecke/hecke_t.hpp"
#include "oracles.hpp"

namespace support {

using hecke::GroupConfig;
inline constexpr std::nullopt_t inf = std::nullopt;

inline oracle::Poly to_oracle(const hecke::LaurentPoly& p) {
  oracle::Poly out;
  for (const auto& t : p.terms()) out[t.exp] = static_cast<long long>(t.coeff);
  return out;
}

inline oracle::Hecke to_oracle(const hecke::HeckeElement& h, const hecke::GroupBall& ball) {
  oracle::Hecke out;
  for (const auto& [w, p] : h.entries()) out[ball.word(w)] = to_oracle(p);
  return out;
}

/// A spread of configs covering finite, affine and the hyperbolic cases.
inline std::vector<GroupConfig> sample_configs() {
  return {
      GroupConfig(2, 2, 2, {1, 1, 1}),   GroupConfig(3, 3, 3, {1, 1, 1}),   GroupConfig(inf, 2, 2, {1, 2, 1}),
      GroupConfig(inf, 3, 2, {1, 1, 1}), GroupConfig(4, 4, 2, {2, 1, 1}),   GroupConfig(5, 4, 2, {1, 1, 1}),
      GroupConfig(inf, inf, 2, {1, 2, 1}), GroupConfig(inf, inf, inf, {2, 2, 1}), GroupConfig(2, 3, 5, {1, 1, 1}),
  };
}

}  // namespace support

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "json.hpp"

namespace hecke {

/// Generators of a rank-3 Coxeter system, in the fixed order r < s < t.
enum class Gen : std::uint8_t { r = 0, s = 1, t = 2 };

inline constexpr int kRank = 3;

inline constexpr char gen_char(int g) { return "rst"[g]; }

/// Returns 0,1,2 for 'r','s','t', or -1.
inline constexpr int gen_index(char c) {
  switch (c) {
    case 'r': return 0;
    case 's': return 1;
    case 't': return 2;
    default: return -1;
  }
}

/// Subset of {r,s,t} as a bitmask (bit g set iff generator g is present).
using GenSet = std::uint8_t;

inline constexpr GenSet gen_bit(int g) { return static_cast<GenSet>(1u << g); }
inline constexpr bool contains(GenSet set, int g) { return (set >> g) & 1u; }
inline constexpr bool subset(GenSet a, GenSet b) { return (a & ~b) == 0; }
inline constexpr GenSet kAllGens = 0b111;

/// "" for the empty set, otherwise letters in r<s<t order, e.g. "st".
std::string genset_string(GenSet set);
GenSet parse_genset(std::string_view letters);

/// Order of a product of two distinct generators; nullopt stands for infinity.
using EdgeOrder = std::optional<int>;

/// A weighted rank-3 Coxeter system (W, S, L) with S = {r, s, t}.
class GroupConfig {
 public:
  /// Validates all m >= 2, weights >= 1, and equal weights across odd finite edges.
  /// Throws ConfigError otherwise.
  GroupConfig(EdgeOrder m_sr, EdgeOrder m_st, EdgeOrder m_rt, std::array<int, kRank> weights);

  /// Order of g*h; 1 when g == h.
  EdgeOrder order(int g, int h) const;
  int weight(int g) const { return weights_[g]; }
  const std::array<int, kRank>& weights() const { return weights_; }

  EdgeOrder m_sr() const { return m_sr_; }
  EdgeOrder m_st() const { return m_st_; }
  EdgeOrder m_rt() const { return m_rt_; }

  /// Weight of a word (L is constant on reduced expressions of an element).
  int word_weight(std::string_view word) const;

  /// Canonical one-line description, e.g. "m=(inf,2,2) L=(1,2,1)".
  std::string describe() const;

  /// Stable 64-bit hash of the canonical JSON form (used as a cache key).
  std::uint64_t hash() const;

  nlohmann::json to_json() const;
  /// Accepts {"m": {"sr": int|"inf", "st": ..., "rt": ...}, "weights": {"r": int, "s": int, "t": int}}.
  static GroupConfig from_json(const nlohmann::json& j);
  static GroupConfig from_file(const std::string& path);

  friend bool operator==(const GroupConfig&, const GroupConfig&) = default;

 private:
  EdgeOrder m_sr_, m_st_, m_rt_;
  std::array<int, kRank> weights_;
};

/// Parses "inf" / "∞" or a decimal integer.
EdgeOrder parse_edge_order(std::string_view text);
std::string edge_order_string(EdgeOrder m);

}  // namespace hecke

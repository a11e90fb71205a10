#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hecke/config.hpp"
#include "hecke/word.hpp"

namespace hecke {

enum class GroupType { finite, affine, other };

std::string to_string(GroupType type);

struct FiniteParabolic {
  GenSet gens = 0;
  Word longest;      ///< canonical word of w_I
  int longest_weight = 0;  ///< L(w_I)
};

struct ClassificationReport {
  GroupType type = GroupType::other;
  std::vector<FiniteParabolic> finite_parabolics;  ///< ordered by (|I|, letters)
  int N = 0;                                       ///< max L(w_I)
  std::vector<FiniteParabolic> M;                  ///< the w_I with L(w_I) = N
  std::optional<int> finite_weyl_order;            ///< |W_0| for affine types
  std::optional<int> group_order;                  ///< |W| for finite types

  bool in_M(GenSet gens) const;
  nlohmann::json to_json() const;
};

/// Length of the longest element of a finite rank-3 W (nullopt if W is infinite).
std::optional<int> longest_length(const GroupConfig& config);

ClassificationReport classify(const GroupConfig& config);

}  // namespace hecke

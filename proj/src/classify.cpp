#include "hecke/classify.hpp"

#include <algorithm>

#include "hecke/ball.hpp"

namespace hecke {

std::string to_string(GroupType type) {
  switch (type) {
    case GroupType::finite: return "finite";
    case GroupType::affine: return "affine";
    default: return "other";
  }
}

bool ClassificationReport::in_M(GenSet gens) const {
  return std::any_of(M.begin(), M.end(), [&](const FiniteParabolic& p) { return p.gens == gens; });
}

namespace {

nlohmann::json parabolic_json(const FiniteParabolic& p) {
  return {{"I", genset_string(p.gens)}, {"w_I", p.longest}, {"L", p.longest_weight}};
}

// Sorted edge orders; only meaningful when all three are finite.
std::array<int, 3> sorted_orders(const GroupConfig& c) {
  std::array<int, 3> m{*c.m_sr(), *c.m_st(), *c.m_rt()};
  std::sort(m.begin(), m.end());
  return m;
}

bool all_finite(const GroupConfig& c) { return c.m_sr() && c.m_st() && c.m_rt(); }

GroupType group_type(const GroupConfig& c) {
  if (!all_finite(c)) return GroupType::other;
  auto [a, b, d] = sorted_orders(c);
  // compare 1/a + 1/b + 1/d with 1
  long long lhs = 1LL * b * d + 1LL * a * d + 1LL * a * b;
  long long rhs = 1LL * a * b * d;
  if (lhs > rhs) return GroupType::finite;
  if (lhs == rhs) return GroupType::affine;
  return GroupType::other;
}

}  // namespace

std::optional<int> longest_length(const GroupConfig& config) {
  if (group_type(config) != GroupType::finite) return std::nullopt;
  auto [a, b, d] = sorted_orders(config);
  if (a == 2 && b == 2) return d + 1;
  if (a == 2 && b == 3 && d == 3) return 6;
  if (a == 2 && b == 3 && d == 4) return 9;
  return 15;  // (2,3,5)
}

nlohmann::json ClassificationReport::to_json() const {
  nlohmann::json parabolics = nlohmann::json::array();
  for (const auto& p : finite_parabolics) parabolics.push_back(parabolic_json(p));
  nlohmann::json m = nlohmann::json::array();
  for (const auto& p : M) m.push_back(p.longest);
  nlohmann::json j{{"type", to_string(type)}, {"finite_parabolics", parabolics}, {"N", N}, {"M", m}};
  if (finite_weyl_order) j["W0_order"] = *finite_weyl_order;
  if (group_order) j["order"] = *group_order;
  return j;
}

ClassificationReport classify(const GroupConfig& config) {
  ClassificationReport report;
  report.type = group_type(config);

  std::vector<GenSet> subsets{0, 0b001, 0b010, 0b100, 0b011, 0b101, 0b110, 0b111};
  std::optional<GroupBall> full;
  if (auto len = longest_length(config)) {
    full.emplace(config, *len);
    report.group_order = static_cast<int>(full->size());
  }
  for (GenSet I : subsets) {
    FiniteParabolic p{I, {}, 0};
    int count = __builtin_popcount(I);
    if (count <= 1) {
      p.longest = genset_string(I);
    } else if (count == 2) {
      int a = -1, b = -1;
      for (int g = 0; g < kRank; ++g)
        if (contains(I, g)) (a < 0 ? a : b) = g;
      EdgeOrder m = config.order(a, b);
      if (!m) continue;
      p.longest = normalize_word(alternating_word(a, b, *m), config);
    } else {
      if (!full) continue;
      p.longest = full->word(full->longest_element(kAllGens));
    }
    p.longest_weight = config.word_weight(p.longest);
    report.finite_parabolics.push_back(p);
  }
  for (const auto& p : report.finite_parabolics) report.N = std::max(report.N, p.longest_weight);
  for (const auto& p : report.finite_parabolics)
    if (p.longest_weight == report.N) report.M.push_back(p);

  if (report.type == GroupType::affine) {
    auto m = sorted_orders(config);
    if (m == std::array<int, 3>{3, 3, 3}) report.finite_weyl_order = 6;
    else if (m == std::array<int, 3>{2, 4, 4}) report.finite_weyl_order = 8;
    else report.finite_weyl_order = 12;  // (2,3,6)
  }
  return report;
}

}  // namespace hecke

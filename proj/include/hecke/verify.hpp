#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hecke/kernels.hpp"
#include "hecke/workspace.hpp"

namespace hecke {

enum class CheckStatus { pass, fail, inconclusive };
std::string to_string(CheckStatus status);

/// One property checked over a finite family of instances.
struct CheckItem {
  std::string name;
  CheckStatus status = CheckStatus::pass;
  std::size_t checked = 0;       ///< instances decided inside the ball
  std::size_t undecided = 0;     ///< instances that needed elements outside the ball
  nlohmann::json witnesses = nlohmann::json::array();  ///< failing (or undecided) instances, capped
  std::string note;

  void fail(nlohmann::json witness);
  void undecide(nlohmann::json witness);
  /// Marks the item inconclusive when some instances were undecided and none failed.
  void settle();
};

struct SuiteReport {
  std::string suite;
  GroupConfig config;
  int radius = 0;
  std::uint64_t seed = 0;
  std::vector<CheckItem> items;
  double elapsed_ms = 0;

  bool passed() const;  ///< no item failed
  std::size_t count(CheckStatus status) const;
  const CheckItem* find(const std::string& name) const;
  nlohmann::json to_json() const;
  std::string to_table() const;
};

inline constexpr std::uint64_t kDefaultSeed = 20240601;

struct SuiteOptions {
  int radius = 4;
  std::uint64_t seed = kDefaultSeed;
  Exec exec;
  int witness_radius = 0;       ///< cells suite: 0 means equal to radius
  std::size_t samples = 200;    ///< sampled checks
  std::size_t exhaustive_limit = 50'000;  ///< below this many instances, sampled checks run exhaustively
};

/// Degree bound for all in-ball pairs, the elementary structure-constant facts
/// (f_{x,y,e}, degree bound by weights, cyclic symmetry, longest parabolic elements),
/// the reduced products through w_J and the per-case degree tables.
SuiteReport check_boundedness(const GroupConfig& config, const SuiteOptions& options);
/// P1-P15 and the witness property P~, restricted to the lowest cell.
SuiteReport check_P_suite(const GroupConfig& config, const SuiteOptions& options);
/// Lowest cell = N-witness set, left cell partition and count, C_{x w_J y} = E_x C_{w_J} F_y.
SuiteReport check_cell_structure(const GroupConfig& config, const SuiteOptions& options);
/// Closed product formula vs the based-ring oracle, the two lemmas on indecomposables,
/// reference indecomposable tables.
SuiteReport check_based_ring(const GroupConfig& config, const SuiteOptions& options);
/// bar(C_w) = C_w and C_w - T_w in H_{<0} for every element of the ball.
SuiteReport check_kl(const GroupConfig& config, const SuiteOptions& options);
/// pi_N(f_{x,y,z^-1}) = pi_N(h_{x,y,z^-1}) for x, y, z in the lowest cell.
SuiteReport check_gamma_beta(const GroupConfig& config, const SuiteOptions& options);

const std::vector<std::string>& suite_names();
/// Dispatch by name; ConfigError on unknown names.
SuiteReport run_suite(const std::string& name, const GroupConfig& config, const SuiteOptions& options);

/// Reference indecomposable sets for m = (inf,2,2) and (inf,inf,2), selected by the weights.
/// Empty optional for other configs.
std::optional<std::vector<Word>> reference_indecomposables(const GroupConfig& config);

/// Which of the three hard cases of the boundedness proof the config falls in (1, 2, 3),
/// read in the labelling m_rt = 2, m_sr >= m_st. 0 when none applies.
int boundedness_case(const GroupConfig& config);

}  // namespace hecke

#pragma once

#include <array>
#include <cstdint>
#include <limits>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "hecke/config.hpp"
#include "hecke/word.hpp"

namespace hecke {

/// Index of an element inside a GroupBall. Indices follow ShortLex order, so
/// a larger index never has smaller length.
using ElemId = std::uint32_t;
inline constexpr ElemId kNoElem = std::numeric_limits<ElemId>::max();

/// Default limit on ball size; exceeding it raises ResourceError.
inline constexpr std::size_t kDefaultBallCap = 5'000'000;

/// All elements of W of length <= radius, with left/right Cayley edges.
///
/// Construction is exact: for w with a known right descent a, a generator b is a right
/// descent iff stripping alternating right descents a, b, a, ... from w succeeds m_ab
/// times (the {a,b}-component of w is then the longest element of W_{ab}). Everything
/// needed for level k+1 lives in levels <= k, so the ball grows one level at a time.
///
/// Immutable after construction apart from the lazily filled Bruhat-interval cache,
/// which is safe for concurrent use.
class GroupBall {
 public:
  GroupBall(const GroupConfig& config, int radius, std::size_t cap = kDefaultBallCap);

  GroupBall(const GroupBall&) = delete;
  GroupBall& operator=(const GroupBall&) = delete;

  const GroupConfig& config() const { return config_; }
  int radius() const { return radius_; }
  std::size_t size() const { return length_.size(); }
  static constexpr ElemId identity() { return 0; }

  int length(ElemId w) const { return length_[w]; }
  int weight(ElemId w) const { return weight_[w]; }
  const Word& word(ElemId w) const { return word_[w]; }
  GenSet left_descents(ElemId w) const { return left_desc_[w]; }
  GenSet right_descents(ElemId w) const { return right_desc_[w]; }
  ElemId inverse(ElemId w) const { return inverse_[w]; }

  /// w·g, or kNoElem when the product leaves the ball.
  ElemId right_mul(ElemId w, int g) const { return right_[w][g]; }
  /// g·w, or kNoElem when the product leaves the ball.
  ElemId left_mul(ElemId w, int g) const { return left_[w][g]; }

  /// Number of elements of length <= k.
  std::size_t count_upto(int k) const;
  /// Elements of length exactly k, as an index range [first, last).
  std::pair<ElemId, ElemId> level(int k) const;

  /// Element represented by an arbitrary word, or nullopt if it cannot be reached inside
  /// the ball (some partial product leaves it).
  std::optional<ElemId> find(std::string_view word) const;
  /// As find(), but throws OutOfBallError.
  ElemId at(std::string_view word) const;

  /// Group product; throws OutOfBallError when a partial product leaves the ball.
  ElemId multiply(ElemId x, ElemId y) const;
  std::optional<ElemId> try_multiply(ElemId x, ElemId y) const;

  Element element(ElemId w) const;

  bool bruhat_leq(ElemId x, ElemId y) const;

  /// Sorted list of all u <= w in the Bruhat order. Cached; thread-safe.
  std::span<const ElemId> bruhat_interval(ElemId w) const;

  /// All (u, y) with w = u·y and l(u) + l(y) = l(w), sorted by u.
  std::vector<std::pair<ElemId, ElemId>> prefix_decompositions(ElemId w) const;

  /// Longest element of the finite parabolic W_I, or kNoElem when W_I is infinite or
  /// its longest element lies outside the ball.
  ElemId longest_element(GenSet parabolic) const;

 private:
  void build(std::size_t cap);
  void finalize_order();

  GroupConfig config_;
  int radius_;
  std::vector<int> length_;
  std::vector<int> weight_;
  std::vector<Word> word_;
  std::vector<GenSet> left_desc_, right_desc_;
  std::vector<std::array<ElemId, kRank>> right_, left_;
  std::vector<ElemId> inverse_;
  std::vector<std::size_t> level_start_;

  mutable std::unique_ptr<std::once_flag[]> interval_once_;
  mutable std::vector<std::vector<ElemId>> interval_;
};

}  // namespace hecke

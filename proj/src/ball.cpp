#include "hecke/ball.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <unordered_map>

#include "hecke/errors.hpp"

namespace hecke {

namespace {

// Letter at position i (0-based from the left) of the alternating word of length n ending in a.
int alternating_letter_ending_in(int a, int c, int n, int i) { return ((n - 1 - i) % 2 == 0) ? a : c; }

}  // namespace

GroupBall::GroupBall(const GroupConfig& config, int radius, std::size_t cap)
    : config_(config), radius_(radius) {
  if (radius < 0) throw ConfigError("ball radius must be >= 0");
  build(cap);
  finalize_order();
  interval_once_ = std::make_unique<std::once_flag[]>(size());
  interval_.resize(size());
}

void GroupBall::build(std::size_t cap) {
  // Temporary, creation-ordered storage. Only right edges and right descents are needed
  // while growing; everything else is derived afterwards.
  length_.push_back(0);
  right_desc_.push_back(0);
  right_.push_back({kNoElem, kNoElem, kNoElem});
  std::vector<ElemId> parent{kNoElem};
  std::vector<int> parent_letter{-1};

  // Given x with x·a = below (a a right descent of x), decide whether c is a right descent
  // of x and return x·c if so.
  auto descent_via_strip = [&](ElemId below, int a, int c) -> ElemId {
    EdgeOrder m = config_.order(a, c);
    if (!m) return kNoElem;
    ElemId cur = below;
    for (int j = 1; j < *m; ++j) {
      int letter = (j % 2 == 1) ? c : a;
      if (!contains(right_desc_[cur], letter)) return kNoElem;
      cur = right_[cur][letter];
    }
    // cur is the minimal coset representative u; x·c = u · (alternating word of length m-1 ending in a)
    for (int i = 0; i < *m - 1; ++i) {
      int letter = alternating_letter_ending_in(a, c, *m - 1, i);
      ElemId next = right_[cur][letter];
      if (next == kNoElem) throw InvariantViolation("ball construction: missing up edge");
      cur = next;
    }
    return cur;
  };

  std::vector<ElemId> current{0};
  for (int k = 0; k < radius_; ++k) {
    std::vector<ElemId> next_level;
    std::unordered_map<std::uint64_t, ElemId> by_key;
    for (ElemId w : current) {
      for (int b = 0; b < kRank; ++b) {
        if (contains(right_desc_[w], b)) continue;
        // x = w·b has length k+1; compute its right descents and down edges.
        GenSet desc = gen_bit(b);
        std::array<ElemId, kRank> down{kNoElem, kNoElem, kNoElem};
        down[b] = w;
        for (int c = 0; c < kRank; ++c) {
          if (c == b) continue;
          ElemId xc = descent_via_strip(w, b, c);
          if (xc != kNoElem) {
            desc |= gen_bit(c);
            down[c] = xc;
          }
        }
        int c0 = 0;
        while (!contains(desc, c0)) ++c0;
        std::uint64_t key = static_cast<std::uint64_t>(down[c0]) * kRank + c0;
        auto [it, inserted] = by_key.try_emplace(key, static_cast<ElemId>(length_.size()));
        if (inserted) {
          if (length_.size() >= cap)
            throw ResourceError("ball enumeration exceeded cap of " + std::to_string(cap) + " elements");
          length_.push_back(k + 1);
          right_desc_.push_back(desc);
          right_.push_back(down);
          parent.push_back(w);
          parent_letter.push_back(b);
          next_level.push_back(it->second);
        }
        right_[w][b] = it->second;
      }
    }
    current = std::move(next_level);
  }

  const std::size_t n = length_.size();
  // one reduced word per element from the creation path
  std::vector<Word> path(n);
  for (ElemId x = 1; x < n; ++x) path[x] = path[parent[x]] + gen_char(parent_letter[x]);

  inverse_.assign(n, kNoElem);
  for (ElemId x = 0; x < n; ++x) {
    ElemId cur = 0;
    for (auto it = path[x].rbegin(); it != path[x].rend(); ++it) cur = right_[cur][gen_index(*it)];
    inverse_[x] = cur;
  }
  left_.assign(n, {kNoElem, kNoElem, kNoElem});
  left_desc_.assign(n, 0);
  for (ElemId x = 0; x < n; ++x) {
    ElemId xi = inverse_[x];
    left_desc_[x] = right_desc_[xi];
    for (int g = 0; g < kRank; ++g) {
      ElemId y = right_[xi][g];
      left_[x][g] = (y == kNoElem) ? kNoElem : inverse_[y];
    }
  }
  // ShortLex-least word: smallest left descent, then the least word of the rest.
  word_.assign(n, Word());
  std::vector<ElemId> by_length(n);
  std::iota(by_length.begin(), by_length.end(), 0);
  std::stable_sort(by_length.begin(), by_length.end(),
                   [&](ElemId a, ElemId b) { return length_[a] < length_[b]; });
  for (ElemId x : by_length) {
    if (x == 0) continue;
    int c = 0;
    while (!contains(left_desc_[x], c)) ++c;
    word_[x] = gen_char(c) + word_[left_[x][c]];
  }
}

void GroupBall::finalize_order() {
  const std::size_t n = length_.size();
  std::vector<ElemId> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](ElemId a, ElemId b) { return shortlex_less(word_[a], word_[b]); });
  std::vector<ElemId> rank(n);
  for (ElemId i = 0; i < n; ++i) rank[order[i]] = i;
  auto remap = [&](ElemId id) { return id == kNoElem ? kNoElem : rank[id]; };

  auto permute = [&](auto& vec) {
    std::remove_reference_t<decltype(vec)> out(n);
    for (ElemId i = 0; i < n; ++i) out[i] = std::move(vec[order[i]]);
    vec = std::move(out);
  };
  permute(length_);
  permute(word_);
  permute(left_desc_);
  permute(right_desc_);
  permute(right_);
  permute(left_);
  permute(inverse_);
  for (auto& edges : right_)
    for (auto& e : edges) e = remap(e);
  for (auto& edges : left_)
    for (auto& e : edges) e = remap(e);
  for (auto& e : inverse_) e = remap(e);

  weight_.resize(n);
  for (ElemId i = 0; i < n; ++i) weight_[i] = config_.word_weight(word_[i]);

  level_start_.assign(radius_ + 2, n);
  for (ElemId i = n; i-- > 0;) level_start_[length_[i]] = i;
  for (int k = radius_; k >= 0; --k)
    if (level_start_[k] > level_start_[k + 1]) level_start_[k] = level_start_[k + 1];
}

std::size_t GroupBall::count_upto(int k) const {
  if (k < 0) return 0;
  if (k >= radius_) return size();
  return level_start_[k + 1];
}

std::pair<ElemId, ElemId> GroupBall::level(int k) const {
  if (k < 0 || k > radius_) return {0, 0};
  return {static_cast<ElemId>(level_start_[k]), static_cast<ElemId>(level_start_[k + 1])};
}

std::optional<ElemId> GroupBall::find(std::string_view word) const {
  ElemId cur = identity();
  for (char c : word) {
    int g = gen_index(c);
    if (g < 0) throw ConfigError("bad letter '" + std::string(1, c) + "' in word");
    cur = right_[cur][g];
    if (cur == kNoElem) return std::nullopt;
  }
  return cur;
}

ElemId GroupBall::at(std::string_view word) const {
  auto id = find(word);
  if (!id)
    throw OutOfBallError("word '" + std::string(word) + "' leaves the ball of radius " +
                         std::to_string(radius_));
  return *id;
}

std::optional<ElemId> GroupBall::try_multiply(ElemId x, ElemId y) const {
  ElemId cur = x;
  for (char c : word_[y]) {
    cur = right_[cur][gen_index(c)];
    if (cur == kNoElem) return std::nullopt;
  }
  return cur;
}

ElemId GroupBall::multiply(ElemId x, ElemId y) const {
  auto r = try_multiply(x, y);
  if (!r)
    throw OutOfBallError("product " + display_word(word_[x]) + "*" + display_word(word_[y]) +
                         " leaves the ball of radius " + std::to_string(radius_));
  return *r;
}

Element GroupBall::element(ElemId w) const {
  return Element{word_[w], length_[w], weight_[w], left_desc_[w], right_desc_[w]};
}

bool GroupBall::bruhat_leq(ElemId x, ElemId y) const {
  while (true) {
    if (length_[x] > length_[y]) return false;
    if (length_[y] == 0) return x == identity();
    if (length_[x] == 0) return true;
    int s = 0;
    while (!contains(right_desc_[y], s)) ++s;
    if (contains(right_desc_[x], s)) x = right_[x][s];
    y = right_[y][s];
  }
}

std::span<const ElemId> GroupBall::bruhat_interval(ElemId w) const {
  std::call_once(interval_once_[w], [&] {
    std::vector<ElemId> out;
    if (w == identity()) {
      out = {identity()};
    } else {
      int s = 0;
      while (!contains(right_desc_[w], s)) ++s;
      auto lower = bruhat_interval(right_[w][s]);
      out.reserve(2 * lower.size());
      for (ElemId u : lower) {
        out.push_back(u);
        out.push_back(right_[u][s]);
      }
      std::sort(out.begin(), out.end());
      out.erase(std::unique(out.begin(), out.end()), out.end());
    }
    interval_[w] = std::move(out);
  });
  return interval_[w];
}

std::vector<std::pair<ElemId, ElemId>> GroupBall::prefix_decompositions(ElemId w) const {
  std::vector<std::pair<ElemId, ElemId>> out{{w, identity()}};
  std::unordered_map<ElemId, ElemId> found{{w, identity()}};
  for (std::size_t i = 0; i < out.size(); ++i) {
    auto [u, y] = out[i];
    for (int s = 0; s < kRank; ++s) {
      if (!contains(right_desc_[u], s)) continue;
      ElemId u2 = right_[u][s];
      if (found.count(u2)) continue;
      ElemId y2 = left_[y][s];
      found.emplace(u2, y2);
      out.emplace_back(u2, y2);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

ElemId GroupBall::longest_element(GenSet parabolic) const {
  std::vector<int> gens;
  for (int g = 0; g < kRank; ++g)
    if (contains(parabolic, g)) gens.push_back(g);
  if (gens.empty()) return identity();
  if (gens.size() == 1) return right_[identity()][gens[0]];
  if (gens.size() == 2) {
    EdgeOrder m = config_.order(gens[0], gens[1]);
    if (!m || *m > radius_) return kNoElem;
    return find(alternating_word(gens[0], gens[1], *m)).value_or(kNoElem);
  }
  for (ElemId w = 0; w < size(); ++w)
    if (right_desc_[w] == kAllGens) return w;
  return kNoElem;
}

}  // namespace hecke

#include "hecke/word.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

#include "hecke/errors.hpp"

namespace hecke {

bool shortlex_less(std::string_view a, std::string_view b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;  // 'r' < 's' < 't' in ASCII
}

Word parse_word(std::string_view text) {
  if (text == "e") return {};
  for (char c : text)
    if (gen_index(c) < 0) throw ConfigError("bad letter '" + std::string(1, c) + "' in word");
  return Word(text);
}

std::string display_word(std::string_view word) { return word.empty() ? "e" : std::string(word); }

Word alternating_word(int first, int second, int length) {
  Word w;
  for (int i = 0; i < length; ++i) w.push_back(gen_char(i % 2 == 0 ? first : second));
  return w;
}

namespace {

// Visits the braid orbit of `start`. Stops early and returns the position of an "aa"
// factor (with the word containing it) when one is found.
struct OrbitResult {
  std::vector<Word> words;
  Word with_square;
  std::size_t square_at = std::string::npos;
};

OrbitResult explore_orbit(const Word& start, const GroupConfig& config, std::size_t cap,
                          std::size_t& budget_used, bool stop_at_square) {
  OrbitResult result;
  std::unordered_set<Word> seen{start};
  std::deque<Word> queue{start};
  while (!queue.empty()) {
    Word w = std::move(queue.front());
    queue.pop_front();
    if (++budget_used > cap)
      throw ResourceError("word problem: braid orbit exceeded node cap of " + std::to_string(cap));
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      if (w[i] == w[i + 1] && stop_at_square) {
        result.with_square = w;
        result.square_at = i;
        return result;
      }
    }
    // braid moves: any alternating factor of length m_ab flips to the other alternating word
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      int a = gen_index(w[i]), b = gen_index(w[i + 1]);
      if (a == b) continue;
      EdgeOrder m = config.order(a, b);
      if (!m) continue;
      std::size_t len = static_cast<std::size_t>(*m);
      if (i + len > w.size()) continue;
      bool alternating = true;
      for (std::size_t k = 0; k < len && alternating; ++k)
        alternating = w[i + k] == (k % 2 == 0 ? w[i] : w[i + 1]);
      if (!alternating) continue;
      Word next = w;
      for (std::size_t k = 0; k < len; ++k) next[i + k] = (k % 2 == 0 ? w[i + 1] : w[i]);
      if (seen.insert(next).second) queue.push_back(std::move(next));
    }
    result.words.push_back(std::move(w));
  }
  return result;
}

}  // namespace

Word normalize_word(std::string_view word, const GroupConfig& config, std::size_t cap) {
  Word current(word);
  std::size_t used = 0;
  while (true) {
    OrbitResult orbit = explore_orbit(current, config, cap, used, true);
    if (orbit.square_at != std::string::npos) {
      current = orbit.with_square;
      current.erase(orbit.square_at, 2);
      continue;
    }
    return *std::min_element(orbit.words.begin(), orbit.words.end());
  }
}

std::vector<Word> reduced_words(std::string_view reduced, const GroupConfig& config,
                                std::size_t cap) {
  std::size_t used = 0;
  OrbitResult orbit = explore_orbit(Word(reduced), config, cap, used, false);
  std::sort(orbit.words.begin(), orbit.words.end());
  return orbit.words;
}

Element normalize(std::string_view word, const GroupConfig& config, std::size_t cap) {
  Element e;
  e.word = normalize_word(word, config, cap);
  e.length = static_cast<int>(e.word.size());
  e.weight = config.word_weight(e.word);
  for (int g = 0; g < kRank; ++g) {
    Word left = Word(1, gen_char(g)) + e.word;
    Word right = e.word + gen_char(g);
    if (normalize_word(left, config, cap).size() < e.word.size()) e.left_descents |= gen_bit(g);
    if (normalize_word(right, config, cap).size() < e.word.size()) e.right_descents |= gen_bit(g);
  }
  return e;
}

Element multiply(const Element& x, const Element& y, const GroupConfig& config) {
  return normalize(x.word + y.word, config);
}

Element inverse(const Element& x, const GroupConfig& config) {
  Word reversed(x.word.rbegin(), x.word.rend());
  return normalize(reversed, config);
}

bool bruhat_leq(const Element& x, const Element& y, const GroupConfig& config) {
  if (x.length > y.length) return false;
  if (y.length == 0) return x.length == 0;
  if (x.length == 0) return true;
  int s = gen_index(y.word.back());
  Element ys = normalize(std::string_view(y.word).substr(0, y.word.size() - 1), config);
  if (contains(x.right_descents, s)) {
    Element xs = normalize(x.word + gen_char(s), config);
    return bruhat_leq(xs, ys, config);
  }
  return bruhat_leq(x, ys, config);
}

}  // namespace hecke

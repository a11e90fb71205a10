#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "hecke/config.hpp"

namespace hecke {

/// A word over {r,s,t}; the empty word is the identity e.
using Word = std::string;

/// Node budget for the braid-orbit search in `normalize`.
inline constexpr std::size_t kDefaultOrbitCap = 2'000'000;

/// An element of W given by its ShortLex-least reduced word (r < s < t), with cached data.
struct Element {
  Word word;
  int length = 0;
  int weight = 0;
  GenSet left_descents = 0;
  GenSet right_descents = 0;

  friend bool operator==(const Element& a, const Element& b) { return a.word == b.word; }
};

/// True iff a < b in ShortLex order (shorter first, then lexicographic with r < s < t).
bool shortlex_less(std::string_view a, std::string_view b);

/// Throws ConfigError on letters outside {r,s,t}. Accepts "e" for the empty word.
Word parse_word(std::string_view text);
/// "e" for the empty word, else the word itself.
std::string display_word(std::string_view word);

/// Tits' solution to the word problem: explores the braid-move orbit, deleting "aa"
/// whenever it appears, and returns the ShortLex-least reduced word of the element.
/// Throws ResourceError when more than `cap` words are visited.
Word normalize_word(std::string_view word, const GroupConfig& config,
                    std::size_t cap = kDefaultOrbitCap);

/// All reduced words of the element represented by the reduced word `reduced` (braid orbit).
std::vector<Word> reduced_words(std::string_view reduced, const GroupConfig& config,
                                std::size_t cap = kDefaultOrbitCap);

Element normalize(std::string_view word, const GroupConfig& config,
                  std::size_t cap = kDefaultOrbitCap);
Element multiply(const Element& x, const Element& y, const GroupConfig& config);
Element inverse(const Element& x, const GroupConfig& config);

/// Bruhat order via the lifting property, recursing on a right descent of y.
bool bruhat_leq(const Element& x, const Element& y, const GroupConfig& config);

/// Alternating word a b a b ... of the given length.
Word alternating_word(int first, int second, int length);

}  // namespace hecke

#include <random>

#include "doctest.h"
#include "hecke/ball.hpp"
#include "hecke/classify.hpp"
#include "hecke/errors.hpp"
#include "support.hpp"

using namespace hecke;
using support::inf;

TEST_CASE("config validation") {
  CHECK_THROWS_AS(GroupConfig(1, 2, 2, {1, 1, 1}), ConfigError);
  CHECK_THROWS_AS(GroupConfig(2, 2, 2, {0, 1, 1}), ConfigError);
  // odd edge forces equal weights
  CHECK_THROWS_AS(GroupConfig(3, 2, 2, {1, 2, 1}), ConfigError);
  CHECK_NOTHROW(GroupConfig(4, 2, 2, {1, 2, 1}));
  GroupConfig c(inf, 3, 2, {1, 1, 1});
  CHECK(GroupConfig::from_json(c.to_json()) == c);
  CHECK(c.describe() == "m=(inf,3,2) L=(1,1,1)");
  CHECK(parse_edge_order("inf") == std::nullopt);
  CHECK_THROWS_AS(parse_edge_order("x"), ConfigError);
}

TEST_CASE("normalize small cases") {
  GroupConfig c(3, 3, 2, {1, 1, 1});
  CHECK(normalize_word("ss", c) == "");
  CHECK(normalize_word("tst", c) == "sts");
  GroupConfig d(inf, 2, 2, {1, 2, 1});
  CHECK(normalize_word("tsrst", d) == "srs");
  CHECK(parse_word("e") == "");
  CHECK_THROWS_AS(parse_word("rx"), ConfigError);
}

TEST_CASE("normalize agrees with the braid-orbit oracle") {
  std::mt19937 rng(7);
  for (const auto& c : support::sample_configs()) {
    for (int trial = 0; trial < 40; ++trial) {
      std::string w;
      const int len = static_cast<int>(rng() % 9);
      for (int k = 0; k < len; ++k) w += "rst"[rng() % 3];
      const Word n = normalize_word(w, c);
      CHECK_MESSAGE(n == oracle::normalize(w, c), c.describe() << " " << w);
      CHECK(normalize_word(n, c) == n);
      // weight is constant on the braid orbit of a reduced word
      for (const auto& r : reduced_words(n, c)) CHECK(c.word_weight(r) == c.word_weight(n));
    }
  }
}

TEST_CASE("normalize is idempotent on long random words") {
  std::mt19937 rng(11);
  for (const auto& c : support::sample_configs())
    for (int trial = 0; trial < 20; ++trial) {
      std::string w;
      for (int k = 0; k < 12; ++k) w += "rst"[rng() % 3];
      Word n = normalize_word(w, c);
      CHECK(normalize_word(n, c) == n);
    }
}

TEST_CASE("multiply, inverse and descents") {
  GroupConfig d(inf, 2, 2, {1, 2, 1});
  CHECK(multiply(normalize("sr", d), normalize("rs", d), d).word == "");
  CHECK(multiply(normalize("", d), normalize("srt", d), d).word == "srt");
  Element st_rs = multiply(normalize("st", d), normalize("rs", d), d);
  CHECK(st_rs.length == 4);
  CHECK(st_rs.word == oracle::normalize("strs", d));
  Element e = normalize("", d);
  CHECK(e.left_descents == 0);
  CHECK(e.right_descents == 0);
  Element srst = normalize("srst", d);
  CHECK(srst.left_descents == parse_genset("st"));
  CHECK(srst.right_descents == parse_genset("st"));
  GroupConfig f(4, 3, 2, {1, 1, 1});
  Element w_st = normalize("sts", f);
  CHECK(w_st.left_descents == parse_genset("st"));
  CHECK(w_st.right_descents == parse_genset("st"));
  CHECK(inverse(normalize("rst", f), f).word == oracle::normalize("tsr", f));
}

TEST_CASE("Bruhat order agrees with the subword oracle") {
  GroupConfig c(3, 3, 2, {1, 1, 1});
  CHECK(bruhat_leq(normalize("s", c), normalize("sts", c), c));
  GroupConfig dih(inf, 3, 2, {1, 1, 1});
  CHECK_FALSE(bruhat_leq(normalize("sr", dih), normalize("st", dih), dih));
  for (const auto& cfg : {GroupConfig(3, 3, 3, {1, 1, 1}), GroupConfig(inf, 2, 2, {1, 2, 1})}) {
    GroupBall ball(cfg, 4);
    for (ElemId x = 0; x < ball.size(); ++x)
      for (ElemId y = 0; y < ball.size(); ++y) {
        bool expected = oracle::bruhat_leq(ball.word(x), ball.word(y), cfg);
        CHECK(ball.bruhat_leq(x, y) == expected);
        CHECK(bruhat_leq(ball.element(x), ball.element(y), cfg) == expected);
      }
  }
}

TEST_CASE("ball sizes") {
  CHECK(GroupBall(GroupConfig(2, 2, 2, {1, 1, 1}), 3).size() == 8);
  CHECK(GroupBall(GroupConfig(3, 3, 3, {1, 1, 1}), 2).size() == 10);
  CHECK(GroupBall(GroupConfig(inf, inf, inf, {1, 1, 1}), 0).size() == 1);
  CHECK(GroupBall(GroupConfig(2, 3, 5, {1, 1, 1}), 15).size() == 120);
  CHECK(GroupBall(GroupConfig(2, 3, 3, {1, 1, 1}), 8).size() == 24);
  CHECK_THROWS_AS(GroupBall(GroupConfig(inf, inf, inf, {1, 1, 1}), 30, 1000), ResourceError);
}

TEST_CASE("ball matches the BFS oracle and is ShortLex ordered") {
  for (const auto& c : support::sample_configs()) {
    GroupBall ball(c, 5);
    auto expected = oracle::ball(c, 5);
    REQUIRE(ball.size() == expected.size());
    for (ElemId w = 0; w < ball.size(); ++w) CHECK(ball.word(w) == expected[w]);
  }
}

TEST_CASE("ball structure: exchange, levels, inverses, products") {
  for (const auto& c : support::sample_configs()) {
    GroupBall ball(c, 6);
    for (ElemId w = 0; w < ball.size(); ++w) {
      CHECK(ball.length(w) == static_cast<int>(ball.word(w).size()));
      CHECK(ball.weight(w) == c.word_weight(ball.word(w)));
      CHECK(ball.inverse(ball.inverse(w)) == w);
      for (int s = 0; s < kRank; ++s) {
        ElemId sw = ball.left_mul(w, s);
        if (contains(ball.left_descents(w), s)) CHECK(ball.length(sw) == ball.length(w) - 1);
        else if (sw != kNoElem) CHECK(ball.length(sw) == ball.length(w) + 1);
      }
      if (w != 0) {
        bool down = false;
        for (int s = 0; s < kRank; ++s)
          if (contains(ball.right_descents(w), s)) down = down || ball.length(ball.right_mul(w, s)) == ball.length(w) - 1;
        CHECK(down);
      }
    }
    const auto n = static_cast<ElemId>(ball.count_upto(3));
    for (ElemId x = 0; x < n; ++x)
      for (ElemId y = 0; y < n; ++y)
        CHECK(ball.word(ball.multiply(x, y)) == oracle::normalize(ball.word(x) + ball.word(y), c));
  }
}

TEST_CASE("prefix decompositions") {
  GroupConfig c(inf, 2, 2, {1, 2, 1});
  GroupBall ball(c, 4);
  auto s = ball.at("s");
  CHECK(ball.prefix_decompositions(s) == std::vector<std::pair<ElemId, ElemId>>{{0, s}, {s, 0}});
  CHECK(ball.prefix_decompositions(0) == std::vector<std::pair<ElemId, ElemId>>{{0, 0}});
  auto st = ball.at("st");
  auto decs = ball.prefix_decompositions(st);
  std::set<std::pair<std::string, std::string>> words;
  for (auto [u, y] : decs) words.insert({ball.word(u), ball.word(y)});
  CHECK(words == std::set<std::pair<std::string, std::string>>{{"", "st"}, {"s", "t"}, {"t", "s"}, {"st", ""}});
  // every decomposition is length additive and multiplies back
  for (ElemId w = 0; w < ball.size(); ++w)
    for (auto [u, y] : ball.prefix_decompositions(w)) {
      CHECK(ball.multiply(u, y) == w);
      CHECK(ball.length(u) + ball.length(y) == ball.length(w));
    }
}

TEST_CASE("classification") {
  auto r = classify(GroupConfig(inf, 2, 2, {1, 2, 1}));
  CHECK(r.N == 3);
  REQUIRE(r.M.size() == 1);
  CHECK(r.M[0].longest == "st");
  CHECK(r.finite_parabolics.size() == 6);
  auto a = classify(GroupConfig(3, 3, 3, {1, 1, 1}));
  CHECK(a.type == GroupType::affine);
  CHECK(a.N == 3);
  CHECK(a.M.size() == 3);
  CHECK(a.finite_weyl_order == 6);
  CHECK(classify(GroupConfig(2, 3, 5, {1, 1, 1})).type == GroupType::finite);
  CHECK(classify(GroupConfig(2, 3, 5, {1, 1, 1})).group_order == 120);
  CHECK(classify(GroupConfig(inf, 3, 2, {1, 1, 1})).type == GroupType::other);
  CHECK(classify(GroupConfig(4, 4, 2, {1, 1, 1})).type == GroupType::affine);
}

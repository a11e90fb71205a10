#include "doctest.h"
#include "hecke/errors.hpp"
#include "hecke/workspace.hpp"
#include "support.hpp"

using namespace hecke;
using support::inf;

TEST_CASE("based ring products") {
  Workspace ws(GroupConfig(inf, 2, 2, {1, 2, 1}), 10);
  const auto& b = ws.ball();
  const auto& ring = ws.jring();
  const ElemId st = b.at("st"), srst = b.at("srst");
  CHECK(ring.product(st, st) == JElement::from_terms({{st, 1}}));
  JElement sq = ring.product(srst, srst);
  CHECK(sq == JElement::from_terms({{st, 1}, {b.at("srsrst"), 1}}));
  CHECK(sq.to_string(b) == "t_st + t_srsrst");
  // mismatched frames multiply to zero
  CHECK(ring.product(b.at("str"), st).is_zero());
  CHECK_THROWS_AS(ring.product(b.at("r"), st), DomainError);
}

TEST_CASE("indecomposables") {
  Workspace ws(GroupConfig(inf, 2, 2, {1, 2, 1}), 12);
  const auto& b = ws.ball();
  const auto& ring = ws.jring();
  CHECK(ring.is_indecomposable(b.at("srst")));
  CHECK_FALSE(ring.is_indecomposable(b.at("st")));
  CHECK_FALSE(ring.is_indecomposable(b.at("srsrst")));
  CHECK_THROWS_AS(ring.is_indecomposable(b.at("str")), DomainError);
  for (auto reading : {GlueReading::amalgam, GlueReading::non_additive}) {
    std::vector<std::string> words;
    for (ElemId x : ring.indecomposables(6, reading)) words.push_back(b.word(x));
    CHECK(words == std::vector<std::string>{"srst"});
  }
  CHECK(ring.reading_discrepancies(6).empty());
}

TEST_CASE("closed product matches the structure-constant product") {
  for (const auto& c : {GroupConfig(inf, 2, 2, {1, 2, 1}), GroupConfig(inf, 2, 2, {1, 1, 1}),
                        GroupConfig(inf, 2, 2, {2, 1, 1}), GroupConfig(inf, inf, 2, {1, 3, 1}),
                        GroupConfig(inf, 3, 2, {1, 1, 1})}) {
    Workspace ws(c, 12);
    const auto& ring = ws.jring();
    std::vector<ElemId> P;
    for (ElemId x = 0; x < ws.ball().count_upto(6); ++x)
      if (ring.in_P(x)) P.push_back(x);
    bool saw_delta = false, saw_plain = false;
    for (ElemId x : ring.indecomposables(6))
      for (ElemId y : P) {
        if (!ring.closed_product_applies(x, y)) continue;
        ClosedProduct cp = ring.closed_product(x, y);
        (cp.delta ? saw_delta : saw_plain) = true;
        CHECK(cp.as_jelement() == ring.product(x, y));
      }
    CHECK(saw_plain);
    if (c == GroupConfig(inf, 2, 2, {1, 2, 1})) CHECK(saw_delta);
  }
  Workspace aff(GroupConfig(3, 3, 3, {1, 1, 1}), 6);
  const auto& b = aff.ball();
  CHECK_THROWS_AS(aff.jring().closed_product(b.at("srs"), b.at("srs")), DomainError);
}

TEST_CASE("structural properties of indecomposables") {
  for (const auto& c : support::sample_configs()) {
    Workspace ws(c, 10);
    const auto& ring = ws.jring();
    for (ElemId x = 0; x < ws.ball().count_upto(5); ++x) {
      if (!ring.in_P(x)) continue;
      CHECK(ring.descent_split_holds(x));
      if (ring.is_indecomposable(x)) CHECK(ring.tail_property_holds(x));
    }
  }
}

TEST_CASE("distinguished involution acts as a right identity") {
  Workspace ws(GroupConfig(inf, 2, 2, {1, 2, 1}), 12);
  const auto& atlas = ws.atlas();
  for (const auto& [id, members] : atlas.enumerate_left_cells(5).cells) {
    ElemId d = distinguished(id, atlas, ws.table());
    for (ElemId x : members) CHECK(ws.jring().product(x, d) == JElement::from_terms({{x, 1}}));
  }
}

#include <random>

#include "doctest.h"
#include "hecke/classify.hpp"
#include "hecke/errors.hpp"
#include "hecke/hecke_t.hpp"
#include "support.hpp"

using namespace hecke;
using support::inf;

TEST_CASE("generator products") {
  GroupConfig c(inf, 2, 2, {1, 2, 1});
  GroupBall ball(c, 6);
  HeckeAlgebra alg(ball);
  const ElemId s = ball.at("s"), r = ball.at("r");
  HeckeElement ss = alg.multiply_basis(s, s);
  CHECK(ss == HeckeElement::from_entries({{0, LaurentPoly(1)}, {s, LaurentPoly::v_minus_inverse(2)}}));
  CHECK(alg.multiply_basis(ball.at("sr"), ball.at("st")) == HeckeElement::basis(ball.at("srst")));
  // x = r in B_J, y = r with no left descent in J = {s,t}
  CHECK(alg.multiply_basis(ball.at("rst"), r) == HeckeElement::basis(ball.at("rstr")));
  GroupConfig d(2, 3, 3, {1, 1, 1});
  GroupBall dball(d, 4);
  HeckeAlgebra dalg(dball);
  CHECK(dalg.f(dball.at("sr"), dball.at("r"), dball.at("sr")) == LaurentPoly::v_minus_inverse(1));
}

TEST_CASE("products agree with the oracle Hecke algebra") {
  for (const auto& c : support::sample_configs()) {
    GroupBall ball(c, 6);
    HeckeAlgebra alg(ball);
    const auto n = static_cast<ElemId>(ball.count_upto(3));
    for (ElemId x = 0; x < n; ++x)
      for (ElemId y = 0; y < n; ++y) {
        auto expected = oracle::mul(oracle::basis(ball.word(x)), oracle::basis(ball.word(y)), c);
        CHECK_MESSAGE(support::to_oracle(alg.multiply_basis(x, y), ball) == expected,
                      c.describe() << " " << ball.word(x) << "*" << ball.word(y));
      }
  }
}

TEST_CASE("associativity on random triples") {
  std::mt19937 rng(5);
  for (const auto& c : support::sample_configs()) {
    GroupBall ball(c, 9);
    HeckeAlgebra alg(ball);
    const auto n = static_cast<ElemId>(ball.count_upto(3));
    for (int trial = 0; trial < 30; ++trial) {
      ElemId x = rng() % n, y = rng() % n, z = rng() % n;
      HeckeElement left = alg.mul_basis(alg.multiply_basis(x, y), z);
      HeckeElement right = alg.multiply(HeckeElement::basis(x), alg.multiply_basis(y, z));
      CHECK(left == right);
    }
  }
}

TEST_CASE("bar involution") {
  GroupConfig c(inf, 2, 2, {1, 2, 1});
  GroupBall ball(c, 8);
  HeckeAlgebra alg(ball);
  CHECK(alg.bar_basis(0) == HeckeElement::basis(0));
  const ElemId s = ball.at("s");
  CHECK(alg.bar_basis(s) == HeckeElement::from_entries({{s, LaurentPoly(1)}, {0, -LaurentPoly::v_minus_inverse(2)}}));
  std::mt19937 rng(9);
  for (const auto& cfg : support::sample_configs()) {
    GroupBall b(cfg, 8);
    HeckeAlgebra a(b);
    const auto n4 = static_cast<ElemId>(b.count_upto(4));
    for (ElemId w = 0; w < n4; ++w) {
      CHECK(a.bar(a.bar_basis(w)) == HeckeElement::basis(w));
      CHECK(support::to_oracle(a.bar_basis(w), b) == oracle::bar(oracle::basis(b.word(w)), cfg));
    }
    // bar is multiplicative on sampled products
    for (int trial = 0; trial < 20; ++trial) {
      ElemId x = rng() % n4, y = rng() % n4;
      CHECK(a.bar(a.multiply_basis(x, y)) == a.multiply(a.bar_basis(x), a.bar_basis(y)));
    }
  }
}

TEST_CASE("structure constants: identity, weight bound, symmetry") {
  for (const auto& c : support::sample_configs()) {
    GroupBall ball(c, 8);
    HeckeAlgebra alg(ball);
    const auto n = static_cast<ElemId>(ball.count_upto(3));
    for (ElemId x = 0; x < n; ++x)
      for (ElemId y = 0; y < n; ++y) {
        CHECK(alg.f(x, y, 0) == (x == ball.inverse(y) ? LaurentPoly(1) : LaurentPoly()));
        for (ElemId z = 0; z < n; ++z) {
          LaurentPoly f = alg.f(x, y, z);
          CHECK(f.degree() <= Degree(std::min({ball.weight(x), ball.weight(y), ball.weight(z)})));
          LaurentPoly a = alg.f(x, y, ball.inverse(z));
          CHECK(a == alg.f(y, z, ball.inverse(x)));
          CHECK(a == alg.f(z, x, ball.inverse(y)));
        }
      }
  }
}

TEST_CASE("square of a longest parabolic element") {
  for (const auto& c : support::sample_configs()) {
    GroupBall ball(c, 12);
    HeckeAlgebra alg(ball);
    for (const auto& p : classify(c).finite_parabolics) {
      auto w = ball.find(p.longest);
      if (!w || 2 * ball.length(*w) > ball.radius()) continue;
      HeckeElement sq = alg.multiply_basis(*w, *w);
      for (ElemId x : ball.bruhat_interval(*w)) {
        LaurentPoly f = sq.coeff(x);
        CHECK(f.degree() == Degree(ball.weight(x)));
        CHECK(f.leading_coeff() == 1);
      }
    }
  }
  GroupConfig c(inf, 2, 2, {1, 2, 1});
  GroupBall ball(c, 6);
  HeckeAlgebra alg(ball);
  const ElemId st = ball.at("st");
  CHECK(alg.beta(st, st, st, 3) == 1);
  for (ElemId x = 0; x < ball.count_upto(2); ++x) CHECK(alg.beta(x, ball.inverse(x), 0, 3) == 0);
}

TEST_CASE("products leaving the ball throw") {
  GroupBall ball(GroupConfig(inf, inf, inf, {1, 1, 1}), 3);
  HeckeAlgebra alg(ball);
  CHECK_THROWS_AS(alg.multiply_basis(ball.at("rs"), ball.at("tr")), OutOfBallError);
}

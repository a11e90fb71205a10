#include "hecke/jring.hpp"

#include <algorithm>
#include <bit>

#include "hecke/errors.hpp"

namespace hecke {

JElement JElement::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.first < b.first; });
  JElement out;
  for (auto& t : terms) {
    if (!out.terms_.empty() && out.terms_.back().first == t.first) {
      out.terms_.back().second += t.second;
      if (out.terms_.back().second == 0) out.terms_.pop_back();
    } else if (t.second != 0) {
      out.terms_.push_back(std::move(t));
    }
  }
  return out;
}

Integer JElement::coeff(ElemId w) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), w,
                             [](const Term& t, ElemId id) { return t.first < id; });
  return it != terms_.end() && it->first == w ? it->second : Integer(0);
}

nlohmann::json JElement::to_json(const GroupBall& ball) const {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [w, c] : terms_) out.push_back(nlohmann::json::array({ball.word(w), integer_json(c)}));
  return out;
}

std::string JElement::to_string(const GroupBall& ball) const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [w, c] : terms_) {
    Integer magnitude = c < 0 ? Integer(-c) : c;
    if (out.empty()) out += c < 0 ? "-" : "";
    else out += c < 0 ? " - " : " + ";
    if (magnitude != 1) out += magnitude.str() + "*";
    out += "t_" + display_word(ball.word(w));
  }
  return out;
}

JElement ClosedProduct::as_jelement() const {
  std::vector<JElement::Term> terms{{main, 1}};
  if (delta) terms.emplace_back(secondary, 1);
  return JElement::from_terms(std::move(terms));
}

JRing::JRing(const CellAtlas& atlas, const HeckeAlgebra& algebra) : atlas_(atlas), algebra_(algebra) {}

JElement JRing::product(ElemId x, ElemId y) const {
  for (ElemId w : {x, y})
    if (!atlas_.in_lambda(w))
      throw DomainError("t_" + display_word(ball().word(w)) + " is not a basis element of the based ring");
  std::vector<JElement::Term> terms;
  const HeckeElement t_product = algebra_.multiply_basis(x, y);
  for (const auto& [z, f] : t_product.entries()) {
    Integer c = f.coeff(atlas_.N());
    if (c == 0) continue;
    if (!atlas_.in_lambda(z))
      throw InvariantViolation("top-degree term of T_x T_y at " + display_word(ball().word(z)) +
                               " lies outside the lowest cell");
    terms.emplace_back(z, std::move(c));
  }
  return JElement::from_terms(std::move(terms));
}

ElemId JRing::frame(GenSet gens) const {
  for (ElemId w : atlas_.M())
    if (ball().right_descents(w) == gens) return w;
  return kNoElem;
}

bool JRing::decomposable_amalgam(ElemId x) const {
  const GroupBall& b = ball();
  const GenSet J = b.left_descents(x), Jp = b.right_descents(x);
  auto decompositions = b.prefix_decompositions(x);
  for (ElemId glue : atlas_.M()) {
    const GenSet Jpp = b.right_descents(glue);
    for (const auto& [u, rest] : decompositions) {
      // u = x1 = x1'·w_J'' and x2 = w_J''·rest
      if (!subset(Jpp, b.right_descents(u)) || (b.left_descents(rest) & Jpp)) continue;
      if (b.left_descents(u) != J || b.right_descents(u) != Jpp || atlas_.in_M(u)) continue;
      auto x2 = b.try_multiply(glue, rest);
      if (!x2) continue;
      if (b.left_descents(*x2) == Jpp && b.right_descents(*x2) == Jp && !atlas_.in_M(*x2)) return true;
    }
  }
  return false;
}

bool JRing::decomposable_non_additive(ElemId x) const {
  const GroupBall& b = ball();
  const GenSet J = b.left_descents(x), Jp = b.right_descents(x);
  for (ElemId glue : atlas_.M()) {
    const GenSet Jpp = b.right_descents(glue);
    for (ElemId x1 = 0; x1 < b.size(); ++x1) {
      if (b.left_descents(x1) != J || b.right_descents(x1) != Jpp || atlas_.in_M(x1)) continue;
      // x2 = w_J''·x1^-1·x
      auto partial = b.try_multiply(glue, b.inverse(x1));
      if (!partial) continue;
      auto x2 = b.try_multiply(*partial, x);
      if (!x2) continue;
      if (b.left_descents(*x2) == Jpp && b.right_descents(*x2) == Jp && !atlas_.in_M(*x2)) return true;
    }
  }
  return false;
}

bool JRing::is_indecomposable(ElemId x, GlueReading reading) const {
  if (!in_P(x)) throw DomainError(display_word(ball().word(x)) + " is not in P");
  if (atlas_.in_M(x)) return false;
  return reading == GlueReading::amalgam ? !decomposable_amalgam(x) : !decomposable_non_additive(x);
}

std::vector<ElemId> JRing::indecomposables(int radius, GlueReading reading) const {
  std::vector<ElemId> out;
  const auto n = static_cast<ElemId>(ball().count_upto(radius));
  for (ElemId x = 0; x < n; ++x)
    if (in_P(x) && is_indecomposable(x, reading)) out.push_back(x);
  return out;
}

std::vector<ElemId> JRing::reading_discrepancies(int radius) const {
  std::vector<ElemId> out;
  const auto n = static_cast<ElemId>(ball().count_upto(radius));
  for (ElemId x = 0; x < n; ++x)
    if (in_P(x) && is_indecomposable(x, GlueReading::amalgam) != is_indecomposable(x, GlueReading::non_additive))
      out.push_back(x);
  return out;
}

bool JRing::closed_product_applies(ElemId x, ElemId y) const {
  if (atlas_.classification().type == GroupType::affine) return false;
  if (!in_P(x) || !in_P(y)) return false;
  if (ball().right_descents(x) != ball().left_descents(y)) return false;
  return is_indecomposable(x);
}

ClosedProduct JRing::closed_product(ElemId x, ElemId y) const {
  if (atlas_.classification().type == GroupType::affine)
    throw DomainError("the closed product formula excludes affine Weyl groups");
  if (!closed_product_applies(x, y))
    throw DomainError("closed product formula needs x in P_{J,J'} indecomposable and y in P_{J',J''}");
  const GroupBall& b = ball();
  const ElemId w_J = frame(b.left_descents(x));
  const ElemId w_Jp = frame(b.right_descents(x));
  ClosedProduct result;
  result.main = b.multiply(b.multiply(x, w_Jp), y);
  const ElemId x_inv = b.inverse(x);
  for (const auto& [u, rest] : b.prefix_decompositions(y)) {
    if (u != x_inv) continue;
    result.delta = true;
    result.secondary = b.multiply(w_J, rest);
    break;
  }
  return result;
}

bool JRing::tail_property_holds(ElemId x, bool literal) const {
  const GroupBall& b = ball();
  const ElemId w_J = frame(b.left_descents(x));
  const ElemId w_Jp = frame(b.right_descents(x));
  const GenSet J = b.right_descents(w_J);
  const ElemId x1 = b.multiply(x, w_Jp);
  for (int r = 0; r < kRank; ++r) {
    if (!contains(b.right_descents(w_Jp), r)) continue;
    ElemId z = b.right_mul(x1, r);
    if (z == x && !literal) continue;  // single-generator frame: x1 r is x itself
    if (!atlas_.in_lambda(z)) continue;
    if (!subset(J, b.left_descents(z))) return false;
    if (!atlas_.in_U(b.multiply(w_J, z), w_J)) return false;
  }
  return true;
}

bool JRing::descent_split_holds(ElemId x) const {
  const GroupBall& b = ball();
  if (!in_P(x)) return true;
  const GenSet J = b.left_descents(x), Jp = b.right_descents(x);
  if (std::popcount(static_cast<unsigned>(Jp)) != 2) return true;
  const ElemId x1 = b.multiply(x, frame(Jp));
  if (b.left_descents(x1) == J) return true;
  std::vector<GenSet> lefts;
  for (int r = 0; r < kRank; ++r)
    if (contains(Jp, r)) lefts.push_back(b.left_descents(b.right_mul(x1, r)));
  return lefts[0] != J || lefts[1] != J;
}

}  // namespace hecke

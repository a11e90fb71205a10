#include "hecke/hecke_t.hpp"

#include <algorithm>
#include <unordered_map>

#include "hecke/errors.hpp"

namespace hecke {

HeckeElement HeckeElement::basis(ElemId w, LaurentPoly coeff) {
  HeckeElement h;
  if (!coeff.is_zero()) h.entries_.emplace_back(w, std::move(coeff));
  return h;
}

HeckeElement HeckeElement::from_entries(std::vector<Entry> entries) {
  std::stable_sort(entries.begin(), entries.end(),
                   [](const Entry& a, const Entry& b) { return a.first < b.first; });
  HeckeElement h;
  h.entries_.reserve(entries.size());
  for (auto& e : entries) {
    if (!h.entries_.empty() && h.entries_.back().first == e.first) {
      h.entries_.back().second += e.second;
      if (h.entries_.back().second.is_zero()) h.entries_.pop_back();
    } else if (!e.second.is_zero()) {
      h.entries_.push_back(std::move(e));
    }
  }
  return h;
}

const LaurentPoly* HeckeElement::find(ElemId w) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), w,
                             [](const Entry& e, ElemId id) { return e.first < id; });
  if (it != entries_.end() && it->first == w) return &it->second;
  return nullptr;
}

LaurentPoly HeckeElement::coeff(ElemId w) const {
  const LaurentPoly* p = find(w);
  return p ? *p : LaurentPoly();
}

Degree HeckeElement::degree() const {
  Degree d = Degree::neg_inf();
  for (const auto& [w, p] : entries_) d = max(d, p.degree());
  return d;
}

void HeckeElement::add_scaled(const HeckeElement& other, const LaurentPoly& factor) {
  if (other.is_zero() || factor.is_zero()) return;
  std::vector<Entry> out;
  out.reserve(entries_.size() + other.entries_.size());
  auto a = entries_.begin();
  auto b = other.entries_.begin();
  while (a != entries_.end() || b != other.entries_.end()) {
    if (b == other.entries_.end() || (a != entries_.end() && a->first < b->first)) {
      out.push_back(std::move(*a++));
    } else if (a == entries_.end() || b->first < a->first) {
      out.emplace_back(b->first, factor * b->second);
      ++b;
    } else {
      LaurentPoly sum = std::move(a->second);
      sum += factor * b->second;
      if (!sum.is_zero()) out.emplace_back(a->first, std::move(sum));
      ++a;
      ++b;
    }
  }
  entries_ = std::move(out);
}

HeckeElement& HeckeElement::operator+=(const HeckeElement& other) {
  add_scaled(other, LaurentPoly(1));
  return *this;
}

HeckeElement& HeckeElement::operator-=(const HeckeElement& other) {
  add_scaled(other, LaurentPoly(-1));
  return *this;
}

HeckeElement HeckeElement::scaled(const LaurentPoly& factor) const {
  HeckeElement h;
  if (factor.is_zero()) return h;
  h.entries_.reserve(entries_.size());
  for (const auto& [w, p] : entries_) h.entries_.emplace_back(w, factor * p);
  return h;
}

nlohmann::json HeckeElement::to_json(const GroupBall& ball) const {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [w, p] : entries_) out.push_back(nlohmann::json::array({ball.word(w), p.to_json()}));
  return out;
}

HeckeAlgebra::HeckeAlgebra(const GroupBall& ball)
    : ball_(ball), bar_once_(std::make_unique<std::once_flag[]>(ball.size())), bar_(ball.size()) {}

namespace {

[[noreturn]] void out_of_ball(const GroupBall& ball, ElemId w, int s, bool right) {
  std::string what = right ? display_word(ball.word(w)) + "*" + gen_char(s)
                           : std::string(1, gen_char(s)) + "*" + display_word(ball.word(w));
  throw OutOfBallError("Hecke product needs " + what + ", outside the ball of radius " +
                       std::to_string(ball.radius()));
}

}  // namespace

HeckeElement HeckeAlgebra::mul_generator(const HeckeElement& h, int s) const {
  const int weight = config().weight(s);
  std::vector<HeckeElement::Entry> out;
  out.reserve(2 * h.support_size());
  for (const auto& [w, p] : h.entries()) {
    ElemId ws = ball_.right_mul(w, s);
    if (ws == kNoElem) out_of_ball(ball_, w, s, true);
    out.emplace_back(ws, p);
    if (contains(ball_.right_descents(w), s)) {
      LaurentPoly q = p.shifted(weight);
      q.add_shifted(p, -weight, -1);
      out.emplace_back(w, std::move(q));
    }
  }
  return HeckeElement::from_entries(std::move(out));
}

HeckeElement HeckeAlgebra::generator_mul(int s, const HeckeElement& h) const {
  const int weight = config().weight(s);
  std::vector<HeckeElement::Entry> out;
  out.reserve(2 * h.support_size());
  for (const auto& [w, p] : h.entries()) {
    ElemId sw = ball_.left_mul(w, s);
    if (sw == kNoElem) out_of_ball(ball_, w, s, false);
    out.emplace_back(sw, p);
    if (contains(ball_.left_descents(w), s)) {
      LaurentPoly q = p.shifted(weight);
      q.add_shifted(p, -weight, -1);
      out.emplace_back(w, std::move(q));
    }
  }
  return HeckeElement::from_entries(std::move(out));
}

HeckeElement HeckeAlgebra::mul_basis(const HeckeElement& h, ElemId y) const {
  HeckeElement out = h;
  for (char c : ball_.word(y)) out = mul_generator(out, gen_index(c));
  return out;
}

HeckeElement HeckeAlgebra::multiply_basis(ElemId x, ElemId y) const {
  return mul_basis(HeckeElement::basis(x), y);
}

HeckeElement HeckeAlgebra::multiply(const HeckeElement& a, const HeckeElement& b) const {
  // a·T_p for every prefix p of the canonical words in b's support, shared between terms
  std::unordered_map<ElemId, HeckeElement> memo;
  memo.emplace(GroupBall::identity(), a);
  HeckeElement result;
  for (const auto& [y, coeff] : b.entries()) {
    const Word& word = ball_.word(y);
    ElemId prefix = GroupBall::identity();
    const HeckeElement* current = &memo.at(prefix);
    for (char c : word) {
      ElemId next = ball_.right_mul(prefix, gen_index(c));
      auto it = memo.find(next);
      if (it == memo.end()) it = memo.emplace(next, mul_generator(*current, gen_index(c))).first;
      current = &it->second;
      prefix = next;
    }
    result.add_scaled(*current, coeff);
  }
  return result;
}

LaurentPoly HeckeAlgebra::f(ElemId x, ElemId y, ElemId z) const {
  return multiply_basis(x, y).coeff(z);
}

const HeckeElement& HeckeAlgebra::bar_basis(ElemId w) const {
  std::call_once(bar_once_[w], [&] {
    if (w == GroupBall::identity()) {
      bar_[w] = HeckeElement::basis(w);
      return;
    }
    const Word& word = ball_.word(w);
    int s = gen_index(word.back());
    const HeckeElement& below = bar_basis(ball_.right_mul(w, s));
    // bar(T_s) = T_s - (v_s - v_s^-1)
    HeckeElement out = mul_generator(below, s);
    out.add_scaled(below, -LaurentPoly::v_minus_inverse(config().weight(s)));
    bar_[w] = std::move(out);
  });
  return bar_[w];
}

HeckeElement HeckeAlgebra::bar(const HeckeElement& h) const {
  HeckeElement out;
  for (const auto& [w, p] : h.entries()) out.add_scaled(bar_basis(w), p.bar());
  return out;
}

Integer HeckeAlgebra::beta(ElemId x, ElemId y, ElemId z, int N) const {
  return f(x, y, ball_.inverse(z)).coeff(N);
}

}  // namespace hecke

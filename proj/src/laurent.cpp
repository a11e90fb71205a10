#include "hecke/laurent.hpp"

#include <algorithm>
#include <sstream>

namespace hecke {

LaurentPoly::LaurentPoly(int constant) {
  if (constant != 0) terms_.push_back({0, Integer(constant)});
}

LaurentPoly LaurentPoly::monomial(int exp, Integer coeff) {
  LaurentPoly p;
  if (coeff != 0) p.terms_.push_back({exp, std::move(coeff)});
  return p;
}

LaurentPoly LaurentPoly::v_minus_inverse(int k) {
  if (k == 0) return {};
  LaurentPoly p;
  int lo = -std::abs(k), hi = std::abs(k);
  p.terms_.push_back({lo, Integer(k > 0 ? -1 : 1)});
  p.terms_.push_back({hi, Integer(k > 0 ? 1 : -1)});
  return p;
}

LaurentPoly LaurentPoly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.exp < b.exp; });
  LaurentPoly p;
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().exp == t.exp) {
      p.terms_.back().coeff += t.coeff;
      if (p.terms_.back().coeff == 0) p.terms_.pop_back();
    } else if (t.coeff != 0) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

Degree LaurentPoly::degree() const {
  return terms_.empty() ? Degree::neg_inf() : Degree(terms_.back().exp);
}

Degree LaurentPoly::low_degree() const {
  return terms_.empty() ? Degree::neg_inf() : Degree(terms_.front().exp);
}

Integer LaurentPoly::coeff(int n) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), n,
                             [](const Term& t, int e) { return t.exp < e; });
  if (it != terms_.end() && it->exp == n) return it->coeff;
  return 0;
}

Integer LaurentPoly::leading_coeff() const { return terms_.empty() ? Integer(0) : terms_.back().coeff; }

LaurentPoly LaurentPoly::bar() const {
  LaurentPoly p;
  p.terms_.reserve(terms_.size());
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) p.terms_.push_back({-it->exp, it->coeff});
  return p;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly p = *this;
  for (auto& t : p.terms_) t.exp += k;
  return p;
}

LaurentPoly LaurentPoly::negative_part() const {
  LaurentPoly p;
  for (const auto& t : terms_)
    if (t.exp < 0) p.terms_.push_back(t);
  return p;
}

LaurentPoly LaurentPoly::positive_part() const {
  LaurentPoly p;
  for (const auto& t : terms_)
    if (t.exp > 0) p.terms_.push_back(t);
  return p;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly p = *this;
  for (auto& t : p.terms_) t.coeff = -t.coeff;
  return p;
}

void LaurentPoly::merge_into(const LaurentPoly& other, int shift, int sign) {
  if (other.terms_.empty()) return;
  std::vector<Term> out;
  out.reserve(terms_.size() + other.terms_.size());
  auto a = terms_.begin();
  auto b = other.terms_.begin();
  while (a != terms_.end() || b != other.terms_.end()) {
    if (b == other.terms_.end() || (a != terms_.end() && a->exp < b->exp + shift)) {
      out.push_back(std::move(*a++));
    } else if (a == terms_.end() || b->exp + shift < a->exp) {
      out.push_back({b->exp + shift, sign > 0 ? b->coeff : Integer(-b->coeff)});
      ++b;
    } else {
      Integer c = std::move(a->coeff);
      if (sign > 0) c += b->coeff;
      else c -= b->coeff;
      if (c != 0) out.push_back({a->exp, std::move(c)});
      ++a;
      ++b;
    }
  }
  terms_ = std::move(out);
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  merge_into(other, 0, +1);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) {
  merge_into(other, 0, -1);
  return *this;
}

void LaurentPoly::add_shifted(const LaurentPoly& other, int shift, int sign) {
  merge_into(other, shift, sign);
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.terms_.size() == 1 && a.terms_[0].coeff == 1) return b.shifted(a.terms_[0].exp);
  if (b.terms_.size() == 1 && b.terms_[0].coeff == 1) return a.shifted(b.terms_[0].exp);
  const int lo = a.terms_.front().exp + b.terms_.front().exp;
  const int hi = a.terms_.back().exp + b.terms_.back().exp;
  std::vector<Integer> dense(static_cast<std::size_t>(hi - lo + 1));
  for (const auto& x : a.terms_)
    for (const auto& y : b.terms_) dense[x.exp + y.exp - lo] += x.coeff * y.coeff;
  LaurentPoly p;
  for (std::size_t i = 0; i < dense.size(); ++i)
    if (dense[i] != 0) p.terms_.push_back({lo + static_cast<int>(i), std::move(dense[i])});
  return p;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& other) {
  *this = *this * other;
  return *this;
}

void LaurentPoly::add_product(const LaurentPoly& factor, const LaurentPoly& other) {
  *this += factor * other;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    Integer c = it->coeff;
    bool negative = c < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    if (it->exp == 0) {
      os << c;
      continue;
    }
    if (c != 1) os << c;
    os << "v";
    if (it->exp != 1) os << "^" << it->exp;
  }
  return os.str();
}

nlohmann::json integer_json(const Integer& value) {
  if (value >= std::numeric_limits<long long>::min() && value <= std::numeric_limits<long long>::max())
    return static_cast<long long>(value);
  return value.str();
}

Integer integer_from_json(const nlohmann::json& j) {
  if (j.is_string()) return Integer(j.get<std::string>());
  return Integer(j.get<long long>());
}

nlohmann::json LaurentPoly::to_json() const {
  nlohmann::json out = nlohmann::json::array();
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it)
    out.push_back(nlohmann::json::array({it->exp, integer_json(it->coeff)}));
  return out;
}

LaurentPoly LaurentPoly::from_json(const nlohmann::json& j) {
  std::vector<Term> terms;
  for (const auto& pair : j) terms.push_back({pair.at(0).get<int>(), integer_from_json(pair.at(1))});
  return from_terms(std::move(terms));
}

}  // namespace hecke

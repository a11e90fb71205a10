#pragma once

#include <compare>
#include <limits>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "json.hpp"

namespace hecke {

using Integer = boost::multiprecision::cpp_int;

/// Degree of a Laurent polynomial; the zero polynomial has degree -infinity, which
/// absorbs under addition and is the identity for max.
class Degree {
 public:
  constexpr Degree(int value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  static constexpr Degree neg_inf() { return Degree(kNegInf, 0); }

  constexpr bool is_neg_inf() const { return value_ == kNegInf; }
  /// Only valid when finite.
  constexpr int value() const { return value_; }

  friend constexpr Degree operator+(Degree a, Degree b) {
    if (a.is_neg_inf() || b.is_neg_inf()) return neg_inf();
    return Degree(a.value_ + b.value_);
  }
  friend constexpr Degree max(Degree a, Degree b) { return a.value_ >= b.value_ ? a : b; }
  friend constexpr auto operator<=>(Degree a, Degree b) = default;
  friend constexpr bool operator==(Degree a, Degree b) = default;

  std::string to_string() const { return is_neg_inf() ? "-inf" : std::to_string(value_); }

 private:
  static constexpr int kNegInf = std::numeric_limits<int>::min();
  constexpr Degree(int value, int) : value_(value) {}
  int value_;
};

/// Element of Z[v, v^-1]: sorted (ascending exponent) list of nonzero terms.
class LaurentPoly {
 public:
  struct Term {
    int exp;
    Integer coeff;
    friend bool operator==(const Term&, const Term&) = default;
  };

  LaurentPoly() = default;
  LaurentPoly(int constant);  // NOLINT(google-explicit-constructor)

  static LaurentPoly monomial(int exp, Integer coeff = 1);
  /// v^k - v^-k, the factor (v_s - v_s^-1) of the quadratic relation when k = L(s).
  static LaurentPoly v_minus_inverse(int k);
  /// Builds from arbitrary terms (merges duplicates, drops zeros).
  static LaurentPoly from_terms(std::vector<Term> terms);

  bool is_zero() const { return terms_.empty(); }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }

  Degree degree() const;
  /// Lowest exponent with nonzero coefficient; -(lowest) is the valuation in v^-1. Zero -> neg_inf.
  Degree low_degree() const;
  /// Coefficient of v^n (pi_n).
  Integer coeff(int n) const;
  /// Coefficient of the top term; zero for the zero polynomial.
  Integer leading_coeff() const;

  LaurentPoly bar() const;
  LaurentPoly shifted(int k) const;
  /// Terms with exponent < 0 only.
  LaurentPoly negative_part() const;
  /// Terms with exponent > 0 only.
  LaurentPoly positive_part() const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  LaurentPoly& operator*=(const LaurentPoly& other);
  /// this += factor * other
  void add_product(const LaurentPoly& factor, const LaurentPoly& other);
  /// this += sign * v^shift * other, sign in {+1,-1}
  void add_shifted(const LaurentPoly& other, int shift, int sign);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  /// e.g. "v^2 - 2 + 3v^-1"; "0" for zero.
  std::string to_string() const;
  /// [[exp, coeff], ...] with descending exponent; coefficients beyond 64 bits are strings.
  nlohmann::json to_json() const;
  static LaurentPoly from_json(const nlohmann::json& j);

 private:
  void merge_into(const LaurentPoly& other, int shift, int sign);
  std::vector<Term> terms_;
};

/// JSON value for an integer (number when it fits in int64, decimal string otherwise).
nlohmann::json integer_json(const Integer& value);
Integer integer_from_json(const nlohmann::json& j);

}  // namespace hecke

#pragma once

#include <memory>
#include <mutex>
#include <utility>
#include <vector>

#include "hecke/ball.hpp"
#include "hecke/laurent.hpp"

namespace hecke {

/// Finite Z[v,v^-1]-combination of basis elements indexed by ball elements. The same
/// container holds T-basis and C-basis coordinates; which basis is meant is up to the caller.
class HeckeElement {
 public:
  using Entry = std::pair<ElemId, LaurentPoly>;

  HeckeElement() = default;
  static HeckeElement basis(ElemId w, LaurentPoly coeff = 1);
  /// Merges duplicate ids and drops zero coefficients.
  static HeckeElement from_entries(std::vector<Entry> entries);

  const std::vector<Entry>& entries() const { return entries_; }
  bool is_zero() const { return entries_.empty(); }
  std::size_t support_size() const { return entries_.size(); }
  /// Coefficient of the basis element w (zero if absent).
  LaurentPoly coeff(ElemId w) const;
  const LaurentPoly* find(ElemId w) const;
  /// max deg of the coefficients (-inf for zero).
  Degree degree() const;

  HeckeElement& operator+=(const HeckeElement& other);
  HeckeElement& operator-=(const HeckeElement& other);
  HeckeElement scaled(const LaurentPoly& factor) const;
  /// this += factor * other
  void add_scaled(const HeckeElement& other, const LaurentPoly& factor);

  friend bool operator==(const HeckeElement&, const HeckeElement&) = default;

  /// [[word, poly], ...] sorted ShortLex.
  nlohmann::json to_json(const GroupBall& ball) const;

 private:
  std::vector<Entry> entries_;  // sorted by id, nonzero coefficients
};

/// The Hecke algebra of (W, S, L) in the standard basis, restricted to a ball.
/// Products whose support would leave the ball throw OutOfBallError.
class HeckeAlgebra {
 public:
  explicit HeckeAlgebra(const GroupBall& ball);

  const GroupBall& ball() const { return ball_; }
  const GroupConfig& config() const { return ball_.config(); }

  /// h · T_s, using T_w T_s = T_ws if ws > w, else T_ws + (v_s - v_s^-1) T_w.
  HeckeElement mul_generator(const HeckeElement& h, int s) const;
  /// T_s · h
  HeckeElement generator_mul(int s, const HeckeElement& h) const;
  /// h · T_y, letter by letter along the canonical word of y.
  HeckeElement mul_basis(const HeckeElement& h, ElemId y) const;
  /// T_x · T_y
  HeckeElement multiply_basis(ElemId x, ElemId y) const;
  HeckeElement multiply(const HeckeElement& a, const HeckeElement& b) const;

  /// Coefficient of T_z in T_x T_y.
  LaurentPoly f(ElemId x, ElemId y, ElemId z) const;

  /// bar(T_w) = T_{w^-1}^{-1} in the T-basis. Cached and thread-safe.
  const HeckeElement& bar_basis(ElemId w) const;
  HeckeElement bar(const HeckeElement& h) const;

  /// pi_N(f_{x,y,z^-1}).
  Integer beta(ElemId x, ElemId y, ElemId z, int N) const;

 private:
  const GroupBall& ball_;
  mutable std::unique_ptr<std::once_flag[]> bar_once_;
  mutable std::vector<HeckeElement> bar_;
};

}  // namespace hecke

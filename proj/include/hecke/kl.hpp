#pragma once

#include <atomic>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <unordered_map>

#include "hecke/hecke_t.hpp"

namespace hecke {

/// Kazhdan–Lusztig polynomials p_{x,w} for the elements of a ball, computed column by
/// column on demand. Each column solves the unitriangular bar-invariance system
///   p_{x,w} - bar(p_{x,w}) = sum_{x < y <= w} bar(p_{y,w}) R_{x,y}
/// in decreasing length, where R_{x,y} is the T_x-coefficient of bar(T_y); the solution
/// is forced into v^-1 Z[v^-1]. Columns are independent of one another.
class KLTable {
 public:
  explicit KLTable(const HeckeAlgebra& algebra);

  const HeckeAlgebra& algebra() const { return algebra_; }
  const GroupBall& ball() const { return algebra_.ball(); }

  /// C_w in the T-basis: entries (x, p_{x,w}) over x <= w with nonzero p. Thread-safe.
  const HeckeElement& column(ElemId w) const;
  LaurentPoly p(ElemId x, ElemId w) const;
  bool has_column(ElemId w) const;

  /// Installs a column loaded from a cache. Ignored if the column is already present.
  void install_column(ElemId w, HeckeElement column) const;

  /// Direct bar-fixing solve for one column, without touching the cache.
  HeckeElement solve_column(ElemId w) const;

 private:
  const HeckeAlgebra& algebra_;
  mutable std::unique_ptr<std::once_flag[]> once_;
  mutable std::unique_ptr<std::atomic<bool>[]> ready_;
  mutable std::vector<HeckeElement> columns_;
};

/// A max-degree witness: deg h_{x,y,w} attained by the pair (x, y).
struct AWitness {
  Degree degree = Degree::neg_inf();
  ElemId x = kNoElem;
  ElemId y = kNoElem;
};

/// Kazhdan–Lusztig basis arithmetic: C-basis conversion, structure constants h_{x,y,z},
/// the E/F factors, truncated a-function and gamma. C_x C_y products are memoized.
class KLBasis {
 public:
  explicit KLBasis(const KLTable& table);

  const KLTable& table() const { return table_; }
  const HeckeAlgebra& algebra() const { return table_.algebra(); }
  const GroupBall& ball() const { return table_.ball(); }

  /// Rewrites a T-basis element in the C-basis by eliminating the ShortLex-largest
  /// element of maximal length first.
  HeckeElement to_c_basis(HeckeElement t_basis) const;
  /// Inverse of to_c_basis.
  HeckeElement to_t_basis(const HeckeElement& c_basis) const;

  /// C_x C_y in C-basis coordinates (h_{x,y,z} at z). Cached and thread-safe.
  std::shared_ptr<const HeckeElement> c_product(ElemId x, ElemId y) const;
  LaurentPoly h(ElemId x, ElemId y, ElemId z) const;

  /// E_x for x in B_J: sum of p_{x' w_J, x w_J} T_{x'} over x' <= x with x'·w_J reduced.
  HeckeElement E(ElemId x, ElemId w_J) const;
  /// F_y for y in B_J^-1: sum of p_{w_J y', w_J y} T_{y'} over y' <= y with w_J·y' reduced.
  HeckeElement F(ElemId w_J, ElemId y) const;

  /// max over x, y of length <= witness_radius of deg h_{x,y,w}, with the attaining pair.
  AWitness a_lower_bound(ElemId w, int witness_radius) const;
  /// The same bound for every element of the ball at once (one sweep over pairs).
  std::vector<AWitness> a_lower_bounds(int witness_radius) const;

  /// pi_{a_z}(h_{x,y,z^-1}).
  Integer gamma(ElemId x, ElemId y, ElemId z, int a_z) const;

 private:
  const KLTable& table_;
  mutable std::shared_mutex mutex_;
  mutable std::unordered_map<std::uint64_t, std::shared_ptr<const HeckeElement>> products_;
};

}  // namespace hecke

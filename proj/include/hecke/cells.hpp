#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hecke/ball.hpp"
#include "hecke/classify.hpp"
#include "hecke/kl.hpp"

namespace hecke {

/// Left cell Gamma_{J,y} = B_J·w_J·y of the lowest two-sided cell, identified by
/// the longest element w_J in M and y in U_J.
struct LeftCellId {
  ElemId w_J = kNoElem;
  ElemId y = kNoElem;
  friend auto operator<=>(const LeftCellId&, const LeftCellId&) = default;
};

/// Right cell Phi_{x,J} = x·w_J·B_J^-1 with x in U_J^-1.
struct RightCellId {
  ElemId x = kNoElem;
  ElemId w_J = kNoElem;
  friend auto operator<=>(const RightCellId&, const RightCellId&) = default;
};

/// w = x·p·y with p in P_{J,J'}, x in U_J^-1, y in U_J' (length additive).
struct CanonicalFactorization {
  ElemId x = kNoElem;
  ElemId p = kNoElem;
  ElemId y = kNoElem;
};

struct CellFrame {
  std::vector<ElemId> B;  ///< B_J ∩ ball
  std::vector<ElemId> U;  ///< U_J ∩ ball (elements where membership is decidable)
};

/// Counts of distinct left-cell ids realized at three consecutive radii.
struct CellCensus {
  std::map<LeftCellId, std::vector<ElemId>> cells;  ///< id -> members (ShortLex)
  std::vector<std::pair<int, std::size_t>> counts;  ///< (radius, #ids with shortest member inside)
  bool stable = false;                              ///< identical counts at the three radii
  bool strictly_increasing = false;
};

/// What the left-cell count of the lowest cell should be, following the case split of
/// the classification of rank-3 weighted Coxeter groups.
struct ExpectedCellCount {
  std::optional<int> count;  ///< nullopt: infinitely many
  std::string rule;          ///< which case of the classification applies
};

ExpectedCellCount expected_left_cell_count(const GroupConfig& config);

/// Geometry of the lowest two-sided cell c0 = Lambda inside a ball: membership,
/// frames B_J / U_J, left and right cell ids, canonical factorization.
/// Immutable after construction.
class CellAtlas {
 public:
  CellAtlas(const GroupBall& ball, ClassificationReport classification);

  const GroupBall& ball() const { return ball_; }
  const ClassificationReport& classification() const { return classification_; }
  int N() const { return classification_.N; }
  /// The w_J in M that lie in the ball.
  const std::vector<ElemId>& M() const { return M_; }
  bool in_M(ElemId w) const;

  /// w = x·w_J·y for some w_J in M: some prefix u of w has J ⊆ R(u).
  bool in_lambda(ElemId w) const { return lambda_[w]; }

  bool in_B(ElemId x, ElemId w_J) const;
  /// y in U_J: L(y) ∩ J empty and s·w_J·y not in Lambda for every s in J.
  /// Throws OutOfBallError when some s·w_J·y is not in the ball.
  bool in_U(ElemId y, ElemId w_J) const;
  /// U_J membership is decidable for y inside the ball iff l(w_J) + l(y) - 1 <= radius.
  bool u_decidable(ElemId y, ElemId w_J) const;

  CellFrame cell_frame(ElemId w_J) const;

  /// The unique (w_J, y) with w in B_J·w_J·y. DomainError if w is not in Lambda,
  /// InvariantViolation if there is no or more than one id.
  LeftCellId left_cell_id(ElemId w) const;
  RightCellId right_cell_id(ElemId w) const;
  CanonicalFactorization factorize(ElemId w) const;

  /// Cells realized by Lambda ∩ ball(radius), with counts at radius-2, radius-1, radius.
  CellCensus enumerate_left_cells(int radius) const;

  /// P_{J,J'}: L(x) = J, R(x) = J' for w_J, w_J' in M.
  bool in_P(ElemId x) const;

  nlohmann::json to_json(const CellCensus& census) const;

 private:
  const GroupBall& ball_;
  ClassificationReport classification_;
  std::vector<ElemId> M_;
  std::vector<char> lambda_;
};

/// (Delta(z), n_z) from p_{e,z} = n_z v^-Delta(z) + lower terms.
struct DeltaData {
  int delta = 0;
  Integer n;
};
DeltaData delta_invariants(ElemId z, const KLTable& table);

/// The unique d in the left cell with Delta(d) = N: the candidates are the z^-1 with
/// pi_N(f_{y^-1, y, z}) != 0 for the shortest member y = w_J·y0, filtered by Delta = N.
ElemId distinguished(const LeftCellId& cell, const CellAtlas& atlas, const KLTable& table);

}  // namespace hecke

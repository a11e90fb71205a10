#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "hecke/cells.hpp"

namespace hecke {

/// Integer combination of basis symbols t_w, w in c0. Sorted by id, no zero terms.
class JElement {
 public:
  using Term = std::pair<ElemId, Integer>;

  static JElement from_terms(std::vector<Term> terms);
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Integer coeff(ElemId w) const;
  bool operator==(const JElement&) const = default;

  /// [[word, integer], ...] sorted ShortLex.
  nlohmann::json to_json(const GroupBall& ball) const;
  std::string to_string(const GroupBall& ball) const;

 private:
  std::vector<Term> terms_;
};

struct ClosedProduct {
  ElemId main = kNoElem;       ///< x·w_J'·y
  ElemId secondary = kNoElem;  ///< w_J·x·y, present only when delta = 1
  bool delta = false;
  JElement as_jelement() const;
};

/// Reading of the glued factorization x = x1·w_J''·x2 used to decide decomposability.
enum class GlueReading {
  amalgam,       ///< x = x1'·w_J''·x2' length additive, x1 = x1'·w_J'', x2 = w_J''·x2'
  non_additive,  ///< x = x1·w_J''·x2 as a group product, x1 and x2 searched inside the ball
};

class JRing {
 public:
  JRing(const CellAtlas& atlas, const HeckeAlgebra& algebra);

  const CellAtlas& atlas() const { return atlas_; }
  const GroupBall& ball() const { return atlas_.ball(); }

  /// t_x t_y with coefficient pi_N(f_{x,y,z}) at t_z. DomainError unless x, y in c0;
  /// OutOfBallError when T_x T_y leaves the ball; InvariantViolation if the top-degree
  /// support leaves c0.
  JElement product(ElemId x, ElemId y) const;

  /// The w_J in M whose generator set is gens, or kNoElem.
  ElemId frame(GenSet gens) const;
  /// x in P: both descent sets are frames of M.
  bool in_P(ElemId x) const { return atlas_.in_P(x); }

  /// DomainError if x is not in P.
  bool is_indecomposable(ElemId x, GlueReading reading = GlueReading::amalgam) const;
  /// All indecomposable elements of the ball of length <= radius, ShortLex order.
  std::vector<ElemId> indecomposables(int radius, GlueReading reading = GlueReading::amalgam) const;
  /// Elements of P (length <= radius) where the two readings disagree.
  std::vector<ElemId> reading_discrepancies(int radius) const;

  /// Closed form for x in P_{J,J'} indecomposable and y in P_{J',J''}. DomainError when
  /// the hypotheses fail or the group is affine.
  ClosedProduct closed_product(ElemId x, ElemId y) const;
  bool closed_product_applies(ElemId x, ElemId y) const;

  /// For indecomposable x = x1·w_J' and r in J': x1·r not in c0 or x1·r in w_J·U_J.
  /// When J' = {r} we have x1·r = x and the statement carries no information (it fails
  /// for e.g. rts, m=(inf,inf,2), L(s) = L(rt)); such r are skipped unless `literal`.
  /// Returns false on a counterexample; throws OutOfBallError if undecidable in the ball.
  bool tail_property_holds(ElemId x, bool literal = false) const;
  /// For x = x1·w_J' in P_{J,J'} with |J'| = 2 and L(x1) != J: L(x1·r1) != J or L(x1·r2) != J.
  /// Vacuously true when the hypotheses do not apply.
  bool descent_split_holds(ElemId x) const;

 private:
  bool decomposable_amalgam(ElemId x) const;
  bool decomposable_non_additive(ElemId x) const;

  const CellAtlas& atlas_;
  const HeckeAlgebra& algebra_;
};

}  // namespace hecke

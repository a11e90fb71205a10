#pragma once

#include <memory>

#include "hecke/cells.hpp"
#include "hecke/classify.hpp"
#include "hecke/jring.hpp"
#include "hecke/kl.hpp"

namespace hecke {

/// Everything computed for one (config, ball radius): the ball, the Hecke algebra on
/// it, KL table and basis, the cell atlas and the based ring. Non-copyable; the members
/// reference one another.
class Workspace {
 public:
  Workspace(const GroupConfig& config, int ball_radius, std::size_t cap = kDefaultBallCap);
  Workspace(const Workspace&) = delete;
  Workspace& operator=(const Workspace&) = delete;

  const GroupConfig& config() const { return ball_->config(); }
  int radius() const { return ball_->radius(); }
  const ClassificationReport& classification() const { return atlas_->classification(); }
  int N() const { return atlas_->N(); }

  const GroupBall& ball() const { return *ball_; }
  const HeckeAlgebra& algebra() const { return *algebra_; }
  const KLTable& table() const { return *table_; }
  const KLBasis& basis() const { return *basis_; }
  const CellAtlas& atlas() const { return *atlas_; }
  const JRing& jring() const { return *jring_; }

 private:
  std::unique_ptr<GroupBall> ball_;
  std::unique_ptr<HeckeAlgebra> algebra_;
  std::unique_ptr<KLTable> table_;
  std::unique_ptr<KLBasis> basis_;
  std::unique_ptr<CellAtlas> atlas_;
  std::unique_ptr<JRing> jring_;
};

}  // namespace hecke

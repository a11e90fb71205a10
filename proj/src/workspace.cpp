#include "hecke/workspace.hpp"

namespace hecke {

Workspace::Workspace(const GroupConfig& config, int ball_radius, std::size_t cap)
    : ball_(std::make_unique<GroupBall>(config, ball_radius, cap)),
      algebra_(std::make_unique<HeckeAlgebra>(*ball_)),
      table_(std::make_unique<KLTable>(*algebra_)),
      basis_(std::make_unique<KLBasis>(*table_)),
      atlas_(std::make_unique<CellAtlas>(*ball_, classify(config))),
      jring_(std::make_unique<JRing>(*atlas_, *algebra_)) {}

}  // namespace hecke

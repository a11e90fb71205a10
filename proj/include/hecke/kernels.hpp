#pragma once

#include <cstddef>
#include <vector>

#include "hecke/kl.hpp"

namespace hecke {

/// Execution policy for the pair sweeps. jobs <= 1 runs the serial reference loop;
/// otherwise the OpenMP loop runs with that many threads. Both produce identical
/// results: ties are broken towards the smallest (x, y).
struct Exec {
  int jobs = 1;
  bool parallel() const { return jobs > 1; }
};

struct PairDegree {
  Degree degree = Degree::neg_inf();
  ElemId x = kNoElem;
  ElemId y = kNoElem;
  std::size_t pairs = 0;
  bool operator==(const PairDegree&) const = default;
};

/// max deg(T_x T_y) over x, y of length <= radius. The ball must have radius >= 2·radius.
PairDegree max_product_degree(const HeckeAlgebra& algebra, int radius, const Exec& exec);
PairDegree max_product_degree_serial(const HeckeAlgebra& algebra, int radius);
PairDegree max_product_degree_parallel(const HeckeAlgebra& algebra, int radius, int jobs);

/// T_x T_y for all x, y of length <= radius, row-major in (x, y).
std::vector<HeckeElement> product_table(const HeckeAlgebra& algebra, int radius, const Exec& exec);

/// For every z of the ball: max deg h_{x,y,z} over x, y of length <= witness_radius.
std::vector<AWitness> witness_degrees(const KLBasis& basis, int witness_radius, const Exec& exec);
std::vector<AWitness> witness_degrees_serial(const KLBasis& basis, int witness_radius);
std::vector<AWitness> witness_degrees_parallel(const KLBasis& basis, int witness_radius, int jobs);

/// Fills the KL columns of every element of length <= radius.
void precompute_columns(const KLTable& table, int radius, const Exec& exec);

}  // namespace hecke

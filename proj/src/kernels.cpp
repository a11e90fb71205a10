#include "hecke/kernels.hpp"

#include <exception>
#include <mutex>

#include <omp.h>

namespace hecke {

namespace {

// Larger degree wins; equal degrees go to the lexicographically smaller pair.
bool better(Degree d, ElemId x, ElemId y, const PairDegree& best) {
  if (d != best.degree) return d > best.degree;
  return std::pair(x, y) < std::pair(best.x, best.y);
}

bool better(const AWitness& a, const AWitness& b) {
  if (a.degree != b.degree) return a.degree > b.degree;
  return std::pair(a.x, a.y) < std::pair(b.x, b.y);
}

// Runs body(i) for i in [0, n) on `jobs` threads, rethrowing the first exception.
template <typename Body>
void parallel_for(std::int64_t n, int jobs, Body&& body) {
  std::exception_ptr error;
  std::mutex error_mutex;
#pragma omp parallel for schedule(dynamic, 1) num_threads(jobs)
  for (std::int64_t i = 0; i < n; ++i) {
    try {
      body(i);
    } catch (...) {
      std::lock_guard lock(error_mutex);
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
}

}  // namespace

PairDegree max_product_degree_serial(const HeckeAlgebra& algebra, int radius) {
  const auto n = static_cast<ElemId>(algebra.ball().count_upto(radius));
  PairDegree best;
  for (ElemId x = 0; x < n; ++x)
    for (ElemId y = 0; y < n; ++y) {
      Degree d = algebra.multiply_basis(x, y).degree();
      if (better(d, x, y, best)) best = {d, x, y, 0};
    }
  best.pairs = static_cast<std::size_t>(n) * n;
  return best;
}

PairDegree max_product_degree_parallel(const HeckeAlgebra& algebra, int radius, int jobs) {
  const auto n = static_cast<ElemId>(algebra.ball().count_upto(radius));
  std::vector<PairDegree> rows(n);
  parallel_for(n, jobs, [&](std::int64_t i) {
    const auto x = static_cast<ElemId>(i);
    PairDegree best;
    for (ElemId y = 0; y < n; ++y) {
      Degree d = algebra.multiply_basis(x, y).degree();
      if (better(d, x, y, best)) best = {d, x, y, 0};
    }
    rows[x] = best;
  });
  PairDegree best;
  for (const auto& row : rows)
    if (row.x != kNoElem && better(row.degree, row.x, row.y, best)) best = row;
  best.pairs = static_cast<std::size_t>(n) * n;
  return best;
}

PairDegree max_product_degree(const HeckeAlgebra& algebra, int radius, const Exec& exec) {
  return exec.parallel() ? max_product_degree_parallel(algebra, radius, exec.jobs)
                         : max_product_degree_serial(algebra, radius);
}

std::vector<HeckeElement> product_table(const HeckeAlgebra& algebra, int radius, const Exec& exec) {
  const auto n = static_cast<ElemId>(algebra.ball().count_upto(radius));
  std::vector<HeckeElement> table(static_cast<std::size_t>(n) * n);
  auto row = [&](std::int64_t i) {
    const auto x = static_cast<ElemId>(i);
    for (ElemId y = 0; y < n; ++y) table[static_cast<std::size_t>(x) * n + y] = algebra.multiply_basis(x, y);
  };
  if (exec.parallel()) {
    parallel_for(n, exec.jobs, row);
  } else {
    for (ElemId x = 0; x < n; ++x) row(x);
  }
  return table;
}

std::vector<AWitness> witness_degrees_serial(const KLBasis& basis, int witness_radius) {
  return basis.a_lower_bounds(witness_radius);
}

std::vector<AWitness> witness_degrees_parallel(const KLBasis& basis, int witness_radius, int jobs) {
  const GroupBall& ball = basis.ball();
  const auto n = static_cast<ElemId>(ball.count_upto(witness_radius));
  // one row of partial maxima per x, merged in x order afterwards
  std::vector<std::vector<std::pair<ElemId, AWitness>>> rows(n);
  parallel_for(n, jobs, [&](std::int64_t i) {
    const auto x = static_cast<ElemId>(i);
    std::vector<AWitness> local(ball.size());
    std::vector<ElemId> touched;
    for (ElemId y = 0; y < n; ++y)
      for (const auto& [z, c] : basis.c_product(x, y)->entries()) {
        AWitness candidate{c.degree(), x, y};
        if (local[z].x == kNoElem) touched.push_back(z);
        if (local[z].x == kNoElem || better(candidate, local[z])) local[z] = candidate;
      }
    rows[x].reserve(touched.size());
    for (ElemId z : touched) rows[x].emplace_back(z, local[z]);
  });
  std::vector<AWitness> best(ball.size());
  for (const auto& row : rows)
    for (const auto& [z, w] : row)
      if (best[z].x == kNoElem || better(w, best[z])) best[z] = w;
  return best;
}

std::vector<AWitness> witness_degrees(const KLBasis& basis, int witness_radius, const Exec& exec) {
  return exec.parallel() ? witness_degrees_parallel(basis, witness_radius, exec.jobs)
                         : witness_degrees_serial(basis, witness_radius);
}

void precompute_columns(const KLTable& table, int radius, const Exec& exec) {
  const auto n = static_cast<ElemId>(table.ball().count_upto(radius));
  if (!exec.parallel()) {
    for (ElemId w = 0; w < n; ++w) table.column(w);
    return;
  }
  parallel_for(n, exec.jobs, [&](std::int64_t i) { table.column(static_cast<ElemId>(i)); });
}

}  // namespace hecke

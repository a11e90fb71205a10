#include "hecke/kl.hpp"

#include <algorithm>
#include <atomic>
#include <map>

#include "hecke/errors.hpp"

namespace hecke {

KLTable::KLTable(const HeckeAlgebra& algebra)
    : algebra_(algebra),
      once_(std::make_unique<std::once_flag[]>(algebra.ball().size())),
      ready_(std::make_unique<std::atomic<bool>[]>(algebra.ball().size())),
      columns_(algebra.ball().size()) {
  for (std::size_t i = 0; i < columns_.size(); ++i) ready_[i].store(false, std::memory_order_relaxed);
}

HeckeElement KLTable::solve_column(ElemId w) const {
  const GroupBall& ball = algebra_.ball();
  std::span<const ElemId> interval = ball.bruhat_interval(w);
  const std::size_t n = interval.size();
  auto position = [&](ElemId u) {
    auto it = std::lower_bound(interval.begin(), interval.end(), u);
    if (it == interval.end() || *it != u)
      throw InvariantViolation("KL solve: bar(T_y) support escaped the Bruhat interval");
    return static_cast<std::size_t>(it - interval.begin());
  };

  std::vector<LaurentPoly> acc(n), p(n);
  p[n - 1] = 1;  // interval is sorted ShortLex, so w itself is last
  for (const auto& [u, r] : algebra_.bar_basis(w).entries()) acc[position(u)] += r;

  for (std::size_t pos = n - 1; pos-- > 0;) {
    const LaurentPoly& rhs = acc[pos];
    LaurentPoly q = rhs.negative_part();
    if (rhs != q - q.bar())
      throw InvariantViolation("KL solve for " + display_word(ball.word(w)) +
                               ": right-hand side is not of the form p - bar(p) at x = " +
                               display_word(ball.word(interval[pos])));
    if (q.is_zero()) continue;
    LaurentPoly qbar = q.bar();
    for (const auto& [u, r] : algebra_.bar_basis(interval[pos]).entries()) acc[position(u)].add_product(qbar, r);
    p[pos] = std::move(q);
  }

  std::vector<HeckeElement::Entry> entries;
  for (std::size_t i = 0; i < n; ++i)
    if (!p[i].is_zero()) entries.emplace_back(interval[i], std::move(p[i]));
  return HeckeElement::from_entries(std::move(entries));
}

const HeckeElement& KLTable::column(ElemId w) const {
  std::call_once(once_[w], [&] {
    columns_[w] = solve_column(w);
    ready_[w].store(true, std::memory_order_release);
  });
  return columns_[w];
}

bool KLTable::has_column(ElemId w) const { return ready_[w].load(std::memory_order_acquire); }

void KLTable::install_column(ElemId w, HeckeElement column) const {
  std::call_once(once_[w], [&] {
    columns_[w] = std::move(column);
    ready_[w].store(true, std::memory_order_release);
  });
}

LaurentPoly KLTable::p(ElemId x, ElemId w) const { return column(w).coeff(x); }

KLBasis::KLBasis(const KLTable& table) : table_(table) {}

HeckeElement KLBasis::to_c_basis(HeckeElement t_basis) const {
  std::map<ElemId, LaurentPoly> work;
  for (auto& [w, p] : t_basis.entries()) work.emplace(w, p);
  std::vector<HeckeElement::Entry> out;
  while (!work.empty()) {
    auto top = std::prev(work.end());
    ElemId z = top->first;
    LaurentPoly c = std::move(top->second);
    work.erase(top);
    for (const auto& [u, p] : table_.column(z).entries()) {
      if (u == z) continue;
      auto it = work.try_emplace(u).first;
      it->second.add_product(-c, p);
      if (it->second.is_zero()) work.erase(it);
    }
    out.emplace_back(z, std::move(c));
  }
  return HeckeElement::from_entries(std::move(out));
}

HeckeElement KLBasis::to_t_basis(const HeckeElement& c_basis) const {
  HeckeElement out;
  for (const auto& [z, c] : c_basis.entries()) out.add_scaled(table_.column(z), c);
  return out;
}

std::shared_ptr<const HeckeElement> KLBasis::c_product(ElemId x, ElemId y) const {
  const std::uint64_t key = (static_cast<std::uint64_t>(x) << 32) | y;
  {
    std::shared_lock lock(mutex_);
    auto it = products_.find(key);
    if (it != products_.end()) return it->second;
  }
  HeckeElement t_product = algebra().multiply(table_.column(x), table_.column(y));
  auto result = std::make_shared<const HeckeElement>(to_c_basis(std::move(t_product)));
  std::unique_lock lock(mutex_);
  return products_.try_emplace(key, std::move(result)).first->second;
}

LaurentPoly KLBasis::h(ElemId x, ElemId y, ElemId z) const { return c_product(x, y)->coeff(z); }

HeckeElement KLBasis::E(ElemId x, ElemId w_J) const {
  const GroupBall& b = ball();
  const GenSet J = b.right_descents(w_J);
  if (b.right_descents(x) & J) throw DomainError("E_x needs x in B_J");
  const ElemId w = b.multiply(x, w_J);
  std::vector<HeckeElement::Entry> entries;
  for (ElemId x1 : b.bruhat_interval(x)) {
    if (b.right_descents(x1) & J) continue;
    LaurentPoly coeff = table_.p(b.multiply(x1, w_J), w);
    if (!coeff.is_zero()) entries.emplace_back(x1, std::move(coeff));
  }
  return HeckeElement::from_entries(std::move(entries));
}

HeckeElement KLBasis::F(ElemId w_J, ElemId y) const {
  const GroupBall& b = ball();
  const GenSet J = b.right_descents(w_J);
  if (b.left_descents(y) & J) throw DomainError("F_y needs y in B_J^-1");
  const ElemId w = b.multiply(w_J, y);
  std::vector<HeckeElement::Entry> entries;
  for (ElemId y1 : b.bruhat_interval(y)) {
    if (b.left_descents(y1) & J) continue;
    LaurentPoly coeff = table_.p(b.multiply(w_J, y1), w);
    if (!coeff.is_zero()) entries.emplace_back(y1, std::move(coeff));
  }
  return HeckeElement::from_entries(std::move(entries));
}

AWitness KLBasis::a_lower_bound(ElemId w, int witness_radius) const {
  AWitness best;
  const auto n = static_cast<ElemId>(ball().count_upto(witness_radius));
  for (ElemId x = 0; x < n; ++x)
    for (ElemId y = 0; y < n; ++y) {
      Degree d = c_product(x, y)->coeff(w).degree();
      if (d > best.degree) best = {d, x, y};
    }
  return best;
}

std::vector<AWitness> KLBasis::a_lower_bounds(int witness_radius) const {
  std::vector<AWitness> best(ball().size());
  const auto n = static_cast<ElemId>(ball().count_upto(witness_radius));
  for (ElemId x = 0; x < n; ++x)
    for (ElemId y = 0; y < n; ++y)
      for (const auto& [z, c] : c_product(x, y)->entries()) {
        Degree d = c.degree();
        if (d > best[z].degree) best[z] = {d, x, y};
      }
  return best;
}

Integer KLBasis::gamma(ElemId x, ElemId y, ElemId z, int a_z) const {
  return h(x, y, ball().inverse(z)).coeff(a_z);
}

}  // namespace hecke

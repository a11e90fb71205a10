#include "hecke/cells.hpp"

#include <algorithm>
#include <array>
#include <limits>

#include "hecke/errors.hpp"

namespace hecke {

namespace {

int dihedral_longest_weight(const GroupConfig& c, int a, int b) {
  int m = *c.order(a, b);
  if (m % 2 == 0) return m / 2 * (c.weight(a) + c.weight(b));
  return m * c.weight(a);
}

}  // namespace

ExpectedCellCount expected_left_cell_count(const GroupConfig& config) {
  ClassificationReport cls = classify(config);
  if (cls.type == GroupType::finite) return {1, "finite Coxeter group"};
  if (cls.type == GroupType::affine) return {cls.finite_weyl_order, "affine Weyl group: |W0|"};

  // Relabel so that m(s,r) >= m(s,t) >= m(r,t), inf counting as largest.
  auto key = [](EdgeOrder m) { return m ? *m : std::numeric_limits<int>::max(); };
  struct Edge {
    int a, b;
    EdgeOrder m;
  };
  std::array<Edge, 3> edges{{{0, 1, config.order(0, 1)}, {1, 2, config.order(1, 2)}, {0, 2, config.order(0, 2)}}};
  std::stable_sort(edges.begin(), edges.end(), [&](const Edge& x, const Edge& y) { return key(x.m) > key(y.m); });
  // "s" is shared by the two largest edges, "r" closes the largest, "t" is the remaining one
  int s = (edges[0].a == edges[1].a || edges[0].a == edges[1].b) ? edges[0].a : edges[0].b;
  int r = edges[0].a == s ? edges[0].b : edges[0].a;
  int t = 3 - s - r;
  const EdgeOrder m_sr = edges[0].m, m_st = edges[1].m, m_rt = edges[2].m;

  if (!m_sr && !m_st && !m_rt) {
    std::array<int, 3> w{config.weight(0), config.weight(1), config.weight(2)};
    std::sort(w.rbegin(), w.rend());
    if (w[0] == w[1] && w[1] == w[2]) return {3, "all edges inf, equal weights"};
    if (w[0] == w[1]) return {4, "all edges inf, two largest weights equal"};
    return {std::nullopt, "all edges inf, unique largest weight"};
  }
  if (!m_sr && !m_st) {
    int lw = dihedral_longest_weight(config, r, t);
    int ls = config.weight(s);
    if (lw > ls) return {std::nullopt, "two inf edges, L(w_rt) > L(s)"};
    if (lw == ls) return {2 * *m_rt, "two inf edges, L(w_rt) = L(s)"};
    return {2 * *m_rt, "two inf edges, L(s) > L(w_rt)"};
  }
  if (!m_sr && m_st == 2 && m_rt == 2) return {2, "one inf edge, other edges 2"};
  return {std::nullopt, "other cases: infinitely many"};
}

CellAtlas::CellAtlas(const GroupBall& ball, ClassificationReport classification)
    : ball_(ball), classification_(std::move(classification)), lambda_(ball.size(), 0) {
  for (const auto& p : classification_.M)
    if (auto id = ball_.find(p.longest)) M_.push_back(*id);
  std::sort(M_.begin(), M_.end());
  std::vector<GenSet> frames;
  for (ElemId w_J : M_) frames.push_back(ball_.right_descents(w_J));
  // ids are in ShortLex order, so w·s (s a right descent) is decided before w
  for (ElemId w = 0; w < ball_.size(); ++w) {
    GenSet R = ball_.right_descents(w);
    bool member = std::any_of(frames.begin(), frames.end(), [&](GenSet J) { return subset(J, R); });
    for (int s = 0; s < kRank && !member; ++s)
      if (contains(R, s)) member = lambda_[ball_.right_mul(w, s)];
    lambda_[w] = member;
  }
}

bool CellAtlas::in_M(ElemId w) const { return std::binary_search(M_.begin(), M_.end(), w); }

bool CellAtlas::in_B(ElemId x, ElemId w_J) const {
  return (ball_.right_descents(x) & ball_.right_descents(w_J)) == 0;
}

bool CellAtlas::u_decidable(ElemId y, ElemId w_J) const {
  return ball_.length(w_J) + ball_.length(y) - 1 <= ball_.radius();
}

bool CellAtlas::in_U(ElemId y, ElemId w_J) const {
  const GenSet J = ball_.right_descents(w_J);
  if (ball_.left_descents(y) & J) return false;
  for (int s = 0; s < kRank; ++s) {
    if (!contains(J, s)) continue;
    auto z = ball_.try_multiply(ball_.left_mul(w_J, s), y);
    if (!z)
      throw OutOfBallError("U_J membership of " + display_word(ball_.word(y)) +
                           " needs an element outside the ball");
    if (lambda_[*z]) return false;
  }
  return true;
}

CellFrame CellAtlas::cell_frame(ElemId w_J) const {
  CellFrame frame;
  for (ElemId x = 0; x < ball_.size(); ++x) {
    if (in_B(x, w_J)) frame.B.push_back(x);
    if (u_decidable(x, w_J) && in_U(x, w_J)) frame.U.push_back(x);
  }
  return frame;
}

LeftCellId CellAtlas::left_cell_id(ElemId w) const {
  if (!lambda_[w])
    throw DomainError(display_word(ball_.word(w)) + " is not in the lowest two-sided cell");
  std::vector<LeftCellId> found;
  auto decompositions = ball_.prefix_decompositions(w);
  for (ElemId w_J : M_) {
    const GenSet J = ball_.right_descents(w_J);
    for (const auto& [u, y] : decompositions)
      if (subset(J, ball_.right_descents(u)) && in_U(y, w_J)) found.push_back({w_J, y});
  }
  if (found.size() != 1)
    throw InvariantViolation("left cell id of " + display_word(ball_.word(w)) + ": found " +
                             std::to_string(found.size()) + " candidates, expected exactly one");
  return found.front();
}

RightCellId CellAtlas::right_cell_id(ElemId w) const {
  LeftCellId mirrored = left_cell_id(ball_.inverse(w));
  return {ball_.inverse(mirrored.y), mirrored.w_J};
}

CanonicalFactorization CellAtlas::factorize(ElemId w) const {
  LeftCellId left = left_cell_id(w);
  RightCellId right = right_cell_id(w);
  ElemId p = ball_.multiply(ball_.multiply(ball_.inverse(right.x), w), ball_.inverse(left.y));
  const bool additive = ball_.length(right.x) + ball_.length(p) + ball_.length(left.y) == ball_.length(w);
  if (!additive || ball_.left_descents(p) != ball_.right_descents(right.w_J) ||
      ball_.right_descents(p) != ball_.right_descents(left.w_J))
    throw InvariantViolation("canonical factorization of " + display_word(ball_.word(w)) +
                             " does not have the expected shape");
  return {right.x, p, left.y};
}

bool CellAtlas::in_P(ElemId x) const {
  GenSet L = ball_.left_descents(x), R = ball_.right_descents(x);
  bool left = false, right = false;
  for (ElemId w_J : M_) {
    left = left || ball_.right_descents(w_J) == L;
    right = right || ball_.right_descents(w_J) == R;
  }
  return left && right;
}

CellCensus CellAtlas::enumerate_left_cells(int radius) const {
  CellCensus census;
  const auto n = static_cast<ElemId>(ball_.count_upto(radius));
  for (ElemId w = 0; w < n; ++w)
    if (lambda_[w]) census.cells[left_cell_id(w)].push_back(w);
  for (int r = radius - 2; r <= radius; ++r) {
    std::size_t count = 0;
    for (const auto& [id, members] : census.cells)
      if (ball_.length(id.w_J) + ball_.length(id.y) <= r) ++count;
    census.counts.emplace_back(r, count);
  }
  census.stable = census.counts[0].second == census.counts[1].second &&
                  census.counts[1].second == census.counts[2].second;
  census.strictly_increasing = census.counts[0].second < census.counts[1].second &&
                               census.counts[1].second < census.counts[2].second;
  return census;
}

nlohmann::json CellAtlas::to_json(const CellCensus& census) const {
  nlohmann::json cells = nlohmann::json::object();
  for (const auto& [id, members] : census.cells) {
    nlohmann::json list = nlohmann::json::array();
    for (ElemId w : members) list.push_back(ball_.word(w));
    cells[genset_string(ball_.right_descents(id.w_J)) + ":" + ball_.word(id.y)] = {{"members", list}};
  }
  nlohmann::json counts = nlohmann::json::array();
  for (auto [r, c] : census.counts) counts.push_back({{"radius", r}, {"count", c}});
  return {{"cells", cells}, {"counts", counts}, {"stable", census.stable}};
}

DeltaData delta_invariants(ElemId z, const KLTable& table) {
  LaurentPoly p = table.p(GroupBall::identity(), z);
  if (p.is_zero()) throw InvariantViolation("p_{e,z} vanished");
  return {-p.degree().value(), p.leading_coeff()};
}

ElemId distinguished(const LeftCellId& cell, const CellAtlas& atlas, const KLTable& table) {
  const GroupBall& ball = atlas.ball();
  const HeckeAlgebra& algebra = table.algebra();
  ElemId shortest = ball.multiply(cell.w_J, cell.y);
  HeckeElement product = algebra.multiply_basis(ball.inverse(shortest), shortest);
  std::vector<ElemId> found;
  for (const auto& [z, f] : product.entries()) {
    if (f.coeff(atlas.N()) == 0) continue;
    ElemId d = ball.inverse(z);
    if (delta_invariants(d, table).delta == atlas.N()) found.push_back(d);
  }
  if (found.size() != 1)
    throw InvariantViolation("left cell " + genset_string(ball.right_descents(cell.w_J)) + ":" +
                             ball.word(cell.y) + " has " + std::to_string(found.size()) +
                             " distinguished candidates");
  return found.front();
}

}  // namespace hecke

#include "doctest.h"
#include "hecke/kernels.hpp"
#include "hecke/workspace.hpp"
#include "support.hpp"

using namespace hecke;
using support::inf;

TEST_CASE("parallel kernels reproduce the serial reference") {
  for (const auto& c : support::sample_configs()) {
    Workspace ws(c, 8);
    CHECK(max_product_degree_parallel(ws.algebra(), 4, 4) == max_product_degree_serial(ws.algebra(), 4));
    CHECK(product_table(ws.algebra(), 3, Exec{4}) == product_table(ws.algebra(), 3, Exec{1}));
    auto serial = witness_degrees_serial(ws.basis(), 3);
    auto parallel = witness_degrees_parallel(ws.basis(), 3, 4);
    REQUIRE(serial.size() == parallel.size());
    for (std::size_t z = 0; z < serial.size(); ++z) {
      CHECK(serial[z].degree == parallel[z].degree);
      CHECK(serial[z].x == parallel[z].x);
      CHECK(serial[z].y == parallel[z].y);
    }
  }
}

TEST_CASE("max degree equals N on a group with a finite parabolic of weight N") {
  Workspace ws(GroupConfig(inf, 2, 2, {1, 2, 1}), 10);
  PairDegree d = max_product_degree(ws.algebra(), 5, Exec{2});
  CHECK(d.degree == Degree(3));
  CHECK(d.pairs == ws.ball().count_upto(5) * ws.ball().count_upto(5));
}

TEST_CASE("precomputed columns equal lazily computed ones") {
  GroupConfig c(3, 3, 3, {1, 1, 1});
  Workspace a(c, 5), b(c, 5);
  precompute_columns(a.table(), 5, Exec{4});
  for (ElemId w = 0; w < b.ball().size(); ++w) CHECK(a.table().column(w) == b.table().column(w));
}

#include <filesystem>
#include <fstream>

#include <unistd.h>

#include "doctest.h"
#include "hecke/cache.hpp"
#include "hecke/kernels.hpp"
#include "hecke/workspace.hpp"
#include "support.hpp"

using namespace hecke;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
  fs::path p = fs::temp_directory_path() / ("hecke-test-" + name + "-" + std::to_string(::getpid()));
  fs::remove_all(p);
  return p;
}

}  // namespace

TEST_CASE("cache round trip") {
  GroupConfig c(3, 3, 3, {1, 1, 1});
  fs::path dir = scratch("roundtrip");
  Workspace cold(c, 4);
  precompute_columns(cold.table(), 4, Exec{1});
  fs::path file = cache_path(dir, c, 4);
  save_cache(file, cold.table(), 4);
  REQUIRE(fs::exists(file));

  Workspace warm(c, 4);
  CacheLoadResult r = load_cache(file, warm.table());
  CHECK(r.loaded);
  CHECK(r.columns == warm.ball().size());
  for (ElemId w = 0; w < warm.ball().size(); ++w) {
    CHECK(warm.table().has_column(w));
    CHECK(warm.table().column(w) == cold.table().solve_column(w));
  }
  // a smaller ball takes the columns that fit
  Workspace small(c, 2);
  CacheLoadResult rs = load_cache(file, small.table());
  CHECK(rs.loaded);
  CHECK(rs.columns == small.ball().size());
  fs::remove_all(dir);
}

TEST_CASE("damaged or foreign caches are rejected") {
  GroupConfig c(3, 3, 3, {1, 1, 1});
  fs::path dir = scratch("tamper");
  Workspace ws(c, 3);
  precompute_columns(ws.table(), 3, Exec{1});
  fs::path file = cache_path(dir, c, 3);
  save_cache(file, ws.table(), 3);

  Workspace other(GroupConfig(3, 3, 3, {1, 1, 1}), 3);
  {
    std::fstream f(file, std::ios::in | std::ios::out | std::ios::binary);
    f.seekp(14);  // inside the config hash
    f.put('\x5a');
  }
  CacheLoadResult r = load_cache(file, other.table());
  CHECK_FALSE(r.loaded);
  CHECK(r.reason == "checksum mismatch");
  CHECK_FALSE(other.table().has_column(1));

  save_cache(file, ws.table(), 3);
  Workspace foreign(GroupConfig(4, 4, 2, {1, 1, 1}), 3);
  r = load_cache(file, foreign.table());
  CHECK_FALSE(r.loaded);
  CHECK(r.reason == "cache belongs to another config");

  r = load_cache(dir / "missing.bin", foreign.table());
  CHECK_FALSE(r.loaded);
  {
    std::ofstream junk(dir / "junk.bin");
    junk << "not a cache";
  }
  CHECK_FALSE(load_cache(dir / "junk.bin", foreign.table()).loaded);
  fs::remove_all(dir);
}

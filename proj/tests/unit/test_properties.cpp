#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nonroot/certifier.hpp"
#include "nonroot/root_solver.hpp"
#include "oracles.hpp"

#include <random>

using namespace nonroot;

namespace {

bool has_root(const Endofunction& f, std::size_t order) {
  return find_root(RootQuery{f, order}).status == RootStatus::found;
}

}  // namespace

TEST_CASE("certificates are never contradicted by exhaustive search") {
  std::mt19937_64 rng(20240611);
  std::size_t certified = 0;
  for (int i = 0; i < 10000; ++i) {
    const Endofunction f = oracle::random_endo(rng, 7);
    if (!certify_finite(f).certificate) continue;
    ++certified;
    for (std::size_t n : {2, 3}) REQUIRE_FALSE(has_root(f, n));
  }
  MESSAGE(certified << " certified maps");
  CHECK(certified > 100);
}

TEST_CASE("weakened criteria are caught by the same search") {
  std::mt19937_64 rng(7);
  std::size_t no_fiber2 = 0, fiber1 = 0;
  for (int i = 0; i < 3000; ++i) {
    const Endofunction f = oracle::random_endo(rng, 6);
    if (oracle::control_no_fiber2(f) && has_root(f, 2)) ++no_fiber2;
    if (oracle::control_fiber1_c1(f) && has_root(f, 2)) ++fiber1;
  }
  CHECK(no_fiber2 > 0);
  CHECK(fiber1 > 0);
}

TEST_CASE("find_root matches brute force on every map of 4 points, order 2") {
  const auto maps = oracle::all_endos(4);
  REQUIRE(maps.size() == 256);
  for (const auto& f : maps) {
    const auto naive = oracle::naive_roots(f, 2, true);
    const RootResult fast = find_root(RootQuery{f, 2, SearchMode::count_all});
    REQUIRE((fast.status == RootStatus::found) == naive.found);
    CHECK(fast.count == naive.count);
    if (naive.found) CHECK(fast.witness->table() == naive.first);
  }
}

TEST_CASE("find_root matches brute force on every map of 3 points, orders 3 and 4") {
  for (const auto& f : oracle::all_endos(3))
    for (std::size_t n : {3, 4}) {
      const auto naive = oracle::naive_roots(f, n, true);
      const RootResult fast = find_root(RootQuery{f, n, SearchMode::count_all});
      REQUIRE((fast.status == RootStatus::found) == naive.found);
      CHECK(fast.count == naive.count);
    }
}

TEST_CASE("certifier agrees with the quadratic reference on every map of 5 points") {
  for (const auto& f : oracle::all_endos(5)) {
    const auto out = certify_finite(f);
    const auto ref = oracle::reference_c1(f);
    REQUIRE(out.certificate.has_value() == ref.has_value());
    if (ref) CHECK(out.certificate->x0 == PointId(*ref));
  }
}

TEST_CASE("iterates of any map have roots") {
  std::mt19937_64 rng(9);
  for (int i = 0; i < 300; ++i) {
    const Endofunction g = oracle::random_endo(rng, 7);
    for (std::size_t n : {2, 3}) {
      const Endofunction f = iterate(g, n);
      CHECK(has_root(f, n));
      CHECK_FALSE(certify_finite(f).certificate);
    }
  }
}

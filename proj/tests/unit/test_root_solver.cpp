#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nonroot/errors.hpp"
#include "nonroot/json_io.hpp"
#include "nonroot/root_solver.hpp"
#include "oracles.hpp"

#include <random>

using namespace nonroot;

namespace {

Endofunction load(const std::string& name) { return decode_endo(read_json_file(oracle::corpus(name))).map; }

}  // namespace

TEST_CASE("identity has itself as smallest square root") {
  const RootResult r = find_root({Endofunction::identity(5), 2});
  REQUIRE(r.status == RootStatus::found);
  // The lexicographically smallest square root of the identity on 5 points
  // swaps 0 and 1; the brute-force oracle agrees.
  CHECK(*r.witness == Endofunction(oracle::naive_roots(Endofunction::identity(5), 2).first));
  CHECK(verify_root(Endofunction::identity(5), *r.witness, 2));
  CHECK(verify_root(Endofunction::identity(5), Endofunction::identity(5), 2));
}

TEST_CASE("witnesses for the constant collapse and nine-fiber maps") {
  const Endofunction f2 = load("remark2_f.json"), g2 = load("remark2_g.json");
  CHECK(verify_root(f2, g2, 2));
  const RootResult r = find_root({f2, 2});
  REQUIRE(r.status == RootStatus::found);
  CHECK(verify_root(f2, *r.witness, 2));

  const Endofunction f3 = load("remark3_f.json"), g3 = load("remark3_g.json");
  CHECK(verify_root(f3, g3, 2));
  const auto report = has_root_up_to(f3, 2);
  REQUIRE(report.size() == 1);
  CHECK(report[0].status == OrderStatus::found);
  CHECK(verify_root(f3, *report[0].witness, 2));
}

TEST_CASE("six-point certified map has no roots of order 2..4") {
  const Endofunction f = load("six_point.json");
  for (const auto& rep : has_root_up_to(f, 4)) CHECK(rep.status == OrderStatus::none);
  CHECK_FALSE(oracle::naive_roots(f, 2).found);
  CHECK_FALSE(oracle::naive_roots(f, 3).found);
}

TEST_CASE("3-cycle square root is f squared") {
  const Endofunction f({1, 2, 0});
  const RootResult r = find_root({f, 2});
  REQUIRE(r.status == RootStatus::found);
  CHECK(*r.witness == iterate(f, 2));
  CHECK(verify_root(Endofunction::identity(3), f, 3));
}

TEST_CASE("identity has roots of every order up to 4") {
  for (const auto& rep : has_root_up_to(Endofunction::identity(4), 4)) CHECK(rep.status == OrderStatus::found);
}

TEST_CASE("errors and budget") {
  CHECK_THROWS_AS(find_root({Endofunction::identity(2), 1}), std::invalid_argument);
  CHECK_THROWS_AS(verify_root(Endofunction::identity(2), Endofunction::identity(3), 2), std::invalid_argument);
  CHECK_THROWS_AS(find_root({load("six_point.json"), 2, SearchMode::first_witness, 3}), BudgetExceeded);
  const auto rep = has_root_up_to(load("six_point.json"), 3, 3);
  CHECK(rep[0].status == OrderStatus::budget_exceeded);
}

TEST_CASE("count mode agrees with the brute-force count") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const Endofunction f = oracle::random_endo(rng, 5);
    for (std::size_t order : {2, 3}) {
      const auto naive = oracle::naive_roots(f, order, true);
      const RootResult r = find_root({f, order, SearchMode::count_all});
      CHECK(r.count == naive.count);
      CHECK((r.status == RootStatus::found) == naive.found);
      const RootResult first = find_root({f, order});
      if (naive.found) CHECK(first.witness->table() == naive.first);
    }
  }
}

TEST_CASE("witnesses are deterministic") {
  const Endofunction f = load("remark3_f.json");
  CHECK(find_root({f, 2}).witness == find_root({f, 2}).witness);
}

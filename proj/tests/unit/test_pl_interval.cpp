#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nonroot/errors.hpp"
#include "nonroot/json_io.hpp"
#include "nonroot/pl_interval.hpp"
#include "oracles.hpp"

#include <random>

using namespace nonroot;

namespace {

PLMapInterval load(const std::string& name) { return decode_interval(read_json_file(oracle::corpus(name))); }

Rational q(long p, long d = 1) {
  Rational r(p, d);
  r.canonicalize();
  return r;
}

// Continuous map through (i/k, v_i) with v_i = num_i / den.
PLMapInterval random_continuous(std::mt19937_64& rng, int k, int den) {
  std::vector<Rational> v(k + 1);
  for (auto& x : v) x = q(std::uniform_int_distribution<int>(0, den)(rng), den);
  std::vector<Piece> pieces;
  for (int i = 0; i < k; ++i) {
    const Rational lo = q(i, k), hi = q(i + 1, k);
    const Rational slope((v[i + 1] - v[i]) / (hi - lo));
    pieces.push_back({Segment{lo, hi, true, i + 1 == k}, slope, Rational(v[i] - slope * lo)});
  }
  return PLMapInterval(pieces);
}

// Sampling points: a fine rational grid plus the breakpoints of f.
std::vector<Rational> samples(int m) {
  std::vector<Rational> xs;
  for (int i = 0; i <= m; ++i) xs.push_back(q(i, m));
  return xs;
}

}  // namespace

TEST_CASE("evaluating the worked examples") {
  const auto f1 = load("f1.json");
  const auto f2 = load("f2.json");
  CHECK(eval(f1, q(1, 4)) == q(3, 4));
  CHECK(eval(f1, q(3, 4)) == 0);
  CHECK(eval(f1, q(1, 3)) == q(3, 4));
  CHECK(eval(f1, q(1)) == q(1, 4));
  CHECK(eval(f2, q(5, 8)) == q(1, 4));
  CHECK(eval(f2, q(1, 2)) == q(1, 2));
  CHECK(eval(f2, q(3, 4)) == q(1, 2));
  CHECK_FALSE(f2.is_continuous());
  CHECK(f1.is_continuous());
  CHECK_THROWS_AS(eval(f1, q(5, 4)), std::out_of_range);
  CHECK_THROWS_AS(eval(f1, q(-1, 8)), std::out_of_range);
}

TEST_CASE("preimages of the worked examples") {
  const auto f1 = load("f1.json");
  const auto f2 = load("f2.json");
  const CardinalSet p1 = preimage_point(f1, q(3, 4));
  CHECK(p1 == CardinalSet({Segment::closed(q(1, 4), q(1, 2))}));
  const CardinalSet p2 = preimage2_point(f1, q(3, 4));
  CHECK(p2.contains(Segment::closed(q(1, 12), q(1, 6))));
  CHECK(p2.contains(Segment::closed(q(7, 12), q(2, 3))));
  CHECK(p2.contains(q(1)));
  CHECK(p2.cardinality() == Cardinal::continuum());

  const CardinalSet f2_fiber = preimage_point(f2, q(1, 4));
  CHECK(f2_fiber == CardinalSet({Segment::point(q(1, 16)), Segment::open(q(1, 2), q(3, 4)), Segment::point(q(7, 8))}));
  CHECK(preimage2_point(f2, q(1, 4)).contains(Segment::open(q(1, 8), q(3, 16))));
  CHECK(preimage_point(f2, q(2)).empty());
}

TEST_CASE("fiber profiles and certificates") {
  const auto f1 = load("f1.json");
  const FiberProfile p = fiber_profile(f1, q(3, 4));
  CHECK(p.fiber1 == Cardinal::continuum());
  CHECK(p.fiber2 == Cardinal::continuum());
  CHECK(p.max_other_fiber == Cardinal::finite(3));
  CHECK(p.not_fixed);
  CHECK(max_other_fiber(PLMapInterval::identity(), q(1, 2)) == Cardinal::finite(1));
  CHECK(max_other_fiber(PLMapInterval::constant(q(1, 2)), q(1, 3)) == Cardinal::continuum());
  CHECK(max_other_fiber(PLMapInterval::constant(q(1, 2)), q(1, 2)) == Cardinal::finite(0));

  const auto c1 = certify_pl(f1);
  REQUIRE(c1.certificate);
  CHECK(c1.certificate->kind == CertificateCase::C3);
  CHECK(c1.certificate->x0 == PointId(q(3, 4)));
  const auto c2 = certify_pl(load("f2.json"));
  REQUIRE(c2.certificate);
  CHECK(c2.certificate->x0 == PointId(q(1, 4)));

  // A constant map is its own square root; the only candidate is fixed.
  const auto half = certify_pl(PLMapInterval::constant(q(1, 2)));
  CHECK_FALSE(half.certificate);
  CHECK(certify_pl(PLMapInterval::identity()).abstention->reason == AbstainReason::no_non_fixed_point);
}

TEST_CASE("sup distance") {
  const auto f1 = load("f1.json");
  CHECK(sup_distance(f1, PLMapInterval::constant(q(3, 4))) == q(3, 4));
  CHECK(sup_distance(f1, f1) == 0);
  CHECK(sup_distance(PLMapInterval::identity(), PLMapInterval::constant(q(1, 2))) == q(1, 2));
  // Supremum over an open end is still reported.
  const auto f2 = load("f2.json");
  CHECK(sup_distance(f2, PLMapInterval::constant(q(1, 4))) == q(3, 4));
}

TEST_CASE("construction rejects pieces that do not partition [0,1]") {
  CHECK_THROWS_AS(PLMapInterval({Piece{Segment::closed(q(0), q(1, 2)), q(1), q(0)}}), InputError);
  CHECK_THROWS_AS(PLMapInterval({Piece{Segment::closed(q(0), q(1, 2)), q(1), q(0)},
                                 Piece{Segment::closed(q(1, 2), q(1)), q(0), q(0)}}),
                  InputError);
  CHECK_THROWS_AS(PLMapInterval({Piece{Segment::closed(q(0), q(1)), q(2), q(0)}}), InputError);
  CHECK_NOTHROW(PLMapInterval({Piece{Segment::closed(q(0), q(1, 2)), q(1), q(0)},
                               Piece{Segment::closed(q(1, 2), q(1)), q(0), q(1, 2)}}));
}

TEST_CASE("compose agrees with pointwise evaluation") {
  std::mt19937_64 rng(11);
  const auto f1 = load("f1.json");
  const auto f2 = load("f2.json");
  const auto xs = samples(96);
  for (const auto& [outer, inner] : {std::pair{f1, f1}, std::pair{f1, f2}, std::pair{f2, f1}, std::pair{f2, f2}}) {
    const PLMapInterval c = compose(outer, inner);
    for (const Rational& x : xs) CHECK(eval(c, x) == eval(outer, eval(inner, x)));
  }
  for (int trial = 0; trial < 60; ++trial) {
    const auto f = random_continuous(rng, 1 + trial % 5, 6);
    const auto g = random_continuous(rng, 1 + trial % 3, 4);
    const PLMapInterval c = compose(f, g);
    for (const Rational& x : xs) REQUIRE(eval(c, x) == eval(f, eval(g, x)));
  }
}

TEST_CASE("preimages agree with pointwise membership") {
  std::mt19937_64 rng(12);
  const auto xs = samples(240);
  for (int trial = 0; trial < 60; ++trial) {
    const auto f = random_continuous(rng, 1 + trial % 6, 4);
    const Rational y = q(std::uniform_int_distribution<int>(0, 8)(rng), 8);
    const CardinalSet s = preimage_point(f, y);
    const CardinalSet s2 = preimage2_point(f, y);
    for (const Rational& x : xs) {
      REQUIRE(s.contains(x) == (eval(f, x) == y));
      REQUIRE(s2.contains(x) == (eval(f, eval(f, x)) == y));
    }
  }
}

TEST_CASE("sup distance dominates sampled differences and is attained on continuous maps") {
  std::mt19937_64 rng(13);
  const auto xs = samples(120);
  for (int trial = 0; trial < 40; ++trial) {
    const auto f = random_continuous(rng, 1 + trial % 4, 5);
    const auto g = random_continuous(rng, 1 + trial % 5, 3);
    const Rational d = sup_distance(f, g);
    Rational seen(0);
    for (const Rational& x : xs) {
      const Rational diff = abs(Rational(eval(f, x) - eval(g, x)));
      REQUIRE(diff <= d);
      if (diff > seen) seen = diff;
    }
    // Breakpoints lie on the sample grid, so the maximum is sampled exactly.
    CHECK(seen == d);
  }
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nonroot/cardinal.hpp"

#include <stdexcept>

using namespace nonroot;

TEST_CASE("total order: finite below aleph0 below continuum") {
  CHECK(Cardinal::finite(3) < Cardinal::finite(4));
  CHECK(Cardinal::finite(1000000) < Cardinal::aleph0());
  CHECK(Cardinal::aleph0() < Cardinal::continuum());
  CHECK(Cardinal::finite(2) == Cardinal::finite(2));
  CHECK(std::max(Cardinal::aleph0(), Cardinal::finite(7)) == Cardinal::aleph0());
}

TEST_CASE("finite products multiply; the cube bound") {
  const Cardinal n = Cardinal::finite(2);
  CHECK(n * n * n == Cardinal::finite(8));
  CHECK(Cardinal::finite(9) * Cardinal::finite(9) * Cardinal::finite(9) == Cardinal::finite(729));
  CHECK_THROWS_AS(Cardinal::finite(1ULL << 40) * Cardinal::finite(1ULL << 40), std::overflow_error);
}

TEST_CASE("infinite cardinals absorb") {
  CHECK(Cardinal::aleph0() * Cardinal::finite(5) == Cardinal::aleph0());
  CHECK(Cardinal::aleph0() * Cardinal::aleph0() == Cardinal::aleph0());
  CHECK(Cardinal::continuum() * Cardinal::aleph0() == Cardinal::continuum());
  CHECK(Cardinal::aleph0() + Cardinal::continuum() == Cardinal::continuum());
  CHECK(Cardinal::finite(0) * Cardinal::continuum() == Cardinal::finite(0));
  CHECK(Cardinal::finite(3) + Cardinal::finite(4) == Cardinal::finite(7));
}

TEST_CASE("text form round-trips") {
  for (const Cardinal c : {Cardinal::finite(0), Cardinal::finite(12), Cardinal::aleph0(), Cardinal::continuum()})
    CHECK(Cardinal::parse(c.to_string()) == c);
  CHECK(Cardinal::aleph0().to_string() == "aleph0");
  CHECK_THROWS(Cardinal::aleph0().count());
}

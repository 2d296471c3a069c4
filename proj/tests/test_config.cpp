#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "dofic/config.hpp"

using namespace dofic;

TEST_CASE("validate accepts positive counts") {
  CHECK(validate(3, 1, 4, 2) == AntennaConfig{3, 1, 4, 2});
  CHECK(validate(1, 1, 1, 1) == AntennaConfig{1, 1, 1, 1});
}

TEST_CASE("validate rejects non-positive counts") {
  CHECK_THROWS_AS(validate(0, 1, 4, 2), NonPositiveAntennaCount);
  CHECK_THROWS_AS(validate(3, -1, 4, 2), NonPositiveAntennaCount);
  CHECK_THROWS_AS(validate(3, 1, 4, 0), NonPositiveAntennaCount);
}

TEST_CASE("canonicalize orders receivers") {
  auto a = canonicalize({3, 1, 4, 2});
  CHECK(a.config == AntennaConfig{3, 1, 4, 2});
  CHECK_FALSE(a.swapped);

  auto b = canonicalize({1, 3, 2, 4});
  CHECK(b.config == AntennaConfig{3, 1, 4, 2});
  CHECK(b.swapped);

  auto tie = canonicalize({2, 2, 3, 3});
  CHECK(tie.config == AntennaConfig{2, 2, 3, 3});
  CHECK_FALSE(tie.swapped);
}

TEST_CASE("canonicalize is an involution") {
  for (int m1 = 1; m1 <= 4; ++m1)
    for (int m2 = 1; m2 <= 4; ++m2)
      for (int n1 = 1; n1 <= 4; ++n1)
        for (int n2 = 1; n2 <= 4; ++n2) {
          const auto once = canonicalize({m1, m2, n1, n2});
          const auto twice = canonicalize(once.config);
          CHECK(once.config.n1 >= once.config.n2);
          CHECK(twice.config == once.config);
          CHECK_FALSE(twice.swapped);
        }
}

TEST_CASE("regime names round-trip") {
  for (auto r : {CsiRegime::NoCsi, CsiRegime::Delayed, CsiRegime::DelayedAtTransmitters,
                 CsiRegime::DelayedCrossOnly, CsiRegime::Perfect})
    CHECK(parse_regime(regime_name(r)) == r);
  CHECK_THROWS_AS(parse_regime("instant"), std::invalid_argument);
}

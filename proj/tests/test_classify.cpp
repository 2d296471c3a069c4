#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "dofic/classify.hpp"

using namespace dofic;

namespace {

std::vector<AntennaConfig> canonical_sweep(int max) {
  std::vector<AntennaConfig> out;
  for (int m1 = 1; m1 <= max; ++m1)
    for (int m2 = 1; m2 <= max; ++m2)
      for (int n1 = 1; n1 <= max; ++n1)
        for (int n2 = 1; n2 <= n1; ++n2) out.push_back({m1, m2, n1, n2});
  return out;
}

}  // namespace

TEST_CASE("case labels on hand-checked configs") {
  CHECK(classify_case({2, 2, 2, 2}) == CaseLabel::Case0);
  CHECK(classify_case({3, 1, 4, 2}) == CaseLabel::BI);
  CHECK(classify_case({7, 3, 5, 4}) == CaseLabel::BIII1);
  CHECK(classify_case({5, 2, 4, 3}) == CaseLabel::BII2);   // m = 3/2 < 2 = M2
  CHECK(classify_case({8, 1, 4, 3}) == CaseLabel::BII1);   // m = 3 >= 1 = M2
  CHECK(classify_case({3, 4, 4, 2}) == CaseLabel::AI1);
  CHECK(classify_case({3, 2, 2, 2}) == CaseLabel::AI2);
  CHECK(classify_case({3, 3, 2, 2}) == CaseLabel::AI3);
  CHECK(classify_case({3, 2, 4, 2}) == CaseLabel::AII1);
  CHECK(classify_case({8, 2, 4, 2}) == CaseLabel::AII2);
  CHECK(classify_case({4, 2, 3, 3}) == CaseLabel::B0);
}

TEST_CASE("threshold is an exact rational") {
  CHECK(threshold_m({5, 2, 4, 3}) == Rat(3, 2));
  CHECK(threshold_m({7, 3, 5, 4}) == 2);
  CHECK(threshold_m({8, 1, 4, 3}) == 2);  // M1' = 6
}

TEST_CASE("expected active bounds follow the table") {
  CHECK(expected_active_bounds(CaseLabel::BI) == std::vector<BoundLabel>{BoundLabel::L1});
  CHECK(expected_active_bounds(CaseLabel::BII1) == std::vector<BoundLabel>{BoundLabel::L3});
  CHECK(expected_active_bounds(CaseLabel::AI3) ==
        std::vector<BoundLabel>{BoundLabel::L1, BoundLabel::L2});
  CHECK(expected_active_bounds(CaseLabel::BIII2) ==
        std::vector<BoundLabel>{BoundLabel::L1, BoundLabel::L3, BoundLabel::L4});
  CHECK(expected_active_bound_alternatives(CaseLabel::AI2).size() == 2);
}

TEST_CASE("corner points on hand-checked configs") {
  const auto ai3 = corner_points({3, 3, 2, 2});
  CHECK(ai3.at(CornerLabel::P12) == DofPoint{Rat(6, 5), Rat(6, 5)});

  const auto bi = corner_points({3, 1, 4, 2});
  CHECK(bi.at(CornerLabel::Po21) == DofPoint{Rat(3, 2), 1});

  const auto biii = corner_points({7, 3, 5, 4});
  CHECK(biii.at(CornerLabel::P34) == DofPoint{Rat(7, 3), Rat(8, 3)});
  CHECK(biii.at(CornerLabel::Po24) == DofPoint{Rat(3, 2), 3});

  const auto bii2 = corner_points({5, 2, 4, 3});
  CHECK(bii2.at(CornerLabel::Po21) == DofPoint{Rat(5, 3), 2});
  CHECK(bii2.at(CornerLabel::P13) == DofPoint{Rat(5, 2), Rat(3, 2)});

  CHECK(corner_points({2, 2, 2, 2}).empty());
}

TEST_CASE("corners lie on the boundary of the delayed region") {
  for (const auto& c : canonical_sweep(6)) {
    const DofRegion region = delayed_region(c);
    for (const auto& [label, point] : corner_points(c)) {
      CHECK(contains(region, point));
      bool tight = false;
      for (const auto& hb : region.bounds)
        tight = tight || hb.a * point.d1 + hb.b * point.d2 == hb.c;
      CHECK(tight);
    }
  }
}

TEST_CASE("taxonomy matches the table across the sweep") {
  for (const auto& c : canonical_sweep(6)) {
    std::string why;
    const bool ok = taxonomy_matches(c, &why);
    INFO(why);
    CHECK(ok);
  }
}

TEST_CASE("corners plus time sharing span the whole region") {
  // geometric restatement, no simulation: the hull of the corner points and
  // the single-user axis points is the delayed region itself
  for (const auto& c : canonical_sweep(8)) {
    const DofRegion region = delayed_region(c);
    if (corners_for_case(classify_case(c)).empty()) continue;
    std::vector<DofPoint> pts{{0, 0}, {std::min(c.m1, c.n1), 0}, {0, std::min(c.m2, c.n2)}};
    for (const auto& [label, point] : corner_points(c)) pts.push_back(point);
    CHECK(convex_hull(pts) == region.vertices);
  }
}

TEST_CASE("regime comparison rows") {
  const auto all_equal = csi_comparison({2, 2, 2, 2});
  CHECK(all_equal.no_vs_delayed == RegionRelation::Equal);
  CHECK(all_equal.delayed_vs_perfect == RegionRelation::Equal);
  CHECK(all_equal.agrees);

  const auto bii1 = csi_comparison({8, 1, 4, 3});
  CHECK(bii1.no_vs_delayed == RegionRelation::FirstStrictSubset);
  CHECK(bii1.delayed_vs_perfect == RegionRelation::Equal);
  CHECK(bii1.agrees);

  const auto bi = csi_comparison({3, 1, 4, 2});
  CHECK(bi.no_vs_delayed == RegionRelation::Equal);  // printed formula collides
  CHECK(bi.claimed_no_vs_delayed == RegionRelation::FirstStrictSubset);
  CHECK_FALSE(bi.agrees);
  CHECK(bi.documented_deviation);
}

TEST_CASE("the three regions coincide whenever the second case family ties") {
  for (const auto& c : canonical_sweep(6)) {
    if (classify_case(c) != CaseLabel::AI2) continue;
    CHECK(same_region(no_csi_region(c), delayed_region(c)));
    CHECK(same_region(delayed_region(c), perfect_region(c)));
  }
}

TEST_CASE("maximal d1 forces d2 to zero when interference saturates") {
  for (const auto& c : canonical_sweep(6)) {
    if (c.m1 <= c.n2) continue;
    const Rat d1max = std::min(c.m1, c.n1);
    for (const auto& v : delayed_region(c).vertices)
      if (v.d1 == d1max) CHECK(v.d2 == 0);
  }
}

TEST_CASE("maximal d2 behaviour splits between the two case families") {
  for (const auto& c : canonical_sweep(6)) {
    if (c.m1 <= c.n2) continue;
    const DofRegion region = delayed_region(c);
    if (c.m2 >= c.n2) {
      for (const auto& v : region.vertices)
        if (v.d2 == std::min(c.m2, c.n2)) CHECK(v.d1 == 0);
    } else {
      CHECK(contains(region, {c.n2 - c.m2, c.m2}));
    }
  }
}

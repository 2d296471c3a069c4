#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "dofic/polytope.hpp"
#include "dofic/regions.hpp"
#include "dofic/rng.hpp"

using namespace dofic;

namespace {

HalfPlaneBound hp(BoundLabel l, Rat a, Rat b, Rat c) { return {l, a, b, c}; }

DofRegion box(Rat w, Rat h) {
  return make_region({hp(BoundLabel::Lo1, 1, 0, w), hp(BoundLabel::Lo2, 0, 1, h)});
}

// Independent membership oracle on the vertex cycle: a point is inside a
// counterclockwise convex polygon iff it is on the left of every edge.
bool in_hull(const std::vector<DofPoint>& cycle, const DofPoint& p) {
  const std::size_t n = cycle.size();
  if (n == 0) return false;
  if (n == 1) return cycle[0] == p;
  for (std::size_t i = 0; i < n; ++i) {
    const DofPoint& a = cycle[i];
    const DofPoint& b = cycle[(i + 1) % n];
    const Rat cross = (b.d1 - a.d1) * (p.d2 - a.d2) - (b.d2 - a.d2) * (p.d1 - a.d1);
    if (cross < 0) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("vertex enumeration on hand-solved systems") {
  const DofRegion r1 = make_region({hp(BoundLabel::Lo1, 1, 0, 3), hp(BoundLabel::Lo2, 0, 1, 1),
                                    hp(BoundLabel::L1, Rat(1, 3), Rat(1, 2), 1)});
  CHECK(r1.vertices == std::vector<DofPoint>{{0, 0}, {3, 0}, {Rat(3, 2), 1}, {0, 1}});

  const DofRegion r2 = make_region({hp(BoundLabel::Lo1, 1, 0, 2), hp(BoundLabel::Lo2, 0, 1, 2),
                                    hp(BoundLabel::L3, 1, 1, 2)});
  CHECK(r2.vertices == std::vector<DofPoint>{{0, 0}, {2, 0}, {0, 2}});

  CHECK(box(1, 1).vertices == std::vector<DofPoint>{{0, 0}, {1, 0}, {1, 1}, {0, 1}});
}

TEST_CASE("containment is exact on the boundary") {
  const DofRegion r = delayed_region({3, 1, 4, 2});
  CHECK(contains(r, {Rat(3, 2), 1}));
  CHECK_FALSE(contains(r, {2, 1}));
  CHECK(contains(r, {0, 0}));
}

TEST_CASE("relation distinguishes the four outcomes") {
  CHECK(relation(box(1, 1), box(1, 1)) == RegionRelation::Equal);
  CHECK(relation(box(1, 1), box(2, 2)) == RegionRelation::FirstStrictSubset);
  CHECK(relation(box(2, 2), box(1, 1)) == RegionRelation::SecondStrictSubset);
  CHECK(relation(box(2, 1), box(1, 2)) == RegionRelation::Incomparable);
}

TEST_CASE("active bounds match the tabulated shapes") {
  CHECK(active_bounds(delayed_region({3, 1, 4, 2})) == std::vector<BoundLabel>{BoundLabel::L1});
  CHECK(active_bounds(delayed_region({8, 1, 4, 3})) == std::vector<BoundLabel>{BoundLabel::L3});
  CHECK(active_bounds(delayed_region({7, 3, 5, 4})) ==
        std::vector<BoundLabel>{BoundLabel::L3, BoundLabel::L4});
}

TEST_CASE("convex hull drops interior and collinear points") {
  std::vector<DofPoint> pts{{0, 0}, {2, 0}, {2, 2}, {0, 2}, {1, 1}, {1, 0}};
  CHECK(convex_hull(pts) == std::vector<DofPoint>{{0, 0}, {2, 0}, {2, 2}, {0, 2}});
}

TEST_CASE("mirror swaps the two users") {
  const DofRegion r = delayed_region({3, 1, 4, 2});
  const DofRegion m = mirror(r);
  CHECK(m.vertices == std::vector<DofPoint>{{0, 0}, {1, 0}, {1, Rat(3, 2)}, {0, 3}});
  CHECK(mirror(m).vertices == r.vertices);
}

TEST_CASE("membership agrees with the hull oracle on random points") {
  Rng rng(11, 0);
  for (int t = 0; t < 50; ++t) {
    const int m1 = 1 + static_cast<int>(rng.below(5));
    const int m2 = 1 + static_cast<int>(rng.below(5));
    const int n1 = 1 + static_cast<int>(rng.below(5));
    const int n2 = 1 + static_cast<int>(rng.below(n1));
    const DofRegion r = delayed_region({m1, m2, n1, n2});
    for (int k = 0; k < 40; ++k) {
      const long den = 1 + rng.below(6);
      const DofPoint p{Rat(rng.below(7L * den), den), Rat(rng.below(7L * den), den)};
      CHECK(contains(r, p) == in_hull(r.vertices, p));
    }
  }
}

TEST_CASE("every vertex binds at least two constraint lines") {
  for (int m1 = 1; m1 <= 5; ++m1)
    for (int m2 = 1; m2 <= 5; ++m2)
      for (int n1 = 1; n1 <= 5; ++n1)
        for (int n2 = 1; n2 <= n1; ++n2) {
          const DofRegion r = delayed_region({m1, m2, n1, n2});
          for (std::size_t i = 0; i < r.vertices.size(); ++i) {
            const auto& v = r.vertices[i];
            CHECK(v != r.vertices[(i + 1) % r.vertices.size()]);
            int tight = 0;
            if (v.d1 == 0) ++tight;
            if (v.d2 == 0) ++tight;
            for (const auto& hb : r.bounds)
              if (hb.a * v.d1 + hb.b * v.d2 == hb.c) ++tight;
            CHECK(tight >= 2);
          }
        }
}

TEST_CASE("relation is antisymmetric and equality is an equivalence") {
  Rng rng(13, 1);
  std::vector<DofRegion> regions;
  for (int t = 0; t < 12; ++t) {
    const int n1 = 1 + static_cast<int>(rng.below(4));
    regions.push_back(delayed_region({1 + static_cast<int>(rng.below(4)),
                                      1 + static_cast<int>(rng.below(4)), n1,
                                      1 + static_cast<int>(rng.below(n1))}));
  }
  for (const auto& a : regions)
    for (const auto& b : regions) {
      const RegionRelation ab = relation(a, b);
      const RegionRelation ba = relation(b, a);
      if (ab == RegionRelation::Equal) CHECK(ba == RegionRelation::Equal);
      if (ab == RegionRelation::FirstStrictSubset) CHECK(ba == RegionRelation::SecondStrictSubset);
      if (ab == RegionRelation::Incomparable) CHECK(ba == RegionRelation::Incomparable);
      for (const auto& c : regions)
        if (ab == RegionRelation::Equal && relation(b, c) == RegionRelation::Equal)
          CHECK(relation(a, c) == RegionRelation::Equal);
    }
  CHECK(relation(regions[0], regions[0]) == RegionRelation::Equal);
}

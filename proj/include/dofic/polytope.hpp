#pragma once

#include <string>
#include <vector>

#include "dofic/rational.hpp"

namespace dofic {

struct DofPoint {
  Rat d1, d2;
  bool operator==(const DofPoint&) const = default;
};

enum class BoundLabel { Lo1, Lo2, L1, L2, L3, L4, L5 };

std::string bound_label_name(BoundLabel l);

/// a*d1 + b*d2 <= c over exact rationals, with a, b, c >= 0 and (a,b) != 0.
struct HalfPlaneBound {
  BoundLabel label;
  Rat a, b, c;
};

/// Convex polygon in the first quadrant cut out by half-planes; the axes
/// d1 >= 0 and d2 >= 0 are implicit. Vertices are stored counterclockwise
/// starting at the origin (always a vertex here: every c is nonnegative).
struct DofRegion {
  std::vector<HalfPlaneBound> bounds;
  std::vector<DofPoint> vertices;
  bool printed_formula_suspect = false;
};

enum class RegionRelation { Equal, FirstStrictSubset, SecondStrictSubset, Incomparable };

std::string relation_name(RegionRelation r);

/// All pairwise line intersections (axes included), filtered for feasibility,
/// deduplicated exactly and ordered counterclockwise starting at the origin.
/// Requires a bound with a > 0 and one with b > 0 so the polygon is bounded.
std::vector<DofPoint> enumerate_vertices(const std::vector<HalfPlaneBound>& bounds);

DofRegion make_region(std::vector<HalfPlaneBound> bounds);

bool contains(const DofRegion& region, const DofPoint& p);

/// Decided by testing each region's vertices against the other's bounds;
/// sound for convex polygons.
RegionRelation relation(const DofRegion& r1, const DofRegion& r2);

/// Minimal set of labeled bounds that still cuts the same polygon together
/// with Lo1/Lo2 (always retained), found by trying to drop L1..L5 in label
/// order. Removing any surviving bound strictly enlarges the polygon; when
/// two bounds coincide the earlier label is the one dropped.
std::vector<BoundLabel> active_bounds(const DofRegion& region);

/// Region rebuilt from Lo1/Lo2 plus the given labels only.
DofRegion restrict_to_labels(const DofRegion& region, const std::vector<BoundLabel>& keep);

bool same_region(const DofRegion& a, const DofRegion& b);

/// r1 subset-or-equal of r2.
bool region_subset(const DofRegion& r1, const DofRegion& r2);

/// Strict convex hull (collinear interior points dropped), counterclockwise
/// starting at the lexicographically smallest point.
std::vector<DofPoint> convex_hull(std::vector<DofPoint> pts);

/// Swap the roles of the two users: coordinates, coefficients and labels.
DofRegion mirror(const DofRegion& region);

}  // namespace dofic

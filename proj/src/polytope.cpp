#include "dofic/polytope.hpp"

#include <algorithm>
#include <stdexcept>

namespace dofic {

namespace {

struct Line {
  Rat a, b, c;  // a*x + b*y = c
};

Rat cross(const DofPoint& o, const DofPoint& p, const DofPoint& q) {
  return (p.d1 - o.d1) * (q.d2 - o.d2) - (p.d2 - o.d2) * (q.d1 - o.d1);
}

bool lex_less(const DofPoint& p, const DofPoint& q) {
  if (p.d1 != q.d1) return p.d1 < q.d1;
  return p.d2 < q.d2;
}

bool satisfies(const std::vector<HalfPlaneBound>& bounds, const DofPoint& p) {
  if (p.d1 < 0 || p.d2 < 0) return false;
  for (const auto& hb : bounds)
    if (hb.a * p.d1 + hb.b * p.d2 > hb.c) return false;
  return true;
}

// Counterclockwise cycle starting at the origin. The centroid is interior
// (the polygon is full-dimensional), so angular comparisons are strict.
std::vector<DofPoint> order_ccw(std::vector<DofPoint> pts) {
  std::sort(pts.begin(), pts.end(), lex_less);
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() <= 2) return pts;

  Rat cx = 0, cy = 0;
  for (const auto& p : pts) {
    cx += p.d1;
    cy += p.d2;
  }
  const Rat n = static_cast<int>(pts.size());
  DofPoint centroid{cx / n, cy / n};

  auto half = [&](const DofPoint& p) {
    Rat dy = p.d2 - centroid.d2;
    Rat dx = p.d1 - centroid.d1;
    return (dy > 0 || (dy == 0 && dx > 0)) ? 0 : 1;
  };
  std::sort(pts.begin(), pts.end(), [&](const DofPoint& p, const DofPoint& q) {
    int hp = half(p), hq = half(q);
    if (hp != hq) return hp < hq;
    return cross(centroid, p, q) > 0;
  });

  auto origin = std::find(pts.begin(), pts.end(), DofPoint{0, 0});
  if (origin != pts.end()) std::rotate(pts.begin(), origin, pts.end());
  return pts;
}

int label_rank(BoundLabel l) { return static_cast<int>(l); }

}  // namespace

std::string bound_label_name(BoundLabel l) {
  switch (l) {
    case BoundLabel::Lo1: return "Lo1";
    case BoundLabel::Lo2: return "Lo2";
    case BoundLabel::L1: return "L1";
    case BoundLabel::L2: return "L2";
    case BoundLabel::L3: return "L3";
    case BoundLabel::L4: return "L4";
    case BoundLabel::L5: return "L5";
  }
  return "?";
}

std::string relation_name(RegionRelation r) {
  switch (r) {
    case RegionRelation::Equal: return "Equal";
    case RegionRelation::FirstStrictSubset: return "FirstStrictSubset";
    case RegionRelation::SecondStrictSubset: return "SecondStrictSubset";
    case RegionRelation::Incomparable: return "Incomparable";
  }
  return "?";
}

std::vector<DofPoint> enumerate_vertices(const std::vector<HalfPlaneBound>& bounds) {
  std::vector<Line> lines;
  lines.push_back({1, 0, 0});  // d1 = 0
  lines.push_back({0, 1, 0});  // d2 = 0
  for (const auto& hb : bounds) lines.push_back({hb.a, hb.b, hb.c});

  std::vector<DofPoint> pts;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    for (std::size_t j = i + 1; j < lines.size(); ++j) {
      const Rat det = lines[i].a * lines[j].b - lines[j].a * lines[i].b;
      if (det == 0) continue;
      DofPoint p{(lines[i].c * lines[j].b - lines[j].c * lines[i].b) / det,
                 (lines[i].a * lines[j].c - lines[j].a * lines[i].c) / det};
      if (satisfies(bounds, p)) pts.push_back(p);
    }
  }
  return order_ccw(std::move(pts));
}

DofRegion make_region(std::vector<HalfPlaneBound> bounds) {
  std::stable_sort(bounds.begin(), bounds.end(), [](const HalfPlaneBound& x, const HalfPlaneBound& y) {
    return label_rank(x.label) < label_rank(y.label);
  });
  DofRegion region;
  region.vertices = enumerate_vertices(bounds);
  region.bounds = std::move(bounds);
  return region;
}

bool contains(const DofRegion& region, const DofPoint& p) { return satisfies(region.bounds, p); }

bool region_subset(const DofRegion& r1, const DofRegion& r2) {
  for (const auto& v : r1.vertices)
    if (!contains(r2, v)) return false;
  return true;
}

RegionRelation relation(const DofRegion& r1, const DofRegion& r2) {
  const bool sub12 = region_subset(r1, r2);
  const bool sub21 = region_subset(r2, r1);
  if (sub12 && sub21) return RegionRelation::Equal;
  if (sub12) return RegionRelation::FirstStrictSubset;
  if (sub21) return RegionRelation::SecondStrictSubset;
  return RegionRelation::Incomparable;
}

std::vector<BoundLabel> active_bounds(const DofRegion& region) {
  std::vector<HalfPlaneBound> working = region.bounds;
  for (auto l : {BoundLabel::L1, BoundLabel::L2, BoundLabel::L3, BoundLabel::L4, BoundLabel::L5}) {
    std::vector<HalfPlaneBound> candidate;
    bool present = false;
    for (const auto& hb : working) {
      if (hb.label == l)
        present = true;
      else
        candidate.push_back(hb);
    }
    if (present && enumerate_vertices(candidate) == region.vertices) working = std::move(candidate);
  }
  std::vector<BoundLabel> active;
  for (const auto& hb : working)
    if (hb.label != BoundLabel::Lo1 && hb.label != BoundLabel::Lo2) active.push_back(hb.label);
  return active;
}

DofRegion restrict_to_labels(const DofRegion& region, const std::vector<BoundLabel>& keep) {
  std::vector<HalfPlaneBound> bounds;
  for (const auto& hb : region.bounds) {
    if (hb.label == BoundLabel::Lo1 || hb.label == BoundLabel::Lo2 ||
        std::find(keep.begin(), keep.end(), hb.label) != keep.end())
      bounds.push_back(hb);
  }
  return make_region(std::move(bounds));
}

bool same_region(const DofRegion& a, const DofRegion& b) { return a.vertices == b.vertices; }

std::vector<DofPoint> convex_hull(std::vector<DofPoint> pts) {
  std::sort(pts.begin(), pts.end(), lex_less);
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  const std::size_t n = pts.size();
  if (n <= 2) return pts;
  std::vector<DofPoint> hull(2 * n);
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i) {  // lower
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  for (std::size_t i = n - 1, t = k + 1; i-- > 0;) {  // upper
    while (k >= t && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  return hull;
}

DofRegion mirror(const DofRegion& region) {
  auto swap_label = [](BoundLabel l) {
    switch (l) {
      case BoundLabel::Lo1: return BoundLabel::Lo2;
      case BoundLabel::Lo2: return BoundLabel::Lo1;
      case BoundLabel::L1: return BoundLabel::L2;
      case BoundLabel::L2: return BoundLabel::L1;
      case BoundLabel::L4: return BoundLabel::L5;
      case BoundLabel::L5: return BoundLabel::L4;
      default: return l;
    }
  };
  std::vector<HalfPlaneBound> bounds;
  for (const auto& hb : region.bounds) bounds.push_back({swap_label(hb.label), hb.b, hb.a, hb.c});
  DofRegion out = make_region(std::move(bounds));
  out.printed_formula_suspect = region.printed_formula_suspect;
  return out;
}

}  // namespace dofic

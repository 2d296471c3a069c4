#include "dofic/regions.hpp"

#include <algorithm>

namespace dofic {

namespace {

int imin(int a, int b) { return std::min(a, b); }
int imax(int a, int b) { return std::max(a, b); }

bool case_bi(const AntennaConfig& c) {
  return c.n1 > c.n2 && c.n1 >= c.m1 && c.m1 > c.n2 && c.n2 > c.m2;
}

}  // namespace

bool condition_holds(int user, const AntennaConfig& c) {
  const int mi = user == 1 ? c.m1 : c.m2;
  const int mj = user == 1 ? c.m2 : c.m1;
  const int ni = user == 1 ? c.n1 : c.n2;
  const int nj = user == 1 ? c.n2 : c.n1;
  if (nj >= ni) return false;
  if (!(mi > c.n1 + c.n2 - mj)) return false;
  if (!(c.n1 + c.n2 - mj > ni)) return false;
  if (!(ni > nj)) return false;
  if (!(nj > mj)) return false;
  // here ni > nj > mj, so ni - mj > 0
  return Rat(mj) > Rat(nj * (nj - mj), ni - mj);
}

HalfPlaneBound bound(BoundLabel label, const AntennaConfig& c) {
  const int m1 = c.m1, m2 = c.m2, n1 = c.n1, n2 = c.n2;
  switch (label) {
    case BoundLabel::Lo1:
      return {label, 1, 0, imin(m1, n1)};
    case BoundLabel::Lo2:
      return {label, 0, 1, imin(m2, n2)};
    case BoundLabel::L1:
      return {label, Rat(1, imin(n1 + n2, m1)), Rat(1, imin(n2, m1)),
              Rat(imin(n2, m1 + m2), imin(n2, m1))};
    case BoundLabel::L2:
      return {label, Rat(1, imin(n1, m2)), Rat(1, imin(n1 + n2, m2)),
              Rat(imin(n1, m1 + m2), imin(n1, m2))};
    case BoundLabel::L3:
      return {label, 1, 1,
              imin(imin(m1 + m2, n1 + n2), imin(imax(m1, n2), imax(m2, n1)))};
    case BoundLabel::L4:
      if (!condition_holds(1, c))
        throw ConditionNotSatisfied("L4 requires Condition 1 at " + config_str(c));
      return {label, 1, Rat(n1 + 2 * n2 - m2, n2), n1 + n2};
    case BoundLabel::L5:
      if (!condition_holds(2, c))
        throw ConditionNotSatisfied("L5 requires Condition 2 at " + config_str(c));
      return {label, Rat(n2 + 2 * n1 - m1, n1), 1, n1 + n2};
  }
  throw std::logic_error("unreachable");
}

DofRegion delayed_region(const AntennaConfig& c) {
  std::vector<HalfPlaneBound> bounds{bound(BoundLabel::Lo1, c), bound(BoundLabel::Lo2, c),
                                     bound(BoundLabel::L1, c), bound(BoundLabel::L2, c),
                                     bound(BoundLabel::L3, c)};
  if (condition_holds(1, c)) bounds.push_back(bound(BoundLabel::L4, c));
  if (condition_holds(2, c)) bounds.push_back(bound(BoundLabel::L5, c));
  return make_region(std::move(bounds));
}

DofRegion perfect_region(const AntennaConfig& c) {
  return make_region({bound(BoundLabel::Lo1, c), bound(BoundLabel::Lo2, c),
                      bound(BoundLabel::L3, c)});
}

DofRegion no_csi_region(const AntennaConfig& c) {
  const int m1 = c.m1, m2 = c.m2, n1 = c.n1, n2 = c.n2;
  HalfPlaneBound weighted{BoundLabel::L1, Rat(1, imin(m1, n1)), Rat(1, imin(m1, n2)),
                          Rat(imin(n2, m1 + m2), imin(m1, n2))};
  DofRegion region = make_region({bound(BoundLabel::Lo1, c), bound(BoundLabel::Lo2, c), weighted});
  region.printed_formula_suspect = case_bi(c);
  return region;
}

DofRegion region_for(const AntennaConfig& c, CsiRegime regime) {
  const CanonicalConfig canon = canonicalize(c);
  DofRegion region;
  switch (regime) {
    case CsiRegime::NoCsi:
      region = no_csi_region(canon.config);
      break;
    case CsiRegime::Perfect:
      region = perfect_region(canon.config);
      break;
    default:
      region = delayed_region(canon.config);
      break;
  }
  return canon.swapped ? mirror(region) : region;
}

}  // namespace dofic

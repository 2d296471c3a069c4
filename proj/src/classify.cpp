#include "dofic/classify.hpp"

#include <algorithm>
#include <stdexcept>

namespace dofic {

std::string case_name(CaseLabel l) {
  switch (l) {
    case CaseLabel::Case0: return "0";
    case CaseLabel::AI1: return "A.I.1";
    case CaseLabel::AI2: return "A.I.2";
    case CaseLabel::AI3: return "A.I.3";
    case CaseLabel::AII1: return "A.II.1";
    case CaseLabel::AII2: return "A.II.2";
    case CaseLabel::B0: return "B.0";
    case CaseLabel::BI: return "B.I";
    case CaseLabel::BII1: return "B.II.1";
    case CaseLabel::BII2: return "B.II.2";
    case CaseLabel::BIII1: return "B.III.1";
    case CaseLabel::BIII2: return "B.III.2";
  }
  return "?";
}

std::string corner_name(CornerLabel l) {
  switch (l) {
    case CornerLabel::P12: return "P12";
    case CornerLabel::P13: return "P13";
    case CornerLabel::P14: return "P14";
    case CornerLabel::P34: return "P34";
    case CornerLabel::Po21: return "Po21";
    case CornerLabel::Po23: return "Po23";
    case CornerLabel::Po24: return "Po24";
  }
  return "?";
}

CornerLabel parse_corner(const std::string& s) {
  for (auto l : {CornerLabel::P12, CornerLabel::P13, CornerLabel::P14, CornerLabel::P34,
                 CornerLabel::Po21, CornerLabel::Po23, CornerLabel::Po24})
    if (corner_name(l) == s) return l;
  throw std::invalid_argument("unknown corner label: " + s);
}

int m1_prime(const AntennaConfig& c) { return std::min(c.m1, c.n1 + c.n2 - c.m2); }

Rat threshold_m(const AntennaConfig& c) {
  const int mp = m1_prime(c);
  return Rat(static_cast<long>(c.n2) * (mp - c.n1), mp - c.n2);
}

CaseLabel classify_case(const AntennaConfig& c) {
  if (c.n2 >= c.m1) return CaseLabel::Case0;
  if (c.m2 >= c.n2) {
    if (c.m2 >= c.n1) {
      if (c.m1 <= c.n1) return CaseLabel::AI1;
      return c.n2 == c.m2 ? CaseLabel::AI2 : CaseLabel::AI3;
    }
    return c.n1 >= c.m1 ? CaseLabel::AII1 : CaseLabel::AII2;
  }
  if (c.n1 == c.n2) return CaseLabel::B0;
  if (c.n1 >= c.m1) return CaseLabel::BI;
  if (condition_holds(1, c))
    return Rat(c.m1) >= Rat(c.n1 + c.n2) - threshold_m(c) ? CaseLabel::BIII1 : CaseLabel::BIII2;
  return Rat(c.m2) <= threshold_m(c) ? CaseLabel::BII1 : CaseLabel::BII2;
}

std::vector<std::vector<BoundLabel>> expected_active_bound_alternatives(CaseLabel l) {
  using B = BoundLabel;
  switch (l) {
    case CaseLabel::Case0: return {{B::L3}};
    case CaseLabel::AI1: return {{B::L1}};
    case CaseLabel::AI2: return {{B::L2}, {B::L3}};
    case CaseLabel::AI3: return {{B::L1, B::L2}};
    case CaseLabel::AII1: return {{B::L1}};
    case CaseLabel::AII2: return {{B::L1, B::L3}};
    case CaseLabel::B0: return {{B::L3}};
    case CaseLabel::BI: return {{B::L1}};
    case CaseLabel::BII1: return {{B::L3}};
    case CaseLabel::BII2: return {{B::L1, B::L3}};
    case CaseLabel::BIII1: return {{B::L3, B::L4}};
    case CaseLabel::BIII2: return {{B::L1, B::L3, B::L4}};
  }
  return {};
}

std::vector<BoundLabel> expected_active_bounds(CaseLabel l) {
  return expected_active_bound_alternatives(l).front();
}

std::vector<CornerLabel> corners_for_case(CaseLabel l) {
  switch (l) {
    case CaseLabel::AI3: return {CornerLabel::P12};
    case CaseLabel::AII2: return {CornerLabel::P13};
    case CaseLabel::BI: return {CornerLabel::Po21};
    case CaseLabel::BII1: return {CornerLabel::Po23};
    case CaseLabel::BII2: return {CornerLabel::Po21, CornerLabel::P13};
    case CaseLabel::BIII1: return {CornerLabel::Po24, CornerLabel::P34};
    case CaseLabel::BIII2: return {CornerLabel::Po24, CornerLabel::P13, CornerLabel::P14};
    default: return {};
  }
}

std::map<CornerLabel, DofPoint> corner_points(const AntennaConfig& c) {
  const int m1 = c.m1, m2 = c.m2, n1 = c.n1, n2 = c.n2;
  std::map<CornerLabel, DofPoint> out;
  const CaseLabel label = classify_case(c);
  switch (label) {
    case CaseLabel::AI3: {
      const long p1 = std::min(m1, n1 + n2), p2 = std::min(m2, n1 + n2);
      const long den = n1 * (p2 - n2) + p2 * (p1 - n1);
      out[CornerLabel::P12] = {Rat(n1 * p1 * (p2 - n2), den), Rat(n2 * p2 * (p1 - n1), den)};
      break;
    }
    case CaseLabel::AII2: {
      const long p1 = std::min(m1, n1 + n2);
      out[CornerLabel::P13] = {Rat(p1 * (n1 - n2), p1 - n2), Rat(static_cast<long>(n2) * (p1 - n1), p1 - n2)};
      break;
    }
    case CaseLabel::BI:
      out[CornerLabel::Po21] = {Rat(static_cast<long>(m1) * (n2 - m2), n2), m2};
      break;
    case CaseLabel::BII1:
      out[CornerLabel::Po23] = {n1 - m2, m2};
      break;
    case CaseLabel::BII2:
      out[CornerLabel::Po21] = {Rat(static_cast<long>(m1) * (n2 - m2), n2), m2};
      out[CornerLabel::P13] = {Rat(static_cast<long>(m1) * (n1 - n2), m1 - n2),
                               Rat(static_cast<long>(n2) * (m1 - n1), m1 - n2)};
      break;
    case CaseLabel::BIII1:
    case CaseLabel::BIII2: {
      const long mp = n1 + n2 - m2;  // equals m1_prime under Condition 1
      out[CornerLabel::Po24] = {Rat(mp * (n2 - m2), n2), m2};
      if (label == CaseLabel::BIII1) {
        out[CornerLabel::P34] = {Rat(static_cast<long>(n1) * mp - static_cast<long>(n2) * n2, mp),
                                 Rat(static_cast<long>(n2) * n2, mp)};
      } else {
        out[CornerLabel::P13] = {Rat(static_cast<long>(m1) * (n1 - n2), m1 - n2),
                                 Rat(static_cast<long>(n2) * (m1 - n1), m1 - n2)};
        out[CornerLabel::P14] = {Rat(static_cast<long>(m1) * (mp - n1), mp + n2 - m1),
                                 Rat(static_cast<long>(n2) * (n1 + n2 - m1), mp + n2 - m1)};
      }
      break;
    }
    default:
      break;
  }
  return out;
}

namespace {

void claimed_relations(CaseLabel l, RegionRelation& no_vs_d, RegionRelation& d_vs_p) {
  switch (l) {
    case CaseLabel::Case0:
    case CaseLabel::AI2:
    case CaseLabel::B0:
      no_vs_d = RegionRelation::Equal;
      d_vs_p = RegionRelation::Equal;
      break;
    case CaseLabel::AI1:
    case CaseLabel::AII1:
      no_vs_d = RegionRelation::Equal;
      d_vs_p = RegionRelation::FirstStrictSubset;
      break;
    case CaseLabel::BII1:
      no_vs_d = RegionRelation::FirstStrictSubset;
      d_vs_p = RegionRelation::Equal;
      break;
    default:
      no_vs_d = RegionRelation::FirstStrictSubset;
      d_vs_p = RegionRelation::FirstStrictSubset;
      break;
  }
}

}  // namespace

namespace {

bool same_half_plane(const HalfPlaneBound& x, const HalfPlaneBound& y) {
  return x.a * y.b == y.a * x.b && x.a * y.c == y.a * x.c && x.b * y.c == y.b * x.c;
}

}  // namespace

bool taxonomy_matches(const AntennaConfig& c, std::string* why) {
  const CaseLabel label = classify_case(c);
  if (label == CaseLabel::BII2 && c.m1 != m1_prime(c)) {
    if (why) *why = "second refinement reached with M1 != M1' at " + config_str(c);
    return false;
  }
  const DofRegion delayed = delayed_region(c);
  const std::vector<BoundLabel> necessary = active_bounds(delayed);
  const auto find_bound = [&](BoundLabel l) {
    return std::find_if(delayed.bounds.begin(), delayed.bounds.end(),
                        [&](const HalfPlaneBound& hb) { return hb.label == l; });
  };
  for (const auto& alternative : expected_active_bound_alternatives(label)) {
    if (!same_region(restrict_to_labels(delayed, alternative), delayed)) continue;
    // every strictly active bound must appear in the entry, up to label
    // aliasing between coinciding half-planes
    bool covers = true;
    for (const auto l : necessary) {
      if (std::find(alternative.begin(), alternative.end(), l) != alternative.end()) continue;
      bool aliased = false;
      for (const auto a : alternative)
        aliased = aliased || same_half_plane(*find_bound(l), *find_bound(a));
      covers = covers && aliased;
    }
    if (covers) return true;
  }
  if (why) {
    std::string names;
    for (const auto l : necessary) names += bound_label_name(l) + " ";
    *why = "case " + case_name(label) + " at " + config_str(c) +
           ": strictly active bounds {" + names + "} not matched by the tabulated entry";
  }
  return false;
}

CsiComparison csi_comparison(const AntennaConfig& c) {
  CsiComparison cmp;
  cmp.label = classify_case(c);
  const DofRegion no = no_csi_region(c);
  const DofRegion delayed = delayed_region(c);
  const DofRegion perfect = perfect_region(c);
  cmp.no_vs_delayed = relation(no, delayed);
  cmp.delayed_vs_perfect = relation(delayed, perfect);
  claimed_relations(cmp.label, cmp.claimed_no_vs_delayed, cmp.claimed_delayed_vs_perfect);
  cmp.agrees = cmp.no_vs_delayed == cmp.claimed_no_vs_delayed &&
               cmp.delayed_vs_perfect == cmp.claimed_delayed_vs_perfect;
  cmp.documented_deviation = !cmp.agrees && cmp.label == CaseLabel::BI &&
                             cmp.no_vs_delayed == RegionRelation::Equal &&
                             cmp.delayed_vs_perfect == cmp.claimed_delayed_vs_perfect;
  return cmp;
}

}  // namespace dofic

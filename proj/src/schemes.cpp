#include "dofic/schemes.hpp"

#include <algorithm>
#include <sstream>

#include "dofic/rng.hpp"

namespace dofic {

namespace {

std::vector<PlanEntry> fresh_run(int owner, int& next, int count) {
  std::vector<PlanEntry> v;
  v.reserve(count);
  for (int i = 0; i < count; ++i) v.push_back(FreshSymbol{{owner, next++}});
  return v;
}

/// Split `total` into `parts` nonnegative integers, as even as possible,
/// larger values first.
std::vector<int> even_split(long total, int parts) {
  std::vector<int> v(parts, static_cast<int>(total / parts));
  const int r = static_cast<int>(total % parts);
  for (int i = 0; i < r; ++i) ++v[i];
  return v;
}

void note(SchemeSpec& s, const std::string& line) { s.transcript.push_back(line); }

std::string dof_str(const DofPoint& p) {
  return "(" + frac_str(p.d1) + ", " + frac_str(p.d2) + ")";
}

// Three phases. Phase 1: user 1 bursts fresh symbols while T2 is silent;
// phase 2 is the mirror image; phase 3 retransmits both stored interference
// pools, chunked N1 (resp. N2) rows per slot.
SchemeSpec three_phase_p12(const AntennaConfig& c) {
  const int mp1 = std::min(c.m1, c.n1 + c.n2);
  const int mp2 = std::min(c.m2, c.n1 + c.n2);
  SchemeSpec s;
  s.config = c;
  s.t1 = c.n1 * (mp2 - c.n2);
  s.t2 = c.n2 * (mp1 - c.n1);
  s.t3 = (mp2 - c.n2) * (mp1 - c.n1);
  s.T = s.t1 + s.t2 + s.t3;
  s.d1_star = static_cast<long>(mp1) * s.t1;
  s.d2_star = static_cast<long>(mp2) * s.t2;
  int next1 = 0, next2 = 0;
  for (int t = 0; t < s.t1; ++t) {
    SlotPlan slot;
    slot.tx1 = fresh_run(1, next1, mp1);
    slot.store = StoreKind::CrossAtR2;
    s.slots.push_back(std::move(slot));
  }
  for (int t = 0; t < s.t2; ++t) {
    SlotPlan slot;
    slot.tx2 = fresh_run(2, next2, mp2);
    slot.store = StoreKind::CrossAtR1;
    s.slots.push_back(std::move(slot));
  }
  std::vector<RetransmitLc> pool1, pool2;
  for (int t = 0; t < s.t1; ++t)
    for (int r = 0; r < mp1 - c.n1; ++r) pool1.push_back({t, r});
  for (int t = 0; t < s.t2; ++t)
    for (int r = 0; r < mp2 - c.n2; ++r) pool2.push_back({s.t1 + t, r});
  for (int k = 0; k < s.t3; ++k) {
    SlotPlan slot;
    for (int j = 0; j < c.n1; ++j) slot.tx1.push_back(pool1[static_cast<std::size_t>(k) * c.n1 + j]);
    for (int j = 0; j < c.n2; ++j) slot.tx2.push_back(pool2[static_cast<std::size_t>(k) * c.n2 + j]);
    s.slots.push_back(std::move(slot));
  }
  note(s, "three phases: " + std::to_string(s.t1) + "+" + std::to_string(s.t2) + "+" +
              std::to_string(s.t3) + " slots, fresh " + std::to_string(mp1) + "/slot then " +
              std::to_string(mp2) + "/slot, then " + std::to_string(c.n1) + "+" +
              std::to_string(c.n2) + " retransmitted rows per slot");
  return s;
}

// Two phases: user-1 burst, then T1 relays one stored antenna-row per slot
// across all phase-one slots while T2 sends N2 fresh symbols; N1 transmit
// antennas active in phase two.
SchemeSpec two_phase_p13(const AntennaConfig& c) {
  const int mp1 = std::min(c.m1, c.n1 + c.n2);
  SchemeSpec s;
  s.config = c;
  s.t1 = c.n1 - c.n2;
  s.t2 = mp1 - c.n1;
  s.T = s.t1 + s.t2;
  s.d1_star = static_cast<long>(mp1) * s.t1;
  s.d2_star = static_cast<long>(c.n2) * s.t2;
  int next1 = 0, next2 = 0;
  for (int t = 0; t < s.t1; ++t) {
    SlotPlan slot;
    slot.tx1 = fresh_run(1, next1, mp1);
    slot.store = StoreKind::CrossAtR2;
    s.slots.push_back(std::move(slot));
  }
  for (int k = 0; k < s.t2; ++k) {
    SlotPlan slot;
    for (int i = 0; i < s.t1; ++i) slot.tx1.push_back(RetransmitLc{i, k});
    slot.tx2 = fresh_run(2, next2, c.n2);
    s.slots.push_back(std::move(slot));
  }
  note(s, "two phases: " + std::to_string(s.t1) + " burst slots of " + std::to_string(mp1) +
              " fresh symbols, then " + std::to_string(s.t2) + " relay slots (" +
              std::to_string(s.t1) + " rows + " + std::to_string(c.n2) + " fresh)");
  return s;
}

// Piggyback rows (already known to receiver 2) grouped into per-slot batches
// of at most N1-N2 for the burst/relay schemes driving meff > N1 antennas.
PartitionInstance po2x_instance(const AntennaConfig& c, int meff) {
  PartitionInstance inst;
  const int t1 = c.n2 - c.m2;
  for (int t = 0; t < t1; ++t)
    for (int r = 0; r < meff - c.n1; ++r)
      inst.elements.push_back({ElementClass::IsR2Known, t, c.m2 + r});
  inst.caps = {c.m2, c.n1 - c.n2, 0, 0, false};
  return inst;
}

// Exact packing for the relay that sends nothing but interference rows:
// subsets of exactly N1-M2 with at most N2-M2 rows unknown to receiver 2.
PartitionInstance po23_instance(const AntennaConfig& c) {
  PartitionInstance inst;
  const int mp = m1_prime(c);
  const int t1 = c.n1 - c.m2;
  for (int t = 0; t < t1; ++t) {
    for (int r = 0; r < c.m2; ++r) inst.elements.push_back({ElementClass::IsR2Unknown, t, r});
    for (int r = 0; r < mp - c.n1; ++r)
      inst.elements.push_back({ElementClass::IsR2Known, t, c.m2 + r});
  }
  inst.caps = {mp + c.m2 - c.n1, c.n1 - c.m2, 0, c.n2 - c.m2, true};
  return inst;
}

// Phase-two load of the generic scheme: n' fresh symbols for user 2 plus the
// interference rows, packed under the three per-slot caps.
PartitionInstance generic_instance(const AntennaConfig& c, const IaParams& p) {
  PartitionInstance inst;
  long sum_n = 0;
  for (const int v : p.n) sum_n += v;
  const long fresh2_late = p.d2_star - sum_n;
  for (long j = 0; j < fresh2_late; ++j)
    inst.elements.push_back({ElementClass::DS, -1, static_cast<int>(j)});
  for (int t = 0; t < p.t1; ++t) {
    for (int r = 0; r < p.n[t]; ++r) inst.elements.push_back({ElementClass::IsR2Unknown, t, r});
    for (int r = 0; r < p.m[t] - c.n1; ++r)
      inst.elements.push_back({ElementClass::IsR2Known, t, p.n[t] + r});
  }
  inst.caps = {p.T - p.t1, c.n1, c.m2, c.n2, false};
  return inst;
}

// T2 keeps sending M2 fresh symbols every slot; T1 bursts for t1 = N2-M2
// slots, then relays the interference rows receiver 2 could not observe
// cleanly. meff is the number of transmit antennas user 1 actually drives.
SchemeSpec relay_po2x(const AntennaConfig& c, int meff) {
  SchemeSpec s;
  s.config = c;
  s.t1 = c.n2 - c.m2;
  s.t2 = c.m2;
  s.T = c.n2;
  s.d1_star = static_cast<long>(meff) * s.t1;
  s.d2_star = static_cast<long>(c.m2) * s.T;
  int next1 = 0, next2 = 0;

  const PartitionInstance inst = po2x_instance(c, meff);
  Partition part;
  if (!inst.elements.empty()) {
    part = partition_symbols(inst.elements, inst.caps);
  } else {
    part.subsets.assign(s.t2, {});
  }

  for (int t = 0; t < s.t1; ++t) {
    SlotPlan slot;
    slot.tx1 = fresh_run(1, next1, meff);
    slot.tx2 = fresh_run(2, next2, c.m2);
    slot.store = StoreKind::EliminatedCrossAtR2;
    slot.elim_keep = c.m2;
    s.slots.push_back(std::move(slot));
  }
  for (int k = 0; k < s.t2; ++k) {
    SlotPlan slot;
    for (int i = 0; i < s.t1; ++i) slot.tx1.push_back(RetransmitLc{i, k});
    for (const auto& e : part.subsets[k]) slot.tx1.push_back(RetransmitLc{e.slot, e.row});
    slot.tx2 = fresh_run(2, next2, c.m2);
    s.slots.push_back(std::move(slot));
  }
  note(s, "burst/relay over " + std::to_string(s.T) + " slots: " + std::to_string(meff) +
              " fresh rows per burst slot, " + std::to_string(c.m2) +
              " fresh symbols for user 2 every slot, " + std::to_string(inst.elements.size()) +
              " piggybacked rows");
  return s;
}

// Exact-cardinality relay: all interference rows are packed into subsets of
// exactly N1-M2 with at most N2-M2 rows unknown to receiver 2 per subset.
SchemeSpec relay_po23(const AntennaConfig& c) {
  const int mp = m1_prime(c);
  SchemeSpec s;
  s.config = c;
  s.t1 = c.n1 - c.m2;
  s.t2 = mp + c.m2 - c.n1;
  s.T = mp;
  s.d1_star = static_cast<long>(mp) * s.t1;
  s.d2_star = static_cast<long>(c.m2) * s.T;
  int next1 = 0, next2 = 0;

  const PartitionInstance inst = po23_instance(c);
  const Partition part = partition_symbols(inst.elements, inst.caps);

  for (int t = 0; t < s.t1; ++t) {
    SlotPlan slot;
    slot.tx1 = fresh_run(1, next1, mp);
    slot.tx2 = fresh_run(2, next2, c.m2);
    slot.store = StoreKind::EliminatedCrossAtR2;
    slot.elim_keep = c.m2;
    s.slots.push_back(std::move(slot));
  }
  for (int k = 0; k < s.t2; ++k) {
    SlotPlan slot;
    for (const auto& e : part.subsets[k]) slot.tx1.push_back(RetransmitLc{e.slot, e.row});
    slot.tx2 = fresh_run(2, next2, c.m2);
    s.slots.push_back(std::move(slot));
  }
  note(s, "burst/relay over " + std::to_string(s.T) + " slots with exact row packing: " +
              std::to_string(inst.elements.size()) + " rows into " + std::to_string(s.t2) +
              " subsets of " + std::to_string(c.n1 - c.m2));
  return s;
}

}  // namespace

Partition partition_symbols(std::vector<PartitionElement> elements, const PartitionCaps& caps) {
  if (caps.subsets < 1) throw PartitionInfeasible("subset count must be positive");
  Partition part;
  part.subsets.assign(caps.subsets, {});
  std::vector<int> ds(caps.subsets, 0), unknown(caps.subsets, 0), total(caps.subsets, 0);

  auto lex = [](const PartitionElement& a, const PartitionElement& b) {
    if (a.slot != b.slot) return a.slot < b.slot;
    return a.row < b.row;
  };
  std::stable_sort(elements.begin(), elements.end(), lex);

  auto place = [&](ElementClass cls) {
    for (const auto& e : elements) {
      if (e.cls != cls) continue;
      bool placed = false;
      for (int j = 0; j < caps.subsets && !placed; ++j) {
        if (total[j] >= caps.total_cap) continue;
        if (cls == ElementClass::DS && (ds[j] >= caps.ds_cap || ds[j] + unknown[j] >= caps.mixed_cap))
          continue;
        if (cls == ElementClass::IsR2Unknown && ds[j] + unknown[j] >= caps.mixed_cap) continue;
        part.subsets[j].push_back(e);
        ++total[j];
        if (cls == ElementClass::DS) ++ds[j];
        if (cls == ElementClass::IsR2Unknown) ++unknown[j];
        placed = true;
      }
      if (!placed)
        throw PartitionInfeasible("no subset can take element (slot " + std::to_string(e.slot) +
                                  ", row " + std::to_string(e.row) + ")");
    }
  };
  place(ElementClass::DS);
  place(ElementClass::IsR2Unknown);
  place(ElementClass::IsR2Known);

  if (caps.exact_fill)
    for (int j = 0; j < caps.subsets; ++j)
      if (total[j] != caps.total_cap)
        throw PartitionInfeasible("subset " + std::to_string(j) + " has " +
                                  std::to_string(total[j]) + " elements, expected " +
                                  std::to_string(caps.total_cap));
  return part;
}

SchemeSpec generic_ia_scheme(const AntennaConfig& c, const IaParams& p, CornerLabel corner) {
  const int t2 = p.T - p.t1;
  if (p.t1 < 1 || t2 < 1) throw InfeasibleParameters("need 1 <= t1 < T");
  if (static_cast<int>(p.m.size()) != p.t1 || static_cast<int>(p.n.size()) != p.t1)
    throw InfeasibleParameters("m_t and n_t must have t1 entries");
  long sum_m = 0, sum_n = 0;
  for (int t = 0; t < p.t1; ++t) {
    if (p.m[t] < c.n1 || p.m[t] > c.m1)
      throw InfeasibleParameters("m_t outside [N1, M1] at slot " + std::to_string(t));
    if (p.n[t] < 0 || p.n[t] > c.m2)
      throw InfeasibleParameters("n_t outside [0, M2] at slot " + std::to_string(t));
    if (p.m[t] + p.n[t] > c.n1 + c.n2)
      throw InfeasibleParameters("m_t + n_t exceeds N1 + N2 at slot " + std::to_string(t));
    sum_m += p.m[t];
    sum_n += p.n[t];
  }
  if (sum_m != p.d1_star) throw InfeasibleParameters("sum of m_t must equal d1*");
  if (sum_n > p.d2_star) throw InfeasibleParameters("sum of n_t exceeds d2*");
  const long fresh2_late = p.d2_star - sum_n;  // n'
  const long known_count = p.d1_star - static_cast<long>(c.n1) * p.t1;
  if (static_cast<long>(c.m2) * t2 < fresh2_late)
    throw InfeasibleParameters("inequality (a) M2*t2 >= n' fails");
  if (static_cast<long>(c.n2) * t2 - fresh2_late < sum_n)
    throw InfeasibleParameters("inequality (b) N2*t2 - n' >= sum n_t fails");
  if (static_cast<long>(c.n1) * t2 - fresh2_late - sum_n < known_count)
    throw InfeasibleParameters("inequality (c) N1*t2 - n' - sum n_t >= d1* - N1*t1 fails");

  SchemeSpec s;
  s.config = c;
  s.corner = corner;
  s.T = p.T;
  s.t1 = p.t1;
  s.t2 = t2;
  s.d1_star = p.d1_star;
  s.d2_star = p.d2_star;

  const PartitionInstance inst = generic_instance(c, p);
  const Partition part = partition_symbols(inst.elements, inst.caps);

  int next1 = 0, next2 = 0;
  for (int t = 0; t < p.t1; ++t) {
    SlotPlan slot;
    slot.tx1 = fresh_run(1, next1, p.m[t]);
    slot.tx2 = fresh_run(2, next2, p.n[t]);
    slot.store = StoreKind::EliminatedCrossAtR2;  // keep == 0 degrades to the raw rows
    slot.elim_keep = p.n[t];
    s.slots.push_back(std::move(slot));
  }
  for (int k = 0; k < t2; ++k) {
    SlotPlan slot;
    int ds_here = 0;
    for (const auto& e : part.subsets[k]) {
      if (e.cls == ElementClass::DS)
        ++ds_here;
      else
        slot.tx1.push_back(RetransmitLc{e.slot, e.row});
    }
    slot.tx2 = fresh_run(2, next2, ds_here);
    s.slots.push_back(std::move(slot));
  }
  std::ostringstream os;
  os << "generic scheme: T=" << p.T << " t1=" << p.t1 << " d*=(" << p.d1_star << ","
     << p.d2_star << ") n'=" << fresh2_late;
  note(s, os.str());
  return s;
}

IaParams ia_params_for(const AntennaConfig& c, CornerLabel corner) {
  const CaseLabel label = classify_case(c);
  const bool generic_p13 = corner == CornerLabel::P13 &&
                           (label == CaseLabel::BII2 || label == CaseLabel::BIII2);
  const bool generic_p34 = corner == CornerLabel::P34 && label == CaseLabel::BIII1;
  const bool generic_p14 = corner == CornerLabel::P14 && label == CaseLabel::BIII2;
  if (!generic_p13 && !generic_p34 && !generic_p14)
    throw CornerUndefinedForCase("corner " + corner_name(corner) + " of case " +
                                 case_name(label) + " has no generic-scheme parameters");
  IaParams p;
  if (corner == CornerLabel::P13) {
    // user-2 load cap: M2 when T1 drives all its antennas within the
    // receive space, otherwise the leftover space N1+N2-M1
    const int cap = label == CaseLabel::BII2 ? c.m2 : c.n1 + c.n2 - c.m1;
    p.T = c.m1 - c.n2;
    p.t1 = c.n1 - c.n2;
    p.d1_star = static_cast<long>(c.m1) * (c.n1 - c.n2);
    p.d2_star = static_cast<long>(c.n2) * (c.m1 - c.n1);
    p.m.assign(p.t1, c.m1);
    p.n = even_split(std::min<long>(static_cast<long>(cap) * p.t1, p.d2_star), p.t1);
  } else if (corner == CornerLabel::P34) {
    const int mp = c.n1 + c.n2 - c.m2;
    p.T = mp;
    p.t1 = c.n1 - c.m2;
    p.d1_star = static_cast<long>(c.n1) * mp - static_cast<long>(c.n2) * c.n2;
    p.d2_star = static_cast<long>(c.n2) * c.n2;
    const Rat height = Rat(c.n1 + c.n2) - threshold_m(c);
    const long fl = static_cast<long>(rat_num(height) / rat_den(height));
    const long extra = p.d1_star - fl * p.t1;  // slots that take the ceiling
    p.m.assign(p.t1, static_cast<int>(fl));
    for (long i = 0; i < extra; ++i) p.m[static_cast<std::size_t>(i)] = static_cast<int>(fl) + 1;
    p.n.resize(p.t1);
    for (int t = 0; t < p.t1; ++t) p.n[t] = c.n1 + c.n2 - p.m[t];
  } else if (corner == CornerLabel::P14) {
    const int mp = c.n1 + c.n2 - c.m2;
    const int m2pp = c.n1 + c.n2 - c.m1;
    p.T = mp + c.n2 - c.m1;
    p.t1 = mp - c.n1;
    p.d1_star = static_cast<long>(c.m1) * (mp - c.n1);
    p.d2_star = static_cast<long>(c.n2) * m2pp;
    p.m.assign(p.t1, c.m1);
    p.n.assign(p.t1, m2pp);
  }
  return p;
}

std::optional<PartitionInstance> partition_instance(const AntennaConfig& c, CornerLabel corner) {
  const CaseLabel label = classify_case(c);
  const auto corners = corner_points(c);
  if (!corners.count(corner))
    throw CornerUndefinedForCase("corner " + corner_name(corner) + " undefined for case " +
                                 case_name(label) + " at " + config_str(c));
  switch (corner) {
    case CornerLabel::Po21: {
      PartitionInstance inst = po2x_instance(c, c.m1);
      if (inst.elements.empty()) return std::nullopt;
      return inst;
    }
    case CornerLabel::Po23:
      return po23_instance(c);
    case CornerLabel::Po24:
      return po2x_instance(c, c.n1 + c.n2 - c.m2);
    case CornerLabel::P13:
      if (label == CaseLabel::AII2) return std::nullopt;  // plain relay, no caps
      return generic_instance(c, ia_params_for(c, corner));
    case CornerLabel::P34:
    case CornerLabel::P14:
      return generic_instance(c, ia_params_for(c, corner));
    default:
      return std::nullopt;  // the three-phase scheme chunks evenly, no caps
  }
}

SchemeSpec build_corner_scheme(const AntennaConfig& c, CornerLabel corner) {
  const CaseLabel label = classify_case(c);
  const auto corners = corner_points(c);
  const auto it = corners.find(corner);
  if (it == corners.end())
    throw CornerUndefinedForCase("corner " + corner_name(corner) + " undefined for case " +
                                 case_name(label) + " at " + config_str(c));

  SchemeSpec s;
  switch (label) {
    case CaseLabel::AI3:
      s = three_phase_p12(c);
      break;
    case CaseLabel::AII2:
      s = two_phase_p13(c);
      break;
    case CaseLabel::BI:
      s = relay_po2x(c, c.m1);
      break;
    case CaseLabel::BII1:
      s = relay_po23(c);
      break;
    case CaseLabel::BII2:
    case CaseLabel::BIII1:
    case CaseLabel::BIII2: {
      if (corner == CornerLabel::Po21) {
        s = relay_po2x(c, c.m1);
        break;
      }
      if (corner == CornerLabel::Po24) {
        s = relay_po2x(c, c.n1 + c.n2 - c.m2);
        break;
      }
      s = generic_ia_scheme(c, ia_params_for(c, corner), corner);
      break;
    }
    default:
      throw CornerUndefinedForCase("case " + case_name(label) + " needs no scheme");
  }

  s.label = label;
  s.corner = corner;
  s.target = {Rat(Int(s.d1_star), Int(s.T)), Rat(Int(s.d2_star), Int(s.T))};
  if (!(s.target == it->second))
    throw std::logic_error("scheme DoF " + dof_str(s.target) + " does not match corner " +
                           corner_name(corner) + " = " + dof_str(it->second) + " at " +
                           config_str(c));
  return s;
}

namespace {

IMat draw_matrix(Rng& rng, int rows, int cols) {
  IMat h(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int cc = 0; cc < cols; ++cc) h.at(r, cc) = rng.channel_entry();
  return h;
}

IMat materialize(const std::vector<PlanEntry>& entries, int antennas, std::size_t total_cols,
                 std::size_t user2_base, const std::vector<IMat>& stored, int slot) {
  if (static_cast<int>(entries.size()) > antennas)
    throw std::logic_error("slot " + std::to_string(slot) + " uses more entries than antennas");
  IMat a(antennas, total_cols);
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (const auto* f = std::get_if<FreshSymbol>(&entries[i])) {
      const std::size_t col =
          f->id.owner == 1 ? static_cast<std::size_t>(f->id.index) : user2_base + f->id.index;
      a.at(i, col) = 1;
    } else {
      const auto& r = std::get<RetransmitLc>(entries[i]);
      if (r.origin_slot >= slot)
        throw CausalityViolation("slot " + std::to_string(slot) +
                                 " retransmits a row of slot " + std::to_string(r.origin_slot));
      const IMat& st = stored[r.origin_slot];
      if (st.rows() == 0 || r.row >= static_cast<int>(st.rows()))
        throw std::logic_error("retransmit references a row that was never stored");
      for (std::size_t cc = 0; cc < total_cols; ++cc) a.at(i, cc) = st.at(r.row, cc);
    }
  }
  return a;
}

// Extra user-1 symbols ride on the first slot: each takes an idle antenna
// when one exists, otherwise it is superimposed on all active antennas with
// random nonzero weights. Either way the transmit strategy stays admissible.
void apply_inflation(IMat& a1, long d1_star, int inflate, Rng& rng) {
  for (int e = 0; e < inflate; ++e) {
    const std::size_t col = static_cast<std::size_t>(d1_star) + e;
    bool placed = false;
    for (std::size_t r = 0; r < a1.rows() && !placed; ++r) {
      if (a1.row_is_zero(r)) {
        a1.at(r, col) = 1;
        placed = true;
      }
    }
    if (!placed)
      for (std::size_t r = 0; r < a1.rows(); ++r) a1.at(r, col) = rng.nonzero_entry();
  }
}

}  // namespace

bool decodable(const IMat& g, const std::vector<std::size_t>& desired_cols) {
  const std::size_t full = rank(g);
  return full == rank(g.without_columns(desired_cols)) + desired_cols.size();
}

SimulationResult simulate_scheme(const SchemeSpec& scheme, std::uint64_t seed, int trials,
                                 std::uint64_t stream_base) {
  const auto& c = scheme.config;
  const std::size_t user2_base = static_cast<std::size_t>(scheme.d1_star) + scheme.inflate_d1;
  const std::size_t total_cols = user2_base + scheme.d2_star;

  std::vector<std::size_t> desired1(user2_base), desired2(scheme.d2_star);
  for (std::size_t i = 0; i < desired1.size(); ++i) desired1[i] = i;
  for (std::size_t i = 0; i < desired2.size(); ++i) desired2[i] = user2_base + i;

  SimulationResult out;
  out.d1_star = scheme.d1_star;
  out.d2_star = scheme.d2_star;
  out.T = scheme.T;
  out.dof = {Rat(Int(scheme.d1_star + scheme.inflate_d1), Int(scheme.T)),
             Rat(Int(scheme.d2_star), Int(scheme.T))};
  out.trials = trials;

  for (int trial = 0; trial < trials; ++trial) {
    Rng rng(seed, stream_base + trial);
    std::vector<IMat> stored(scheme.T);
    IMat g1(0, total_cols), g2(0, total_cols);
    for (int t = 0; t < scheme.T; ++t) {
      const IMat h11 = draw_matrix(rng, c.n1, c.m1);
      const IMat h12 = draw_matrix(rng, c.n1, c.m2);
      const IMat h21 = draw_matrix(rng, c.n2, c.m1);
      const IMat h22 = draw_matrix(rng, c.n2, c.m2);
      IMat a1 = materialize(scheme.slots[t].tx1, c.m1, total_cols, user2_base, stored, t);
      const IMat a2 = materialize(scheme.slots[t].tx2, c.m2, total_cols, user2_base, stored, t);
      if (t == 0 && scheme.inflate_d1 > 0) apply_inflation(a1, scheme.d1_star, scheme.inflate_d1, rng);
      g1.append_rows(add(mul(h11, a1), mul(h12, a2)));
      g2.append_rows(add(mul(h21, a1), mul(h22, a2)));
      switch (scheme.slots[t].store) {
        case StoreKind::None:
          break;
        case StoreKind::CrossAtR2:
          stored[t] = mul(h21, a1);
          break;
        case StoreKind::CrossAtR1:
          stored[t] = mul(h12, a2);
          break;
        case StoreKind::EliminatedCrossAtR2:
          stored[t] = mul(elimination_transform(h22, scheme.slots[t].elim_keep), mul(h21, a1));
          break;
      }
    }

    TrialResult tr;
    tr.stream = stream_base + trial;
    tr.rank1 = rank(g1);
    tr.rank1_nuisance = rank(g1.without_columns(desired1));
    tr.rank2 = rank(g2);
    tr.rank2_nuisance = rank(g2.without_columns(desired2));
    tr.r1_ok = tr.rank1 == tr.rank1_nuisance + desired1.size();
    tr.r2_ok = tr.rank2 == tr.rank2_nuisance + desired2.size();
    tr.pass = tr.r1_ok && tr.r2_ok;
    if (tr.pass) ++out.passed;
    if (trial == 0) {
      out.g1_first = g1;
      out.g2_first = g2;
    }
    out.per_trial.push_back(std::move(tr));
  }
  return out;
}

VerifyReport verify_region(const AntennaConfig& c, int trials, std::uint64_t seed) {
  VerifyReport rep;
  rep.config = c;
  rep.label = classify_case(c);
  const DofRegion delayed = delayed_region(c);
  const auto corner_list = corners_for_case(rep.label);

  if (corner_list.empty()) {
    rep.via_formula = true;
    rep.passed = relation(no_csi_region(c), delayed) == RegionRelation::Equal;
    if (!rep.passed)
      rep.failure = "no-CSI region does not reproduce the delayed region at " + config_str(c);
    return rep;
  }

  const auto points = corner_points(c);
  std::vector<DofPoint> hull_pts{{0, 0},
                                 {std::min(c.m1, c.n1), 0},
                                 {0, std::min(c.m2, c.n2)}};
  bool all_pass = true;
  for (std::size_t idx = 0; idx < corner_list.size(); ++idx) {
    const CornerLabel corner = corner_list[idx];
    const SchemeSpec scheme = build_corner_scheme(c, corner);
    const SimulationResult sim = simulate_scheme(scheme, seed, trials, idx * 7919);
    rep.corners.push_back({corner, points.at(corner), sim.passed, sim.trials});
    if (sim.passed != sim.trials) {
      all_pass = false;
      if (rep.failure.empty())
        rep.failure = "corner " + corner_name(corner) + " decoded in " +
                      std::to_string(sim.passed) + "/" + std::to_string(sim.trials) +
                      " trials at " + config_str(c);
    }
    hull_pts.push_back(points.at(corner));
  }
  if (!all_pass) return rep;

  const auto hull = convex_hull(hull_pts);
  rep.passed = hull == delayed.vertices;
  if (!rep.passed)
    rep.failure = "hull of achievable corners does not match the outer region at " + config_str(c);
  return rep;
}

}  // namespace dofic

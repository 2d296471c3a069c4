#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "dofic/classify.hpp"
#include "dofic/linalg.hpp"

namespace dofic {

struct SymbolId {
  int owner = 1;  // 1 or 2
  int index = 0;  // into that user's fresh-symbol pool
};

struct FreshSymbol {
  SymbolId id;
};

/// Reference to one stored interference linear combination: the coefficient
/// row `row` recorded at `origin_slot`. Rows are functions of that slot's
/// channels only, so retransmitting them later respects delayed CSI.
struct RetransmitLc {
  int origin_slot = 0;
  int row = 0;
};

using PlanEntry = std::variant<FreshSymbol, RetransmitLc>;

/// What to record after a slot has been transmitted:
///  - CrossAtR2: rows of H21 * A1 (interference seen by receiver 2)
///  - CrossAtR1: rows of H12 * A2
///  - EliminatedCrossAtR2: like CrossAtR2 but premultiplied by an invertible
///    integer transform that zeroes H22's first elim_keep columns below row
///    elim_keep, so rows past elim_keep are observations receiver 2 already
///    has interference-free.
enum class StoreKind { None, CrossAtR2, CrossAtR1, EliminatedCrossAtR2 };

struct SlotPlan {
  std::vector<PlanEntry> tx1, tx2;  // antenna k carries entry k; the rest are silent
  StoreKind store = StoreKind::None;
  int elim_keep = 0;
};

struct SchemeSpec {
  AntennaConfig config;  // canonical
  CaseLabel label = CaseLabel::Case0;
  CornerLabel corner = CornerLabel::P12;
  DofPoint target;  // (d1_star/T, d2_star/T)
  int T = 0, t1 = 0, t2 = 0, t3 = 0;
  long d1_star = 0, d2_star = 0;
  std::vector<SlotPlan> slots;
  std::vector<std::string> transcript;
  /// Negative control: extra user-1 symbols superimposed on the first slot.
  int inflate_d1 = 0;
};

enum class ElementClass { DS, IsR2Unknown, IsR2Known };

struct PartitionElement {
  ElementClass cls = ElementClass::DS;
  int slot = 0;  // -1 for fresh data symbols scheduled in phase two
  int row = 0;
  bool operator==(const PartitionElement&) const = default;
};

struct PartitionCaps {
  int subsets = 1;
  int total_cap = 0;   // per-subset cardinality cap
  int ds_cap = 0;      // per-subset cap on DS elements
  int mixed_cap = 0;   // per-subset cap on DS + IsR2Unknown elements
  bool exact_fill = false;  // every subset must end at exactly total_cap
};

struct Partition {
  std::vector<std::vector<PartitionElement>> subsets;
};

/// Deterministic greedy fill in three passes (DS, then IsR2Unknown, then
/// IsR2Known), each pass placing elements in lexicographic (slot, row) order
/// into the first subset with room. Throws PartitionInfeasible when an
/// element cannot be placed, which signals a violated counting precondition.
Partition partition_symbols(std::vector<PartitionElement> elements, const PartitionCaps& caps);

struct PartitionInstance {
  std::vector<PartitionElement> elements;
  PartitionCaps caps;
};

/// The row-scheduling partition problem the corner scheme solves, when it
/// has one (corners whose relay phase needs no grouping return nullopt).
std::optional<PartitionInstance> partition_instance(const AntennaConfig& c, CornerLabel corner);

struct IaParams {
  int T = 0, t1 = 0;
  long d1_star = 0, d2_star = 0;
  std::vector<int> m, n;  // per phase-one slot
};

/// Parameter recipe used for the generic-scheme corners (P13, P34, P14).
IaParams ia_params_for(const AntennaConfig& c, CornerLabel corner);

/// The two-phase scheme parameterized as {(T,t1,t2), d*, m_t, n_t}: phase one
/// sends m_t + n_t fresh symbols per slot, phase two schedules the partition
/// subsets with transmitter 1 carrying interference rows and transmitter 2
/// fresh symbols, one antenna each. Validates the parameter constraints and
/// the three counting inequalities; throws InfeasibleParameters naming the
/// violated one.
SchemeSpec generic_ia_scheme(const AntennaConfig& c, const IaParams& params, CornerLabel corner);

/// Slot-by-slot plan achieving the given corner of the config's case.
/// Throws CornerUndefinedForCase for corners outside the case.
SchemeSpec build_corner_scheme(const AntennaConfig& c, CornerLabel corner);

/// True iff the desired columns of g are identifiable: rank(g) equals
/// rank(g without those columns) plus their count. Exact.
bool decodable(const IMat& g, const std::vector<std::size_t>& desired_cols);

struct TrialResult {
  std::uint64_t stream = 0;
  std::size_t rank1 = 0, rank1_nuisance = 0, rank2 = 0, rank2_nuisance = 0;
  bool r1_ok = false, r2_ok = false, pass = false;
};

struct SimulationResult {
  DofPoint dof;  // attempted per-slot DoF pair, inflation included
  long d1_star = 0, d2_star = 0;
  int T = 0;
  int trials = 0, passed = 0;
  std::vector<TrialResult> per_trial;
  IMat g1_first, g2_first;  // observation matrices of the first trial
};

/// Runs `trials` independent seeded trials. Per trial: draws integer channel
/// matrices, materializes the per-slot precoders (a retransmit entry may only
/// reference strictly earlier slots; otherwise CausalityViolation), stacks
/// both receivers' observations and applies the exact rank test.
SimulationResult simulate_scheme(const SchemeSpec& scheme, std::uint64_t seed, int trials,
                                 std::uint64_t stream_base = 0);

struct CornerVerdict {
  CornerLabel corner = CornerLabel::P12;
  DofPoint point;
  int passed = 0, trials = 0;
};

struct VerifyReport {
  AntennaConfig config;
  CaseLabel label = CaseLabel::Case0;
  bool via_formula = false;
  bool passed = false;
  std::vector<CornerVerdict> corners;
  std::string failure;  // empty when passed
};

/// Simulates every corner of the config's case and checks that the convex
/// hull of {origin, the two single-user axis points, the corners} equals the
/// delayed-CSI region exactly. Cases whose region already coincides with the
/// no-CSI region are verified at the formula level without simulation.
/// Pre: canonical config.
VerifyReport verify_region(const AntennaConfig& c, int trials, std::uint64_t seed);

}  // namespace dofic

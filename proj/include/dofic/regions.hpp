#pragma once

#include "dofic/config.hpp"
#include "dofic/polytope.hpp"

namespace dofic {

/// The antenna-count chain activating the extra weighted bound for user i
/// (L4 for i = 1, L5 for i = 2). Evaluated left to right with early exit;
/// the final fractional link only runs once n_i > n_j > m_j guarantees a
/// positive denominator. Pre: canonical config.
bool condition_holds(int user, const AntennaConfig& c);

/// One labeled half-plane of the delayed-CSI outer region, coefficients
/// evaluated exactly. Throws ConditionNotSatisfied for L4/L5 when the
/// corresponding condition fails. Pre: canonical config.
HalfPlaneBound bound(BoundLabel label, const AntennaConfig& c);

/// Intersection of Lo1, Lo2, L1, L2, L3 plus L4/L5 when their conditions
/// hold. Pre: canonical config.
DofRegion delayed_region(const AntennaConfig& c);

/// Lo1, Lo2, L3 only. Pre: canonical config.
DofRegion perfect_region(const AntennaConfig& c);

/// Single-user bounds plus the weighted bound
///   d1/min(M1,N1) + d2/min(M1,N2) <= min(N2,M1+M2)/min(M1,N2),
/// implemented exactly as printed. For configs where this formula coincides
/// with the delayed bound L1 even though the regimes are claimed to differ
/// (N1 >= M1 > N2 > M2 with N1 > N2), the region carries the
/// printed_formula_suspect flag. Pre: canonical config.
DofRegion no_csi_region(const AntennaConfig& c);

/// Canonicalizes internally, dispatches (both delayed-at-transmitters and
/// delayed-cross-only map to the delayed region) and mirrors the result back
/// to the caller's user ordering.
DofRegion region_for(const AntennaConfig& c, CsiRegime regime);

}  // namespace dofic

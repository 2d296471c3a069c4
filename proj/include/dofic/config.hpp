#pragma once

#include <string>

#include "dofic/errors.hpp"

namespace dofic {

/// Antenna counts: m1, m2 at the transmitters, n1, n2 at the receivers.
struct AntennaConfig {
  int m1 = 1, m2 = 1, n1 = 1, n2 = 1;
  bool operator==(const AntennaConfig&) const = default;
};

enum class CsiRegime { NoCsi, Delayed, DelayedAtTransmitters, DelayedCrossOnly, Perfect };

/// Throws NonPositiveAntennaCount unless all four counts are >= 1.
AntennaConfig validate(int m1, int m2, int n1, int n2);

struct CanonicalConfig {
  AntennaConfig config;  // n1 >= n2
  bool swapped = false;  // true iff user indices 1 and 2 were exchanged
};

/// Reorder the two users so that n1 >= n2; a tie keeps the input order.
/// Involution: canonicalizing a canonical config changes nothing.
CanonicalConfig canonicalize(const AntennaConfig& c);

std::string regime_name(CsiRegime r);

/// Accepts "no", "delayed", "delayed-tx", "delayed-cross", "perfect".
CsiRegime parse_regime(const std::string& s);

std::string config_str(const AntennaConfig& c);

}  // namespace dofic

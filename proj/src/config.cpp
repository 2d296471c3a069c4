#include "dofic/config.hpp"

namespace dofic {

AntennaConfig validate(int m1, int m2, int n1, int n2) {
  if (m1 < 1 || m2 < 1 || n1 < 1 || n2 < 1)
    throw NonPositiveAntennaCount("antenna counts must all be >= 1, got " +
                                  config_str({m1, m2, n1, n2}));
  return {m1, m2, n1, n2};
}

CanonicalConfig canonicalize(const AntennaConfig& c) {
  if (c.n1 >= c.n2) return {c, false};
  return {{c.m2, c.m1, c.n2, c.n1}, true};
}

std::string regime_name(CsiRegime r) {
  switch (r) {
    case CsiRegime::NoCsi: return "no";
    case CsiRegime::Delayed: return "delayed";
    case CsiRegime::DelayedAtTransmitters: return "delayed-tx";
    case CsiRegime::DelayedCrossOnly: return "delayed-cross";
    case CsiRegime::Perfect: return "perfect";
  }
  return "?";
}

CsiRegime parse_regime(const std::string& s) {
  if (s == "no") return CsiRegime::NoCsi;
  if (s == "delayed") return CsiRegime::Delayed;
  if (s == "delayed-tx") return CsiRegime::DelayedAtTransmitters;
  if (s == "delayed-cross") return CsiRegime::DelayedCrossOnly;
  if (s == "perfect") return CsiRegime::Perfect;
  throw std::invalid_argument("unknown CSI regime: " + s);
}

std::string config_str(const AntennaConfig& c) {
  return "(" + std::to_string(c.m1) + "," + std::to_string(c.m2) + "," + std::to_string(c.n1) +
         "," + std::to_string(c.n2) + ")";
}

}  // namespace dofic

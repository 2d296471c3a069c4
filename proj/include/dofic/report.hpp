#pragma once

#include <cstdint>
#include <string>

#include "json.hpp"

#include "dofic/schemes.hpp"

namespace dofic {

using Json = nlohmann::json;

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// All reports serialize rationals as exact "p/q" strings (plain "p" for
/// integers) and present vertices and corner coordinates in the caller's
/// user ordering; case and bound labels refer to the canonical ordering
/// (n1 >= n2), flagged by canonical.swapped.

Json region_report(const AntennaConfig& raw, CsiRegime regime);

Json classify_report(const AntennaConfig& raw);

/// corner_sel is a corner name or "all" (every corner of the config's case).
Json simulate_report(const AntennaConfig& raw, const std::string& corner_sel, int trials,
                     std::uint64_t seed, int inflate_d1 = 0);

Json verify_report_json(const AntennaConfig& raw, int trials, std::uint64_t seed);

struct SweepOptions {
  int max_antennas = 4;
  std::string check = "taxonomy";  // taxonomy | equality | chain
  int trials = 5;
  std::uint64_t seed = 1;
  unsigned threads = 0;  // 0 = hardware concurrency
};

Json sweep_report(const SweepOptions& opts);

/// Writes one vertex CSV per regime (no_csi.csv, delayed.csv, perfect.csv;
/// header "d1,d2", exact decimal expansion) plus a bounds.json sidecar into
/// out_dir. Throws IoError when the directory or a file cannot be written.
Json plotdata_write(const AntennaConfig& raw, const std::string& out_dir);

std::string render_table(const Json& report);
std::string render_csv(const Json& report);

}  // namespace dofic

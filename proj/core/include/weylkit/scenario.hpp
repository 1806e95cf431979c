#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "weylkit/galois.hpp"

namespace weylkit::scenario {

/// Seed used when a scenario needs randomness and none was given.
inline constexpr std::uint64_t kDefaultSeed = 1729;

/// One named check inside a report. `method` records how the claim was
/// recomputed; `detail` is a human-readable elaboration.
struct Verdict {
  std::string name;
  bool pass = false;
  std::string method;
  std::string detail;
};

/// One pinned homomorphism, summarized for reports.
struct HomSummary {
  std::vector<std::string> generator_images;  // cycle strings
  std::vector<std::string> kernel;            // cycle strings
  bool injective = false;
  std::string label;
};

/// Scenario result. Serializations share the same top-level shape:
/// scenario, params, counts, lattice, verdicts, timing_ms.
struct Report {
  std::string scenario;
  std::vector<std::pair<std::string, std::string>> params;
  std::vector<std::pair<std::string, long long>> counts;
  std::optional<galois::ClosedLattice> lattice;
  std::vector<Verdict> verdicts;
  std::vector<HomSummary> homs;  // obstruction scenario only
  std::optional<long long> timing_ms;

  bool all_pass() const;
  std::string to_json() const;
  /// Two Hasse diagrams side by side, pairing edges dashed. Lattice
  /// scenarios only (UnsupportedError otherwise).
  std::string to_dot() const;
  std::string to_text() const;
  std::string render(const std::string& format) const;
};

/// "S<n>" for a symmetric group, "Z2^<r>" for a product of involutions.
coxeter::CoxeterGroup parse_group_spec(const std::string& spec);

/// Flag building over F_q^n: counts, diagonal orbits, the closed lattice and
/// its comparison with the Boolean cube of partial-flag quotients.
Report run_flag_building(int n, int q, bool with_timing = false);

/// Two-factor product model: closed lattice, factor projections, and the
/// closure of the distinguished flip.
Report run_product(int m1, int m2, bool with_timing = false);

/// Enumerates homomorphisms pinned by flip -> flip between two group specs
/// and reports kernels and the injectivity obstruction.
Report run_obstruction(const std::string& source_spec,
                       const std::string& target_spec, bool with_timing = false);

/// Checks a chamber self-map of the flag building: opposition preservation,
/// Weyl equivariance, face-map descent. map_spec is "identity",
/// "matrix:<n*n comma-separated entries>", "random:<seed>" or "random".
Report run_embed_check(int n, int q, const std::string& map_spec,
                       std::uint64_t seed = kDefaultSeed, bool with_timing = false);

}  // namespace weylkit::scenario

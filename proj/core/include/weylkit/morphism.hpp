#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "weylkit/building.hpp"

namespace weylkit::morphism {

/// Map between the chamber sets of two flag buildings of the same rank,
/// tabulated on canonical chamber indices. The fields q may differ; the
/// checks below only require a shared Weyl group.
struct ChamberMap {
  int source_n = 0;
  int source_q = 2;
  int target_n = 0;
  int target_q = 2;
  std::vector<int> image;
};

ChamberMap identity_map(int n, int q);
/// Chamber map induced by an invertible matrix on the same building.
ChamberMap matrix_map(int n, int q, const modq::Mat& g);
/// Uniformly random chamber permutation (Fisher-Yates over a seeded
/// mt19937_64, so a seed pins the map exactly).
ChamberMap random_chamber_map(int n, int q, std::uint64_t seed);

/// First witness against a check, for reporting.
struct Violation {
  std::string check;
  int pair_first = -1;
  int pair_second = -1;
  std::optional<coxeter::Perm> weyl;
  std::string describe() const;
};

/// Per-type quotient maps induced on partial flags, one entry per subset of
/// {1..n-1} in bitmask order.
struct FaceMaps {
  struct Entry {
    std::vector<int> types;
    galois::Partition source_blocks;
    galois::Partition target_blocks;
    std::vector<int> block_image;
  };
  std::vector<Entry> entries;
};

/// Precomputes both buildings once so a batch of maps can be checked cheaply.
class Checker {
public:
  Checker(int n, int q);
  Checker(int source_n, int source_q, int target_n, int target_q);

  const std::vector<building::Chamber>& source_chambers() const {
    return source_chambers_;
  }
  const std::vector<building::Chamber>& target_chambers() const {
    return target_chambers_;
  }
  std::size_t source_opposite_pairs() const {
    return source_action_.domain().size();
  }

  /// Scans every opposite source pair; nullopt means the map preserves
  /// opposition.
  std::optional<Violation> opposition_violation(const ChamberMap& map) const;
  /// Requires opposition preservation (PreconditionError otherwise); scans
  /// every Weyl element against every opposite source pair.
  std::optional<Violation> equivariance_violation(const ChamberMap& map) const;
  /// Face maps for every type subset; StructuralError naming the violating
  /// chamber pair if the map does not descend, and incidence between
  /// consecutive types is re-verified.
  FaceMaps face_maps(const ChamberMap& map) const;

private:
  void check_map(const ChamberMap& map) const;

  int n_, source_q_, target_q_;
  std::vector<building::Chamber> source_chambers_;
  std::vector<building::Chamber> target_chambers_;
  galois::PairAction source_action_;
  galois::PairAction target_action_;
  std::vector<std::vector<int>> target_pair_index_;  // -1 for non-opposite
};

bool check_opposition_preserving(const ChamberMap& map);
bool check_w_equivariance(const ChamberMap& map);
FaceMaps induced_face_maps(const ChamberMap& map);

}  // namespace weylkit::morphism

#include "weylkit/morphism.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <sstream>

namespace weylkit::morphism {

ChamberMap identity_map(int n, int q) {
  ChamberMap map{n, q, n, q, {}};
  int count = static_cast<int>(building::enumerate_chambers(n, q).size());
  map.image.resize(count);
  for (int i = 0; i < count; ++i) map.image[i] = i;
  return map;
}

ChamberMap matrix_map(int n, int q, const modq::Mat& g) {
  if (static_cast<int>(g.size()) != n || !modq::is_invertible(g, q)) {
    throw DomainError("matrix_map: matrix must be invertible and n x n");
  }
  auto chambers = building::enumerate_chambers(n, q);
  ChamberMap map{n, q, n, q, {}};
  map.image.reserve(chambers.size());
  for (const auto& c : chambers) {
    map.image.push_back(building::chamber_index(chambers, building::transform(c, g)));
  }
  return map;
}

ChamberMap random_chamber_map(int n, int q, std::uint64_t seed) {
  ChamberMap map = identity_map(n, q);
  std::mt19937_64 rng(seed);
  for (int i = static_cast<int>(map.image.size()) - 1; i > 0; --i) {
    int j = static_cast<int>(rng() % static_cast<std::uint64_t>(i + 1));
    std::swap(map.image[i], map.image[j]);
  }
  return map;
}

std::string Violation::describe() const {
  std::ostringstream out;
  out << check << " fails at source pair (" << pair_first << ", " << pair_second
      << ")";
  if (weyl) out << " under " << coxeter::cycle_string(*weyl);
  return out.str();
}

Checker::Checker(int n, int q) : Checker(n, q, n, q) {}

Checker::Checker(int source_n, int source_q, int target_n, int target_q)
    : n_(source_n),
      source_q_(source_q),
      target_q_(target_q),
      source_chambers_(building::enumerate_chambers(source_n, source_q)),
      target_chambers_(building::enumerate_chambers(target_n, target_q)),
      source_action_(building::opposite_pair_action(source_n, source_q)),
      target_action_(building::opposite_pair_action(target_n, target_q)) {
  if (source_n != target_n) {
    throw DomainError("chamber map checks need equal ranks (shared Weyl group)");
  }
  int m = static_cast<int>(target_chambers_.size());
  target_pair_index_.assign(m, std::vector<int>(m, -1));
  const auto& dom = target_action_.domain();
  for (size_t d = 0; d < dom.size(); ++d) {
    target_pair_index_[dom[d].first][dom[d].second] = static_cast<int>(d);
  }
}

void Checker::check_map(const ChamberMap& map) const {
  if (map.source_n != n_ || map.target_n != n_ || map.source_q != source_q_ ||
      map.target_q != target_q_) {
    throw DomainError("chamber map parameters disagree with this checker");
  }
  if (map.image.size() != source_chambers_.size()) {
    throw DomainError("chamber map image has wrong length");
  }
  for (int v : map.image) {
    if (v < 0 || v >= static_cast<int>(target_chambers_.size())) {
      throw DomainError("chamber map image index out of range");
    }
  }
}

std::optional<Violation> Checker::opposition_violation(const ChamberMap& map) const {
  check_map(map);
  for (const auto& [x, y] : source_action_.domain()) {
    if (target_pair_index_[map.image[x]][map.image[y]] == -1) {
      return Violation{"opposition preservation", x, y, std::nullopt};
    }
  }
  return std::nullopt;
}

std::optional<Violation> Checker::equivariance_violation(const ChamberMap& map) const {
  if (opposition_violation(map)) {
    throw PreconditionError(
        "equivariance check requires an opposition-preserving map");
  }
  const auto& dom = source_action_.domain();
  const auto& group = source_action_.group();
  for (int e = 0; e < group.order(); ++e) {
    for (size_t d = 0; d < dom.size(); ++d) {
      int moved = source_action_.apply(e, static_cast<int>(d));
      auto [mx, my] = dom[moved];
      int lhs = target_pair_index_[map.image[mx]][map.image[my]];
      int target_pair = target_pair_index_[map.image[dom[d].first]][map.image[dom[d].second]];
      int rhs = target_action_.apply(e, target_pair);
      if (lhs != rhs) {
        return Violation{"Weyl equivariance", dom[d].first, dom[d].second,
                         group.elements[e]};
      }
    }
  }
  return std::nullopt;
}

FaceMaps Checker::face_maps(const ChamberMap& map) const {
  check_map(map);
  FaceMaps out;
  int r = n_ - 1;
  for (int mask = 0; mask < (1 << r); ++mask) {
    std::vector<int> types;
    for (int t = 1; t <= r; ++t) {
      if (mask & (1 << (t - 1))) types.push_back(t);
    }
    galois::Partition src = building::partial_flag_quotient(n_, source_q_, types);
    galois::Partition tgt = building::partial_flag_quotient(n_, target_q_, types);
    std::vector<int> block_image(src.block_count(), -1);
    std::vector<int> witness(src.block_count(), -1);
    for (int c = 0; c < src.size(); ++c) {
      int sb = src.block_of(c);
      int tb = tgt.block_of(map.image[c]);
      if (block_image[sb] == -1) {
        block_image[sb] = tb;
        witness[sb] = c;
      } else if (block_image[sb] != tb) {
        std::ostringstream msg;
        msg << "map does not descend to type {";
        for (size_t i = 0; i < types.size(); ++i) {
          msg << (i ? "," : "") << types[i];
        }
        msg << "}: chambers " << witness[sb] << " and " << c
            << " share a partial flag but their images do not";
        throw StructuralError(msg.str());
      }
    }
    out.entries.push_back(FaceMaps::Entry{std::move(types), std::move(src),
                                          std::move(tgt), std::move(block_image)});
  }

  // incidence between consecutive single types: blocks meeting in a chamber
  // must have images meeting in a chamber
  for (int t = 1; t + 1 <= r; ++t) {
    const auto& low = out.entries[1 << (t - 1)];
    const auto& high = out.entries[1 << t];
    std::set<std::pair<int, int>> target_incident;
    for (int c = 0; c < static_cast<int>(target_chambers_.size()); ++c) {
      target_incident.emplace(low.target_blocks.block_of(c),
                              high.target_blocks.block_of(c));
    }
    for (int c = 0; c < static_cast<int>(source_chambers_.size()); ++c) {
      int b1 = low.block_image[low.source_blocks.block_of(c)];
      int b2 = high.block_image[high.source_blocks.block_of(c)];
      if (!target_incident.count({b1, b2})) {
        std::ostringstream msg;
        msg << "face maps break incidence between types " << t << " and "
            << (t + 1) << " at chamber " << c;
        throw StructuralError(msg.str());
      }
    }
  }
  return out;
}

bool check_opposition_preserving(const ChamberMap& map) {
  Checker checker(map.source_n, map.source_q, map.target_n, map.target_q);
  return !checker.opposition_violation(map).has_value();
}

bool check_w_equivariance(const ChamberMap& map) {
  Checker checker(map.source_n, map.source_q, map.target_n, map.target_q);
  return !checker.equivariance_violation(map).has_value();
}

FaceMaps induced_face_maps(const ChamberMap& map) {
  Checker checker(map.source_n, map.source_q, map.target_n, map.target_q);
  if (checker.opposition_violation(map) || checker.equivariance_violation(map)) {
    throw PreconditionError(
        "face maps require an opposition-preserving equivariant chamber map");
  }
  return checker.face_maps(map);
}

}  // namespace weylkit::morphism

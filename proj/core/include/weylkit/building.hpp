#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "weylkit/coxeter.hpp"
#include "weylkit/galois.hpp"
#include "weylkit/modq.hpp"

namespace weylkit::building {

/// Row space in F_q^n held in reduced echelon form, so equal subspaces are
/// structurally equal and ordering is lexicographic on the echelon matrix.
class Subspace {
public:
  Subspace() = default;
  Subspace(int ambient, int q, modq::Mat spanning);

  int ambient() const { return ambient_; }
  int field() const { return q_; }
  int dim() const { return static_cast<int>(rows_.size()); }
  const modq::Mat& basis() const { return rows_; }
  bool contains(const Subspace& other) const;

  bool operator==(const Subspace&) const = default;
  auto operator<=>(const Subspace&) const = default;

private:
  int ambient_ = 0;
  int q_ = 2;
  modq::Mat rows_;
};

/// Complete flag E_1 < E_2 < ... < E_{n-1} (E_0 and E_n are implicit).
struct Chamber {
  std::vector<Subspace> steps;

  bool operator==(const Chamber&) const = default;
  auto operator<=>(const Chamber&) const = default;
};

/// Ordered tuple of n independent lines.
struct Frame {
  std::vector<Subspace> lines;

  bool operator==(const Frame&) const = default;
  auto operator<=>(const Frame&) const = default;
};

/// All complete flags of F_q^n in canonical (sorted) order.
/// Caps: 1 <= n <= 4, q prime, q <= 5.
std::vector<Chamber> enumerate_chambers(int n, int q);
std::vector<Subspace> enumerate_lines(int n, int q);
std::vector<Frame> enumerate_frames(int n, int q);
unsigned long long gaussian_flag_count(int n, int q);

/// The permutation w with dim(E_i ∩ F_j) = #{k <= j : w(k) <= i}; identity
/// for equal chambers, the order-reversing permutation for opposite ones.
coxeter::Perm relative_position(const Chamber& e, const Chamber& f);
bool is_opposite(const Chamber& e, const Chamber& f);

/// The unique frame with lines l_i = E_i ∩ F_{n+1-i}; requires opposite input.
Frame frame_of(const Chamber& e, const Chamber& f);
/// (E, F) with E_i = l_1 + ... + l_i and F_i = l_n + ... + l_{n+1-i}.
std::pair<Chamber, Chamber> big_cell_map(const Frame& frame);
/// Left Weyl action through the frame coordinates: l'_i = l_{w^-1(i)}.
std::pair<Chamber, Chamber> weyl_action(const coxeter::Perm& w,
                                        const std::pair<Chamber, Chamber>& pair);

/// S_n acting on all opposite chamber pairs of the flag building.
galois::PairAction opposite_pair_action(int n, int q);

/// Partition of the chamber list by the partial flag (E_j)_{j in types};
/// types is a subset of {1..n-1}, the empty set giving one block.
galois::Partition partial_flag_quotient(int n, int q, const std::vector<int>& types);

/// Orbits of the diagonal GL_n(F_q) action on Chamber x Chamber; cross-checked
/// against the number of distinct relative positions attained.
long long diagonal_orbit_count(int n, int q);

/// Chamber image under an invertible matrix (rows transform by v -> v * g).
Chamber transform(const Chamber& c, const modq::Mat& g);

/// Index into a sorted chamber list; DomainError if absent.
int chamber_index(const std::vector<Chamber>& sorted_chambers, const Chamber& c);

}  // namespace weylkit::building

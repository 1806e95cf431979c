#pragma once

#include <memory>
#include <utility>
#include <vector>

#include "weylkit/coxeter.hpp"

namespace weylkit::galois {

/// Partition of {0..size-1} with canonical block labels: blocks are numbered
/// by first occurrence, so equal partitions compare equal structurally.
/// Order convention throughout: p1 <= p2 means p1 is COARSER than p2 (the
/// one-block partition is the minimum, the all-singletons partition the
/// maximum).
class Partition {
public:
  Partition() = default;
  explicit Partition(std::vector<int> raw_labels);
  static Partition single_block(int n);
  static Partition discrete(int n);

  int size() const { return static_cast<int>(block_id_.size()); }
  int block_count() const { return block_count_; }
  int block_of(int x) const { return block_id_[x]; }
  const std::vector<int>& block_ids() const { return block_id_; }
  std::vector<std::vector<int>> blocks() const;

  bool operator==(const Partition&) const = default;

private:
  std::vector<int> block_id_;
  int block_count_ = 0;
};

/// True iff `coarser` <= `finer`: every block of `finer` sits inside one
/// block of `coarser`.
bool partition_leq(const Partition& coarser, const Partition& finer);
/// Finest common coarsening (transitive closure of block overlap).
Partition partition_meet(const Partition& a, const Partition& b);
/// Common refinement (pairwise block intersections).
Partition partition_join(const Partition& a, const Partition& b);
/// Canonical report order: block count, then block labels.
bool partition_canonical_less(const Partition& a, const Partition& b);

/// A finite Coxeter group acting on a set of pairs over a ground set:
/// `domain` lists the pairs, `action_table[e][d]` is the domain index of
/// element e applied to pair d. Construction validates that the table is a
/// genuine left action by domain permutations.
class PairAction {
public:
  PairAction(int ground_size, std::vector<std::pair<int, int>> domain,
             std::shared_ptr<const coxeter::CoxeterGroup> group,
             std::vector<std::vector<int>> action_table);

  int ground_size() const { return ground_size_; }
  const std::vector<std::pair<int, int>>& domain() const { return domain_; }
  const coxeter::CoxeterGroup& group() const { return *group_; }
  std::shared_ptr<const coxeter::CoxeterGroup> group_ptr() const { return group_; }
  int apply(int element_idx, int pair_idx) const {
    return action_table_[element_idx][pair_idx];
  }
  int first_of(int pair_idx) const { return domain_[pair_idx].first; }

private:
  int ground_size_ = 0;
  std::vector<std::pair<int, int>> domain_;
  std::shared_ptr<const coxeter::CoxeterGroup> group_;
  std::vector<std::vector<int>> action_table_;
};

/// The two closed sub-lattices of a pair action, with the order-reversing
/// pairing between them. closed_subgroups[i] corresponds to
/// closed_quotients[pairing[i]]. Hasse edges are cover relations inside the
/// closed families: (smaller, larger) for subgroups, (coarser, finer) for
/// quotients.
struct ClosedLattice {
  std::shared_ptr<const coxeter::CoxeterGroup> group;
  std::vector<coxeter::Subgroup> closed_subgroups;
  std::vector<Partition> closed_quotients;
  std::vector<int> pairing;
  std::vector<std::pair<int, int>> subgroup_hasse;
  std::vector<std::pair<int, int>> quotient_hasse;
};

/// W_p = {w : p(first(w d)) == p(first(d)) for every domain pair d}.
coxeter::Subgroup stabilizer_subgroup(const PairAction& a, const Partition& p);
/// p^V: finest partition of the ground set with V <= W_p.
Partition finest_invariant_quotient(const PairAction& a, const coxeter::Subgroup& v);
coxeter::Subgroup close_subgroup(const PairAction& a, const coxeter::Subgroup& v);
Partition close_quotient(const PairAction& a, const Partition& p);
/// The adjunction biconditional: V <= W_p iff p <= p^V.
bool check_adjunction(const PairAction& a, const coxeter::Subgroup& v,
                      const Partition& p);
/// Sweeps every subgroup, collects the closed objects on both sides, and
/// verifies the pairing is an order-reversing bijection.
ClosedLattice enumerate_closed(const PairAction& a);

/// Two-factor product model: ground set B1 x B2, full pair domain, group
/// (Z/2)^2 whose generator i swaps the i-th factor coordinates of a pair.
/// Caps: 2 <= m1, m2 <= 16.
PairAction product_pair_action(int m1, int m2);

}  // namespace weylkit::galois

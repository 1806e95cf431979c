#include "weylkit/galois.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "weylkit/union_find.hpp"

namespace weylkit::galois {

namespace {

constexpr int kMaxProductFactor = 16;
constexpr int kMinProductFactor = 2;
constexpr int kMaxClosedGroupOrder = 1024;

std::vector<int> canonical_labels(const std::vector<int>& raw, int* count_out) {
  std::map<int, int> relabel;
  std::vector<int> ids(raw.size());
  for (size_t i = 0; i < raw.size(); ++i) {
    auto [it, fresh] = relabel.emplace(raw[i], static_cast<int>(relabel.size()));
    ids[i] = it->second;
    (void)fresh;
  }
  *count_out = static_cast<int>(relabel.size());
  return ids;
}

}  // namespace

Partition::Partition(std::vector<int> raw_labels) {
  if (raw_labels.empty()) throw DomainError("partition of an empty set");
  block_id_ = canonical_labels(raw_labels, &block_count_);
}

Partition Partition::single_block(int n) {
  return Partition(std::vector<int>(n, 0));
}

Partition Partition::discrete(int n) {
  std::vector<int> ids(n);
  for (int i = 0; i < n; ++i) ids[i] = i;
  return Partition(std::move(ids));
}

std::vector<std::vector<int>> Partition::blocks() const {
  std::vector<std::vector<int>> out(block_count_);
  for (int i = 0; i < size(); ++i) out[block_id_[i]].push_back(i);
  return out;
}

bool partition_leq(const Partition& coarser, const Partition& finer) {
  if (coarser.size() != finer.size()) {
    throw DomainError("comparing partitions of different ground sets");
  }
  std::vector<int> seen(finer.block_count(), -1);
  for (int x = 0; x < coarser.size(); ++x) {
    int fb = finer.block_of(x);
    if (seen[fb] == -1) {
      seen[fb] = coarser.block_of(x);
    } else if (seen[fb] != coarser.block_of(x)) {
      return false;
    }
  }
  return true;
}

Partition partition_meet(const Partition& a, const Partition& b) {
  if (a.size() != b.size()) {
    throw DomainError("meet of partitions of different ground sets");
  }
  UnionFind uf(a.size());
  std::vector<int> rep_a(a.block_count(), -1);
  std::vector<int> rep_b(b.block_count(), -1);
  for (int x = 0; x < a.size(); ++x) {
    int& ra = rep_a[a.block_of(x)];
    if (ra == -1) ra = x; else uf.unite(ra, x);
    int& rb = rep_b[b.block_of(x)];
    if (rb == -1) rb = x; else uf.unite(rb, x);
  }
  std::vector<int> ids(a.size());
  for (int x = 0; x < a.size(); ++x) ids[x] = uf.find(x);
  return Partition(std::move(ids));
}

Partition partition_join(const Partition& a, const Partition& b) {
  if (a.size() != b.size()) {
    throw DomainError("join of partitions of different ground sets");
  }
  std::vector<int> ids(a.size());
  std::map<std::pair<int, int>, int> relabel;
  for (int x = 0; x < a.size(); ++x) {
    auto key = std::make_pair(a.block_of(x), b.block_of(x));
    auto [it, fresh] = relabel.emplace(key, static_cast<int>(relabel.size()));
    ids[x] = it->second;
    (void)fresh;
  }
  return Partition(std::move(ids));
}

bool partition_canonical_less(const Partition& a, const Partition& b) {
  if (a.block_count() != b.block_count()) {
    return a.block_count() < b.block_count();
  }
  return a.block_ids() < b.block_ids();
}

PairAction::PairAction(int ground_size, std::vector<std::pair<int, int>> domain,
                       std::shared_ptr<const coxeter::CoxeterGroup> group,
                       std::vector<std::vector<int>> action_table)
    : ground_size_(ground_size),
      domain_(std::move(domain)),
      group_(std::move(group)),
      action_table_(std::move(action_table)) {
  if (!group_) throw DomainError("pair action without a group");
  int n = static_cast<int>(domain_.size());
  for (auto [x, y] : domain_) {
    if (x < 0 || x >= ground_size_ || y < 0 || y >= ground_size_) {
      throw DomainError("pair action domain escapes the ground set");
    }
  }
  if (static_cast<int>(action_table_.size()) != group_->order()) {
    throw DomainError("action table has wrong number of rows");
  }
  for (const auto& row : action_table_) {
    if (static_cast<int>(row.size()) != n) {
      throw DomainError("action table row has wrong length");
    }
    std::vector<char> hit(n, 0);
    for (int v : row) {
      if (v < 0 || v >= n || hit[v]) {
        throw DomainError("action table row is not a permutation of the domain");
      }
      hit[v] = 1;
    }
  }
  const auto& id_row = action_table_[group_->identity_index()];
  for (int d = 0; d < n; ++d) {
    if (id_row[d] != d) throw DomainError("identity does not act trivially");
  }
  for (int a = 0; a < group_->order(); ++a) {
    for (int b = 0; b < group_->order(); ++b) {
      int ab = group_->multiply(a, b);
      for (int d = 0; d < n; ++d) {
        if (action_table_[ab][d] != action_table_[a][action_table_[b][d]]) {
          throw DomainError("action table is not a left group action");
        }
      }
    }
  }
}

namespace {

void check_partition_fits(const PairAction& a, const Partition& p, const char* op) {
  if (p.size() != a.ground_size()) {
    throw DomainError(std::string(op) + ": partition size does not match ground set");
  }
}

void check_subgroup_fits(const PairAction& a, const coxeter::Subgroup& v,
                         const char* op) {
  if (!v.parent || !(v.parent == &a.group() || v.parent->same_elements(a.group()))) {
    throw DomainError(std::string(op) + ": subgroup belongs to a different group");
  }
  if (!coxeter::is_subgroup(v)) {
    throw DomainError(std::string(op) + ": member list is not a subgroup");
  }
}

}  // namespace

coxeter::Subgroup stabilizer_subgroup(const PairAction& a, const Partition& p) {
  check_partition_fits(a, p, "stabilizer_subgroup");
  const auto& w = a.group();
  int domain_size = static_cast<int>(a.domain().size());
  std::vector<int> members;
  for (int e = 0; e < w.order(); ++e) {
    bool fixes = true;
    for (int d = 0; d < domain_size && fixes; ++d) {
      fixes = p.block_of(a.first_of(a.apply(e, d))) == p.block_of(a.first_of(d));
    }
    if (fixes) members.push_back(e);
  }
  coxeter::Subgroup out{&a.group(), std::move(members)};
  if (!coxeter::is_subgroup(out)) {
    throw Error("stabilizer_subgroup: collected set is not a subgroup");
  }
  return out;
}

Partition finest_invariant_quotient(const PairAction& a, const coxeter::Subgroup& v) {
  check_subgroup_fits(a, v, "finest_invariant_quotient");
  UnionFind uf(a.ground_size());
  int domain_size = static_cast<int>(a.domain().size());
  for (int e : v.members) {
    for (int d = 0; d < domain_size; ++d) {
      uf.unite(a.first_of(d), a.first_of(a.apply(e, d)));
    }
  }
  std::vector<int> ids(a.ground_size());
  for (int x = 0; x < a.ground_size(); ++x) ids[x] = uf.find(x);
  return Partition(std::move(ids));
}

coxeter::Subgroup close_subgroup(const PairAction& a, const coxeter::Subgroup& v) {
  return stabilizer_subgroup(a, finest_invariant_quotient(a, v));
}

Partition close_quotient(const PairAction& a, const Partition& p) {
  return finest_invariant_quotient(a, stabilizer_subgroup(a, p));
}

bool check_adjunction(const PairAction& a, const coxeter::Subgroup& v,
                      const Partition& p) {
  coxeter::Subgroup w_p = stabilizer_subgroup(a, p);
  bool v_below = std::includes(w_p.members.begin(), w_p.members.end(),
                               v.members.begin(), v.members.end());
  bool p_below = partition_leq(p, finest_invariant_quotient(a, v));
  return v_below == p_below;
}

ClosedLattice enumerate_closed(const PairAction& a) {
  if (a.group().order() > kMaxClosedGroupOrder) {
    throw SizeError("enumerate_closed: group order exceeds cap of 1024");
  }
  auto subgroups = coxeter::enumerate_subgroups(a.group());
  std::set<std::vector<int>> seen;
  std::vector<std::pair<coxeter::Subgroup, Partition>> closed;
  for (const auto& v : subgroups) {
    Partition q = finest_invariant_quotient(a, v);
    coxeter::Subgroup v_bar = stabilizer_subgroup(a, q);
    if (seen.insert(v_bar.members).second) {
      closed.emplace_back(std::move(v_bar), std::move(q));
    }
  }
  std::sort(closed.begin(), closed.end(), [](const auto& x, const auto& y) {
    if (x.first.members.size() != y.first.members.size()) {
      return x.first.members.size() < y.first.members.size();
    }
    return x.first.members < y.first.members;
  });

  ClosedLattice lattice;
  lattice.group = a.group_ptr();
  int k = static_cast<int>(closed.size());
  std::vector<int> quotient_slot(k);
  {
    std::vector<int> order(k);
    for (int i = 0; i < k; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int x, int y) {
      return partition_canonical_less(closed[x].second, closed[y].second);
    });
    lattice.closed_quotients.reserve(k);
    for (int slot = 0; slot < k; ++slot) {
      lattice.closed_quotients.push_back(closed[order[slot]].second);
      quotient_slot[order[slot]] = slot;
    }
  }
  lattice.closed_subgroups.reserve(k);
  lattice.pairing.resize(k);
  for (int i = 0; i < k; ++i) {
    lattice.closed_subgroups.push_back(closed[i].first);
    lattice.pairing[i] = quotient_slot[i];
  }

  auto subgroup_below = [&](int i, int j) {
    const auto& small = lattice.closed_subgroups[i].members;
    const auto& large = lattice.closed_subgroups[j].members;
    return std::includes(large.begin(), large.end(), small.begin(), small.end());
  };
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      bool sub_le = subgroup_below(i, j);
      bool quo_le = partition_leq(lattice.closed_quotients[lattice.pairing[j]],
                                  lattice.closed_quotients[lattice.pairing[i]]);
      if (sub_le != quo_le) {
        throw Error("enumerate_closed: pairing is not order-reversing");
      }
    }
  }

  auto covers = [&](auto leq, int lo, int hi) {
    if (lo == hi || !leq(lo, hi)) return false;
    for (int mid = 0; mid < k; ++mid) {
      if (mid == lo || mid == hi) continue;
      if (leq(lo, mid) && leq(mid, hi)) return false;
    }
    return true;
  };
  auto quotient_leq = [&](int i, int j) {
    return partition_leq(lattice.closed_quotients[i], lattice.closed_quotients[j]);
  };
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      if (covers(subgroup_below, i, j)) lattice.subgroup_hasse.emplace_back(i, j);
      if (covers(quotient_leq, i, j)) lattice.quotient_hasse.emplace_back(i, j);
    }
  }
  return lattice;
}

PairAction product_pair_action(int m1, int m2) {
  if (m1 < kMinProductFactor || m2 < kMinProductFactor) {
    throw DomainError("product_pair_action: degenerate factor (need size >= 2)");
  }
  if (m1 > kMaxProductFactor || m2 > kMaxProductFactor) {
    throw SizeError("product_pair_action: factor exceeds cap of 16");
  }
  int ground = m1 * m2;
  std::vector<std::pair<int, int>> domain;
  domain.reserve(static_cast<size_t>(ground) * ground);
  for (int x = 0; x < ground; ++x) {
    for (int y = 0; y < ground; ++y) domain.emplace_back(x, y);
  }
  auto pair_index = [&](int x, int y) { return x * ground + y; };
  auto group = std::make_shared<const coxeter::CoxeterGroup>(
      coxeter::make_involution_product(2));

  // generator i swaps the i-th coordinates of the two pair components
  auto generator_move = [&](int gen, int x, int y) {
    int x1 = x / m2, x2 = x % m2;
    int y1 = y / m2, y2 = y % m2;
    if (gen == 0) std::swap(x1, y1);
    else std::swap(x2, y2);
    return std::make_pair(x1 * m2 + x2, y1 * m2 + y2);
  };

  auto words = coxeter::generator_words(*group);
  std::vector<std::vector<int>> table(group->order());
  for (int e = 0; e < group->order(); ++e) {
    auto& row = table[e];
    row.resize(domain.size());
    for (size_t d = 0; d < domain.size(); ++d) {
      auto [x, y] = domain[d];
      // words read left to right as "apply last"; acting on a point applies
      // the rightmost letter first
      const auto& word = words[e];
      for (auto it = word.rbegin(); it != word.rend(); ++it) {
        std::tie(x, y) = generator_move(*it, x, y);
      }
      row[d] = pair_index(x, y);
    }
  }
  return PairAction(ground, std::move(domain), std::move(group), std::move(table));
}

}  // namespace weylkit::galois

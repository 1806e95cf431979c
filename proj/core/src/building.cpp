#include "weylkit/building.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <set>

#include "weylkit/union_find.hpp"

namespace weylkit::building {

namespace {

constexpr int kMaxRank = 4;
constexpr int kMaxField = 5;
constexpr long long kMaxOppositePairs = 200'000;
constexpr long long kMaxDiagonalPairs = 1'000'000;

void check_parameters(int n, int q) {
  if (n < 1) throw DomainError("building rank must be >= 1");
  if (!modq::is_prime(q)) throw DomainError("field size must be prime");
  if (n > kMaxRank || q > kMaxField) {
    throw SizeError("building parameters exceed caps (n <= 4, q <= 5)");
  }
}

void check_same_space(const Chamber& e, const Chamber& f) {
  if (e.steps.size() != f.steps.size()) {
    throw DomainError("chambers of different ranks");
  }
  for (size_t i = 0; i < e.steps.size(); ++i) {
    if (e.steps[i].ambient() != f.steps[i].ambient() ||
        e.steps[i].field() != f.steps[i].field()) {
      throw DomainError("chambers in different ambient spaces");
    }
  }
}

}  // namespace

Subspace::Subspace(int ambient, int q, modq::Mat spanning)
    : ambient_(ambient), q_(q), rows_(modq::rref(std::move(spanning), q)) {
  for (const auto& row : rows_) {
    if (static_cast<int>(row.size()) != ambient_) {
      throw DomainError("subspace row length disagrees with ambient dimension");
    }
  }
}

bool Subspace::contains(const Subspace& other) const {
  if (ambient_ != other.ambient_ || q_ != other.q_) {
    throw DomainError("comparing subspaces of different spaces");
  }
  return modq::rank(modq::stack(rows_, other.rows_), q_) == dim();
}

unsigned long long gaussian_flag_count(int n, int q) {
  unsigned long long count = 1;
  unsigned long long power = 1;
  for (int i = 1; i <= n; ++i) {
    power *= q;  // q^i
    count *= (power - 1) / (q - 1);
  }
  return count;
}

std::vector<Chamber> enumerate_chambers(int n, int q) {
  check_parameters(n, q);
  auto vectors = modq::all_vectors(n, q);
  std::vector<Chamber> partial{Chamber{}};
  for (int dim = 1; dim <= n - 1; ++dim) {
    std::vector<Chamber> next;
    for (const Chamber& c : partial) {
      std::set<Subspace> extensions;
      for (const auto& v : vectors) {
        modq::Mat span =
            dim == 1 ? modq::Mat{} : c.steps.back().basis();
        span.push_back(v);
        Subspace grown(n, q, std::move(span));
        if (grown.dim() == dim) extensions.insert(std::move(grown));
      }
      for (const Subspace& s : extensions) {
        Chamber extended = c;
        extended.steps.push_back(s);
        next.push_back(std::move(extended));
      }
    }
    partial = std::move(next);
  }
  std::sort(partial.begin(), partial.end());
  if (partial.size() != gaussian_flag_count(n, q)) {
    throw Error("chamber enumeration disagrees with the Gaussian count");
  }
  return partial;
}

std::vector<Subspace> enumerate_lines(int n, int q) {
  check_parameters(n, q);
  std::set<Subspace> lines;
  for (const auto& v : modq::all_vectors(n, q)) {
    Subspace s(n, q, {v});
    if (s.dim() == 1) lines.insert(std::move(s));
  }
  return {lines.begin(), lines.end()};
}

std::vector<Frame> enumerate_frames(int n, int q) {
  auto lines = enumerate_lines(n, q);
  std::vector<Frame> out;
  std::vector<int> chosen;
  modq::Mat rows;
  auto recurse = [&](auto&& self) -> void {
    if (static_cast<int>(chosen.size()) == n) {
      Frame f;
      for (int idx : chosen) f.lines.push_back(lines[idx]);
      out.push_back(std::move(f));
      return;
    }
    for (int idx = 0; idx < static_cast<int>(lines.size()); ++idx) {
      rows.push_back(lines[idx].basis()[0]);
      if (modq::rank(rows, q) == static_cast<int>(rows.size())) {
        chosen.push_back(idx);
        self(self);
        chosen.pop_back();
      }
      rows.pop_back();
    }
  };
  recurse(recurse);
  return out;
}

namespace {

// dim(E_i ∩ F_j) for 0 <= i, j <= n, with E_0 = 0 and E_n the ambient space
std::vector<std::vector<int>> intersection_dims(const Chamber& e, const Chamber& f,
                                                int n, int q) {
  std::vector<std::vector<int>> d(n + 1, std::vector<int>(n + 1, 0));
  for (int i = 0; i <= n; ++i) d[i][n] = i;
  for (int j = 0; j <= n; ++j) d[n][j] = j;
  for (int i = 1; i < n; ++i) {
    for (int j = 1; j < n; ++j) {
      const auto& ei = e.steps[i - 1].basis();
      const auto& fj = f.steps[j - 1].basis();
      d[i][j] = i + j - modq::rank(modq::stack(ei, fj), q);
    }
  }
  return d;
}

int ambient_rank(const Chamber& e) {
  if (e.steps.empty()) return 1;  // rank-1 building: single empty flag
  return e.steps[0].ambient();
}

}  // namespace

coxeter::Perm relative_position(const Chamber& e, const Chamber& f) {
  check_same_space(e, f);
  int n = ambient_rank(e);
  int q = e.steps.empty() ? 2 : e.steps[0].field();
  auto d = intersection_dims(e, f, n, q);
  std::vector<int> images(n, -1);
  for (int j = 1; j <= n; ++j) {
    for (int i = 1; i <= n; ++i) {
      if (d[i][j] - d[i - 1][j] - d[i][j - 1] + d[i - 1][j - 1] == 1) {
        if (images[j - 1] != -1) {
          throw Error("relative_position: increment matrix is not a permutation");
        }
        images[j - 1] = i - 1;
      }
    }
    if (images[j - 1] == -1) {
      throw Error("relative_position: increment matrix is not a permutation");
    }
  }
  return coxeter::Perm(std::move(images));
}

bool is_opposite(const Chamber& e, const Chamber& f) {
  check_same_space(e, f);
  int n = ambient_rank(e);
  if (n == 1) return true;
  int q = e.steps[0].field();
  for (int i = 1; i < n; ++i) {
    const auto& ei = e.steps[i - 1].basis();
    const auto& fj = f.steps[n - i - 1].basis();
    if (modq::rank(modq::stack(ei, fj), q) != n) return false;  // dim(E_i ∩ F_{n-i}) > 0
  }
  return true;
}

Frame frame_of(const Chamber& e, const Chamber& f) {
  if (!is_opposite(e, f)) {
    throw PreconditionError("frame_of: chambers are not opposite");
  }
  int n = ambient_rank(e);
  if (n == 1) {
    return Frame{{Subspace(1, 2, {{1}})}};
  }
  int q = e.steps[0].field();
  Frame frame;
  frame.lines.reserve(n);
  for (int i = 1; i <= n; ++i) {
    modq::Mat basis;
    if (i == 1) {
      basis = e.steps[0].basis();
    } else if (i == n) {
      basis = f.steps[0].basis();
    } else {
      // l_i = E_i ∩ F_{n+1-i}; F_{n+1-i} sits at step index n-i
      basis = modq::intersect_row_spaces(e.steps[i - 1].basis(),
                                         f.steps[n - i].basis(), n, q);
    }
    Subspace line(n, q, std::move(basis));
    if (line.dim() != 1) {
      throw Error("frame_of: intersection is not a line");
    }
    frame.lines.push_back(std::move(line));
  }
  return frame;
}

std::pair<Chamber, Chamber> big_cell_map(const Frame& frame) {
  int n = static_cast<int>(frame.lines.size());
  if (n == 0) throw DomainError("big_cell_map: empty frame");
  if (n == 1) return {Chamber{}, Chamber{}};
  int q = frame.lines[0].field();
  int ambient = frame.lines[0].ambient();
  if (ambient != n) throw DomainError("big_cell_map: frame size must match ambient");
  auto accumulate = [&](bool reversed) {
    Chamber c;
    modq::Mat span;
    for (int i = 0; i < n - 1; ++i) {
      int idx = reversed ? n - 1 - i : i;
      span.push_back(frame.lines[idx].basis()[0]);
      Subspace step(ambient, q, span);
      if (step.dim() != i + 1) {
        throw DomainError("big_cell_map: frame lines are not independent");
      }
      span = step.basis();
      c.steps.push_back(std::move(step));
    }
    return c;
  };
  return {accumulate(false), accumulate(true)};
}

std::pair<Chamber, Chamber> weyl_action(const coxeter::Perm& w,
                                        const std::pair<Chamber, Chamber>& pair) {
  Frame frame = frame_of(pair.first, pair.second);
  int n = static_cast<int>(frame.lines.size());
  if (w.degree() != n) {
    throw DomainError("weyl_action: permutation degree does not match rank");
  }
  coxeter::Perm w_inv = w.inverse();
  Frame moved;
  moved.lines.reserve(n);
  for (int i = 0; i < n; ++i) moved.lines.push_back(frame.lines[w_inv(i)]);
  return big_cell_map(moved);
}

int chamber_index(const std::vector<Chamber>& sorted_chambers, const Chamber& c) {
  auto it = std::lower_bound(sorted_chambers.begin(), sorted_chambers.end(), c);
  if (it == sorted_chambers.end() || !(*it == c)) {
    throw DomainError("chamber is not in the list");
  }
  return static_cast<int>(it - sorted_chambers.begin());
}

galois::PairAction opposite_pair_action(int n, int q) {
  check_parameters(n, q);
  if (n == 1) {
    auto group = std::make_shared<const coxeter::CoxeterGroup>(
        coxeter::make_symmetric_group(1));
    return galois::PairAction(1, {{0, 0}}, std::move(group), {{0}});
  }
  auto chambers = enumerate_chambers(n, q);
  long long cell = 1;
  for (int i = 0; i < n * (n - 1) / 2; ++i) cell *= q;
  if (static_cast<long long>(chambers.size()) * cell > kMaxOppositePairs) {
    throw SizeError("opposite_pair_action: opposite pair count exceeds cap");
  }

  int count = static_cast<int>(chambers.size());
  std::vector<std::pair<int, int>> domain;
  for (int x = 0; x < count; ++x) {
    for (int y = 0; y < count; ++y) {
      if (is_opposite(chambers[x], chambers[y])) domain.emplace_back(x, y);
    }
  }

  auto lines = enumerate_lines(n, q);
  auto line_idx = [&](const Subspace& line) {
    auto it = std::lower_bound(lines.begin(), lines.end(), line);
    return static_cast<int>(it - lines.begin());
  };
  std::vector<std::vector<int>> frames(domain.size(), std::vector<int>(n));
  std::map<std::vector<int>, int> frame_to_pair;
  for (size_t d = 0; d < domain.size(); ++d) {
    Frame f = frame_of(chambers[domain[d].first], chambers[domain[d].second]);
    for (int i = 0; i < n; ++i) frames[d][i] = line_idx(f.lines[i]);
    frame_to_pair[frames[d]] = static_cast<int>(d);
  }
  if (frame_to_pair.size() != domain.size()) {
    throw Error("opposite_pair_action: frames do not separate pairs");
  }

  auto group = std::make_shared<const coxeter::CoxeterGroup>(
      coxeter::make_symmetric_group(n));
  std::vector<std::vector<int>> table(group->order(),
                                      std::vector<int>(domain.size()));
  std::vector<int> moved(n);
  for (int e = 0; e < group->order(); ++e) {
    coxeter::Perm w_inv = group->elements[e].inverse();
    for (size_t d = 0; d < domain.size(); ++d) {
      for (int i = 0; i < n; ++i) moved[i] = frames[d][w_inv(i)];
      auto it = frame_to_pair.find(moved);
      if (it == frame_to_pair.end()) {
        throw Error("opposite_pair_action: permuted frame is not a pair");
      }
      table[e][d] = it->second;
    }
  }
  return galois::PairAction(count, std::move(domain), std::move(group),
                            std::move(table));
}

galois::Partition partial_flag_quotient(int n, int q,
                                        const std::vector<int>& types) {
  check_parameters(n, q);
  std::set<int> wanted(types.begin(), types.end());
  if (wanted.size() != types.size()) {
    throw DomainError("partial_flag_quotient: repeated type");
  }
  for (int t : wanted) {
    if (t < 1 || t > n - 1) {
      throw DomainError("partial_flag_quotient: type outside 1..n-1");
    }
  }
  auto chambers = enumerate_chambers(n, q);
  std::map<std::vector<Subspace>, int> labels;
  std::vector<int> ids(chambers.size());
  for (size_t c = 0; c < chambers.size(); ++c) {
    std::vector<Subspace> key;
    for (int t : wanted) key.push_back(chambers[c].steps[t - 1]);
    auto [it, fresh] = labels.emplace(std::move(key), static_cast<int>(labels.size()));
    ids[c] = it->second;
    (void)fresh;
  }
  return galois::Partition(std::move(ids));
}

Chamber transform(const Chamber& c, const modq::Mat& g) {
  Chamber out;
  out.steps.reserve(c.steps.size());
  for (const Subspace& s : c.steps) {
    modq::Mat rows;
    rows.reserve(s.dim());
    for (const auto& row : s.basis()) rows.push_back(modq::apply(row, g, s.field()));
    Subspace moved(s.ambient(), s.field(), std::move(rows));
    if (moved.dim() != s.dim()) {
      throw DomainError("transform: matrix is singular on a flag step");
    }
    out.steps.push_back(std::move(moved));
  }
  return out;
}

long long diagonal_orbit_count(int n, int q) {
  check_parameters(n, q);
  auto chambers = enumerate_chambers(n, q);
  long long count = static_cast<long long>(chambers.size());
  if (count * count > kMaxDiagonalPairs) {
    throw SizeError("diagonal_orbit_count: chamber pair count exceeds cap");
  }
  int m = static_cast<int>(count);

  UnionFind uf(m * m);
  for (const auto& g : modq::gl_generators(n, q)) {
    std::vector<int> image(m);
    for (int c = 0; c < m; ++c) {
      image[c] = chamber_index(chambers, transform(chambers[c], g));
    }
    for (int x = 0; x < m; ++x) {
      for (int y = 0; y < m; ++y) {
        uf.unite(x * m + y, image[x] * m + image[y]);
      }
    }
  }
  long long orbits = uf.component_count();

  std::set<coxeter::Perm> positions;
  for (int x = 0; x < m; ++x) {
    for (int y = 0; y < m; ++y) {
      positions.insert(relative_position(chambers[x], chambers[y]));
    }
  }
  if (orbits != static_cast<long long>(positions.size())) {
    throw Error("diagonal orbits disagree with attained relative positions");
  }
  return orbits;
}

}  // namespace weylkit::building

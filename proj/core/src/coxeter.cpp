#include "weylkit/coxeter.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

namespace weylkit::coxeter {

namespace {

constexpr int kMaxSymmetricRank = 8;
constexpr int kMaxInvolutionRank = 10;
constexpr int kMaxSubgroupGroupOrder = 1024;
constexpr long long kMaxHomCandidates = 10'000'000;
constexpr int kMaxHomTableCheck = 128;  // full table verification bound

}  // namespace

Perm::Perm(std::vector<int> images) : images_(std::move(images)) {
  std::vector<char> seen(images_.size(), 0);
  for (int v : images_) {
    if (v < 0 || v >= degree() || seen[v]) {
      throw DomainError("permutation image array is not a bijection");
    }
    seen[v] = 1;
  }
}

Perm Perm::identity(int degree) {
  std::vector<int> img(degree);
  std::iota(img.begin(), img.end(), 0);
  return Perm(std::move(img));
}

Perm Perm::transposition(int degree, int a, int b) {
  if (a < 0 || b < 0 || a >= degree || b >= degree || a == b) {
    throw DomainError("invalid transposition points");
  }
  std::vector<int> img(degree);
  std::iota(img.begin(), img.end(), 0);
  std::swap(img[a], img[b]);
  return Perm(std::move(img));
}

bool Perm::is_identity() const {
  for (int i = 0; i < degree(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

Perm Perm::inverse() const {
  std::vector<int> img(images_.size());
  for (int i = 0; i < degree(); ++i) img[images_[i]] = i;
  Perm p;
  p.images_ = std::move(img);
  return p;
}

Perm operator*(const Perm& a, const Perm& b) {
  if (a.degree() != b.degree()) {
    throw DomainError("composing permutations of different degrees");
  }
  Perm p;
  p.images_.resize(a.images_.size());
  for (int i = 0; i < a.degree(); ++i) p.images_[i] = a.images_[b.images_[i]];
  return p;
}

int element_order(const Perm& p) {
  Perm acc = p;
  int n = 1;
  while (!acc.is_identity()) {
    acc = acc * p;
    ++n;
  }
  return n;
}

int inversion_count(const Perm& p) {
  int count = 0;
  for (int i = 0; i < p.degree(); ++i) {
    for (int j = i + 1; j < p.degree(); ++j) {
      if (p(i) > p(j)) ++count;
    }
  }
  return count;
}

std::string cycle_string(const Perm& p) {
  std::vector<char> seen(p.degree(), 0);
  std::ostringstream out;
  bool any = false;
  for (int start = 0; start < p.degree(); ++start) {
    if (seen[start] || p(start) == start) continue;
    any = true;
    out << '(';
    int x = start;
    bool first = true;
    while (!seen[x]) {
      seen[x] = 1;
      if (!first) out << ' ';
      out << (x + 1);
      first = false;
      x = p(x);
    }
    out << ')';
  }
  return any ? out.str() : "e";
}

int CoxeterGroup::element_index(const Perm& p) const {
  auto it = std::lower_bound(elements.begin(), elements.end(), p);
  if (it == elements.end() || !(*it == p)) {
    throw DomainError("permutation is not an element of this group");
  }
  return static_cast<int>(it - elements.begin());
}

int CoxeterGroup::multiply(int a, int b) const {
  return element_index(elements[a] * elements[b]);
}

int CoxeterGroup::inverse_of(int a) const {
  return element_index(elements[a].inverse());
}

bool CoxeterGroup::same_elements(const CoxeterGroup& other) const {
  return degree == other.degree && elements == other.elements;
}

bool Subgroup::contains(int element_idx) const {
  return std::binary_search(members.begin(), members.end(), element_idx);
}

bool Subgroup::operator==(const Subgroup& other) const {
  if (members != other.members) return false;
  if (parent == other.parent) return true;
  return parent && other.parent && parent->same_elements(*other.parent);
}

namespace {

void check_parent(const Subgroup& v, const CoxeterGroup& w, const char* op) {
  if (!v.parent || !(v.parent == &w || v.parent->same_elements(w))) {
    throw DomainError(std::string(op) + ": subgroup belongs to a different group");
  }
}

std::vector<Perm> close_under_products(int degree, const std::vector<Perm>& gens) {
  std::set<Perm> seen;
  std::queue<Perm> frontier;
  Perm id = Perm::identity(degree);
  seen.insert(id);
  frontier.push(id);
  while (!frontier.empty()) {
    Perm cur = frontier.front();
    frontier.pop();
    for (const Perm& g : gens) {
      Perm next = cur * g;
      if (seen.insert(next).second) frontier.push(next);
    }
  }
  return {seen.begin(), seen.end()};  // std::set iterates in sorted order
}

}  // namespace

CoxeterGroup make_symmetric_group(int n) {
  if (n < 1) throw DomainError("make_symmetric_group: n must be >= 1");
  if (n > kMaxSymmetricRank) {
    throw SizeError("make_symmetric_group: n exceeds cap of 8");
  }
  CoxeterGroup w;
  w.family = Family::Symmetric;
  w.degree = n;
  for (int i = 0; i + 1 < n; ++i) {
    w.generators.push_back(Perm::transposition(n, i, i + 1));
  }
  int r = static_cast<int>(w.generators.size());
  w.coxeter_matrix.assign(r, std::vector<int>(r, 2));
  for (int i = 0; i < r; ++i) {
    w.coxeter_matrix[i][i] = 1;
    if (i + 1 < r) {
      w.coxeter_matrix[i][i + 1] = 3;
      w.coxeter_matrix[i + 1][i] = 3;
    }
  }
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 0);
  do {
    w.elements.emplace_back(std::vector<int>(img));
  } while (std::next_permutation(img.begin(), img.end()));
  std::vector<int> rev(n);
  for (int i = 0; i < n; ++i) rev[i] = n - 1 - i;
  w.flip = Perm(std::move(rev));
  validate_relations(w);
  return w;
}

CoxeterGroup make_involution_product(int r) {
  if (r < 1) throw DomainError("make_involution_product: r must be >= 1");
  if (r > kMaxInvolutionRank) {
    throw SizeError("make_involution_product: r exceeds cap of 10");
  }
  CoxeterGroup w;
  w.family = Family::InvolutionProduct;
  w.degree = 2 * r;
  for (int i = 0; i < r; ++i) {
    w.generators.push_back(Perm::transposition(2 * r, 2 * i, 2 * i + 1));
  }
  w.coxeter_matrix.assign(r, std::vector<int>(r, 2));
  for (int i = 0; i < r; ++i) w.coxeter_matrix[i][i] = 1;
  for (int mask = 0; mask < (1 << r); ++mask) {
    Perm p = Perm::identity(2 * r);
    for (int i = 0; i < r; ++i) {
      if (mask & (1 << i)) p = p * w.generators[i];
    }
    w.elements.push_back(std::move(p));
  }
  std::sort(w.elements.begin(), w.elements.end());
  Perm flip = Perm::identity(2 * r);
  for (const Perm& g : w.generators) flip = flip * g;
  w.flip = std::move(flip);
  validate_relations(w);
  return w;
}

Perm longest_element(const CoxeterGroup& w) {
  if (w.family != Family::Symmetric) {
    throw UnsupportedError("longest_element: defined for symmetric groups only");
  }
  int best = 0, best_count = -1;
  bool unique = true;
  for (int i = 0; i < w.order(); ++i) {
    int c = inversion_count(w.elements[i]);
    if (c > best_count) {
      best_count = c;
      best = i;
      unique = true;
    } else if (c == best_count) {
      unique = false;
    }
  }
  if (!unique) throw Error("longest_element: maximal inversion count not unique");
  return w.elements[best];
}

void validate_relations(const CoxeterGroup& w) {
  int r = w.rank();
  if (static_cast<int>(w.coxeter_matrix.size()) != r) {
    throw DomainError("coxeter matrix rank mismatch");
  }
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(w.coxeter_matrix[i].size()) != r) {
      throw DomainError("coxeter matrix is not square");
    }
    if (w.coxeter_matrix[i][i] != 1 || element_order(w.generators[i]) != 2) {
      throw DomainError("generator is not an involution");
    }
    for (int j = 0; j < r; ++j) {
      if (i == j) continue;
      if (w.coxeter_matrix[i][j] != w.coxeter_matrix[j][i]) {
        throw DomainError("coxeter matrix is not symmetric");
      }
      int got = element_order(w.generators[i] * w.generators[j]);
      if (got != w.coxeter_matrix[i][j]) {
        throw DomainError("generator pair order disagrees with coxeter matrix");
      }
    }
  }
}

namespace {

std::vector<std::vector<int>> multiplication_table(const CoxeterGroup& w) {
  int n = w.order();
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      table[a][b] = w.element_index(w.elements[a] * w.elements[b]);
    }
  }
  return table;
}

std::vector<int> closure_indices(const CoxeterGroup& w,
                                 const std::vector<std::vector<int>>& table,
                                 std::vector<int> seed) {
  std::set<int> seen(seed.begin(), seed.end());
  seen.insert(w.identity_index());
  std::queue<int> frontier;
  for (int s : seen) frontier.push(s);
  while (!frontier.empty()) {
    int cur = frontier.front();
    frontier.pop();
    for (int g : seed) {
      int next = table[cur][g];
      if (seen.insert(next).second) frontier.push(next);
    }
  }
  // generators of a finite group closed under products already yield a
  // subgroup, but extend by all pairwise products until stable to be safe
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<int> cur(seen.begin(), seen.end());
    for (int a : cur) {
      for (int b : cur) {
        if (seen.insert(table[a][b]).second) grew = true;
      }
    }
  }
  return {seen.begin(), seen.end()};
}

}  // namespace

std::vector<Subgroup> enumerate_subgroups(const CoxeterGroup& w) {
  if (w.order() > kMaxSubgroupGroupOrder) {
    throw SizeError("enumerate_subgroups: group order exceeds cap of 1024");
  }
  auto table = multiplication_table(w);
  std::set<std::vector<int>> found;
  std::queue<std::vector<int>> frontier;
  std::vector<int> trivial{w.identity_index()};
  found.insert(trivial);
  frontier.push(trivial);
  while (!frontier.empty()) {
    std::vector<int> h = frontier.front();
    frontier.pop();
    for (int g = 0; g < w.order(); ++g) {
      if (std::binary_search(h.begin(), h.end(), g)) continue;
      std::vector<int> seed = h;
      seed.push_back(g);
      std::vector<int> k = closure_indices(w, table, std::move(seed));
      if (found.insert(k).second) frontier.push(k);
    }
  }
  std::vector<Subgroup> out;
  out.reserve(found.size());
  for (const auto& members : found) out.push_back(Subgroup{&w, members});
  std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.members.size() != b.members.size()) {
      return a.members.size() < b.members.size();
    }
    return a.members < b.members;
  });
  return out;
}

std::vector<std::vector<int>> generator_words(const CoxeterGroup& w) {
  std::vector<std::vector<int>> words(w.order());
  std::vector<char> known(w.order(), 0);
  std::queue<int> frontier;
  known[w.identity_index()] = 1;
  frontier.push(w.identity_index());
  while (!frontier.empty()) {
    int cur = frontier.front();
    frontier.pop();
    for (int g = 0; g < w.rank(); ++g) {
      int next = w.element_index(w.elements[cur] * w.generators[g]);
      if (!known[next]) {
        known[next] = 1;
        words[next] = words[cur];
        words[next].push_back(g);
        frontier.push(next);
      }
    }
  }
  for (int i = 0; i < w.order(); ++i) {
    if (!known[i]) throw Error("generators do not generate the element list");
  }
  return words;
}

std::vector<GroupHom> enumerate_homomorphisms(const CoxeterGroup& source,
                                              const CoxeterGroup& target,
                                              const std::optional<HomPin>& pin,
                                              bool injective_only) {
  int r = source.rank();
  double bound = 1.0;
  for (int i = 0; i < r; ++i) bound *= target.order();
  if (bound > static_cast<double>(kMaxHomCandidates)) {
    throw SizeError("enumerate_homomorphisms: |target|^rank exceeds cap of 1e7");
  }

  int pin_source = -1, pin_target = -1;
  if (pin) {
    pin_source = source.element_index(pin->source);
    pin_target = target.element_index(pin->target);
  }

  auto words = generator_words(source);
  std::vector<GroupHom> out;
  std::vector<int> assignment(r, 0);

  auto word_image = [&](int element_idx) {
    int img = target.identity_index();
    for (int g : words[element_idx]) img = target.multiply(img, assignment[g]);
    return img;
  };

  auto relations_hold = [&]() {
    for (int i = 0; i < r; ++i) {
      for (int j = i; j < r; ++j) {
        int m = source.coxeter_matrix[i][j];
        int prod = target.multiply(assignment[i], assignment[j]);
        int acc = target.identity_index();
        for (int k = 0; k < m; ++k) acc = target.multiply(acc, prod);
        if (acc != target.identity_index()) return false;
      }
    }
    return true;
  };

  auto emit = [&]() {
    if (!relations_hold()) return;
    if (pin && word_image(pin_source) != pin_target) return;
    GroupHom hom;
    hom.source = &source;
    hom.target = &target;
    hom.image.resize(source.order());
    for (int e = 0; e < source.order(); ++e) hom.image[e] = word_image(e);
    if (source.order() <= kMaxHomTableCheck) {
      for (int a = 0; a < source.order(); ++a) {
        for (int b = 0; b < source.order(); ++b) {
          int lhs = hom.image[source.multiply(a, b)];
          int rhs = target.multiply(hom.image[a], hom.image[b]);
          if (lhs != rhs) {
            throw Error("homomorphism candidate fails the multiplication table");
          }
        }
      }
    }
    std::vector<int> kernel_members;
    for (int e = 0; e < source.order(); ++e) {
      if (hom.image[e] == target.identity_index()) kernel_members.push_back(e);
    }
    hom.kernel = Subgroup{&source, std::move(kernel_members)};
    if (injective_only && !hom.injective()) return;
    out.push_back(std::move(hom));
  };

  // odometer over generator images; empty rank yields the sole trivial hom
  while (true) {
    emit();
    int pos = r - 1;
    while (pos >= 0 && assignment[pos] == target.order() - 1) {
      assignment[pos] = 0;
      --pos;
    }
    if (pos < 0) break;
    ++assignment[pos];
  }

  std::sort(out.begin(), out.end(),
            [](const GroupHom& a, const GroupHom& b) { return a.image < b.image; });
  return out;
}

bool is_irreducible(const CoxeterGroup& w) {
  int r = w.rank();
  if (r <= 1) return true;
  std::vector<char> seen(r, 0);
  std::queue<int> frontier;
  seen[0] = 1;
  frontier.push(0);
  int visited = 1;
  while (!frontier.empty()) {
    int cur = frontier.front();
    frontier.pop();
    for (int j = 0; j < r; ++j) {
      if (!seen[j] && w.coxeter_matrix[cur][j] >= 3) {
        seen[j] = 1;
        ++visited;
        frontier.push(j);
      }
    }
  }
  return visited == r;
}

bool is_normal(const Subgroup& v, const CoxeterGroup& w) {
  check_parent(v, w, "is_normal");
  for (int g = 0; g < w.order(); ++g) {
    int g_inv = w.inverse_of(g);
    for (int m : v.members) {
      int conj = w.multiply(w.multiply(g, m), g_inv);
      if (!v.contains(conj)) return false;
    }
  }
  return true;
}

Subgroup trivial_subgroup(const CoxeterGroup& w) {
  return Subgroup{&w, {w.identity_index()}};
}

Subgroup full_subgroup(const CoxeterGroup& w) {
  std::vector<int> all(w.order());
  std::iota(all.begin(), all.end(), 0);
  return Subgroup{&w, std::move(all)};
}

Subgroup subgroup_generated_by(const CoxeterGroup& w, std::span<const Perm> gens) {
  std::set<int> seen{w.identity_index()};
  std::vector<int> gen_idx;
  for (const Perm& g : gens) gen_idx.push_back(w.element_index(g));
  std::queue<int> frontier;
  frontier.push(w.identity_index());
  for (int g : gen_idx) {
    if (seen.insert(g).second) frontier.push(g);
  }
  while (!frontier.empty()) {
    int cur = frontier.front();
    frontier.pop();
    for (int g : gen_idx) {
      int next = w.multiply(cur, g);
      if (seen.insert(next).second) frontier.push(next);
    }
  }
  return Subgroup{&w, {seen.begin(), seen.end()}};
}

bool is_subgroup(const Subgroup& v) {
  if (!v.parent) return false;
  const CoxeterGroup& w = *v.parent;
  if (v.members.empty() || !v.contains(w.identity_index())) return false;
  for (int a : v.members) {
    if (a < 0 || a >= w.order()) return false;
    if (!v.contains(w.inverse_of(a))) return false;
    for (int b : v.members) {
      if (!v.contains(w.multiply(a, b))) return false;
    }
  }
  return true;
}

}  // namespace weylkit::coxeter

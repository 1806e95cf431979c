#pragma once

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "weylkit/errors.hpp"

namespace weylkit::coxeter {

/// Permutation of {0, ..., degree-1}, stored as its image array.
/// Equality and ordering are array equality / lexicographic order, so sorted
/// element lists have a canonical layout with the identity at index 0.
class Perm {
public:
  Perm() = default;
  explicit Perm(std::vector<int> images);
  static Perm identity(int degree);
  static Perm transposition(int degree, int a, int b);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int point) const { return images_[point]; }
  const std::vector<int>& images() const { return images_; }
  bool is_identity() const;
  Perm inverse() const;

  /// (a * b)(x) = a(b(x)): apply b first.
  friend Perm operator*(const Perm& a, const Perm& b);
  auto operator<=>(const Perm&) const = default;

private:
  std::vector<int> images_;
};

int element_order(const Perm& p);
int inversion_count(const Perm& p);
/// Cycle notation with 1-based points, fixed points omitted; "e" for the identity.
std::string cycle_string(const Perm& p);

enum class Family { Symmetric, InvolutionProduct };

/// Finite Coxeter group realized as an explicit permutation group.
/// `elements` is exhaustive and sorted; indices into it are the working
/// currency of every operation below.
struct CoxeterGroup {
  Family family = Family::Symmetric;
  int degree = 0;                               // ground set size
  std::vector<Perm> generators;                 // s_1 .. s_r
  std::vector<std::vector<int>> coxeter_matrix; // r x r, m_ii = 1
  std::vector<Perm> elements;                   // sorted; index 0 = identity
  std::optional<Perm> flip;                     // distinguished involution

  int rank() const { return static_cast<int>(generators.size()); }
  int order() const { return static_cast<int>(elements.size()); }
  int identity_index() const { return 0; }
  /// Index of `p` in `elements`; DomainError if absent.
  int element_index(const Perm& p) const;
  int multiply(int a, int b) const;
  int inverse_of(int a) const;
  bool same_elements(const CoxeterGroup& other) const;
};

/// Subgroup as a sorted list of element indices into parent->elements.
/// The parent group must outlive the subgroup.
struct Subgroup {
  const CoxeterGroup* parent = nullptr;
  std::vector<int> members;

  int order() const { return static_cast<int>(members.size()); }
  bool contains(int element_idx) const;
  bool operator==(const Subgroup& other) const;
};

/// Group homomorphism tabulated on every source element.
struct GroupHom {
  const CoxeterGroup* source = nullptr;
  const CoxeterGroup* target = nullptr;
  std::vector<int> image;  // source element index -> target element index
  Subgroup kernel;

  bool injective() const { return kernel.members.size() == 1; }
};

struct HomPin {
  Perm source;
  Perm target;
};

/// Symmetric group S_n acting on {0..n-1}; generators are the adjacent
/// transpositions, flip is the longest element. Caps: 1 <= n <= 8.
CoxeterGroup make_symmetric_group(int n);

/// (Z/2)^r realized on 2r points, generator i swapping {2i, 2i+1};
/// flip is the product of all generators. Caps: 1 <= r <= 10.
CoxeterGroup make_involution_product(int r);

/// Unique element of maximal inversion count (type A only).
Perm longest_element(const CoxeterGroup& w);

/// All subgroups in canonical order (by order, then member indices).
/// Cap: |W| <= 1024.
std::vector<Subgroup> enumerate_subgroups(const CoxeterGroup& w);

/// All homomorphisms source -> target found by generator-image search,
/// optionally pinned (hom(pin.source) == pin.target) and filtered to
/// injective ones. Each hom is verified against the defining relations and,
/// for small sources, the full multiplication table. Cap: |target|^rank <= 1e7.
std::vector<GroupHom> enumerate_homomorphisms(
    const CoxeterGroup& source, const CoxeterGroup& target,
    const std::optional<HomPin>& pin = std::nullopt,
    bool injective_only = false);

/// Coxeter diagram connectivity (edges where m_ij >= 3).
bool is_irreducible(const CoxeterGroup& w);

bool is_normal(const Subgroup& v, const CoxeterGroup& w);

Subgroup trivial_subgroup(const CoxeterGroup& w);
Subgroup full_subgroup(const CoxeterGroup& w);
Subgroup subgroup_generated_by(const CoxeterGroup& w, std::span<const Perm> gens);
bool is_subgroup(const Subgroup& v);

/// For each element, one word in generator indices reaching it (BFS from the
/// identity, generators in ascending order, so words are shortest and stable).
std::vector<std::vector<int>> generator_words(const CoxeterGroup& w);

/// Checks that every generator is an involution and (s_i s_j) has order m_ij.
void validate_relations(const CoxeterGroup& w);

}  // namespace weylkit::coxeter

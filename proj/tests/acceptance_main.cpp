// Acceptance gate: one line per criterion, every expected value and time
// budget pinned here. Exits 1 if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "weylkit/building.hpp"
#include "weylkit/coxeter.hpp"
#include "weylkit/galois.hpp"
#include "weylkit/morphism.hpp"
#include "weylkit/scenario.hpp"

using namespace weylkit;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

struct Criterion {
  std::string name;
  long long budget_ms;  // 0 = no budget
  std::function<Outcome()> run;
};

long long count_of(const scenario::Report& rep, const std::string& name) {
  for (const auto& [key, value] : rep.counts) {
    if (key == name) return value;
  }
  return -1;
}

Outcome check_all(std::initializer_list<std::pair<bool, const char*>> checks) {
  Outcome out;
  for (const auto& [ok, what] : checks) {
    if (!ok) {
      out.pass = false;
      if (!out.detail.empty()) out.detail += "; ";
      out.detail += what;
    }
  }
  if (out.pass) out.detail = "all checks hold";
  return out;
}

Outcome flag_building_3_2() {
  auto rep = scenario::run_flag_building(3, 2);
  std::set<std::vector<int>> proper;
  for (const auto& s : rep.lattice->closed_subgroups) {
    if (s.order() > 1 && s.order() < 6) proper.insert(s.members);
  }
  return check_all({
      {count_of(rep, "chambers") == 21, "chambers != 21"},
      {count_of(rep, "opposite_pairs") == 168, "opposite pairs != 168"},
      {count_of(rep, "diagonal_orbits") == 6, "diagonal orbits != 6"},
      {count_of(rep, "closed_quotients") == 4, "closed quotients != 4"},
      {rep.all_pass(), "a report verdict failed (cube/pairing/orbits)"},
      {proper == std::set<std::vector<int>>{{0, 1}, {0, 2}},
       "proper closed subgroups are not {e,(2 3)} and {e,(1 2)}"},
  });
}

Outcome flag_building_4_2() {
  auto rep = scenario::run_flag_building(4, 2);
  return check_all({
      {count_of(rep, "chambers") == 315, "chambers != 315"},
      {count_of(rep, "opposite_pairs") == 20160, "opposite pairs != 20160"},
      {count_of(rep, "diagonal_orbits") == 24, "diagonal orbits != 24"},
      {count_of(rep, "closed_quotients") == 8, "closed quotients != 8"},
      {count_of(rep, "closed_subgroups") == 8, "closed subgroups != 8"},
      {rep.all_pass(), "a report verdict failed (3-cube/pairing/orbits)"},
  });
}

Outcome product_3_4() {
  auto rep = scenario::run_product(3, 4);
  galois::PairAction action = galois::product_pair_action(3, 4);
  const auto& w = action.group();
  coxeter::Subgroup flip_sub{&w, {0, w.element_index(*w.flip)}};
  bool flip_closed =
      galois::close_subgroup(action, flip_sub).members == flip_sub.members;
  std::vector<int> by_first(12), by_second(12);
  for (int x = 0; x < 12; ++x) {
    by_first[x] = x / 4;
    by_second[x] = x % 4;
  }
  std::set<galois::Partition, decltype(&galois::partition_canonical_less)>
      expected(&galois::partition_canonical_less);
  expected.insert(galois::Partition::single_block(12));
  expected.insert(galois::Partition(by_first));
  expected.insert(galois::Partition(by_second));
  expected.insert(galois::Partition::discrete(12));
  decltype(expected) got(&galois::partition_canonical_less);
  for (const auto& p : rep.lattice->closed_quotients) got.insert(p);
  return check_all({
      {count_of(rep, "closed_quotients") == 4, "closed quotients != 4"},
      {got == expected,
       "closed quotients are not {one-block, pr_1, pr_2, identity}"},
      {!flip_closed, "the flip subgroup is unexpectedly closed"},
      {galois::close_subgroup(action, flip_sub).order() == 4,
       "closure of the flip subgroup is not the full group"},
      {rep.all_pass(), "a report verdict failed"},
  });
}

Outcome obstruction_suite() {
  auto s4 = coxeter::make_symmetric_group(4);
  auto s3 = coxeter::make_symmetric_group(3);
  auto z22 = coxeter::make_involution_product(2);

  coxeter::HomPin pin43{*s4.flip, *s3.flip};
  auto blocked = coxeter::enumerate_homomorphisms(s4, s3, pin43, true);

  coxeter::HomPin pin23{*z22.flip, *s3.flip};
  auto dichotomy = coxeter::enumerate_homomorphisms(z22, s3, pin23);
  std::set<std::vector<int>> kernels;
  for (const auto& h : dichotomy) kernels.insert(h.kernel.members);
  // element indices in (Z/2)^2: 1 = s_2, 2 = s_1
  bool kernels_ok = kernels == std::set<std::vector<int>>{{0, 1}, {0, 2}};

  coxeter::HomPin pin33{*s3.flip, *s3.flip};
  auto autos = coxeter::enumerate_homomorphisms(s3, s3, pin33, true);

  return check_all({
      {blocked.empty(), "an injective pinned homomorphism S_4 -> S_3 exists"},
      {dichotomy.size() == 2, "pinned (Z/2)^2 -> S_3 count != 2"},
      {kernels_ok, "pinned (Z/2)^2 -> S_3 kernels are not <w_1>, <w_2>"},
      {autos.size() == 2, "pinned automorphisms of S_3 != 2"},
  });
}

Outcome galois_adjunction() {
  int violations = 0;
  int closure_faults = 0;
  int exchange_faults = 0;
  std::mt19937_64 rng(20260819);

  auto probe = [&](const galois::PairAction& action,
                   std::vector<galois::Partition> structured) {
    auto subgroups = coxeter::enumerate_subgroups(action.group());
    std::vector<galois::Partition> probes = std::move(structured);
    for (int k = 0; k < 100; ++k) {
      probes.emplace_back(oracles::random_labels(rng, action.ground_size()));
    }
    for (const auto& v : subgroups) {
      if (!std::includes(
              galois::close_subgroup(action, v).members.begin(),
              galois::close_subgroup(action, v).members.end(),
              v.members.begin(), v.members.end())) {
        ++closure_faults;
      }
      auto closed = galois::close_subgroup(action, v);
      if (!(galois::close_subgroup(action, closed) == closed)) ++closure_faults;
      for (const auto& p : probes) {
        if (!galois::check_adjunction(action, v, p)) ++violations;
      }
    }
    for (const auto& p : probes) {
      auto closed = galois::close_quotient(action, p);
      if (!galois::partition_leq(p, closed)) ++closure_faults;  // extensive
      if (!(galois::close_quotient(action, closed) == closed)) ++closure_faults;
    }
    // anti-isomorphism with meets and joins exchanged
    auto lattice = galois::enumerate_closed(action);
    int k = static_cast<int>(lattice.closed_subgroups.size());
    for (int i = 0; i < k; ++i) {
      for (int j = 0; j < k; ++j) {
        const auto& vi = lattice.closed_subgroups[i];
        const auto& vj = lattice.closed_subgroups[j];
        const auto& qi = lattice.closed_quotients[lattice.pairing[i]];
        const auto& qj = lattice.closed_quotients[lattice.pairing[j]];
        bool sub_le = std::includes(vj.members.begin(), vj.members.end(),
                                    vi.members.begin(), vi.members.end());
        if (sub_le != galois::partition_leq(qj, qi)) ++exchange_faults;
        std::vector<coxeter::Perm> gens;
        for (int m : vi.members) gens.push_back(action.group().elements[m]);
        for (int m : vj.members) gens.push_back(action.group().elements[m]);
        auto join = galois::close_subgroup(
            action, coxeter::subgroup_generated_by(action.group(), gens));
        if (!(galois::finest_invariant_quotient(action, join) ==
              galois::close_quotient(action, galois::partition_meet(qi, qj)))) {
          ++exchange_faults;
        }
        std::vector<int> inter;
        std::set_intersection(vi.members.begin(), vi.members.end(),
                              vj.members.begin(), vj.members.end(),
                              std::back_inserter(inter));
        coxeter::Subgroup vmeet{&action.group(), inter};
        if (!(galois::finest_invariant_quotient(action, vmeet) ==
              galois::close_quotient(action, galois::partition_join(qi, qj)))) {
          ++exchange_faults;
        }
      }
    }
  };

  {
    std::vector<galois::Partition> structured;
    for (int mask = 0; mask < 4; ++mask) {
      std::vector<int> types;
      if (mask & 1) types.push_back(1);
      if (mask & 2) types.push_back(2);
      structured.push_back(building::partial_flag_quotient(3, 2, types));
    }
    probe(building::opposite_pair_action(3, 2), std::move(structured));
  }
  {
    std::vector<int> by_first(12), by_second(12);
    for (int x = 0; x < 12; ++x) {
      by_first[x] = x / 4;
      by_second[x] = x % 4;
    }
    probe(galois::product_pair_action(3, 4),
          {galois::Partition::single_block(12), galois::Partition(by_first),
           galois::Partition(by_second), galois::Partition::discrete(12)});
  }
  probe(building::opposite_pair_action(2, 3),
        {building::partial_flag_quotient(2, 3, {}),
         building::partial_flag_quotient(2, 3, {1})});

  std::ostringstream detail;
  detail << violations << " adjunction violations, " << closure_faults
         << " closure-law faults, " << exchange_faults << " exchange faults";
  return Outcome{violations == 0 && closure_faults == 0 && exchange_faults == 0,
                 detail.str()};
}

Outcome weyl_identities() {
  auto chambers = building::enumerate_chambers(3, 2);
  auto s3 = coxeter::make_symmetric_group(3);
  std::vector<std::pair<building::Chamber, building::Chamber>> opposite;
  for (const auto& e : chambers) {
    for (const auto& f : chambers) {
      if (building::is_opposite(e, f)) opposite.emplace_back(e, f);
    }
  }
  bool law = true, swap = true, section = true;
  for (const auto& pair : opposite) {
    for (const auto& a : s3.elements) {
      for (const auto& b : s3.elements) {
        if (!(building::weyl_action(a, building::weyl_action(b, pair)) ==
              building::weyl_action(a * b, pair))) {
          law = false;
        }
      }
    }
    auto flipped = building::weyl_action(*s3.flip, pair);
    if (!(flipped.first == pair.second && flipped.second == pair.first)) {
      swap = false;
    }
    if (!(building::big_cell_map(building::frame_of(pair.first, pair.second)) ==
          pair)) {
      section = false;
    }
  }
  return check_all({
      {opposite.size() == 168, "opposite pair count != 168"},
      {law, "action law fails on some (a, b, pair)"},
      {swap, "longest element does not swap some opposite pair"},
      {section, "big cell map does not invert frame extraction"},
  });
}

Outcome morphism_checks() {
  morphism::Checker checker(3, 2);
  auto mats = modq::invertible_matrices(3, 2);
  int matrix_passes = 0;
  for (const auto& g : mats) {
    auto map = morphism::matrix_map(3, 2, g);
    if (checker.opposition_violation(map)) continue;
    if (checker.equivariance_violation(map)) continue;
    try {
      checker.face_maps(map);
      ++matrix_passes;
    } catch (const StructuralError&) {
    }
  }
  int random_failures = 0;
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    auto map = morphism::random_chamber_map(3, 2, seed);
    if (checker.opposition_violation(map)) {
      ++random_failures;
      continue;
    }
    if (checker.equivariance_violation(map)) {
      ++random_failures;
      continue;
    }
    try {
      checker.face_maps(map);
    } catch (const StructuralError&) {
      ++random_failures;
    }
  }
  std::ostringstream detail;
  detail << matrix_passes << "/168 matrix maps pass, " << random_failures
         << "/50 random maps fail";
  return Outcome{matrix_passes == 168 && random_failures == 50, detail.str()};
}

Outcome bruhat_cell_sizes() {
  for (int n : {1, 2, 3}) {
    for (int q : {2, 3, 5}) {
      auto chambers = building::enumerate_chambers(n, q);
      for (const auto& e : chambers) {
        std::map<std::vector<int>, long long> counts;
        for (const auto& f : chambers) {
          ++counts[building::relative_position(e, f).images()];
        }
        for (const auto& [w, count] : counts) {
          long long expected = 1;
          int len = coxeter::inversion_count(coxeter::Perm(w));
          for (int k = 0; k < len; ++k) expected *= q;
          if (count != expected) {
            std::ostringstream detail;
            detail << "n=" << n << " q=" << q << ": cell of "
                   << coxeter::cycle_string(coxeter::Perm(w)) << " has "
                   << count << " chambers, expected " << expected;
            return Outcome{false, detail.str()};
          }
        }
      }
    }
  }
  return Outcome{true, "every cell has size q^length(w)"};
}

}  // namespace

int main() {
  std::vector<Criterion> criteria{
      {"flag-building n=3 q=2 counts and closed lattice", 5000,
       flag_building_3_2},
      {"flag-building n=4 q=2 counts and 3-cube", 120000, flag_building_4_2},
      {"product (3,4) factor projections and flip closure", 1000, product_3_4},
      {"obstruction suite (S4->S3, (Z/2)^2->S3, S3 automorphisms)", 1000,
       obstruction_suite},
      {"galois adjunction, closure laws, anti-isomorphism", 0,
       galois_adjunction},
      {"weyl action law, flip swap, big-cell section", 5000, weyl_identities},
      {"morphism checker on matrix and random maps", 30000, morphism_checks},
      {"bruhat cell sizes q^length(w) for n <= 3", 0, bruhat_cell_sizes},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = c.run();
    } catch (const std::exception& e) {
      outcome = Outcome{false, std::string("exception: ") + e.what()};
    }
    auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - start)
                       .count();
    bool in_budget = c.budget_ms == 0 || elapsed <= c.budget_ms;
    bool pass = outcome.pass && in_budget;
    if (!pass) ++failed;
    std::printf("%s  %s (%lld ms%s): %s\n", pass ? "PASS" : "FAIL",
                c.name.c_str(), static_cast<long long>(elapsed),
                in_budget ? "" : ", over budget", outcome.detail.c_str());
  }
  std::printf("acceptance: %zu/%zu criteria passed\n", criteria.size() - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}

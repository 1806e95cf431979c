#include "weylkit/scenario.hpp"

#include <algorithm>
#include <chrono>
#include <cctype>
#include <sstream>

#include "weylkit/building.hpp"
#include "weylkit/morphism.hpp"

namespace weylkit::scenario {

namespace {

using Clock = std::chrono::steady_clock;

long long ms_since(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() -
                                                               start)
      .count();
}

long long factorial(int n) {
  long long f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

std::string subgroup_label(const coxeter::CoxeterGroup& w,
                           const std::vector<int>& members) {
  if (members.size() > 6) {
    return "subgroup of order " + std::to_string(members.size());
  }
  std::string out = "{";
  for (size_t i = 0; i < members.size(); ++i) {
    if (i) out += ", ";
    out += coxeter::cycle_string(w.elements[members[i]]);
  }
  return out + "}";
}

std::string types_label(const std::vector<int>& types) {
  std::string out = "{";
  for (size_t i = 0; i < types.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(types[i]);
  }
  return out + "}";
}

Verdict antitone_verdict(const galois::ClosedLattice& lattice) {
  Verdict v;
  v.name = "closed_pairing_antitone";
  v.method = "compared subgroup inclusion with quotient coarsening on every "
             "pair of closed objects";
  v.pass = true;
  int k = static_cast<int>(lattice.closed_subgroups.size());
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      const auto& small = lattice.closed_subgroups[i].members;
      const auto& large = lattice.closed_subgroups[j].members;
      bool sub_le =
          std::includes(large.begin(), large.end(), small.begin(), small.end());
      bool quo_le =
          galois::partition_leq(lattice.closed_quotients[lattice.pairing[j]],
                                lattice.closed_quotients[lattice.pairing[i]]);
      if (sub_le != quo_le) v.pass = false;
    }
  }
  v.detail = std::to_string(k) + " closed subgroups paired with " +
             std::to_string(k) + " closed quotients";
  return v;
}

}  // namespace

coxeter::CoxeterGroup parse_group_spec(const std::string& spec) {
  auto digits_from = [&](size_t pos) -> int {
    if (pos >= spec.size()) throw ParseError("group spec is missing a number");
    for (size_t i = pos; i < spec.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(spec[i]))) {
        throw ParseError("group spec must be S<n> or Z2^<r>: " + spec);
      }
    }
    if (spec.size() - pos > 4) throw ParseError("group spec number is too large");
    return std::stoi(spec.substr(pos));
  };
  if (!spec.empty() && (spec[0] == 'S' || spec[0] == 's')) {
    return coxeter::make_symmetric_group(digits_from(1));
  }
  if (spec.size() >= 3 && (spec[0] == 'Z' || spec[0] == 'z') && spec[1] == '2' &&
      spec[2] == '^') {
    return coxeter::make_involution_product(digits_from(3));
  }
  throw ParseError("group spec must be S<n> or Z2^<r>: " + spec);
}

Report run_flag_building(int n, int q, bool with_timing) {
  auto start = Clock::now();
  galois::PairAction action = building::opposite_pair_action(n, q);
  galois::ClosedLattice lattice = galois::enumerate_closed(action);
  long long orbits = building::diagonal_orbit_count(n, q);

  Report rep;
  rep.scenario = "flag-building";
  rep.params = {{"n", std::to_string(n)}, {"q", std::to_string(q)}};
  rep.counts = {
      {"chambers", action.ground_size()},
      {"opposite_pairs", static_cast<long long>(action.domain().size())},
      {"diagonal_orbits", orbits},
      {"closed_subgroups", static_cast<long long>(lattice.closed_subgroups.size())},
      {"closed_quotients", static_cast<long long>(lattice.closed_quotients.size())},
  };

  rep.verdicts.push_back(antitone_verdict(lattice));

  {
    Verdict v;
    v.name = "diagonal_orbits_equal_weyl_order";
    v.method = "union-find over matrix generators acting on all chamber pairs, "
               "cross-checked against attained relative positions";
    v.pass = orbits == factorial(n);
    v.detail = std::to_string(orbits) + " orbits vs " +
               std::to_string(factorial(n)) + " Weyl elements";
    rep.verdicts.push_back(v);
  }

  {
    // closed quotients should be exactly the partial-flag quotients, ordered
    // like the Boolean lattice of type subsets
    Verdict v;
    v.name = "closed_quotients_boolean_cube";
    v.method = "matched every closed quotient against every partial-flag "
               "quotient and compared both orders";
    int r = n - 1;
    std::vector<galois::Partition> cube;
    std::vector<int> found;
    std::vector<std::string> names;
    bool ok = static_cast<int>(lattice.closed_quotients.size()) == (1 << r);
    for (int mask = 0; mask < (1 << r); ++mask) {
      std::vector<int> types;
      for (int t = 1; t <= r; ++t) {
        if (mask & (1 << (t - 1))) types.push_back(t);
      }
      galois::Partition p = building::partial_flag_quotient(n, q, types);
      int where = -1;
      for (size_t i = 0; i < lattice.closed_quotients.size(); ++i) {
        if (lattice.closed_quotients[i] == p) where = static_cast<int>(i);
      }
      if (where == -1) ok = false;
      cube.push_back(std::move(p));
      found.push_back(where);
      names.push_back(types_label(types));
    }
    for (int a = 0; a < (1 << r) && ok; ++a) {
      for (int b = 0; b < (1 << r); ++b) {
        bool subset = (a & b) == a;
        if (subset != galois::partition_leq(cube[a], cube[b])) {
          ok = false;
          break;
        }
      }
    }
    v.pass = ok;
    std::ostringstream detail;
    detail << "Boolean cube of dimension " << r << ": " << (ok ? "yes" : "no");
    if (ok) {
      for (int mask = 0; mask < (1 << r); ++mask) {
        detail << "; " << names[mask] << " -> Q" << found[mask];
      }
    }
    v.detail = detail.str();
    rep.verdicts.push_back(v);
  }

  rep.lattice = std::move(lattice);
  if (with_timing) rep.timing_ms = ms_since(start);
  return rep;
}

Report run_product(int m1, int m2, bool with_timing) {
  auto start = Clock::now();
  galois::PairAction action = galois::product_pair_action(m1, m2);
  galois::ClosedLattice lattice = galois::enumerate_closed(action);
  auto subgroups = coxeter::enumerate_subgroups(action.group());

  Report rep;
  rep.scenario = "product";
  rep.params = {{"m1", std::to_string(m1)}, {"m2", std::to_string(m2)}};
  rep.counts = {
      {"ground_size", action.ground_size()},
      {"domain_pairs", static_cast<long long>(action.domain().size())},
      {"subgroups", static_cast<long long>(subgroups.size())},
      {"closed_subgroups", static_cast<long long>(lattice.closed_subgroups.size())},
      {"closed_quotients", static_cast<long long>(lattice.closed_quotients.size())},
  };

  rep.verdicts.push_back(antitone_verdict(lattice));

  int ground = m1 * m2;
  std::vector<int> by_first(ground), by_second(ground);
  for (int x = 0; x < ground; ++x) {
    by_first[x] = x / m2;
    by_second[x] = x % m2;
  }
  std::vector<std::pair<std::string, galois::Partition>> expected;
  expected.emplace_back("one block", galois::Partition::single_block(ground));
  expected.emplace_back("first-factor projection",
                        galois::Partition(std::move(by_first)));
  expected.emplace_back("second-factor projection",
                        galois::Partition(std::move(by_second)));
  expected.emplace_back("identity", galois::Partition::discrete(ground));

  {
    Verdict v;
    v.name = "closed_quotients_are_factor_projections";
    v.method = "compared the closed quotient list against the four structural "
               "partitions";
    bool ok = lattice.closed_quotients.size() == expected.size();
    std::ostringstream detail;
    for (size_t i = 0; i < expected.size(); ++i) {
      int where = -1;
      for (size_t jj = 0; jj < lattice.closed_quotients.size(); ++jj) {
        if (lattice.closed_quotients[jj] == expected[i].second) {
          where = static_cast<int>(jj);
        }
      }
      if (where == -1) ok = false;
      if (i) detail << "; ";
      detail << expected[i].first
             << (where == -1 ? " -> missing" : " -> Q" + std::to_string(where));
    }
    v.pass = ok;
    v.detail = detail.str();
    rep.verdicts.push_back(v);
  }

  {
    Verdict v;
    v.name = "flip_closure_is_full_group";
    v.method = "closed the subgroup generated by the flip and compared with "
               "the full group";
    const auto& w = action.group();
    coxeter::Subgroup flip_sub =
        coxeter::subgroup_generated_by(w, std::span(&*w.flip, 1));
    coxeter::Subgroup closure = galois::close_subgroup(action, flip_sub);
    bool closure_full = closure == coxeter::full_subgroup(w);
    bool flip_closed = false;
    for (const auto& s : lattice.closed_subgroups) {
      if (s.members == flip_sub.members) flip_closed = true;
    }
    v.pass = closure_full && !flip_closed;
    v.detail = "closure of " + subgroup_label(w, flip_sub.members) +
               " has order " + std::to_string(closure.order()) +
               (flip_closed ? "; flip subgroup unexpectedly closed"
                            : "; flip subgroup is not closed");
    rep.verdicts.push_back(v);
  }

  rep.lattice = std::move(lattice);
  if (with_timing) rep.timing_ms = ms_since(start);
  return rep;
}

Report run_obstruction(const std::string& source_spec,
                       const std::string& target_spec, bool with_timing) {
  auto start = Clock::now();
  coxeter::CoxeterGroup source = parse_group_spec(source_spec);
  coxeter::CoxeterGroup target = parse_group_spec(target_spec);

  coxeter::HomPin pin{*source.flip, *target.flip};
  auto homs = coxeter::enumerate_homomorphisms(source, target, pin, false);
  long long injective =
      std::count_if(homs.begin(), homs.end(),
                    [](const coxeter::GroupHom& h) { return h.injective(); });

  Report rep;
  rep.scenario = "obstruction";
  rep.params = {{"source", source_spec},
                {"target", target_spec},
                {"pin", coxeter::cycle_string(*source.flip) + " -> " +
                            coxeter::cycle_string(*target.flip)}};
  rep.counts = {{"pinned_homomorphisms", static_cast<long long>(homs.size())},
                {"injective_homomorphisms", injective}};

  bool kernels_normal = true;
  for (const auto& hom : homs) {
    if (!coxeter::is_normal(hom.kernel, source)) kernels_normal = false;
    HomSummary summary;
    for (const auto& gen : source.generators) {
      summary.generator_images.push_back(coxeter::cycle_string(
          target.elements[hom.image[source.element_index(gen)]]));
    }
    for (int m : hom.kernel.members) {
      summary.kernel.push_back(coxeter::cycle_string(source.elements[m]));
    }
    summary.injective = hom.injective();
    if (hom.injective()) {
      summary.label = "injective";
    } else if (hom.kernel.order() == source.order()) {
      summary.label = "trivial homomorphism";
    } else if (source.family == coxeter::Family::InvolutionProduct &&
               hom.kernel.order() == 2) {
      int killed = -1;
      for (int g = 0; g < source.rank(); ++g) {
        if (hom.kernel.contains(source.element_index(source.generators[g]))) {
          killed = g;
        }
      }
      if (killed >= 0 && source.rank() == 2) {
        summary.label = "kills w_" + std::to_string(killed + 1) +
                        "; factors through the factor-" +
                        std::to_string(2 - killed) + " flip";
      } else {
        summary.label = "kernel " + subgroup_label(source, hom.kernel.members);
      }
    } else {
      bool all_even = true;
      for (int m : hom.kernel.members) {
        if (coxeter::inversion_count(source.elements[m]) % 2 != 0) {
          all_even = false;
        }
      }
      if (source.family == coxeter::Family::Symmetric && all_even &&
          2 * hom.kernel.order() == source.order()) {
        summary.label = "kills the alternating subgroup; factors through sign";
      } else {
        summary.label = "kernel " + subgroup_label(source, hom.kernel.members);
      }
    }
    rep.homs.push_back(std::move(summary));
  }

  {
    Verdict v;
    v.name = "pinned_hom_inventory";
    v.method = "generator-image search verified against defining relations, "
               "the full multiplication table, and kernel normality";
    v.pass = kernels_normal;
    v.detail = std::to_string(homs.size()) +
               " homomorphisms pinned by flip -> flip";
    rep.verdicts.push_back(v);
  }
  {
    Verdict v;
    v.name = "no_injective_pinned_hom";
    v.method = "kernel triviality of every enumerated homomorphism";
    v.pass = injective == 0;
    v.detail = std::to_string(injective) + " of " + std::to_string(homs.size()) +
               " pinned homomorphisms are injective";
    rep.verdicts.push_back(v);
  }

  if (with_timing) rep.timing_ms = ms_since(start);
  return rep;
}

namespace {

morphism::ChamberMap parse_map_spec(int n, int q, const std::string& map_spec,
                                    std::uint64_t seed,
                                    std::uint64_t* seed_used) {
  if (map_spec == "identity") return morphism::identity_map(n, q);
  if (map_spec == "random") {
    *seed_used = seed;
    return morphism::random_chamber_map(n, q, seed);
  }
  if (map_spec.rfind("random:", 0) == 0) {
    std::string digits = map_spec.substr(7);
    if (digits.empty() ||
        digits.find_first_not_of("0123456789") != std::string::npos) {
      throw ParseError("random map spec needs an unsigned seed: " + map_spec);
    }
    try {
      *seed_used = std::stoull(digits);
    } catch (const std::out_of_range&) {
      throw ParseError("random map seed does not fit in 64 bits: " + map_spec);
    }
    return morphism::random_chamber_map(n, q, *seed_used);
  }
  if (map_spec.rfind("matrix:", 0) == 0) {
    std::string body = map_spec.substr(7);
    for (char& c : body) {
      if (c == ',') c = ' ';
    }
    std::istringstream in(body);
    std::vector<int> entries;
    long long value;
    while (in >> value) {
      entries.push_back(static_cast<int>(((value % q) + q) % q));
    }
    if (!in.eof()) throw ParseError("matrix entries must be integers: " + map_spec);
    if (static_cast<int>(entries.size()) != n * n) {
      throw ParseError("matrix spec needs exactly " + std::to_string(n * n) +
                       " entries");
    }
    modq::Mat g(n, modq::Row(n));
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) g[i][j] = entries[i * n + j];
    }
    return morphism::matrix_map(n, q, g);
  }
  throw ParseError("map spec must be identity, matrix:<entries>, or "
                   "random[:<seed>]: " +
                   map_spec);
}

}  // namespace

Report run_embed_check(int n, int q, const std::string& map_spec,
                       std::uint64_t seed, bool with_timing) {
  auto start = Clock::now();
  std::uint64_t seed_used = 0;
  bool random = map_spec == "random" || map_spec.rfind("random:", 0) == 0;
  morphism::ChamberMap map = parse_map_spec(n, q, map_spec, seed, &seed_used);
  morphism::Checker checker(n, q);

  Report rep;
  rep.scenario = "embed-check";
  rep.params = {{"n", std::to_string(n)},
                {"q", std::to_string(q)},
                {"map", map_spec}};
  if (random) rep.params.emplace_back("seed", std::to_string(seed_used));
  rep.counts = {
      {"chambers", static_cast<long long>(checker.source_chambers().size())},
      {"opposite_pairs",
       static_cast<long long>(checker.source_opposite_pairs())}};

  auto opposition = checker.opposition_violation(map);
  {
    Verdict v;
    v.name = "opposition_preserving";
    v.method = "checked the image of every opposite source pair";
    v.pass = !opposition.has_value();
    v.detail = opposition ? opposition->describe() : "all opposite pairs preserved";
    rep.verdicts.push_back(v);
  }
  if (!opposition) {
    auto equivariance = checker.equivariance_violation(map);
    Verdict v;
    v.name = "weyl_equivariant";
    v.method = "compared the map with every Weyl element on every opposite pair";
    v.pass = !equivariance.has_value();
    v.detail =
        equivariance ? equivariance->describe() : "commutes with the Weyl action";
    rep.verdicts.push_back(v);
    if (!equivariance) {
      Verdict f;
      f.name = "face_maps_descend";
      f.method = "induced the quotient map for every type subset and "
                 "re-verified incidence between consecutive types";
      try {
        morphism::FaceMaps faces = checker.face_maps(map);
        f.pass = true;
        f.detail = std::to_string(faces.entries.size()) +
                   " type subsets descend; incidence preserved";
      } catch (const StructuralError& err) {
        f.pass = false;
        f.detail = err.what();
      }
      rep.verdicts.push_back(f);
    }
  }

  if (with_timing) rep.timing_ms = ms_since(start);
  return rep;
}

}  // namespace weylkit::scenario

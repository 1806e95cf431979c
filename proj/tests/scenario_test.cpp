#include <doctest.h>

#include <json.hpp>

#include "weylkit/scenario.hpp"

using namespace weylkit;
using scenario::Report;

namespace {

long long count_of(const Report& rep, const std::string& name) {
  for (const auto& [key, value] : rep.counts) {
    if (key == name) return value;
  }
  FAIL("missing count " << name);
  return -1;
}

}  // namespace

TEST_SUITE_BEGIN("scenario");

TEST_CASE("group specs parse or are rejected") {
  CHECK(scenario::parse_group_spec("S3").order() == 6);
  CHECK(scenario::parse_group_spec("s4").order() == 24);
  CHECK(scenario::parse_group_spec("Z2^3").order() == 8);
  CHECK(scenario::parse_group_spec("z2^2").order() == 4);
  CHECK_THROWS_AS(scenario::parse_group_spec("X3"), ParseError);
  CHECK_THROWS_AS(scenario::parse_group_spec("S"), ParseError);
  CHECK_THROWS_AS(scenario::parse_group_spec("Z2^"), ParseError);
  CHECK_THROWS_AS(scenario::parse_group_spec("S3x"), ParseError);
  CHECK_THROWS_AS(scenario::parse_group_spec(""), ParseError);
  CHECK_THROWS_AS(scenario::parse_group_spec("S0"), DomainError);
  CHECK_THROWS_AS(scenario::parse_group_spec("S99999"), ParseError);
}

TEST_CASE("flag building report carries the full correspondence") {
  Report rep = scenario::run_flag_building(3, 2);
  CHECK(rep.scenario == "flag-building");
  CHECK(rep.all_pass());
  CHECK(count_of(rep, "chambers") == 21);
  CHECK(count_of(rep, "opposite_pairs") == 168);
  CHECK(count_of(rep, "diagonal_orbits") == 6);
  CHECK(count_of(rep, "closed_subgroups") == 4);
  CHECK(count_of(rep, "closed_quotients") == 4);
  REQUIRE(rep.lattice.has_value());
  CHECK(rep.lattice->closed_subgroups.size() == 4);
  CHECK(rep.verdicts.size() == 3);
  CHECK_FALSE(rep.timing_ms.has_value());
  Report timed = scenario::run_flag_building(2, 2, true);
  CHECK(timed.timing_ms.has_value());
}

TEST_CASE("product report validates the factor structure") {
  Report rep = scenario::run_product(3, 4);
  CHECK(rep.scenario == "product");
  CHECK(rep.all_pass());
  CHECK(count_of(rep, "ground_size") == 12);
  CHECK(count_of(rep, "subgroups") == 5);
  CHECK(count_of(rep, "closed_quotients") == 4);
  REQUIRE(rep.lattice.has_value());
}

TEST_CASE("obstruction reports") {
  Report blocked = scenario::run_obstruction("S4", "S3");
  CHECK(blocked.scenario == "obstruction");
  CHECK(blocked.all_pass());
  CHECK(count_of(blocked, "pinned_homomorphisms") == 0);
  CHECK(count_of(blocked, "injective_homomorphisms") == 0);
  CHECK(blocked.homs.empty());
  CHECK_FALSE(blocked.lattice.has_value());

  Report dichotomy = scenario::run_obstruction("Z2^2", "S3");
  CHECK(dichotomy.all_pass());
  REQUIRE(dichotomy.homs.size() == 2);
  for (const auto& h : dichotomy.homs) {
    CHECK(h.kernel.size() == 2);
    CHECK_FALSE(h.injective);
    CHECK(h.label.find("factors through") != std::string::npos);
  }

  Report refuted = scenario::run_obstruction("S3", "S3");
  CHECK_FALSE(refuted.all_pass());
  CHECK(count_of(refuted, "pinned_homomorphisms") == 3);
  CHECK(count_of(refuted, "injective_homomorphisms") == 2);

  Report sign = scenario::run_obstruction("S3", "S2");
  CHECK(sign.all_pass());
  REQUIRE(sign.homs.size() == 1);
  CHECK(sign.homs[0].kernel.size() == 3);
  CHECK(sign.homs[0].label.find("sign") != std::string::npos);
}

TEST_CASE("embed-check reports") {
  Report ok = scenario::run_embed_check(3, 2, "identity");
  CHECK(ok.scenario == "embed-check");
  CHECK(ok.all_pass());
  CHECK(ok.verdicts.size() == 3);

  Report bad = scenario::run_embed_check(3, 2, "random");
  CHECK_FALSE(bad.all_pass());
  CHECK(bad.verdicts.size() >= 1);

  Report seeded = scenario::run_embed_check(3, 2, "random:12");
  Report seeded2 = scenario::run_embed_check(3, 2, "random", 12);
  REQUIRE(seeded.verdicts.size() == seeded2.verdicts.size());
  for (size_t i = 0; i < seeded.verdicts.size(); ++i) {
    CHECK(seeded.verdicts[i].pass == seeded2.verdicts[i].pass);
    CHECK(seeded.verdicts[i].detail == seeded2.verdicts[i].detail);
  }

  Report mat = scenario::run_embed_check(3, 2, "matrix:1,1,0,0,1,0,0,1,1");
  CHECK(mat.all_pass());

  CHECK_THROWS_AS(scenario::run_embed_check(3, 2, "matrix:1,1"), ParseError);
  CHECK_THROWS_AS(scenario::run_embed_check(3, 2, "matrix:1,1,1,1,1,1,1,1,1"),
                  DomainError);
  CHECK_THROWS_AS(scenario::run_embed_check(3, 2, "random:abc"), ParseError);
  CHECK_THROWS_AS(scenario::run_embed_check(3, 2, "bogus"), ParseError);
}

TEST_CASE("json serialization has the fixed shape") {
  Report rep = scenario::run_flag_building(3, 2);
  auto j = nlohmann::ordered_json::parse(rep.to_json());
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  CHECK(keys == std::vector<std::string>{"scenario", "params", "counts",
                                         "lattice", "verdicts", "timing_ms"});
  CHECK(j["scenario"] == "flag-building");
  CHECK(j["counts"]["chambers"] == 21);
  CHECK(j["timing_ms"].is_null());
  REQUIRE(j["lattice"].is_object());
  CHECK(j["lattice"]["nodes"].size() == 8);
  CHECK(j["lattice"]["pairing"].size() == 4);
  CHECK(j["lattice"]["group"]["order"] == 6);
  int subgroup_nodes = 0, quotient_nodes = 0;
  for (const auto& node : j["lattice"]["nodes"]) {
    if (node["kind"] == "subgroup") {
      ++subgroup_nodes;
      CHECK(node.contains("members"));
    } else {
      CHECK(node["kind"] == "quotient");
      ++quotient_nodes;
      CHECK(node.contains("blocks"));
    }
  }
  CHECK(subgroup_nodes == 4);
  CHECK(quotient_nodes == 4);

  auto jo = nlohmann::ordered_json::parse(
      scenario::run_obstruction("Z2^2", "S3").to_json());
  CHECK(jo["lattice"].is_null());
  bool found_homs = false;
  for (const auto& v : jo["verdicts"]) {
    if (v.contains("homomorphisms")) {
      found_homs = true;
      CHECK(v["homomorphisms"].size() == 2);
    }
  }
  CHECK(found_homs);
}

TEST_CASE("serialization is deterministic") {
  CHECK(scenario::run_flag_building(3, 2).to_json() ==
        scenario::run_flag_building(3, 2).to_json());
  CHECK(scenario::run_embed_check(3, 2, "random").to_json() ==
        scenario::run_embed_check(3, 2, "random").to_json());
}

TEST_CASE("dot and text renderings") {
  Report rep = scenario::run_flag_building(3, 2);
  std::string dot = rep.to_dot();
  CHECK(dot.rfind("digraph", 0) == 0);
  CHECK(dot.find("cluster_subgroups") != std::string::npos);
  CHECK(dot.find("style=dashed") != std::string::npos);
  std::string text = rep.to_text();
  CHECK(text.find("result: PASS") != std::string::npos);
  CHECK(rep.render("json") == rep.to_json());
  CHECK_THROWS_AS(rep.render("yaml"), ParseError);
  CHECK_THROWS_AS(scenario::run_obstruction("S4", "S3").to_dot(),
                  UnsupportedError);
}

TEST_SUITE_END();

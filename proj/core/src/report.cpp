#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "weylkit/scenario.hpp"

namespace weylkit::scenario {

namespace {

using nlohmann::ordered_json;

std::string subgroup_text(const coxeter::CoxeterGroup& w,
                          const std::vector<int>& members) {
  if (members.size() > 6) {
    return "order " + std::to_string(members.size());
  }
  std::string out = "{";
  for (size_t i = 0; i < members.size(); ++i) {
    if (i) out += ", ";
    out += coxeter::cycle_string(w.elements[members[i]]);
  }
  return out + "}";
}

std::string quotient_text(const galois::Partition& p) {
  return std::to_string(p.block_count()) +
         (p.block_count() == 1 ? " block" : " blocks");
}

ordered_json lattice_json(const galois::ClosedLattice& lat) {
  ordered_json out;
  ordered_json group;
  group["order"] = lat.group->order();
  std::vector<std::string> elements;
  for (const auto& e : lat.group->elements) {
    elements.push_back(coxeter::cycle_string(e));
  }
  group["elements"] = elements;
  out["group"] = std::move(group);

  ordered_json nodes = ordered_json::array();
  for (size_t i = 0; i < lat.closed_subgroups.size(); ++i) {
    ordered_json node;
    node["id"] = "S" + std::to_string(i);
    node["kind"] = "subgroup";
    node["members"] = lat.closed_subgroups[i].members;
    nodes.push_back(std::move(node));
  }
  for (size_t j = 0; j < lat.closed_quotients.size(); ++j) {
    ordered_json node;
    node["id"] = "Q" + std::to_string(j);
    node["kind"] = "quotient";
    node["blocks"] = lat.closed_quotients[j].blocks();
    nodes.push_back(std::move(node));
  }
  out["nodes"] = std::move(nodes);

  ordered_json hasse;
  ordered_json sub_edges = ordered_json::array();
  for (auto [lo, hi] : lat.subgroup_hasse) {
    sub_edges.push_back({"S" + std::to_string(lo), "S" + std::to_string(hi)});
  }
  ordered_json quo_edges = ordered_json::array();
  for (auto [lo, hi] : lat.quotient_hasse) {
    quo_edges.push_back({"Q" + std::to_string(lo), "Q" + std::to_string(hi)});
  }
  hasse["subgroups"] = std::move(sub_edges);
  hasse["quotients"] = std::move(quo_edges);
  out["hasse"] = std::move(hasse);

  ordered_json pairing = ordered_json::array();
  for (size_t i = 0; i < lat.pairing.size(); ++i) {
    pairing.push_back(
        {"S" + std::to_string(i), "Q" + std::to_string(lat.pairing[i])});
  }
  out["pairing"] = std::move(pairing);
  return out;
}

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

bool Report::all_pass() const {
  return std::all_of(verdicts.begin(), verdicts.end(),
                     [](const Verdict& v) { return v.pass; });
}

std::string Report::to_json() const {
  ordered_json j;
  j["scenario"] = scenario;

  ordered_json params_obj;
  for (const auto& [key, value] : params) params_obj[key] = value;
  j["params"] = std::move(params_obj);

  ordered_json counts_obj;
  for (const auto& [key, value] : counts) counts_obj[key] = value;
  j["counts"] = std::move(counts_obj);

  j["lattice"] = lattice ? lattice_json(*lattice) : ordered_json(nullptr);

  ordered_json verdicts_arr = ordered_json::array();
  for (const auto& v : verdicts) {
    ordered_json vj;
    vj["name"] = v.name;
    vj["pass"] = v.pass;
    vj["method"] = v.method;
    vj["detail"] = v.detail;
    if (v.name == "pinned_hom_inventory" && !homs.empty()) {
      ordered_json homs_arr = ordered_json::array();
      for (const auto& h : homs) {
        ordered_json hj;
        hj["generator_images"] = h.generator_images;
        hj["kernel"] = h.kernel;
        hj["injective"] = h.injective;
        hj["label"] = h.label;
        homs_arr.push_back(std::move(hj));
      }
      vj["homomorphisms"] = std::move(homs_arr);
    }
    verdicts_arr.push_back(std::move(vj));
  }
  j["verdicts"] = std::move(verdicts_arr);

  j["timing_ms"] = timing_ms ? ordered_json(*timing_ms) : ordered_json(nullptr);
  return j.dump(2) + "\n";
}

std::string Report::to_dot() const {
  if (!lattice) {
    throw UnsupportedError("dot output needs a lattice scenario (" + scenario +
                           " has none)");
  }
  const auto& lat = *lattice;
  std::ostringstream out;
  out << "digraph closed_lattice {\n";
  out << "  rankdir=BT;\n";
  out << "  node [shape=box, fontname=\"Helvetica\"];\n";
  out << "  subgraph cluster_subgroups {\n    label=\"closed subgroups\";\n";
  for (size_t i = 0; i < lat.closed_subgroups.size(); ++i) {
    out << "    s" << i << " [label=\"S" << i << " "
        << dot_escape(subgroup_text(*lat.group, lat.closed_subgroups[i].members))
        << "\"];\n";
  }
  for (auto [lo, hi] : lat.subgroup_hasse) {
    out << "    s" << lo << " -> s" << hi << ";\n";
  }
  out << "  }\n";
  out << "  subgraph cluster_quotients {\n    label=\"closed quotients\";\n";
  for (size_t j = 0; j < lat.closed_quotients.size(); ++j) {
    out << "    q" << j << " [label=\"Q" << j << " "
        << quotient_text(lat.closed_quotients[j]) << "\"];\n";
  }
  for (auto [lo, hi] : lat.quotient_hasse) {
    out << "    q" << lo << " -> q" << hi << ";\n";
  }
  out << "  }\n";
  for (size_t i = 0; i < lat.pairing.size(); ++i) {
    out << "  s" << i << " -> q" << lat.pairing[i]
        << " [style=dashed, dir=none, constraint=false];\n";
  }
  out << "}\n";
  return out.str();
}

std::string Report::to_text() const {
  std::ostringstream out;
  out << "scenario: " << scenario << "\n";
  out << "params:\n";
  for (const auto& [key, value] : params) {
    out << "  " << key << " = " << value << "\n";
  }
  out << "counts:\n";
  for (const auto& [key, value] : counts) {
    out << "  " << key << " = " << value << "\n";
  }
  if (lattice) {
    const auto& lat = *lattice;
    out << "closed subgroups <-> closed quotients:\n";
    for (size_t i = 0; i < lat.closed_subgroups.size(); ++i) {
      out << "  S" << i << " "
          << subgroup_text(*lat.group, lat.closed_subgroups[i].members)
          << "  <->  Q" << lat.pairing[i] << " ("
          << quotient_text(lat.closed_quotients[lat.pairing[i]]) << ")\n";
    }
    out << "subgroup covers:";
    if (lat.subgroup_hasse.empty()) out << " (none)";
    for (auto [lo, hi] : lat.subgroup_hasse) {
      out << " S" << lo << "<S" << hi;
    }
    out << "\nquotient covers:";
    if (lat.quotient_hasse.empty()) out << " (none)";
    for (auto [lo, hi] : lat.quotient_hasse) {
      out << " Q" << lo << "<Q" << hi;
    }
    out << "\n";
  }
  if (!homs.empty()) {
    out << "pinned homomorphisms:\n";
    for (size_t i = 0; i < homs.size(); ++i) {
      out << "  [" << i + 1 << "]";
      if (homs[i].generator_images.empty()) out << " (rank 0)";
      for (size_t g = 0; g < homs[i].generator_images.size(); ++g) {
        out << (g ? ", " : " ") << "g" << g + 1 << " -> "
            << homs[i].generator_images[g];
      }
      out << " | kernel {";
      for (size_t k = 0; k < homs[i].kernel.size(); ++k) {
        out << (k ? ", " : "") << homs[i].kernel[k];
      }
      out << "} | " << homs[i].label << "\n";
    }
  }
  out << "verdicts:\n";
  for (const auto& v : verdicts) {
    out << "  [" << (v.pass ? "PASS" : "FAIL") << "] " << v.name << ": "
        << v.detail << "\n";
    out << "        method: " << v.method << "\n";
  }
  if (timing_ms) out << "timing_ms: " << *timing_ms << "\n";
  out << "result: " << (all_pass() ? "PASS" : "FAIL") << "\n";
  return out.str();
}

std::string Report::render(const std::string& format) const {
  if (format == "json") return to_json();
  if (format == "dot") return to_dot();
  if (format == "text") return to_text();
  throw ParseError("unknown format: " + format + " (expected json, dot, text)");
}

}  // namespace weylkit::scenario

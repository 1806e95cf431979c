// End-to-end checks of the installed command-line surface: exit codes,
// output formats, determinism, --out. Takes the tool path as argv[1].

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;
};

std::string g_tool;
int g_failures = 0;

RunResult run(const std::string& args) {
  std::string cmd = g_tool + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) {
    std::cerr << "cannot launch: " << cmd << "\n";
    std::exit(2);
  }
  RunResult result;
  char buffer[4096];
  size_t got;
  while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0) {
    result.output.append(buffer, got);
  }
  int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

void expect(bool ok, const std::string& what) {
  if (ok) {
    std::printf("ok: %s\n", what.c_str());
  } else {
    ++g_failures;
    std::printf("FAILED: %s\n", what.c_str());
  }
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: cli_integration <tool-path>\n";
    return 2;
  }
  g_tool = argv[1];

  // exit code 0 and a parseable report with the fixed key set
  auto flag = run("flag-building --n 3 --q 2");
  expect(flag.exit_code == 0, "flag-building exits 0");
  auto j = nlohmann::ordered_json::parse(flag.output, nullptr, false);
  expect(!j.is_discarded(), "flag-building emits valid JSON");
  if (!j.is_discarded()) {
    std::vector<std::string> keys;
    for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
    expect(keys == std::vector<std::string>{"scenario", "params", "counts",
                                            "lattice", "verdicts", "timing_ms"},
           "top-level JSON keys in fixed order");
    expect(j["counts"]["chambers"] == 21 && j["counts"]["opposite_pairs"] == 168,
           "frozen counts for n=3 q=2");
    expect(j["lattice"]["nodes"].size() == 8, "lattice carries 8 nodes");
    expect(j["timing_ms"].is_null(), "timing omitted by default");
  }

  // identical invocations are byte-identical
  auto flag2 = run("flag-building --n 3 --q 2");
  expect(flag.output == flag2.output, "repeated invocations byte-identical");
  auto rand1 = run("embed-check --n 3 --q 2 --map random --seed 99");
  auto rand2 = run("embed-check --n 3 --q 2 --map random --seed 99");
  expect(rand1.output == rand2.output, "seeded random runs byte-identical");
  expect(rand1.exit_code == 2, "random map fails a verdict (exit 2)");

  // --out writes exactly what stdout would carry
  std::string out_path = "cli_integration_out.json";
  auto with_out = run("flag-building --n 3 --q 2 --out " + out_path);
  expect(with_out.exit_code == 0 && with_out.output.empty(),
         "--out suppresses stdout");
  std::ifstream in(out_path, std::ios::binary);
  std::stringstream file_content;
  file_content << in.rdbuf();
  expect(file_content.str() == flag.output, "--out file matches stdout bytes");
  std::remove(out_path.c_str());

  // formats
  auto dot = run("flag-building --n 3 --q 2 --format dot");
  expect(dot.exit_code == 0 && dot.output.rfind("digraph", 0) == 0,
         "dot output starts with digraph");
  auto text = run("flag-building --n 3 --q 2 --format text");
  expect(text.exit_code == 0 &&
             text.output.find("result: PASS") != std::string::npos,
         "text output reports PASS");
  auto timed = run("flag-building --n 2 --q 2 --timing");
  auto jt = nlohmann::ordered_json::parse(timed.output, nullptr, false);
  expect(!jt.is_discarded() && jt["timing_ms"].is_number(),
         "--timing records a number");

  // verdict failure maps to exit 2
  auto refuted = run("obstruct --source S3 --target S3");
  expect(refuted.exit_code == 2, "refuted obstruction exits 2");
  auto holds = run("obstruct --source S4 --target S3");
  expect(holds.exit_code == 0, "blocked obstruction exits 0");

  // input errors map to exit 3
  expect(run("flag-building --n 3 --q 4").exit_code == 3,
         "non-prime field exits 3");
  expect(run("flag-building --n 9 --q 2").exit_code == 3, "oversize n exits 3");
  expect(run("obstruct --source X3 --target S3").exit_code == 3,
         "bad group spec exits 3");
  expect(run("obstruct --source S3 --target S3 --format dot").exit_code == 3,
         "dot without a lattice exits 3");
  expect(run("embed-check --n 3 --q 2 --map matrix:1,2").exit_code == 3,
         "short matrix spec exits 3");
  expect(run("embed-check --n 2 --q 2 --map matrix:1,1,1,1").exit_code == 3,
         "singular matrix exits 3");
  expect(run("bogus").exit_code == 3, "unknown subcommand exits 3");
  expect(run("flag-building --n 3").exit_code == 3, "missing option exits 3");
  expect(run("--help").exit_code == 0, "--help exits 0");

  // embed-check happy path with an explicit matrix
  expect(run("embed-check --n 3 --q 2 --map matrix:1,1,0,0,1,0,0,1,1")
                 .exit_code == 0,
         "unipotent matrix map passes");

  std::printf("cli integration: %s\n", g_failures == 0 ? "all ok" : "FAILURES");
  return g_failures == 0 ? 0 : 1;
}

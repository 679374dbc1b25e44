#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <stdexcept>
#include <string>

#include <nlohmann/json.hpp>

#include "csmlap/csm.hpp"
#include "csmlap/matrix.hpp"
#include "csmlap/matrix_io.hpp"

// Drives the installed binary end to end: every subcommand, both output
// formats, and the error paths.  Expected values come from the library the
// binary links against, so the checks stay exact.

namespace {

using namespace csmlap;

struct CliResult {
  int code = -1;
  std::string out;
};

std::string data_path(const std::string& name) {
  return std::string(CSMLAP_DATA_DIR) + "/" + name;
}

CliResult run_cli(const std::string& args, bool merge_stderr = false) {
  std::string cmd = std::string(CSMLAP_BIN) + " " + args;
  cmd += merge_stderr ? " 2>&1" : " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) throw std::runtime_error("popen failed: " + cmd);
  CliResult r;
  char buf[4096];
  size_t got = 0;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

bool contains(const std::string& text, const std::string& needle) {
  return text.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("det agrees across algorithms and formats") {
  std::string m = data_path("int2.txt");
  for (const char* algo : {"leibniz", "laplace", "condensation"}) {
    CliResult r = run_cli("det --matrix " + m + " --algo " + std::string(algo));
    CAPTURE(algo);
    CHECK(r.code == 0);
    CHECK(r.out == "-2\n");
  }
  CliResult rows = run_cli("det --matrix " + m + " --algo laplace --rows 1,2 --variant rank");
  CHECK(rows.code == 0);
  CHECK(rows.out == "-2\n");

  CliResult j = run_cli("det --matrix " + m + " --format structured");
  CHECK(j.code == 0);
  auto parsed = nlohmann::json::parse(j.out);
  CHECK(parsed["algo"] == "leibniz");
  CHECK(parsed["determinant"] == "-2");
}

TEST_CASE("det matches the library on every bundled example") {
  for (const char* name : {"int2.txt", "sym3.txt", "rat3.txt", "mod7_4.txt"}) {
    std::string path = data_path(name);
    LabeledMatrix a = read_matrix_file(path);
    std::string expected = det_leibniz(a).str() + "\n";
    CliResult r = run_cli("det --matrix " + path);
    CAPTURE(name);
    CHECK(r.code == 0);
    CHECK(r.out == expected);
  }
}

TEST_CASE("verify-laplace checks all variants against the oracle") {
  CliResult r = run_cli("verify-laplace --matrix " + data_path("mod7_4.txt") + " --rows 2,3");
  CHECK(r.code == 0);
  CHECK(contains(r.out, "permutation oracle"));
  CHECK(contains(r.out, "verdict: IDENTITY HOLDS"));

  CliResult j = run_cli("verify-laplace --matrix " + data_path("rat3.txt") +
                        " --rows 1 --format structured");
  CHECK(j.code == 0);
  auto parsed = nlohmann::json::parse(j.out);
  CHECK(parsed["equal"] == true);
  CHECK(parsed["oracle"] == parsed["position_variant"]);
  CHECK(parsed["oracle"] == parsed["rank_variant"]);
  CHECK(parsed["oracle"] == parsed["complement_form"]);
}

TEST_CASE("verify-csm reports the identity on the symbolic example") {
  std::string args = "verify-csm --matrix " + data_path("sym3.txt") + " --F 2 --G 2 --I 1";
  CliResult r = run_cli(args);
  CHECK(r.code == 0);
  CHECK(contains(r.out, "terms (2):"));
  CHECK(contains(r.out, "verdict: IDENTITY HOLDS"));

  CliResult j = run_cli(args + " --format structured");
  CHECK(j.code == 0);
  auto parsed = nlohmann::json::parse(j.out);
  CHECK(parsed["equal"] == true);
  CHECK(parsed["all_ok"] == true);
  CHECK(parsed["lhs"] == parsed["rhs"]);

  LabeledMatrix a = read_matrix_file(data_path("sym3.txt"));
  RingValue lhs = csm_lhs(a, IndexSubset::of_labels(a.rows(), {Label::of(2)}),
                          IndexSubset::of_labels(a.cols(), {Label::of(2)}));
  CHECK(parsed["lhs"] == lhs.str());
}

TEST_CASE("expand traces the cancellation") {
  CliResult r = run_cli("expand --matrix " + data_path("sym3.txt") + " --F 2 --G 2 --I 1");
  CHECK(r.code == 0);
  CHECK(contains(r.out, "expanded products (8):"));
  CHECK(contains(r.out, "canceling pairs (1):"));
  CHECK(contains(r.out, "common factor = a22^1"));
  CHECK(contains(r.out, "verdict: IDENTITY HOLDS"));

  CliResult j = run_cli("expand --matrix " + data_path("sym3.txt") +
                        " --F 2 --G 2 --I 1 --format structured");
  CHECK(j.code == 0);
  auto parsed = nlohmann::json::parse(j.out);
  CHECK(parsed["equal"] == true);
  CHECK(parsed["products"].size() == 8);
  CHECK(parsed["canceling_pairs"].size() == 1);
}

TEST_CASE("fuzz is deterministic for a fixed seed") {
  std::string args = "fuzz --trials 5 --seed 7 --ring rational";
  CliResult a = run_cli(args);
  CliResult b = run_cli(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(contains(a.out, "trials run: 5"));
  CHECK(contains(a.out, "result: PASS"));

  CliResult j = run_cli(args + " --format structured");
  CHECK(j.code == 0);
  auto parsed = nlohmann::json::parse(j.out);
  CHECK(parsed["passed"] == true);
  CHECK(parsed["trials_run"] == 5);
}

TEST_CASE("fuzz exhaustive sweep covers every binary matrix") {
  CliResult r = run_cli("fuzz --seed 1 --ring mod:2 --exhaustive --max-n 3");
  CHECK(r.code == 0);
  CHECK(contains(r.out, "trials run: 512"));
  CHECK(contains(r.out, "result: PASS"));
}

TEST_CASE("build-initialized prints all three derived matrices") {
  std::string args = "build-initialized --matrix " + data_path("sym6.txt") +
                     " --F 2,4 --G 3,5 --I 1,6";
  CliResult r = run_cli(args);
  CHECK(r.code == 0);
  CHECK(contains(r.out, "doubled (common rows and columns duplicated):"));
  CHECK(contains(r.out, "initialized (zero blocks placed):"));
  CHECK(contains(r.out, "cleaned (columns summed, rows subtracted):"));
  CHECK(contains(r.out, "3+"));

  CliResult j = run_cli(args + " --format structured");
  CHECK(j.code == 0);
  auto parsed = nlohmann::json::parse(j.out);
  LabeledMatrix a = read_matrix_file(data_path("sym6.txt"));
  CsmPartition p = CsmPartition::of_labels(a, {Label::of(2), Label::of(4)},
                                           {Label::of(3), Label::of(5)},
                                           {Label::of(1), Label::of(6)});
  CHECK(parsed["initialized"] == matrix_file_text(build_initialized(a, p)));
  CHECK(parsed["cleaned"] == matrix_file_text(build_tilde(build_initialized(a, p))));
}

TEST_CASE("usage errors exit with code 2") {
  CliResult missing = run_cli("det --matrix /nonexistent/matrix.txt", true);
  CHECK(missing.code == 2);
  CHECK(contains(missing.out, "error:"));

  CliResult bad_algo = run_cli("det --matrix " + data_path("int2.txt") + " --algo qr", true);
  CHECK(bad_algo.code == 2);

  CliResult no_seed = run_cli("fuzz --trials 5", true);
  CHECK(no_seed.code == 2);

  CliResult overlap =
      run_cli("verify-csm --matrix " + data_path("sym3.txt") + " --F 2 --G 2 --I 2", true);
  CHECK(overlap.code == 2);
  CHECK(contains(overlap.out, "error:"));

  CliResult no_sub = run_cli("", true);
  CHECK(no_sub.code == 2);
}

TEST_CASE("help exits cleanly") {
  CliResult r = run_cli("--help");
  CHECK(r.code == 0);
  CHECK(contains(r.out, "det"));
  CHECK(contains(r.out, "verify-csm"));
  CHECK(contains(r.out, "fuzz"));
}

// End-to-end checks for the grodeg binary.  The binary path arrives as the
// first command-line argument (wired through ctest); everything else is
// forwarded to doctest.

#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <string>

#include <grodeg/formats.hpp>

using json = nlohmann::json;
using grodeg::fnv1a_hex;

namespace {

std::string g_binary;
std::string g_dir;

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

void spit(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  f << text;
}

struct RunResult {
  int code = -1;
  std::string out;
  std::string err;
};

RunResult run(const std::string& args) {
  std::string out_path = g_dir + "/cap.out";
  std::string err_path = g_dir + "/cap.err";
  std::string cmd =
      "'" + g_binary + "' " + args + " > " + out_path + " 2> " + err_path;
  int status = std::system(cmd.c_str());
  RunResult r;
  if (WIFEXITED(status)) r.code = WEXITSTATUS(status);
  r.out = slurp(out_path);
  r.err = slurp(err_path);
  return r;
}

std::string fixture(const std::string& name, const std::string& text) {
  std::string path = g_dir + "/" + name;
  spit(path, text);
  return path;
}

const std::string kTwistedCubic =
    "# twisted cubic\n"
    "vars: 4\n"
    "field: QQ\n"
    "order: lex\n"
    "\n"
    "X0*X2 - X1^2\n"
    "X0*X3 - X1*X2\n"
    "X1*X3 - X2^2\n";

std::string tc_path() { return fixture("tc.ideal", kTwistedCubic); }

}  // namespace

TEST_CASE("gb report") {
  std::string path = tc_path();
  RunResult r = run("gb " + path);
  REQUIRE(r.code == 0);
  json rep = json::parse(r.out);
  CHECK(rep["verb"] == "gb");
  CHECK(rep["provenance"]["input"] == path);
  CHECK(rep["provenance"]["input_fnv1a"] == fnv1a_hex(kTwistedCubic));
  CHECK(rep["provenance"]["field"] == "QQ");
  CHECK(rep["provenance"]["order"] == "lex");
  CHECK(rep["provenance"]["budgets"]["degree_ceiling"] == 12);
  CHECK(rep["basis"] ==
        json({"X0*X2 - X1^2", "X0*X3 - X1*X2", "X1*X3 - X2^2"}));
  CHECK(rep["initial_ideal"] == json({"X1*X3", "X0*X3", "X0*X2"}));
  CHECK(rep["reduced"] == true);
  CHECK(rep["size"] == 3);
}

TEST_CASE("initial report carries the complex") {
  RunResult r = run("initial " + tc_path());
  REQUIRE(r.code == 0);
  json rep = json::parse(r.out);
  CHECK(rep["squarefree"] == true);
  CHECK(rep["complex"]["n"] == 3);
  CHECK(rep["complex"]["facets"] == json({{0, 1}, {1, 2}, {2, 3}}));
}

TEST_CASE("field and order flags override the header") {
  RunResult r = run("gb " + tc_path() + " --field Fp:5 --order degrevlex");
  REQUIRE(r.code == 0);
  json rep = json::parse(r.out);
  CHECK(rep["provenance"]["field"] == "Fp:5");
  CHECK(rep["provenance"]["order"] == "degrevlex");
}

TEST_CASE("homology of the square") {
  std::string path =
      fixture("square.cx", R"({"n": 3, "edges": [[0,1],[1,2],[2,3],[0,3]]})");
  RunResult r = run("homology " + path);
  REQUIRE(r.code == 0);
  json rep = json::parse(r.out);
  CHECK(rep["nverts"] == 4);
  CHECK(rep["dim"] == 1);
  CHECK(rep["ranks"]["-1"] == 0);
  CHECK(rep["ranks"]["0"] == 0);
  CHECK(rep["ranks"]["1"] == 1);
  CHECK(rep["acyclic"] == false);
  CHECK(rep["cohen_macaulay"] == true);
  CHECK(rep["a_invariant_negative"] == false);
}

TEST_CASE("collapse of the square") {
  std::string path =
      fixture("square.cx", R"({"n": 3, "edges": [[0,1],[1,2],[2,3],[0,3]]})");
  RunResult r = run("collapse " + path);
  REQUIRE(r.code == 0);
  json rep = json::parse(r.out);
  CHECK(rep["is_tree"] == false);
  CHECK(rep["free_vertices"] == json::array());
  CHECK(rep["ell"] == 0);
  CHECK(rep["core"] == json({0, 1, 2, 3}));
  CHECK(rep["branches"]["distinct"] == 1);
  CHECK(rep["branches"]["ell_invariant"] == true);
}

TEST_CASE("smooth verdicts and the power bound") {
  std::string path = tc_path();
  RunResult full = run("smooth " + path);
  REQUIRE(full.code == 0);
  json rep = json::parse(full.out);
  CHECK(rep["verdict"] == "smooth");
  CHECK(rep["witness"].is_null());
  CHECK(rep["certified_powers"] == json({2, 2, 2, 2}));

  RunResult starved = run("smooth " + path + " --power-bound 1");
  CHECK(starved.code == 3);
  json rep2 = json::parse(starved.out);
  CHECK(rep2["verdict"] == "inconclusive");
  CHECK(rep2["certified_powers"] == json({0, 0, 0, 0}));
  CHECK(rep2["minors_used"] == rep2["minors_total"]);
  CHECK(rep2["provenance"]["budgets"]["power_bound"] == 1);
}

TEST_CASE("genus summary") {
  RunResult r = run("genus " + tc_path());
  REQUIRE(r.code == 0);
  json rep = json::parse(r.out);
  CHECK(rep["smooth"] == true);
  CHECK(rep["genus"] == 0);
  CHECK(rep["degree"] == 3);
  CHECK(rep["singular_points"] == json::array());
  CHECK(rep["hilbert_polynomial"] == json({1, 3}));
}

TEST_CASE("projection from P0") {
  RunResult r = run("project " + tc_path());
  REQUIRE(r.code == 0);
  json rep = json::parse(r.out);
  CHECK(rep["nvars"] == 3);
  CHECK(rep["variable_map"] == json({1, 2, 3}));
  CHECK(rep["basis"] == json({"X0*X2 - X1^2"}));
  CHECK(rep["initial_ideal"] == json({"X0*X2"}));
}

TEST_CASE("fiber over a coordinate point") {
  RunResult r = run("fiber " + tc_path() + " --vertex 3");
  REQUIRE(r.code == 0);
  json rep = json::parse(r.out);
  CHECK(rep["q"] == "[0:0:0:1]");
  CHECK(rep["witness_index"] == 3);
  CHECK(rep["on_curve"] == true);
  CHECK(rep["q_singular"] == false);
  CHECK(rep["image_singular"] == false);
  CHECK(rep["transfer_agrees"] == true);
}

TEST_CASE("sweep over the triangle stays singular") {
  std::string path = fixture(
      "tri.sweep",
      R"({"complex": {"n": 2, "edges": [[0,1],[1,2],[0,2]]},
          "order": "lex", "field": "Fp:2", "coeff_grid": "full"})");
  RunResult r = run("sweep " + path);
  REQUIRE(r.code == 0);
  json rep = json::parse(r.out);
  CHECK(rep["is_tree"] == false);
  CHECK(rep["slots"] == 5);
  CHECK(rep["pass"] == true);
  CHECK(rep["report"]["generated"] == 32);
  CHECK(rep["report"]["valid"] == 32);
  CHECK(rep["report"]["singular"] == 32);
  CHECK(rep["report"]["smooth"] == 0);
  CHECK(rep["report"]["inconclusive"] == 0);
  CHECK(rep["report"]["alarms"] == json::array());
  CHECK(rep["report"]["singular_points"] == json({"[1:0:0]"}));
  CHECK(r.err.find("result:     PASS") != std::string::npos);
}

TEST_CASE("sweep over the path finds a smoothing") {
  std::string path = fixture(
      "path4.sweep",
      R"({"complex": {"n": 3, "edges": [[0,1],[1,2],[2,3]]},
          "order": "lex", "field": "Fp:2", "coeff_grid": "full"})");
  RunResult r = run("sweep " + path);
  REQUIRE(r.code == 0);
  json rep = json::parse(r.out);
  CHECK(rep["is_tree"] == true);
  CHECK(rep["found"] == true);
  CHECK(rep["report"]["generated"] == 1090);
  CHECK(rep["smoothing"]["genus"] == 0);
  CHECK(rep["smoothing"]["degree"] == 3);
  CHECK(rep["smoothing"]["generators"].size() == 3);
  CHECK(r.err.find("smoothing found") != std::string::npos);
}

TEST_CASE("sweep truncation exits with the budget code") {
  std::string path = fixture(
      "cap.sweep",
      R"({"complex": {"n": 3, "edges": [[0,1],[1,2],[2,3],[0,3]]},
          "order": "lex", "field": "Fp:2", "coeff_grid": "full",
          "max_candidates": 5})");
  RunResult r = run("sweep " + path);
  CHECK(r.code == 3);
  json rep = json::parse(r.out);
  CHECK(rep["pass"] == false);
  CHECK(rep["report"]["truncated"] == true);
  CHECK(rep["report"]["valid"] == 5);
}

TEST_CASE("input errors exit 2, budget errors exit 3") {
  RunResult missing = run("gb " + g_dir + "/missing.ideal");
  CHECK(missing.code == 2);
  CHECK(missing.err.find("cannot read file") != std::string::npos);
  CHECK(missing.out.empty());

  std::string bad = fixture("bad.ideal", "vars: 2\nX0 + X5\n");
  RunResult parse = run("gb " + bad);
  CHECK(parse.code == 2);
  CHECK(parse.err.find("bad.ideal:2:6") != std::string::npos);

  std::string partial = fixture(
      "partial.ideal", "vars: 4\norder: lex\nX0*X2 - X1^2\nX0*X3 - X1*X2\n");
  RunResult ceiling = run("gb " + partial + " --degree-ceiling 2");
  CHECK(ceiling.code == 3);
  CHECK(ceiling.err.find("budget:") != std::string::npos);

  RunResult noverb = run("");
  CHECK(noverb.code == 2);
}

TEST_CASE("--out duplicates stdout bytes") {
  std::string out = g_dir + "/report.json";
  RunResult r = run("gb " + tc_path() + " --out " + out);
  REQUIRE(r.code == 0);
  CHECK(slurp(out) == r.out);
}

TEST_CASE("reruns are byte-identical") {
  std::string ideal = tc_path();
  RunResult a = run("genus " + ideal);
  RunResult b = run("genus " + ideal);
  CHECK(a.out == b.out);

  std::string sweep = fixture(
      "tri.sweep",
      R"({"complex": {"n": 2, "edges": [[0,1],[1,2],[0,2]]},
          "order": "lex", "field": "Fp:2", "coeff_grid": "full"})");
  RunResult c = run("sweep " + sweep);
  RunResult d = run("sweep " + sweep);
  CHECK(c.out == d.out);
}

TEST_CASE("verify-examples recertifies the corpus") {
  RunResult r = run("verify-examples");
  REQUIRE(r.code == 0);
  json rep = json::parse(r.out);
  CHECK(rep["all_pass"] == true);
  CHECK(rep["checks"].size() == 14);
  for (const json& c : rep["checks"]) CHECK(c["pass"] == true);
  CHECK(r.err.find("FAIL") == std::string::npos);
}

int main(int argc, char** argv) {
  if (argc < 2) {
    std::fprintf(stderr, "usage: test_cli <grodeg-binary> [doctest args]\n");
    return 1;
  }
  g_binary = argv[1];
  char tmpl[] = "/tmp/grodeg-cli-XXXXXX";
  if (!mkdtemp(tmpl)) {
    std::perror("mkdtemp");
    return 1;
  }
  g_dir = tmpl;
  doctest::Context ctx;
  ctx.applyCommandLine(argc - 1, argv + 1);
  return ctx.run();
}

#define DOCTEST_CONFIG_IMPLEMENT
#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"

namespace {

std::string g_binary;
int g_counter = 0;

struct CliResult {
  int code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

CliResult run_cli(const std::string& args) {
  const std::string tag = std::to_string(g_counter++);
  const std::string out_path = "cli_stdout_" + tag + ".txt";
  const std::string err_path = "cli_stderr_" + tag + ".txt";
  const std::string command =
      g_binary + " " + args + " >" + out_path + " 2>" + err_path;
  const int raw = std::system(command.c_str());
  CliResult result;
  result.code = (raw == -1) ? -1 : WEXITSTATUS(raw);
  result.out = slurp(out_path);
  result.err = slurp(err_path);
  std::remove(out_path.c_str());
  std::remove(err_path.c_str());
  return result;
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("classify prints class, verdict and reason") {
  const CliResult r = run_cli("classify --order 6");
  CHECK(r.code == 0);
  CHECK(contains(r.out, "TwiceOdd / Impossible"));
  CHECK(run_cli("classify --order 4").out.find("PossibleCandidate") !=
        std::string::npos);
  CHECK(run_cli("classify --order 1").code == 0);
}

TEST_CASE("construct then verify round trips through a file") {
  const CliResult build =
      run_cli("construct --method sylvester --order 8 -o cli_syl8.hmat");
  CHECK(build.code == 0);
  const CliResult check = run_cli("verify cli_syl8.hmat");
  CHECK(check.code == 0);
  CHECK(contains(check.out, "hadamard: yes"));
  std::remove("cli_syl8.hmat");
}

TEST_CASE("construct to stdout emits parseable HMAT text") {
  const CliResult r = run_cli("construct --method paley --prime 3");
  CHECK(r.code == 0);
  CHECK(r.out.rfind("HMAT 4 4\n", 0) == 0);
}

TEST_CASE("construct kron multiplies orders from files") {
  CHECK(run_cli("construct --method sylvester --order 2 -o cli_a.hmat").code ==
        0);
  CHECK(run_cli("construct --method paley --prime 3 -o cli_b.hmat").code == 0);
  const CliResult r = run_cli(
      "construct --method kron --left cli_a.hmat --right cli_b.hmat -o "
      "cli_ab.hmat");
  CHECK(r.code == 0);
  const CliResult check = run_cli("verify cli_ab.hmat");
  CHECK(check.code == 0);
  CHECK(contains(check.out, "order: 8 x 8"));
  std::remove("cli_a.hmat");
  std::remove("cli_b.hmat");
  std::remove("cli_ab.hmat");
}

TEST_CASE("construct refuses a non-hadamard kron factor") {
  std::ofstream("cli_bad.hmat") << "HMAT 2 2\n++\n++\n";
  const CliResult r = run_cli(
      "construct --method kron --left cli_bad.hmat --right cli_bad.hmat");
  CHECK(r.code == 1);
  CHECK(contains(r.err, "not Hadamard"));
  std::remove("cli_bad.hmat");
}

TEST_CASE("verify flags a broken matrix with exit 1") {
  std::ofstream("cli_broken.hmat") << "HMAT 2 2\n++\n++\n";
  const CliResult r = run_cli("verify cli_broken.hmat");
  CHECK(r.code == 1);
  CHECK(contains(r.out, "hadamard: no"));
  CHECK(contains(r.out, "first-violation: rows 0 and 1"));
  std::remove("cli_broken.hmat");
}

TEST_CASE("verify --gram dumps the inner product table") {
  CHECK(run_cli("construct --method sylvester --order 4 -o cli_g.hmat").code ==
        0);
  const CliResult r = run_cli("verify cli_g.hmat --gram");
  CHECK(r.code == 0);
  CHECK(contains(r.out, "4 0 0 0\n"));
  CHECK(contains(r.out, "0 0 0 4\n"));
  std::remove("cli_g.hmat");
}

TEST_CASE("malformed files report the line number on exit 2") {
  std::ofstream("cli_mal.hmat") << "HMAT 2 2\n++\n+x\n";
  const CliResult r = run_cli("verify cli_mal.hmat");
  CHECK(r.code == 2);
  CHECK(contains(r.err, "line 3"));
  std::remove("cli_mal.hmat");
  const CliResult missing = run_cli("verify cli_no_such_file.hmat");
  CHECK(missing.code == 2);
}

TEST_CASE("orthnum agrees on balanced rows and abstains otherwise") {
  CHECK(run_cli("construct --method sylvester --order 4 -o cli_o.hmat").code ==
        0);
  const CliResult balanced = run_cli("orthnum cli_o.hmat --row-a 1 --row-b 2");
  CHECK(balanced.code == 0);
  CHECK(contains(balanced.out, "g: 0"));
  CHECK(contains(balanced.out, "k: 1"));
  CHECK(contains(balanced.out, "verdict: AGREE"));
  const CliResult unbalanced =
      run_cli("orthnum cli_o.hmat --row-a 0 --row-b 1");
  CHECK(unbalanced.code == 0);
  CHECK(contains(unbalanced.out, "verdict: N-A"));
  CHECK(contains(unbalanced.out, "N-A (row 0 is unbalanced)"));
  const CliResult oob = run_cli("orthnum cli_o.hmat --row-a 0 --row-b 9");
  CHECK(oob.code == 2);
  std::remove("cli_o.hmat");
}

TEST_CASE("search exit codes: found, proven none, budget") {
  const CliResult found = run_cli("search --order 12 -o cli_s12.hmat");
  CHECK(found.code == 0);
  CHECK(contains(found.out, "status: Found"));
  CHECK(contains(found.out, "nodes: 12"));
  CHECK(run_cli("verify cli_s12.hmat").code == 0);

  const CliResult none = run_cli("search --order 6 --mode exhaustive");
  CHECK(none.code == 1);
  CHECK(contains(none.out, "status: ProvenNone"));

  const CliResult budget = run_cli("search --order 16 --max-nodes 10");
  CHECK(budget.code == 3);
  CHECK(contains(budget.out, "status: BudgetExhausted"));
  CHECK(contains(budget.out, "best-depth:"));
  std::remove("cli_s12.hmat");
}

TEST_CASE("search --parallel matches the sequential output") {
  const CliResult seq = run_cli("search --order 12 -o cli_seq.hmat");
  const CliResult par =
      run_cli("search --order 12 --parallel -o cli_par.hmat");
  CHECK(seq.code == 0);
  CHECK(par.code == 0);
  CHECK(slurp("cli_seq.hmat") == slurp("cli_par.hmat"));
  std::remove("cli_seq.hmat");
  std::remove("cli_par.hmat");
}

TEST_CASE("identical invocations produce byte-identical stdout") {
  const CliResult a = run_cli("search --order 12");
  const CliResult b = run_cli("search --order 12");
  CHECK(a.out == b.out);
  CHECK(run_cli("scan --limit 20").out == run_cli("scan --limit 20").out);
}

TEST_CASE("partial prints the rank with its certainty") {
  const CliResult r = run_cli("partial --order 10 -o cli_w.hmat");
  CHECK(r.code == 0);
  CHECK(contains(r.out, "partial-rows: 2"));
  CHECK(contains(r.out, "certainty: exact"));
  CHECK(contains(slurp("cli_w.hmat"), "HMAT 2 10"));
  std::remove("cli_w.hmat");
  const CliResult full = run_cli("partial --order 12");
  CHECK(contains(full.out, "partial-rows: 12"));
}

TEST_CASE("census prints the audit with its notes") {
  const CliResult r = run_cli("census --k 2");
  CHECK(r.code == 0);
  CHECK(contains(r.out, "formula-p: 5012"));
  CHECK(contains(r.out, "enumerated-rows: 35"));
  CHECK(contains(r.out, "selection-count: 21949955180296560424"));
  CHECK(contains(r.out, "5032"));
  const CliResult bad = run_cli("census --k 9");
  CHECK(bad.code == 2);
}

TEST_CASE("scan summarizes coverage and gaps") {
  const CliResult r = run_cli("scan --limit 32");
  CHECK(r.code == 0);
  CHECK(contains(r.out, "gaps (divisible by 4, no construction): 28\n"));
  const CliResult r64 = run_cli("scan --limit 64");
  CHECK(contains(r64.out, "28 36 52 56"));
}

TEST_CASE("usage errors exit 2, help exits 0") {
  CHECK(run_cli("").code == 2);
  CHECK(run_cli("frobnicate").code == 2);
  CHECK(run_cli("classify").code == 2);
  CHECK(run_cli("classify --order notanumber").code == 2);
  CHECK(run_cli("search --order 8 --bogus").code == 2);
  CHECK(run_cli("--help").code == 0);
  CHECK(run_cli("search --help").code == 0);
}

int main(int argc, char** argv) {
  doctest::Context context;
  if (argc > 1 && argv[argc - 1][0] != '-') {
    g_binary = argv[argc - 1];
    --argc;
  }
  context.applyCommandLine(argc, argv);
  if (g_binary.empty()) {
    std::fprintf(stderr, "usage: hmat_cli_tests <path-to-hmat-binary>\n");
    return 1;
  }
  return context.run();
}

// Integration checks for the command-line tool: exit codes, round-trips,
// and byte determinism of structured output across repeated runs.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

int failures = 0;

void check(bool ok, const std::string& what) {
  if (!ok) {
    ++failures;
    std::cerr << "[FAIL] " << what << "\n";
  } else {
    std::cout << "[ ok ] " << what << "\n";
  }
}

int run(const std::string& args) {
  std::string cmd = std::string(CYCLOSUM_CLI_PATH) + " " + args +
                    " > /dev/null 2> /dev/null";
  int rc = std::system(cmd.c_str());
  return WEXITSTATUS(rc);
}

std::string run_capture(const std::string& args) {
  std::string cmd = std::string(CYCLOSUM_CLI_PATH) + " " + args + " 2> /dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return "<popen failed>";
  std::string out;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  pclose(pipe);
  return out;
}

}  // namespace

int main() {
  const std::string fixtures = CYCLOSUM_FIXTURE_DIR;

  check(run("rsum canon 9:1^1,4^1,7^1") == 0, "canon of a full cycle exits 0");
  check(run_capture("rsum canon 9:1^1,4^1,7^1") == "9:\n",
        "canon of a full cycle is the empty sum");
  check(run_capture("rsum canon 25:1^1,2^1,6^1,11^1,16^1,21^1") == "25:2^1\n",
        "canon strips the 5-cycle");
  check(run("rsum canon bogus") == 2, "malformed root sum exits 2");
  check(run("rsum canon 9:4^1,1^1") == 2, "non-ascending exponents exit 2");
  check(run("rsum canon --no-such-flag 9:") == 2, "unknown flags are rejected");
  check(run("rsum minimal 30:5^1,6^1,12^1,18^1,24^1,25^1") == 0,
        "minimality query exits 0");
  check(run_capture("rsum conductor 9:1^1,3^1,4^1,7^1") == "conductor 3\n",
        "conductor output");
  check(run("rsum enumerate --modulus 12 --max-len 6") == 0, "enumerate runs");
  check(run("rsum enumerate --modulus 12 --max-len 20") == 2,
        "budget violation exits 2");

  check(run("gl sumsq --n 2 --q 3") == 0, "sum of squares matches at (2,3)");
  check(run_capture("gl sumsq --n 2 --q 3").find("48 = 48") == 0,
        "sumsq reports 48 = 48");
  check(run("gl lemma43 --n 3") == 0, "divisibility bound holds up to n=3");
  check(run("gl simplices --q 3 --d 2") == 0, "simplices query");
  check(run("gl labels --n 2 --q 4") == 0, "labels at a non-prime prime power");
  check(run("gl labels --n 2 --q 6") == 2, "q must be a prime power");

  check(run("p13 twof4") == 0, "residue search finds nothing");
  check(run_capture("p13 twof4") == "0 counterexamples\n", "twof4 text output");
  check(run("p13 verify-gl --n 2 --q 19 --p 3") == 0, "verify-gl certifies");
  check(run("p13 verify-sl --n 2 --q 19 --p 3") == 0, "verify-sl certifies");
  check(run("p13 verify-gl --n 4 --q 19 --p 3") == 1,
        "uncertified characters exit 1 below the guarantee threshold");
  check(run("p13 verify-gl --n 2 --q 19 --p 5") == 2, "p must divide q-1");
  check(run("p13 verify-table --fixture " + fixtures + "/a5.json") == 0,
        "the A5 fixture verifies");
  check(run("p13 verify-table --fixture " + fixtures + "/sl2_5.json") == 0,
        "the SL2(5) fixture verifies");
  check(run("p13 verify-table --fixture /nonexistent.json") == 2,
        "missing fixture exits 2");
  {
    std::ofstream gap("/tmp/cyclosum_gap_fixture.json");
    gap << R"({"name":"gap","exponent_modulus":18,)"
        << R"("classes":[{"name":"e","order":1},{"name":"h18","order":18},)"
        << R"({"name":"g3","order":3}],)"
        << R"("characters":[{"name":"psi","values":["18:0^1","18:2^1","18:6^1"]}]})"
        << "\n";
  }
  check(run("p13 verify-table --fixture /tmp/cyclosum_gap_fixture.json --p 3") == 1,
        "a witness gap exits 1");

  // determinism: identical inputs, byte-identical structured output
  for (const std::string args :
       {std::string("--format json p13 verify-gl --n 2 --q 19 --p 3"),
        std::string("--format json rsum enumerate --modulus 30 --max-len 6"),
        std::string("--format json gl degrees --n 3 --q 2"),
        std::string("--format json p13 verify-table --fixture ") + fixtures +
            "/a5.json"}) {
    std::string a = run_capture(args), b = run_capture(args);
    check(!a.empty() && a == b, "deterministic bytes: " + args);
  }

  // --out writes the same bytes as stdout
  std::string direct = run_capture("--format json p13 twof4");
  check(run("--format json --out /tmp/cyclosum_tf4.json p13 twof4") == 0,
        "--out run succeeds");
  std::ifstream f("/tmp/cyclosum_tf4.json", std::ios::binary);
  std::stringstream ss;
  ss << f.rdbuf();
  check(ss.str() == direct, "--out bytes equal stdout bytes");

  if (failures) {
    std::cerr << failures << " integration check(s) failed\n";
    return 1;
  }
  std::cout << "all integration checks passed\n";
  return 0;
}

#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

/// Runs the installed binary with the given arguments and returns the exit
/// code; output is discarded unless captured through --out.
int run_cli(const std::string& args) {
  const std::string cmd =
      std::string(QUADRIC_LAB_BIN) + " " + args + " > /dev/null 2>&1";
  const int rc = std::system(cmd.c_str());
  return rc < 0 ? rc : WEXITSTATUS(rc);
}

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}

std::string temp_path(const char* stem) {
  return std::string("cli_test_") + stem + ".out";
}

} // namespace

TEST_CASE("cli exit codes") {
  CHECK(run_cli("verify --n 3 --model minimal") == 0);
  CHECK(run_cli("verify --n 3 --model tube --r 0.5") == 0);
  CHECK(run_cli("verify --n 3 --model P") == 0);
  // Usage errors.
  CHECK(run_cli("") == 2);
  CHECK(run_cli("bogus") == 2);
  CHECK(run_cli("verify --n 2") == 2);
  CHECK(run_cli("verify --model nope") == 2);
  CHECK(run_cli("verify --model tube --r 1 --alpha 3") == 2);
  CHECK(run_cli("verify --model minimal --r 1") == 2);
  CHECK(run_cli("verify --model P --alpha 2") == 2);
  CHECK(run_cli("verify --model tube --alpha 1.5") == 2);
  CHECK(run_cli("verify --model equidistant --alpha 3") == 2);
  CHECK(run_cli("spectrum --n 4") == 2);
  // Check failures surface as exit 1.
  CHECK(run_cli("verify --n 3 --model horocyclic --tol 1e-30") == 1);
  // Help is not an error.
  CHECK(run_cli("--help") == 0);
  CHECK(run_cli("verify --help") == 0);
}

TEST_CASE("cli reports are byte stable across runs") {
  const std::string out1 = temp_path("det1");
  const std::string out2 = temp_path("det2");
  const std::string args = "verify --n 3 --model equidistant --r 0.75 --seed 7";
  REQUIRE(run_cli(args + " --out " + out1) == 0);
  REQUIRE(run_cli(args + " --out " + out2) == 0);
  const std::string a = slurp(out1);
  const std::string b = slurp(out2);
  CHECK(!a.empty());
  CHECK(a == b);
  CHECK(a.find("\"checks\"") != std::string::npos);
  CHECK(a.find("\"summary\"") != std::string::npos);
  CHECK(a.find("\"anchor\": \"model.equidistant.spectrum\"") !=
        std::string::npos);
  std::remove(out1.c_str());
  std::remove(out2.c_str());
}

TEST_CASE("cli alpha conversion selects the radius") {
  const std::string out = temp_path("alpha");
  // alpha = 2 coth(2 r) with r = 0.5: run through --alpha and check the
  // check names carry the converted radius.
  REQUIRE(run_cli("verify --n 3 --model tube --alpha 2.6260705709986629 --out " +
                  out) == 0);
  const std::string text = slurp(out);
  CHECK(text.find("_r0.5") != std::string::npos);
  std::remove(out.c_str());
}

TEST_CASE("cli markdown format") {
  const std::string out = temp_path("md");
  REQUIRE(run_cli("verify --n 3 --model minimal --format markdown --out " +
                  out) == 0);
  const std::string text = slurp(out);
  CHECK(text.find("# Verification report") != std::string::npos);
  CHECK(text.find("| status |") != std::string::npos);
  std::remove(out.c_str());
}

TEST_CASE("cli spectrum subcommand") {
  const std::string out = temp_path("spec");
  REQUIRE(run_cli("spectrum --model tube --n 4 --r 0.5 --out " + out) == 0);
  const std::string text = slurp(out);
  CHECK(text.find("\"model\": \"tube\"") != std::string::npos);
  CHECK(text.find("\"sweep\"") != std::string::npos);
  CHECK(text.find("\"ricci\"") != std::string::npos);
  REQUIRE(run_cli("spectrum --model P --n 4 --out " + out) == 0);
  CHECK(slurp(out).find("\"model\": \"P\"") != std::string::npos);
  std::remove(out.c_str());
}

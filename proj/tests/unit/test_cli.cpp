#include <array>
#include <cstdio>
#include <string>

#include <sys/wait.h>

#include "doctest.h"

namespace {

struct Run {
  int exit_code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string("'") + SIGNCON_CLI + "' " + args + " 2>&1";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe);
  std::array<char, 4096> buf{};
  while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace

TEST_CASE("check exits 0 when every property holds") {
  const auto r = run("check --max-n 1 --max-m 2");
  CHECK(r.exit_code == 0);
}

TEST_CASE("check exits 2 and prints the counterexample graph") {
  const auto r = run("check --max-n 2 --max-m 1 --quiet");
  CHECK(r.exit_code == 2);
  CHECK(r.out.find("signed-graph n=2\n0 1 +\n") != std::string::npos);
}

TEST_CASE("errors exit 1 with a diagnostic") {
  const auto missing = run("balanced /nonexistent/graph.sg");
  CHECK(missing.exit_code == 1);
  CHECK(missing.out.rfind("error: ", 0) == 0);
  CHECK(run("components --kind bogus x.sg").exit_code == 1);
}

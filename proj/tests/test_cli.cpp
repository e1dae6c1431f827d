#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  const std::string command = std::string(REALTORIC_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buffer{};
  while (std::size_t n = fread(buffer.data(), 1, buffer.size(), pipe)) out.append(buffer.data(), n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string data(const std::string& name) { return std::string(REALTORIC_DATA) + "/" + name; }

}  // namespace

TEST_CASE("betti on the square covers") {
  const auto torus = run("betti " + data("torus-square.json") + " --json");
  CHECK(torus.code == 0);
  CHECK(torus.out.find("\"betti\": [\n    1,\n    2,\n    1\n  ]") != std::string::npos);
  CHECK(torus.out.find("\"orientable\": true") != std::string::npos);

  const auto klein = run("betti " + data("klein-square.json"));
  CHECK(klein.code == 0);
  CHECK(klein.out.find("orientable: no") != std::string::npos);
}

TEST_CASE("exit codes") {
  CHECK(run("betti " + data("malformed.json")).code == 2);
  CHECK(run("betti " + data("does-not-exist.json")).code == 2);
  CHECK(run("betti " + data("bad-chi.json")).code == 3);
  CHECK(run("frobnicate").code == 2);
  CHECK(run("permutahedron 1").code == 2);
  CHECK(run("--help").code == 0);

  const auto validate = run("validate " + data("bad-chi.json"));
  CHECK(validate.code == 3);
  CHECK(validate.out.find("FAIL  {1, 2}") != std::string::npos);
  CHECK(run("validate " + data("torus-square.json")).code == 0);
}

TEST_CASE("generators") {
  const auto p3 = run("permutahedron 3");
  CHECK(p3.code == 0);
  CHECK(p3.out.find("closed form: MATCH") != std::string::npos);

  const auto path = run("graph-assoc " + data("path3.json") + " --json");
  CHECK(path.code == 0);
  CHECK(path.out.find("\"betti\": [\n    1,\n    2,\n    0\n  ]") != std::string::npos);

  const auto secant = run("secant 3");
  CHECK(secant.out == "A_0 = 1\nA_2 = 1\nA_4 = 5\nA_6 = 61\n");
}

TEST_CASE("emit and ma-euler") {
  const std::string path = "cli_test_p3.json";
  REQUIRE(run("permutahedron 3 --emit " + path).code == 0);
  const auto ma = run("ma-euler " + path);
  CHECK(ma.code == 0);
  CHECK(ma.out.find("16 * -2 = -32") != std::string::npos);
  CHECK(ma.out.find("MATCH") != std::string::npos);
  std::remove(path.c_str());

  const auto torus = run("ma-euler " + data("torus-square.json"));
  CHECK(torus.out.find("4 * 0 = 0") != std::string::npos);
}

TEST_CASE("jobs do not change JSON output") {
  for (const std::string args : {"betti " + data("klein-square.json"), std::string("permutahedron 5")}) {
    const auto one = run(args + " --json --breakdown --jobs 1");
    const auto eight = run(args + " --json --breakdown --jobs 8");
    CHECK(one.code == 0);
    CHECK(one.out == eight.out);
  }
}

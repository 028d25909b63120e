#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(CATALG_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  std::size_t got = 0;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("invariants examples") {
    auto r = run("invariants --family pc --n 3");
    REQUIRE(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["schema"] == "catalg/1");
    CHECK(j["loewy_length"] == 4);
    CHECK(j["block_count"] == 2);
    CHECK(j["quiver"]["arrow_count"] == 8);

    r = run("invariants --family po --n 4");
    REQUIRE(r.code == 0);
    j = nlohmann::json::parse(r.out);
    CHECK(j["loewy_length"] == 4);
    CHECK(j["block_count"] == 2);

    r = run("invariants --family po --n 0");
    REQUIRE(r.code == 0);
    j = nlohmann::json::parse(r.out);
    CHECK(j["block_count"] == 1);
    CHECK(j["loewy_length"] == 1);
  }

  TEST_CASE("crosscheck examples") {
    for (const char* args : {"--family pc --n 4", "--family pf --n 4", "--family po --n 6"}) {
      const auto r = run(std::string("crosscheck ") + args);
      CHECK(r.code == 0);
      CHECK(nlohmann::json::parse(r.out)["passed"] == true);
    }
  }

  TEST_CASE("verify-presentation examples") {
    for (const char* args : {"--family po --n 5", "--family pc --n 4", "--family pf --n 4"}) {
      const auto r = run(std::string("verify-presentation ") + args);
      CHECK(r.code == 0);
      CHECK(nlohmann::json::parse(r.out)["presentation"]["passed"] == true);
    }
  }

  TEST_CASE("identical invocations give identical bytes") {
    const auto a = run("verify-presentation --family pf --n 3");
    const auto b = run("verify-presentation --family pf --n 3");
    CHECK(a.out == b.out);
    CHECK_FALSE(a.out.empty());
  }

  TEST_CASE("exit codes") {
    CHECK(run("invariants --family xx --n 2").code == 2);
    CHECK(run("invariants --n 2").code == 2);
    CHECK(run("invariants --family po --n -1").code == 2);
    CHECK(run("invariants --family po --n 2 --format yaml").code == 2);
    CHECK(run("frobnicate").code == 2);
    CHECK(run("").code == 2);
    CHECK(run("invariants --family po --n 7").code == 3);
    CHECK(run("verify-presentation --family pc --n 5").code == 3);
    CHECK(run("invariants --family pc --n 4 --max-n 3").code == 3);
    CHECK(run("invariants --family po --n 7 --max-n 7").code == 0);
    CHECK(run("--help").code == 0);
  }

  TEST_CASE("cap from the environment") {
    setenv("CATALG_MAX_N", "3", 1);
    CHECK(run("invariants --family pc --n 4").code == 3);
    CHECK(run("invariants --family pc --n 4 --max-n 4").code == 0);
    setenv("CATALG_MAX_N", "abc", 1);
    CHECK(run("invariants --family pc --n 2").code == 2);
    unsetenv("CATALG_MAX_N");
  }

  TEST_CASE("formats and output file") {
    const auto csv = run("invariants --family pc --n 2 --format csv");
    CHECK(csv.code == 0);
    CHECK(csv.out.rfind("target\\source,", 0) == 0);
    const auto text = run("verify-presentation --family pc --n 3 --format text");
    CHECK(text.out.find("presentation certificate") != std::string::npos);

    const std::string path = "cli_test_output.json";
    std::remove(path.c_str());
    const auto r = run("invariants --family pf --n 3 --out " + path);
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    CHECK(nlohmann::json::parse(ss.str())["category"] == "EF_3");
    std::remove(path.c_str());
  }

  TEST_CASE("count subcommand") {
    auto r = run("count --family pc --n 3 --dom 1,2,3 --cod 1,2");
    REQUIRE(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["closed_form"] == 2);
    CHECK(j["direct"] == 2);

    r = run("count --family pf --n 3 --dom 2,3 --cod 1,2");
    j = nlohmann::json::parse(r.out);
    CHECK(j["closed_form"] == 2);

    r = run("count --family po --n 5 --dom 1,2,3,4,5 --cod 1,2,3");
    j = nlohmann::json::parse(r.out);
    CHECK(j["closed_form"] == 6);

    r = run("count --boundary 1,1,2,3,4,4,4,5");
    REQUIRE(r.code == 0);
    j = nlohmann::json::parse(r.out);
    CHECK(j["determinant"] == j["dynamic_programming"]);

    CHECK(run("count --boundary 2,1").code == 2);
    CHECK(run("count --family pc --n 3 --dom 1,5 --cod 1").code == 2);
    CHECK(run("count --family pc --n 3 --dom 1,2").code == 2);
  }
}

#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include <json.hpp>

#ifndef ABELIAN_CLI_PATH
#error "ABELIAN_CLI_PATH must point at the built binary"
#endif

namespace {

struct RunResult {
  int exit_code;
  std::string output;  // stdout + stderr
};

std::string cli_path() {
  if (const char* env = std::getenv("ABELIAN_CLI")) return env;
  return ABELIAN_CLI_PATH;
}

RunResult run_cli(const std::string& args, const std::string& env_prefix = "") {
  std::string command = env_prefix + "'" + cli_path() + "' " + args + " 2>&1";
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string output;
  std::array<char, 4096> buffer;
  std::size_t got;
  while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
    output.append(buffer.data(), got);
  int status = pclose(pipe);
  int exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return {exit_code, output};
}

nlohmann::json first_line_json(const std::string& output) {
  return nlohmann::json::parse(output.substr(0, output.find('\n')));
}

}  // namespace

TEST_CASE("check-base contract") {
  SECTION("Klein group point is refuted with a witness") {
    auto r = run_cli("check-base \"Z/2xZ/2\" \"(1,1)\"");
    REQUIRE(r.exit_code == 0);
    auto j = first_line_json(r.output);
    CHECK(j["is_base"] == false);
    CHECK(j.contains("witness"));
  }
  SECTION("cyclic 2-group is a base with (p, n) reported") {
    auto r = run_cli("check-base \"Z/8\" \"1\"");
    REQUIRE(r.exit_code == 0);
    auto j = first_line_json(r.output);
    CHECK(j["is_base"] == true);
    CHECK(j["p"] == 2);
    CHECK(j["n"] == 3);
  }
  SECTION("zero distinguished element is an input error") {
    auto r = run_cli("check-base \"Z/4\" \"0\"");
    CHECK(r.exit_code == 2);
    CHECK(r.output.find("nonzero") != std::string::npos);
  }
  SECTION("malformed group literal is an input error") {
    CHECK(run_cli("check-base \"Z/1\" \"0\"").exit_code == 2);
    CHECK(run_cli("check-base \"Q/4\" \"1\"").exit_code == 2);
  }
  SECTION("method selection") {
    auto structural = run_cli("check-base \"Z/12\" \"3\" --method structural");
    REQUIRE(structural.exit_code == 0);
    auto j = first_line_json(structural.output);
    CHECK(j["is_base"] == true);
    CHECK(j["p"] == 2);
    CHECK(j["n"] == 2);
    auto bruteforce = run_cli("check-base \"Z/12\" \"3\" --method bruteforce");
    REQUIRE(bruteforce.exit_code == 0);
    CHECK(first_line_json(bruteforce.output)["is_base"] == true);
  }
  SECTION("text format mentions the verdict") {
    auto r = run_cli("check-base \"Z/8\" \"1\" --format text");
    REQUIRE(r.exit_code == 0);
    CHECK(r.output.find("is an h-amalgamation basis") != std::string::npos);
  }
}

TEST_CASE("subgroups and canonical commands") {
  auto r = run_cli("subgroups \"Z/12\"");
  REQUIRE(r.exit_code == 0);
  CHECK(first_line_json(r.output)["count"] == 6);

  auto c = run_cli("canonical \"Z/4 x Z/6\"");
  REQUIRE(c.exit_code == 0);
  CHECK(first_line_json(c.output)["invariant_factors"] == nlohmann::json::array({2, 12}));

  auto t = run_cli("canonical \"Z/4 x Z/6\" --format text");
  REQUIRE(t.exit_code == 0);
  CHECK(t.output == "Z/2 x Z/12\n");
}

TEST_CASE("enumeration bound handling") {
  auto refused = run_cli("subgroups \"Z/512\"");
  CHECK(refused.exit_code == 1);
  CHECK(refused.output.find("256") != std::string::npos);

  auto allowed = run_cli("subgroups \"Z/512\"", "ABELIAN_ENUM_BOUND=512 ");
  REQUIRE(allowed.exit_code == 0);
  CHECK(first_line_json(allowed.output)["count"] == 10);

  auto bad_env = run_cli("subgroups \"Z/12\"", "ABELIAN_ENUM_BOUND=tiny ");
  CHECK(bad_env.exit_code == 2);
}

TEST_CASE("amalgamate consumes span files") {
  const std::string path = "cli_test_span.json";
  {
    std::ofstream out(path);
    out << R"({"source": {"group": "Z/2", "g": [1]},
               "left":   {"codomain": "Z/4", "k": [2], "images": [[2]]},
               "right":  {"codomain": "Z/2", "l": [1], "images": [[1]]}})";
  }
  auto r = run_cli("amalgamate " + path);
  REQUIRE(r.exit_code == 0);
  auto j = first_line_json(r.output);
  CHECK(j["amalgamable"] == true);
  CHECK(j["D"]["invariant_factors"] == nlohmann::json::array({4}));
  std::remove(path.c_str());

  CHECK(run_cli("amalgamate missing_file.json").exit_code == 2);

  const std::string bad = "cli_test_bad_span.json";
  {
    std::ofstream out(bad);
    out << "{ not json";
  }
  CHECK(run_cli("amalgamate " + bad).exit_code == 2);
  std::remove(bad.c_str());
}

TEST_CASE("enumerate-bases output formats") {
  auto csv = run_cli("enumerate-bases --max-order 4 --format csv");
  REQUIRE(csv.exit_code == 0);
  std::size_t lines = 0;
  for (char ch : csv.output)
    if (ch == '\n') ++lines;
  CHECK(lines == 10);  // header + 9 rows
  CHECK(csv.output.rfind("group,g,is_base,detail\n", 0) == 0);
  CHECK(csv.output.find("\"Z/2 x Z/2\",\"(1,1)\",false,") != std::string::npos);

  auto jsonl = run_cli("enumerate-bases --max-order 4");
  REQUIRE(jsonl.exit_code == 0);
  std::size_t rows = 0;
  std::size_t start = 0;
  while (start < jsonl.output.size()) {
    std::size_t end = jsonl.output.find('\n', start);
    if (end == std::string::npos) break;
    auto j = nlohmann::json::parse(jsonl.output.substr(start, end - start));
    CHECK(j.contains("group"));
    CHECK(j.contains("is_base"));
    ++rows;
    start = end + 1;
  }
  CHECK(rows == 9);
}

TEST_CASE("outputs are byte-identical across runs") {
  for (const std::string& args :
       {std::string("check-base \"Z/2xZ/2\" \"(1,1)\""),
        std::string("enumerate-bases --max-order 6 --format csv"),
        std::string("subgroups \"Z/2 x Z/4\"")}) {
    auto first = run_cli(args);
    auto second = run_cli(args);
    CHECK(first.exit_code == second.exit_code);
    CHECK(first.output == second.output);
  }
}

TEST_CASE("selftest sweeps and reports agreement") {
  auto r = run_cli("selftest --max-order 12");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("deciders agree") != std::string::npos);
}

TEST_CASE("usage errors exit with the input-error code") {
  CHECK(run_cli("check-base").exit_code == 2);
  CHECK(run_cli("no-such-command").exit_code == 2);
  CHECK(run_cli("check-base \"Z/8\" \"1\" --method quantum").exit_code == 2);
}

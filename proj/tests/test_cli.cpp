#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include "json.hpp"

#include "bistable/core.hpp"
#include "bistable/generators.hpp"
#include "bistable/io.hpp"

// Spawns the real binary (path injected by the build) through the shell and
// captures exit code plus combined output.

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;
};

RunResult run_cli(const std::string& arguments, const std::string& env_prefix = "") {
  std::string command =
      env_prefix + std::string(BISTABLE_CLI_PATH) + " " + arguments + " 2>&1";
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult result;
  char buffer[4096];
  std::size_t got = 0;
  while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0) {
    result.output.append(buffer, got);
  }
  int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::filesystem::path write_temp(const std::string& name, const std::string& content) {
  std::filesystem::path path = std::filesystem::temp_directory_path() / name;
  std::ofstream out(path);
  out << content;
  return path;
}

}  // namespace

TEST_CASE("product reproduces the worked example bit for bit") {
  RunResult r = run_cli("product --boolean fig5_x fig5_y");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "3 3\n1 1 1\n1 1 1\n0 0 1\n");

  RunResult k = run_cli("product --kronecker 'identity(2)' 'identity(2)'");
  CHECK(k.exit_code == 0);
  CHECK(k.output == "4 4\n1 0 0 0\n0 1 0 0\n0 0 1 0\n0 0 0 1\n");
}

TEST_CASE("analyze emits the frozen json report") {
  RunResult r = run_cli("analyze fig5_x --format json");
  REQUIRE(r.exit_code == 0);
  nlohmann::json report = nlohmann::json::parse(r.output);
  CHECK(report["schema"] == 1);
  CHECK(report["input"] == "fig5_x");
  CHECK(report["term_rank"] == 3);
  CHECK(report["permanent"] == 2);
  CHECK(report["alpha"] == 3);
  CHECK(report["fully_indecomposable"] == false);
  CHECK(report["total_support"] == false);
  CHECK(report["alpha_plus"] == true);
  CHECK(report["alpha_minus"] == false);
  CHECK(report["alpha_stable"] == false);
  CHECK(report["forced_edges"] == nlohmann::json::parse("[[3,3]]"));
  CHECK(report["allowed_edge_count"] == 5);
  CHECK(report["block_sizes"] == nlohmann::json::parse("[2,1]"));
  CHECK(report["unit_block_count"] == 1);
  CHECK(report["row_perm"] == nlohmann::json::parse("[1,2,3]"));
  CHECK(report["col_perm"] == nlohmann::json::parse("[1,2,3]"));
}

TEST_CASE("text and json modes agree field for field") {
  RunResult text = run_cli("analyze fig2_g --format text");
  RunResult json_mode = run_cli("analyze fig2_g --format json");
  REQUIRE(text.exit_code == 0);
  REQUIRE(json_mode.exit_code == 0);
  // ordered_json keeps document order, which the text mode mirrors.
  nlohmann::ordered_json report = nlohmann::ordered_json::parse(json_mode.output);

  // Every key appears as its own "key: value" line, in order.
  std::size_t line_count = 0;
  std::size_t position = 0;
  for (const auto& [key, value] : report.items()) {
    std::string line = key + ": ";
    line += value.is_string() ? value.get<std::string>() : value.dump();
    line += "\n";
    std::size_t found = text.output.find(line, position);
    CAPTURE(line);
    REQUIRE(found != std::string::npos);
    position = found + line.size();
    ++line_count;
  }
  // And nothing else.
  std::size_t newlines = 0;
  for (char c : text.output) newlines += c == '\n';
  CHECK(newlines == line_count);
}

TEST_CASE("analyze reads both file formats") {
  auto matrix_path = write_temp("cli_matrix.01m", "2 2\n1 1\n1 1\n");
  RunResult m = run_cli("analyze " + matrix_path.string() + " --format json");
  CHECK(m.exit_code == 0);
  CHECK(nlohmann::json::parse(m.output)["bistable"] == true);

  auto graph_path = write_temp("cli_graph.bge", "3 2\n1 1\n2 1\n3 2\n");
  RunResult g = run_cli("analyze " + graph_path.string() + " --format json");
  CHECK(g.exit_code == 0);
  nlohmann::json report = nlohmann::json::parse(g.output);
  CHECK(report["rows"] == 3);
  CHECK(report["cols"] == 2);
  CHECK(report["fully_indecomposable"].is_null());

  // Unknown extension needs --as.
  auto odd_path = write_temp("cli_matrix.txt", "2 2\n1 1\n1 1\n");
  CHECK(run_cli("analyze " + odd_path.string()).exit_code == 2);
  CHECK(run_cli("analyze " + odd_path.string() + " --as 01m").exit_code == 0);
}

TEST_CASE("exit codes") {
  // 2: parse errors name the position.
  auto bad = write_temp("cli_bad.01m", "2 2\n1 0\n0 2\n");
  RunResult parse = run_cli("analyze " + bad.string());
  CHECK(parse.exit_code == 2);
  CHECK(parse.output.find("line 3, column 3") != std::string::npos);

  // 2: unknown fixture.
  CHECK(run_cli("analyze nosuchthing").exit_code == 2);
  // 2: flag errors.
  CHECK(run_cli("analyze fig5_x --format yaml").exit_code == 2);
  CHECK(run_cli("frobnicate").exit_code == 2);
  // 2: product without a mode, or with both.
  CHECK(run_cli("product fig5_x fig5_y").exit_code == 2);
  CHECK(run_cli("product --boolean --kronecker fig5_x fig5_y").exit_code == 2);
  // 2: dimension mismatch.
  CHECK(run_cli("product --boolean fig5_x 'identity(2)'").exit_code == 2);

  // 4: decompose without a perfect matching.
  auto nopm = write_temp("cli_nopm.01m", "2 2\n1 0\n1 0\n");
  RunResult deficient = run_cli("decompose " + nopm.string());
  CHECK(deficient.exit_code == 4);

  // 0: a healthy run.
  CHECK(run_cli("analyze 'cycle(4)'").exit_code == 0);
}

TEST_CASE("guard suppression reports null fields and exit 3") {
  RunResult r = run_cli("analyze fig1_g2 --format json", "BISTABLE_MAX_ORACLE=3 ");
  CHECK(r.exit_code == 3);
  nlohmann::json report = nlohmann::json::parse(r.output);
  CHECK(report["alpha_plus"].is_null());
  CHECK(report["alpha_minus"].is_null());
  CHECK(report["alpha_stable"].is_null());
  // The structural fields are still present.
  CHECK(report["alpha"] == 3);

  // Without the variable the same analysis completes.
  RunResult normal = run_cli("analyze fig1_g2 --format json");
  CHECK(normal.exit_code == 0);
  CHECK(nlohmann::json::parse(normal.output)["alpha_plus"] == false);
}

TEST_CASE("decompose output shape") {
  RunResult r = run_cli("decompose fig5_x");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "P: 1 2 3\nQ: 1 2 3\nblocks: 2 1\n3 3\n1 1 0\n1 1 1\n0 0 1\n");

  RunResult id = run_cli("decompose 'identity(2)'");
  CHECK(id.exit_code == 0);
  CHECK(id.output == "P: 1 2\nQ: 1 2\nblocks: 1 1\n2 2\n1 0\n0 1\n");

  RunResult cycle = run_cli("decompose 'cycle(3)'");
  CHECK(cycle.exit_code == 0);
  CHECK(cycle.output.find("blocks: 3\n") != std::string::npos);
}

TEST_CASE("generate matches the library generators") {
  RunResult fixture = run_cli("generate 'cycle(4)'");
  CHECK(fixture.exit_code == 0);
  CHECK(fixture.output == bistable::write_matrix(bistable::gen::cycle_matrix(4)));

  RunResult graph = run_cli("generate fig1_g2");
  CHECK(graph.exit_code == 0);
  CHECK(graph.output ==
        bistable::write_graph(std::get<bistable::BipartiteGraph>(
            bistable::gen::fixture("fig1_g2"))));

  RunResult random_graph = run_cli("generate random-balanced --order 3 --seed 5");
  CHECK(random_graph.exit_code == 0);
  CHECK(random_graph.output ==
        bistable::write_graph(bistable::gen::random_balanced(3, 0.5, 5)));

  RunResult random_matrix = run_cli("generate random-fi --order 4 --seed 3 --prob 0.25");
  CHECK(random_matrix.exit_code == 0);
  CHECK(random_matrix.output ==
        bistable::write_matrix(bistable::gen::random_fully_indecomposable(4, 0.25, 3)));

  // Missing --order for the random families is an input error.
  CHECK(run_cli("generate random-fi").exit_code == 2);
}

TEST_CASE("verify wiring") {
  RunResult ok = run_cli("verify --suite laws --count 2 --max-n 3 --seed 1");
  CHECK(ok.exit_code == 0);
  CHECK(ok.output.find("0 failures") != std::string::npos);

  RunResult injected = run_cli("verify --suite laws --count 2 --max-n 3 --inject-failure");
  CHECK(injected.exit_code == 1);
  CHECK(injected.output.find("FAIL deliberate_failure_selftest") != std::string::npos);
}

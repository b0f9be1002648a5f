// Command-line front end. Subcommands: analyze, decompose, product,
// generate, verify. Inputs are file paths (parsed by extension, .01m matrix
// or .bge graph, overridable with --as) or fixture names; outputs go to
// stdout in the same two formats.
//
// Exit codes: 0 success; 1 unexpected error or failed verify suite;
// 2 unreadable or ill-shaped input (parse errors, unknown fixtures, wrong
// dimensions); 3 analyze report contains guard-suppressed null fields;
// 4 decompose on a matrix without a perfect matching.

#include <cstdint>
#include <filesystem>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "CLI11.hpp"

#include "bistable/core.hpp"
#include "bistable/errors.hpp"
#include "bistable/generators.hpp"
#include "bistable/io.hpp"
#include "bistable/report.hpp"
#include "bistable/structure.hpp"
#include "bistable/products.hpp"
#include "bistable/verify.hpp"

namespace {

using bistable::BipartiteGraph;
using bistable::ZeroOneMatrix;

int exit_code_for(const std::exception& e) {
  if (dynamic_cast<const bistable::parse_error*>(&e) ||
      dynamic_cast<const bistable::unknown_fixture_error*>(&e) ||
      dynamic_cast<const bistable::not_square_error*>(&e) ||
      dynamic_cast<const bistable::unbalanced_error*>(&e) ||
      dynamic_cast<const bistable::dimension_mismatch_error*>(&e) ||
      dynamic_cast<const std::invalid_argument*>(&e)) {
    return 2;
  }
  if (dynamic_cast<const bistable::no_perfect_matching_error*>(&e)) return 4;
  return 1;
}

// A file path is parsed by extension; anything that is not an existing file
// is tried as a fixture name. --as forces the file format.
bistable::gen::Fixture load_input(const std::string& input, const std::string& forced_format) {
  if (std::filesystem::exists(input) && std::filesystem::is_regular_file(input)) {
    std::string format = forced_format;
    if (format.empty()) {
      std::string extension = std::filesystem::path(input).extension().string();
      if (extension == ".01m") {
        format = "01m";
      } else if (extension == ".bge") {
        format = "bge";
      } else {
        throw std::invalid_argument("cannot tell the format of '" + input +
                                    "' from its extension; pass --as 01m or --as bge");
      }
    }
    if (format == "01m") return bistable::read_matrix_file(input);
    return bistable::read_graph_file(input);
  }
  if (!forced_format.empty()) {
    throw std::invalid_argument("no such file: " + input);
  }
  return bistable::gen::fixture(input);
}

BipartiteGraph input_graph(const bistable::gen::Fixture& f) {
  if (const auto* g = std::get_if<BipartiteGraph>(&f)) return *g;
  return bistable::to_graph(std::get<ZeroOneMatrix>(f));
}

ZeroOneMatrix input_matrix(const bistable::gen::Fixture& f) {
  if (const auto* x = std::get_if<ZeroOneMatrix>(&f)) return *x;
  return bistable::from_graph(std::get<BipartiteGraph>(f));
}

int run_analyze(const std::string& input, const std::string& forced_format,
                const std::string& format) {
  BipartiteGraph g = input_graph(load_input(input, forced_format));
  bistable::AnalysisReport report =
      bistable::analyze(g, input, bistable::guards_from_environment());
  if (format == "json") {
    std::cout << bistable::report_to_json(report);
  } else {
    std::cout << bistable::report_to_text(report);
  }
  return report.guard_suppressed ? 3 : 0;
}

int run_decompose(const std::string& input, const std::string& forced_format) {
  ZeroOneMatrix x = input_matrix(load_input(input, forced_format));
  bistable::BlockTriangularForm form = bistable::block_triangular_form(x);
  std::cout << "P:";
  for (std::size_t i : form.row_perm) std::cout << " " << (i + 1);
  std::cout << "\nQ:";
  for (std::size_t j : form.col_perm) std::cout << " " << (j + 1);
  std::cout << "\nblocks:";
  for (std::size_t s : form.block_sizes) std::cout << " " << s;
  std::cout << "\n" << bistable::write_matrix(x.permuted(form.row_perm, form.col_perm));
  return 0;
}

int run_product(bool boolean_mode, bool kronecker_mode, const std::string& left,
                const std::string& right, const std::string& forced_format) {
  if (boolean_mode == kronecker_mode) {
    throw std::invalid_argument("pass exactly one of --boolean and --kronecker");
  }
  ZeroOneMatrix x = input_matrix(load_input(left, forced_format));
  ZeroOneMatrix y = input_matrix(load_input(right, forced_format));
  ZeroOneMatrix z = boolean_mode ? bistable::boolean_product(x, y)
                                 : bistable::kronecker_product(x, y);
  std::cout << bistable::write_matrix(z);
  return 0;
}

int run_generate(const std::string& name, std::size_t order, double prob,
                 std::uint64_t seed) {
  if (name == "random-balanced" || name == "random-with-pm" || name == "random-fi") {
    if (order == 0) {
      throw std::invalid_argument("--order is required for the random families");
    }
    if (name == "random-balanced") {
      std::cout << bistable::write_graph(bistable::gen::random_balanced(order, prob, seed));
    } else if (name == "random-with-pm") {
      std::cout << bistable::write_graph(bistable::gen::random_with_pm(order, prob, seed));
    } else {
      std::cout << bistable::write_matrix(
          bistable::gen::random_fully_indecomposable(order, prob, seed));
    }
    return 0;
  }
  bistable::gen::Fixture f = bistable::gen::fixture(name);
  if (const auto* x = std::get_if<ZeroOneMatrix>(&f)) {
    std::cout << bistable::write_matrix(*x);
  } else {
    std::cout << bistable::write_graph(std::get<BipartiteGraph>(f));
  }
  return 0;
}

int run_verify(const std::string& suite, std::uint64_t seed, std::size_t count,
               std::size_t max_n, bool inject_failure) {
  bistable::verify::Options options;
  options.seed = seed;
  options.count = count;
  options.max_n = max_n;
  options.inject_failure = inject_failure;

  std::size_t checks = 0, failures = 0;
  auto show = [&](const char* label, const std::vector<bistable::verify::CheckResult>& results) {
    for (const auto& r : results) {
      ++checks;
      if (r.passed) {
        std::cout << "[" << label << "] ok   " << r.name << "\n";
      } else {
        ++failures;
        std::cout << "[" << label << "] FAIL " << r.name << ": " << r.detail << "\n";
      }
    }
  };
  if (suite == "laws" || suite == "all") show("laws", bistable::verify::run_laws(options));
  if (suite == "oracle" || suite == "all") show("oracle", bistable::verify::run_oracle(options));
  std::cout << checks << " checks, " << failures << " failures\n";
  return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"structural analysis of (0,1)-matrices and bipartite graphs"};
  app.require_subcommand(1);

  std::string input, left, right, forced_format, format = "text", suite = "all";
  std::string generate_name;
  bool boolean_mode = false, kronecker_mode = false, inject_failure = false;
  std::uint64_t seed = 0;
  std::size_t count = 200, max_n = 6, order = 0;
  double prob = 0.5;

  auto* analyze = app.add_subcommand("analyze", "full structural report for one input");
  analyze->add_option("input", input, "file path or fixture name")->required();
  analyze->add_option("--format", format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  analyze->add_option("--as", forced_format, "force the input format")
      ->check(CLI::IsMember({"01m", "bge"}));

  auto* decompose =
      app.add_subcommand("decompose", "block triangular form of a square matrix");
  decompose->add_option("input", input, "file path or fixture name")->required();
  decompose->add_option("--as", forced_format, "force the input format")
      ->check(CLI::IsMember({"01m", "bge"}));

  auto* product = app.add_subcommand("product", "boolean or kronecker matrix product");
  product->add_flag("--boolean", boolean_mode, "zero pattern of the integer product");
  product->add_flag("--kronecker", kronecker_mode, "kronecker product");
  product->add_option("left", left, "file path or fixture name")->required();
  product->add_option("right", right, "file path or fixture name")->required();
  product->add_option("--as", forced_format, "force the input format")
      ->check(CLI::IsMember({"01m", "bge"}));

  auto* generate = app.add_subcommand("generate", "print a fixture or a random instance");
  generate->add_option("name", generate_name,
                       "fixture name, or random-balanced / random-with-pm / random-fi")
      ->required();
  generate->add_option("--order", order, "side length for the random families");
  generate->add_option("--prob", prob, "edge probability (default 0.5)");
  generate->add_option("--seed", seed, "random seed (default 0)");

  auto* verify = app.add_subcommand("verify", "run the self-check suites");
  verify->add_option("--suite", suite, "laws, oracle or all")
      ->check(CLI::IsMember({"laws", "oracle", "all"}));
  verify->add_option("--seed", seed, "random seed (default 0)");
  verify->add_option("--count", count, "random instances per check");
  verify->add_option("--max-n", max_n, "largest side length exercised");
  verify->add_flag("--inject-failure", inject_failure, "add a deliberately failing check")
      ->group("");

  try {
    app.parse(argc, argv);
    if (app.got_subcommand(analyze)) return run_analyze(input, forced_format, format);
    if (app.got_subcommand(decompose)) return run_decompose(input, forced_format);
    if (app.got_subcommand(product)) {
      return run_product(boolean_mode, kronecker_mode, left, right, forced_format);
    }
    if (app.got_subcommand(generate)) return run_generate(generate_name, order, prob, seed);
    if (app.got_subcommand(verify)) {
      return run_verify(suite, seed, count, max_n, inject_failure);
    }
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e);
  }
  return 1;
}

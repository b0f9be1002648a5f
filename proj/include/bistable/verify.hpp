#pragma once

#include <cstdint>
#include <string>
#include <vector>

// Self-check suites behind `bistable verify`. The laws suite asserts the
// closure and commutation identities of the products on seeded random
// instances; the oracle suite replays every fast decider against the naive
// reference implementations, exhaustively for small orders and on seeded
// random instances up to max_n. Each check reports one line; a check fails
// on the first counterexample and carries it in the detail string.

namespace bistable {
namespace verify {

struct Options {
  std::uint64_t seed = 0;
  std::size_t count = 200;  // random instances per check
  std::size_t max_n = 6;    // largest side/order exercised
  bool inject_failure = false;  // adds a deliberately false check (harness self-test)
};

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

std::vector<CheckResult> run_laws(const Options& options);
std::vector<CheckResult> run_oracle(const Options& options);

}  // namespace verify
}  // namespace bistable

// suites.hpp — named verification suites behind the `verify` command.
// Each suite derives its parameter ranges from the length cap so the
// CLI's --max-len flag scales everything consistently.

#pragma once

#include <string>
#include <vector>

#include "kla2/verify.hpp"

namespace kla2 {

struct SuiteOptions {
  long max_len = 15;      // length cap for oracle computations
  long coeff_wall = 10000;
  long coeff_beyond = 1000;
};

const std::vector<std::string>& suite_names();  // lexicographic, without "all"

// Runs one named suite; throws std::invalid_argument for unknown names.
std::vector<VerifyReport> run_suite(const std::string& name, const SuiteOptions& opt);

// Runs every suite; thread count 1 forces deterministic sequential
// execution, 0 picks hardware concurrency.  Reports are aggregated in
// suite-name lexicographic order regardless of schedule.
std::vector<VerifyReport> run_all_suites(const SuiteOptions& opt, unsigned threads);

}  // namespace kla2

// verify.hpp — result record shared by the verification suites.

#pragma once

#include <string>
#include <vector>

namespace kla2 {

struct VerifyReport {
  std::string suite;
  std::string params;
  bool pass = true;
  std::string details;  // mismatch payload; empty iff pass

  static VerifyReport ok(std::string suite, std::string params) {
    return {std::move(suite), std::move(params), true, {}};
  }
  static VerifyReport fail(std::string suite, std::string params, std::string details) {
    return {std::move(suite), std::move(params), false, std::move(details)};
  }
};

inline bool all_pass(const std::vector<VerifyReport>& rs) {
  for (const auto& r : rs)
    if (!r.pass) return false;
  return true;
}

}  // namespace kla2

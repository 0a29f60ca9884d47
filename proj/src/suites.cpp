#include "kla2/suites.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <random>
#include <stdexcept>
#include <thread>

#include "kla2/alcove.hpp"
#include "kla2/klformulas.hpp"
#include "kla2/leaves.hpp"
#include "kla2/projcoeff.hpp"

namespace kla2 {

namespace {

using Runner = std::vector<VerifyReport> (*)(const SuiteOptions&);

std::vector<VerifyReport> suite_thm1_wall(const SuiteOptions& opt) {
  return {verify_thm1_wall(std::min(opt.max_len, 14L))};
}

std::vector<VerifyReport> suite_thm1_beyond(const SuiteOptions& opt) {
  return {verify_thm1_beyond(std::min(opt.max_len, 13L))};
}

std::vector<VerifyReport> suite_prop_wall_b(const SuiteOptions& opt) {
  std::vector<VerifyReport> out;
  for (long n = 5; n + 1 <= opt.max_len - 2 && n <= 12; ++n) out.push_back(verify_prop_wall_B(n));
  return out;
}

std::vector<VerifyReport> suite_prop_out(const SuiteOptions& opt) {
  std::vector<VerifyReport> out;
  long cap = (opt.max_len - 5) / 2;  // theta(m,n+1) must stay within the cap
  for (long m = 0; m <= cap; ++m)
    for (long n = 0; m + n <= std::min(cap, 5L); ++n) out.push_back(verify_prop_out(m, n));
  return out;
}

std::vector<VerifyReport> suite_notperverse(const SuiteOptions& opt) {
  std::vector<VerifyReport> out;
  for (long n = 5; n + 3 <= opt.max_len - 2 && n <= 10; ++n)
    out.push_back(verify_lemma_notperverse(n));
  return out;
}

std::vector<VerifyReport> suite_counting(const SuiteOptions& opt) {
  return {verify_counting(std::min(opt.max_len, 14L), 5)};
}

std::vector<VerifyReport> suite_classification(const SuiteOptions& opt) {
  return {verify_classification(std::min(opt.max_len, 12L))};
}

std::vector<VerifyReport> suite_monotonicity(const SuiteOptions& opt) {
  return {verify_monotonicity(std::min(opt.max_len, 10L))};
}

std::vector<VerifyReport> suite_deodhar(const SuiteOptions&) {
  std::vector<VerifyReport> out;
  // exhaustive over all words of length <= 6
  Word w;
  auto rec = [&out, &w](auto&& self, size_t depth) -> bool {
    VerifyReport r = deodhar_check(w);
    bool ok = r.pass;
    if (!ok) out.push_back(std::move(r));
    if (depth == 6 || !ok) return ok;
    for (int i = 1; i <= 3 && ok; ++i) {
      w.push_back(Gen(i));
      ok = self(self, depth + 1);
      w.pop_back();
    }
    return ok;
  };
  if (rec(rec, 0))
    out.push_back(VerifyReport::ok("deodhar", "exhaustive<=6"));
  // 200 random words of length <= 10, fixed seed
  std::mt19937 rng(20240317u);
  std::uniform_int_distribution<int> len(7, 10), letter(1, 3);
  bool ok = true;
  for (int t = 0; t < 200 && ok; ++t) {
    Word rw;
    int L = len(rng);
    for (int i = 0; i < L; ++i) rw.push_back(Gen(letter(rng)));
    VerifyReport r = deodhar_check(rw);
    ok = r.pass;
    if (!ok) out.push_back(std::move(r));
  }
  if (ok) out.push_back(VerifyReport::ok("deodhar", "random200<=10"));
  return out;
}

std::vector<VerifyReport> suite_lemma_tree(const SuiteOptions&) {
  std::vector<VerifyReport> out;
  for (long n = 4; n <= 16; ++n) out.push_back(tree_classify(n).report);
  return out;
}

std::vector<VerifyReport> suite_hom_dims(const SuiteOptions& opt) {
  std::vector<VerifyReport> out;
  long cap = std::min(opt.max_len, 15L);
  for (long m = 0; 2 * m + 3 <= cap; ++m)
    for (long n = 0; 2 * m + 2 * n + 3 <= cap; ++n) out.push_back(verify_bounds_beyond(m, n));
  for (long m = 1; m <= 6; ++m)
    for (long n = 1; n <= m && 2 * m + 2 * n + 3 <= cap; ++n)
      out.push_back(verify_threelittleleaves(m, n));
  for (long m = 1; m <= 6; ++m)
    for (long n = 2; 2 * m + 2 * n + 3 <= cap; ++n)
      for (long i = 1; i < n && i <= m; ++i) out.push_back(verify_fourlittleleaves(m, n, i));
  for (long n = 5; n <= 10 && n + 1 <= cap - 2; ++n) out.push_back(verify_deg0_wall(n));
  return out;
}

std::vector<VerifyReport> suite_hexagon(const SuiteOptions& opt) {
  std::vector<VerifyReport> out;
  long cap = std::min((opt.max_len - 3) / 2 - 2, 4L);  // (m+1)+(n+1) stays in range
  for (long m = 0; m <= cap; ++m)
    for (long n = 0; m + n <= cap; ++n) out.push_back(verify_hexagon_step(m, n));
  for (long m = 0; m + 0 <= 3; ++m)
    for (long n = 0; m + n <= 3; ++n) out.push_back(verify_hexagon_geometry(m, n));
  for (long m = 0; m <= 4; ++m) out.push_back(region_is_equilateral_triangle(m));
  return out;
}

std::vector<VerifyReport> suite_support_shape(const SuiteOptions& opt) {
  std::vector<VerifyReport> out;
  for (long n = 1; n <= std::min(opt.max_len, 12L); ++n)
    out.push_back(verify_support_shape_wall(n));
  return out;
}

std::vector<VerifyReport> suite_coeff_recursions(const SuiteOptions& opt) {
  return {wall_rec_check(opt.coeff_wall), beyond_rec_check(opt.coeff_beyond, opt.coeff_beyond)};
}

std::vector<VerifyReport> suite_mu_support(const SuiteOptions& opt) {
  std::vector<VerifyReport> out;
  for (long n = 5; n <= std::min(opt.max_len, 12L); ++n)
    out.push_back(verify_mu_support_wall(n));
  return out;
}

const std::map<std::string, Runner>& registry() {
  static const std::map<std::string, Runner> reg = {
      {"classification", suite_classification},
      {"coeff-recursions", suite_coeff_recursions},
      {"counting", suite_counting},
      {"deodhar", suite_deodhar},
      {"hexagon", suite_hexagon},
      {"hom-dims", suite_hom_dims},
      {"lemma-tree", suite_lemma_tree},
      {"monotonicity", suite_monotonicity},
      {"mu-support", suite_mu_support},
      {"notperverse", suite_notperverse},
      {"prop-out", suite_prop_out},
      {"prop-wall-b", suite_prop_wall_b},
      {"support-shape", suite_support_shape},
      {"thm1-beyond", suite_thm1_beyond},
      {"thm1-wall", suite_thm1_wall},
  };
  return reg;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [k, fn] : registry()) v.push_back(k);
    return v;
  }();
  return names;
}

std::vector<VerifyReport> run_suite(const std::string& name, const SuiteOptions& opt) {
  auto it = registry().find(name);
  if (it == registry().end()) throw std::invalid_argument("unknown suite: " + name);
  return it->second(opt);
}

std::vector<VerifyReport> run_all_suites(const SuiteOptions& opt, unsigned threads) {
  const auto& names = suite_names();
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  std::vector<VerifyReport> out;
  if (threads <= 1) {
    for (const auto& name : names) {
      auto rs = run_suite(name, opt);
      out.insert(out.end(), rs.begin(), rs.end());
    }
    return out;
  }
  std::vector<std::future<std::vector<VerifyReport>>> futs;
  futs.reserve(names.size());
  for (const auto& name : names)
    futs.push_back(std::async(std::launch::async, [&opt, name] { return run_suite(name, opt); }));
  for (auto& f : futs) {
    auto rs = f.get();
    out.insert(out.end(), rs.begin(), rs.end());
  }
  return out;
}

}  // namespace kla2

// kla2 — command-line interface: exact Kazhdan-Lusztig combinatorics for the
// affine Weyl group of type A2~.  See README.md for the element grammar.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>

#include "kla2/alcove.hpp"
#include "kla2/io.hpp"
#include "kla2/klformulas.hpp"
#include "kla2/suites.hpp"

using namespace kla2;

namespace {

unsigned thread_setting() {
  const char* env = std::getenv("KLA2_THREADS");
  if (!env) return 0;  // auto
  long v = std::strtol(env, nullptr, 10);
  return v < 0 ? 0 : static_cast<unsigned>(v);
}

int cmd_kl(const std::string& elem, bool closed, bool json) {
  Elt x = parse_element(elem);
  HeckeElt h;
  bool used_closed = false;
  if (closed) {
    FamilyTag tag = classify(x);
    switch (tag.kind) {
      case FamilyTag::Kind::Identity:
        h = unit(identity());
        used_closed = true;
        break;
      case FamilyTag::Kind::Wall:
        h = kl_wall_closed(tag.n);
        used_closed = true;
        break;
      case FamilyTag::Kind::Beyond:
        h = kl_beyond_variant(tag.m, tag.n, tag.left_r, tag.right_s);
        used_closed = true;
        break;
    }
    if (used_closed && !(tag.sigma == Perm3())) {
      HeckeElt mapped;
      for (const auto& [y, p] : h.terms()) mapped.add_term(color_perm(tag.sigma, y), p);
      h = mapped;
    }
  } else {
    h = kl_basis(x);
  }
  if (json)
    std::cout << hecke_to_json(h).dump() << "\n";
  else
    std::cout << h.to_string() << "\n";
  return 0;
}

int cmd_interval(const std::string& elem, bool count_only) {
  Elt x = parse_element(elem);
  std::vector<Elt> iv = lower_interval(x);
  if (count_only) {
    std::cout << iv.size() << "\n";
    return 0;
  }
  std::vector<std::pair<long, std::string>> keys;
  keys.reserve(iv.size());
  for (const Elt& y : iv) keys.push_back({length(y), canonical_digits(y)});
  std::sort(keys.begin(), keys.end());
  for (const auto& [l, w] : keys) std::cout << (w.empty() ? "e" : w) << "\n";
  return 0;
}

int cmd_leaves(const std::string& word_digits, bool u_only) {
  Word w = word_from_digits(word_digits);
  for_each_leaf(w, [u_only](const LeafPath& p) {
    if (u_only) {
      for (Decoration d : p.decorations)
        if (d == Decoration::D0 || d == Decoration::D1) return;
    }
    std::cout << leafpath_to_json(p).dump() << "\n";
  });
  return 0;
}

int cmd_svg(const std::string& elem, const std::vector<std::string>& nests,
            const std::string& out_file) {
  Elt x = parse_element(elem);
  // order nested intervals outermost first, innermost darkest
  std::vector<Elt> elems{x};
  for (const auto& t : nests) elems.push_back(parse_element(t));
  std::sort(elems.begin(), elems.end(), [](const Elt& a, const Elt& b) {
    return lower_interval(a).size() > lower_interval(b).size();
  });
  std::vector<Shading> shade;
  for (size_t i = 1; i < elems.size(); ++i)
    shade.push_back({elems[i], static_cast<int>(i)});
  std::string svg = interval_svg(elems.front(), shade);
  if (out_file.empty() || out_file == "-") {
    std::cout << svg;
  } else {
    std::ofstream os(out_file, std::ios::binary);
    if (!os) {
      std::cerr << "kla2: cannot open " << out_file << " for writing\n";
      return 2;
    }
    os << svg;
  }
  return 0;
}

int cmd_coeffs(bool wall, long max_n, bool json) {
  std::vector<CoeffRow> rows =
      wall ? wall_coeff_table(max_n) : beyond_coeff_table(max_n, max_n);
  if (json) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : rows)
      arr.push_back({{"index", r.index},
                     {"closed", r.closed.to_string()},
                     {"recursive", r.recursive.to_string()},
                     {"equal", r.equal}});
    std::cout << arr.dump() << "\n";
  } else {
    for (const auto& r : rows)
      std::cout << r.index << "\t" << r.closed.to_string() << "\t" << r.recursive.to_string()
                << "\t" << (r.equal ? "yes" : "NO") << "\n";
  }
  return 0;
}

int cmd_verify(const std::string& suite, const SuiteOptions& opt) {
  std::vector<VerifyReport> reports;
  if (suite == "all") {
    reports = run_all_suites(opt, thread_setting());
  } else {
    reports = run_suite(suite, opt);
  }
  nlohmann::json arr = nlohmann::json::array();
  bool ok = true;
  for (const auto& r : reports) {
    arr.push_back(report_to_json(r));
    if (!r.pass) {
      ok = false;
      std::cerr << "FAIL " << r.suite << "[" << r.params << "]: " << r.details << "\n";
    }
  }
  std::cout << arr.dump() << "\n";
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Kazhdan-Lusztig combinatorics for affine type A2"};
  app.require_subcommand(1);

  std::string elem, elem2, word, out_file = "-", suite;
  std::vector<std::string> nests;
  bool closed = false, json = false, count_only = false, u_only = false;
  bool wall = false, beyond = false;
  long max_n = 20;
  SuiteOptions opt;

  auto* kl = app.add_subcommand("kl", "canonical basis element in the standard basis");
  kl->add_option("elem", elem)->required();
  kl->add_flag("--closed", closed, "use the closed-form evaluator");
  kl->add_flag("--json", json);

  auto* mu_cmd = app.add_subcommand("mu", "mu-coefficient of a pair of elements");
  mu_cmd->add_option("y", elem)->required();
  mu_cmd->add_option("x", elem2)->required();

  auto* iv = app.add_subcommand("interval", "lower Bruhat interval");
  iv->add_option("elem", elem)->required();
  iv->add_flag("--count", count_only);

  auto* hr = app.add_subcommand("homrank", "graded rank polynomial of a Hom space");
  hr->add_option("x", elem)->required();
  hr->add_option("y", elem2)->required();

  auto* lv = app.add_subcommand("leaves", "stream the light leaves of a word");
  lv->add_option("word", word)->required();
  lv->add_flag("--u-only", u_only, "only leaves without D decorations");

  auto* svg = app.add_subcommand("svg", "render a lower interval as SVG");
  svg->add_option("elem", elem)->required();
  svg->add_option("--nest", nests, "additional nested intervals");
  svg->add_option("-o,--output", out_file)->required();

  auto* co = app.add_subcommand("coeffs", "projector coefficient tables");
  co->add_flag("--wall", wall);
  co->add_flag("--beyond", beyond);
  co->add_option("--max", max_n);
  co->add_flag("--json", json);

  auto* ve = app.add_subcommand("verify", "run a verification suite");
  std::string names;
  for (const auto& n : suite_names()) names += n + " ";
  ve->add_option("suite", suite, "one of: " + names + "all")->required();
  ve->add_option("--max-len", opt.max_len);
  ve->add_option("--max", opt.coeff_wall);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (kl->parsed()) return cmd_kl(elem, closed, json);
    if (mu_cmd->parsed()) {
      std::cout << mu(parse_element(elem), parse_element(elem2)) << "\n";
      return 0;
    }
    if (iv->parsed()) return cmd_interval(elem, count_only);
    if (hr->parsed()) {
      std::cout << hom_rank(parse_element(elem), parse_element(elem2)).to_string() << "\n";
      return 0;
    }
    if (lv->parsed()) return cmd_leaves(word, u_only);
    if (svg->parsed()) return cmd_svg(elem, nests, out_file);
    if (co->parsed()) {
      if (wall == beyond) {
        std::cerr << "kla2: pass exactly one of --wall/--beyond\n";
        return 2;
      }
      return cmd_coeffs(wall, max_n, json);
    }
    if (ve->parsed()) {
      opt.coeff_beyond = std::min(opt.coeff_wall, 1000L);
      return cmd_verify(suite, opt);
    }
  } catch (const ElementParseError& e) {
    std::cerr << "kla2: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "kla2: " << e.what() << "\n";
    return 2;
  } catch (const std::length_error& e) {
    std::cerr << "kla2: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "kla2: error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

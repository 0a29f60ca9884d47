#include "kla2/io.hpp"

#include <algorithm>
#include <cctype>

namespace kla2 {

namespace {

long parse_long(const std::string& text, size_t& i) {
  size_t start = i;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
  if (i == start || (i == start + 1 && !std::isdigit(static_cast<unsigned char>(text[start]))))
    throw ElementParseError("expected integer", start);
  return std::stol(text.substr(start, i - start));
}

void expect(const std::string& text, size_t& i, char c) {
  if (i >= text.size() || text[i] != c)
    throw ElementParseError(std::string("expected '") + c + "'", i);
  ++i;
}

}  // namespace

Elt parse_element(const std::string& text) {
  size_t i = 0;
  Perm3 sigma;
  bool have_perm = false;
  if (text.rfind("perm:", 0) == 0) {
    i = 5;
    if (i + 3 > text.size()) throw ElementParseError("expected 3-digit permutation", i);
    int a = text[i] - '0', b = text[i + 1] - '0', c = text[i + 2] - '0';
    try {
      sigma = Perm3(a, b, c);
    } catch (const std::invalid_argument&) {
      throw ElementParseError("not a permutation of 123", i);
    }
    i += 3;
    expect(text, i, '/');
    have_perm = true;
  }

  Elt x;
  if (text.rfind("w:", i) == i) {
    i += 2;
    Word w;
    while (i < text.size()) {
      char c = text[i];
      if (c < '1' || c > '3') throw ElementParseError("word letter outside {1,2,3}", i);
      w.push_back(Gen(c - '0'));
      ++i;
    }
    x = from_word(w);
  } else if (text.rfind("x:", i) == i) {
    i += 2;
    long n = parse_long(text, i);
    if (n < 0) throw ElementParseError("negative wall index", i);
    if (i != text.size()) throw ElementParseError("trailing input", i);
    x = x_elt(n);
  } else if (text.rfind("theta:", i) == i) {
    i += 6;
    long m = parse_long(text, i);
    expect(text, i, ',');
    long n = parse_long(text, i);
    if (m < 0 || n < 0) throw ElementParseError("negative theta index", i);
    bool lr = false, rs = false;
    if (i < text.size()) {
      expect(text, i, ':');
      while (i < text.size()) {
        if (text[i] == 'r' && !lr) lr = true;
        else if (text[i] == 's' && !rs) rs = true;
        else throw ElementParseError("flags must be a subset of {r,s}", i);
        ++i;
      }
    }
    x = theta_variant(m, n, lr, rs);
  } else if (i < text.size() && text[i] == '(') {
    ++i;
    long w1 = parse_long(text, i);
    expect(text, i, ',');
    long w2 = parse_long(text, i);
    expect(text, i, ',');
    long w3 = parse_long(text, i);
    expect(text, i, ')');
    if (i != text.size()) throw ElementParseError("trailing input", i);
    try {
      x = Elt::from_window(w1, w2, w3);
    } catch (const std::invalid_argument& e) {
      throw ElementParseError(e.what(), 0);
    }
  } else {
    throw ElementParseError("expected w:, x:, theta: or a window literal", i);
  }

  return have_perm ? color_perm(sigma, x) : x;
}

nlohmann::json lpoly_to_json(const LPoly& p) {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [e, c] : p.terms()) {
    if (c.fits_slong_p())
      j[std::to_string(e)] = c.get_si();
    else
      j[std::to_string(e)] = c.get_str();
  }
  return j;
}

LPoly lpoly_from_json(const nlohmann::json& j) {
  LPoly p;
  for (auto it = j.begin(); it != j.end(); ++it) {
    int e = std::stoi(it.key());
    mpz_class c = it->is_string() ? mpz_class(it->get<std::string>(), 10)
                                  : mpz_class(it->get<long>());
    p += LPoly::monomial(c, e);
  }
  return p;
}

namespace {
nlohmann::json terms_to_json(const std::map<Elt, LPoly>& terms, const char* basis) {
  std::vector<std::pair<std::pair<long, std::string>, const LPoly*>> ordered;
  ordered.reserve(terms.size());
  for (const auto& [x, p] : terms)
    ordered.push_back({{length(x), canonical_digits(x)}, &p});
  std::sort(ordered.begin(), ordered.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [key, p] : ordered)
    arr.push_back({{"elt", key.second}, {"poly", lpoly_to_json(*p)}});
  return {{"basis", basis}, {"terms", arr}};
}
}  // namespace

nlohmann::json hecke_to_json(const HeckeElt& h) { return terms_to_json(h.terms(), "standard"); }

nlohmann::json kl_combination_to_json(const KLCombination& k) {
  return terms_to_json(k.terms(), "kl");
}

HeckeElt hecke_from_json(const nlohmann::json& j) {
  if (j.at("basis").get<std::string>() != "standard")
    throw std::invalid_argument("hecke_from_json: expected standard basis");
  HeckeElt h;
  for (const auto& t : j.at("terms"))
    h.add_term(from_word(word_from_digits(t.at("elt").get<std::string>())),
               lpoly_from_json(t.at("poly")));
  return h;
}

nlohmann::json leafpath_to_json(const LeafPath& p) {
  std::string bits;
  for (uint8_t b : p.bits) bits.push_back(static_cast<char>('0' + b));
  nlohmann::json decs = nlohmann::json::array();
  for (Decoration d : p.decorations) decs.push_back(decoration_name(d));
  return {{"word", word_to_digits(p.word)},
          {"bits", bits},
          {"decorations", decs},
          {"endpoint", canonical_digits(p.endpoint)},
          {"defect", p.defect}};
}

nlohmann::json report_to_json(const VerifyReport& r) {
  return {{"suite", r.suite}, {"params", r.params}, {"pass", r.pass}, {"details", r.details}};
}

}  // namespace kla2

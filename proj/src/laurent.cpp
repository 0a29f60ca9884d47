#include "kla2/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace kla2 {

LPoly LPoly::monomial(mpz_class c, int k) {
  LPoly p;
  if (c != 0) p.terms_.emplace_back(k, std::move(c));
  return p;
}

mpz_class LPoly::coeff(int k) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), k,
                             [](const auto& t, int e) { return t.first < e; });
  if (it != terms_.end() && it->first == k) return it->second;
  return 0;
}

mpz_class LPoly::eval_at_one() const {
  mpz_class s = 0;
  for (const auto& [e, c] : terms_) s += c;
  return s;
}

std::optional<int> LPoly::min_deg() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.front().first;
}

std::optional<int> LPoly::max_deg() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.back().first;
}

bool LPoly::is_nonneg() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const auto& t) { return t.second >= 0; });
}

bool LPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.front().first == 0);
}

LPoly LPoly::bar() const {
  LPoly r;
  r.terms_.reserve(terms_.size());
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it)
    r.terms_.emplace_back(-it->first, it->second);
  return r;
}

void LPoly::prune() {
  terms_.erase(std::remove_if(terms_.begin(), terms_.end(),
                              [](const auto& t) { return t.second == 0; }),
               terms_.end());
}

LPoly operator+(const LPoly& a, const LPoly& b) {
  LPoly r;
  r.terms_.reserve(a.terms_.size() + b.terms_.size());
  auto ia = a.terms_.begin(), ib = b.terms_.begin();
  while (ia != a.terms_.end() || ib != b.terms_.end()) {
    if (ib == b.terms_.end() || (ia != a.terms_.end() && ia->first < ib->first)) {
      r.terms_.push_back(*ia++);
    } else if (ia == a.terms_.end() || ib->first < ia->first) {
      r.terms_.push_back(*ib++);
    } else {
      mpz_class c = ia->second + ib->second;
      if (c != 0) r.terms_.emplace_back(ia->first, std::move(c));
      ++ia, ++ib;
    }
  }
  return r;
}

LPoly operator-(const LPoly& a) {
  LPoly r = a;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

LPoly operator-(const LPoly& a, const LPoly& b) { return a + (-b); }

LPoly operator*(const LPoly& a, const LPoly& b) {
  if (a.terms_.empty() || b.terms_.empty()) return {};
  LPoly r;
  for (const auto& [ea, ca] : a.terms_) {
    LPoly part;
    part.terms_.reserve(b.terms_.size());
    for (const auto& [eb, cb] : b.terms_) part.terms_.emplace_back(ea + eb, ca * cb);
    r = r + part;
  }
  return r;
}

std::string LPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    mpz_class a = c;
    if (first) {
      if (a < 0) { out += "-"; a = -a; }
      first = false;
    } else {
      out += (a < 0) ? " - " : " + ";
      if (a < 0) a = -a;
    }
    if (e == 0) {
      out += a.get_str();
    } else {
      if (a != 1) out += a.get_str() + "*";
      out += (e == 1) ? "v" : "v^" + std::to_string(e);
    }
  }
  return out;
}

LPoly LPoly::parse(const std::string& text) {
  LPoly out;
  size_t i = 0;
  auto skip_ws = [&] { while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
  skip_ws();
  if (i == text.size()) throw std::invalid_argument("LPoly::parse: empty input");
  bool any = false;
  while (true) {
    skip_ws();
    if (i == text.size()) break;
    int sign = 1;
    if (text[i] == '+' || text[i] == '-') {
      if (text[i] == '-') sign = -1;
      ++i;
      skip_ws();
    } else if (any) {
      throw std::invalid_argument("LPoly::parse: expected '+' or '-' at offset " + std::to_string(i));
    }
    std::string digits;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) digits.push_back(text[i++]);
    mpz_class c = digits.empty() ? mpz_class(1) : mpz_class(digits, 10);
    if (sign < 0) c = -c;
    skip_ws();
    if (i < text.size() && text[i] == '*') { ++i; skip_ws(); }
    int exp = 0;
    if (i < text.size() && text[i] == 'v') {
      ++i;
      exp = 1;
      if (i < text.size() && text[i] == '^') {
        ++i;
        bool neg = false;
        if (i < text.size() && (text[i] == '-' || text[i] == '+')) neg = (text[i++] == '-');
        std::string ed;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ed.push_back(text[i++]);
        if (ed.empty()) throw std::invalid_argument("LPoly::parse: missing exponent at offset " + std::to_string(i));
        exp = std::stoi(ed);
        if (neg) exp = -exp;
      }
    } else if (digits.empty()) {
      throw std::invalid_argument("LPoly::parse: expected term at offset " + std::to_string(i));
    }
    out += monomial(c, exp);
    any = true;
  }
  if (!any) throw std::invalid_argument("LPoly::parse: no terms");
  return out;
}

}  // namespace kla2

// io.hpp — element literals, JSON forms of the core types.
//
// Element grammar:  elem := ["perm:"PERM"/"] body
//                   body := "w:"[123]* | "x:"INT | "theta:"INT","INT[":"FLAGS]
//                           | "(" INT "," INT "," INT ")"
// with PERM a permutation of 123 and FLAGS a subset of {r,s}.  Flags multiply
// by theta_r on the left / theta_s on the right; perm applies last.

#pragma once

#include <json.hpp>

#include <stdexcept>
#include <string>

#include "kla2/hecke.hpp"
#include "kla2/leaves.hpp"
#include "kla2/projcoeff.hpp"
#include "kla2/verify.hpp"

namespace kla2 {

struct ElementParseError : std::runtime_error {
  size_t offset;
  ElementParseError(const std::string& what, size_t off)
      : std::runtime_error(what + " (at byte " + std::to_string(off) + ")"), offset(off) {}
};

Elt parse_element(const std::string& text);

nlohmann::json lpoly_to_json(const LPoly& p);        // {"-2":1,"0":3,...}
LPoly lpoly_from_json(const nlohmann::json& j);

// {"basis":"standard","terms":[{"elt":"<canonical word>","poly":{...}},...]},
// terms ordered by (length, canonical word).
nlohmann::json hecke_to_json(const HeckeElt& h);
HeckeElt hecke_from_json(const nlohmann::json& j);
nlohmann::json kl_combination_to_json(const KLCombination& k);

nlohmann::json leafpath_to_json(const LeafPath& p);

nlohmann::json report_to_json(const VerifyReport& r);

}  // namespace kla2

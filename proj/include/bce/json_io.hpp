#pragma once

// JSON encodings of coefficients, algebra elements and truncated matrices.
//
//   coefficient:  Z "12" | Q "3/4" | F_p 3 | F_{p^k} [c0, c1, ...] |
//                 Q(sqrt) [{"s": "2", "q": "1/2"}, ...]
//   group ring:   {"ring": tag, "terms": [{"r": "1/3", "c": ...}, ...]}
//   crossed prod: {"ring": tag, "basis": "mu" | "nu",
//                  "terms": [{"r": "1/3", "deg": "2/5", "c": ...}, ...]}
//   C_p:          {"ring": tag, "algebra": "cp",
//                  "terms": [{"k": -1, "a": "1/2^1", "c": ...}, ...]}
//
// Terms are emitted in the canonical sort order of each algebra.

#include <json.hpp>
#include <variant>

#include "bce/char_p.hpp"
#include "bce/hecke.hpp"

namespace bce {

using Json = nlohmann::json;

using AlgebraValue = std::variant<GroupRingElem, BCElem, HeckeElem, CpElem>;

Json coeff_to_json(const Coeff& c);
Coeff coeff_from_json(const Ring& ring, const Json& j);

Json to_json(const GroupRingElem& x);
Json to_json(const BCElem& x);
Json to_json(const HeckeElem& x);
Json to_json(const CpElem& x);
Json to_json(const AlgebraValue& v);
Json to_json(const TriangularMatrix& m);

/// Dispatches on the "algebra" / "basis" keys; throws bce::Error on bad input.
AlgebraValue from_json(const Json& j);

}  // namespace bce

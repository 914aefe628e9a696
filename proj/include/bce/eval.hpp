#pragma once

// Ring-parametric evaluation of expressions and normal-form printing.

#include <string>
#include <variant>

#include "bce/expr.hpp"
#include "bce/json_io.hpp"

namespace bce {

/// A scalar, an element of the crossed product A, of the Hecke presentation,
/// or of the characteristic-p algebra C_p. Group-ring elements are the
/// degree-one part of A.
using Value = std::variant<Coeff, BCElem, HeckeElem, CpElem>;

Value evaluate(const Expr& x, const Ring& ring);

/// Sorted normal form, e.g. "3*mu~(2)*e(7/12)*mu*(5) - e(1/3)".
std::string format(const Value& v);
std::string format(const GroupRingElem& x);
std::string format(const BCElem& x);
std::string format(const HeckeElem& x);
std::string format(const CpElem& x);
std::string format(const AlgebraValue& v);

/// Scalars are encoded as multiples of 1 in A.
Json value_to_json(const Value& v);

/// The C_p element a value denotes, for matrix dumps: scalars and
/// p-power group-ring elements are carried over by iota.
CpElem as_cp(const Value& v);

}  // namespace bce

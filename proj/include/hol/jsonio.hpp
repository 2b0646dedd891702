#ifndef HOL_JSONIO_HPP
#define HOL_JSONIO_HPP

#include <json.hpp>

#include "hol/ideals.hpp"
#include "hol/numberfield.hpp"

namespace hol {

using json = nlohmann::json;

/*
 * Shared wire formats:
 *   polynomial   -> array of ascending coefficients, integers or [num, den]
 *   number field -> {"poly": [...]}
 *   element      -> {"coords": ["p/q", ...]}
 *   automorphism -> {"image": element}
 *   prime ideal  -> {"p", "g", "e", "f", "label"}
 */

json poly_to_json(const UniPoly& f);
UniPoly poly_from_json(const json& j);  // SchemaViolation on malformed input

// accepts "1,0,-2" CSV, a JSON array, or "@path" to read a file containing either
UniPoly poly_from_cli(const std::string& text);

json field_to_json(const NumberField& K);
NumberField field_from_json(const json& j, int prime_budget = 64);

json element_to_json(const NFElement& x);
NFElement element_from_json(const NumberField& K, const json& j);

json automorphism_to_json(const NFAutomorphism& a);
NFAutomorphism automorphism_from_json(const NumberField& K, const json& j);

json prime_ideal_to_json(const PrimeIdeal& P);

}  // namespace hol

#endif

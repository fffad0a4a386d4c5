// Presentation of canonical A-polynomials: text, LaTeX, and the JSON term
// schema shared by the CLI and the python bindings.
//
// Terms are always emitted in lex(L > M) descending order and integer
// coefficients as exact decimal strings, so every rendering of the same
// polynomial is byte-identical across runs.

#pragma once

#include <nlohmann/json.hpp>

#include "apoly/pipelines.hpp"

namespace apoly {

using ordered_json = nlohmann::ordered_json;

// "L + M^6", "L^2 M^4 - L M^8 + ..."; unit coefficients are omitted,
// exponent 1 prints bare.  Input must be Z-free (canonical A-polynomials
// are); anything else is a logic error.
std::string to_text(const LaurentPoly& p);

// Same term conventions with braced exponents: "L^{2} M^{4} - L M^{8} + ...".
std::string to_latex(const LaurentPoly& p);

// [{"coeff":"1","e_L":1,"e_M":0}, ...] in lex(L > M) descending order.
ordered_json terms_json(const LaurentPoly& p);

// Inverse of terms_json; used to round-trip CLI output.
LaurentPoly poly_from_terms_json(const ordered_json& terms);

// {"n":..,"method":"..","polynomial":[...]}
ordered_json compute_record(const APoly& a);

// {"n":..,"method":"all","polynomial":[...],"agree":..,"elapsed_ms":{..}}
ordered_json verify_record(const VerifyReport& report);

}  // namespace apoly

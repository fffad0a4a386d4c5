// Variable elimination by Sylvester resultants.
//
// The determinant is evaluated fraction-free (Bareiss one-step), with row
// pivoting on zero pivots and a zero-determinant short-circuit when an
// entire pivot column vanishes.  Every division performed is exact in
// Z[L^{±1}, M^{±1}]; a non-exact division is an internal error.

#pragma once

#include "apoly/laurent.hpp"

namespace apoly {

struct SylvesterMatrix {
    int size = 0;
    std::vector<LaurentPoly> entries;  // row-major, size * size

    LaurentPoly& at(int row, int col) {
        return entries[static_cast<std::size_t>(row) * static_cast<std::size_t>(size) + static_cast<std::size_t>(col)];
    }
    const LaurentPoly& at(int row, int col) const {
        return entries[static_cast<std::size_t>(row) * static_cast<std::size_t>(size) + static_cast<std::size_t>(col)];
    }
};

// Standard Sylvester matrix of p and q with respect to var.  Negative
// var-exponents are first cleared by a unit monomial (which changes the
// resultant only by a factor the downstream canonicalization absorbs).
// Throws on zero input.
SylvesterMatrix sylvester(const LaurentPoly& p, const LaurentPoly& q, Var var = Var::Z);

// Determinant by fraction-free elimination; destructive on the copy.
LaurentPoly fraction_free_determinant(SylvesterMatrix mat);

// res_var(p, q) = det sylvester(p, q, var), exact in Z[L^{±1}, M^{±1}].
LaurentPoly resultant(const LaurentPoly& p, const LaurentPoly& q, Var var = Var::Z);

// p / q when the division is exact, std::nullopt otherwise (Indivisible).
// Repeated leading-term division in lex(L > M > Z) after shifting both
// operands to true polynomials; unit (monomial, coefficient ±1) divisors
// never fail.  Throws on q == 0.
std::optional<LaurentPoly> exact_divide(const LaurentPoly& p, const LaurentPoly& q);

}  // namespace apoly

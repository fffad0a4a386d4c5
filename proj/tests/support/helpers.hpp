// Shared test utilities: terse polynomial literals and the random sparse
// generators used by the property suites.

#pragma once

#include <random>
#include <vector>

#include "apoly/laurent.hpp"

namespace apoly::testing {

struct TermSpec {
    long coeff;
    int l;
    int m;
    int z;
};

inline LaurentPoly make_poly(std::initializer_list<TermSpec> terms) {
    LaurentPoly p;
    for (const auto& t : terms) p.add_term(ExpVec{t.l, t.m, t.z}, t.coeff);
    return p;
}

// Random sparse Laurent polynomial: up to max_terms terms, exponents in
// [-exp_bound, exp_bound], coefficients in [-coeff_bound, coeff_bound].
inline LaurentPoly random_poly(std::mt19937_64& rng, int max_terms = 12, int exp_bound = 8,
                               long coeff_bound = 1000000) {
    std::uniform_int_distribution<int> term_count(0, max_terms);
    std::uniform_int_distribution<int> exp(-exp_bound, exp_bound);
    std::uniform_int_distribution<long> coeff(-coeff_bound, coeff_bound);
    LaurentPoly p;
    int terms = term_count(rng);
    for (int i = 0; i < terms; ++i) {
        p.add_term(ExpVec{exp(rng), exp(rng), exp(rng)}, coeff(rng));
    }
    return p;
}

inline LaurentPoly random_nonzero_poly(std::mt19937_64& rng, int max_terms = 12,
                                       int exp_bound = 8, long coeff_bound = 1000000) {
    for (;;) {
        LaurentPoly p = random_poly(rng, max_terms, exp_bound, coeff_bound);
        if (!p.is_zero()) return p;
    }
}

// ±X^e, a unit of the Laurent ring.
inline LaurentPoly random_unit(std::mt19937_64& rng, int exp_bound = 5) {
    std::uniform_int_distribution<int> exp(-exp_bound, exp_bound);
    std::uniform_int_distribution<int> flip(0, 1);
    return LaurentPoly::monomial(flip(rng) ? 1 : -1, ExpVec{exp(rng), exp(rng), exp(rng)});
}

}  // namespace apoly::testing

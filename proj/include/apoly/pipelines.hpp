// The three end-to-end A-polynomial pipelines for the twist knot
// K_n = J(2,2n), plus cross-method verification.
//
//   explicit      — the closed-form sum in L, M, assembled with all
//                   denominators pre-cleared by the M^{2|n|} (L+M^2)^k
//                   prefactor, term by term.
//   substitution  — r_n from the trace recurrence, then the multiply-
//                   through substitution Z := (M - M^{-1})(1-L) / (M + L M^{-1}).
//   resultant     — res_Z(r_n, s'), or res_Z(r_n, s_n) on the full route.
//
// All three canonicalize to the same polynomial; verify() checks that
// exactly.  A-polynomials are defined up to units ±L^a M^b and integer
// content, so every equality claim is made on canonical forms.

#pragma once

#include <chrono>
#include <map>
#include <optional>

#include "apoly/elimination.hpp"
#include "apoly/rep.hpp"

namespace apoly {

enum class Method { Explicit, Substitution, Resultant };

constexpr const char* method_name(Method m) {
    switch (m) {
        case Method::Explicit: return "explicit";
        case Method::Substitution: return "substitution";
        default: return "resultant";
    }
}

// Parses "explicit", "substitution" or "resultant".
std::optional<Method> method_from_name(const std::string& name);

// The unit and content stripped from a pipeline's raw output by
// canonicalization.
struct RawUnit {
    ExpVec shift;
    int sign = 1;
    mpz_class content = 1;
};

// A canonically normalized A-polynomial: no negative exponents, content 1,
// positive leading coefficient, and no Z in any term.
struct APoly {
    int n = 0;
    Method method = Method::Explicit;
    LaurentPoly poly;
    RawUnit raw_unit;
};

struct MethodResult {
    LaurentPoly poly;  // canonical
    double elapsed_ms = 0.0;
};

struct VerifyReport {
    int n = 0;
    bool agree = false;
    LaurentPoly canonical;
    std::map<Method, MethodResult> per_method;
    // Quotient res_Z(r_n, s_n) / res_Z(r_n, s') of the canonical forms,
    // when the full route was requested and the division is exact.
    std::optional<LaurentPoly> extraneous_factor;
};

// Closed-form pipeline.  n = 0 is routed through the n <= 0 branch
// (the n >= 1 sum is empty there), giving A_0 = 1.
APoly a_poly_explicit(int n);

// Recurrence + substitution pipeline.
APoly a_poly_substitution(int n);

// Resultant pipeline.  full = false eliminates Z against s' (linear in Z,
// small Sylvester matrix); full = true eliminates against s_n, whose
// resultant the s'-route answer must divide exactly.  full = true is
// degenerate at n = 0 (s_0 = 0) and throws.
APoly a_poly_resultant(int n, bool full = false);

// Runs all three pipelines and compares canonical forms.
// with_full_route additionally computes the full-s_n resultant (n != 0)
// and records the extraneous factor.  corrupt, when set, deliberately
// damages that method's result after computation — a test hook for the
// disagreement path.
VerifyReport verify(int n, bool with_full_route = false,
                    std::optional<Method> corrupt = std::nullopt);

}  // namespace apoly

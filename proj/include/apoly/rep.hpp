// SL2 representation data of the twist-knot group, for K_n = J(2,2n).
//
// With meridian generators a, b and the commutator word w = a b^{-1} a^{-1} b,
// the conjugated normal form is
//     rho(a) = [[M, 1], [0, M^{-1}]],   rho(b) = [[M, 0], [Z, M^{-1}]].
// Powers of rho(w) obey the trace recurrence
//     rho(w^n) = chi * rho(w^{n-1}) - rho(w^{n-2}),   chi = tr rho(w),
// which also drives the Riley-type polynomial family
//     r_n = (M - M^{-1}) w12^n + w22^n,   r_n = chi r_{n-1} - r_{n-2}.
// r_n is computed by three independent routes (matrix powering, the
// recurrence, and a binomial closed form) that must agree exactly.

#pragma once

#include "apoly/laurent.hpp"

namespace apoly {

// 2x2 matrix with Laurent-polynomial entries.
struct Mat2 {
    LaurentPoly a11, a12, a21, a22;

    static Mat2 identity() { return {1, 0, 0, 1}; }

    LaurentPoly det() const { return a11 * a22 - a12 * a21; }
    LaurentPoly trace() const { return a11 + a22; }

    // Adjugate inverse; only valid for det == 1 (checked).
    Mat2 inverse_sl2() const;

    friend Mat2 operator*(const Mat2& x, const Mat2& y);
    friend bool operator==(const Mat2&, const Mat2&) = default;
};

Mat2 scalar_times(const LaurentPoly& s, const Mat2& x);

Mat2 rho_a();
Mat2 rho_b();

// rho(w) computed as the product rho(a) rho(b)^{-1} rho(a)^{-1} rho(b).
Mat2 rho_w();

// chi = tr rho(w) = Z^2 + (M - M^{-1})^2 Z + 2.
LaurentPoly chi();

// (M - M^{-1})^2, the coefficient the closed forms are organized around.
LaurentPoly meridian_u();

// rho(w^n) for any integer n.  Forward trace recurrence for n >= 0;
// for n < 0 the Cayley-Hamilton inverse rho(w)^{-1} = chi*I - rho(w)
// seeds the recurrence run backward.
Mat2 rho_w_power(int n);

// r_n extracted from rho_w_power(n):  (M - M^{-1}) w12^n + w22^n.
LaurentPoly r_poly_matrix(int n);

// r_n from the scalar recurrence r_n = chi r_{n-1} - r_{n-2},
// seeded r_0 = 1, r_1 = 1 + Z + (M - M^{-1})^2.
LaurentPoly r_poly_recursive(int n);

// r_n from the binomial closed form:
//   n >= 1:  sum_{i=0}^{2n-1} C(n + floor((i-1)/2), i) Z^i (1 + Z^{-1}U)^{floor((i+1)/2)}
//   n <= 0:  sum_{i=0}^{-2n}  C(-n + floor(i/2), i) (-Z)^i (1 + Z^{-1}U)^{floor((i+1)/2)}
// with U = (M - M^{-1})^2 and every out-of-range binomial equal to zero.
// The Z^{-1} factors always cancel; a surviving negative Z-exponent is an
// internal error.
LaurentPoly r_poly_closed(int n);

// s_n = w12^n L + conj(w12^n), where conj is the bar involution M -> M^{-1}.
LaurentPoly s_poly(int n);

// s' = w12^1 L + conj(w12^1) = (M - M^{-1} + Z M^{-1}) L + M^{-1} - M + Z M.
// The n-independent simplification of s_n valid for twist knots.
LaurentPoly s_prime();

// Longitude eigenvalue as a polynomial in M, Z:
//     w11^n conj(w22^n) + Z w12^n conj(w12^n).
// Used for finite-field validation only.
LaurentPoly longitude_entry(int n);

}  // namespace apoly

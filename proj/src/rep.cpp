#include "apoly/rep.hpp"

namespace apoly {

namespace {

LaurentPoly var_L() { return LaurentPoly::variable(Var::L); }
LaurentPoly var_M(int k = 1) { return LaurentPoly::variable(Var::M, k); }
LaurentPoly var_Z(int k = 1) { return LaurentPoly::variable(Var::Z, k); }

}  // namespace

Mat2 operator*(const Mat2& x, const Mat2& y) {
    return {x.a11 * y.a11 + x.a12 * y.a21, x.a11 * y.a12 + x.a12 * y.a22,
            x.a21 * y.a11 + x.a22 * y.a21, x.a21 * y.a12 + x.a22 * y.a22};
}

Mat2 scalar_times(const LaurentPoly& s, const Mat2& x) {
    return {s * x.a11, s * x.a12, s * x.a21, s * x.a22};
}

Mat2 Mat2::inverse_sl2() const {
    if (det() != LaurentPoly(1)) throw std::logic_error("inverse_sl2: determinant is not 1");
    return {a22, -a12, -a21, a11};
}

Mat2 rho_a() { return {var_M(), 1, 0, var_M(-1)}; }

Mat2 rho_b() { return {var_M(), 0, var_Z(), var_M(-1)}; }

Mat2 rho_w() {
    Mat2 a = rho_a(), b = rho_b();
    return a * b.inverse_sl2() * a.inverse_sl2() * b;
}

LaurentPoly chi() { return rho_w().trace(); }

LaurentPoly meridian_u() {
    LaurentPoly d = var_M() - var_M(-1);
    return d * d;
}

Mat2 rho_w_power(int n) {
    if (n == 0) return Mat2::identity();
    const LaurentPoly x = chi();
    const Mat2 w = rho_w();
    if (n > 0) {
        Mat2 prev = Mat2::identity();  // w^0
        Mat2 cur = w;                  // w^1
        for (int k = 1; k < n; ++k) {
            Mat2 next = {x * cur.a11 - prev.a11, x * cur.a12 - prev.a12,
                         x * cur.a21 - prev.a21, x * cur.a22 - prev.a22};
            prev = cur;
            cur = next;
        }
        return cur;
    }
    // Backward: w^{k-2} = chi w^{k-1} - w^k, starting from (w^1, w^0).
    // One step yields w^{-1} = chi I - rho(w), the Cayley-Hamilton inverse.
    Mat2 above = w;                // w^{k+1}
    Mat2 cur = Mat2::identity();   // w^k, k = 0
    for (int k = 0; k > n; --k) {
        Mat2 below = {x * cur.a11 - above.a11, x * cur.a12 - above.a12,
                      x * cur.a21 - above.a21, x * cur.a22 - above.a22};
        above = cur;
        cur = below;
    }
    return cur;
}

LaurentPoly r_poly_matrix(int n) {
    Mat2 w = rho_w_power(n);
    return (var_M() - var_M(-1)) * w.a12 + w.a22;
}

LaurentPoly r_poly_recursive(int n) {
    const LaurentPoly r0(1);
    const LaurentPoly r1 = LaurentPoly(1) + var_Z() + meridian_u();
    if (n == 0) return r0;
    if (n == 1) return r1;
    const LaurentPoly x = chi();
    if (n > 1) {
        LaurentPoly prev = r0, cur = r1;
        for (int k = 1; k < n; ++k) {
            LaurentPoly next = x * cur - prev;
            prev = std::move(cur);
            cur = std::move(next);
        }
        return cur;
    }
    LaurentPoly above = r1, cur = r0;
    for (int k = 0; k > n; --k) {
        LaurentPoly below = x * cur - above;
        above = std::move(cur);
        cur = std::move(below);
    }
    return cur;
}

namespace {

// C(a, b) with every out-of-range case (a < 0, b < 0, or b > a) equal to 0.
mpz_class binom(long a, long b) {
    if (a < 0 || b < 0 || b > a) return 0;
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(b));
    return r;
}

long floor_div2(long v) { return (v >= 0) ? v / 2 : -((-v + 1) / 2); }

}  // namespace

LaurentPoly r_poly_closed(int n) {
    const LaurentPoly base = LaurentPoly(1) + var_Z(-1) * meridian_u();  // 1 + Z^{-1} U
    LaurentPoly total;
    if (n >= 1) {
        for (long i = 0; i <= 2L * n - 1; ++i) {
            mpz_class c = binom(n + floor_div2(i - 1), i);
            if (c == 0) continue;
            total += LaurentPoly(c) * var_Z(static_cast<int>(i)) *
                     pow(base, static_cast<unsigned>(floor_div2(i + 1)));
        }
    } else {
        for (long i = 0; i <= -2L * n; ++i) {
            mpz_class c = binom(-static_cast<long>(n) + floor_div2(i), i);
            if (c == 0) continue;
            if (i % 2 != 0) c = -c;  // (-Z)^i
            total += LaurentPoly(c) * var_Z(static_cast<int>(i)) *
                     pow(base, static_cast<unsigned>(floor_div2(i + 1)));
        }
    }
    if (!total.is_zero() && degree_range(total, Var::Z).first < 0) {
        throw std::logic_error("r_poly_closed: negative Z-exponent survived cancellation");
    }
    return total;
}

LaurentPoly s_poly(int n) {
    LaurentPoly w12 = rho_w_power(n).a12;
    return w12 * var_L() + bar_involution(w12);
}

LaurentPoly s_prime() {
    LaurentPoly w12 = var_M() - var_M(-1) + var_Z() * var_M(-1);
    return w12 * var_L() + var_M(-1) - var_M() + var_Z() * var_M();
}

LaurentPoly longitude_entry(int n) {
    Mat2 w = rho_w_power(n);
    return w.a11 * bar_involution(w.a22) + var_Z() * w.a12 * bar_involution(w.a12);
}

}  // namespace apoly

#include "apoly/pipelines.hpp"

namespace apoly {

namespace {

LaurentPoly var_L() { return LaurentPoly::variable(Var::L); }
LaurentPoly var_M(int k = 1) { return LaurentPoly::variable(Var::M, k); }

mpz_class binom(long a, long b) {
    if (a < 0 || b < 0 || b > a) return 0;
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(b));
    return r;
}

long floor_div2(long v) { return (v >= 0) ? v / 2 : -((-v + 1) / 2); }

APoly finish(int n, Method method, const LaurentPoly& raw) {
    CanonicalForm cf = canonicalize(raw);
    return {n, method, std::move(cf.poly), {cf.unit_shift, cf.sign, std::move(cf.content)}};
}

}  // namespace

std::optional<Method> method_from_name(const std::string& name) {
    if (name == "explicit") return Method::Explicit;
    if (name == "substitution") return Method::Substitution;
    if (name == "resultant") return Method::Resultant;
    return std::nullopt;
}

APoly a_poly_explicit(int n) {
    const LaurentPoly m2_minus_1 = var_M(2) - 1;          // M^2 - 1
    const LaurentPoly l_plus_m2 = var_L() + var_M(2);     // L + M^2
    const LaurentPoly one_minus_l = LaurentPoly(1) - var_L();
    const LaurentPoly m2_minus_lm2 = var_M(2) - var_L() * var_M(-2);  // M^2 - L M^{-2}

    LaurentPoly total;
    if (n >= 1) {
        const LaurentPoly prefactor = var_M(2 * n);
        for (long i = 0; i <= 2L * n - 1; ++i) {
            mpz_class c = binom(n + floor_div2(i - 1), i);
            if (c == 0) continue;
            LaurentPoly term = LaurentPoly(c) * prefactor;
            term *= pow(m2_minus_1, static_cast<unsigned>(i));
            term *= pow(l_plus_m2, static_cast<unsigned>(2L * n - 1 - i));
            term *= pow(one_minus_l, static_cast<unsigned>(floor_div2(i)));
            term *= pow(m2_minus_lm2, static_cast<unsigned>(floor_div2(i + 1)));
            total += term;
        }
    } else {
        // n <= 0 branch.  The summand carries (-1)^i from the closed form's
        // (-Z)^i; the substitution Z := (M - M^{-1})(1-L)/(M + L M^{-1})
        // keeps that sign.
        const LaurentPoly prefactor = var_M(-2 * n);
        for (long i = 0; i <= -2L * n; ++i) {
            mpz_class c = binom(-static_cast<long>(n) + floor_div2(i), i);
            if (c == 0) continue;
            if (i % 2 != 0) c = -c;
            LaurentPoly term = LaurentPoly(c) * prefactor;
            term *= pow(m2_minus_1, static_cast<unsigned>(i));
            term *= pow(l_plus_m2, static_cast<unsigned>(-2L * n - i));
            term *= pow(one_minus_l, static_cast<unsigned>(floor_div2(i)));
            term *= pow(m2_minus_lm2, static_cast<unsigned>(floor_div2(i + 1)));
            total += term;
        }
    }

    // The M^{-2} powers must have cancelled against the M-prefactor.
    for (const auto& [e, c] : total.terms()) {
        if (e.l < 0 || e.m < 0 || e.z != 0) {
            throw std::logic_error("a_poly_explicit: uncleared exponent in " + debug_string(total));
        }
    }
    return finish(n, Method::Explicit, total);
}

APoly a_poly_substitution(int n) {
    LaurentPoly r = r_poly_recursive(n);
    const LaurentPoly num = (var_M() - var_M(-1)) * (LaurentPoly(1) - var_L());
    const LaurentPoly den = var_M() + var_L() * var_M(-1);
    Substitution sub = substitute(r, Var::Z, num, den);
    return finish(n, Method::Substitution, sub.poly);
}

APoly a_poly_resultant(int n, bool full) {
    if (full && n == 0) {
        throw std::invalid_argument("a_poly_resultant: full route degenerates at n = 0 (s_0 = 0)");
    }
    LaurentPoly r = r_poly_recursive(n);
    LaurentPoly s = full ? s_poly(n) : s_prime();
    LaurentPoly res = resultant(r, s, Var::Z);
    if (res.is_zero()) {
        throw std::runtime_error("a_poly_resultant: resultant vanished identically");
    }
    return finish(n, Method::Resultant, res);
}

VerifyReport verify(int n, bool with_full_route, std::optional<Method> corrupt) {
    using clock = std::chrono::steady_clock;
    VerifyReport report;
    report.n = n;

    auto run = [&](Method m, auto&& fn) {
        auto start = clock::now();
        APoly result = fn();
        double ms = std::chrono::duration<double, std::milli>(clock::now() - start).count();
        if (corrupt && *corrupt == m) result.poly += 1;  // deliberate damage (test hook)
        report.per_method.emplace(m, MethodResult{std::move(result.poly), ms});
    };
    run(Method::Explicit, [n] { return a_poly_explicit(n); });
    run(Method::Substitution, [n] { return a_poly_substitution(n); });
    run(Method::Resultant, [n] { return a_poly_resultant(n); });

    const LaurentPoly& reference = report.per_method.at(Method::Explicit).poly;
    report.agree = true;
    for (const auto& [m, r] : report.per_method) {
        if (r.poly != reference) report.agree = false;
    }
    report.canonical = reference;

    if (with_full_route && n != 0) {
        APoly full = a_poly_resultant(n, true);
        report.extraneous_factor =
            exact_divide(full.poly, report.per_method.at(Method::Resultant).poly);
    }
    return report;
}

}  // namespace apoly

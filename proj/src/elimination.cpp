#include "apoly/elimination.hpp"

#include <utility>

namespace apoly {

SylvesterMatrix sylvester(const LaurentPoly& p, const LaurentPoly& q, Var var) {
    if (p.is_zero() || q.is_zero()) throw std::invalid_argument("sylvester: zero input");

    // split_by_var drops the minimum exponent, which is exactly the unit
    // clearing for negative var-exponents.
    auto [plo, a] = split_by_var(p, var);
    auto [qlo, b] = split_by_var(q, var);
    const int m = static_cast<int>(a.size()) - 1;  // deg p after clearing
    const int l = static_cast<int>(b.size()) - 1;  // deg q after clearing

    SylvesterMatrix mat;
    mat.size = m + l;
    mat.entries.assign(static_cast<std::size_t>(mat.size) * static_cast<std::size_t>(mat.size),
                       LaurentPoly{});
    // l rows of p-coefficients, descending from a_m.
    for (int row = 0; row < l; ++row) {
        for (int j = 0; j <= m; ++j) mat.at(row, row + j) = a[static_cast<std::size_t>(m - j)];
    }
    // m rows of q-coefficients, descending from b_l.
    for (int row = 0; row < m; ++row) {
        for (int j = 0; j <= l; ++j) mat.at(l + row, row + j) = b[static_cast<std::size_t>(l - j)];
    }
    return mat;
}

LaurentPoly fraction_free_determinant(SylvesterMatrix mat) {
    const int n = mat.size;
    if (n == 0) return 1;
    if (n == 1) return mat.at(0, 0);

    int sign = 1;
    LaurentPoly prev(1);
    for (int k = 0; k + 1 < n; ++k) {
        if (mat.at(k, k).is_zero()) {
            int pivot_row = -1;
            for (int r = k + 1; r < n; ++r) {
                if (!mat.at(r, k).is_zero()) {
                    pivot_row = r;
                    break;
                }
            }
            if (pivot_row < 0) return 0;  // whole column zero
            for (int c = k; c < n; ++c) std::swap(mat.at(k, c), mat.at(pivot_row, c));
            sign = -sign;
        }
        const bool divide = !(prev == LaurentPoly(1));
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                LaurentPoly numer = mat.at(k, k) * mat.at(i, j) - mat.at(i, k) * mat.at(k, j);
                if (divide) {
                    auto quotient = exact_divide(numer, prev);
                    if (!quotient) {
                        throw std::logic_error("fraction_free_determinant: non-exact division");
                    }
                    mat.at(i, j) = std::move(*quotient);
                } else {
                    mat.at(i, j) = std::move(numer);
                }
            }
            mat.at(i, k) = LaurentPoly{};
        }
        prev = mat.at(k, k);
    }
    LaurentPoly result = mat.at(n - 1, n - 1);
    return sign < 0 ? -result : result;
}

LaurentPoly resultant(const LaurentPoly& p, const LaurentPoly& q, Var var) {
    return fraction_free_determinant(sylvester(p, q, var));
}

std::optional<LaurentPoly> exact_divide(const LaurentPoly& p, const LaurentPoly& q) {
    if (q.is_zero()) throw std::invalid_argument("exact_divide: division by zero");
    if (p.is_zero()) return LaurentPoly{};

    // Shift both to true polynomials; the quotient picks up the unit
    // monomial X^{shift_p - shift_q} at the end.
    const CanonicalForm pc = canonicalize(p);
    const CanonicalForm qc = canonicalize(q);
    // Keep content and sign on the dividend side so coefficients stay exact.
    LaurentPoly dividend = LaurentPoly(pc.sign * pc.content) * pc.poly;
    const LaurentPoly divisor = LaurentPoly(qc.sign * qc.content) * qc.poly;

    const auto& [qe, qcoef] = divisor.leading_term();
    LaurentPoly quotient;
    while (!dividend.is_zero()) {
        const auto& [re, rcoef] = dividend.leading_term();
        ExpVec e = re - qe;
        if (e.l < 0 || e.m < 0 || e.z < 0) return std::nullopt;
        if (!mpz_divisible_p(rcoef.get_mpz_t(), qcoef.get_mpz_t())) return std::nullopt;
        mpz_class c;
        mpz_divexact(c.get_mpz_t(), rcoef.get_mpz_t(), qcoef.get_mpz_t());
        LaurentPoly t = LaurentPoly::monomial(c, e);
        quotient += t;
        dividend -= t * divisor;
    }
    return quotient * LaurentPoly::monomial(1, pc.unit_shift - qc.unit_shift);
}

}  // namespace apoly

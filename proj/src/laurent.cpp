#include "apoly/laurent.hpp"

#include <algorithm>
#include <sstream>

namespace apoly {

void LaurentPoly::add_term(const ExpVec& e, const mpz_class& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
    for (const auto& [e, c] : rhs.terms_) add_term(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) {
    for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
    return *this;
}

LaurentPoly operator-(const LaurentPoly& a) {
    LaurentPoly r;
    for (const auto& [e, c] : a.terms_) r.terms_.emplace(e, -c);
    return r;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    mpz_class prod;
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            prod = ca * cb;
            r.add_term(ea + eb, prod);
        }
    }
    return r;
}

LaurentPoly pow(const LaurentPoly& p, unsigned k) {
    LaurentPoly result(1);
    LaurentPoly base = p;
    while (k > 0) {
        if (k & 1u) result *= base;
        k >>= 1u;
        if (k > 0) base *= base;
    }
    return result;
}

LaurentPoly bar_involution(const LaurentPoly& p) {
    LaurentPoly r;
    for (const auto& [e, c] : p.terms()) r.add_term(ExpVec{e.l, -e.m, e.z}, c);
    return r;
}

std::pair<int, int> degree_range(const LaurentPoly& p, Var var) {
    if (p.is_zero()) throw std::invalid_argument("degree_range of zero polynomial");
    int lo = 0, hi = 0;
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        int k = e.get(var);
        if (first) {
            lo = hi = k;
            first = false;
        } else {
            lo = std::min(lo, k);
            hi = std::max(hi, k);
        }
    }
    return {lo, hi};
}

std::pair<int, std::vector<LaurentPoly>> split_by_var(const LaurentPoly& p, Var var) {
    if (p.is_zero()) return {0, {}};
    auto [lo, hi] = degree_range(p, var);
    std::vector<LaurentPoly> coeffs(static_cast<std::size_t>(hi - lo + 1));
    for (const auto& [e, c] : p.terms()) {
        ExpVec stripped = e;
        stripped.set(var, 0);
        coeffs[static_cast<std::size_t>(e.get(var) - lo)].add_term(stripped, c);
    }
    return {lo, std::move(coeffs)};
}

namespace {

bool is_unit_monomial(const LaurentPoly& p) {
    if (p.term_count() != 1) return false;
    const auto& c = p.terms().begin()->second;
    return c == 1 || c == -1;
}

}  // namespace

Substitution substitute(const LaurentPoly& p, Var var, const LaurentPoly& num,
                        const LaurentPoly& den) {
    if (den.is_zero()) throw std::invalid_argument("substitute: zero denominator");
    if (p.is_zero()) return {LaurentPoly{}, 0, 0};

    auto [lo, coeffs] = split_by_var(p, var);
    if (lo == 0 && coeffs.size() == 1) return {p, 0, 0};  // var absent

    if (is_unit_monomial(num) && is_unit_monomial(den)) {
        // num/den is a unit of the Laurent ring: substitute exactly.
        const auto& [en, cn] = *num.terms().begin();
        const auto& [ed, cd] = *den.terms().begin();
        ExpVec ratio_exp = en - ed;
        int ratio_sign = (cn == cd) ? 1 : -1;  // both ±1
        LaurentPoly q;
        for (const auto& [e, c] : p.terms()) {
            int k = e.get(var);
            ExpVec scaled = ratio_exp;
            scaled.l *= k;
            scaled.m *= k;
            scaled.z *= k;
            ExpVec stripped = e;
            stripped.set(var, 0);
            mpz_class coeff = (ratio_sign < 0 && (k % 2 != 0)) ? mpz_class(-c) : c;
            q.add_term(stripped + scaled, coeff);
        }
        return {std::move(q), 0, 0};
    }

    int hi = lo + static_cast<int>(coeffs.size()) - 1;
    int num_power = -std::min(lo, 0);
    int den_power = std::max(hi, 0);

    // q = sum_k coeffs[k] * num^{k + num_power} * den^{den_power - k}
    LaurentPoly q;
    for (std::size_t idx = 0; idx < coeffs.size(); ++idx) {
        if (coeffs[idx].is_zero()) continue;
        int k = lo + static_cast<int>(idx);
        LaurentPoly term = coeffs[idx];
        term *= pow(num, static_cast<unsigned>(k + num_power));
        term *= pow(den, static_cast<unsigned>(den_power - k));
        q += term;
    }
    return {std::move(q), den_power, num_power};
}

LaurentPoly CanonicalForm::reconstruct() const {
    return LaurentPoly::monomial(sign * content, unit_shift) * poly;
}

CanonicalForm canonicalize(const LaurentPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("canonicalize: zero polynomial");

    ExpVec mins = p.terms().begin()->first;
    mpz_class content = 0;
    for (const auto& [e, c] : p.terms()) {
        mins.l = std::min(mins.l, e.l);
        mins.m = std::min(mins.m, e.m);
        mins.z = std::min(mins.z, e.z);
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), c.get_mpz_t());
    }
    // Shifting exponents by a constant preserves lex order, so the leading
    // coefficient is the same before and after the shift.
    int sign = (p.terms().rbegin()->second < 0) ? -1 : 1;

    CanonicalForm cf;
    cf.unit_shift = mins;
    cf.sign = sign;
    cf.content = content;
    mpz_class divisor = sign * content;
    LaurentPoly q;
    for (const auto& [e, c] : p.terms()) {
        mpz_class reduced;
        mpz_divexact(reduced.get_mpz_t(), c.get_mpz_t(), divisor.get_mpz_t());
        q.add_term(e - mins, reduced);
    }
    cf.poly = std::move(q);
    return cf;
}

bool equal_up_to_units(const LaurentPoly& p, const LaurentPoly& q) {
    if (p.is_zero() || q.is_zero()) return p.is_zero() && q.is_zero();
    return canonicalize(p).poly == canonicalize(q).poly;
}

namespace {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
    std::uint64_t result = 1 % p;
    base %= p;
    while (exp > 0) {
        if (exp & 1u) result = mul_mod(result, base, p);
        base = mul_mod(base, base, p);
        exp >>= 1u;
    }
    return result;
}

bool is_prime_u64(std::uint64_t n) {
    mpz_class v(static_cast<unsigned long>(n));
    return mpz_probab_prime_p(v.get_mpz_t(), 30) != 0;
}

}  // namespace

std::uint64_t eval_mod(const LaurentPoly& p, std::uint64_t prime,
                       const std::map<Var, std::uint64_t>& assign) {
    if (prime < 2 || !is_prime_u64(prime)) {
        throw std::invalid_argument("eval_mod: modulus is not prime");
    }
    if (p.is_zero()) return 0;

    // Residues (and inverses, on demand) per variable.
    std::uint64_t value[3] = {0, 0, 0};
    std::uint64_t inverse[3] = {0, 0, 0};
    bool assigned[3] = {false, false, false};
    bool have_inverse[3] = {false, false, false};
    for (const auto& [v, r] : assign) {
        value[static_cast<int>(v)] = r % prime;
        assigned[static_cast<int>(v)] = true;
    }

    std::uint64_t total = 0;
    for (const auto& [e, c] : p.terms()) {
        std::uint64_t term = mpz_fdiv_ui(c.get_mpz_t(), prime);
        const int exps[3] = {e.l, e.m, e.z};
        for (int vi = 0; vi < 3; ++vi) {
            int k = exps[vi];
            if (k == 0) continue;
            if (!assigned[vi]) {
                throw std::invalid_argument(std::string("eval_mod: unassigned variable ") +
                                            var_name(static_cast<Var>(vi)));
            }
            std::uint64_t base = value[vi];
            if (k < 0) {
                if (base == 0) {
                    throw std::domain_error(std::string("eval_mod: no inverse of 0 for ") +
                                            var_name(static_cast<Var>(vi)));
                }
                if (!have_inverse[vi]) {
                    inverse[vi] = pow_mod(base, prime - 2, prime);
                    have_inverse[vi] = true;
                }
                base = inverse[vi];
            }
            term = mul_mod(term, pow_mod(base, static_cast<std::uint64_t>(k < 0 ? -static_cast<long long>(k) : k), prime), prime);
        }
        total = (total + term) % prime;
    }
    return total;
}

std::string debug_string(const LaurentPoly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const auto& [e, c] = *it;
        if (!first) out << (c < 0 ? " - " : " + ");
        else if (c < 0) out << "-";
        first = false;
        mpz_class mag = abs(c);
        bool has_vars = (e.l != 0 || e.m != 0 || e.z != 0);
        if (mag != 1 || !has_vars) out << mag.get_str();
        bool sep = (mag != 1 || !has_vars);
        auto emit = [&](const char* name, int k) {
            if (k == 0) return;
            if (sep) out << "*";
            out << name;
            if (k != 1) out << "^" << k;
            sep = true;
        };
        emit("L", e.l);
        emit("M", e.m);
        emit("Z", e.z);
    }
    return out.str();
}

}  // namespace apoly

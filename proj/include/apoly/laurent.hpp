// Exact sparse Laurent-polynomial arithmetic over arbitrary-precision
// integers in the three variables L, M, Z, i.e. the ring
// Z[L^{±1}, M^{±1}, Z^{±1}].  Coefficients are GMP integers; there is no
// rational arithmetic anywhere — formulas with denominators are handled
// multiply-through.
//
// Term order everywhere is lexicographic with precedence L > M > Z.
// Equality means identical term maps; "up to units" comparison goes
// through canonicalize().

#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace apoly {

// The three variables, in lex precedence order.
enum class Var : int { L = 0, M = 1, Z = 2 };

constexpr const char* var_name(Var v) {
    switch (v) {
        case Var::L: return "L";
        case Var::M: return "M";
        default: return "Z";
    }
}

// Exponent triple of a Laurent monomial L^l M^m Z^z.  The defaulted
// three-way comparison over (l, m, z) is exactly lex with L > M > Z.
struct ExpVec {
    int l = 0;
    int m = 0;
    int z = 0;

    friend constexpr auto operator<=>(const ExpVec&, const ExpVec&) = default;

    constexpr int get(Var v) const {
        switch (v) {
            case Var::L: return l;
            case Var::M: return m;
            default: return z;
        }
    }
    constexpr void set(Var v, int e) {
        switch (v) {
            case Var::L: l = e; break;
            case Var::M: m = e; break;
            default: z = e; break;
        }
    }

    friend constexpr ExpVec operator+(ExpVec a, const ExpVec& b) {
        a.l += b.l; a.m += b.m; a.z += b.z;
        return a;
    }
    friend constexpr ExpVec operator-(ExpVec a, const ExpVec& b) {
        a.l -= b.l; a.m -= b.m; a.z -= b.z;
        return a;
    }
    constexpr ExpVec negated() const { return {-l, -m, -z}; }
};

// Finitely supported map ExpVec -> nonzero integer.  The zero polynomial
// has an empty term map; no stored coefficient is ever zero.
class LaurentPoly {
public:
    using Terms = std::map<ExpVec, mpz_class>;

    LaurentPoly() = default;
    LaurentPoly(long value) {  // NOLINT: implicit by design, for formula code
        if (value != 0) terms_.emplace(ExpVec{}, value);
    }
    explicit LaurentPoly(const mpz_class& value) {
        if (value != 0) terms_.emplace(ExpVec{}, value);
    }

    static LaurentPoly monomial(mpz_class coeff, const ExpVec& e) {
        LaurentPoly p;
        if (coeff != 0) p.terms_.emplace(e, std::move(coeff));
        return p;
    }
    static LaurentPoly variable(Var v, int exponent = 1) {
        ExpVec e;
        e.set(v, exponent);
        return monomial(1, e);
    }

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const Terms& terms() const { return terms_; }

    // Coefficient of the given monomial, zero if absent.
    mpz_class coefficient(const ExpVec& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? mpz_class(0) : it->second;
    }

    // Leading term under lex(L > M > Z); requires a nonzero polynomial.
    const std::pair<const ExpVec, mpz_class>& leading_term() const {
        if (terms_.empty()) throw std::invalid_argument("leading_term of zero polynomial");
        return *terms_.rbegin();
    }

    // Accumulate c * X^e, dropping the term if the sum cancels.
    void add_term(const ExpVec& e, const mpz_class& c);

    LaurentPoly& operator+=(const LaurentPoly& rhs);
    LaurentPoly& operator-=(const LaurentPoly& rhs);
    LaurentPoly& operator*=(const LaurentPoly& rhs) {
        *this = *this * rhs;
        return *this;
    }

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator-(const LaurentPoly& a);
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

private:
    Terms terms_;
};

// p^k by binary exponentiation.  pow(p, 0) == 1 for every p, including
// p == 0 (empty-product convention).
LaurentPoly pow(const LaurentPoly& p, unsigned k);

// M -> M^{-1}: negates every e_M, fixing L, Z and all coefficients.
// A ring involution.
LaurentPoly bar_involution(const LaurentPoly& p);

// Minimum and maximum exponent of var across terms; (0, 0) if var is
// absent.  Throws on the zero polynomial.
std::pair<int, int> degree_range(const LaurentPoly& p, Var var);

// Decomposes p along var: returns (min exponent a, dense coefficient
// vector c) with p = sum_k c[k] * var^{a+k} and var stripped from the
// coefficients.  The zero polynomial yields (0, {}).
std::pair<int, std::vector<LaurentPoly>> split_by_var(const LaurentPoly& p, Var var);

// Result of substituting var := num/den into a polynomial.
//
// When num and den are both unit monomials (single term, coefficient ±1)
// the substitution is exact in the Laurent ring and both powers are 0.
// Otherwise the result is the multiply-through value
//     poly = num^{num_power} * den^{den_power} * p(var := num/den)
// with den_power = max(0, max exponent of var) and
// num_power = -min(0, min exponent of var), which clears every
// denominator without rational arithmetic.
struct Substitution {
    LaurentPoly poly;
    int den_power = 0;
    int num_power = 0;
};

Substitution substitute(const LaurentPoly& p, Var var, const LaurentPoly& num,
                        const LaurentPoly& den);

// Unique representative of a nonzero Laurent polynomial modulo units
// ±L^a M^b Z^c and integer content:
//   - poly has minimum exponent 0 in each variable,
//   - poly has integer content 1,
//   - poly's leading coefficient under lex(L > M > Z) is positive.
// sign * content * poly * X^{unit_shift} reconstructs the input exactly.
struct CanonicalForm {
    LaurentPoly poly;
    ExpVec unit_shift;
    int sign = 1;
    mpz_class content = 1;

    LaurentPoly reconstruct() const;
};

CanonicalForm canonicalize(const LaurentPoly& p);  // throws on zero input

// true iff p and q agree after canonicalization (zero equal only to zero).
bool equal_up_to_units(const LaurentPoly& p, const LaurentPoly& q);

// Exact evaluation in F_prime.  Every variable occurring in p must be
// assigned; a variable with a negative exponent needs a nonzero residue
// (inverses via Fermat).  Throws if prime is not prime, an assignment is
// missing, or a needed inverse does not exist.
std::uint64_t eval_mod(const LaurentPoly& p, std::uint64_t prime,
                       const std::map<Var, std::uint64_t>& assign);

// Debug rendering ("-3*L^2*M + Z^-1"); presentation formats live in render.hpp.
std::string debug_string(const LaurentPoly& p);

}  // namespace apoly

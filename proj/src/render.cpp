#include "apoly/render.hpp"

#include <sstream>

namespace apoly {

namespace {

void require_z_free(const LaurentPoly& p) {
    for (const auto& [e, c] : p.terms()) {
        if (e.z != 0) throw std::logic_error("render: polynomial still contains Z");
    }
}

std::string render_poly(const LaurentPoly& p, bool braced) {
    require_z_free(p);
    if (p.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const auto& [e, c] = *it;
        if (first) {
            if (c < 0) out << "-";
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        first = false;
        mpz_class mag = abs(c);
        const bool has_vars = (e.l != 0 || e.m != 0);
        bool wrote = false;
        if (mag != 1 || !has_vars) {
            out << mag.get_str();
            wrote = true;
        }
        auto emit = [&](const char* name, int k) {
            if (k == 0) return;
            if (wrote) out << " ";
            out << name;
            if (k != 1) {
                if (braced) out << "^{" << k << "}";
                else out << "^" << k;
            }
            wrote = true;
        };
        emit("L", e.l);
        emit("M", e.m);
    }
    return out.str();
}

}  // namespace

std::string to_text(const LaurentPoly& p) { return render_poly(p, false); }

std::string to_latex(const LaurentPoly& p) { return render_poly(p, true); }

ordered_json terms_json(const LaurentPoly& p) {
    require_z_free(p);
    ordered_json terms = ordered_json::array();
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const auto& [e, c] = *it;
        ordered_json term;
        term["coeff"] = c.get_str();
        term["e_L"] = e.l;
        term["e_M"] = e.m;
        terms.push_back(std::move(term));
    }
    return terms;
}

LaurentPoly poly_from_terms_json(const ordered_json& terms) {
    LaurentPoly p;
    for (const auto& term : terms) {
        mpz_class c(term.at("coeff").get<std::string>());
        p.add_term(ExpVec{term.at("e_L").get<int>(), term.at("e_M").get<int>(), 0}, c);
    }
    return p;
}

ordered_json compute_record(const APoly& a) {
    ordered_json record;
    record["n"] = a.n;
    record["method"] = method_name(a.method);
    record["polynomial"] = terms_json(a.poly);
    return record;
}

ordered_json verify_record(const VerifyReport& report) {
    ordered_json record;
    record["n"] = report.n;
    record["method"] = "all";
    record["polynomial"] = terms_json(report.canonical);
    record["agree"] = report.agree;
    ordered_json elapsed;
    for (const auto& [m, r] : report.per_method) elapsed[method_name(m)] = r.elapsed_ms;
    record["elapsed_ms"] = std::move(elapsed);
    return record;
}

}  // namespace apoly

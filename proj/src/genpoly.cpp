#include "tabstat/genpoly.hpp"

#include <numeric>

namespace tabstat {

GenPoly GenPoly::constant(long c) { return term(Monomial{0, 0, 0}, Coeff(c)); }

GenPoly GenPoly::term(Monomial m, Coeff c) {
    GenPoly p;
    p.add_term(m, c);
    return p;
}

void GenPoly::add_term(Monomial m, const Coeff& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

GenPoly& GenPoly::operator+=(const GenPoly& rhs) {
    for (const auto& [m, c] : rhs.terms_) add_term(m, c);
    return *this;
}

GenPoly operator*(const GenPoly& lhs, const GenPoly& rhs) {
    GenPoly out;
    for (const auto& [ml, cl] : lhs.terms())
        for (const auto& [mr, cr] : rhs.terms())
            out.add_term(Monomial{ml.q + mr.q, ml.t + mr.t, ml.u + mr.u}, cl * cr);
    return out;
}

GenPoly GenPoly::substitute_q1() const {
    GenPoly out;
    for (const auto& [m, c] : terms_) out.add_term(Monomial{0, m.t, m.u}, c);
    return out;
}

GenPoly GenPoly::substitute_u1() const {
    GenPoly out;
    for (const auto& [m, c] : terms_) out.add_term(Monomial{m.q, m.t, 0}, c);
    return out;
}

GenPoly GenPoly::substitute_u_t() const {
    GenPoly out;
    for (const auto& [m, c] : terms_) out.add_term(Monomial{m.q, m.t + m.u, 0}, c);
    return out;
}

GenPoly GenPoly::swap_t_u() const {
    GenPoly out;
    for (const auto& [m, c] : terms_) out.add_term(Monomial{m.q, m.u, m.t}, c);
    return out;
}

std::string GenPoly::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Coeff abs_c = abs(c);
        if (first) {
            if (c < 0) out += "-";
            first = false;
        } else {
            out += (c < 0) ? " - " : " + ";
        }
        std::string factors;
        auto append_var = [&factors](const char* name, int e) {
            if (e == 0) return;
            if (!factors.empty()) factors += "*";
            factors += name;
            if (e != 1) factors += "^" + std::to_string(e);
        };
        append_var("q", m.q);
        append_var("t", m.t);
        append_var("u", m.u);
        if (factors.empty()) {
            out += abs_c.get_str();
        } else {
            if (abs_c != 1) out += abs_c.get_str() + "*";
            out += factors;
        }
    }
    return out;
}

GenPoly t_binomial(int n, int k) {
    detail::require(n >= 0, "t_binomial: negative n");
    if (k < 0 || k > n) return GenPoly();
    // row by row: B[j] = [i choose j]_t with [i,j] = [i-1,j] + t^(i-j)*[i-1,j-1]
    std::vector<GenPoly> row(static_cast<std::size_t>(k) + 1);
    row[0] = GenPoly::constant(1);
    for (int i = 1; i <= n; ++i) {
        for (int j = std::min(i, k); j >= 1; --j) {
            GenPoly shifted;
            for (const auto& [m, c] : row[j - 1].terms())
                shifted.add_term(Monomial{m.q, m.t + (i - j), m.u}, c);
            if (j == i)
                row[j] = std::move(shifted);  // [i choose i]_t = 1
            else
                row[j] += shifted;
        }
    }
    return row[k];
}

GenPoly t_multinomial(const std::vector<int>& multiplicities) {
    for (int m : multiplicities) detail::require(m >= 0, "t_multinomial: negative multiplicity");
    GenPoly out = GenPoly::constant(1);
    int total = 0;
    for (int m : multiplicities) {
        total += m;
        out = out * t_binomial(total, m);
    }
    return out;
}

std::string ContentPoly::str() const {
    std::string out;
    for (const auto& [content, poly] : entries) {
        out += "(";
        for (std::size_t i = 0; i < content.size(); ++i) {
            if (i) out += ",";
            out += std::to_string(content[i]);
        }
        out += "): " + poly.str() + "\n";
    }
    return out;
}

}  // namespace tabstat

#pragma once

#include <map>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "tabstat/errors.hpp"

namespace tabstat {

// Exponent triple of a q^a t^b u^c term.
struct Monomial {
    int q = 0;
    int t = 0;
    int u = 0;
    friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

// Canonical term order: descending lexicographic on (q, t, u).
struct MonomialDescLex {
    bool operator()(const Monomial& lhs, const Monomial& rhs) const { return rhs < lhs; }
};

// Sparse polynomial in q, t, u with exact integer coefficients. No zero
// coefficient is ever stored; equality is term-set equality.
class GenPoly {
public:
    using Coeff = mpz_class;
    using TermMap = std::map<Monomial, Coeff, MonomialDescLex>;

    GenPoly() = default;
    static GenPoly constant(long c);
    static GenPoly term(Monomial m, Coeff c = 1);

    void add_term(Monomial m, const Coeff& c);

    GenPoly& operator+=(const GenPoly& rhs);
    friend GenPoly operator+(GenPoly lhs, const GenPoly& rhs) { return lhs += rhs; }
    friend GenPoly operator*(const GenPoly& lhs, const GenPoly& rhs);
    bool operator==(const GenPoly&) const = default;

    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }

    GenPoly substitute_q1() const;   // q := 1
    GenPoly substitute_u1() const;   // u := 1
    GenPoly substitute_u_t() const;  // u := t
    GenPoly swap_t_u() const;

    // Canonical text: terms in descending (q,t,u) order, "c*q^a*t^b*u^c"
    // with exponent-1 and exponent-0 factors elided; "0" for the zero poly.
    std::string str() const;

private:
    TermMap terms_;
};

// t-analog multinomial coefficient for the given multiplicities, computed by
// the division-free Pascal recurrence on Gaussian binomials.
GenPoly t_multinomial(const std::vector<int>& multiplicities);

// Gaussian binomial [n choose k]_t.
GenPoly t_binomial(int n, int k);

// Polynomial-per-content-vector map; the value attached to content vector
// (m_1,...,m_N) is the generating polynomial of the fillings with that
// content. Keys all have the same length N.
struct ContentPoly {
    int vars = 0;
    std::map<std::vector<int>, GenPoly> entries;

    bool operator==(const ContentPoly&) const = default;
    std::string str() const;
};

}  // namespace tabstat

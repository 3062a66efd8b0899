#pragma once

// Equivariant splittings and Hodge monodromy representations valued in
// R(Z2)[q] and R(Z2xZ2)[q], with the fibration rules that rebuild total-space
// E-polynomials from monodromy data.

#include <stdexcept>
#include <string>
#include <string_view>

#include "charvar/epoly.hpp"

namespace charvar {

// Invariant / anti-invariant split of an E-polynomial under a Z2 action.
struct EquivPair {
    EPoly plus;   // e(Z)^+ = e(Z/Z2)
    EPoly minus;  // e(Z)^- = e(Z) - e(Z/Z2)

    EPoly total() const { return plus + minus; }
    friend bool operator==(const EquivPair& a, const EquivPair& b) {
        return a.plus == b.plus && a.minus == b.minus;
    }
};

// Element a*T + b*N of R(Z2)[q].
struct RepZ2 {
    EPoly t;
    EPoly n;
    friend bool operator==(const RepZ2& a, const RepZ2& b) {
        return a.t == b.t && a.n == b.n;
    }
};

// Element a*T + b*S2 + c*S-2 + d*S0 of R(Z2xZ2)[q]; the basis labels record
// which loop of the twice-punctured base acts trivially.
struct RepZ2xZ2 {
    EPoly t;
    EPoly s2;
    EPoly sm2;
    EPoly s0;
    friend bool operator==(const RepZ2xZ2& a, const RepZ2xZ2& b) {
        return a.t == b.t && a.s2 == b.s2 && a.sm2 == b.sm2 && a.s0 == b.s0;
    }
};

// e(Z/Z2) = e(F)^+ e(B)^+ + e(F)^- e(B)^-
inline EPoly quotient_fibration_e(const EquivPair& f, const EquivPair& b) {
    return f.plus * b.plus + f.minus * b.minus;
}

// The same fibration, keeping both the invariant and anti-invariant parts.
inline EquivPair quotient_fibration_pair(const EquivPair& f, const EquivPair& b) {
    return {f.plus * b.plus + f.minus * b.minus,
            f.plus * b.minus + f.minus * b.plus};
}

inline RepZ2 tensor_z2(const RepZ2& a, const RepZ2& b) {
    return {a.t * b.t + a.n * b.n, a.t * b.n + a.n * b.t};
}

// Group-algebra product for the Klein four-group basis {T, S2, S-2, S0}:
// T x Si = Si, Si x Si = T, S2 x S-2 = S0, S2 x S0 = S-2, S-2 x S0 = S2.
inline RepZ2xZ2 tensor_z2z2(const RepZ2xZ2& a, const RepZ2xZ2& b) {
    return {a.t * b.t + a.s2 * b.s2 + a.sm2 * b.sm2 + a.s0 * b.s0,
            a.t * b.s2 + a.s2 * b.t + a.sm2 * b.s0 + a.s0 * b.sm2,
            a.t * b.sm2 + a.sm2 * b.t + a.s2 * b.s0 + a.s0 * b.s2,
            a.t * b.s0 + a.s0 * b.t + a.s2 * b.sm2 + a.sm2 * b.s2};
}

// Pullback along lambda -> -lambda: fixes T and S0, swaps S2 and S-2.
inline RepZ2xZ2 pullback_tau(const RepZ2xZ2& r) {
    return {r.t, r.sm2, r.s2, r.s0};
}

// Restriction along the index-two inclusion of fundamental groups:
// (a+d)T + (b+c)N.
inline RepZ2 restrict_to_z2(const RepZ2xZ2& r) {
    return {r.t + r.s0, r.s2 + r.sm2};
}

// E-polynomial of the fibre: evaluate every character at the identity.
inline EPoly fiber_e(const RepZ2& r) { return r.t + r.n; }
inline EPoly fiber_e(const RepZ2xZ2& r) { return r.t + r.s2 + r.sm2 + r.s0; }

// Total space of a fibration over C minus `punctures` points whose monodromy
// representation is r: (q-1) e(F)^inv - (l-1) e(F).
inline EPoly total_e_punctured_line(const RepZ2& r, int punctures) {
    if (punctures < 1)
        throw std::invalid_argument("total_e_punctured_line: need at least one puncture");
    return (EPoly::q() - EPoly::constant(1)) * r.t -
           EPoly::constant(punctures - 1) * fiber_e(r);
}

struct TotalSplit {
    EPoly total;  // e of the total space over C minus {0,+1,-1}
    EPoly plus;   // e of the Z2 quotient, fibred over C minus {+2,-2}
    EPoly minus;
};

// Total-space E-polynomials for the double fibration with Klein-four
// monodromy: total = (q-3)(a+d) - 2(b+c); plus = (q-2)a - (b+c+d);
// minus = (q-2)d - (a+b+c).
inline TotalSplit total_e_z2z2(const RepZ2xZ2& r) {
    EPoly q = EPoly::q();
    EPoly total = (q - EPoly::constant(3)) * (r.t + r.s0) -
                  EPoly::constant(2) * (r.s2 + r.sm2);
    EPoly plus = (q - EPoly::constant(2)) * r.t - (r.s2 + r.sm2 + r.s0);
    EPoly minus = (q - EPoly::constant(2)) * r.s0 - (r.t + r.s2 + r.sm2);
    return {std::move(total), std::move(plus), std::move(minus)};
}

// E-polynomial of the conjugation sweep: the PGL(2)-orbit space built from
// the Z2-quotiented family with a C*-fibre twisted by mu -> 1/mu,
// q(q^2-2q-1) a - q(q+1)(b+c) - 2q d.
inline EPoly conjugation_closure_e(const RepZ2xZ2& r) {
    EPoly q = EPoly::q();
    return q * (EPoly::desc({1, -2, -1})) * r.t -
           q * (q + EPoly::constant(1)) * (r.s2 + r.sm2) -
           EPoly::constant(2) * q * r.s0;
}

// Rendering: every coefficient parenthesized so that round-trip parsing is
// unambiguous, e.g. "(q^3)T + (-3q)S2 + (3q^2)S-2 + (-1)S0".
inline std::string to_string(const RepZ2& r) {
    return "(" + r.t.to_string() + ")T + (" + r.n.to_string() + ")N";
}
inline std::string to_string(const RepZ2xZ2& r) {
    return "(" + r.t.to_string() + ")T + (" + r.s2.to_string() + ")S2 + (" +
           r.sm2.to_string() + ")S-2 + (" + r.s0.to_string() + ")S0";
}

namespace detail {
inline std::vector<std::pair<std::string, EPoly>> parse_rep_terms(std::string_view s) {
    std::vector<std::pair<std::string, EPoly>> terms;
    size_t i = 0;
    auto skip_ws = [&] { while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i; };
    skip_ws();
    bool first = true;
    while (i < s.size()) {
        skip_ws();
        if (!first) {
            if (i >= s.size() || s[i] != '+')
                throw ParseError("rep parse: expected '+' between terms");
            ++i;
            skip_ws();
        }
        if (i >= s.size() || s[i] != '(')
            throw ParseError("rep parse: expected '(' before coefficient");
        size_t depth = 1, start = ++i;
        while (i < s.size() && depth > 0) {
            if (s[i] == '(') ++depth;
            if (s[i] == ')') --depth;
            ++i;
        }
        if (depth != 0) throw ParseError("rep parse: unbalanced parentheses");
        EPoly coeff = EPoly::parse(s.substr(start, i - 1 - start));
        skip_ws();
        size_t lstart = i;
        while (i < s.size() && !std::isspace(static_cast<unsigned char>(s[i])) &&
               s[i] != '+')
            ++i;
        std::string label(s.substr(lstart, i - lstart));
        if (label.empty()) throw ParseError("rep parse: missing basis label");
        terms.emplace_back(std::move(label), std::move(coeff));
        first = false;
        skip_ws();
    }
    return terms;
}
}  // namespace detail

inline RepZ2 parse_rep_z2(std::string_view s) {
    RepZ2 r;
    for (auto& [label, coeff] : detail::parse_rep_terms(s)) {
        if (label == "T") r.t += coeff;
        else if (label == "N") r.n += coeff;
        else throw ParseError("rep parse: unknown Z2 basis label '" + label + "'");
    }
    return r;
}

inline RepZ2xZ2 parse_rep_z2z2(std::string_view s) {
    RepZ2xZ2 r;
    for (auto& [label, coeff] : detail::parse_rep_terms(s)) {
        if (label == "T") r.t += coeff;
        else if (label == "S2") r.s2 += coeff;
        else if (label == "S-2") r.sm2 += coeff;
        else if (label == "S0") r.s0 += coeff;
        else throw ParseError("rep parse: unknown Z2xZ2 basis label '" + label + "'");
    }
    return r;
}

}  // namespace charvar

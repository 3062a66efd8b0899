#pragma once

// Exact integer-coefficient polynomials in the single variable q.
// Dense ascending coefficient storage, canonical form (no trailing zeros).

#include <cctype>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "charvar/integer.hpp"

namespace charvar {

struct NotDivisible : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NonIntegralResult : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct InsufficientPoints : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ZeroPolynomial : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

class EPoly {
public:
    EPoly() = default;

    static EPoly from_coeffs(std::vector<Integer> ascending) {
        EPoly p;
        p.c_ = std::move(ascending);
        p.trim();
        return p;
    }
    static EPoly from_coeffs(std::initializer_list<long long> ascending) {
        std::vector<Integer> v;
        v.reserve(ascending.size());
        for (long long x : ascending) v.emplace_back(x);
        return from_coeffs(std::move(v));
    }
    // Coefficients in the order they are usually written: highest power first.
    static EPoly desc(std::initializer_list<long long> descending) {
        std::vector<Integer> v;
        v.reserve(descending.size());
        for (auto it = std::rbegin(descending); it != std::rend(descending); ++it)
            v.emplace_back(*it);
        return from_coeffs(std::move(v));
    }
    static EPoly constant(Integer c) { return from_coeffs(std::vector<Integer>{std::move(c)}); }
    static EPoly constant(long long c) { return constant(Integer(c)); }
    static EPoly q(int power = 1, Integer coeff = Integer(1)) {
        std::vector<Integer> v(static_cast<size_t>(power) + 1);
        v.back() = std::move(coeff);
        return from_coeffs(std::move(v));
    }

    bool is_zero() const { return c_.empty(); }
    // Degree of the zero polynomial is a sentinel, never a number.
    std::optional<int> degree() const {
        if (c_.empty()) return std::nullopt;
        return static_cast<int>(c_.size()) - 1;
    }
    Integer coeff(size_t i) const { return i < c_.size() ? c_[i] : Integer(0); }
    const std::vector<Integer>& coeffs() const { return c_; }

    friend bool operator==(const EPoly& a, const EPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const EPoly& a, const EPoly& b) { return !(a == b); }

    friend EPoly operator+(const EPoly& a, const EPoly& b) {
        std::vector<Integer> v(std::max(a.c_.size(), b.c_.size()));
        for (size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(i) + b.coeff(i);
        return from_coeffs(std::move(v));
    }
    friend EPoly operator-(const EPoly& a, const EPoly& b) {
        std::vector<Integer> v(std::max(a.c_.size(), b.c_.size()));
        for (size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(i) - b.coeff(i);
        return from_coeffs(std::move(v));
    }
    EPoly operator-() const {
        std::vector<Integer> v(c_.size());
        for (size_t i = 0; i < c_.size(); ++i) v[i] = -c_[i];
        return from_coeffs(std::move(v));
    }
    friend EPoly operator*(const EPoly& a, const EPoly& b) {
        if (a.is_zero() || b.is_zero()) return EPoly();
        std::vector<Integer> v(a.c_.size() + b.c_.size() - 1);
        for (size_t i = 0; i < a.c_.size(); ++i)
            for (size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
        return from_coeffs(std::move(v));
    }
    EPoly& operator+=(const EPoly& b) { return *this = *this + b; }
    EPoly& operator-=(const EPoly& b) { return *this = *this - b; }
    EPoly& operator*=(const EPoly& b) { return *this = *this * b; }

    friend EPoly operator*(const Integer& k, const EPoly& p) { return EPoly::constant(k) * p; }
    friend EPoly operator*(long long k, const EPoly& p) { return EPoly::constant(k) * p; }

    Integer eval(const Integer& x) const {
        Integer v(0);
        for (size_t i = c_.size(); i-- > 0;) v = v * x + c_[i];
        return v;
    }
    long long eval_i64(long long x) const { return eval(Integer(x)).to_int64(); }

    std::string to_string(std::string_view var = "q") const;
    static EPoly parse(std::string_view text);

private:
    std::vector<Integer> c_;
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
};

inline EPoly add(const EPoly& a, const EPoly& b) { return a + b; }
inline EPoly mul(const EPoly& a, const EPoly& b) { return a * b; }

// Exact quotient; the remainder must vanish.
inline EPoly exact_div(const EPoly& a, const EPoly& b) {
    if (b.is_zero()) throw std::domain_error("exact_div: division by zero polynomial");
    if (a.is_zero()) return EPoly();
    int da = *a.degree(), db = *b.degree();
    if (da < db)
        throw NotDivisible("exact_div: degree of dividend below degree of divisor");
    std::vector<Integer> rem(a.coeffs());
    std::vector<Integer> quot(static_cast<size_t>(da - db) + 1);
    const Integer& lead = b.coeff(static_cast<size_t>(db));
    for (int k = da - db; k >= 0; --k) {
        Integer num = rem[static_cast<size_t>(k + db)];
        if (num.is_zero()) continue;
        Integer qk, r;
        Integer::divmod(num, lead, qk, r);
        if (!r.is_zero())
            throw NotDivisible("exact_div: leading coefficient does not divide");
        quot[static_cast<size_t>(k)] = qk;
        for (int i = 0; i <= db; ++i)
            rem[static_cast<size_t>(k + i)] -= qk * b.coeff(static_cast<size_t>(i));
    }
    for (const Integer& c : rem)
        if (!c.is_zero()) throw NotDivisible("exact_div: nonzero remainder");
    return EPoly::from_coeffs(std::move(quot));
}

inline Integer eval(const EPoly& p, const Integer& x) { return p.eval(x); }

// Unique polynomial of degree <= degree_bound through the points, computed
// over exact rationals (Newton divided differences). All supplied points are
// used; a nonzero difference beyond the bound, or a fractional coefficient,
// signals that the data is not the expected integer polynomial.
inline EPoly interpolate(const std::vector<std::pair<Integer, Integer>>& points,
                         int degree_bound) {
    if (degree_bound < 0) throw std::invalid_argument("interpolate: negative bound");
    std::vector<Integer> xs;
    for (const auto& pt : points) {
        for (const Integer& seen : xs)
            if (seen == pt.first)
                throw InsufficientPoints("interpolate: duplicate abscissa");
        xs.push_back(pt.first);
    }
    if (static_cast<int>(points.size()) < degree_bound + 1)
        throw InsufficientPoints("interpolate: need degree_bound+1 distinct points");

    size_t n = points.size();
    std::vector<Rational> top(n);  // top[k] = f[x_0..x_k]
    std::vector<Rational> level(n);
    for (size_t i = 0; i < n; ++i) level[i] = Rational(points[i].second);
    top[0] = level[0];
    for (size_t k = 1; k < n; ++k) {
        for (size_t i = 0; i + k < n; ++i)
            level[i] = (level[i + 1] - level[i]) /
                       Rational(points[i + k].first - points[i].first);
        level.pop_back();
        top[k] = level[0];
        if (static_cast<int>(k) > degree_bound && !top[k].is_zero())
            throw NonIntegralResult(
                "interpolate: data exceeds the stated degree bound");
    }
    // expand Newton form sum_k f[x_0..x_k] * prod_{j<k} (q - x_j)
    std::vector<Rational> acc{Rational(Integer(0))};
    std::vector<Rational> basis{Rational(Integer(1))};
    auto add_scaled = [&](const Rational& s) {
        if (acc.size() < basis.size()) acc.resize(basis.size(), Rational(Integer(0)));
        for (size_t i = 0; i < basis.size(); ++i) acc[i] = acc[i] + s * basis[i];
    };
    add_scaled(top[0]);
    for (size_t k = 1; k < n; ++k) {
        // basis *= (q - x_{k-1})
        std::vector<Rational> nb(basis.size() + 1, Rational(Integer(0)));
        Rational root(points[k - 1].first);
        for (size_t i = 0; i < basis.size(); ++i) {
            nb[i + 1] = nb[i + 1] + basis[i];
            nb[i] = nb[i] - root * basis[i];
        }
        basis = std::move(nb);
        add_scaled(top[k]);
    }
    std::vector<Integer> out;
    out.reserve(acc.size());
    for (const Rational& r : acc) {
        if (!r.is_integer())
            throw NonIntegralResult("interpolate: fractional coefficient");
        out.push_back(r.num());
    }
    return EPoly::from_coeffs(std::move(out));
}

inline bool is_palindromic(const EPoly& p) {
    if (p.is_zero()) throw ZeroPolynomial("is_palindromic: zero polynomial");
    int d = *p.degree();
    for (int i = 0; 2 * i <= d; ++i)
        if (p.coeff(static_cast<size_t>(i)) != p.coeff(static_cast<size_t>(d - i)))
            return false;
    return true;
}

inline std::string EPoly::to_string(std::string_view var) const {
    if (c_.empty()) return "0";
    std::string out;
    for (size_t i = c_.size(); i-- > 0;) {
        const Integer& c = c_[i];
        if (c.is_zero()) continue;
        bool neg = c.is_negative();
        std::string mag = c.abs().to_string();
        if (out.empty()) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        if (i == 0) {
            out += mag;
        } else {
            if (mag != "1") out += mag;
            out += var;
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

inline EPoly EPoly::parse(std::string_view text) {
    std::vector<Integer> coeffs;
    size_t i = 0;
    auto skip_ws = [&] { while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
    skip_ws();
    if (i == text.size()) throw ParseError("EPoly::parse: empty input");
    bool first = true;
    while (i < text.size()) {
        skip_ws();
        if (i == text.size()) break;
        int sign = 1;
        if (text[i] == '+' || text[i] == '-') {
            sign = text[i] == '-' ? -1 : 1;
            ++i;
            skip_ws();
        } else if (!first) {
            throw ParseError("EPoly::parse: expected '+' or '-' between terms");
        }
        std::string digits;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
            digits += text[i++];
        skip_ws();
        Integer mag = digits.empty() ? Integer(1) : Integer::from_string(digits);
        int power = 0;
        if (i < text.size() && text[i] == 'q') {
            ++i;
            power = 1;
            if (i < text.size() && text[i] == '^') {
                ++i;
                std::string exp;
                while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
                    exp += text[i++];
                if (exp.empty() || exp.size() > 6)
                    throw ParseError("EPoly::parse: missing or oversized exponent");
                power = std::stoi(exp);
            }
        } else if (digits.empty()) {
            throw ParseError("EPoly::parse: expected coefficient or 'q'");
        }
        if (coeffs.size() < static_cast<size_t>(power) + 1)
            coeffs.resize(static_cast<size_t>(power) + 1);
        coeffs[static_cast<size_t>(power)] += sign < 0 ? -mag : mag;
        first = false;
        skip_ws();
    }
    return EPoly::from_coeffs(std::move(coeffs));
}

}  // namespace charvar

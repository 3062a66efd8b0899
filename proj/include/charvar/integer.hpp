#pragma once

// Arbitrary-precision signed integers and exact rationals.
// Sign-magnitude representation, base 2^32 limbs, little-endian.

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace charvar {

class Integer {
public:
    Integer() = default;
    Integer(long long v) {
        bool neg = v < 0;
        unsigned long long u = neg ? 0ull - static_cast<unsigned long long>(v)
                                   : static_cast<unsigned long long>(v);
        while (u != 0) {
            mag_.push_back(static_cast<uint32_t>(u & 0xffffffffull));
            u >>= 32;
        }
        neg_ = neg && !mag_.empty();
    }
    Integer(int v) : Integer(static_cast<long long>(v)) {}

    static Integer from_string(std::string_view s) {
        Integer r;
        bool neg = false;
        size_t i = 0;
        if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
            neg = (s[i] == '-');
            ++i;
        }
        if (i == s.size()) throw std::invalid_argument("Integer: empty digit string");
        for (; i < s.size(); ++i) {
            if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("Integer: bad digit");
            r.mul_small(10);
            r.add_small(static_cast<uint32_t>(s[i] - '0'));
        }
        r.neg_ = neg && !r.mag_.empty();
        return r;
    }

    bool is_zero() const { return mag_.empty(); }
    bool is_negative() const { return neg_; }
    int sign() const { return mag_.empty() ? 0 : (neg_ ? -1 : 1); }

    bool fits_int64() const {
        if (mag_.size() > 2) return false;
        unsigned long long u = abs_u64_unchecked();
        return neg_ ? u <= 0x8000000000000000ull : u < 0x8000000000000000ull;
    }
    long long to_int64() const {
        if (!fits_int64()) throw std::overflow_error("Integer: does not fit in int64");
        unsigned long long u = abs_u64_unchecked();
        return neg_ ? -static_cast<long long>(u - 1) - 1 : static_cast<long long>(u);
    }

    friend bool operator==(const Integer& a, const Integer& b) {
        return a.neg_ == b.neg_ && a.mag_ == b.mag_;
    }
    friend bool operator!=(const Integer& a, const Integer& b) { return !(a == b); }
    friend bool operator<(const Integer& a, const Integer& b) {
        if (a.neg_ != b.neg_) return a.neg_;
        int c = cmp_mag(a.mag_, b.mag_);
        return a.neg_ ? c > 0 : c < 0;
    }
    friend bool operator>(const Integer& a, const Integer& b) { return b < a; }
    friend bool operator<=(const Integer& a, const Integer& b) { return !(b < a); }
    friend bool operator>=(const Integer& a, const Integer& b) { return !(a < b); }

    Integer operator-() const {
        Integer r = *this;
        if (!r.mag_.empty()) r.neg_ = !r.neg_;
        return r;
    }

    friend Integer operator+(const Integer& a, const Integer& b) {
        Integer r;
        if (a.neg_ == b.neg_) {
            r.mag_ = add_mag(a.mag_, b.mag_);
            r.neg_ = a.neg_ && !r.mag_.empty();
        } else {
            int c = cmp_mag(a.mag_, b.mag_);
            if (c == 0) return Integer();
            if (c > 0) {
                r.mag_ = sub_mag(a.mag_, b.mag_);
                r.neg_ = a.neg_;
            } else {
                r.mag_ = sub_mag(b.mag_, a.mag_);
                r.neg_ = b.neg_;
            }
        }
        return r;
    }
    friend Integer operator-(const Integer& a, const Integer& b) { return a + (-b); }

    friend Integer operator*(const Integer& a, const Integer& b) {
        if (a.is_zero() || b.is_zero()) return Integer();
        Integer r;
        r.mag_.assign(a.mag_.size() + b.mag_.size(), 0);
        for (size_t i = 0; i < a.mag_.size(); ++i) {
            uint64_t carry = 0;
            for (size_t j = 0; j < b.mag_.size(); ++j) {
                uint64_t cur = static_cast<uint64_t>(a.mag_[i]) * b.mag_[j] +
                               r.mag_[i + j] + carry;
                r.mag_[i + j] = static_cast<uint32_t>(cur);
                carry = cur >> 32;
            }
            r.mag_[i + b.mag_.size()] = static_cast<uint32_t>(carry);
        }
        r.trim();
        r.neg_ = (a.neg_ != b.neg_);
        return r;
    }

    Integer& operator+=(const Integer& b) { return *this = *this + b; }
    Integer& operator-=(const Integer& b) { return *this = *this - b; }
    Integer& operator*=(const Integer& b) { return *this = *this * b; }

    // Truncated division: quotient rounds toward zero, remainder has the
    // sign of the dividend, |r| < |b|.
    static void divmod(const Integer& a, const Integer& b, Integer& q, Integer& r) {
        if (b.is_zero()) throw std::domain_error("Integer: division by zero");
        int c = cmp_mag(a.mag_, b.mag_);
        if (c < 0) {
            q = Integer();
            r = a;
            return;
        }
        divmod_mag(a.mag_, b.mag_, q.mag_, r.mag_);
        q.trim();
        r.trim();
        q.neg_ = (a.neg_ != b.neg_) && !q.mag_.empty();
        r.neg_ = a.neg_ && !r.mag_.empty();
    }
    friend Integer operator/(const Integer& a, const Integer& b) {
        Integer q, r;
        divmod(a, b, q, r);
        return q;
    }
    friend Integer operator%(const Integer& a, const Integer& b) {
        Integer q, r;
        divmod(a, b, q, r);
        return r;
    }

    Integer abs() const {
        Integer r = *this;
        r.neg_ = false;
        return r;
    }

    std::string to_string() const {
        if (mag_.empty()) return "0";
        std::string out;
        Integer t = abs();
        while (!t.mag_.empty()) {
            uint32_t rem = t.divmod_small(1000000000u);
            std::string chunk = std::to_string(rem);
            if (!t.mag_.empty())
                chunk.insert(0, 9 - chunk.size(), '0');
            out.insert(0, chunk);
        }
        if (neg_) out.insert(0, 1, '-');
        return out;
    }

private:
    bool neg_ = false;
    std::vector<uint32_t> mag_;

    unsigned long long abs_u64_unchecked() const {
        unsigned long long u = 0;
        if (mag_.size() > 1) u = static_cast<unsigned long long>(mag_[1]) << 32;
        if (!mag_.empty()) u |= mag_[0];
        return u;
    }

    void trim() {
        while (!mag_.empty() && mag_.back() == 0) mag_.pop_back();
        if (mag_.empty()) neg_ = false;
    }
    void mul_small(uint32_t m) {
        uint64_t carry = 0;
        for (auto& limb : mag_) {
            uint64_t cur = static_cast<uint64_t>(limb) * m + carry;
            limb = static_cast<uint32_t>(cur);
            carry = cur >> 32;
        }
        if (carry) mag_.push_back(static_cast<uint32_t>(carry));
    }
    void add_small(uint32_t v) {
        uint64_t carry = v;
        for (size_t i = 0; carry && i < mag_.size(); ++i) {
            uint64_t cur = mag_[i] + carry;
            mag_[i] = static_cast<uint32_t>(cur);
            carry = cur >> 32;
        }
        if (carry) mag_.push_back(static_cast<uint32_t>(carry));
    }
    uint32_t divmod_small(uint32_t d) {
        uint64_t rem = 0;
        for (size_t i = mag_.size(); i-- > 0;) {
            uint64_t cur = (rem << 32) | mag_[i];
            mag_[i] = static_cast<uint32_t>(cur / d);
            rem = cur % d;
        }
        trim();
        return static_cast<uint32_t>(rem);
    }

    static int cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
        if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
        for (size_t i = a.size(); i-- > 0;)
            if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
        return 0;
    }
    static std::vector<uint32_t> add_mag(const std::vector<uint32_t>& a,
                                         const std::vector<uint32_t>& b) {
        const auto& big = a.size() >= b.size() ? a : b;
        const auto& small = a.size() >= b.size() ? b : a;
        std::vector<uint32_t> r(big.size());
        uint64_t carry = 0;
        for (size_t i = 0; i < big.size(); ++i) {
            uint64_t cur = carry + big[i] + (i < small.size() ? small[i] : 0u);
            r[i] = static_cast<uint32_t>(cur);
            carry = cur >> 32;
        }
        if (carry) r.push_back(static_cast<uint32_t>(carry));
        return r;
    }
    // requires |a| >= |b|
    static std::vector<uint32_t> sub_mag(const std::vector<uint32_t>& a,
                                         const std::vector<uint32_t>& b) {
        std::vector<uint32_t> r(a.size());
        int64_t borrow = 0;
        for (size_t i = 0; i < a.size(); ++i) {
            int64_t cur = static_cast<int64_t>(a[i]) - borrow -
                          (i < b.size() ? static_cast<int64_t>(b[i]) : 0);
            if (cur < 0) {
                cur += (1ll << 32);
                borrow = 1;
            } else {
                borrow = 0;
            }
            r[i] = static_cast<uint32_t>(cur);
        }
        while (!r.empty() && r.back() == 0) r.pop_back();
        return r;
    }

    // Knuth algorithm D on magnitudes; requires |u| >= |v|, v nonzero.
    static void divmod_mag(std::vector<uint32_t> u, std::vector<uint32_t> v,
                           std::vector<uint32_t>& q, std::vector<uint32_t>& r) {
        if (v.size() == 1) {
            uint32_t d = v[0];
            q = u;
            uint64_t rem = 0;
            for (size_t i = q.size(); i-- > 0;) {
                uint64_t cur = (rem << 32) | q[i];
                q[i] = static_cast<uint32_t>(cur / d);
                rem = cur % d;
            }
            r.clear();
            if (rem) r.push_back(static_cast<uint32_t>(rem));
            return;
        }
        int shift = 0;
        for (uint32_t top = v.back(); !(top & 0x80000000u); top <<= 1) ++shift;
        shl(u, shift);
        shl(v, shift);
        size_t n = v.size(), m = u.size() - n;
        u.push_back(0);
        q.assign(m + 1, 0);
        const uint64_t base = 1ull << 32;
        for (size_t j = m + 1; j-- > 0;) {
            uint64_t num = (static_cast<uint64_t>(u[j + n]) << 32) | u[j + n - 1];
            uint64_t qhat = num / v[n - 1];
            uint64_t rhat = num % v[n - 1];
            while (qhat >= base ||
                   qhat * v[n - 2] > ((rhat << 32) | u[j + n - 2])) {
                --qhat;
                rhat += v[n - 1];
                if (rhat >= base) break;
            }
            // multiply-subtract qhat*v from u[j..j+n]
            int64_t borrow = 0;
            uint64_t carry = 0;
            for (size_t i = 0; i < n; ++i) {
                uint64_t prod = qhat * v[i] + carry;
                carry = prod >> 32;
                int64_t cur = static_cast<int64_t>(u[i + j]) - borrow -
                              static_cast<int64_t>(prod & 0xffffffffull);
                if (cur < 0) {
                    cur += static_cast<int64_t>(base);
                    borrow = 1;
                } else {
                    borrow = 0;
                }
                u[i + j] = static_cast<uint32_t>(cur);
            }
            int64_t cur = static_cast<int64_t>(u[j + n]) - borrow -
                          static_cast<int64_t>(carry);
            if (cur < 0) {
                // qhat was one too large: add v back
                cur += static_cast<int64_t>(base);
                --qhat;
                uint64_t c2 = 0;
                for (size_t i = 0; i < n; ++i) {
                    uint64_t s = static_cast<uint64_t>(u[i + j]) + v[i] + c2;
                    u[i + j] = static_cast<uint32_t>(s);
                    c2 = s >> 32;
                }
                cur += static_cast<int64_t>(c2);
                cur &= static_cast<int64_t>(base) - 1;
            }
            u[j + n] = static_cast<uint32_t>(cur);
            q[j] = static_cast<uint32_t>(qhat);
        }
        u.resize(n);
        shr(u, shift);
        r = std::move(u);
    }
    static void shl(std::vector<uint32_t>& a, int s) {
        if (s == 0 || a.empty()) return;
        uint32_t carry = 0;
        for (auto& limb : a) {
            uint32_t nc = limb >> (32 - s);
            limb = (limb << s) | carry;
            carry = nc;
        }
        if (carry) a.push_back(carry);
    }
    static void shr(std::vector<uint32_t>& a, int s) {
        if (s == 0) return;
        uint32_t carry = 0;
        for (size_t i = a.size(); i-- > 0;) {
            uint32_t nc = a[i] << (32 - s);
            a[i] = (a[i] >> s) | carry;
            carry = nc;
        }
        while (!a.empty() && a.back() == 0) a.pop_back();
    }
};

inline Integer gcd(Integer a, Integer b) {
    a = a.abs();
    b = b.abs();
    while (!b.is_zero()) {
        Integer r = a % b;
        a = b;
        b = r;
    }
    return a;
}

inline Integer pow(Integer base, unsigned e) {
    Integer r(1);
    while (e) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

// Exact rational with positive reduced denominator.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(Integer n) : num_(std::move(n)), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}
    Rational(Integer n, Integer d) : num_(std::move(n)), den_(std::move(d)) {
        if (den_.is_zero()) throw std::domain_error("Rational: zero denominator");
        normalize();
    }

    const Integer& num() const { return num_; }
    const Integer& den() const { return den_; }
    bool is_integer() const { return den_ == Integer(1); }
    bool is_zero() const { return num_.is_zero(); }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_.is_zero()) throw std::domain_error("Rational: division by zero");
        return Rational(a.num_ * b.den_, a.den_ * b.num_);
    }
    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }

private:
    Integer num_, den_;
    void normalize() {
        if (den_.is_negative()) {
            num_ = -num_;
            den_ = -den_;
        }
        if (num_.is_zero()) {
            den_ = Integer(1);
            return;
        }
        Integer g = gcd(num_, den_);
        if (g != Integer(1)) {
            num_ = num_ / g;
            den_ = den_ / g;
        }
    }
};

}  // namespace charvar

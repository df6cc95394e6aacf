#pragma once

#include <cstdint>
#include <cstdlib>
#include <string>
#include <vector>
#include <stdexcept>
#include <algorithm>
#include <compare>

namespace srt {

// Arbitrary-precision signed integer, sign + magnitude in base 10^9.
// Sized for lemma evaluation and exact-division fallbacks (a few thousand
// bits); schoolbook algorithms throughout.
class BigInt {
    static constexpr std::uint32_t kBase = 1000000000u;

    int sign_ = 0;                   // -1, 0, +1
    std::vector<std::uint32_t> mag_; // little-endian limbs, no leading zeros

    void trim() {
        while (!mag_.empty() && mag_.back() == 0) mag_.pop_back();
        if (mag_.empty()) sign_ = 0;
    }

    static int cmp_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
        if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
        for (std::size_t i = a.size(); i-- > 0;)
            if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
        return 0;
    }

    static std::vector<std::uint32_t> add_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b) {
        std::vector<std::uint32_t> r(std::max(a.size(), b.size()) + 1, 0);
        std::uint32_t carry = 0;
        for (std::size_t i = 0; i < r.size(); ++i) {
            std::uint64_t s = carry;
            if (i < a.size()) s += a[i];
            if (i < b.size()) s += b[i];
            r[i] = static_cast<std::uint32_t>(s % kBase);
            carry = static_cast<std::uint32_t>(s / kBase);
        }
        while (!r.empty() && r.back() == 0) r.pop_back();
        return r;
    }

    // requires |a| >= |b|
    static std::vector<std::uint32_t> sub_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b) {
        std::vector<std::uint32_t> r(a.size(), 0);
        std::int64_t borrow = 0;
        for (std::size_t i = 0; i < a.size(); ++i) {
            std::int64_t s = static_cast<std::int64_t>(a[i]) - borrow - (i < b.size() ? b[i] : 0);
            if (s < 0) { s += kBase; borrow = 1; } else borrow = 0;
            r[i] = static_cast<std::uint32_t>(s);
        }
        while (!r.empty() && r.back() == 0) r.pop_back();
        return r;
    }

    static std::vector<std::uint32_t> mul_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b) {
        if (a.empty() || b.empty()) return {};
        std::vector<std::uint32_t> r(a.size() + b.size(), 0);
        for (std::size_t i = 0; i < a.size(); ++i) {
            std::uint64_t carry = 0;
            const std::uint64_t ai = a[i];
            for (std::size_t j = 0; j < b.size(); ++j) {
                std::uint64_t cur = r[i + j] + ai * b[j] + carry;
                r[i + j] = static_cast<std::uint32_t>(cur % kBase);
                carry = cur / kBase;
            }
            std::size_t k = i + b.size();
            while (carry) {
                std::uint64_t cur = r[k] + carry;
                r[k] = static_cast<std::uint32_t>(cur % kBase);
                carry = cur / kBase;
                ++k;
            }
        }
        while (!r.empty() && r.back() == 0) r.pop_back();
        return r;
    }

    // |a| / small d, remainder out.  d in (0, kBase).
    static std::vector<std::uint32_t> divmod_small(const std::vector<std::uint32_t>& a,
                                                   std::uint32_t d, std::uint32_t& rem) {
        std::vector<std::uint32_t> q(a.size(), 0);
        std::uint64_t r = 0;
        for (std::size_t i = a.size(); i-- > 0;) {
            std::uint64_t cur = r * kBase + a[i];
            q[i] = static_cast<std::uint32_t>(cur / d);
            r = cur % d;
        }
        rem = static_cast<std::uint32_t>(r);
        while (!q.empty() && q.back() == 0) q.pop_back();
        return q;
    }

    // Knuth algorithm D on base-10^9 limbs.  Quotient and remainder of |u| / |v|.
    static void divmod_mag(std::vector<std::uint32_t> u, std::vector<std::uint32_t> v,
                           std::vector<std::uint32_t>& q, std::vector<std::uint32_t>& r) {
        if (v.empty()) throw std::domain_error("BigInt: division by zero");
        if (cmp_mag(u, v) < 0) { q.clear(); r = std::move(u); return; }
        if (v.size() == 1) {
            std::uint32_t rem;
            q = divmod_small(u, v[0], rem);
            r.clear();
            if (rem) r.push_back(rem);
            return;
        }
        // normalize so the top limb of v is >= kBase/2
        std::uint32_t d = kBase / (v.back() + 1);
        if (d > 1) {
            u = mul_mag(u, std::vector<std::uint32_t>{d});
            v = mul_mag(v, std::vector<std::uint32_t>{d});
        }
        const std::size_t n = v.size(), m = u.size() - n;
        u.push_back(0);
        q.assign(m + 1, 0);
        const std::uint64_t vt = v[n - 1], vt2 = v[n - 2];
        for (std::size_t j = m + 1; j-- > 0;) {
            std::uint64_t num = static_cast<std::uint64_t>(u[j + n]) * kBase + u[j + n - 1];
            std::uint64_t qhat = num / vt;
            std::uint64_t rhat = num % vt;
            while (qhat >= kBase || qhat * vt2 > rhat * kBase + u[j + n - 2]) {
                --qhat;
                rhat += vt;
                if (rhat >= kBase) break;
            }
            // u[j .. j+n] -= qhat * v
            std::int64_t borrow = 0;
            std::uint64_t carry = 0;
            for (std::size_t i = 0; i < n; ++i) {
                std::uint64_t p = qhat * v[i] + carry;
                carry = p / kBase;
                std::int64_t t = static_cast<std::int64_t>(u[i + j]) - borrow
                               - static_cast<std::int64_t>(p % kBase);
                if (t < 0) { t += kBase; borrow = 1; } else borrow = 0;
                u[i + j] = static_cast<std::uint32_t>(t);
            }
            std::int64_t t = static_cast<std::int64_t>(u[j + n]) - borrow
                           - static_cast<std::int64_t>(carry);
            if (t < 0) {
                // qhat was one too large: add v back
                t += kBase;
                --qhat;
                std::uint32_t c = 0;
                for (std::size_t i = 0; i < n; ++i) {
                    std::uint64_t s = static_cast<std::uint64_t>(u[i + j]) + v[i] + c;
                    u[i + j] = static_cast<std::uint32_t>(s % kBase);
                    c = static_cast<std::uint32_t>(s / kBase);
                }
                t += c;
                t -= kBase; // the final carry cancels the borrow
            }
            u[j + n] = static_cast<std::uint32_t>(t);
            q[j] = static_cast<std::uint32_t>(qhat);
        }
        while (!q.empty() && q.back() == 0) q.pop_back();
        u.resize(n);
        if (d > 1) {
            std::uint32_t rem;
            u = divmod_small(u, d, rem); // rem == 0 by construction
        }
        while (!u.empty() && u.back() == 0) u.pop_back();
        r = std::move(u);
    }

public:
    BigInt() = default;

    BigInt(std::int64_t v) { // NOLINT(google-explicit-constructor): integer literals everywhere
        if (v == 0) return;
        sign_ = v < 0 ? -1 : 1;
        std::uint64_t a = v < 0 ? -static_cast<std::uint64_t>(v) : static_cast<std::uint64_t>(v);
        while (a) { mag_.push_back(static_cast<std::uint32_t>(a % kBase)); a /= kBase; }
    }

    static BigInt from_string(const std::string& s) {
        BigInt r;
        std::size_t pos = 0;
        int sign = 1;
        if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) sign = s[pos++] == '-' ? -1 : 1;
        if (pos >= s.size()) throw std::invalid_argument("BigInt: empty numeral");
        for (std::size_t end = s.size(); end > pos;) {
            std::size_t begin = end >= pos + 9 ? end - 9 : pos;
            std::uint32_t limb = 0;
            for (std::size_t i = begin; i < end; ++i) {
                if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("BigInt: bad digit");
                limb = limb * 10 + static_cast<std::uint32_t>(s[i] - '0');
            }
            r.mag_.push_back(limb);
            end = begin;
        }
        r.sign_ = sign;
        r.trim();
        return r;
    }

    bool is_zero() const { return sign_ == 0; }
    bool is_negative() const { return sign_ < 0; }
    int sign() const { return sign_; }

    bool fits_int64() const {
        static const BigInt lo = std::numeric_limits<std::int64_t>::min();
        static const BigInt hi = std::numeric_limits<std::int64_t>::max();
        return *this >= lo && *this <= hi;
    }

    std::int64_t to_int64() const {
        if (!fits_int64()) throw std::overflow_error("BigInt: does not fit int64");
        std::int64_t r = 0;
        for (std::size_t i = mag_.size(); i-- > 0;) r = r * kBase + mag_[i];
        return sign_ < 0 ? -r : r;
    }

    BigInt operator-() const {
        BigInt r = *this;
        r.sign_ = -r.sign_;
        return r;
    }

    BigInt abs() const {
        BigInt r = *this;
        r.sign_ = r.sign_ == 0 ? 0 : 1;
        return r;
    }

    friend BigInt operator+(const BigInt& a, const BigInt& b) {
        if (a.sign_ == 0) return b;
        if (b.sign_ == 0) return a;
        BigInt r;
        if (a.sign_ == b.sign_) {
            r.mag_ = add_mag(a.mag_, b.mag_);
            r.sign_ = a.sign_;
        } else {
            int c = cmp_mag(a.mag_, b.mag_);
            if (c == 0) return BigInt{};
            if (c > 0) { r.mag_ = sub_mag(a.mag_, b.mag_); r.sign_ = a.sign_; }
            else       { r.mag_ = sub_mag(b.mag_, a.mag_); r.sign_ = b.sign_; }
        }
        r.trim();
        return r;
    }

    friend BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

    friend BigInt operator*(const BigInt& a, const BigInt& b) {
        if (a.sign_ == 0 || b.sign_ == 0) return BigInt{};
        BigInt r;
        r.mag_ = mul_mag(a.mag_, b.mag_);
        r.sign_ = a.sign_ * b.sign_;
        r.trim();
        return r;
    }

    // Truncated division (C semantics): quotient rounds toward zero,
    // remainder has the sign of the dividend.
    static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
        divmod_mag(a.mag_, b.mag_, q.mag_, r.mag_);
        q.sign_ = q.mag_.empty() ? 0 : a.sign_ * b.sign_;
        r.sign_ = r.mag_.empty() ? 0 : a.sign_;
    }

    friend BigInt operator/(const BigInt& a, const BigInt& b) {
        BigInt q, r;
        divmod(a, b, q, r);
        return q;
    }

    friend BigInt operator%(const BigInt& a, const BigInt& b) {
        BigInt q, r;
        divmod(a, b, q, r);
        return r;
    }

    BigInt& operator+=(const BigInt& o) { *this = *this + o; return *this; }
    BigInt& operator-=(const BigInt& o) { *this = *this - o; return *this; }
    BigInt& operator*=(const BigInt& o) { *this = *this * o; return *this; }
    BigInt& operator/=(const BigInt& o) { *this = *this / o; return *this; }

    friend bool operator==(const BigInt& a, const BigInt& b) {
        return a.sign_ == b.sign_ && a.mag_ == b.mag_;
    }

    friend std::strong_ordering operator<=>(const BigInt& a, const BigInt& b) {
        if (a.sign_ != b.sign_) return a.sign_ <=> b.sign_;
        int c = cmp_mag(a.mag_, b.mag_) * (a.sign_ < 0 ? -1 : 1);
        return c <=> 0;
    }

    std::string to_string() const {
        if (sign_ == 0) return "0";
        std::string s = sign_ < 0 ? "-" : "";
        s += std::to_string(mag_.back());
        char buf[16];
        for (std::size_t i = mag_.size() - 1; i-- > 0;) {
            std::snprintf(buf, sizeof buf, "%09u", mag_[i]);
            s += buf;
        }
        return s;
    }

    static BigInt pow(const BigInt& base, std::uint64_t e) {
        BigInt r = 1, b = base;
        while (e) {
            if (e & 1) r *= b;
            b *= b;
            e >>= 1;
        }
        return r;
    }

    static BigInt two_pow(std::uint64_t e) { return pow(BigInt{2}, e); }

    static BigInt factorial(std::uint64_t n) {
        BigInt r = 1;
        for (std::uint64_t i = 2; i <= n; ++i) r *= BigInt{static_cast<std::int64_t>(i)};
        return r;
    }

    static BigInt binomial(std::uint64_t n, std::uint64_t k) {
        if (k > n) return 0;
        if (k > n - k) k = n - k;
        BigInt r = 1;
        for (std::uint64_t i = 1; i <= k; ++i) {
            r *= BigInt{static_cast<std::int64_t>(n - k + i)};
            r /= BigInt{static_cast<std::int64_t>(i)};
        }
        return r;
    }
};

inline BigInt gcd(BigInt a, BigInt b) {
    a = a.abs();
    b = b.abs();
    while (!b.is_zero()) {
        BigInt r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

// Exact rational with reduced normal form (den > 0, gcd(num, den) = 1).
// Covers what the conjecture reports need: products, scaling, comparison.
class BigRational {
    BigInt num_ = 0, den_ = 1;

    void normalize() {
        if (den_.is_zero()) throw std::domain_error("BigRational: zero denominator");
        if (den_.is_negative()) { num_ = -num_; den_ = -den_; }
        BigInt g = gcd(num_, den_);
        if (!g.is_zero() && !(g == BigInt{1})) { num_ /= g; den_ /= g; }
        if (num_.is_zero()) den_ = 1;
    }

public:
    BigRational() = default;
    BigRational(BigInt n) : num_(std::move(n)) {}          // NOLINT
    BigRational(std::int64_t n) : num_(n) {}               // NOLINT
    BigRational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) { normalize(); }

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }
    bool is_integer() const { return den_ == BigInt{1}; }

    friend BigRational operator*(const BigRational& a, const BigRational& b) {
        return BigRational(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend BigRational operator+(const BigRational& a, const BigRational& b) {
        return BigRational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend BigRational operator-(const BigRational& a, const BigRational& b) {
        return BigRational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }

    friend bool operator==(const BigRational& a, const BigRational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const BigRational& a, const BigRational& b) {
        return (a.num_ * b.den_) <=> (b.num_ * a.den_);
    }

    std::string to_string() const {
        if (is_integer()) return num_.to_string();
        return num_.to_string() + "/" + den_.to_string();
    }
};

} // namespace srt

#pragma once

#include <string>
#include <vector>

#include "srt/bigint.hpp"

namespace srt {

// Integer polynomial in t with exact coefficients, dense little-endian.
struct Poly {
    std::vector<BigInt> c;

    Poly() = default;
    Poly(std::initializer_list<std::int64_t> v) {
        for (auto x : v) c.push_back(BigInt{x});
        trim();
    }
    static Poly constant(BigInt v) {
        Poly p;
        p.c.push_back(std::move(v));
        p.trim();
        return p;
    }

    void trim() {
        while (!c.empty() && c.back().is_zero()) c.pop_back();
    }

    bool is_zero() const { return c.empty(); }
    int degree() const { return static_cast<int>(c.size()) - 1; } // -1 for 0

    const BigInt& coeff(int k) const {
        static const BigInt zero{0};
        return k >= 0 && k < static_cast<int>(c.size()) ? c[static_cast<std::size_t>(k)] : zero;
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        Poly r;
        r.c.resize(std::max(a.c.size(), b.c.size()), BigInt{0});
        for (std::size_t i = 0; i < r.c.size(); ++i) {
            if (i < a.c.size()) r.c[i] += a.c[i];
            if (i < b.c.size()) r.c[i] += b.c[i];
        }
        r.trim();
        return r;
    }

    friend Poly operator-(const Poly& a, const Poly& b) {
        Poly r;
        r.c.resize(std::max(a.c.size(), b.c.size()), BigInt{0});
        for (std::size_t i = 0; i < r.c.size(); ++i) {
            if (i < a.c.size()) r.c[i] += a.c[i];
            if (i < b.c.size()) r.c[i] -= b.c[i];
        }
        r.trim();
        return r;
    }

    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        Poly r;
        r.c.assign(a.c.size() + b.c.size() - 1, BigInt{0});
        for (std::size_t i = 0; i < a.c.size(); ++i)
            for (std::size_t j = 0; j < b.c.size(); ++j)
                r.c[i + j] += a.c[i] * b.c[j];
        r.trim();
        return r;
    }

    friend bool operator==(const Poly& a, const Poly& b) { return a.c == b.c; }

    BigInt eval(const BigInt& x) const {
        BigInt r = 0;
        for (std::size_t i = c.size(); i-- > 0;) r = r * x + c[i];
        return r;
    }

    static Poly pow(const Poly& base, int e) {
        Poly r = Poly{1};
        for (int i = 0; i < e; ++i) r = r * base;
        return r;
    }

    std::string to_string() const {
        if (is_zero()) return "0";
        std::string s;
        for (std::size_t k = 0; k < c.size(); ++k) {
            if (c[k].is_zero()) continue;
            BigInt a = c[k];
            if (!s.empty()) {
                s += a.is_negative() ? " - " : " + ";
                if (a.is_negative()) a = -a;
            } else if (a.is_negative()) {
                s += "-";
                a = -a;
            }
            std::string mag = a.to_string();
            if (k == 0) s += mag;
            else {
                if (mag != "1") s += mag + "*";
                s += "t";
                if (k > 1) s += "^" + std::to_string(k);
            }
        }
        return s;
    }
};

enum class DenomBase { one_minus_t, t_minus_one };

// Exact rational function  constant + numerator / base^exponent  with base
// either (1-t) or (t-1).  Carries Hilbert series of rings (base 1-t) and of
// local cohomology modules (base t-1, plus the standalone constant term).
struct RationalSeries {
    Poly numerator;
    DenomBase base = DenomBase::one_minus_t;
    int denom_exponent = 0;
    BigInt constant_offset = 0;

    static Poly base_poly(DenomBase b) {
        return b == DenomBase::one_minus_t ? Poly{1, -1} : Poly{-1, 1};
    }

    // Cancel factors of the base from the numerator (root at t = 1).
    void normalize() {
        Poly b = base_poly(base);
        while (denom_exponent > 0 && !numerator.is_zero() &&
               numerator.eval(BigInt{1}).is_zero()) {
            // synthetic division by (t - 1), with sign fix for (1 - t)
            Poly q;
            q.c.assign(numerator.c.size() - 1, BigInt{0});
            BigInt carry = 0;
            for (std::size_t i = numerator.c.size(); i-- > 1;) {
                carry = carry + numerator.c[i];
                q.c[i - 1] = carry;
            }
            q.trim();
            if (base == DenomBase::one_minus_t)
                for (auto& x : q.c) x = -x;
            numerator = std::move(q);
            --denom_exponent;
        }
        if (numerator.is_zero()) denom_exponent = 0;
    }

    // Everything over base^denom_exponent, constant folded in.
    Poly combined_numerator() const {
        return numerator + Poly::constant(constant_offset) * Poly::pow(base_poly(base), denom_exponent);
    }

    // Exact equality as rational functions (base conversion via (1-t) = -(t-1)).
    friend bool operator==(const RationalSeries& a, const RationalSeries& b) {
        auto to_tm1 = [](const RationalSeries& s) {
            Poly n = s.combined_numerator();
            if (s.base == DenomBase::one_minus_t && s.denom_exponent % 2 == 1)
                for (auto& x : n.c) x = -x;
            return n;
        };
        Poly na = to_tm1(a), nb = to_tm1(b);
        Poly tm1 = Poly{-1, 1};
        return na * Poly::pow(tm1, b.denom_exponent) == nb * Poly::pow(tm1, a.denom_exponent);
    }

    std::string to_string() const {
        std::string denom = base == DenomBase::one_minus_t ? "(1-t)" : "(t-1)";
        std::string s;
        if (!constant_offset.is_zero() || (numerator.is_zero() && denom_exponent == 0))
            s += constant_offset.to_string();
        if (!numerator.is_zero() || denom_exponent > 0) {
            if (!s.empty()) s += " + ";
            s += "(" + numerator.to_string() + ")";
            if (denom_exponent > 0) s += " / " + denom + "^" + std::to_string(denom_exponent);
        }
        return s;
    }
};

} // namespace srt

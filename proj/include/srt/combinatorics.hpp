#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "srt/bigint.hpp"
#include "srt/complex.hpp"
#include "srt/errors.hpp"
#include "srt/homology.hpp"

namespace srt {

// A(n, j, i) = #{σ ∈ S_n : σ(1) = i, des(σ) = j}, 1 <= i <= n, 0 <= j <= n-1.
struct RefinedEulerianTable {
    int n = 0;
    std::vector<std::vector<BigInt>> a; // a[j][i-1]

    const BigInt& at(int j, int i) const {
        static const BigInt zero{0};
        if (j < 0 || j >= n || i < 1 || i > n) return zero;
        return a[static_cast<std::size_t>(j)][static_cast<std::size_t>(i - 1)];
    }

    BigInt eulerian(int j) const { // marginal over first entries
        BigInt s = 0;
        for (int i = 1; i <= n; ++i) s += at(j, i);
        return s;
    }
};

// Coefficients c_k = #{σ ∈ S_m : des(σ) = k}, 0 <= k <= m-1.
struct DescentPolynomial {
    int m = 0;
    std::vector<BigInt> c;
};

inline BigInt stirling2(int m, int r) {
    if (r < 0 || r > m || m < 0) throw OutOfRangeError("stirling2: need 0 <= r <= m");
    // S(m, r) = r S(m-1, r) + S(m-1, r-1)
    std::vector<BigInt> row{BigInt{1}}; // S(0, 0)
    for (int i = 1; i <= m; ++i) {
        std::vector<BigInt> next(static_cast<std::size_t>(i + 1), BigInt{0});
        for (int j = 1; j <= i; ++j) {
            next[static_cast<std::size_t>(j)] =
                BigInt{j} * (j < static_cast<int>(row.size()) ? row[static_cast<std::size_t>(j)] : BigInt{0}) +
                row[static_cast<std::size_t>(j - 1)];
        }
        row = std::move(next);
    }
    return row[static_cast<std::size_t>(r)];
}

namespace detail {

// Removing the first letter of a permutation maps the count onto the
// order-isomorphic word over the remaining n-1 values:
//   A(n, j, i) = Σ_{r<i} A(n-1, j-1, r) + Σ_{r>=i} A(n-1, j, r).
inline std::shared_ptr<const RefinedEulerianTable> build_refined_eulerian(int n) {
    auto table = std::make_shared<RefinedEulerianTable>();
    table->n = n;
    std::vector<std::vector<BigInt>> prev{{BigInt{1}}}; // n = 1: A(1,0,1) = 1
    for (int m = 2; m <= n; ++m) {
        std::vector<std::vector<BigInt>> cur(
            static_cast<std::size_t>(m), std::vector<BigInt>(static_cast<std::size_t>(m), BigInt{0}));
        for (int j = 0; j < m; ++j)
            for (int i = 1; i <= m; ++i) {
                BigInt acc = 0;
                if (j >= 1 && j - 1 < m - 1)
                    for (int r = 1; r < i; ++r)
                        acc += prev[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(r - 1)];
                if (j < m - 1)
                    for (int r = i; r <= m - 1; ++r)
                        acc += prev[static_cast<std::size_t>(j)][static_cast<std::size_t>(r - 1)];
                cur[static_cast<std::size_t>(j)][static_cast<std::size_t>(i - 1)] = acc;
            }
        prev = std::move(cur);
    }
    table->a = std::move(prev);
    return table;
}

} // namespace detail

inline std::shared_ptr<const RefinedEulerianTable> refined_eulerian(int n) {
    if (n < 1) throw OutOfRangeError("refined_eulerian: need n >= 1");
    static std::mutex mu;
    static std::map<int, std::shared_ptr<const RefinedEulerianTable>> memo;
    std::lock_guard<std::mutex> lock(mu);
    auto it = memo.find(n);
    if (it != memo.end()) return it->second;
    auto table = detail::build_refined_eulerian(n);
    memo.emplace(n, table);
    return table;
}

inline DescentPolynomial descent_polynomial(int m) {
    if (m < 1) throw OutOfRangeError("descent_polynomial: need m >= 1");
    auto table = refined_eulerian(m);
    DescentPolynomial p;
    p.m = m;
    for (int k = 0; k < m; ++k) p.c.push_back(table->eulerian(k));
    return p;
}

// h-vector of sd(Δ) from the h-vector of Δ:
//   h_j^{sd} = Σ_i h_i A(d+2, j, i+1)   with h of length dim Δ + 2.
inline HVector sd_h_transform(const HVector& h) {
    int len = static_cast<int>(h.h.size());
    if (len < 1) throw LengthMismatchError("sd_h_transform: empty h-vector");
    if (len == 1) return h; // dim -1: sd({∅}) = {∅}
    auto table = refined_eulerian(len);
    HVector out;
    out.h.assign(static_cast<std::size_t>(len), 0);
    for (int j = 0; j < len; ++j) {
        BigInt acc = 0;
        for (int i = 0; i < len; ++i)
            acc += BigInt{h.h[static_cast<std::size_t>(i)]} * table->at(j, i + 1);
        out.h[static_cast<std::size_t>(j)] = acc.to_int64();
    }
    return out;
}

// ---- standalone inequality predicates ----

// For d >= 1:  Π_{l=2}^{d+1}(2^{d+1}-l) / ((d+1)! Π_{m=2}^{d}(2^{m+1}-3))
// is >= 1 when 1 <= d <= 3 and >= 2 when d >= 4.
inline bool lemma_no2(int d) {
    if (d < 1) throw OutOfStatedRangeError("lemma_no2: stated for d >= 1");
    BigInt num = 1;
    for (int l = 2; l <= d + 1; ++l) num *= BigInt::two_pow(static_cast<std::uint64_t>(d + 1)) - BigInt{l};
    BigInt den = BigInt::factorial(static_cast<std::uint64_t>(d + 1));
    for (int m = 2; m <= d; ++m) den *= BigInt::two_pow(static_cast<std::uint64_t>(m + 1)) - BigInt{3};
    BigInt threshold = d >= 4 ? 2 : 1;
    return num >= threshold * den;
}

// For n >= 11:  (n+1)! <= 2^{n^2/2 - 5n/2}.
inline bool lemma_no3(int n) {
    if (n < 11) throw OutOfStatedRangeError("lemma_no3: stated for n >= 11");
    // n(n-5) is even, so the exponent is an integer
    std::uint64_t exponent = static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(n - 5) / 2;
    return BigInt::factorial(static_cast<std::uint64_t>(n + 1)) <= BigInt::two_pow(exponent);
}

// For n >= 1, k >= 2:
//   Π_{l=0}^{n-1}(2^{n+1}+2k-4+l) >= (n+1)! · k · Π_{m=2}^{n}(2^{m+1}-3).
inline bool lemma_no4(int n, int k) {
    if (n < 1 || k < 2) throw OutOfStatedRangeError("lemma_no4: stated for n >= 1, k >= 2");
    BigInt num = 1;
    for (int l = 0; l < n; ++l)
        num *= BigInt::two_pow(static_cast<std::uint64_t>(n + 1)) + BigInt{2 * k - 4 + l};
    BigInt den = BigInt::factorial(static_cast<std::uint64_t>(n + 1)) * BigInt{k};
    for (int m = 2; m <= n; ++m) den *= BigInt::two_pow(static_cast<std::uint64_t>(m + 1)) - BigInt{3};
    return num >= den;
}

// For d >= 4:  d · Π_{l=0}^{d-2}(2^{d+2}-d-6-l) >= (d+1)! · Π_{l=2}^{d}(2^{l+1}-3).
inline bool lemma_no5(int d) {
    if (d < 4) throw OutOfStatedRangeError("lemma_no5: stated for d >= 4");
    BigInt lhs = d;
    for (int l = 0; l <= d - 2; ++l)
        lhs *= BigInt::two_pow(static_cast<std::uint64_t>(d + 2)) - BigInt{d + 6 + l};
    BigInt rhs = BigInt::factorial(static_cast<std::uint64_t>(d + 1));
    for (int l = 2; l <= d; ++l) rhs *= BigInt::two_pow(static_cast<std::uint64_t>(l + 1)) - BigInt{3};
    return lhs >= rhs;
}

// Instance form of the f-vector inequality: whenever the top reduced
// homology of Δ vanishes, f_{d-1} >= f_d + d.  Returns the implication.
inline bool lemma_fvec(const SimplicialComplex& cx, const FieldSpec& k) {
    if (cx.is_void() || cx.dim() < 0) throw OutOfStatedRangeError("lemma_fvec: need a nonvoid complex");
    int d = cx.dim();
    if (reduced_homology(cx, k).rank(d) != 0) return true; // hypothesis not met
    auto f = cx.f_vector();
    return f.f(d - 1) >= f.f(d) + d;
}

} // namespace srt

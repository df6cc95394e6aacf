#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "srt/bigint.hpp"
#include "srt/complex.hpp"
#include "srt/errors.hpp"

namespace srt {

struct FieldSpec {
    enum class Kind { rationals, prime };
    Kind kind = Kind::rationals;
    int p = 0;

    static FieldSpec rationals() { return {}; }

    static FieldSpec gf(int p) {
        if (p < 2) throw NonPrimeModulusError("modulus must be a prime >= 2");
        for (int d = 2; d * d <= p; ++d)
            if (p % d == 0) throw NonPrimeModulusError("modulus is not prime: " + std::to_string(p));
        return FieldSpec{Kind::prime, p};
    }

    bool is_rationals() const { return kind == Kind::rationals; }

    std::string name() const {
        return is_rationals() ? "Q" : "GF(" + std::to_string(p) + ")";
    }

    friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

// Reduced homology ranks; degrees not stored are zero.
struct HomologyProfile {
    FieldSpec field;
    std::map<int, int> dims;

    int rank(int i) const {
        auto it = dims.find(i);
        return it == dims.end() ? 0 : it->second;
    }

    int min_nonzero_degree_or(int fallback) const {
        return dims.empty() ? fallback : dims.begin()->first;
    }

    bool any() const { return !dims.empty(); }

    friend bool operator==(const HomologyProfile&, const HomologyProfile&) = default;
};

// Signed incidence matrix of ∂_i : C_i -> C_{i-1}, columns stored sparse.
// Row/column order matches SimplicialComplex::faces(i-1) / faces(i);
// i = 0 is the augmentation C_0 -> C_{-1} = k.
struct BoundaryMatrix {
    int rows = 0, cols = 0;
    std::vector<std::vector<std::pair<int, int>>> columns; // (row, ±1)
};

namespace detail {

struct OverflowSignal {};

// Signed-elimination counters for the int64 fast path; every arithmetic step
// is overflow-checked so the caller can redo the matrix in BigInt.
struct CheckedInt64 {
    std::int64_t v = 0;
    CheckedInt64() = default;
    CheckedInt64(std::int64_t x) : v(x) {} // NOLINT
    friend CheckedInt64 operator*(CheckedInt64 a, CheckedInt64 b) {
        std::int64_t r;
        if (__builtin_mul_overflow(a.v, b.v, &r)) throw OverflowSignal{};
        return r;
    }
    friend CheckedInt64 operator-(CheckedInt64 a, CheckedInt64 b) {
        std::int64_t r;
        if (__builtin_sub_overflow(a.v, b.v, &r)) throw OverflowSignal{};
        return r;
    }
    friend CheckedInt64 operator/(CheckedInt64 a, CheckedInt64 b) { return a.v / b.v; }
    bool is_zero() const { return v == 0; }
};

inline bool is_zero_of(const CheckedInt64& x) { return x.is_zero(); }
inline bool is_zero_of(const BigInt& x) { return x.is_zero(); }

// Fraction-free (Bareiss) elimination; pivots picked Markowitz-style by
// minimum fill among nonzero entries.  Returns the rank.
template <typename T>
int bareiss_rank(std::vector<std::vector<T>> a) {
    const int rows = static_cast<int>(a.size());
    const int cols = rows ? static_cast<int>(a[0].size()) : 0;
    int r = 0;
    T prev = T{1};
    std::vector<int> rowperm(static_cast<std::size_t>(rows));
    for (int i = 0; i < rows; ++i) rowperm[static_cast<std::size_t>(i)] = i;
    std::vector<int> colperm(static_cast<std::size_t>(cols));
    for (int j = 0; j < cols; ++j) colperm[static_cast<std::size_t>(j)] = j;

    auto at = [&](int i, int j) -> T& {
        return a[static_cast<std::size_t>(rowperm[static_cast<std::size_t>(i)])]
                [static_cast<std::size_t>(colperm[static_cast<std::size_t>(j)])];
    };

    while (r < rows && r < cols) {
        std::vector<int> rownnz(static_cast<std::size_t>(rows), 0), colnnz(static_cast<std::size_t>(cols), 0);
        for (int i = r; i < rows; ++i)
            for (int j = r; j < cols; ++j)
                if (!is_zero_of(at(i, j))) {
                    ++rownnz[static_cast<std::size_t>(i)];
                    ++colnnz[static_cast<std::size_t>(j)];
                }
        int pi = -1, pj = -1;
        long best = -1;
        for (int i = r; i < rows; ++i)
            for (int j = r; j < cols; ++j)
                if (!is_zero_of(at(i, j))) {
                    long cost = static_cast<long>(rownnz[static_cast<std::size_t>(i)] - 1) *
                                (colnnz[static_cast<std::size_t>(j)] - 1);
                    if (best < 0 || cost < best) {
                        best = cost;
                        pi = i;
                        pj = j;
                    }
                }
        if (pi < 0) break;
        std::swap(rowperm[static_cast<std::size_t>(r)], rowperm[static_cast<std::size_t>(pi)]);
        std::swap(colperm[static_cast<std::size_t>(r)], colperm[static_cast<std::size_t>(pj)]);
        T pivot = at(r, r);
        for (int i = r + 1; i < rows; ++i) {
            T lead = at(i, r);
            for (int j = r + 1; j < cols; ++j)
                at(i, j) = (at(i, j) * pivot - lead * at(r, j)) / prev;
            at(i, r) = T{0};
        }
        prev = pivot;
        ++r;
    }
    return r;
}

inline int rank_rational(const BoundaryMatrix& m) {
    if (m.rows == 0 || m.cols == 0) return 0;
    try {
        std::vector<std::vector<CheckedInt64>> a(
            static_cast<std::size_t>(m.rows),
            std::vector<CheckedInt64>(static_cast<std::size_t>(m.cols), CheckedInt64{0}));
        for (int j = 0; j < m.cols; ++j)
            for (auto [row, s] : m.columns[static_cast<std::size_t>(j)])
                a[static_cast<std::size_t>(row)][static_cast<std::size_t>(j)] = CheckedInt64{s};
        return bareiss_rank(std::move(a));
    } catch (const OverflowSignal&) {
        std::vector<std::vector<BigInt>> a(
            static_cast<std::size_t>(m.rows),
            std::vector<BigInt>(static_cast<std::size_t>(m.cols), BigInt{0}));
        for (int j = 0; j < m.cols; ++j)
            for (auto [row, s] : m.columns[static_cast<std::size_t>(j)])
                a[static_cast<std::size_t>(row)][static_cast<std::size_t>(j)] = BigInt{s};
        return bareiss_rank(std::move(a));
    }
}

inline int rank_gfp(const BoundaryMatrix& m, int p) {
    if (m.rows == 0 || m.cols == 0) return 0;
    std::vector<std::vector<std::int64_t>> a(
        static_cast<std::size_t>(m.rows), std::vector<std::int64_t>(static_cast<std::size_t>(m.cols), 0));
    for (int j = 0; j < m.cols; ++j)
        for (auto [row, s] : m.columns[static_cast<std::size_t>(j)])
            a[static_cast<std::size_t>(row)][static_cast<std::size_t>(j)] =
                ((s % p) + p) % p;
    int r = 0;
    for (int col = 0; col < m.cols && r < m.rows; ++col) {
        int pivot = -1;
        for (int i = r; i < m.rows; ++i)
            if (a[static_cast<std::size_t>(i)][static_cast<std::size_t>(col)] % p != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        std::swap(a[static_cast<std::size_t>(r)], a[static_cast<std::size_t>(pivot)]);
        // eliminate below without normalizing: row_i -= (a_ic / a_rc) row_r (mod p)
        std::int64_t inv = 1, base = a[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] % p, e = p - 2;
        while (e) { // Fermat inverse
            if (e & 1) inv = inv * base % p;
            base = base * base % p;
            e >>= 1;
        }
        for (int i = r + 1; i < m.rows; ++i) {
            std::int64_t f = a[static_cast<std::size_t>(i)][static_cast<std::size_t>(col)] % p * inv % p;
            if (!f) continue;
            for (int j = col; j < m.cols; ++j) {
                auto& x = a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
                x = ((x - f * a[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)]) % p + p) % p;
            }
        }
        ++r;
    }
    return r;
}

// GF(2) rank with rows packed into words.
inline int rank_gf2(const BoundaryMatrix& m) {
    if (m.rows == 0 || m.cols == 0) return 0;
    const int words = (m.rows + 63) / 64;
    std::vector<std::uint64_t> basis; // reduced column echelon, owner pivot rows
    std::vector<int> pivots;
    std::vector<std::uint64_t> col(static_cast<std::size_t>(words));
    int rank = 0;
    for (int j = 0; j < m.cols; ++j) {
        std::fill(col.begin(), col.end(), 0);
        for (auto [row, s] : m.columns[static_cast<std::size_t>(j)])
            col[static_cast<std::size_t>(row / 64)] ^= std::uint64_t{1} << (row % 64);
        for (std::size_t b = 0; b < pivots.size(); ++b) {
            int pr = pivots[b];
            if ((col[static_cast<std::size_t>(pr / 64)] >> (pr % 64)) & 1)
                for (int w = 0; w < words; ++w)
                    col[static_cast<std::size_t>(w)] ^= basis[b * static_cast<std::size_t>(words) + static_cast<std::size_t>(w)];
        }
        int pr = -1;
        for (int w = 0; w < words && pr < 0; ++w)
            if (col[static_cast<std::size_t>(w)])
                pr = w * 64 + std::countr_zero(col[static_cast<std::size_t>(w)]);
        if (pr >= 0) {
            pivots.push_back(pr);
            basis.insert(basis.end(), col.begin(), col.end());
            ++rank;
        }
    }
    return rank;
}

inline int rank_over(const BoundaryMatrix& m, const FieldSpec& k) {
    if (k.is_rationals()) return rank_rational(m);
    if (k.p == 2) return rank_gf2(m);
    return rank_gfp(m, k.p);
}

} // namespace detail

// ∂_i with -1 <= i <= dim; i = -1 is the zero map out of C_{-1}.
inline BoundaryMatrix boundary_matrix(const SimplicialComplex& cx, int i) {
    BoundaryMatrix m;
    if (cx.is_void()) return m;
    if (i == -1) {
        m.rows = 0;
        m.cols = 1; // C_{-1} spanned by ∅
        m.columns.assign(1, {});
        return m;
    }
    const auto& src = cx.faces(i);
    const auto& dst = cx.faces(i - 1);
    m.rows = static_cast<int>(dst.size());
    m.cols = static_cast<int>(src.size());
    m.columns.assign(src.size(), {});
    std::unordered_map<Bitset, int, BitsetHash> row_of;
    for (std::size_t r = 0; r < dst.size(); ++r) row_of.emplace(dst[r], static_cast<int>(r));
    for (std::size_t c = 0; c < src.size(); ++c) {
        auto verts = src[c].to_indices(); // ascending
        int sign = 1;
        for (int v : verts) {
            Bitset sub = src[c];
            sub.reset(static_cast<std::size_t>(v));
            m.columns[c].push_back({row_of.at(sub), sign});
            sign = -sign;
        }
        if (verts.empty() && i == 0) {
            // cannot happen: 0-faces have one vertex
        }
    }
    return m;
}

// Reduced homology via rank computations on the augmented chain complex.
inline HomologyProfile reduced_homology(const SimplicialComplex& cx, const FieldSpec& k) {
    HomologyProfile prof;
    prof.field = k;
    if (cx.is_void()) return prof;
    const int d = cx.dim();
    std::vector<int> nfaces(static_cast<std::size_t>(d + 2), 0);
    for (int i = -1; i <= d; ++i)
        nfaces[static_cast<std::size_t>(i + 1)] = static_cast<int>(cx.faces(i).size());
    std::vector<int> rank(static_cast<std::size_t>(d + 3), 0); // rank[i+1] = rank ∂_i, ∂_{d+1} = 0
    for (int i = 0; i <= d; ++i)
        rank[static_cast<std::size_t>(i + 1)] = detail::rank_over(boundary_matrix(cx, i), k);
    for (int i = -1; i <= d; ++i) {
        int h = nfaces[static_cast<std::size_t>(i + 1)] - rank[static_cast<std::size_t>(i + 1)] -
                rank[static_cast<std::size_t>(i + 2)];
        if (h != 0) prof.dims[i] = h;
    }
    return prof;
}

} // namespace srt

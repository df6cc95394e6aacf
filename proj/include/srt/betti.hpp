#pragma once

#include <atomic>
#include <cstdint>
#include <limits>
#include <map>
#include <thread>
#include <vector>

#include "srt/complex.hpp"
#include "srt/errors.hpp"
#include "srt/homology.hpp"
#include "srt/series.hpp"

namespace srt {

struct BettiOptions {
    int degree_cap = -1;  // -1: full table (cap = n)
    int budget_log2 = 24; // refuse sweeps with 2^n work items beyond this
    int jobs = 0;         // 0: one task slot per hardware thread
    bool record_witnesses = true;
};

// Sparse table of graded Betti numbers β_{ij} of k[Δ].
struct BettiTable {
    int n = 0;
    FieldSpec field;
    int cap = 0; // entries computed for all j <= cap
    std::map<std::pair<int, int>, std::uint64_t> entries;
    // colex-least witness subset per nonzero entry
    std::map<std::pair<int, int>, std::uint64_t> witnesses;

    bool complete() const { return cap >= n; }

    std::uint64_t beta(int i, int j) const {
        auto it = entries.find({i, j});
        return it == entries.end() ? 0 : it->second;
    }

    int pdim() const {
        int p = 0;
        for (const auto& [ij, v] : entries)
            if (v) p = std::max(p, ij.first);
        return p;
    }
};

struct ShiftProfile {
    int height = 0;
    int pdim = 0;
    // min_shift[i-1], max_shift[i-1] for homological degree i = 1..pdim
    std::vector<int> min_shift, max_shift;

    int m(int i) const { return min_shift.at(static_cast<std::size_t>(i - 1)); }
    int M(int i) const { return max_shift.at(static_cast<std::size_t>(i - 1)); }
};

namespace detail {

// Flattened face data for subset sweeps; requires <= 64 vertices.
struct SweepFaces {
    int n = 0;
    int dim = -1;
    std::vector<std::uint64_t> mask; // nonempty faces, ids sorted by (dim, colex)
    std::vector<int> dim_of;
    std::vector<int> first_id;  // first_id[d] = first face id of dimension d, plus total sentinel
    std::vector<int> bnd_off;   // per face id into bnd_sub/bnd_sign
    std::vector<int> bnd_sub;   // codim-1 subface ids
    std::vector<signed char> bnd_sign;
    std::vector<int> cof_off;   // per face id into cof_id
    std::vector<int> cof_id;    // codim-1 coface ids

    static SweepFaces build(const SimplicialComplex& cx) {
        if (cx.vertex_count() > 64)
            throw BudgetExceededError("subset sweeps are limited to 64 vertices");
        SweepFaces f;
        f.n = cx.vertex_count();
        f.dim = cx.dim();
        std::unordered_map<std::uint64_t, int> id_of;
        for (int d = 0; d <= f.dim; ++d) {
            f.first_id.push_back(static_cast<int>(f.mask.size()));
            for (const auto& face : cx.faces(d)) {
                id_of.emplace(face.low_word(), static_cast<int>(f.mask.size()));
                f.mask.push_back(face.low_word());
                f.dim_of.push_back(d);
            }
        }
        f.first_id.push_back(static_cast<int>(f.mask.size()));
        f.bnd_off.push_back(0);
        for (std::size_t id = 0; id < f.mask.size(); ++id) {
            if (f.dim_of[id] > 0) {
                std::uint64_t m = f.mask[id];
                int sign = 1;
                std::uint64_t rest = m;
                while (rest) {
                    std::uint64_t bit = rest & (~rest + 1);
                    f.bnd_sub.push_back(id_of.at(m ^ bit));
                    f.bnd_sign.push_back(static_cast<signed char>(sign));
                    sign = -sign;
                    rest ^= bit;
                }
            }
            f.bnd_off.push_back(static_cast<int>(f.bnd_sub.size()));
        }
        // transpose the boundary into coface lists
        std::vector<int> counts(f.mask.size(), 0);
        for (int sub : f.bnd_sub) ++counts[static_cast<std::size_t>(sub)];
        f.cof_off.assign(f.mask.size() + 1, 0);
        for (std::size_t id = 0; id < f.mask.size(); ++id)
            f.cof_off[id + 1] = f.cof_off[id] + counts[id];
        f.cof_id.assign(f.bnd_sub.size(), 0);
        std::vector<int> cursor(f.cof_off.begin(), f.cof_off.end() - 1);
        for (std::size_t id = 0; id < f.mask.size(); ++id)
            for (int kx = f.bnd_off[id]; kx < f.bnd_off[id + 1]; ++kx) {
                int sub = f.bnd_sub[static_cast<std::size_t>(kx)];
                f.cof_id[static_cast<std::size_t>(cursor[static_cast<std::size_t>(sub)]++)] =
                    static_cast<int>(id);
            }
        return f;
    }
};

struct SweepScratch {
    std::vector<int> loc;                    // face id -> local column/row index
    std::vector<std::vector<int>> surviving; // per dimension, face ids inside W
    std::vector<std::uint64_t> gf2;          // column words + echelon basis
    std::vector<int> gf2_pivots;
    std::vector<std::int64_t> dense;         // row-major Bareiss / mod-p buffer
    std::vector<int> hdim;                   // reduced homology ranks, index deg+1
    std::vector<int> rank;                   // rank[d+1] = rank ∂_d
    std::vector<char> alive;
    std::vector<int> cofcnt;                 // live codim-1 coface counts
    std::vector<int> free_faces;

    void prepare(const SweepFaces& f) {
        loc.assign(f.mask.size(), 0);
        surviving.assign(static_cast<std::size_t>(f.dim + 1), {});
        hdim.assign(static_cast<std::size_t>(f.dim + 2), 0);
        rank.assign(static_cast<std::size_t>(f.dim + 3), 0);
        alive.assign(f.mask.size(), 0);
        cofcnt.assign(f.mask.size(), 0);
    }
};

// rank of the GF(2) reduction of ∂_d restricted to W
inline int sweep_rank_gf2(const SweepFaces& f, const std::vector<int>& cols,
                          const std::vector<int>& loc, int nrows, SweepScratch& s) {
    const int words = (nrows + 63) / 64;
    s.gf2.assign(static_cast<std::size_t>(words) * (cols.size() + 1), 0);
    s.gf2_pivots.clear();
    std::uint64_t* cur = s.gf2.data() + static_cast<std::size_t>(words) * cols.size();
    int rank = 0;
    for (int id : cols) {
        std::fill(cur, cur + words, 0);
        for (int kx = f.bnd_off[static_cast<std::size_t>(id)];
             kx < f.bnd_off[static_cast<std::size_t>(id) + 1]; ++kx) {
            int row = loc[static_cast<std::size_t>(f.bnd_sub[static_cast<std::size_t>(kx)])];
            cur[row / 64] ^= std::uint64_t{1} << (row % 64);
        }
        for (std::size_t b = 0; b < s.gf2_pivots.size(); ++b) {
            int pr = s.gf2_pivots[b];
            if ((cur[pr / 64] >> (pr % 64)) & 1) {
                const std::uint64_t* basis = s.gf2.data() + b * static_cast<std::size_t>(words);
                for (int w = 0; w < words; ++w) cur[w] ^= basis[w];
            }
        }
        int pr = -1;
        for (int w = 0; w < words && pr < 0; ++w)
            if (cur[w]) pr = w * 64 + std::countr_zero(cur[w]);
        if (pr >= 0) {
            std::copy(cur, cur + words, s.gf2.data() + static_cast<std::size_t>(rank) * words);
            s.gf2_pivots.push_back(pr);
            ++rank;
        }
    }
    return rank;
}

// Bareiss on the checked int64 buffer; falls back to BigInt on overflow.
inline int sweep_rank_rational(const SweepFaces& f, const std::vector<int>& cols,
                               const std::vector<int>& loc, int nrows, SweepScratch& s) {
    const int nc = static_cast<int>(cols.size());
    s.dense.assign(static_cast<std::size_t>(nrows) * static_cast<std::size_t>(nc), 0);
    for (int j = 0; j < nc; ++j)
        for (int kx = f.bnd_off[static_cast<std::size_t>(cols[static_cast<std::size_t>(j)])];
             kx < f.bnd_off[static_cast<std::size_t>(cols[static_cast<std::size_t>(j)]) + 1]; ++kx) {
            int row = loc[static_cast<std::size_t>(f.bnd_sub[static_cast<std::size_t>(kx)])];
            s.dense[static_cast<std::size_t>(row) * static_cast<std::size_t>(nc) +
                    static_cast<std::size_t>(j)] = f.bnd_sign[static_cast<std::size_t>(kx)];
        }
    auto at = [&](int i, int j) -> std::int64_t& {
        return s.dense[static_cast<std::size_t>(i) * static_cast<std::size_t>(nc) +
                       static_cast<std::size_t>(j)];
    };
    try {
        int r = 0;
        std::int64_t prev = 1;
        int rows = nrows;
        while (r < rows && r < nc) {
            int pi = -1, pj = -1;
            for (int j = r; j < nc && pi < 0; ++j)
                for (int i = r; i < rows; ++i)
                    if (at(i, j) != 0) {
                        pi = i;
                        pj = j;
                        break;
                    }
            if (pi < 0) break;
            if (pi != r)
                for (int j = r; j < nc; ++j) std::swap(at(pi, j), at(r, j));
            if (pj != r)
                for (int i = 0; i < rows; ++i) std::swap(at(i, pj), at(i, r));
            std::int64_t pivot = at(r, r);
            for (int i = r + 1; i < rows; ++i) {
                std::int64_t lead = at(i, r);
                for (int j = r + 1; j < nc; ++j) {
                    std::int64_t a, b;
                    if (__builtin_mul_overflow(at(i, j), pivot, &a) ||
                        __builtin_mul_overflow(lead, at(r, j), &b))
                        throw OverflowSignal{};
                    std::int64_t c;
                    if (__builtin_sub_overflow(a, b, &c)) throw OverflowSignal{};
                    at(i, j) = c / prev;
                }
                at(i, r) = 0;
            }
            prev = pivot;
            ++r;
        }
        return r;
    } catch (const OverflowSignal&) {
        std::vector<std::vector<BigInt>> a(
            static_cast<std::size_t>(nrows), std::vector<BigInt>(cols.size(), BigInt{0}));
        for (std::size_t j = 0; j < cols.size(); ++j)
            for (int kx = f.bnd_off[static_cast<std::size_t>(cols[j])];
                 kx < f.bnd_off[static_cast<std::size_t>(cols[j]) + 1]; ++kx)
                a[static_cast<std::size_t>(
                    loc[static_cast<std::size_t>(f.bnd_sub[static_cast<std::size_t>(kx)])])][j] =
                    BigInt{f.bnd_sign[static_cast<std::size_t>(kx)]};
        return bareiss_rank(std::move(a));
    }
}

inline int sweep_rank_gfp(const SweepFaces& f, const std::vector<int>& cols,
                          const std::vector<int>& loc, int nrows, int p, SweepScratch& s) {
    const int nc = static_cast<int>(cols.size());
    s.dense.assign(static_cast<std::size_t>(nrows) * static_cast<std::size_t>(nc), 0);
    for (int j = 0; j < nc; ++j)
        for (int kx = f.bnd_off[static_cast<std::size_t>(cols[static_cast<std::size_t>(j)])];
             kx < f.bnd_off[static_cast<std::size_t>(cols[static_cast<std::size_t>(j)]) + 1]; ++kx) {
            int row = loc[static_cast<std::size_t>(f.bnd_sub[static_cast<std::size_t>(kx)])];
            std::int64_t v = f.bnd_sign[static_cast<std::size_t>(kx)];
            s.dense[static_cast<std::size_t>(row) * static_cast<std::size_t>(nc) +
                    static_cast<std::size_t>(j)] = (v % p + p) % p;
        }
    auto at = [&](int i, int j) -> std::int64_t& {
        return s.dense[static_cast<std::size_t>(i) * static_cast<std::size_t>(nc) +
                       static_cast<std::size_t>(j)];
    };
    int r = 0;
    for (int col = 0; col < nc && r < nrows; ++col) {
        int pivot = -1;
        for (int i = r; i < nrows && pivot < 0; ++i)
            if (at(i, col)) pivot = i;
        if (pivot < 0) continue;
        if (pivot != r)
            for (int j = col; j < nc; ++j) std::swap(at(pivot, j), at(r, j));
        std::int64_t inv = 1, base = at(r, col), e = p - 2;
        while (e) {
            if (e & 1) inv = inv * base % p;
            base = base * base % p;
            e >>= 1;
        }
        for (int i = r + 1; i < nrows; ++i) {
            std::int64_t fmul = at(i, col) * inv % p;
            if (!fmul) continue;
            for (int j = col; j < nc; ++j)
                at(i, j) = ((at(i, j) - fmul * at(r, j)) % p + p) % p;
        }
        ++r;
    }
    return r;
}

// Collapse pass + survivor lists shared by the homology entry points.
//
// A face with exactly one live codim-1 coface cannot sit under any larger
// face (two elements of a bigger coface would give two codim-1 cofaces), so
// removing the pair is an elementary collapse: the survivors stay downward
// closed and the homotopy type is unchanged.  Most restrictions collapse to
// a small core before any matrix is built.  Returns false when the core is
// a lone vertex (contractible: all reduced ranks zero).
inline bool restriction_core(const SweepFaces& f, std::uint64_t w, SweepScratch& s) {
    for (auto& level : s.surviving) level.clear();

    int live = 0;
    for (std::size_t id = 0; id < f.mask.size(); ++id) {
        bool in = (f.mask[id] & ~w) == 0;
        s.alive[id] = in;
        s.cofcnt[id] = 0;
        if (in) ++live;
    }
    if (live) {
        for (std::size_t id = 0; id < f.mask.size(); ++id)
            if (s.alive[id])
                for (int kx = f.bnd_off[id]; kx < f.bnd_off[id + 1]; ++kx)
                    ++s.cofcnt[static_cast<std::size_t>(f.bnd_sub[static_cast<std::size_t>(kx)])];
        s.free_faces.clear();
        for (std::size_t id = 0; id < f.mask.size(); ++id)
            if (s.alive[id] && s.cofcnt[id] == 1) s.free_faces.push_back(static_cast<int>(id));
        while (!s.free_faces.empty()) {
            int sigma = s.free_faces.back();
            s.free_faces.pop_back();
            if (!s.alive[static_cast<std::size_t>(sigma)] ||
                s.cofcnt[static_cast<std::size_t>(sigma)] != 1)
                continue;
            int tau = -1;
            for (int kx = f.cof_off[static_cast<std::size_t>(sigma)];
                 kx < f.cof_off[static_cast<std::size_t>(sigma) + 1]; ++kx)
                if (s.alive[static_cast<std::size_t>(f.cof_id[static_cast<std::size_t>(kx)])]) {
                    tau = f.cof_id[static_cast<std::size_t>(kx)];
                    break;
                }
            s.alive[static_cast<std::size_t>(sigma)] = 0;
            s.alive[static_cast<std::size_t>(tau)] = 0;
            live -= 2;
            for (int kx = f.bnd_off[static_cast<std::size_t>(tau)];
                 kx < f.bnd_off[static_cast<std::size_t>(tau) + 1]; ++kx) {
                int rho = f.bnd_sub[static_cast<std::size_t>(kx)];
                if (--s.cofcnt[static_cast<std::size_t>(rho)] == 1 &&
                    s.alive[static_cast<std::size_t>(rho)])
                    s.free_faces.push_back(rho);
            }
            for (int kx = f.bnd_off[static_cast<std::size_t>(sigma)];
                 kx < f.bnd_off[static_cast<std::size_t>(sigma) + 1]; ++kx) {
                int rho = f.bnd_sub[static_cast<std::size_t>(kx)];
                if (--s.cofcnt[static_cast<std::size_t>(rho)] == 1 &&
                    s.alive[static_cast<std::size_t>(rho)])
                    s.free_faces.push_back(rho);
            }
        }
    }
    // a core that is a single vertex is contractible: every reduced rank zero
    if (live == 1) {
        for (std::size_t id = 0; id < f.mask.size(); ++id)
            if (s.alive[id] && f.dim_of[id] == 0) return false;
    }
    for (std::size_t id = 0; id < f.mask.size(); ++id)
        if (s.alive[id]) {
            auto& level = s.surviving[static_cast<std::size_t>(f.dim_of[id])];
            s.loc[id] = static_cast<int>(level.size());
            level.push_back(static_cast<int>(id));
        }
    return true;
}

// rank of ∂_d on the current core; d = 0 is the augmentation onto C_{-1}
inline int core_rank(const SweepFaces& f, const FieldSpec& k, int d, SweepScratch& s) {
    if (d < 0 || d > f.dim) return 0;
    if (d == 0) return s.surviving[0].empty() ? 0 : 1;
    const auto& cols = s.surviving[static_cast<std::size_t>(d)];
    int nrows = static_cast<int>(s.surviving[static_cast<std::size_t>(d - 1)].size());
    if (cols.empty() || nrows == 0) return 0;
    if (k.is_rationals()) return sweep_rank_rational(f, cols, s.loc, nrows, s);
    if (k.p == 2) return sweep_rank_gf2(f, cols, s.loc, nrows, s);
    return sweep_rank_gfp(f, cols, s.loc, nrows, k.p, s);
}

// Reduced homology ranks of Δ_W into s.hdim (index deg+1).
inline void restriction_homology(const SweepFaces& f, std::uint64_t w, const FieldSpec& k,
                                 SweepScratch& s) {
    std::fill(s.hdim.begin(), s.hdim.end(), 0);
    if (!restriction_core(f, w, s)) return;
    const int top = f.dim;
    auto& rank = s.rank; // rank[d+1] = rank ∂_d
    std::fill(rank.begin(), rank.end(), 0);
    for (int d = 0; d <= top; ++d)
        rank[static_cast<std::size_t>(d + 1)] = core_rank(f, k, d, s);
    s.hdim[0] = 1 - rank[1]; // H̃_{-1}
    for (int d = 0; d <= top; ++d)
        s.hdim[static_cast<std::size_t>(d + 1)] =
            static_cast<int>(s.surviving[static_cast<std::size_t>(d)].size()) -
            rank[static_cast<std::size_t>(d + 1)] - rank[static_cast<std::size_t>(d + 2)];
}

// dim H̃_deg(Δ_W) alone; only the two adjacent boundary ranks are computed.
inline int restriction_homology_degree(const SweepFaces& f, std::uint64_t w, const FieldSpec& k,
                                       int deg, SweepScratch& s) {
    if (!restriction_core(f, w, s)) return 0;
    int n = deg == -1 ? 1 : (deg <= f.dim ? static_cast<int>(s.surviving[static_cast<std::size_t>(deg)].size()) : 0);
    return n - core_rank(f, k, deg, s) - core_rank(f, k, deg + 1, s);
}

inline std::uint64_t next_same_popcount(std::uint64_t v) { // Gosper's hack
    std::uint64_t t = v | (v - 1);
    return (t + 1) | (((~t & (t + 1)) - 1) >> (std::countr_zero(v) + 1));
}

inline std::uint64_t binom64(int n, int k) {
    static const auto table = [] {
        std::array<std::array<std::uint64_t, 65>, 65> c{};
        for (int i = 0; i <= 64; ++i) {
            c[static_cast<std::size_t>(i)][0] = 1;
            for (int j = 1; j <= i; ++j)
                c[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                    c[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] +
                    (j <= i - 1 ? c[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j)] : 0);
        }
        return c;
    }();
    if (k < 0 || k > n) return 0;
    return table[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

// k-subset of {0..n-1} at the given colex rank.
inline std::uint64_t combination_at_rank(int n, int k, std::uint64_t rank) {
    std::uint64_t mask = 0;
    for (int i = k; i >= 1; --i) {
        int c = i - 1;
        while (c + 1 < n && binom64(c + 1, i) <= rank) ++c;
        mask |= std::uint64_t{1} << c;
        rank -= binom64(c, i);
        n = c;
    }
    return mask;
}

// Work accumulated by one sweep task; merging is commutative.
struct SweepAccumulator {
    int n = 0;
    std::vector<std::uint64_t> beta;    // (n+1) x (n+1), row i col j
    std::vector<std::uint64_t> witness; // colex-least contributing W, ~0 if none

    explicit SweepAccumulator(int nn)
        : n(nn), beta(static_cast<std::size_t>((nn + 1) * (nn + 1)), 0),
          witness(static_cast<std::size_t>((nn + 1) * (nn + 1)),
                  std::numeric_limits<std::uint64_t>::max()) {}

    void add(int i, int j, std::uint64_t v, std::uint64_t w) {
        auto idx = static_cast<std::size_t>(i * (n + 1) + j);
        beta[idx] += v;
        witness[idx] = std::min(witness[idx], w);
    }

    void merge(const SweepAccumulator& o) {
        for (std::size_t idx = 0; idx < beta.size(); ++idx) {
            beta[idx] += o.beta[idx];
            witness[idx] = std::min(witness[idx], o.witness[idx]);
        }
    }
};

inline void sweep_range(const SweepFaces& faces, const FieldSpec& k, int j, std::uint64_t start_rank,
                        std::uint64_t count, SweepAccumulator& acc, SweepScratch& scratch) {
    if (count == 0) return;
    std::uint64_t w = j == 0 ? 0 : combination_at_rank(faces.n, j, start_rank);
    for (std::uint64_t step = 0; step < count; ++step) {
        restriction_homology(faces, w, k, scratch);
        for (int deg = -1; deg <= faces.dim; ++deg) {
            int h = scratch.hdim[static_cast<std::size_t>(deg + 1)];
            if (h > 0 && j - deg - 1 >= 0)
                acc.add(j - deg - 1, j, static_cast<std::uint64_t>(h), w);
        }
        if (step + 1 < count) w = next_same_popcount(w);
    }
}

} // namespace detail

// Largest cardinality of a minimal nonface (0 when Δ is a full simplex);
// these are the generator degrees of the Stanley-Reisner ideal.
inline int max_generator_degree(const SimplicialComplex& cx) {
    int best = 0;
    for (int c = 2; c <= cx.dim() + 2; ++c)
        detail::for_each_combination(cx.vertex_count(), c, [&](const std::vector<int>& idx) {
            Bitset f;
            for (int v : idx) f.set(static_cast<std::size_t>(v));
            if (cx.contains(f)) return;
            for (int v : idx) {
                Bitset sub = f;
                sub.reset(static_cast<std::size_t>(v));
                if (!cx.contains(sub)) return;
            }
            best = std::max(best, c);
        });
    return best;
}

// Hochster's formula:  β_{ij} = Σ_{|W|=j} dim H̃_{j-i-1}(Δ_W; k).
// Deterministic for any job count: tasks are pure and the reduction is
// commutative integer addition (plus min for witnesses).
inline BettiTable hochster_betti(const SimplicialComplex& cx, const FieldSpec& k,
                                 const BettiOptions& opts = {}) {
    if (cx.is_void()) throw VoidComplexError("betti table of the void complex");
    const int n = cx.vertex_count();
    if (n > opts.budget_log2)
        throw BudgetExceededError("2^" + std::to_string(n) + " subsets exceed budget 2^" +
                                  std::to_string(opts.budget_log2));
    const int cap = opts.degree_cap < 0 ? n : opts.degree_cap;
    if (cap < n) {
        int gen = max_generator_degree(cx);
        if (cap < gen)
            throw CapTooSmallError("cap " + std::to_string(cap) +
                                   " below largest generator degree " + std::to_string(gen));
    }

    auto faces = detail::SweepFaces::build(cx);
    int jobs = opts.jobs > 0 ? opts.jobs
                             : std::max(1u, std::thread::hardware_concurrency());

    BettiTable table;
    table.n = n;
    table.field = k;
    table.cap = cap;

    detail::SweepAccumulator total(n);
    if (jobs == 1) {
        detail::SweepScratch scratch;
        scratch.prepare(faces);
        for (int j = 0; j <= cap; ++j)
            detail::sweep_range(faces, k, j, 0, detail::binom64(n, j), total, scratch);
    } else {
        struct Chunk {
            int j;
            std::uint64_t start, count;
        };
        std::vector<Chunk> chunks;
        for (int j = 0; j <= cap; ++j) {
            std::uint64_t totalj = detail::binom64(n, j);
            std::uint64_t per = std::max<std::uint64_t>(1024, totalj / (4 * static_cast<unsigned>(jobs)) + 1);
            for (std::uint64_t s = 0; s < totalj; s += per)
                chunks.push_back({j, s, std::min(per, totalj - s)});
        }
        std::atomic<std::size_t> next{0};
        std::vector<detail::SweepAccumulator> accs(static_cast<std::size_t>(jobs),
                                                   detail::SweepAccumulator(n));
        std::vector<std::thread> workers;
        for (int t = 0; t < jobs; ++t)
            workers.emplace_back([&, t] {
                detail::SweepScratch scratch;
                scratch.prepare(faces);
                while (true) {
                    std::size_t c = next.fetch_add(1);
                    if (c >= chunks.size()) break;
                    detail::sweep_range(faces, k, chunks[c].j, chunks[c].start, chunks[c].count,
                                        accs[static_cast<std::size_t>(t)], scratch);
                }
            });
        for (auto& th : workers) th.join();
        for (const auto& acc : accs) total.merge(acc);
    }

    for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n; ++j) {
            auto idx = static_cast<std::size_t>(i * (n + 1) + j);
            if (total.beta[idx]) {
                table.entries[{i, j}] = total.beta[idx];
                if (opts.record_witnesses) table.witnesses[{i, j}] = total.witness[idx];
            }
        }
    return table;
}

// Early-exit witness search for β_{ij} ≠ 0.
inline bool nonvanishing(const SimplicialComplex& cx, const FieldSpec& k, int i, int j) {
    if (cx.is_void()) return false;
    const int n = cx.vertex_count();
    if (i < 0 || j < 0 || j > n) return false;
    int deg = j - i - 1;
    if (deg < -1 || deg > cx.dim()) return false;
    auto faces = detail::SweepFaces::build(cx);
    detail::SweepScratch scratch;
    scratch.prepare(faces);
    std::uint64_t total = detail::binom64(n, j);
    std::uint64_t w = j == 0 ? 0 : (std::uint64_t{1} << j) - 1;
    for (std::uint64_t step = 0; step < total; ++step) {
        if (detail::restriction_homology_degree(faces, w, k, deg, scratch) > 0) return true;
        if (step + 1 < total) w = detail::next_same_popcount(w);
    }
    return false;
}

inline ShiftProfile shifts(const BettiTable& table, int height) {
    if (!table.complete())
        throw TruncatedTableError("shift extraction requires a complete table");
    ShiftProfile p;
    p.height = height;
    p.pdim = table.pdim();
    p.min_shift.assign(static_cast<std::size_t>(p.pdim), 0);
    p.max_shift.assign(static_cast<std::size_t>(p.pdim), 0);
    for (int i = 1; i <= p.pdim; ++i) {
        int lo = -1, hi = -1;
        for (const auto& [ij, v] : table.entries) {
            if (ij.first != i || v == 0) continue;
            if (lo < 0) lo = ij.second;
            hi = std::max(hi, ij.second);
            lo = std::min(lo, ij.second);
        }
        if (lo < 0)
            throw TruncatedTableError("no shifts at homological degree " + std::to_string(i));
        p.min_shift[static_cast<std::size_t>(i - 1)] = lo;
        p.max_shift[static_cast<std::size_t>(i - 1)] = hi;
    }
    return p;
}

inline bool is_pure(const BettiTable& table) {
    if (!table.complete()) throw TruncatedTableError("purity requires a complete table");
    auto prof = shifts(table, 0);
    for (int i = 1; i <= prof.pdim; ++i)
        if (prof.m(i) != prof.M(i)) return false;
    return true;
}

inline int pdim_from_table(const BettiTable& table) {
    if (!table.complete()) throw TruncatedTableError("pdim requires a complete table");
    return table.pdim();
}

inline int reg_from_table(const BettiTable& table) {
    if (!table.complete()) throw TruncatedTableError("regularity requires a complete table");
    int r = 0;
    for (const auto& [ij, v] : table.entries)
        if (v) r = std::max(r, ij.second - ij.first);
    return r;
}

// K-polynomial  Σ_{i,j} (-1)^i β_{ij} t^j  of the resolution.
inline Poly k_polynomial(const BettiTable& table) {
    Poly p;
    p.c.assign(static_cast<std::size_t>(table.n + 1), BigInt{0});
    for (const auto& [ij, v] : table.entries) {
        BigInt term{static_cast<std::int64_t>(v)};
        if (ij.first % 2 == 1) term = -term;
        p.c[static_cast<std::size_t>(ij.second)] += term;
    }
    p.trim();
    return p;
}

} // namespace srt

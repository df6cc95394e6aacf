#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "srt/complex.hpp"
#include "srt/errors.hpp"

namespace srt {

namespace detail {

inline std::vector<std::string> numeric_labels(int n) {
    std::vector<std::string> out;
    for (int i = 1; i <= n; ++i) out.push_back(std::to_string(i));
    return out;
}

inline SimplicialComplex complex_from_masks(int n, const std::vector<std::uint64_t>& facet_masks) {
    std::vector<std::vector<std::string>> facets;
    for (auto m : facet_masks) {
        std::vector<std::string> f;
        for (int v = 0; v < n; ++v)
            if ((m >> v) & 1) f.push_back(std::to_string(v + 1));
        facets.push_back(std::move(f));
    }
    return SimplicialComplex::from_facets(numeric_labels(n), facets);
}

} // namespace detail

// Every simplicial complex on exactly the labels 1..n (each label used),
// enumerated as facet antichains over the nonempty subsets of [n].  No
// isomorphism reduction: duplicates up to relabeling are intentional.
// Practical for n <= 4 (the candidate space is 2^(2^n - 1)).
inline std::vector<SimplicialComplex> all_complexes_on(int n) {
    if (n < 1 || n > 4) throw OutOfRangeError("exhaustive enumeration supports 1 <= n <= 4");
    const int nmasks = (1 << n) - 1; // nonempty subsets, mask value = index + 1
    std::vector<SimplicialComplex> out;
    for (std::uint64_t family = 1; family < (std::uint64_t{1} << nmasks); ++family) {
        std::vector<std::uint64_t> members;
        for (int m = 0; m < nmasks; ++m)
            if ((family >> m) & 1) members.push_back(static_cast<std::uint64_t>(m + 1));
        bool antichain = true;
        std::uint64_t covered = 0;
        for (std::size_t a = 0; a < members.size() && antichain; ++a) {
            covered |= members[a];
            for (std::size_t b = 0; b < members.size(); ++b)
                if (a != b && (members[a] & ~members[b]) == 0) {
                    antichain = false;
                    break;
                }
        }
        if (!antichain || covered != (std::uint64_t{1} << n) - 1) continue;
        out.push_back(detail::complex_from_masks(n, members));
    }
    return out;
}

struct SampleOptions {
    int max_facets = 0;       // 0: n + 2
    int max_sd_vertices = 20; // cap on the total face count (= vertices of sd)
};

// Seeded random facet antichains on n labels; deterministic across platforms
// (raw mt19937_64 draws, no distribution objects).
inline std::vector<SimplicialComplex> sample_complexes(int n, int count, std::uint64_t seed,
                                                       const SampleOptions& opts = {}) {
    if (n < 1 || n > 32) throw OutOfRangeError("sample_complexes: need 1 <= n <= 32");
    std::mt19937_64 rng(seed);
    const std::uint64_t full = (std::uint64_t{1} << n) - 1;
    const int max_facets = opts.max_facets > 0 ? opts.max_facets : n + 2;
    std::vector<SimplicialComplex> out;
    while (static_cast<int>(out.size()) < count) {
        int nf = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_facets));
        std::vector<std::uint64_t> masks;
        for (int i = 0; i < nf; ++i) masks.push_back(1 + rng() % full);
        std::uint64_t covered = 0;
        for (auto m : masks) covered |= m;
        if (covered != full) continue;
        auto cx = detail::complex_from_masks(n, masks); // reduces to an antichain
        if (cx.face_count() > opts.max_sd_vertices) continue;
        out.push_back(std::move(cx));
    }
    return out;
}

} // namespace srt

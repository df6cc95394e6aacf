#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "srt/bitset.hpp"
#include "srt/errors.hpp"

namespace srt {

struct Vertex {
    std::string label;
    int index = 0;
};

// Face counts f_{-1}..f_{dim}, stored with f_{-1} at position 0.
struct FVector {
    std::vector<std::int64_t> counts;

    int dim() const { return static_cast<int>(counts.size()) - 2; }

    std::int64_t f(int i) const {
        int pos = i + 1;
        if (pos < 0 || pos >= static_cast<int>(counts.size())) return 0;
        return counts[pos];
    }

    friend bool operator==(const FVector&, const FVector&) = default;
};

// Entries h_0..h_{dim+1}.
struct HVector {
    std::vector<std::int64_t> h;

    std::int64_t at(int i) const {
        return i >= 0 && i < static_cast<int>(h.size()) ? h[i] : 0;
    }

    friend bool operator==(const HVector&, const HVector&) = default;
};

// Immutable simplicial complex on a dense, ordered ground set.  Every
// singleton of the ground set is a face (the standing assumption); the
// face family is the downward closure of the facet antichain, computed
// lazily and shared between copies.
//
// The void complex (no faces at all) is a distinct value from the empty
// complex {∅}; is_void() tells them apart and dim() returns -2 / -1.
class SimplicialComplex {
    struct FaceCache {
        std::once_flag once;
        // by_dim[d+1] = faces of dimension d (d = -1 is the empty face),
        // each level sorted in bitset (colex) order.
        std::vector<std::vector<Bitset>> by_dim;
    };

    std::vector<std::string> labels_;
    std::vector<Bitset> facets_; // inclusion antichain, sorted
    bool nonvoid_ = false;
    mutable std::shared_ptr<FaceCache> cache_ = std::make_shared<FaceCache>();

    static std::vector<Bitset> reduce_to_antichain(std::vector<Bitset> sets) {
        std::sort(sets.begin(), sets.end());
        sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
        std::vector<Bitset> out;
        for (std::size_t i = 0; i < sets.size(); ++i) {
            bool maximal = true;
            for (std::size_t j = 0; j < sets.size() && maximal; ++j)
                if (i != j && sets[i].is_subset_of(sets[j]) && !(sets[i] == sets[j]))
                    maximal = false;
            if (maximal) out.push_back(sets[i]);
        }
        return out;
    }

    // Trusted constructor: facets already over a dense index set.
    SimplicialComplex(std::vector<std::string> labels, std::vector<Bitset> facets, bool nonvoid)
        : labels_(std::move(labels)), facets_(reduce_to_antichain(std::move(facets))),
          nonvoid_(nonvoid) {}

    void build_faces() const {
        auto& by_dim = cache_->by_dim;
        by_dim.assign(static_cast<std::size_t>(dim() + 2), {});
        if (!nonvoid_) return;
        std::unordered_set<Bitset, BitsetHash> seen;
        std::vector<Bitset> frontier = facets_;
        for (const auto& f : frontier) seen.insert(f);
        while (!frontier.empty()) {
            std::vector<Bitset> next;
            for (const auto& f : frontier) {
                by_dim[f.count()].push_back(f);
                for (int v : f.to_indices()) {
                    Bitset sub = f;
                    sub.reset(static_cast<std::size_t>(v));
                    if (seen.insert(sub).second) next.push_back(sub);
                }
            }
            frontier = std::move(next);
        }
        if (by_dim[0].empty()) by_dim[0].push_back(Bitset{}); // lone vertex facets reach ∅ once
        for (auto& level : by_dim) std::sort(level.begin(), level.end());
    }

public:
    SimplicialComplex() = default; // the void complex

    static SimplicialComplex void_complex() { return SimplicialComplex{}; }

    static SimplicialComplex empty_complex() {
        SimplicialComplex c;
        c.nonvoid_ = true;
        return c;
    }

    static SimplicialComplex from_facets(const std::vector<std::string>& labels,
                                         const std::vector<std::vector<std::string>>& facets) {
        std::unordered_map<std::string, int> index;
        for (std::size_t i = 0; i < labels.size(); ++i)
            if (!index.emplace(labels[i], static_cast<int>(i)).second)
                throw DuplicateLabelError("duplicate label: " + labels[i]);

        std::vector<Bitset> sets;
        Bitset covered;
        for (const auto& facet : facets) {
            Bitset b;
            for (const auto& l : facet) {
                auto it = index.find(l);
                if (it == index.end()) throw UnknownLabelError("facet references unknown label: " + l);
                b.set(static_cast<std::size_t>(it->second));
            }
            if (!b.empty()) sets.push_back(b);
            covered = covered | b;
        }
        for (std::size_t i = 0; i < labels.size(); ++i)
            if (!covered.test(i))
                throw IsolatedLabelError("label in no facet: " + labels[i]);

        if (labels.empty()) return empty_complex();
        return SimplicialComplex(labels, std::move(sets), true);
    }

    bool is_void() const { return !nonvoid_; }
    bool is_empty_complex() const { return nonvoid_ && labels_.empty(); }

    // -2 for the void complex, -1 for {∅}.
    int dim() const {
        if (!nonvoid_) return -2;
        int d = -1;
        for (const auto& f : facets_) d = std::max(d, static_cast<int>(f.count()) - 1);
        return d;
    }

    int vertex_count() const { return static_cast<int>(labels_.size()); }

    const std::vector<std::string>& labels() const { return labels_; }

    Vertex vertex(int i) const { return Vertex{labels_.at(static_cast<std::size_t>(i)), i}; }

    int index_of(const std::string& label) const {
        for (std::size_t i = 0; i < labels_.size(); ++i)
            if (labels_[i] == label) return static_cast<int>(i);
        throw UnknownVertexError("unknown vertex label: " + label);
    }

    const std::vector<Bitset>& facets() const { return facets_; }

    Bitset face_from_labels(const std::vector<std::string>& member_labels) const {
        Bitset b;
        for (const auto& l : member_labels) b.set(static_cast<std::size_t>(index_of(l)));
        return b;
    }

    std::vector<std::string> face_labels(const Bitset& f) const {
        std::vector<std::string> out;
        for (int v : f.to_indices()) out.push_back(labels_.at(static_cast<std::size_t>(v)));
        return out;
    }

    bool contains(const Bitset& f) const {
        if (!nonvoid_) return false;
        if (f.empty()) return true;
        for (const auto& m : facets_)
            if (f.is_subset_of(m)) return true;
        return false;
    }

    // All faces of dimension d, in colex order; d ranges over [-1, dim()].
    const std::vector<Bitset>& faces(int d) const {
        static const std::vector<Bitset> none;
        closure();
        int pos = d + 1;
        if (pos < 0 || pos >= static_cast<int>(cache_->by_dim.size())) return none;
        return cache_->by_dim[static_cast<std::size_t>(pos)];
    }

    const std::vector<std::vector<Bitset>>& closure() const {
        std::call_once(cache_->once, [this] { build_faces(); });
        return cache_->by_dim;
    }

    std::int64_t face_count() const { // nonempty faces
        std::int64_t n = 0;
        for (int d = 0; d <= dim(); ++d) n += static_cast<std::int64_t>(faces(d).size());
        return n;
    }

    FVector f_vector() const {
        if (!nonvoid_) throw VoidComplexError("f_vector of the void complex");
        FVector f;
        for (int d = -1; d <= dim(); ++d)
            f.counts.push_back(static_cast<std::int64_t>(faces(d).size()));
        return f;
    }

    HVector h_vector() const;

    SimplicialComplex link(const Bitset& face) const {
        if (!contains(face)) throw NotAFaceError("link of a non-face");
        std::vector<Bitset> link_facets;
        for (const auto& m : facets_)
            if (face.is_subset_of(m)) link_facets.push_back(m - face);
        // ground set = vertices that appear in some face of the link
        Bitset support;
        for (const auto& g : link_facets) support = support | g;
        return induced_on(support, link_facets);
    }

    SimplicialComplex restriction(const Bitset& w) const {
        if (!nonvoid_) throw VoidComplexError("restriction of the void complex");
        for (int v : w.to_indices())
            if (v >= vertex_count()) throw UnknownVertexError("restriction outside ground set");
        std::vector<Bitset> rest_facets;
        for (const auto& m : facets_) {
            Bitset c = m & w;
            if (!c.empty()) rest_facets.push_back(c);
        }
        return induced_on(w, rest_facets);
    }

    // Complex of all proper subsets of `face`; void when |face| = 1.
    SimplicialComplex boundary_of_face(const Bitset& face) const {
        if (face.empty()) throw EmptyFaceError("boundary of the empty face");
        if (!contains(face)) throw NotAFaceError("boundary of a non-face");
        if (face.count() == 1) return void_complex();
        std::vector<Bitset> bd;
        for (int v : face.to_indices()) {
            Bitset sub = face;
            sub.reset(static_cast<std::size_t>(v));
            bd.push_back(sub);
        }
        return induced_on(face, bd);
    }

    SimplicialComplex barycentric_subdivision() const;

    // New complex on the vertices of `support` (original order kept),
    // with the given facets re-indexed into the smaller ground set.
    SimplicialComplex induced_on(const Bitset& support, const std::vector<Bitset>& new_facets) const {
        std::vector<int> verts = support.to_indices();
        std::vector<std::string> labels;
        std::vector<int> new_index(static_cast<std::size_t>(vertex_count()), -1);
        for (std::size_t i = 0; i < verts.size(); ++i) {
            labels.push_back(labels_[static_cast<std::size_t>(verts[i])]);
            new_index[static_cast<std::size_t>(verts[i])] = static_cast<int>(i);
        }
        std::vector<Bitset> remapped;
        for (const auto& f : new_facets) {
            Bitset b;
            for (int v : f.to_indices()) b.set(static_cast<std::size_t>(new_index[static_cast<std::size_t>(v)]));
            if (!b.empty()) remapped.push_back(b);
        }
        if (labels.empty()) return empty_complex();
        SimplicialComplex out(std::move(labels), std::move(remapped), true);
        // a vertex of the support with no incident facet would violate the
        // singleton assumption; restriction/link supports never do
        return out;
    }

    friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
        return a.nonvoid_ == b.nonvoid_ && a.labels_ == b.labels_ && a.facets_ == b.facets_;
    }
};

namespace detail {

// visit all c-subsets of {0..n-1} in lexicographic index order
template <typename Fn>
void for_each_combination(int n, int c, Fn&& fn) {
    if (c > n || c < 0) return;
    std::vector<int> idx(static_cast<std::size_t>(c));
    for (int i = 0; i < c; ++i) idx[static_cast<std::size_t>(i)] = i;
    while (true) {
        fn(idx);
        int pos = c - 1;
        while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == n - c + pos) --pos;
        if (pos < 0) break;
        ++idx[static_cast<std::size_t>(pos)];
        for (int i = pos + 1; i < c; ++i)
            idx[static_cast<std::size_t>(i)] = idx[static_cast<std::size_t>(i - 1)] + 1;
    }
}

inline std::vector<std::vector<std::int64_t>> binomial_table(int n) {
    std::vector<std::vector<std::int64_t>> c(static_cast<std::size_t>(n + 1));
    for (int i = 0; i <= n; ++i) {
        c[static_cast<std::size_t>(i)].assign(static_cast<std::size_t>(i + 1), 1);
        for (int j = 1; j < i; ++j)
            c[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                c[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] +
                c[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j)];
    }
    return c;
}

} // namespace detail

// h_j = sum_{i<=j} (-1)^{j-i} C(d+1-i, j-i) f_{i-1}, the coefficient form of
// the defining identity  sum h_i t^{d+1-i} = sum f_{i-1} (t-1)^{d+1-i}.
inline HVector h_from_f(const FVector& f) {
    int d = f.dim() + 1; // length parameter: h has entries 0..d
    auto C = detail::binomial_table(d + 1);
    HVector h;
    h.h.assign(static_cast<std::size_t>(d + 1), 0);
    for (int j = 0; j <= d; ++j) {
        std::int64_t acc = 0;
        for (int i = 0; i <= j; ++i) {
            std::int64_t term = C[static_cast<std::size_t>(d - i)][static_cast<std::size_t>(j - i)] * f.f(i - 1);
            acc += ((j - i) % 2 == 0) ? term : -term;
        }
        h.h[static_cast<std::size_t>(j)] = acc;
    }
    return h;
}

// Inverse transform: f_{j-1} = sum_i C(d+1-i, j-i) h_i.
inline FVector f_from_h(const HVector& h) {
    int d = static_cast<int>(h.h.size()) - 1;
    auto C = detail::binomial_table(d + 1);
    FVector f;
    f.counts.assign(static_cast<std::size_t>(d + 1), 0);
    for (int j = 0; j <= d; ++j) {
        std::int64_t acc = 0;
        for (int i = 0; i <= j; ++i)
            acc += C[static_cast<std::size_t>(d - i)][static_cast<std::size_t>(j - i)] * h.at(i);
        f.counts[static_cast<std::size_t>(j)] = acc;
    }
    return f;
}

inline HVector SimplicialComplex::h_vector() const {
    return h_from_f(f_vector());
}

inline SimplicialComplex SimplicialComplex::barycentric_subdivision() const {
    if (!nonvoid_) throw VoidComplexError("subdivision of the void complex");
    if (labels_.empty()) return empty_complex(); // sd({∅}) = {∅}
    closure();

    // sd vertices = nonempty faces, ordered by (cardinality, colex);
    // labels render the member labels in ground-set order.
    std::vector<Bitset> face_list;
    std::unordered_map<Bitset, int, BitsetHash> face_id;
    std::vector<std::string> sd_labels;
    for (int d = 0; d <= dim(); ++d) {
        for (const auto& f : faces(d)) {
            face_id.emplace(f, static_cast<int>(face_list.size()));
            face_list.push_back(f);
            std::string lab = "{";
            bool first = true;
            for (int v : f.to_indices()) {
                if (!first) lab += ',';
                lab += labels_[static_cast<std::size_t>(v)];
                first = false;
            }
            lab += '}';
            sd_labels.push_back(lab);
        }
    }

    // facets of sd = saturated chains singleton ⊂ ... ⊂ facet, one per
    // permutation of each facet's vertex set
    std::vector<Bitset> sd_facets;
    for (const auto& m : facets_) {
        std::vector<int> verts = m.to_indices();
        std::sort(verts.begin(), verts.end());
        do {
            Bitset chain;
            Bitset partial;
            for (int v : verts) {
                partial.set(static_cast<std::size_t>(v));
                chain.set(static_cast<std::size_t>(face_id.at(partial)));
            }
            sd_facets.push_back(chain);
        } while (std::next_permutation(verts.begin(), verts.end()));
    }
    return SimplicialComplex(std::move(sd_labels), std::move(sd_facets), true);
}

// ---- 1-skeleton graph predicates ----

namespace detail {

struct SkeletonGraph {
    int n = 0;
    std::vector<std::vector<int>> adj; // sorted neighbor lists

    static SkeletonGraph of(const SimplicialComplex& cx) {
        SkeletonGraph g;
        g.n = cx.vertex_count();
        g.adj.assign(static_cast<std::size_t>(g.n), {});
        std::unordered_set<std::uint64_t> seen;
        for (const auto& m : cx.facets()) {
            auto verts = m.to_indices();
            for (std::size_t a = 0; a < verts.size(); ++a)
                for (std::size_t b = a + 1; b < verts.size(); ++b) {
                    std::uint64_t key = (static_cast<std::uint64_t>(verts[a]) << 32) |
                                        static_cast<std::uint32_t>(verts[b]);
                    if (seen.insert(key).second) {
                        g.adj[static_cast<std::size_t>(verts[a])].push_back(verts[b]);
                        g.adj[static_cast<std::size_t>(verts[b])].push_back(verts[a]);
                    }
                }
        }
        for (auto& l : g.adj) std::sort(l.begin(), l.end());
        return g;
    }

    std::int64_t edge_count() const {
        std::int64_t e = 0;
        for (const auto& l : adj) e += static_cast<std::int64_t>(l.size());
        return e / 2;
    }

    // Lexicographic BFS visit order (ties broken by smallest index).
    std::vector<int> lex_bfs_order() const {
        std::vector<std::vector<int>> lab(static_cast<std::size_t>(n));
        std::vector<bool> done(static_cast<std::size_t>(n), false);
        std::vector<int> order;
        for (int step = 0; step < n; ++step) {
            int best = -1;
            for (int v = 0; v < n; ++v) {
                if (done[static_cast<std::size_t>(v)]) continue;
                if (best < 0 || lab[static_cast<std::size_t>(v)] > lab[static_cast<std::size_t>(best)])
                    best = v;
            }
            done[static_cast<std::size_t>(best)] = true;
            order.push_back(best);
            for (int u : adj[static_cast<std::size_t>(best)])
                if (!done[static_cast<std::size_t>(u)])
                    lab[static_cast<std::size_t>(u)].push_back(n - step);
        }
        return order;
    }
};

} // namespace detail

// Standard chordality: every cycle of length >= 4 has a chord.
// Lex-BFS followed by a perfect-elimination-ordering check.
inline bool one_skeleton_is_chordal(const SimplicialComplex& cx) {
    if (cx.is_void() || cx.vertex_count() == 0) return true;
    auto g = detail::SkeletonGraph::of(cx);
    auto order = g.lex_bfs_order();
    // eliminate in reverse visit order
    std::vector<int> pos(static_cast<std::size_t>(g.n));
    for (int i = 0; i < g.n; ++i) pos[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] = i;
    std::vector<std::vector<bool>> isnb(static_cast<std::size_t>(g.n));
    for (int v = 0; v < g.n; ++v) {
        isnb[static_cast<std::size_t>(v)].assign(static_cast<std::size_t>(g.n), false);
        for (int u : g.adj[static_cast<std::size_t>(v)]) isnb[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] = true;
    }
    for (int v = 0; v < g.n; ++v) {
        // neighbors visited before v (eliminated after v)
        int parent = -1;
        for (int u : g.adj[static_cast<std::size_t>(v)])
            if (pos[static_cast<std::size_t>(u)] < pos[static_cast<std::size_t>(v)] &&
                (parent < 0 || pos[static_cast<std::size_t>(u)] > pos[static_cast<std::size_t>(parent)]))
                parent = u;
        if (parent < 0) continue;
        for (int u : g.adj[static_cast<std::size_t>(v)])
            if (u != parent && pos[static_cast<std::size_t>(u)] < pos[static_cast<std::size_t>(v)] &&
                !isnb[static_cast<std::size_t>(parent)][static_cast<std::size_t>(u)])
                return false;
    }
    return true;
}

inline bool one_skeleton_is_forest(const SimplicialComplex& cx) {
    if (cx.is_void() || cx.vertex_count() == 0) return true;
    auto g = detail::SkeletonGraph::of(cx);
    std::vector<int> root(static_cast<std::size_t>(g.n));
    for (int v = 0; v < g.n; ++v) root[static_cast<std::size_t>(v)] = v;
    auto find = [&](int v) {
        while (root[static_cast<std::size_t>(v)] != v) {
            root[static_cast<std::size_t>(v)] = root[static_cast<std::size_t>(root[static_cast<std::size_t>(v)])];
            v = root[static_cast<std::size_t>(v)];
        }
        return v;
    };
    for (int v = 0; v < g.n; ++v)
        for (int u : g.adj[static_cast<std::size_t>(v)]) {
            if (u < v) continue;
            int a = find(v), b = find(u);
            if (a == b) return false;
            root[static_cast<std::size_t>(a)] = b;
        }
    return true;
}

} // namespace srt

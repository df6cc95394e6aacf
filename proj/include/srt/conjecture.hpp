#pragma once

#include <optional>
#include <string>
#include <vector>

#include "srt/betti.hpp"
#include "srt/bigint.hpp"
#include "srt/complex.hpp"
#include "srt/errors.hpp"
#include "srt/homology.hpp"
#include "srt/invariants.hpp"

namespace srt {

struct ConjectureOptions {
    BettiOptions betti;
};

// Verdicts for  e <= (1/h!) Π M_i  and, in the Cohen-Macaulay case,
// e >= (1/h!) Π m_i, with the purity/equality cross-check.
struct ConjectureReport {
    std::string subject;
    bool is_subdivision = false;
    FieldSpec field;

    std::int64_t e = 0;
    int height = 0;
    BigRational upper_product;
    bool upper_holds = false;
    bool equality_upper = false;

    bool is_CM = false;
    // absent when not Cohen-Macaulay: the conjecture does not claim them
    std::optional<BigRational> lower_product;
    std::optional<bool> lower_holds;
    std::optional<bool> equality_lower;

    bool is_pure = false;
    ShiftProfile shift_profile;
    std::vector<int> witness_min_shift, witness_max_shift; // subsets realizing m_h / M_h
};

namespace detail {

inline std::vector<int> witness_for(const BettiTable& table, int i, int j) {
    auto it = table.witnesses.find({i, j});
    if (it == table.witnesses.end()) return {};
    return Bitset::from_word(it->second).to_indices();
}

} // namespace detail

inline ConjectureReport verify(const SimplicialComplex& cx, const FieldSpec& k,
                               const ConjectureOptions& opts = {}, std::string subject = {},
                               bool is_subdivision = false) {
    if (cx.is_void()) throw VoidComplexError("conjecture verdict for the void complex");
    ConjectureReport report;
    report.subject = subject.empty() ? "complex on " + std::to_string(cx.vertex_count()) + " vertices"
                                     : std::move(subject);
    report.is_subdivision = is_subdivision;
    report.field = k;

    auto table = hochster_betti(cx, k, opts.betti);
    auto [h, e] = height_and_multiplicity(cx);
    report.height = static_cast<int>(h);
    report.e = e;
    report.shift_profile = shifts(table, report.height);
    report.is_pure = is_pure(table);
    report.is_CM = depth(cx, k) == cx.dim() + 1;

    BigInt hfact = BigInt::factorial(static_cast<std::uint64_t>(report.height));
    BigInt upper = 1, lower = 1;
    for (int i = 1; i <= report.height; ++i) {
        upper *= BigInt{report.shift_profile.M(i)};
        lower *= BigInt{report.shift_profile.m(i)};
    }
    report.upper_product = BigRational(upper, hfact);
    report.upper_holds = BigRational(BigInt{report.e}) <= report.upper_product;
    report.equality_upper = BigRational(BigInt{report.e}) == report.upper_product;

    if (report.is_CM) {
        report.lower_product = BigRational(lower, hfact);
        report.lower_holds = BigRational(BigInt{report.e}) >= *report.lower_product;
        report.equality_lower = BigRational(BigInt{report.e}) == *report.lower_product;
        // Huneke–Miller: pure + CM forces equality in both bounds
        if (report.is_pure && !(report.equality_upper && *report.equality_lower))
            throw ConsistencyViolationError(
                "pure Cohen-Macaulay resolution without equality: " + report.subject);
    }

    if (report.height >= 1) {
        report.witness_min_shift =
            detail::witness_for(table, report.height, report.shift_profile.m(report.height));
        report.witness_max_shift =
            detail::witness_for(table, report.height, report.shift_profile.M(report.height));
    }
    return report;
}

// Theorem-level harness: the bounds must come out true for k[sd(Δ)], and the
// report's e and h are cross-checked against the closed forms
//   e = (dim Δ + 1)! f_dim,   h = Σ (f_l - 1).
inline ConjectureReport verify_subdivision_theorem(const SimplicialComplex& cx, const FieldSpec& k,
                                                   const ConjectureOptions& opts = {},
                                                   std::string subject = {}) {
    if (cx.is_void()) throw VoidComplexError("subdivision theorem on the void complex");
    auto sd = cx.barycentric_subdivision();
    auto report = verify(sd, k, opts,
                         subject.empty() ? "sd of complex on " + std::to_string(cx.vertex_count()) +
                                               " vertices"
                                         : std::move(subject),
                         /*is_subdivision=*/true);
    auto f = cx.f_vector();
    std::int64_t hsum = 0;
    for (int l = 0; l <= cx.dim(); ++l) hsum += f.f(l) - 1;
    std::int64_t fact = 1;
    for (int i = 2; i <= cx.dim() + 1; ++i) fact *= i;
    if (report.height != hsum || report.e != fact * f.f(cx.dim()))
        throw ConsistencyViolationError("subdivision closed forms disagree with the report");
    return report;
}

// Equality-case classification for subdivisions.
enum class EqualityCase {
    dim0_linear,      // 0-dimensional: linear resolution
    dim1_tree,        // tree: pure, equality
    dim1_gon,         // single cycle covering everything: pure
    dim1_other,       // CM instances are impure
    simplex_2,        // the 2-simplex: pure, indeed linear
    shared_edge_pair, // two 2-faces sharing an edge: β_{2,3}, β_{2,4} both nonzero
    unclassified
};

struct EqualityDiagnosis {
    EqualityCase kind = EqualityCase::unclassified;
    bool expects_pure = false;
    bool claim_applies = false; // the classification makes a prediction for this input
    bool table_pure = false;
    bool verified = false;
    std::uint64_t beta_2_3 = 0, beta_2_4 = 0; // populated for shared_edge_pair
    std::string note;
};

inline EqualityDiagnosis equality_analysis(const SimplicialComplex& cx, const FieldSpec& k,
                                           const ConjectureOptions& opts = {}) {
    if (cx.is_void()) throw VoidComplexError("equality analysis of the void complex");
    EqualityDiagnosis diag;
    const int d = cx.dim();

    if (d <= 0) {
        diag.kind = EqualityCase::dim0_linear;
        diag.expects_pure = true;
        diag.claim_applies = true;
        diag.note = "zero-dimensional: quadratic squarefree ideal with linear resolution";
    } else if (d == 1) {
        bool forest = one_skeleton_is_forest(cx);
        auto g = detail::SkeletonGraph::of(cx);
        bool connected = [&] {
            if (g.n == 0) return true;
            std::vector<int> stack{0};
            std::vector<bool> seen(static_cast<std::size_t>(g.n), false);
            seen[0] = true;
            int cnt = 1;
            while (!stack.empty()) {
                int v = stack.back();
                stack.pop_back();
                for (int u : g.adj[static_cast<std::size_t>(v)])
                    if (!seen[static_cast<std::size_t>(u)]) {
                        seen[static_cast<std::size_t>(u)] = true;
                        ++cnt;
                        stack.push_back(u);
                    }
            }
            return cnt == g.n;
        }();
        bool all_degree_two = true;
        for (const auto& nbrs : g.adj)
            if (nbrs.size() != 2) all_degree_two = false;
        if (connected && forest) {
            diag.kind = EqualityCase::dim1_tree;
            diag.expects_pure = true;
            diag.claim_applies = true;
            diag.note = "tree: maximal shifts climb by one, equality with multiplicity";
        } else if (connected && all_degree_two) {
            diag.kind = EqualityCase::dim1_gon;
            diag.expects_pure = true;
            diag.claim_applies = true;
            diag.note = "n-gon: pure resolution of the subdivision";
        } else {
            diag.kind = EqualityCase::dim1_other;
            diag.expects_pure = false;
            diag.claim_applies = is_cohen_macaulay(cx, k);
            diag.note = "graph that is neither a tree nor an n-gon";
        }
    } else {
        // dimension >= 2: look for two 2-faces glued along an edge
        bool shared = false;
        std::vector<Bitset> two_faces = cx.faces(2);
        for (std::size_t a = 0; a < two_faces.size() && !shared; ++a)
            for (std::size_t b = a + 1; b < two_faces.size() && !shared; ++b)
                if ((two_faces[a] & two_faces[b]).count() == 2) shared = true;
        if (!shared && d == 2 && cx.facets().size() == 1 && cx.vertex_count() == 3) {
            diag.kind = EqualityCase::simplex_2;
            diag.expects_pure = true;
            diag.claim_applies = true;
            diag.note = "2-simplex: pure, indeed linear";
        } else if (shared) {
            diag.kind = EqualityCase::shared_edge_pair;
            diag.expects_pure = false;
            diag.claim_applies = true;
            diag.note = "two 2-faces share an edge: 4-gon and 3-point restrictions of sd";
        } else {
            diag.kind = EqualityCase::unclassified;
            diag.note = "no equality prediction recorded for this shape";
        }
    }

    auto table = hochster_betti(cx.barycentric_subdivision(), k, opts.betti);
    diag.table_pure = is_pure(table);
    diag.beta_2_3 = table.beta(2, 3);
    diag.beta_2_4 = table.beta(2, 4);
    if (diag.kind == EqualityCase::shared_edge_pair)
        diag.verified = !diag.table_pure && diag.beta_2_3 != 0 && diag.beta_2_4 != 0;
    else if (diag.claim_applies)
        diag.verified = diag.table_pure == diag.expects_pure;
    else
        diag.verified = true; // nothing claimed
    return diag;
}

} // namespace srt

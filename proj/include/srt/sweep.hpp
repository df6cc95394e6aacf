#pragma once

#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "srt/betti.hpp"
#include "srt/combinatorics.hpp"
#include "srt/complex.hpp"
#include "srt/conjecture.hpp"
#include "srt/document.hpp"
#include "srt/enumerate.hpp"
#include "srt/invariants.hpp"

namespace srt {

struct SweepFailure {
    std::string check;
    std::string complex_repr;
    std::string detail;
};

// Per-complex evaluation state; Betti tables and link-homology work are
// computed once and shared between suites.
class SweepContext {
public:
    SweepContext(const SimplicialComplex& cx, BettiOptions opts)
        : cx_(cx), sd_(cx.barycentric_subdivision()), opts_(opts) {}

    const SimplicialComplex& cx() const { return cx_; }
    const SimplicialComplex& sd() const { return sd_; }
    const BettiOptions& options() const { return opts_; }

    const BettiTable& cx_table(const FieldSpec& k) { return table(cx_, "cx", k); }
    const BettiTable& sd_table(const FieldSpec& k) { return table(sd_, "sd", k); }

private:
    const BettiTable& table(const SimplicialComplex& which, const std::string& tag,
                            const FieldSpec& k) {
        auto key = tag + "/" + k.name();
        auto it = tables_.find(key);
        if (it == tables_.end())
            it = tables_.emplace(key, hochster_betti(which, k, opts_)).first;
        return it->second;
    }

    const SimplicialComplex& cx_;
    SimplicialComplex sd_;
    BettiOptions opts_;
    std::map<std::string, BettiTable> tables_;
};

namespace checks {

inline void fail(std::vector<SweepFailure>& out, const std::string& check,
                 const SimplicialComplex& cx, std::string detail) {
    out.push_back({check, render_inline(cx), std::move(detail)});
}

// Upper bound always, lower bound when CM, equality iff pure on CM inputs.
inline void conjecture(SweepContext& ctx, const std::vector<FieldSpec>& fields,
                       std::vector<SweepFailure>& out) {
    for (const auto& k : fields) {
        ConjectureOptions copts;
        copts.betti = ctx.options();
        auto r = verify_subdivision_theorem(ctx.cx(), k, copts);
        if (!r.upper_holds) fail(out, "conjecture", ctx.cx(), "upper bound fails over " + k.name());
        if (r.is_CM) {
            if (!*r.lower_holds)
                fail(out, "conjecture", ctx.cx(), "CM lower bound fails over " + k.name());
            if (r.equality_upper != r.is_pure || *r.equality_lower != r.is_pure)
                fail(out, "conjecture", ctx.cx(), "equality/purity biconditional fails over " + k.name());
        }
    }
}

// height(I_sd) = Σ (f_l - 1)   and   e(k[sd]) = (dim+1)! f_dim, plus the
// multiplicity read off the Hilbert series numerator.
inline void closed_forms(SweepContext& ctx, const std::vector<FieldSpec>&,
                         std::vector<SweepFailure>& out) {
    auto f = ctx.cx().f_vector();
    auto [h, e] = height_and_multiplicity(ctx.sd());
    std::int64_t hsum = 0;
    for (int l = 0; l <= ctx.cx().dim(); ++l) hsum += f.f(l) - 1;
    std::int64_t fact = 1;
    for (int i = 2; i <= ctx.cx().dim() + 1; ++i) fact *= i;
    if (h != hsum) fail(out, "closed_forms", ctx.cx(), "height of the subdivision ideal");
    if (e != fact * f.f(ctx.cx().dim())) fail(out, "closed_forms", ctx.cx(), "subdivision multiplicity");
    if (!(hilbert_series(ctx.sd()).numerator.eval(BigInt{1}) == BigInt{e}))
        fail(out, "closed_forms", ctx.cx(), "multiplicity vs hilbert numerator at t=1");
}

inline void hilbert_sd(SweepContext& ctx, const std::vector<FieldSpec>&,
                       std::vector<SweepFailure>& out) {
    if (!(hilbert_series_sd(ctx.cx()) == hilbert_series(ctx.sd())))
        fail(out, "hilbert_sd", ctx.cx(), "eulerian-transform series differs from direct sd series");
}

inline void local_cohomology(SweepContext& ctx, const std::vector<FieldSpec>& fields,
                             std::vector<SweepFailure>& out) {
    for (const auto& k : fields) {
        auto lhs = local_cohomology_series_sd_all(ctx.cx(), k);
        auto rhs = local_cohomology_series_all(ctx.sd(), k);
        for (std::size_t i = 0; i < lhs.size(); ++i)
            if (!(lhs[i] == rhs[i]))
                fail(out, "local_cohomology", ctx.cx(),
                     "H^" + std::to_string(i) + " series differs over " + k.name());
    }
}

inline void depth_pdim(SweepContext& ctx, const std::vector<FieldSpec>& fields,
                       std::vector<SweepFailure>& out) {
    auto f = ctx.cx().f_vector();
    std::int64_t higher = 0;
    for (int i = 1; i <= ctx.cx().dim(); ++i) higher += f.f(i);
    for (const auto& k : fields) {
        int dcx = depth(ctx.cx(), k), dsd = depth(ctx.sd(), k);
        if (dcx != dsd) fail(out, "depth_pdim", ctx.cx(), "depth changes under sd over " + k.name());
        std::int64_t pcx = ctx.cx().vertex_count() - dcx;
        std::int64_t psd = ctx.sd().vertex_count() - dsd;
        if (psd - pcx != higher)
            fail(out, "depth_pdim", ctx.cx(), "pdim relation fails over " + k.name());
    }
}

// reg(sd) = dim or dim+1 by the top homology, reg monotone under sd,
// and the link route agrees with the resolution route.
inline void regularity_suite(SweepContext& ctx, const std::vector<FieldSpec>& fields,
                             std::vector<SweepFailure>& out) {
    for (const auto& k : fields) {
        int top = reduced_homology(ctx.cx(), k).rank(ctx.cx().dim());
        int expected = top == 0 ? ctx.cx().dim() : ctx.cx().dim() + 1;
        int rsd = regularity(ctx.sd(), k);
        int rcx = regularity(ctx.cx(), k);
        if (rsd != expected) fail(out, "regularity", ctx.cx(), "trichotomy fails over " + k.name());
        if (rcx > rsd) fail(out, "regularity", ctx.cx(), "reg not monotone over " + k.name());
        if (top != 0 && rcx != ctx.cx().dim() + 1)
            fail(out, "regularity", ctx.cx(), "nonvanishing-top case fails over " + k.name());
        if (reg_from_table(ctx.cx_table(k)) != rcx)
            fail(out, "regularity", ctx.cx(), "table route disagrees on cx over " + k.name());
        if (reg_from_table(ctx.sd_table(k)) != rsd)
            fail(out, "regularity", ctx.cx(), "table route disagrees on sd over " + k.name());
    }
}

inline void koszul_golod(SweepContext& ctx, const std::vector<FieldSpec>&,
                         std::vector<SweepFailure>& out) {
    if (!is_koszul_flag(ctx.sd()))
        fail(out, "koszul_golod", ctx.cx(), "subdivision is not flag");
    if (ctx.cx().dim() <= 2) {
        bool forest = one_skeleton_is_forest(ctx.cx()) && ctx.cx().dim() <= 1;
        if (is_golod_sd(ctx.cx()) != forest)
            fail(out, "koszul_golod", ctx.cx(), "golod criterion disagrees with forest test");
    }
}

// Σ (-1)^i β_{ij} t^j = (1-t)^n Hilb(k[Δ], t), on the complex and its sd;
// also ties the table to depth (Auslander-Buchsbaum) and checks that the
// minimal shifts increase strictly, as resolution minimality demands.
inline void betti_hilbert(SweepContext& ctx, const std::vector<FieldSpec>& fields,
                          std::vector<SweepFailure>& out) {
    auto check_one = [&](const SimplicialComplex& cx, const BettiTable& t, const char* tag,
                         const FieldSpec& k) {
        auto hs = hilbert_series(cx);
        Poly rhs = hs.numerator * Poly::pow(Poly{1, -1}, cx.vertex_count() - hs.denom_exponent);
        if (!(k_polynomial(t) == rhs))
            fail(out, "betti_hilbert", ctx.cx(),
                 std::string(tag) + " K-polynomial mismatch over " + t.field.name());
        if (pdim_from_table(t) != cx.vertex_count() - depth(cx, k))
            fail(out, "betti_hilbert", ctx.cx(),
                 std::string(tag) + " Auslander-Buchsbaum mismatch over " + t.field.name());
        auto prof = shifts(t, 0);
        for (int i = 1; i < prof.pdim; ++i)
            if (prof.m(i) >= prof.m(i + 1))
                fail(out, "betti_hilbert", ctx.cx(),
                     std::string(tag) + " minimal shifts not strictly increasing over " +
                         t.field.name());
    };
    for (const auto& k : fields) {
        check_one(ctx.cx(), ctx.cx_table(k), "cx", k);
        check_one(ctx.sd(), ctx.sd_table(k), "sd", k);
    }
}

inline void homology_sd(SweepContext& ctx, const std::vector<FieldSpec>& fields,
                        std::vector<SweepFailure>& out) {
    for (const auto& k : fields)
        if (!(reduced_homology(ctx.cx(), k).dims == reduced_homology(ctx.sd(), k).dims))
            fail(out, "homology_sd", ctx.cx(), "homology not sd-invariant over " + k.name());
}

// Betti nonvanishing ranges for subdivisions, instantiated on the corpus.
inline void lemmas(SweepContext& ctx, const std::vector<FieldSpec>& fields,
                   std::vector<SweepFailure>& out) {
    const auto& cx = ctx.cx();
    int d = cx.dim();
    auto f = cx.f_vector();
    std::int64_t fsum = 0; // Σ (f_j - 1)
    for (int l = 0; l <= d; ++l) fsum += f.f(l) - 1;
    for (const auto& k : fields) {
        if (!lemma_fvec(cx, k)) fail(out, "lemmas", cx, "f-vector inequality over " + k.name());
        const auto& table = ctx.sd_table(k);
        if (d > 1 && pdim_from_table(table) < 4)
            fail(out, "lemmas", cx, "pdim(sd) < 4 despite dim > 1 over " + k.name());
        for (int m = 2; m < d; ++m)
            for (int i = (1 << (m + 1)) - 2 - m; i < (1 << (m + 2)) - 2 - (m + 1); ++i)
                if (table.beta(i, i + m) == 0)
                    fail(out, "lemmas", cx,
                         "beta_{i,i+m} vanishes at i=" + std::to_string(i) + " m=" +
                             std::to_string(m) + " over " + k.name());
        bool top_vanishes = reduced_homology(cx, k).rank(d) == 0;
        int lo = (1 << (d + 1)) - 2 - d;
        for (int i = lo; i <= fsum; ++i) {
            if (top_vanishes) {
                if (table.beta(i, i + d) == 0)
                    fail(out, "lemmas", cx,
                         "vanishing-top range fails at i=" + std::to_string(i) + " over " + k.name());
            } else {
                if (table.beta(i, i + d) == 0 && table.beta(i, i + d + 1) == 0)
                    fail(out, "lemmas", cx,
                         "nonvanishing-top range fails at i=" + std::to_string(i) + " over " +
                             k.name());
            }
        }
    }
}

} // namespace checks

using CheckFn = std::function<void(SweepContext&, const std::vector<FieldSpec>&,
                                   std::vector<SweepFailure>&)>;

inline const std::vector<std::pair<std::string, CheckFn>>& check_suites() {
    static const std::vector<std::pair<std::string, CheckFn>> suites = {
        {"conjecture", checks::conjecture},
        {"closed_forms", checks::closed_forms},
        {"hilbert_sd", checks::hilbert_sd},
        {"local_cohomology", checks::local_cohomology},
        {"depth_pdim", checks::depth_pdim},
        {"regularity", checks::regularity_suite},
        {"koszul_golod", checks::koszul_golod},
        {"betti_hilbert", checks::betti_hilbert},
        {"homology_sd", checks::homology_sd},
        {"lemmas", checks::lemmas},
    };
    return suites;
}

struct SweepSummary {
    int complexes = 0;
    int checks_run = 0;
    std::vector<SweepFailure> failures;
};

// Runs the selected suites over every complex the manifest describes:
// exhaustive corpora for n <= 4, seeded samples above that.
inline SweepSummary run_sweep(const SweepManifest& manifest,
                              const std::function<void(const std::string&)>& log = {}) {
    SweepSummary summary;
    BettiOptions opts;
    opts.budget_log2 = manifest.budget;
    opts.jobs = manifest.jobs;

    std::vector<std::pair<std::string, CheckFn>> selected;
    for (const auto& [name, fn] : check_suites()) {
        if (manifest.checks.empty() ||
            std::find(manifest.checks.begin(), manifest.checks.end(), name) != manifest.checks.end())
            selected.emplace_back(name, fn);
    }
    if (selected.size() != (manifest.checks.empty() ? check_suites().size() : manifest.checks.size()))
        throw ParseError("manifest names an unknown check suite");

    auto run_one = [&](const SimplicialComplex& cx) {
        SweepContext ctx(cx, opts);
        for (const auto& [name, fn] : selected) {
            fn(ctx, manifest.fields, summary.failures);
            ++summary.checks_run;
        }
        ++summary.complexes;
    };

    for (int n = 1; n <= std::min(manifest.max_vertices, 4); ++n) {
        auto corpus = all_complexes_on(n);
        if (log) log("exhaustive n=" + std::to_string(n) + ": " + std::to_string(corpus.size()) +
                     " complexes");
        for (const auto& cx : corpus) run_one(cx);
    }
    for (int n = 5; n <= manifest.max_vertices; ++n) {
        SampleOptions sopts;
        sopts.max_facets = manifest.max_facets;
        sopts.max_sd_vertices = manifest.max_sd_vertices;
        auto corpus = sample_complexes(n, manifest.samples, manifest.seed, sopts);
        if (log) log("sampled n=" + std::to_string(n) + ": " + std::to_string(corpus.size()) +
                     " complexes (seed " + std::to_string(manifest.seed) + ")");
        for (const auto& cx : corpus) run_one(cx);
    }
    return summary;
}

} // namespace srt

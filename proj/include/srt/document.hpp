#pragma once

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "srt/betti.hpp"
#include "srt/complex.hpp"
#include "srt/conjecture.hpp"
#include "srt/errors.hpp"
#include "srt/homology.hpp"
#include "srt/invariants.hpp"

namespace srt {

// Flat text interchange format, one record per line:
//
//   schema srt-complex/1
//   name C4              (optional)
//   vertices 1 2 3 4
//   facet 1 2
//   facet 2 3
//
// Labels are whitespace-free tokens; '#' starts a comment line.
struct ComplexDocument {
    std::string schema_version = "srt-complex/1";
    std::string name;
    std::vector<std::string> ground_set;
    std::vector<std::vector<std::string>> facets;

    static ComplexDocument from_complex(const SimplicialComplex& cx, std::string name = {}) {
        ComplexDocument doc;
        doc.name = std::move(name);
        doc.ground_set = cx.labels();
        for (const auto& f : cx.facets()) doc.facets.push_back(cx.face_labels(f));
        return doc;
    }

    SimplicialComplex to_complex() const {
        return SimplicialComplex::from_facets(ground_set, facets);
    }

    // Sorted labels, sorted facet members, facets sorted as sequences; the
    // canonical form round-trips byte-identically through parse/serialize.
    void canonicalize() {
        std::sort(ground_set.begin(), ground_set.end());
        for (auto& f : facets) std::sort(f.begin(), f.end());
        std::sort(facets.begin(), facets.end());
    }

    std::string serialize() const {
        std::ostringstream out;
        out << "schema " << schema_version << "\n";
        if (!name.empty()) out << "name " << name << "\n";
        out << "vertices";
        for (const auto& l : ground_set) out << ' ' << l;
        out << "\n";
        for (const auto& f : facets) {
            out << "facet";
            for (const auto& l : f) out << ' ' << l;
            out << "\n";
        }
        return out.str();
    }

    static ComplexDocument parse(const std::string& text) {
        ComplexDocument doc;
        doc.schema_version.clear();
        std::istringstream in(text);
        std::string line;
        bool saw_vertices = false;
        while (std::getline(in, line)) {
            if (line.empty() || line[0] == '#') continue;
            std::istringstream ls(line);
            std::string key;
            ls >> key;
            if (key == "schema") {
                ls >> doc.schema_version;
                if (doc.schema_version != "srt-complex/1")
                    throw ParseError("unsupported schema: " + doc.schema_version);
            } else if (key == "name") {
                ls >> doc.name;
            } else if (key == "vertices") {
                std::string tok;
                while (ls >> tok) doc.ground_set.push_back(tok);
                saw_vertices = true;
            } else if (key == "facet") {
                std::vector<std::string> f;
                std::string tok;
                while (ls >> tok) f.push_back(tok);
                if (f.empty()) throw ParseError("facet line with no members");
                doc.facets.push_back(std::move(f));
            } else {
                throw ParseError("unknown key: " + key);
            }
        }
        if (doc.schema_version.empty()) throw ParseError("missing schema line");
        if (!saw_vertices) throw ParseError("missing vertices line");
        return doc;
    }

    friend bool operator==(const ComplexDocument&, const ComplexDocument&) = default;
};

// Sweep configuration:
//
//   schema srt-manifest/1
//   max_vertices 4
//   fields Q 2
//   budget 24
//   seed 42
//   samples 200
//   max_sd_vertices 20
//   max_facets 6
//   checks conjecture closed_forms
struct SweepManifest {
    int max_vertices = 4;
    int max_facets = 0;
    std::vector<FieldSpec> fields{FieldSpec::rationals(), FieldSpec::gf(2)};
    int budget = 24;
    std::uint64_t seed = 1;
    int samples = 200;
    int max_sd_vertices = 20;
    int jobs = 0;
    std::vector<std::string> checks; // empty: run every suite

    static FieldSpec parse_field(const std::string& tok) {
        if (tok == "Q" || tok == "q") return FieldSpec::rationals();
        std::string digits = tok;
        if (digits.rfind("GF", 0) == 0) digits = digits.substr(2);
        try {
            return FieldSpec::gf(std::stoi(digits));
        } catch (const NonPrimeModulusError&) {
            throw;
        } catch (const std::exception&) {
            throw ParseError("bad field token: " + tok);
        }
    }

    static SweepManifest parse(const std::string& text) {
        SweepManifest m;
        std::istringstream in(text);
        std::string line;
        bool saw_schema = false;
        while (std::getline(in, line)) {
            if (line.empty() || line[0] == '#') continue;
            std::istringstream ls(line);
            std::string key;
            ls >> key;
            if (key == "schema") {
                std::string v;
                ls >> v;
                if (v != "srt-manifest/1") throw ParseError("unsupported schema: " + v);
                saw_schema = true;
            } else if (key == "max_vertices") ls >> m.max_vertices;
            else if (key == "max_facets") ls >> m.max_facets;
            else if (key == "budget") ls >> m.budget;
            else if (key == "seed") ls >> m.seed;
            else if (key == "samples") ls >> m.samples;
            else if (key == "max_sd_vertices") ls >> m.max_sd_vertices;
            else if (key == "jobs") ls >> m.jobs;
            else if (key == "fields") {
                m.fields.clear();
                std::string tok;
                while (ls >> tok) m.fields.push_back(parse_field(tok));
            } else if (key == "checks") {
                std::string tok;
                while (ls >> tok) m.checks.push_back(tok);
            } else throw ParseError("unknown key: " + key);
        }
        if (!saw_schema) throw ParseError("missing schema line");
        if (m.fields.empty()) throw ParseError("manifest names no fields");
        return m;
    }
};

// ---- plain-text renderers used by the CLI ----

inline std::string render_invariants(const InvariantBundle& b) {
    std::ostringstream out;
    out << "field " << b.field.name() << "\n"
        << "krull_dim " << b.krull_dim << "\n"
        << "depth " << b.depth << "\n"
        << "pdim " << b.pdim << "\n"
        << "reg " << b.reg << "\n"
        << "height " << b.height << "\n"
        << "multiplicity " << b.multiplicity << "\n"
        << "cohen_macaulay " << (b.is_CM ? "true" : "false") << "\n"
        << "koszul_flag " << (b.is_koszul_flag ? "true" : "false") << "\n"
        << "golod_criterion " << (b.is_golod ? "true" : "false") << "\n";
    return out.str();
}

inline std::string render_betti(const BettiTable& t) {
    std::ostringstream out;
    out << "field " << t.field.name() << "  variables " << t.n << "  cap " << t.cap << "\n";
    int pd = t.pdim();
    int maxj = 0;
    for (const auto& [ij, v] : t.entries)
        if (v) maxj = std::max(maxj, ij.second);
    out << "      ";
    for (int j = 0; j <= maxj; ++j) out << ' ' << j << (j < 10 ? "    " : "   ");
    out << "\n";
    for (int i = 0; i <= pd; ++i) {
        out << "  " << i << (i < 10 ? "  :" : " :");
        for (int j = 0; j <= maxj; ++j) {
            auto v = t.beta(i, j);
            std::string cell = v ? std::to_string(v) : ".";
            out << ' ' << cell << std::string(cell.size() < 5 ? 5 - cell.size() : 1, ' ');
        }
        out << "\n";
    }
    out << "rows (i j beta):\n";
    for (const auto& [ij, v] : t.entries)
        if (v) out << ij.first << ' ' << ij.second << ' ' << v << "\n";
    return out.str();
}

inline std::string render_report(const ConjectureReport& r) {
    std::ostringstream out;
    out << "subject " << r.subject << (r.is_subdivision ? " (subdivision)" : "") << "\n"
        << "field " << r.field.name() << "\n"
        << "multiplicity " << r.e << "\n"
        << "height " << r.height << "\n"
        << "upper_product " << r.upper_product.to_string() << "\n"
        << "upper_holds " << (r.upper_holds ? "true" : "false") << "\n"
        << "equality_upper " << (r.equality_upper ? "true" : "false") << "\n"
        << "cohen_macaulay " << (r.is_CM ? "true" : "false") << "\n";
    if (r.lower_product) {
        out << "lower_product " << r.lower_product->to_string() << "\n"
            << "lower_holds " << (*r.lower_holds ? "true" : "false") << "\n"
            << "equality_lower " << (*r.equality_lower ? "true" : "false") << "\n";
    } else {
        out << "lower_bound not_applicable\n";
    }
    out << "pure " << (r.is_pure ? "true" : "false") << "\n";
    out << "shifts";
    for (int i = 1; i <= r.shift_profile.pdim; ++i) {
        out << ' ' << r.shift_profile.m(i);
        if (r.shift_profile.M(i) != r.shift_profile.m(i)) out << ".." << r.shift_profile.M(i);
    }
    out << "\n";
    auto render_witness = [&](const char* label, const std::vector<int>& w) {
        out << label;
        for (int v : w) out << ' ' << v;
        out << "\n";
    };
    if (!r.witness_min_shift.empty()) render_witness("witness_min_shift", r.witness_min_shift);
    if (!r.witness_max_shift.empty()) render_witness("witness_max_shift", r.witness_max_shift);
    return out.str();
}

// one-line replayable rendering, used in sweep failure reports
inline std::string render_inline(const SimplicialComplex& cx) {
    std::ostringstream out;
    out << "vertices:";
    for (const auto& l : cx.labels()) out << ' ' << l;
    out << " facets:";
    bool first = true;
    for (const auto& f : cx.facets()) {
        if (!first) out << " |";
        first = false;
        for (const auto& l : cx.face_labels(f)) out << ' ' << l;
    }
    return out.str();
}

} // namespace srt

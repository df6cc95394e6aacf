// srtool: Stanley-Reisner invariants, Betti tables, barycentric subdivisions,
// and multiplicity-bound verdicts over exact arithmetic.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "srt/document.hpp"
#include "srt/sweep.hpp"

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw srt::ParseError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_path);
        if (!out) throw srt::ParseError("cannot write " + out_path);
        out << text;
    }
}

srt::SimplicialComplex load_complex(const std::string& path) {
    return srt::ComplexDocument::parse(slurp(path)).to_complex();
}

int default_budget() {
    if (const char* env = std::getenv("SRTOOL_BUDGET")) return std::atoi(env);
    return 24;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Stanley-Reisner toolkit for barycentric subdivisions"};
    app.require_subcommand(1);

    std::string file, out_path, field_tok = "q", manifest_path;
    int cap = -1, jobs = 0, budget = default_budget();
    bool subdivide = false, equality = false;

    auto add_common = [&](CLI::App* cmd, bool with_field) {
        cmd->add_option("file", file, "complex document")->required();
        if (with_field)
            cmd->add_option("--field", field_tok, "coefficient field: q or a prime (default q)");
        cmd->add_option("--jobs", jobs, "worker threads (0 = all cores)");
        cmd->add_option("--budget", budget, "max log2 of subset sweep size");
        cmd->add_option("--out", out_path, "output path (default stdout)");
    };

    auto* cmd_inv = app.add_subcommand("invariants", "ring invariants of k[complex]");
    add_common(cmd_inv, true);

    auto* cmd_betti = app.add_subcommand("betti", "graded Betti table via Hochster's formula");
    add_common(cmd_betti, true);
    cmd_betti->add_option("--cap", cap, "compute entries only for internal degree <= cap");

    auto* cmd_sd = app.add_subcommand("sd", "barycentric subdivision as a document");
    cmd_sd->add_option("file", file, "complex document")->required();
    cmd_sd->add_option("--out", out_path, "output path (default stdout)");

    auto* cmd_conj = app.add_subcommand("conjecture", "multiplicity bound verdicts");
    add_common(cmd_conj, true);
    cmd_conj->add_flag("--subdivide", subdivide, "verify for the barycentric subdivision");
    cmd_conj->add_flag("--equality", equality, "include the equality-case diagnosis");

    auto* cmd_sweep = app.add_subcommand("sweep", "run property suites over a complex corpus");
    cmd_sweep->add_option("manifest", manifest_path, "sweep manifest")->required();
    cmd_sweep->add_option("--jobs", jobs, "worker threads (0 = all cores)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (cmd_inv->parsed()) {
            auto cx = load_complex(file);
            auto k = srt::SweepManifest::parse_field(field_tok);
            emit(srt::render_invariants(srt::invariant_bundle(cx, k)), out_path);
            return 0;
        }
        if (cmd_betti->parsed()) {
            auto cx = load_complex(file);
            auto k = srt::SweepManifest::parse_field(field_tok);
            srt::BettiOptions opts;
            opts.degree_cap = cap;
            opts.jobs = jobs;
            opts.budget_log2 = budget;
            emit(srt::render_betti(srt::hochster_betti(cx, k, opts)), out_path);
            return 0;
        }
        if (cmd_sd->parsed()) {
            auto doc = srt::ComplexDocument::parse(slurp(file));
            auto sd = doc.to_complex().barycentric_subdivision();
            auto out = srt::ComplexDocument::from_complex(
                sd, doc.name.empty() ? "" : "sd_" + doc.name);
            out.canonicalize();
            emit(out.serialize(), out_path);
            return 0;
        }
        if (cmd_conj->parsed()) {
            auto doc = srt::ComplexDocument::parse(slurp(file));
            auto cx = doc.to_complex();
            auto k = srt::SweepManifest::parse_field(field_tok);
            srt::ConjectureOptions opts;
            opts.betti.jobs = jobs;
            opts.betti.budget_log2 = budget;
            auto report = subdivide ? srt::verify_subdivision_theorem(cx, k, opts, doc.name)
                                    : srt::verify(cx, k, opts, doc.name);
            std::string text = srt::render_report(report);
            if (equality) {
                auto diag = srt::equality_analysis(cx, k, opts);
                text += "equality_case " + diag.note + "\n";
                text += "equality_verified " + std::string(diag.verified ? "true" : "false") + "\n";
            }
            emit(text, out_path);
            bool ok = report.upper_holds &&
                      (!report.lower_holds.has_value() || *report.lower_holds);
            if (!ok) {
                std::cerr << "CHECK_FAILED conjecture " << srt::render_inline(cx) << "\n";
                return 1;
            }
            return 0;
        }
        if (cmd_sweep->parsed()) {
            auto manifest = srt::SweepManifest::parse(slurp(manifest_path));
            if (jobs) manifest.jobs = jobs;
            auto summary = srt::run_sweep(manifest, [](const std::string& line) {
                std::cout << "# " << line << "\n";
            });
            std::cout << "complexes " << summary.complexes << "\n"
                      << "suites_run " << summary.checks_run << "\n"
                      << "failures " << summary.failures.size() << "\n";
            for (const auto& f : summary.failures)
                std::cout << "FAIL\t" << f.check << "\t" << f.detail << "\t" << f.complex_repr
                          << "\n";
            return summary.failures.empty() ? 0 : 1;
        }
    } catch (const srt::ParseError& e) {
        std::cerr << "PARSE_ERROR " << e.what() << "\n";
        return 2;
    } catch (const srt::BudgetExceededError& e) {
        std::cerr << "BUDGET_EXCEEDED " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "ERROR " << e.what() << "\n";
        return 4;
    }
    return 0;
}

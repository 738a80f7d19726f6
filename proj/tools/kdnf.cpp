// Command-line front end: generate family instances, run verification
// checks, tabulate bounds, and apply single weakenings. Reports are JSON
// with a deterministic canonical body; timing and the echoed run
// configuration live in the stats block, which is excluded from the hash.
//
// Exit codes: 0 the checked claim holds, 1 it fails (or the verdict is
// mixed), 2 usage or input error, 3 the verdict is timeout-dominated.

#include <kdnf/bounds.hpp>
#include <kdnf/cnf.hpp>
#include <kdnf/families.hpp>
#include <kdnf/formula.hpp>
#include <kdnf/io.hpp>
#include <kdnf/reports.hpp>
#include <kdnf/solver.hpp>
#include <kdnf/verify.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace {

constexpr int exit_holds = 0;
constexpr int exit_fails = 1;
constexpr int exit_usage = 2;
constexpr int exit_timeout = 3;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw UsageError("cannot write " + path);
    out << text;
}

int verdict_exit(kdnf::Verdict v) {
    switch (v) {
        case kdnf::Verdict::Holds: return exit_holds;
        case kdnf::Verdict::Timeout: return exit_timeout;
        default: return exit_fails;
    }
}

// ---- gen ------------------------------------------------------------------

struct GenConfig {
    std::string family;
    int n = 0, m = 0, k = 0;
    std::optional<int> nu_range;
    std::string out;
    std::string dimacs_out;
};

int run_gen(const GenConfig& cfg) {
    using namespace kdnf::families;
    auto need = [](bool ok, const char* what) {
        if (!ok) throw UsageError(std::string("this family requires ") + what);
    };
    kdnf::DnfSet d;
    std::optional<kdnf::CdXorFormula> g;
    if (cfg.family == "tarsi") {
        need(cfg.n > 0, "--n");
        d = tarsi_cnf(cfg.n);
    } else if (cfg.family == "naive-pair") {
        need(cfg.n > 0, "--n");
        d = naive_pair(cfg.n);
    } else if (cfg.family == "substitution") {
        need(cfg.n > 0 && cfg.k > 0, "--n and --k");
        d = substitute_or_of_ands(tarsi_cnf(cfg.n), cfg.k);
    } else if (cfg.family == "weight-gadget") {
        need(cfg.m > 0 && cfg.k > 0, "--m and --k");
        d = weight_gadget(cfg.m, cfg.k);
    } else if (cfg.family == "min-unsat") {
        need(cfg.m > 0 && cfg.k > 0, "--m and --k");
        d = min_unsat_set(cfg.m, cfg.k, cfg.nu_range);
    } else if (cfg.family == "xor-pair") {
        need(cfg.m > 0 && cfg.k > 0, "--m and --k");
        auto pair = xor_implication_pair(cfg.m, cfg.k);
        d = std::move(pair.d);
        g = std::move(pair.g);
    } else {
        throw UsageError("unknown family " + cfg.family);
    }

    write_output(cfg.out, kdnf::serialize_kdnf(d));
    if (g) {
        const std::string gpath = cfg.out.empty() || cfg.out == "-" ? "" : cfg.out + ".cdxor";
        write_output(gpath, kdnf::serialize_cdxor(*g));
        if (!gpath.empty()) std::cerr << "wrote companion " << gpath << "\n";
    }
    if (!cfg.dimacs_out.empty()) write_output(cfg.dimacs_out, kdnf::export_dimacs(d));
    std::cerr << "generated " << (d.family ? d.family->str() : cfg.family) << ": "
              << d.formulas.size() << " formulas, " << d.nvars << " variables\n";
    return exit_holds;
}

// ---- verify ---------------------------------------------------------------

struct VerifyConfig {
    std::string input;
    std::string check;
    std::string cdxor;
    std::string solver = "internal";
    int brute_cap = 24;
    double timeout_per_check = 10.0;
    std::optional<double> timeout_total;
    int jobs = 1;
    int max_clauses = 3;
    int max_vars = 2;
    std::string out;
};

kdnf::VerifyOptions make_options(const VerifyConfig& cfg) {
    kdnf::VerifyOptions opts;
    opts.solve.brute_cap = static_cast<unsigned>(cfg.brute_cap);
    opts.solve.time_budget_s = cfg.timeout_per_check;
    opts.per_check_budget_s = cfg.timeout_per_check;
    opts.total_budget_s = cfg.timeout_total;
    opts.jobs = cfg.jobs;
    return opts;
}

nlohmann::json config_echo(const VerifyConfig& cfg) {
    nlohmann::json j;
    j["subcommand"] = "verify";
    j["check"] = cfg.check;
    if (!cfg.input.empty()) j["input"] = cfg.input;
    if (!cfg.cdxor.empty()) j["cdxor"] = cfg.cdxor;
    j["solver"] = cfg.solver;
    j["brute_cap"] = cfg.brute_cap;
    j["timeout_per_check_s"] = cfg.timeout_per_check;
    if (cfg.timeout_total) j["timeout_total_s"] = *cfg.timeout_total;
    j["jobs"] = cfg.jobs;
    if (cfg.check == "tarsi-scan") {
        j["max_clauses"] = cfg.max_clauses;
        j["max_vars"] = cfg.max_vars;
    }
    return j;
}

/// Runs `command <dimacs-file>` and maps the answer to Sat/Unsat via the
/// conventional exit codes 10/20 or an `s SATISFIABLE`/`s UNSATISFIABLE`
/// status line. Anything else is a tool fault.
kdnf::SatStatus run_external(const std::string& command, const kdnf::DnfSet& d) {
    char path[] = "/tmp/kdnf-dimacs-XXXXXX";
    const int fd = ::mkstemp(path);
    if (fd < 0) throw UsageError("cannot create temporary DIMACS file");
    const std::string dimacs = kdnf::export_dimacs(d);
    const bool wrote = ::write(fd, dimacs.data(), dimacs.size()) ==
                       static_cast<ssize_t>(dimacs.size());
    ::close(fd);
    if (!wrote) {
        ::unlink(path);
        throw UsageError("cannot write temporary DIMACS file");
    }

    const std::string cmdline = command + " " + path + " 2>/dev/null";
    FILE* pipe = ::popen(cmdline.c_str(), "r");
    if (!pipe) {
        ::unlink(path);
        throw UsageError("cannot run external solver: " + command);
    }
    std::string output;
    char buf[4096];
    std::size_t got;
    while ((got = std::fread(buf, 1, sizeof buf, pipe)) > 0) output.append(buf, got);
    const int rc = ::pclose(pipe);
    ::unlink(path);

    const int code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    if (code == 10 || output.find("s SATISFIABLE") != std::string::npos)
        return kdnf::SatStatus::Sat;
    if (code == 20 || output.find("s UNSATISFIABLE") != std::string::npos)
        return kdnf::SatStatus::Unsat;
    throw UsageError("external solver gave no recognizable answer (exit " +
                     std::to_string(code) + ")");
}

int emit_report(nlohmann::json report, const VerifyConfig& cfg, kdnf::Verdict verdict,
                const std::string& summary) {
    if (!report.contains("stats")) report["stats"] = nlohmann::json::object();
    report["stats"]["config"] = config_echo(cfg);
    report = kdnf::finalize_report(std::move(report));
    write_output(cfg.out, report.dump(2) + "\n");
    std::cerr << summary << "\n";
    return verdict_exit(verdict);
}

std::string count_summary(const kdnf::ReportCounts& c) {
    std::ostringstream ss;
    ss << c.loci << " loci, " << c.satisfiable << " satisfiable, " << c.still_unsat
       << " still-unsatisfiable, " << c.timeouts << " timeouts";
    return ss.str();
}

int run_verify(const VerifyConfig& cfg) {
    const kdnf::VerifyOptions opts = make_options(cfg);
    const bool external = cfg.solver.rfind("external:", 0) == 0;
    if (!external && cfg.solver != "internal")
        throw UsageError("--solver must be internal or external:<command>");
    if (external && cfg.check != "unsat")
        throw UsageError("external solver cross-checks support --check unsat only");

    auto load = [&]() {
        if (cfg.input.empty()) throw UsageError("--check " + cfg.check + " needs an input file");
        return kdnf::parse_kdnf(read_input(cfg.input));
    };

    if (cfg.check == "unsat") {
        const kdnf::DnfSet d = load();
        kdnf::VerificationReport rep = kdnf::check_unsat(d, opts);
        nlohmann::json j = kdnf::report_json(rep);
        std::string summary = std::string("unsat: ") + kdnf::to_string(rep.verdict);
        if (external && rep.verdict != kdnf::Verdict::Timeout) {
            const kdnf::SatStatus ext = run_external(cfg.solver.substr(9), d);
            const kdnf::SatStatus internal =
                rep.verdict == kdnf::Verdict::Holds ? kdnf::SatStatus::Unsat
                                                    : kdnf::SatStatus::Sat;
            j["stats"]["external_verdict"] = ext == kdnf::SatStatus::Sat ? "sat" : "unsat";
            if (ext != internal) {
                summary += " BUT the external solver disagrees";
                return emit_report(std::move(j), cfg, kdnf::Verdict::Fails, summary);
            }
            summary += " (externally confirmed)";
        }
        return emit_report(std::move(j), cfg, rep.verdict, summary);
    }
    if (cfg.check == "min-unsat") {
        const kdnf::VerificationReport rep = kdnf::check_min_unsat(load(), opts);
        std::string summary = std::string("min-unsat: ") + kdnf::to_string(rep.verdict) + " (" +
                              count_summary(rep.counts) + ")";
        for (const kdnf::LocusEntry& e : rep.loci)
            if (e.status == kdnf::LocusStatus::StillUnsat)
                summary += "\n  counterexample locus: formula " +
                           std::to_string(e.locus.formula) + ", term " +
                           std::to_string(e.locus.term) + ", literal " +
                           std::to_string(e.locus.literal);
        return emit_report(kdnf::report_json(rep), cfg, rep.verdict, summary);
    }
    if (cfg.check == "weight-gadget") {
        int m = 0, k = 0;
        if (!cfg.input.empty()) {
            const kdnf::DnfSet d = kdnf::parse_kdnf(read_input(cfg.input));
            if (!d.family || d.family->family != "weight_gadget" || !d.family->m ||
                !d.family->k)
                throw UsageError("input lacks a weight_gadget family descriptor");
            m = *d.family->m;
            k = *d.family->k;
            if (kdnf::instance_hash(d) !=
                kdnf::instance_hash(kdnf::families::weight_gadget(m, k)))
                throw UsageError("input differs from the canonical weight gadget " +
                                 d.family->str());
        } else {
            throw UsageError("--check weight-gadget needs an input file (use gen first)");
        }
        const kdnf::WeightGadgetReport rep = kdnf::check_weight_gadget(m, k, opts);
        const std::string summary =
            std::string("weight-gadget: ") + kdnf::to_string(rep.verdict) +
            " (low-weight-models " + kdnf::to_string(rep.low_weight_models.verdict) +
            ", high-weight-excluded " + kdnf::to_string(rep.high_weight_excluded.verdict) +
            ", weakenings-release " + kdnf::to_string(rep.weakenings_release.verdict) + "; " +
            count_summary(rep.counts) + ")";
        return emit_report(kdnf::report_json(rep), cfg, rep.verdict, summary);
    }
    if (cfg.check == "bounds") {
        const kdnf::DnfSet d = load();
        std::optional<kdnf::CdXorFormula> g;
        if (!cfg.cdxor.empty()) g = kdnf::parse_cdxor(read_input(cfg.cdxor));
        const kdnf::BoundsReport rep = kdnf::check_bounds(d, g ? &*g : nullptr);
        std::string summary = std::string("bounds: ") + kdnf::to_string(rep.verdict);
        for (const kdnf::BoundCheck& c : rep.checks)
            if (!c.holds) summary += "\n  failed: " + c.name + " (" + c.detail + ")";
        return emit_report(kdnf::report_json(rep), cfg, rep.verdict, summary);
    }
    if (cfg.check == "implication" || cfg.check == "precise-implication") {
        const kdnf::DnfSet d = load();
        if (cfg.cdxor.empty()) throw UsageError("--check " + cfg.check + " needs --cdxor");
        const kdnf::CdXorFormula g = kdnf::parse_cdxor(read_input(cfg.cdxor));
        if (cfg.check == "implication") {
            const kdnf::ImplicationResult r = kdnf::implies(d, g, opts.solve);
            const kdnf::Verdict v = r.status == kdnf::ImpliesStatus::Implied
                                        ? kdnf::Verdict::Holds
                                    : r.status == kdnf::ImpliesStatus::Timeout
                                        ? kdnf::Verdict::Timeout
                                        : kdnf::Verdict::Fails;
            return emit_report(kdnf::report_json(r, d, g), cfg, v,
                               std::string("implication: ") + kdnf::to_string(r.status));
        }
        const kdnf::PrecisionResult r = kdnf::check_precise_implication(d, g, opts.solve);
        const kdnf::Verdict v = r.verdict == kdnf::PrecisionVerdict::Precise
                                    ? kdnf::Verdict::Holds
                                : r.verdict == kdnf::PrecisionVerdict::Timeout
                                    ? kdnf::Verdict::Timeout
                                    : kdnf::Verdict::Fails;
        return emit_report(kdnf::report_json(r, d, g), cfg, v,
                           std::string("precise-implication: ") + kdnf::to_string(r.verdict) +
                               " (" + std::to_string(r.atoms.size()) + " atom checks)");
    }
    if (cfg.check == "tarsi-scan") {
        const kdnf::TarsiScanReport rep =
            kdnf::tarsi_scan(cfg.max_clauses, cfg.max_vars, opts);
        const std::string summary =
            std::string("tarsi-scan: ") + kdnf::to_string(rep.verdict) + " (" +
            std::to_string(rep.sets_scanned) + " scanned, " +
            std::to_string(rep.min_unsat_found) + " minimally unsatisfiable, " +
            std::to_string(rep.violations.size()) + " bound violations)";
        return emit_report(kdnf::report_json(rep), cfg, rep.verdict, summary);
    }
    throw UsageError("unknown check " + cfg.check);
}

// ---- bounds ---------------------------------------------------------------

struct BoundsConfig {
    std::string k_range = "2..4";
    std::string m_range = "2..6";
    std::string format = "csv";
    bool xor_bound = false;
    bool actual_counts = false;
    std::string out;
};

std::pair<int, int> parse_range(const std::string& text) {
    const auto dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            const int v = std::stoi(text);
            return {v, v};
        }
        return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
    } catch (const std::exception&) {
        throw UsageError("bad range " + text + " (expected N or LO..HI)");
    }
}

int run_bounds(const BoundsConfig& cfg) {
    const auto [k_lo, k_hi] = parse_range(cfg.k_range);
    const auto [m_lo, m_hi] = parse_range(cfg.m_range);
    kdnf::BoundsTableOptions opts;
    if (cfg.format == "csv")
        opts.format = kdnf::TableFormat::Csv;
    else if (cfg.format == "markdown")
        opts.format = kdnf::TableFormat::Markdown;
    else
        throw UsageError("--format must be csv or markdown");
    opts.xor_bound = cfg.xor_bound;
    opts.actual_counts = cfg.actual_counts;
    write_output(cfg.out, kdnf::emit_bounds_table(k_lo, k_hi, m_lo, m_hi, opts));
    return exit_holds;
}

// ---- weaken ---------------------------------------------------------------

struct WeakenConfig {
    std::string input;
    int formula = -1, term = -1, literal = -1;
    std::string out;
};

int run_weaken(const WeakenConfig& cfg) {
    const kdnf::DnfSet d = kdnf::parse_kdnf(read_input(cfg.input));
    if (cfg.formula < 0 || static_cast<std::size_t>(cfg.formula) >= d.formulas.size())
        throw UsageError("formula index out of range");
    const auto& terms = d.formulas[static_cast<std::size_t>(cfg.formula)].terms;
    if (cfg.term < 0 || static_cast<std::size_t>(cfg.term) >= terms.size())
        throw UsageError("term index out of range");
    if (cfg.literal < 0 ||
        static_cast<std::size_t>(cfg.literal) >= terms[static_cast<std::size_t>(cfg.term)].size())
        throw UsageError("literal index out of range");
    const kdnf::WeakeningLocus locus{static_cast<std::size_t>(cfg.formula),
                                     static_cast<std::size_t>(cfg.term),
                                     static_cast<std::size_t>(cfg.literal)};
    write_output(cfg.out, kdnf::serialize_kdnf(kdnf::weaken(d, locus)));
    return exit_holds;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"k-DNF family generator and claim verifier"};
    app.require_subcommand(1);

    GenConfig gen;
    CLI::App* cmd_gen = app.add_subcommand("gen", "generate a family instance");
    cmd_gen
        ->add_option("--family", gen.family,
                     "tarsi | naive-pair | substitution | weight-gadget | min-unsat | xor-pair")
        ->required();
    cmd_gen->add_option("--n", gen.n, "base size for tarsi / naive-pair / substitution");
    cmd_gen->add_option("--m", gen.m, "family parameter m");
    cmd_gen->add_option("--k", gen.k, "term width k");
    cmd_gen->add_option("--nu-range", gen.nu_range, "override the index range of min-unsat");
    cmd_gen->add_option("--out", gen.out, "output path (default stdout; xor-pair adds .cdxor)");
    cmd_gen->add_option("--dimacs", gen.dimacs_out, "also write the clausified DIMACS here");

    VerifyConfig ver;
    CLI::App* cmd_verify = app.add_subcommand("verify", "run a verification check");
    cmd_verify->add_option("input", ver.input, "KDNF input file ('-' for stdin)");
    cmd_verify
        ->add_option("--check", ver.check,
                     "unsat | min-unsat | weight-gadget | implication | precise-implication | "
                     "bounds | tarsi-scan")
        ->required();
    cmd_verify->add_option("--cdxor", ver.cdxor, "companion formula for implication checks");
    cmd_verify->add_option("--solver", ver.solver, "internal | external:<command>");
    cmd_verify->add_option("--brute-cap", ver.brute_cap,
                           "max variable count for exhaustive enumeration");
    cmd_verify->add_option("--timeout-per-check", ver.timeout_per_check,
                           "seconds per solver query");
    cmd_verify->add_option("--timeout-total", ver.timeout_total, "seconds for the whole check");
    cmd_verify->add_option("--jobs", ver.jobs, "worker threads for independent loci");
    cmd_verify->add_option("--max-clauses", ver.max_clauses, "tarsi-scan: clause-set size cap");
    cmd_verify->add_option("--max-vars", ver.max_vars, "tarsi-scan: variable count cap");
    cmd_verify->add_option("--out", ver.out, "report path (default stdout)");

    BoundsConfig bounds;
    CLI::App* cmd_bounds = app.add_subcommand("bounds", "tabulate the counting bounds");
    cmd_bounds->add_option("--k", bounds.k_range, "width range, N or LO..HI");
    cmd_bounds->add_option("--m", bounds.m_range, "parameter range, N or LO..HI");
    cmd_bounds->add_option("--format", bounds.format, "csv | markdown");
    cmd_bounds->add_flag("--xor-bound", bounds.xor_bound,
                         "include the XOR companion lower-bound column");
    cmd_bounds->add_flag("--actual-counts", bounds.actual_counts,
                         "include generated min-unsat instance sizes");
    cmd_bounds->add_option("--out", bounds.out, "output path (default stdout)");

    WeakenConfig weaken;
    CLI::App* cmd_weaken = app.add_subcommand("weaken", "remove one literal occurrence");
    cmd_weaken->add_option("input", weaken.input, "KDNF input file ('-' for stdin)")->required();
    cmd_weaken->add_option("--formula", weaken.formula, "formula index (0-based)")->required();
    cmd_weaken->add_option("--term", weaken.term, "term index (0-based)")->required();
    cmd_weaken->add_option("--literal", weaken.literal, "literal index (0-based)")->required();
    cmd_weaken->add_option("--out", weaken.out, "output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    }

    try {
        if (*cmd_gen) return run_gen(gen);
        if (*cmd_verify) return run_verify(ver);
        if (*cmd_bounds) return run_bounds(bounds);
        return run_weaken(weaken);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const kdnf::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::length_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return exit_usage;
    }
}

#include "kdnf/verify.hpp"

#include "kdnf/families.hpp"
#include "kdnf/io.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <mutex>
#include <numeric>
#include <thread>

namespace kdnf {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

void add_stats(SolverStats& into, const SolverStats& s) {
    into.decisions += s.decisions;
    into.propagations += s.propagations;
    into.assignments_scanned += s.assignments_scanned;
    into.elapsed_s += s.elapsed_s;
}

/// Runs fn(0..n-1) on up to `jobs` threads; the first exception wins and the
/// queue is drained early.
template <typename Fn>
void parallel_for(std::size_t n, int jobs, Fn&& fn) {
    jobs = std::max(1, jobs);
    if (jobs == 1 || n <= 1) {
        for (std::size_t i = 0; i < n; ++i)
            fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::mutex err_mx;
    std::exception_ptr err;
    auto work = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= n)
                return;
            try {
                fn(i);
            } catch (...) {
                std::lock_guard lock(err_mx);
                if (!err)
                    err = std::current_exception();
                next.store(n);
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(jobs));
    for (int t = 0; t < jobs; ++t)
        pool.emplace_back(work);
    for (auto& th : pool)
        th.join();
    if (err)
        std::rethrow_exception(err);
}

std::vector<VariableId> x_tagged_vars(const DnfSet& d) {
    std::vector<VariableId> xs;
    for (VariableId v = 1; v <= d.nvars && v <= d.names.size(); ++v) {
        try {
            if (VarName::parse(d.names[v - 1]).tag == "x")
                xs.push_back(v);
        } catch (const std::invalid_argument&) {
        }
    }
    return xs;
}

int x_weight_of(const Assignment& a, const std::vector<VariableId>& xs) {
    int w = 0;
    for (VariableId v : xs)
        if (a.value(v))
            ++w;
    return w;
}

struct LocusOutcome {
    LocusEntry entry;
    SolverStats stats;
};

/// One minimality query: is the weakening at `loc` satisfiable?
LocusOutcome check_sat_locus(const DnfSet& d, const WeakeningLocus& loc, const SolveOptions& so,
                             const std::vector<VariableId>* xs) {
    LocusOutcome out;
    out.entry.locus = loc;
    DnfSet weakened = weaken(d, loc);
    SatResult r = checked_sat(weakened, so);
    out.stats = r.stats;
    switch (r.status) {
    case SatStatus::Sat:
        out.entry.status = LocusStatus::Satisfiable;
        out.entry.witness = std::move(r.model);
        if (!eval_set(weakened, *out.entry.witness))
            throw std::logic_error("weakening witness failed re-evaluation");
        if (xs)
            out.entry.x_weight = x_weight_of(*out.entry.witness, *xs);
        break;
    case SatStatus::Unsat:
        out.entry.status = LocusStatus::StillUnsat;
        break;
    case SatStatus::Timeout:
        out.entry.status = LocusStatus::Timeout;
        break;
    }
    return out;
}

/// Per-locus budget clipped to whatever remains of the whole-report budget.
std::optional<double> remaining_budget(double per_check,
                                       const std::optional<Clock::time_point>& deadline) {
    if (!deadline)
        return per_check;
    double left = std::chrono::duration<double>(*deadline - Clock::now()).count();
    if (left <= 0.0)
        return std::nullopt;
    return std::min(per_check, left);
}

void tally(ReportCounts& counts, LocusStatus s) {
    ++counts.loci;
    switch (s) {
    case LocusStatus::Satisfiable: ++counts.satisfiable; break;
    case LocusStatus::StillUnsat: ++counts.still_unsat; break;
    case LocusStatus::Timeout: ++counts.timeouts; break;
    }
}

Verdict loci_verdict(const ReportCounts& counts) {
    if (counts.still_unsat)
        return Verdict::Fails;
    if (counts.timeouts)
        return Verdict::Mixed;
    return Verdict::Holds;
}

DnfSet with_forced_vars(const DnfSet& base, std::initializer_list<std::pair<VariableId, bool>> fixed) {
    DnfSet d = base;
    for (auto [v, val] : fixed)
        d.formulas.push_back(DnfFormula{{Term({Literal(v, val)})}});
    return d;
}

} // namespace

const char* to_string(Verdict v) {
    switch (v) {
    case Verdict::Holds: return "holds";
    case Verdict::Fails: return "fails";
    case Verdict::Mixed: return "mixed";
    case Verdict::Timeout: return "timeout";
    }
    return "?";
}

const char* to_string(LocusStatus s) {
    switch (s) {
    case LocusStatus::Satisfiable: return "satisfiable";
    case LocusStatus::StillUnsat: return "still-unsatisfiable";
    case LocusStatus::Timeout: return "timeout";
    }
    return "?";
}

SatResult checked_sat(const DnfSet& d, const SolveOptions& opts) {
    if (opts.strategy == SolveOptions::Strategy::Brute)
        return sat(d, opts);
    const bool in_cap = opts.strategy == SolveOptions::Strategy::Auto &&
                        d.nvars <= opts.brute_cap && d.nvars <= 63;
    SolveOptions search = opts;
    search.strategy = SolveOptions::Strategy::Search;
    if (!in_cap)
        return sat(d, search);

    SolveOptions brute = opts;
    brute.strategy = SolveOptions::Strategy::Brute;
    SatResult b = sat(d, brute);
    SatResult s = sat(d, search);
    if (b.status != SatStatus::Timeout && s.status != SatStatus::Timeout && b.status != s.status)
        throw std::logic_error("oracle divergence: enumeration and search disagree on an instance");
    SolverStats merged = b.stats;
    add_stats(merged, s.stats);
    SatResult out = b.status != SatStatus::Timeout ? std::move(b) : std::move(s);
    out.stats = merged;
    return out;
}

VerificationReport check_unsat(const DnfSet& d, const VerifyOptions& opts) {
    auto t0 = Clock::now();
    VerificationReport rep;
    rep.check = "unsat";
    rep.subject = d.family;
    rep.instance_hash = instance_hash(d);
    rep.names = d.names;
    rep.jobs = std::max(1, opts.jobs);

    SolveOptions so = opts.solve;
    so.time_budget_s = opts.total_budget_s ? std::min(opts.per_check_budget_s, *opts.total_budget_s)
                                           : opts.per_check_budget_s;
    SatResult r = checked_sat(d, so);
    rep.stats = r.stats;
    switch (r.status) {
    case SatStatus::Unsat: rep.verdict = Verdict::Holds; break;
    case SatStatus::Sat:
        rep.verdict = Verdict::Fails;
        rep.counterexample = std::move(r.model);
        break;
    case SatStatus::Timeout: rep.verdict = Verdict::Timeout; break;
    }
    rep.elapsed_s = seconds_since(t0);
    return rep;
}

VerificationReport check_min_unsat(const DnfSet& d, const VerifyOptions& opts) {
    auto t0 = Clock::now();
    VerificationReport rep;
    rep.check = "min-unsat";
    rep.subject = d.family;
    rep.instance_hash = instance_hash(d);
    rep.names = d.names;
    rep.jobs = std::max(1, opts.jobs);

    std::optional<Clock::time_point> deadline;
    if (opts.total_budget_s)
        deadline = t0 + std::chrono::duration_cast<Clock::duration>(
                            std::chrono::duration<double>(*opts.total_budget_s));

    SolveOptions base_opts = opts.solve;
    base_opts.time_budget_s = opts.per_check_budget_s;
    SatResult base = checked_sat(d, base_opts);
    rep.stats = base.stats;
    if (base.status == SatStatus::Sat) {
        rep.verdict = Verdict::Fails;
        rep.counterexample = std::move(base.model);
        rep.elapsed_s = seconds_since(t0);
        return rep;
    }
    if (base.status == SatStatus::Timeout) {
        rep.verdict = Verdict::Timeout;
        rep.elapsed_s = seconds_since(t0);
        return rep;
    }

    // x-weights are meaningful only where a weight gadget owns the locus.
    std::vector<VariableId> xs;
    std::size_t x_formula_limit = 0;
    if (d.family && d.family->family == "weight_gadget") {
        xs = x_tagged_vars(d);
        x_formula_limit = d.formulas.size();
    } else if (d.family && d.family->family == "min_unsat" && d.family->m && d.family->k) {
        xs = x_tagged_vars(d);
        x_formula_limit = static_cast<std::size_t>(*d.family->k - 1) *
                          static_cast<std::size_t>(2 * *d.family->m - 1);
    }

    const auto loci = enumerate_weakening_loci(d);
    std::vector<LocusOutcome> outcomes(loci.size());
    parallel_for(loci.size(), opts.jobs, [&](std::size_t i) {
        auto budget = remaining_budget(opts.per_check_budget_s, deadline);
        if (!budget) {
            outcomes[i].entry.locus = loci[i];
            outcomes[i].entry.status = LocusStatus::Timeout;
            return;
        }
        SolveOptions so = opts.solve;
        so.time_budget_s = *budget;
        const bool want_x = !xs.empty() && loci[i].formula < x_formula_limit;
        outcomes[i] = check_sat_locus(d, loci[i], so, want_x ? &xs : nullptr);
    });

    rep.loci.reserve(outcomes.size());
    for (auto& oc : outcomes) {
        add_stats(rep.stats, oc.stats);
        tally(rep.counts, oc.entry.status);
        rep.loci.push_back(std::move(oc.entry));
    }
    rep.verdict = loci_verdict(rep.counts);
    rep.elapsed_s = seconds_since(t0);
    return rep;
}

namespace {

/// Weakening claim at one locus: the weakened gadget must reach x-weight 2.
LocusOutcome check_release_locus(const DnfSet& d, const WeakeningLocus& loc,
                                 const SolveOptions& so, const std::vector<VariableId>& xs) {
    LocusOutcome out;
    out.entry.locus = loc;
    DnfSet weakened = weaken(d, loc);

    if (so.strategy != SolveOptions::Strategy::Search && weakened.nvars <= so.brute_cap &&
        weakened.nvars <= 63) {
        CompiledSet comp(weakened);
        std::uint64_t xmask = 0;
        for (VariableId v : xs)
            xmask |= std::uint64_t(1) << (v - 1);
        const std::uint64_t space = std::uint64_t(1) << weakened.nvars;
        auto t0 = Clock::now();
        for (std::uint64_t bits = 0; bits < space; ++bits) {
            ++out.stats.assignments_scanned;
            if ((bits & 0xffff) == 0xffff && so.time_budget_s &&
                seconds_since(t0) > *so.time_budget_s) {
                out.entry.status = LocusStatus::Timeout;
                out.stats.elapsed_s = seconds_since(t0);
                return out;
            }
            if (std::popcount(bits & xmask) < 2 || !comp.eval(bits))
                continue;
            out.entry.status = LocusStatus::Satisfiable;
            out.entry.witness = Assignment::from_bits(bits, weakened.nvars);
            out.entry.x_weight = x_weight_of(*out.entry.witness, xs);
            out.stats.elapsed_s = seconds_since(t0);
            return out;
        }
        out.entry.status = LocusStatus::StillUnsat;
        out.stats.elapsed_s = seconds_since(t0);
        return out;
    }

    // Past the cap: one query per pair of x-variables forced true.
    bool timed_out = false;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        for (std::size_t j = i + 1; j < xs.size(); ++j) {
            SatResult r = checked_sat(with_forced_vars(weakened, {{xs[i], true}, {xs[j], true}}), so);
            add_stats(out.stats, r.stats);
            if (r.status == SatStatus::Sat) {
                out.entry.status = LocusStatus::Satisfiable;
                out.entry.witness = std::move(r.model);
                if (!eval_set(weakened, *out.entry.witness))
                    throw std::logic_error("release witness failed re-evaluation");
                out.entry.x_weight = x_weight_of(*out.entry.witness, xs);
                return out;
            }
            if (r.status == SatStatus::Timeout)
                timed_out = true;
        }
    }
    out.entry.status = timed_out ? LocusStatus::Timeout : LocusStatus::StillUnsat;
    return out;
}

Verdict claim_worst(std::initializer_list<Verdict> vs) {
    bool fails = false, partial = false, all_timeout = true;
    for (Verdict v : vs) {
        fails |= v == Verdict::Fails;
        partial |= v != Verdict::Holds;
        all_timeout &= v == Verdict::Timeout;
    }
    if (fails)
        return Verdict::Fails;
    if (all_timeout)
        return Verdict::Timeout;
    return partial ? Verdict::Mixed : Verdict::Holds;
}

} // namespace

WeightGadgetReport check_weight_gadget(int m, int k, const VerifyOptions& opts) {
    auto t0 = Clock::now();
    DnfSet w = families::weight_gadget(m, k);
    WeightGadgetReport rep;
    rep.subject = *w.family;
    rep.instance_hash = instance_hash(w);
    rep.names = w.names;
    rep.jobs = std::max(1, opts.jobs);
    rep.low_weight_models.name = "low-weight-models";
    rep.high_weight_excluded.name = "high-weight-excluded";
    rep.weakenings_release.name = "weakenings-release";

    const std::vector<VariableId> xs = x_tagged_vars(w);
    if (xs.size() != static_cast<std::size_t>(m) * (k - 1))
        throw std::logic_error("weight gadget lost track of its x-variables");

    const bool in_cap = opts.solve.strategy != SolveOptions::Strategy::Search &&
                        w.nvars <= opts.solve.brute_cap && w.nvars <= 63 && xs.size() <= 26;
    if (in_cap) {
        CompiledSet comp(w);
        std::uint64_t xmask = 0;
        std::vector<int> slot(w.nvars + 1, -1);
        for (std::size_t i = 0; i < xs.size(); ++i) {
            xmask |= std::uint64_t(1) << (xs[i] - 1);
            slot[xs[i]] = static_cast<int>(i);
        }
        std::vector<char> low_hit(xs.size() + 1, 0);
        std::optional<std::uint64_t> high_model;
        const std::uint64_t space = std::uint64_t(1) << w.nvars;
        for (std::uint64_t bits = 0; bits < space; ++bits) {
            ++rep.stats.assignments_scanned;
            if (!comp.eval(bits))
                continue;
            std::uint64_t xpat = bits & xmask;
            int wt = std::popcount(xpat);
            if (wt == 0)
                low_hit[0] = 1;
            else if (wt == 1)
                low_hit[1 + slot[std::countr_zero(xpat) + 1]] = 1;
            else if (!high_model)
                high_model = bits;
        }

        auto missing = std::find(low_hit.begin(), low_hit.end(), char(0));
        if (missing == low_hit.end()) {
            rep.low_weight_models.verdict = Verdict::Holds;
            rep.low_weight_models.detail =
                "all " + std::to_string(low_hit.size()) + " x-patterns of weight <= 1 extend";
        } else {
            rep.low_weight_models.verdict = Verdict::Fails;
            std::size_t at = static_cast<std::size_t>(missing - low_hit.begin());
            rep.low_weight_models.detail =
                at == 0 ? "the all-false x-pattern has no satisfying extension"
                        : "the x-pattern with only " + w.name_of(xs[at - 1]) +
                              " true has no satisfying extension";
        }
        if (!high_model) {
            rep.high_weight_excluded.verdict = Verdict::Holds;
            rep.high_weight_excluded.detail = "no model reaches x-weight 2";
        } else {
            rep.high_weight_excluded.verdict = Verdict::Fails;
            Assignment a = Assignment::from_bits(*high_model, w.nvars);
            rep.high_weight_excluded.detail =
                "model of x-weight " + std::to_string(x_weight_of(a, xs)) + " found";
            rep.high_weight_excluded.counterexample = std::move(a);
        }
    } else {
        // Claim by claim through the solver, one pattern or pair at a time.
        SolveOptions so = opts.solve;
        so.time_budget_s = opts.per_check_budget_s;
        bool fail = false, timeout = false;
        for (std::size_t p = 0; p <= xs.size() && !fail; ++p) {
            DnfSet fixed = w;
            for (std::size_t i = 0; i < xs.size(); ++i)
                fixed.formulas.push_back(
                    DnfFormula{{Term({Literal(xs[i], p > 0 && i == p - 1)})}});
            SatResult r = checked_sat(fixed, so);
            add_stats(rep.stats, r.stats);
            if (r.status == SatStatus::Unsat) {
                fail = true;
                rep.low_weight_models.detail =
                    p == 0 ? "the all-false x-pattern has no satisfying extension"
                           : "the x-pattern with only " + w.name_of(xs[p - 1]) +
                                 " true has no satisfying extension";
            } else if (r.status == SatStatus::Timeout) {
                timeout = true;
            }
        }
        rep.low_weight_models.verdict =
            fail ? Verdict::Fails : (timeout ? Verdict::Timeout : Verdict::Holds);
        if (!fail && !timeout)
            rep.low_weight_models.detail =
                "all " + std::to_string(xs.size() + 1) + " x-patterns of weight <= 1 extend";

        fail = timeout = false;
        for (std::size_t i = 0; i < xs.size() && !fail; ++i) {
            for (std::size_t j = i + 1; j < xs.size() && !fail; ++j) {
                SatResult r = checked_sat(with_forced_vars(w, {{xs[i], true}, {xs[j], true}}), so);
                add_stats(rep.stats, r.stats);
                if (r.status == SatStatus::Sat) {
                    fail = true;
                    rep.high_weight_excluded.counterexample = std::move(r.model);
                    rep.high_weight_excluded.detail =
                        "model with " + w.name_of(xs[i]) + " and " + w.name_of(xs[j]) + " true";
                } else if (r.status == SatStatus::Timeout) {
                    timeout = true;
                }
            }
        }
        rep.high_weight_excluded.verdict =
            fail ? Verdict::Fails : (timeout ? Verdict::Timeout : Verdict::Holds);
        if (!fail && !timeout)
            rep.high_weight_excluded.detail = "no pair of x-variables is jointly satisfiable";
    }

    const auto loci = enumerate_weakening_loci(w);
    std::optional<Clock::time_point> deadline;
    if (opts.total_budget_s)
        deadline = t0 + std::chrono::duration_cast<Clock::duration>(
                            std::chrono::duration<double>(*opts.total_budget_s));
    std::vector<LocusOutcome> outcomes(loci.size());
    parallel_for(loci.size(), opts.jobs, [&](std::size_t i) {
        auto budget = remaining_budget(opts.per_check_budget_s, deadline);
        if (!budget) {
            outcomes[i].entry.locus = loci[i];
            outcomes[i].entry.status = LocusStatus::Timeout;
            return;
        }
        SolveOptions so = opts.solve;
        so.time_budget_s = *budget;
        outcomes[i] = check_release_locus(w, loci[i], so, xs);
    });
    rep.loci.reserve(outcomes.size());
    for (auto& oc : outcomes) {
        add_stats(rep.stats, oc.stats);
        tally(rep.counts, oc.entry.status);
        rep.loci.push_back(std::move(oc.entry));
    }
    rep.weakenings_release.verdict = loci_verdict(rep.counts);
    rep.weakenings_release.detail =
        std::to_string(rep.counts.satisfiable) + " of " + std::to_string(rep.counts.loci) +
        " weakenings admit an x-weight >= 2 model";

    rep.verdict = claim_worst({rep.low_weight_models.verdict, rep.high_weight_excluded.verdict,
                               rep.weakenings_release.verdict});
    rep.elapsed_s = seconds_since(t0);
    return rep;
}

BoundsReport check_bounds(const DnfSet& d, const CdXorFormula* g) {
    if (d.formulas.empty())
        throw std::invalid_argument("check_bounds: the set is empty");
    BoundsReport rep;
    BoundsRecord& rec = rep.record;
    rec.k = d.k;
    rec.nvars = d.nvars;
    rec.nformulas = d.formulas.size();
    if (d.family) {
        rec.family_m = d.family->m;
        rec.family_k = d.family->k;
    }
    rec.clause_set_bound = clause_set_var_bound(rec.nformulas);
    rec.var_upper = set_var_upper_bound(rec.k, rec.nformulas);
    if (rec.family_m && rec.family_k) {
        rec.var_lower = family_var_lower_bound(*rec.family_m, *rec.family_k);
        rec.xor_lower = xor_var_lower_bound(*rec.family_m, *rec.family_k);
    }

    auto push = [&rep](std::string name, bool holds, std::string detail) {
        rep.checks.push_back({std::move(name), holds, std::move(detail)});
    };

    push("var-upper", BigInt(rec.nvars) <= rec.var_upper,
         std::to_string(rec.nvars) + " <= " + rec.var_upper.str());
    if (d.family && d.family->family == "tarsi")
        push("clause-set-equality", BigInt(rec.nvars) == rec.clause_set_bound,
             std::to_string(rec.nvars) + " == " + rec.clause_set_bound.str());
    if (d.family && d.family->family == "min_unsat" && rec.family_m && rec.family_k) {
        const int m = *rec.family_m, k = *rec.family_k;
        BigInt four_mk = BigInt(4) * m * k;
        push("formula-count", BigInt(rec.nformulas) < four_mk,
             std::to_string(rec.nformulas) + " < " + four_mk.str());
        BigInt floor_lower = big_pow(BigInt(m) * (k - 1), static_cast<unsigned>(k));
        push("var-lower", BigInt(rec.nvars) > floor_lower,
             std::to_string(rec.nvars) + " > " + floor_lower.str());
        push("var-lower-rational", Rational(BigInt(rec.nvars)) > *rec.var_lower,
             std::to_string(rec.nvars) + " > " + rational_str(*rec.var_lower));
    }
    if (g) {
        std::size_t gvars = 0;
        for (const auto& block : g->blocks)
            gvars += block.size(); // blocks are disjoint by construction
        rec.xor_vars = gvars;
        if (rec.family_m && rec.family_k) {
            const int m = *rec.family_m, k = *rec.family_k;
            BigInt expected =
                BigInt(k + 1) * big_pow(BigInt(m) * (k - 1), static_cast<unsigned>(k));
            push("xor-var-count", BigInt(gvars) == expected,
                 std::to_string(gvars) + " == " + expected.str());
            push("xor-var-lower", Rational(BigInt(gvars)) >= *rec.xor_lower,
                 std::to_string(gvars) + " >= " + rational_str(*rec.xor_lower));
        }
    }

    rep.verdict = std::all_of(rep.checks.begin(), rep.checks.end(),
                              [](const BoundCheck& c) { return c.holds; })
                      ? Verdict::Holds
                      : Verdict::Fails;
    return rep;
}

TarsiScanReport tarsi_scan(int max_clauses, int max_vars, const VerifyOptions& opts) {
    if (max_clauses < 1 || max_vars < 1 || max_clauses > 4 || max_vars > 3)
        throw std::invalid_argument("tarsi_scan: refusing bounds past (4, 3)");
    auto t0 = Clock::now();
    TarsiScanReport rep;
    rep.max_clauses = max_clauses;
    rep.max_vars = max_vars;

    // Every nonempty clause over the fixed universe: variable i is absent,
    // positive, or negative per its base-3 digit.
    std::vector<DnfFormula> universe;
    int codes = 1;
    for (int i = 0; i < max_vars; ++i)
        codes *= 3;
    for (int code = 1; code < codes; ++code) {
        DnfFormula f;
        for (int i = 1, c = code; i <= max_vars; ++i, c /= 3)
            if (int digit = c % 3; digit != 0)
                f.terms.push_back(Term({Literal(static_cast<VariableId>(i), digit == 1)}));
        universe.push_back(std::move(f));
    }

    SolveOptions so = opts.solve;
    so.time_budget_s.reset(); // each query scans at most 2^3 assignments

    auto visit = [&](const std::vector<std::size_t>& pick) {
        ++rep.sets_scanned;
        DnfSet d;
        d.k = 1;
        d.nvars = static_cast<VariableId>(max_vars);
        for (std::size_t i : pick)
            d.formulas.push_back(universe[i]);
        d.default_names();
        SatResult r = brute_force_sat(d, so);
        add_stats(rep.stats, r.stats);
        if (r.status != SatStatus::Unsat)
            return;
        ++rep.unsat_found;
        for (const WeakeningLocus& loc : enumerate_weakening_loci(d)) {
            SatResult wr = brute_force_sat(weaken(d, loc), so);
            add_stats(rep.stats, wr.stats);
            if (wr.status != SatStatus::Sat)
                return;
        }
        ++rep.min_unsat_found;
        if (d.occurring_count() > d.formulas.size() - 1)
            rep.violations.push_back(std::move(d));
    };

    for (std::size_t size = 1;
         size <= static_cast<std::size_t>(max_clauses) && size <= universe.size(); ++size) {
        std::vector<std::size_t> pick(size);
        std::iota(pick.begin(), pick.end(), std::size_t{0});
        for (;;) {
            visit(pick);
            std::size_t i = size;
            while (i > 0 && pick[i - 1] == universe.size() - size + (i - 1))
                --i;
            if (i == 0)
                break;
            ++pick[i - 1];
            for (std::size_t j = i; j < size; ++j)
                pick[j] = pick[j - 1] + 1;
        }
    }

    rep.verdict = rep.violations.empty() ? Verdict::Holds : Verdict::Fails;
    rep.elapsed_s = seconds_since(t0);
    return rep;
}

} // namespace kdnf

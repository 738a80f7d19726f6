#include "kdnf/solver.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdlib>

namespace kdnf {

namespace {

using Clock = std::chrono::steady_clock;

struct Deadline {
    std::optional<Clock::time_point> at;

    explicit Deadline(const std::optional<double>& budget_s) {
        if (budget_s)
            at = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                    std::chrono::duration<double>(*budget_s));
    }
    bool passed() const { return at && Clock::now() >= *at; }
};

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

} // namespace

const char* to_string(SatStatus s) {
    switch (s) {
    case SatStatus::Sat: return "sat";
    case SatStatus::Unsat: return "unsat";
    case SatStatus::Timeout: return "timeout";
    }
    std::abort();
}

const char* to_string(PrecisionVerdict v) {
    switch (v) {
    case PrecisionVerdict::Precise: return "precise";
    case PrecisionVerdict::NotPrecise: return "not-precise";
    case PrecisionVerdict::NotImplied: return "not-implied";
    case PrecisionVerdict::Timeout: return "timeout";
    }
    std::abort();
}

const char* to_string(ImpliesStatus s) {
    switch (s) {
    case ImpliesStatus::Implied: return "implied";
    case ImpliesStatus::NotImplied: return "not-implied";
    case ImpliesStatus::Timeout: return "timeout";
    }
    std::abort();
}

CompiledSet::CompiledSet(const DnfSet& d) : nvars(d.nvars) {
    if (d.nvars > 63) throw CapExceeded("mask compilation supports at most 63 variables");
    formulas.reserve(d.formulas.size());
    for (const auto& f : d.formulas) {
        std::vector<MaskTerm> masks;
        masks.reserve(f.terms.size());
        for (const auto& t : f.terms) {
            MaskTerm m;
            for (const Literal& l : t.literals())
                (l.positive ? m.pos : m.neg) |= std::uint64_t{1} << (l.var - 1);
            masks.push_back(m);
        }
        formulas.push_back(std::move(masks));
    }
}

bool CompiledSet::eval(std::uint64_t bits) const {
    for (const auto& f : formulas) {
        bool value = false;
        for (const MaskTerm& t : f)
            if ((bits & t.pos) == t.pos && (bits & t.neg) == 0) {
                value = true;
                break;
            }
        if (!value) return false;
    }
    return true;
}

SatResult brute_force_sat(const DnfSet& d, const SolveOptions& opts) {
    if (d.nvars > opts.brute_cap)
        throw CapExceeded("exhaustive enumeration capped at " + std::to_string(opts.brute_cap) +
                          " variables, set has " + std::to_string(d.nvars));
    const auto t0 = Clock::now();
    Deadline deadline(opts.time_budget_s);
    SatResult r;
    for (const auto& f : d.formulas)
        if (f.terms.empty()) { // constant false, no scan needed
            r.stats.elapsed_s = seconds_since(t0);
            return r;
        }
    const CompiledSet cs(d);
    const std::uint64_t total = std::uint64_t{1} << d.nvars;
    for (std::uint64_t a = 0; a < total; ++a) {
        if ((a & 0xffff) == 0xffff && deadline.passed()) {
            r.status = SatStatus::Timeout;
            r.stats.assignments_scanned = a;
            r.stats.elapsed_s = seconds_since(t0);
            return r;
        }
        if (cs.eval(a)) {
            r.status = SatStatus::Sat;
            r.model = Assignment::from_bits(a, d.nvars);
            r.stats.assignments_scanned = a + 1;
            r.stats.elapsed_s = seconds_since(t0);
            return r;
        }
    }
    r.stats.assignments_scanned = total;
    r.stats.elapsed_s = seconds_since(t0);
    return r;
}

Clausification clausify(const DnfSet& d) {
    Clausification out;
    out.original_vars = d.nvars;
    VariableId next = d.nvars;
    std::vector<std::vector<VariableId>> ext_of(d.formulas.size());
    for (std::size_t fi = 0; fi < d.formulas.size(); ++fi) {
        const auto& terms = d.formulas[fi].terms;
        ext_of[fi].assign(terms.size(), 0);
        for (std::size_t ti = 0; ti < terms.size(); ++ti)
            if (terms[ti].size() >= 2) {
                ext_of[fi][ti] = ++next;
                out.extensions.push_back({fi, ti, next});
            }
    }
    out.cnf.nvars = next;
    for (std::size_t fi = 0; fi < d.formulas.size(); ++fi) {
        const auto& terms = d.formulas[fi].terms;
        const bool constant_true =
            std::any_of(terms.begin(), terms.end(), [](const Term& t) { return t.empty(); });
        if (!constant_true) {
            CnfClause c;
            for (std::size_t ti = 0; ti < terms.size(); ++ti)
                c.lits.push_back(terms[ti].size() == 1 ? terms[ti].literals().front()
                                                       : pos(ext_of[fi][ti]));
            out.cnf.clauses.push_back(std::move(c));
        }
        for (std::size_t ti = 0; ti < terms.size(); ++ti)
            if (terms[ti].size() >= 2)
                for (const Literal& l : terms[ti].literals())
                    out.cnf.clauses.push_back({{neg(ext_of[fi][ti]), l}});
    }
    return out;
}

SatResult dpll_sat(const CnfFormula& f, const SolveOptions& opts) {
    const auto t0 = Clock::now();
    Deadline deadline(opts.time_budget_s);
    SatResult r;

    const std::size_t n = f.nvars;
    const std::size_t m = f.clauses.size();
    for (const auto& c : f.clauses)
        if (c.lits.empty()) {
            r.stats.elapsed_s = seconds_since(t0);
            return r;
        }

    std::vector<std::int8_t> val(n + 1, 0);
    std::vector<std::vector<std::uint32_t>> occ_pos(n + 1), occ_neg(n + 1);
    for (std::size_t ci = 0; ci < m; ++ci)
        for (const Literal& l : f.clauses[ci].lits)
            (l.positive ? occ_pos : occ_neg)[l.var].push_back(static_cast<std::uint32_t>(ci));
    std::vector<std::uint32_t> ntrue(m, 0), nfalse(m, 0);

    std::vector<VariableId> trail;
    trail.reserve(n);
    std::vector<Literal> queue;
    std::uint64_t since_check = 0;
    bool timed_out = false;

    // Updates clause counters; detects units and conflicts among the clauses
    // this literal falsifies. On conflict, keeps updating counters so the
    // trail can still be undone uniformly.
    auto assign = [&](Literal l) -> bool {
        val[l.var] = l.positive ? 1 : -1;
        trail.push_back(l.var);
        for (std::uint32_t ci : (l.positive ? occ_pos : occ_neg)[l.var]) ++ntrue[ci];
        bool ok = true;
        for (std::uint32_t ci : (l.positive ? occ_neg : occ_pos)[l.var]) {
            ++nfalse[ci];
            if (ok && ntrue[ci] == 0) {
                const auto& lits = f.clauses[ci].lits;
                const std::size_t open = lits.size() - nfalse[ci];
                if (open == 0) {
                    ok = false;
                } else if (open == 1) {
                    for (const Literal& u : lits)
                        if (val[u.var] == 0) {
                            queue.push_back(u);
                            break;
                        }
                }
            }
        }
        return ok;
    };

    auto propagate = [&]() -> bool {
        while (!queue.empty()) {
            if ((++since_check & 511) == 0 && deadline.passed()) {
                timed_out = true;
                return false;
            }
            const Literal l = queue.back();
            queue.pop_back();
            if (val[l.var] != 0) {
                if ((val[l.var] == 1) != l.positive) return false;
                continue;
            }
            ++r.stats.propagations;
            if (!assign(l)) return false;
        }
        return true;
    };

    auto undo_to = [&](std::size_t keep) {
        while (trail.size() > keep) {
            const VariableId v = trail.back();
            trail.pop_back();
            const bool was_true = val[v] == 1;
            for (std::uint32_t ci : (was_true ? occ_pos : occ_neg)[v]) --ntrue[ci];
            for (std::uint32_t ci : (was_true ? occ_neg : occ_pos)[v]) --nfalse[ci];
            val[v] = 0;
        }
        queue.clear();
    };

    struct Frame {
        VariableId var;
        std::size_t trail_size;
        bool flipped;
    };
    std::vector<Frame> stack;
    VariableId cursor = 1;
    bool unsat = false;

    for (std::size_t ci = 0; ci < m; ++ci)
        if (f.clauses[ci].lits.size() == 1) queue.push_back(f.clauses[ci].lits.front());
    bool ok = propagate();
    if (!ok && !timed_out) unsat = true;

    while (ok && !timed_out) {
        if (deadline.passed()) {
            timed_out = true;
            break;
        }
        while (cursor <= n && val[cursor] != 0) ++cursor;
        if (cursor > n) break; // all variables assigned without conflict
        stack.push_back({static_cast<VariableId>(cursor), trail.size(), false});
        ++r.stats.decisions;
        ok = assign(neg(cursor)) && propagate();
        while (!ok && !timed_out) {
            if (stack.empty()) {
                unsat = true;
                break;
            }
            Frame& top = stack.back();
            undo_to(top.trail_size);
            cursor = top.var;
            if (!top.flipped) {
                top.flipped = true;
                ok = assign(pos(top.var)) && propagate();
            } else {
                stack.pop_back();
            }
        }
        if (unsat) break;
    }

    r.stats.elapsed_s = seconds_since(t0);
    if (timed_out) {
        r.status = SatStatus::Timeout;
    } else if (!unsat) {
        r.status = SatStatus::Sat;
        Assignment a(n);
        for (VariableId v = 1; v <= n; ++v) a.set(v, val[v] == 1);
        r.model = std::move(a);
    }
    return r;
}

SatResult sat(const DnfSet& d, const SolveOptions& opts) {
    const bool brute = opts.strategy == SolveOptions::Strategy::Brute ||
                       (opts.strategy == SolveOptions::Strategy::Auto &&
                        d.nvars <= opts.brute_cap && d.nvars <= 63);
    if (brute) return brute_force_sat(d, opts);

    SatResult r = dpll_sat(clausify(d).cnf, opts);
    if (r.status == SatStatus::Sat) {
        Assignment restricted(d.nvars);
        for (VariableId v = 1; v <= d.nvars; ++v) restricted.set(v, r.model->value(v));
        if (!eval_set(d, restricted))
            throw std::logic_error("clausification returned a model the set rejects");
        r.model = std::move(restricted);
    }
    return r;
}

CnfFormula encode_xor_atom(const XorAtom& atom, bool target, std::size_t width_cap) {
    const std::size_t w = atom.block.size();
    if (w == 0) throw std::invalid_argument("xor atom over empty block");
    if (w > width_cap)
        throw CapExceeded("xor expansion capped at width " + std::to_string(width_cap));
    // The atom holds iff the block parity equals (sign ? value : !value), so
    // forbid every sign pattern of the other parity.
    const unsigned want = (atom.sign ? target : !target) ? 1u : 0u;
    CnfFormula out;
    out.nvars = *std::max_element(atom.block.begin(), atom.block.end());
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << w); ++s) {
        if ((static_cast<unsigned>(std::popcount(s)) & 1u) == want) continue;
        CnfClause c;
        for (std::size_t i = 0; i < w; ++i)
            c.lits.push_back({atom.block[i], (s >> i & 1) == 0});
        out.clauses.push_back(std::move(c));
    }
    return out;
}

namespace {

DnfSet embed_in_universe(const DnfSet& d, VariableId universe) {
    DnfSet base = d;
    base.nvars = std::max(d.nvars, universe);
    if (base.names.empty()) base.default_names();
    for (VariableId v = d.nvars + 1; v <= base.nvars; ++v)
        base.names.push_back("x_" + std::to_string(v));
    return base;
}

// Appends CNF clauses pinning the atom false, each clause as a disjunction
// of single-literal terms.
void append_atom_negation(DnfSet& query, const XorAtom& atom) {
    for (const CnfClause& c : encode_xor_atom(atom, false).clauses) {
        DnfFormula f;
        for (const Literal& l : c.lits) f.terms.push_back(Term{{l}});
        query.formulas.push_back(std::move(f));
    }
}

} // namespace

ImplicationResult implies(const DnfSet& d, const CdXorFormula& g, const SolveOptions& opts) {
    const DnfSet base = embed_in_universe(d, g.nvars);
    ImplicationResult out;
    bool timeout = false;
    for (std::size_t ci = 0; ci < g.clauses.size(); ++ci) {
        DnfSet query = base;
        for (const XorAtom& atom : g.clauses[ci]) append_atom_negation(query, atom);
        const SatResult r = sat(query, opts);
        out.checks.push_back({ci, r.status});
        if (r.status == SatStatus::Sat && !out.violated_clause) {
            out.violated_clause = ci;
            out.witness = r.model;
        }
        timeout = timeout || r.status == SatStatus::Timeout;
    }
    if (out.violated_clause)
        out.status = ImpliesStatus::NotImplied;
    else if (timeout)
        out.status = ImpliesStatus::Timeout;
    return out;
}

PrecisionResult check_precise_implication(const DnfSet& d, const CdXorFormula& g,
                                          const SolveOptions& opts) {
    PrecisionResult out;
    out.implication = implies(d, g, opts);
    if (out.implication.status != ImpliesStatus::Implied) {
        out.verdict = out.implication.status == ImpliesStatus::Timeout ? PrecisionVerdict::Timeout
                                                                       : PrecisionVerdict::NotImplied;
        return out;
    }

    const DnfSet base = embed_in_universe(d, g.nvars);
    bool still_implied = false, timeout = false;
    for (std::size_t ci = 0; ci < g.clauses.size(); ++ci) {
        for (std::size_t ai = 0; ai < g.clauses[ci].size(); ++ai) {
            DnfSet query = base;
            for (std::size_t aj = 0; aj < g.clauses[ci].size(); ++aj)
                if (aj != ai) append_atom_negation(query, g.clauses[ci][aj]);
            const SatResult r = sat(query, opts);
            out.atoms.push_back({ci, ai, r.status, r.model});
            still_implied = still_implied || r.status == SatStatus::Unsat;
            timeout = timeout || r.status == SatStatus::Timeout;
        }
    }
    if (still_implied)
        out.verdict = PrecisionVerdict::NotPrecise;
    else if (timeout)
        out.verdict = PrecisionVerdict::Timeout;
    return out;
}

} // namespace kdnf

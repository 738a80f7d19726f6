#pragma once

// Satisfiability engine: exhaustive enumeration for small universes, a
// clausifying DPLL search for everything else, and the XOR implication
// queries built on top of both.

#include "kdnf/cnf.hpp"
#include "kdnf/formula.hpp"

#include <chrono>
#include <cstdint>
#include <optional>
#include <stdexcept>

namespace kdnf {

enum class SatStatus { Sat, Unsat, Timeout };

const char* to_string(SatStatus s);

struct SolverStats {
    std::uint64_t decisions = 0;
    std::uint64_t propagations = 0;
    std::uint64_t assignments_scanned = 0;
    double elapsed_s = 0.0;
};

struct SatResult {
    SatStatus status = SatStatus::Unsat;
    std::optional<Assignment> model; // present iff status == Sat
    SolverStats stats;
};

/// Thrown when a query exceeds a hard capacity limit (too many variables for
/// enumeration, too wide a block for XOR expansion).
struct CapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SolveOptions {
    enum class Strategy { Auto, Brute, Search };
    Strategy strategy = Strategy::Auto;
    std::size_t brute_cap = 24; // max variables for exhaustive enumeration
    std::optional<double> time_budget_s;
};

/// DNF set compiled to bit masks for exhaustive scans over <= 63 variables.
struct CompiledSet {
    struct MaskTerm {
        std::uint64_t pos = 0, neg = 0;
    };
    std::vector<std::vector<MaskTerm>> formulas;
    std::size_t nvars = 0;

    explicit CompiledSet(const DnfSet& d); // throws CapExceeded past 63 vars

    /// Evaluates under the assignment whose bit i-1 gives variable i.
    bool eval(std::uint64_t bits) const;
};

/// Scans assignments 0, 1, ... in ascending binary order; the model, when one
/// exists, is always the numerically smallest.
SatResult brute_force_sat(const DnfSet& d, const SolveOptions& opts = {});

/// Equisatisfiable CNF. Terms of size >= 2 get a fresh extension variable a
/// (numbered after the originals, in term enumeration order) constrained one
/// way only: a -> l for each literal l of the term. Per formula the clause
/// over term proxies comes first, then the implication clauses; a formula
/// containing an empty term contributes no formula clause, and an empty
/// formula contributes the empty clause.
struct Clausification {
    CnfFormula cnf;
    struct TermExt {
        std::size_t formula, term;
        VariableId var;
    };
    std::vector<TermExt> extensions;
    VariableId original_vars = 0;
};

Clausification clausify(const DnfSet& d);

/// Complete DPLL with unit propagation; branches on the lowest-numbered
/// unassigned variable, trying false first.
SatResult dpll_sat(const CnfFormula& f, const SolveOptions& opts = {});

/// Dispatches per the options; models are restricted to the original
/// variables and re-validated against the set before being returned.
SatResult sat(const DnfSet& d, const SolveOptions& opts = {});

/// CNF clauses (over the block variables) forcing the atom to the target
/// value: one clause per parity-violating sign pattern, patterns in ascending
/// binary order with bit i giving the sign of block position i. A block of
/// width w yields 2^(w-1) clauses of width w; widths past the cap throw.
CnfFormula encode_xor_atom(const XorAtom& atom, bool target, std::size_t width_cap = 16);

enum class ImpliesStatus { Implied, NotImplied, Timeout };

const char* to_string(ImpliesStatus s);

struct ImplicationResult {
    ImpliesStatus status = ImpliesStatus::Implied;
    struct ClauseCheck {
        std::size_t clause;
        SatStatus status; // of d AND NOT C
    };
    std::vector<ClauseCheck> checks;
    std::optional<std::size_t> violated_clause;
    std::optional<Assignment> witness; // model of d falsifying that clause
};

/// Checks d |= g clause by clause: d AND NOT C must be unsatisfiable for
/// every clause C of g. All clauses are checked even after a violation.
ImplicationResult implies(const DnfSet& d, const CdXorFormula& g, const SolveOptions& opts = {});

enum class PrecisionVerdict { Precise, NotPrecise, NotImplied, Timeout };

const char* to_string(PrecisionVerdict v);

/// Implication must hold, and dropping any single atom occurrence from any
/// clause must break it.
struct PrecisionResult {
    PrecisionVerdict verdict = PrecisionVerdict::Precise;
    ImplicationResult implication;
    struct AtomCheck {
        std::size_t clause, atom;
        SatStatus status; // Sat = removal breaks the implication
        std::optional<Assignment> witness;
    };
    std::vector<AtomCheck> atoms;
};

PrecisionResult check_precise_implication(const DnfSet& d, const CdXorFormula& g,
                                          const SolveOptions& opts = {});

} // namespace kdnf

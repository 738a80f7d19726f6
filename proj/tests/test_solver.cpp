#include <kdnf/solver.hpp>

#include <doctest.h>

#include <random>

#include "support/random_sets.hpp"

using namespace kdnf;

namespace {

Term T(std::vector<Literal> lits) { return Term{std::move(lits)}; }

DnfSet make_set(std::vector<DnfFormula> formulas, VariableId nvars, int k) {
    DnfSet d;
    d.formulas = std::move(formulas);
    d.nvars = nvars;
    d.k = k;
    d.default_names();
    return d;
}

// x1, x2, ..., xn, and ~x1 | ... | ~xn.
DnfSet contradiction_chain(VariableId n) {
    std::vector<DnfFormula> fs;
    DnfFormula last;
    for (VariableId v = 1; v <= n; ++v) {
        fs.push_back({{T({pos(v)})}});
        last.terms.push_back(T({neg(v)}));
    }
    fs.push_back(std::move(last));
    return make_set(std::move(fs), n, 1);
}

} // namespace

TEST_CASE("brute force returns the numerically smallest model") {
    const DnfSet d = make_set({{{T({pos(1), neg(2)})}}, {{T({pos(1)})}}}, 2, 2);
    const SatResult r = brute_force_sat(d);
    REQUIRE(r.status == SatStatus::Sat);
    CHECK(r.model->value(1));
    CHECK_FALSE(r.model->value(2));
    CHECK(r.stats.assignments_scanned == 2); // 00 rejected, 01 accepted
}

TEST_CASE("brute force scans the whole space before reporting unsat") {
    const DnfSet d = contradiction_chain(3);
    const SatResult r = brute_force_sat(d);
    CHECK(r.status == SatStatus::Unsat);
    CHECK(r.stats.assignments_scanned == 8);
    CHECK_FALSE(r.model.has_value());
}

TEST_CASE("brute force refuses universes past its cap") {
    DnfSet d = make_set({{{T({pos(25)})}}}, 25, 1);
    CHECK_THROWS_AS(brute_force_sat(d), CapExceeded);
    SolveOptions opts;
    opts.brute_cap = 25;
    CHECK_NOTHROW(brute_force_sat(d, opts));
}

TEST_CASE("an empty formula makes the whole set unsatisfiable without scanning") {
    DnfSet d = contradiction_chain(2);
    d.formulas.push_back(DnfFormula{});
    const SatResult r = brute_force_sat(d);
    CHECK(r.status == SatStatus::Unsat);
    CHECK(r.stats.assignments_scanned == 0);
}

TEST_CASE("clausification introduces one extension variable per wide term") {
    // {(x1 & x2) | x3} over three variables.
    const DnfSet d = make_set({{{T({pos(1), pos(2)}), T({pos(3)})}}}, 3, 2);
    const Clausification c = clausify(d);
    CHECK(c.original_vars == 3);
    CHECK(c.cnf.nvars == 4);
    REQUIRE(c.extensions.size() == 1);
    CHECK(c.extensions[0].formula == 0);
    CHECK(c.extensions[0].term == 0);
    CHECK(c.extensions[0].var == 4);

    REQUIRE(c.cnf.clauses.size() == 3);
    CHECK(c.cnf.clauses[0] == CnfClause{{pos(4), pos(3)}});
    CHECK(c.cnf.clauses[1] == CnfClause{{neg(4), pos(1)}});
    CHECK(c.cnf.clauses[2] == CnfClause{{neg(4), pos(2)}});
}

TEST_CASE("clausification drops the formula clause when an empty term is present") {
    const DnfSet d = make_set({{{T({pos(1)}), Term{}}}}, 1, 1);
    const Clausification c = clausify(d);
    CHECK(c.cnf.clauses.empty());
    CHECK(c.cnf.nvars == 1);
}

TEST_CASE("clausification maps the empty formula to the empty clause") {
    const DnfSet d = make_set({DnfFormula{}}, 2, 1);
    const Clausification c = clausify(d);
    REQUIRE(c.cnf.clauses.size() == 1);
    CHECK(c.cnf.clauses[0].lits.empty());
    CHECK(dpll_sat(c.cnf).status == SatStatus::Unsat);
}

TEST_CASE("dpll solves trivial formulas deterministically") {
    CnfFormula empty;
    empty.nvars = 3;
    const SatResult r = dpll_sat(empty);
    REQUIRE(r.status == SatStatus::Sat);
    CHECK(*r.model == Assignment(3)); // all false

    CnfFormula units;
    units.nvars = 2;
    units.clauses = {{{pos(2)}}, {{neg(1)}}};
    const SatResult u = dpll_sat(units);
    REQUIRE(u.status == SatStatus::Sat);
    CHECK_FALSE(u.model->value(1));
    CHECK(u.model->value(2));

    CnfFormula conflict;
    conflict.nvars = 1;
    conflict.clauses = {{{pos(1)}}, {{neg(1)}}};
    CHECK(dpll_sat(conflict).status == SatStatus::Unsat);
}

TEST_CASE("search agrees with exhaustive enumeration on random sets") {
    std::mt19937 rng(19937);
    SolveOptions search;
    search.strategy = SolveOptions::Strategy::Search;
    for (int round = 0; round < 300; ++round) {
        const DnfSet d = testing::random_set(rng, {.max_vars = 12});
        const SatResult ref = brute_force_sat(d);
        const SatResult got = sat(d, search);
        REQUIRE(got.status == ref.status);
        if (got.status == SatStatus::Sat) {
            CHECK(got.model->size() == d.nvars);
            CHECK(eval_set(d, *got.model));
        }
    }
}

TEST_CASE("auto strategy dispatches on universe size") {
    const DnfSet d = contradiction_chain(5);
    SolveOptions opts;
    opts.brute_cap = 4;
    const SatResult r = sat(d, opts); // 5 vars: forced through the search path
    CHECK(r.status == SatStatus::Unsat);
    CHECK(r.stats.assignments_scanned == 0);
    CHECK(sat(d).stats.assignments_scanned == 32);
}

TEST_CASE("a zero budget reports timeout instead of an answer") {
    SolveOptions opts;
    opts.time_budget_s = 0.0;
    opts.strategy = SolveOptions::Strategy::Search;
    const DnfSet d = make_set({{{T({pos(1), pos(2)}), T({pos(3), pos(4)})}}}, 4, 2);
    CHECK(sat(d, opts).status == SatStatus::Timeout);

    const DnfSet big = contradiction_chain(20);
    SolveOptions brute;
    brute.time_budget_s = 0.0;
    const SatResult r = brute_force_sat(big, brute);
    CHECK(r.status == SatStatus::Timeout);
    CHECK(r.stats.assignments_scanned == 0xffff);
}

TEST_CASE("xor atom encodings forbid exactly the wrong-parity patterns") {
    const XorAtom atom{true, {1, 2}};
    const CnfFormula on = encode_xor_atom(atom, true);
    REQUIRE(on.clauses.size() == 2);
    CHECK(on.clauses[0] == CnfClause{{pos(1), pos(2)}});
    CHECK(on.clauses[1] == CnfClause{{neg(1), neg(2)}});

    const CnfFormula off = encode_xor_atom(atom, false);
    REQUIRE(off.clauses.size() == 2);
    CHECK(off.clauses[0] == CnfClause{{neg(1), pos(2)}});
    CHECK(off.clauses[1] == CnfClause{{pos(1), neg(2)}});

    // Negating the atom is the same as flipping the target.
    const XorAtom negated{false, {1, 2}};
    CHECK(encode_xor_atom(negated, true).clauses == off.clauses);

    const CnfFormula wide = encode_xor_atom(XorAtom{true, {1, 2, 3}}, true);
    CHECK(wide.clauses.size() == 4);
    CHECK(wide.clauses[0] == CnfClause{{pos(1), pos(2), pos(3)}});
    CHECK(wide.clauses[3] == CnfClause{{pos(1), neg(2), neg(3)}});

    CHECK_THROWS_AS(encode_xor_atom(XorAtom{true, std::vector<VariableId>(17, 1)}, true),
                    CapExceeded);
}

TEST_CASE("xor atom encodings are semantically exact") {
    std::mt19937 rng(421);
    std::bernoulli_distribution flip(0.5);
    for (int w = 1; w <= 4; ++w) {
        std::vector<VariableId> block;
        for (int i = 1; i <= w; ++i) block.push_back(static_cast<VariableId>(i));
        for (int round = 0; round < 8; ++round) {
            const XorAtom atom{flip(rng), block};
            const bool target = flip(rng);
            const CnfFormula enc = encode_xor_atom(atom, target);
            for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << w); ++bits) {
                const Assignment a = Assignment::from_bits(bits, static_cast<std::size_t>(w));
                CHECK(eval_cnf(enc, a) == (eval_atom(atom, a) == target));
            }
        }
    }
}

TEST_CASE("implication checking matches the model-inclusion definition") {
    std::mt19937 rng(5150);
    for (int round = 0; round < 150; ++round) {
        const DnfSet d = testing::random_set(rng, {.max_vars = 6, .max_width = 2});
        const CdXorFormula g = testing::random_cdxor(rng, {.blocks = 2, .block_width = 2});
        const VariableId universe = std::max(d.nvars, g.nvars);

        bool expected = true;
        for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << universe); ++bits) {
            const Assignment a = Assignment::from_bits(bits, universe);
            if (eval_set(d, a) && !eval_cdxor(g, a)) {
                expected = false;
                break;
            }
        }

        const ImplicationResult r = implies(d, g);
        CHECK((r.status == ImpliesStatus::Implied) == expected);
        CHECK(r.checks.size() == g.clauses.size());
        if (r.status == ImpliesStatus::NotImplied) {
            REQUIRE(r.witness.has_value());
            REQUIRE(r.violated_clause.has_value());
            CHECK(eval_set(d, *r.witness));
            bool clause_value = false;
            for (const XorAtom& atom : g.clauses[*r.violated_clause])
                clause_value = clause_value || eval_atom(atom, *r.witness);
            CHECK_FALSE(clause_value);
        }
    }
}

TEST_CASE("an unsatisfiable set implies everything") {
    const DnfSet d = contradiction_chain(2);
    CdXorFormula g;
    g.block_width = 2;
    g.blocks = {{1, 2}};
    g.nvars = 2;
    g.clauses = {{XorAtom{true, {1, 2}}}};
    CHECK(implies(d, g).status == ImpliesStatus::Implied);
}

TEST_CASE("precise implication demands that every atom occurrence matters") {
    // y1 and y2 are forced true, so the block parity is 0.
    const DnfSet d = make_set({{{T({pos(1)})}}, {{T({pos(2)})}}}, 2, 1);
    CdXorFormula g;
    g.block_width = 2;
    g.blocks = {{1, 2}};
    g.nvars = 2;

    g.clauses = {{XorAtom{false, {1, 2}}}};
    const PrecisionResult precise = check_precise_implication(d, g);
    CHECK(precise.verdict == PrecisionVerdict::Precise);
    REQUIRE(precise.atoms.size() == 1);
    CHECK(precise.atoms[0].status == SatStatus::Sat);
    REQUIRE(precise.atoms[0].witness.has_value());
    CHECK(precise.atoms[0].witness->value(1));
    CHECK(precise.atoms[0].witness->value(2));

    // Adding a redundant atom keeps the implication but breaks precision.
    g.clauses = {{XorAtom{true, {1, 2}}, XorAtom{false, {1, 2}}}};
    const PrecisionResult sloppy = check_precise_implication(d, g);
    CHECK(sloppy.verdict == PrecisionVerdict::NotPrecise);
    REQUIRE(sloppy.atoms.size() == 2);
    CHECK(sloppy.atoms[0].status == SatStatus::Unsat); // dropping XOR leaves ~XOR, still implied
    CHECK(sloppy.atoms[1].status == SatStatus::Sat);

    // A set with models outside g is simply not an implication.
    const DnfSet open = make_set({}, 2, 1);
    g.clauses = {{XorAtom{true, {1, 2}}}};
    const PrecisionResult not_implied = check_precise_implication(open, g);
    CHECK(not_implied.verdict == PrecisionVerdict::NotImplied);
    CHECK(not_implied.implication.violated_clause == 0);
}

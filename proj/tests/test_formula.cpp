#include <kdnf/formula.hpp>

#include <doctest.h>

#include <random>

#include "support/random_sets.hpp"

using namespace kdnf;

namespace {

Term T(std::vector<Literal> lits) { return Term{std::move(lits)}; }

DnfSet two_var_set() {
    // {x1 & ~x2} , {x2}
    DnfSet d;
    d.formulas.push_back({{T({pos(1), neg(2)})}});
    d.formulas.push_back({{T({pos(2)})}});
    d.k = 2;
    d.nvars = 2;
    d.default_names();
    return d;
}

} // namespace

TEST_CASE("variable names render and parse structured labels") {
    CHECK(VarName{"x", {}, {3}}.str() == "x_3");
    CHECK(VarName{"u", {2}, {1}}.str() == "u^2_1");
    CHECK(VarName{"y", {1, 2}, {3, 4}}.str() == "y^1,2_3,4");
    CHECK(VarName{"v", {}, {}}.str() == "v");

    for (const char* s : {"x_3", "u^2_1", "y^1,2_3,4", "v", "y^2,1_1,2,2"}) {
        const VarName n = VarName::parse(s);
        CHECK(n.str() == s);
    }

    CHECK_THROWS_AS(VarName::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(VarName::parse("x^_1"), std::invalid_argument);
    CHECK_THROWS_AS(VarName::parse("x_"), std::invalid_argument);
    CHECK_THROWS_AS(VarName::parse("x_1junk"), std::invalid_argument);
    CHECK_THROWS_AS(VarName::parse("3x"), std::invalid_argument);
}

TEST_CASE("terms canonicalize literal order and reject duplicate variables") {
    const Term t({neg(3), pos(1)});
    REQUIRE(t.size() == 2);
    CHECK(t.literals()[0] == pos(1));
    CHECK(t.literals()[1] == neg(3));

    CHECK_THROWS_AS(Term({pos(1), neg(1)}), std::invalid_argument);
    CHECK_THROWS_AS(Term({pos(2), pos(2)}), std::invalid_argument);

    const Term dropped = t.without(0);
    REQUIRE(dropped.size() == 1);
    CHECK(dropped.literals()[0] == neg(3));
    CHECK(t.size() == 2); // original untouched
}

TEST_CASE("evaluation treats the empty term as true and the empty formula as false") {
    const Assignment a(3); // all false
    CHECK(eval_term(Term{}, a));
    CHECK_FALSE(eval_formula(DnfFormula{}, a));
    CHECK(eval_formula(DnfFormula{{Term{}}}, a));

    DnfSet d;
    d.nvars = 3;
    d.k = 1;
    d.default_names();
    CHECK(eval_set(d, a)); // empty conjunction
    d.formulas.push_back(DnfFormula{});
    CHECK_FALSE(eval_set(d, a));
}

TEST_CASE("evaluation of a two-formula set") {
    const DnfSet d = two_var_set();
    CHECK_FALSE(eval_set(d, Assignment::from_bits(0b00, 2)));
    CHECK_FALSE(eval_set(d, Assignment::from_bits(0b01, 2))); // x1, second formula fails
    CHECK_FALSE(eval_set(d, Assignment::from_bits(0b10, 2)));
    CHECK_FALSE(eval_set(d, Assignment::from_bits(0b11, 2))); // ~x2 kills the first term
}

TEST_CASE("assignments are total: evaluating an out-of-range variable throws") {
    const Assignment a(2);
    const Term t({pos(5)});
    CHECK_THROWS_AS(eval_term(t, a), EvalError);
    CHECK_THROWS_AS(a.value(0), EvalError);
    CHECK(Assignment::from_bits(0b101, 3).value(3));
    CHECK_FALSE(Assignment::from_bits(0b101, 3).value(2));
}

TEST_CASE("weakening loci enumerate every literal occurrence in order") {
    const DnfSet d = two_var_set();
    const auto loci = enumerate_weakening_loci(d);
    REQUIRE(loci.size() == 3);
    CHECK(loci[0] == WeakeningLocus{0, 0, 0});
    CHECK(loci[1] == WeakeningLocus{0, 0, 1});
    CHECK(loci[2] == WeakeningLocus{1, 0, 0});
}

TEST_CASE("weakening removes one literal and preserves the universe") {
    const DnfSet d = two_var_set();

    const DnfSet w = weaken(d, {0, 0, 1}); // drop ~x2 from x1 & ~x2
    CHECK(w.nvars == 2);
    CHECK(w.formulas[0].terms[0] == Term({pos(1)}));
    CHECK(w.formulas[1] == d.formulas[1]);
    CHECK(eval_set(w, Assignment::from_bits(0b11, 2)));

    // Weakening a unit term leaves the empty, constant-true term behind.
    const DnfSet u = weaken(d, {1, 0, 0});
    CHECK(u.formulas[1].terms[0].empty());
    CHECK(u.nvars == 2); // x2 is now orphaned but stays in the universe
    CHECK(u.occurring_count() == 2);
    CHECK(eval_set(u, Assignment::from_bits(0b01, 2)));

    CHECK_THROWS_AS(weaken(d, {5, 0, 0}), std::out_of_range);
    CHECK_THROWS_AS(weaken(d, {0, 0, 7}), std::out_of_range);
}

TEST_CASE("weakening is monotone: every model survives") {
    std::mt19937 rng(7001);
    for (int round = 0; round < 200; ++round) {
        const DnfSet d = testing::random_set(rng, {.max_vars = 8});
        const auto loci = enumerate_weakening_loci(d);
        if (loci.empty()) continue;
        std::uniform_int_distribution<std::size_t> pick(0, loci.size() - 1);
        const DnfSet w = weaken(d, loci[pick(rng)]);
        for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << d.nvars); ++bits) {
            const Assignment a = Assignment::from_bits(bits, d.nvars);
            if (eval_set(d, a)) CHECK(eval_set(w, a));
        }
    }
}

TEST_CASE("family descriptors round-trip through their text form") {
    const FamilyDescriptor f{"min-unsat", 2, 3, std::nullopt, 4};
    const auto parsed = FamilyDescriptor::parse(f.str());
    REQUIRE(parsed.has_value());
    CHECK(*parsed == f);

    const FamilyDescriptor g{"tarsi", std::nullopt, std::nullopt, 5, std::nullopt};
    CHECK(FamilyDescriptor::parse(g.str()) == g);
    CHECK_FALSE(FamilyDescriptor::parse("").has_value());
}

TEST_CASE("structural validation rejects malformed sets") {
    DnfSet d = two_var_set();
    CHECK_NOTHROW(d.validate());

    DnfSet bad_k = d;
    bad_k.k = 1; // contains a 2-literal term
    CHECK_THROWS_AS(bad_k.validate(), std::invalid_argument);

    DnfSet bad_var = d;
    bad_var.nvars = 1;
    bad_var.names.resize(1);
    CHECK_THROWS_AS(bad_var.validate(), std::invalid_argument);

    DnfSet bad_names = d;
    bad_names.names.pop_back();
    CHECK_THROWS_AS(bad_names.validate(), std::invalid_argument);
}

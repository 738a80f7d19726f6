#include <kdnf/io.hpp>

#include <doctest.h>

#include <kdnf/families.hpp>
#include <kdnf/solver.hpp>

#include <random>
#include <sstream>

#include "support/random_sets.hpp"

using namespace kdnf;
using namespace kdnf::families;

namespace {

DnfSet reparse(const DnfSet& d) { return parse_kdnf(serialize_kdnf(d)); }

} // namespace

TEST_CASE("kdnf serialization of the smallest unit-clause family, byte for byte") {
    CHECK(serialize_kdnf(tarsi_cnf(2)) == "p kdnf 2 3 1\n"
                                          "c family tarsi n=2\n"
                                          "1\n"
                                          "2\n"
                                          "-1 | -2\n");
}

TEST_CASE("kdnf round-trips are structurally exact") {
    for (const DnfSet& d : {tarsi_cnf(1), tarsi_cnf(5), naive_pair(3),
                            substitute_or_of_ands(tarsi_cnf(2), 2), weight_gadget(3, 3),
                            min_unsat_set(2, 2), xor_implication_pair(2, 2).d}) {
        CAPTURE(serialize_kdnf(d).substr(0, 40));
        CHECK(reparse(d) == d);
    }
}

TEST_CASE("one serialize/parse/serialize cycle is byte-identical on the main instance") {
    const std::string once = serialize_kdnf(min_unsat_set(2, 3));
    CHECK(serialize_kdnf(parse_kdnf(once)) == once);
}

TEST_CASE("kdnf format survives the degenerate formulas") {
    DnfSet d;
    d.k = 2;
    d.nvars = 2;
    d.formulas = {DnfFormula{{Term{{pos(1), neg(2)}}, Term{}}}, DnfFormula{}};
    d.default_names();

    const std::string text = serialize_kdnf(d);
    CHECK(text == "p kdnf 2 2 2\n1 & -2 | T\nF\n");
    const DnfSet back = parse_kdnf(text);
    CHECK(back == d);
    CHECK(back.formulas[0].terms[1].empty());
    CHECK(back.formulas[1].terms.empty());

    // Weakening a unit term leaves the empty term, which serializes as T.
    const DnfSet w = weaken(tarsi_cnf(1), {0, 0, 0});
    CHECK(serialize_kdnf(w) == "p kdnf 1 2 1\nc family tarsi n=1\nT\n-1\n");
    CHECK(reparse(w) == w);
}

TEST_CASE("kdnf parser reports the offending line") {
    auto line_of = [](const std::string& text) {
        try {
            parse_kdnf(text);
        } catch (const ParseError& e) {
            return e.line;
        }
        return std::size_t(0);
    };
    CHECK(line_of("p dnf 1 1 1\n1\n") == 1);
    CHECK(line_of("p kdnf 1 1 1\n2\n") == 2);
    CHECK(line_of("p kdnf 2 1 1\n1 & 2\n") == 2);          // wider than k
    CHECK(line_of("p kdnf 2 1 2\n1 & -1\n") == 2);         // duplicate variable
    CHECK(line_of("p kdnf 1 1 1\nv 3 y\n1\n") == 2);       // name table out of range
    CHECK(line_of("p kdnf 1 1 1\n1\n-1\n") == 3);          // extra formula
    CHECK(line_of("p kdnf 1 2 1\n1\n") == 2);              // missing formula
    CHECK(line_of("p kdnf 1 1 1\n1 |\n") == 2);            // dangling separator
    CHECK(line_of("c family tarsi n=1\n") == 1);           // no header at all
    CHECK_NOTHROW(parse_kdnf("p kdnf 1 1 1\n1\n"));
}

TEST_CASE("kdnf parser tolerates loose spacing and CR line ends") {
    const DnfSet d = parse_kdnf("p kdnf 3 2 2\r\n  1   &  2  |  3\r\nT | -3\r\n");
    CHECK(d.formulas[0].terms == std::vector<Term>{Term{{pos(1), pos(2)}}, Term{{pos(3)}}});
    CHECK(d.formulas[1].terms == std::vector<Term>{Term{}, Term{{neg(3)}}});
}

TEST_CASE("random sets round-trip through the text format") {
    std::mt19937 rng(20260825);
    for (int i = 0; i < 200; ++i) {
        const DnfSet d = kdnf::testing::random_set(rng);
        CHECK(reparse(d) == d);
    }
}

TEST_CASE("cdxor round-trip keeps blocks, signs, and shared names") {
    const auto pair = xor_implication_pair(2, 2);
    const std::string text = serialize_cdxor(pair.g);
    const CdXorFormula back = parse_cdxor(text);
    CHECK(back == pair.g);
    CHECK(serialize_cdxor(back) == text);

    // Signs survive: negate one atom and round-trip again.
    CdXorFormula g = pair.g;
    g.clauses[1][0].sign = false;
    CHECK(parse_cdxor(serialize_cdxor(g)) == g);
}

TEST_CASE("cdxor parser reports the offending line") {
    auto line_of = [](const std::string& text) {
        try {
            parse_cdxor(text);
        } catch (const ParseError& e) {
            return e.line;
        }
        return std::size_t(0);
    };
    CHECK(line_of("p cdxor 4 2 2\n") == 1);                      // short header
    CHECK(line_of("p cdxor 4 2 2 1\nb 1 2 3\nb 3 4\n1\n") == 2); // width mismatch
    CHECK(line_of("p cdxor 4 2 2 1\nb 1 2\n1\nb 3 4\n") == 3);   // clause before blocks
    CHECK(line_of("p cdxor 4 2 2 1\nb 1 2\nb 3 4\n3\n") == 4);   // block index range
    CHECK(line_of("p cdxor 4 2 2 1\nb 1 2\nb 2 3\n1\n") == 1);   // overlapping blocks
}

TEST_CASE("dimacs export follows the documented id order") {
    DnfSet d;
    d.k = 2;
    d.nvars = 3;
    d.formulas = {DnfFormula{{Term{{pos(1), pos(2)}}, Term{{pos(3)}}}}};
    d.default_names();
    CHECK(export_dimacs(d) == "c clausified k-DNF set: 3 original variables, 1 extension variables\n"
                              "c ext 4 formula 0 term 0\n"
                              "p cnf 4 3\n"
                              "4 3 0\n"
                              "-4 1 0\n"
                              "-4 2 0\n");
}

TEST_CASE("dimacs export of a width-1 set is clause-for-clause") {
    const std::string text = export_dimacs(tarsi_cnf(2));
    CHECK(text.find("p cnf 2 3\n") != std::string::npos);
    CHECK(text.find("\n1 0\n") != std::string::npos);
    CHECK(text.find("c ext") == std::string::npos);
    const std::string tail = "1 0\n2 0\n-1 -2 0\n";
    REQUIRE(text.size() >= tail.size());
    CHECK(text.substr(text.size() - tail.size()) == tail);
}

TEST_CASE("dimacs headers stay consistent with the clause lines") {
    std::mt19937 rng(7);
    for (int i = 0; i < 100; ++i) {
        const DnfSet d = kdnf::testing::random_set(rng);
        const std::string text = export_dimacs(d);

        std::size_t declared_vars = 0, declared_clauses = 0, clauses = 0;
        long long max_id = 0;
        std::istringstream in{text};
        std::string tok;
        std::vector<std::string> lines;
        for (std::string line; std::getline(in, line);)
            lines.push_back(line);
        for (const std::string& line : lines) {
            if (line.rfind("c", 0) == 0)
                continue;
            if (line.rfind("p cnf ", 0) == 0) {
                std::istringstream h{line.substr(6)};
                h >> declared_vars >> declared_clauses;
                continue;
            }
            ++clauses;
            std::istringstream body{line};
            long long v;
            bool terminated = false;
            while (body >> v) {
                CHECK(!terminated);
                if (v == 0)
                    terminated = true;
                max_id = std::max(max_id, v < 0 ? -v : v);
            }
            CHECK(terminated);
        }
        CHECK(clauses == declared_clauses);
        CHECK(static_cast<std::size_t>(max_id) <= declared_vars);
    }
}

TEST_CASE("fnv1a64 matches its reference values") {
    CHECK(fnv1a64("") == 14695981039346656037ULL);
    CHECK(fnv1a64("a") == 0xaf63dc4c8601ec8cULL);
    CHECK(instance_hash(tarsi_cnf(2)) == instance_hash(tarsi_cnf(2)));
    CHECK(instance_hash(tarsi_cnf(2)) != instance_hash(tarsi_cnf(3)));
    CHECK(instance_hash(tarsi_cnf(2)).rfind("fnv1a64:", 0) == 0);
}

TEST_CASE("bounds table rows carry exact rationals") {
    BoundsTableOptions opts;
    opts.xor_bound = true;
    const std::string csv = emit_bounds_table(1, 2, 2, 8, opts);
    CHECK(csv.find("k,m,clause_set_bound,var_upper_bound,var_lower_bound,xor_lower_bound\n") == 0);
    CHECK(csv.find("\n2,8,7,4096,1,") != std::string::npos);
    CHECK(csv.find("\n1,5,4,25,0,0\n") != std::string::npos);
    CHECK(csv.find("\n2,2,1,64,1/16,3/16\n") != std::string::npos);

    BoundsTableOptions actual;
    actual.actual_counts = true;
    const std::string with_counts = emit_bounds_table(2, 2, 2, 2, actual);
    CHECK(with_counts.find("2,2,1,64,1/16,10,8\n") != std::string::npos);

    BoundsTableOptions md;
    md.format = TableFormat::Markdown;
    const std::string table = emit_bounds_table(2, 2, 2, 3, md);
    CHECK(table.rfind("| k | m |", 0) == 0);
    CHECK(table.find("| 2 | 2 | 1 | 64 | 1/16 |") != std::string::npos);

    CHECK_THROWS_AS(emit_bounds_table(2, 1, 2, 2, {}), std::invalid_argument);
    CHECK_THROWS_AS(emit_bounds_table(0, 1, 2, 2, {}), std::invalid_argument);
}

#pragma once

// Clausal forms: CNF formulas and CD-XOR formulas (conjunctions of
// disjunctions of signed parity constraints over disjoint variable blocks).

#include "kdnf/formula.hpp"

namespace kdnf {

/// Disjunction of literals. Empty = constant false.
struct CnfClause {
    std::vector<Literal> lits;

    friend auto operator<=>(const CnfClause&, const CnfClause&) = default;
};

struct CnfFormula {
    std::vector<CnfClause> clauses;
    VariableId nvars = 0;
};

/// Signed exclusive-or over one full variable block.
struct XorAtom {
    bool sign = true; // true = unnegated XOR
    std::vector<VariableId> block;

    friend auto operator<=>(const XorAtom&, const XorAtom&) = default;
};

using XorClause = std::vector<XorAtom>; // disjunction of atoms

/// Conjunction of disjunctions of signed XORs; every atom covers exactly one
/// full block, and blocks are pairwise disjoint. nvars may exceed the blocks'
/// coverage when the formula lives inside a larger shared universe.
struct CdXorFormula {
    int block_width = 2;
    std::vector<std::vector<VariableId>> blocks;
    std::vector<XorClause> clauses;
    VariableId nvars = 0;
    std::vector<std::string> names;

    std::size_t atom_count() const;
    void validate() const; // throws std::invalid_argument

    friend bool operator==(const CdXorFormula&, const CdXorFormula&) = default;
};

bool eval_clause(const CnfClause& c, const Assignment& a);
bool eval_cnf(const CnfFormula& f, const Assignment& a);
bool eval_atom(const XorAtom& atom, const Assignment& a);
bool eval_cdxor(const CdXorFormula& g, const Assignment& a);

} // namespace kdnf

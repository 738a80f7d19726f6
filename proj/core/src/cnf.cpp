#include "kdnf/cnf.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace kdnf {

std::size_t CdXorFormula::atom_count() const {
    std::size_t n = 0;
    for (const auto& c : clauses) n += c.size();
    return n;
}

void CdXorFormula::validate() const {
    if (block_width < 1) throw std::invalid_argument("cd-xor: block width must be positive");
    std::set<VariableId> seen;
    for (const auto& b : blocks) {
        if (b.size() != static_cast<std::size_t>(block_width))
            throw std::invalid_argument("cd-xor: block has wrong width");
        for (VariableId v : b) {
            if (v == 0 || v > nvars) throw std::invalid_argument("cd-xor: variable out of range");
            if (!seen.insert(v).second) throw std::invalid_argument("cd-xor: blocks overlap");
        }
    }
    const std::set<std::vector<VariableId>> known(blocks.begin(), blocks.end());
    for (const auto& c : clauses)
        for (const auto& atom : c)
            if (!known.count(atom.block))
                throw std::invalid_argument("cd-xor: atom does not match any block");
    if (!names.empty() && names.size() != nvars)
        throw std::invalid_argument("cd-xor: name table size mismatch");
}

bool eval_clause(const CnfClause& c, const Assignment& a) {
    for (const Literal& l : c.lits)
        if (a.value(l.var) == l.positive) return true;
    return false;
}

bool eval_cnf(const CnfFormula& f, const Assignment& a) {
    for (const auto& c : f.clauses)
        if (!eval_clause(c, a)) return false;
    return true;
}

bool eval_atom(const XorAtom& atom, const Assignment& a) {
    bool parity = false;
    for (VariableId v : atom.block) parity ^= a.value(v);
    return atom.sign ? parity : !parity;
}

bool eval_cdxor(const CdXorFormula& g, const Assignment& a) {
    for (const auto& c : g.clauses) {
        bool sat = false;
        for (const auto& atom : c)
            if (eval_atom(atom, a)) {
                sat = true;
                break;
            }
        if (!sat) return false;
    }
    return true;
}

} // namespace kdnf

#pragma once

// Deterministic generators for the formula families: the tight minimally
// unsatisfiable CNF, the naive 2-DNF pair, the substitution blow-up, the
// weight-one gadget, the minimally unsatisfiable k-DNF set assembled from
// gadget copies, and the XOR implication pair built on the same skeleton.
//
// Identical parameters always yield identical output, including variable ids
// and names. Allocation orders are documented per generator in families.cpp.

#include "kdnf/cnf.hpp"
#include "kdnf/formula.hpp"

#include <optional>

namespace kdnf::families {

/// {x1, ..., xn, ~x1 | ... | ~xn}: n+1 clauses over n variables, the classic
/// witness that the variable bound m-1 is tight at width 1.
DnfSet tarsi_cnf(int n);

/// {(x & y1) | ... | (x & yn), (~x & y1) | ... | (~x & yn)}: unsatisfiable,
/// minimal under whole-formula deletion but not under term weakening.
DnfSet naive_pair(int n);

/// Replaces every variable of a width-1 set with a disjunction of k disjoint
/// k-fold conjunctions over fresh variables, expanding each clause to a
/// k-DNF. Output: same formula count, k^2 times the variables.
DnfSet substitute_or_of_ands(const DnfSet& cnf, int k);

/// Gadget minimally expressing that at most one of the m(k-1) x-variables is
/// true: 2m-1 formulas over the x-vector plus auxiliaries u_1..u_{m-1},
/// v_1..v_{m-1}.
DnfSet weight_gadget(int m, int k);

/// Generation is refused (std::length_error) when a construction would need
/// more than this many y-variables.
inline constexpr std::size_t default_y_cap = std::size_t{1} << 20;

/// The minimally unsatisfiable k-DNF set: k-1 disjoint weight gadgets, one
/// positive and one negative y-formula per index nu, and a final disjunction
/// over the fresh u_nu variables. nu ranges over [1, nu_range], defaulting to
/// m(k-1); the range does not affect minimal unsatisfiability.
DnfSet min_unsat_set(int m, int k, std::optional<int> nu_range = std::nullopt,
                     std::size_t y_cap = default_y_cap);

/// A k-DNF set d and a CD-(k+1)-XOR formula g over a shared variable
/// universe such that d implies g precisely: dropping any single atom
/// occurrence from g breaks the implication.
struct XorImplicationPair {
    DnfSet d;
    CdXorFormula g;
};

XorImplicationPair xor_implication_pair(int m, int k, std::size_t y_cap = default_y_cap);

} // namespace kdnf::families

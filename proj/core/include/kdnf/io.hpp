#pragma once

// On-disk text formats.
//
// KDNF (sets of DNF formulas):
//   p kdnf <nvars> <nformulas> <k>
//   c family <descriptor>          only when the set carries a descriptor
//   v <id> <name>                  only for names differing from x_<id>
//   <formula>                      nformulas lines, in order
// A formula line is `F` (no terms) or terms joined by ` | `; a term is `T`
// (empty, constant true) or signed integer literals joined by ` & `.
//
// CDXOR (conjunctions of disjunctions of signed parity atoms):
//   p cdxor <nvars> <nblocks> <block_width> <nclauses>
//   v <id> <name>
//   b <id> ... <id>                block_width ids per line, blocks in order
//   <clause>                       `F` or signed 1-based block indexes
//                                  joined by ` | ` (negative = negated atom)
//
// DIMACS export renders clausify(d) with `c ext` comments mapping each
// extension variable back to its (formula, term) origin.
//
// Parsers are line-oriented and strict; errors carry the 1-based line number.

#include "kdnf/bounds.hpp"
#include "kdnf/cnf.hpp"
#include "kdnf/formula.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace kdnf {

struct ParseError : std::runtime_error {
    std::size_t line;

    ParseError(std::size_t line_no, const std::string& what)
        : std::runtime_error("line " + std::to_string(line_no) + ": " + what), line(line_no) {}
};

std::string serialize_kdnf(const DnfSet& d);
DnfSet parse_kdnf(std::string_view text);

std::string serialize_cdxor(const CdXorFormula& g);
CdXorFormula parse_cdxor(std::string_view text);

std::string export_dimacs(const DnfSet& d);

/// FNV-1a over the canonical serialization; stable across runs and platforms.
std::uint64_t fnv1a64(std::string_view data);
std::string instance_hash(const DnfSet& d);
std::string instance_hash(const CdXorFormula& g);

enum class TableFormat { Csv, Markdown };

struct BoundsTableOptions {
    TableFormat format = TableFormat::Csv;
    bool xor_bound = false;     // adds the XOR-implication lower-bound column
    bool actual_counts = false; // adds generated min-unsat family sizes where defined
};

/// One row per (k, m) over the inclusive ranges, every bound column exact.
std::string emit_bounds_table(int k_lo, int k_hi, int m_lo, int m_hi,
                              const BoundsTableOptions& opts = {});

} // namespace kdnf

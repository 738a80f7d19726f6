#include "kdnf/io.hpp"

#include "kdnf/families.hpp"
#include "kdnf/solver.hpp"

#include <charconv>
#include <cstdio>
#include <unordered_map>
#include <vector>

namespace kdnf {

namespace {

std::string default_name(VariableId v) { return "x_" + std::to_string(v); }

void append_formula(std::string& out, const DnfFormula& f) {
    if (f.terms.empty()) {
        out += 'F';
        return;
    }
    for (std::size_t t = 0; t < f.terms.size(); ++t) {
        if (t)
            out += " | ";
        const Term& term = f.terms[t];
        if (term.empty()) {
            out += 'T';
            continue;
        }
        for (std::size_t l = 0; l < term.size(); ++l) {
            if (l)
                out += " & ";
            const Literal& lit = term.literals()[l];
            out += std::to_string(lit.positive ? static_cast<long long>(lit.var)
                                               : -static_cast<long long>(lit.var));
        }
    }
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t'))
        s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> split_ws(std::string_view s) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t'))
            ++i;
        std::size_t j = i;
        while (j < s.size() && s[j] != ' ' && s[j] != '\t')
            ++j;
        if (j > i)
            out.push_back(s.substr(i, j - i));
        i = j;
    }
    return out;
}

std::vector<std::string_view> split_on(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= s.size(); ++i) {
        if (i == s.size() || s[i] == sep) {
            out.push_back(s.substr(start, i - start));
            start = i + 1;
        }
    }
    return out;
}

long long parse_int(std::string_view tok, std::size_t line) {
    long long v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
        throw ParseError(line, "expected an integer, got '" + std::string(tok) + "'");
    return v;
}

std::uint64_t parse_count(std::string_view tok, std::size_t line, long long max) {
    long long v = parse_int(tok, line);
    if (v < 0 || v > max)
        throw ParseError(line, "count out of range: " + std::string(tok));
    return static_cast<std::uint64_t>(v);
}

/// Splits into non-empty lines with 1-based numbers; strips trailing '\r'.
struct Lines {
    std::vector<std::pair<std::size_t, std::string_view>> items;

    explicit Lines(std::string_view text) {
        std::size_t no = 0;
        for (std::string_view raw : split_on(text, '\n')) {
            ++no;
            if (!raw.empty() && raw.back() == '\r')
                raw.remove_suffix(1);
            if (!trim(raw).empty())
                items.emplace_back(no, raw);
        }
    }
};

Literal parse_literal(std::string_view tok, VariableId nvars, std::size_t line) {
    long long v = parse_int(tok, line);
    if (v == 0 || static_cast<std::uint64_t>(v < 0 ? -v : v) > nvars)
        throw ParseError(line, "literal out of range: " + std::string(tok));
    return {static_cast<VariableId>(v < 0 ? -v : v), v > 0};
}

DnfFormula parse_formula_line(std::string_view body, VariableId nvars, int k, std::size_t line) {
    DnfFormula f;
    if (trim(body) == "F")
        return f;
    for (std::string_view piece : split_on(body, '|')) {
        piece = trim(piece);
        if (piece.empty())
            throw ParseError(line, "empty term; write T for the constant-true term");
        if (piece == "T") {
            f.terms.emplace_back();
            continue;
        }
        std::vector<Literal> lits;
        for (std::string_view tok : split_on(piece, '&')) {
            tok = trim(tok);
            if (tok.empty())
                throw ParseError(line, "empty literal");
            lits.push_back(parse_literal(tok, nvars, line));
        }
        if (lits.size() > static_cast<std::size_t>(k))
            throw ParseError(line, "term wider than the declared k");
        try {
            f.terms.emplace_back(std::move(lits));
        } catch (const std::invalid_argument& e) {
            throw ParseError(line, e.what());
        }
    }
    return f;
}

} // namespace

std::string serialize_kdnf(const DnfSet& d) {
    std::string out = "p kdnf " + std::to_string(d.nvars) + " " + std::to_string(d.formulas.size()) +
                      " " + std::to_string(d.k) + "\n";
    if (d.family)
        out += "c family " + d.family->str() + "\n";
    for (VariableId v = 1; v <= d.nvars && v <= d.names.size(); ++v) {
        const std::string& name = d.names[v - 1];
        if (!name.empty() && name != default_name(v))
            out += "v " + std::to_string(v) + " " + name + "\n";
    }
    for (const DnfFormula& f : d.formulas) {
        append_formula(out, f);
        out += '\n';
    }
    return out;
}

DnfSet parse_kdnf(std::string_view text) {
    Lines lines(text);
    DnfSet d;
    std::optional<FamilyDescriptor> family;
    bool seen_header = false;
    std::size_t header_line = 0, nformulas = 0;

    for (auto [no, raw] : lines.items) {
        auto toks = split_ws(raw);
        if (toks[0] == "c") {
            std::string_view body = trim(raw.substr(raw.find('c') + 1));
            if (body.rfind("family ", 0) == 0) {
                family = FamilyDescriptor::parse(std::string(trim(body.substr(7))));
                if (!family)
                    throw ParseError(no, "unreadable family descriptor");
            }
            continue;
        }
        if (!seen_header) {
            if (toks.size() != 5 || toks[0] != "p" || toks[1] != "kdnf")
                throw ParseError(no, "expected header 'p kdnf <nvars> <nformulas> <k>'");
            d.nvars = static_cast<VariableId>(parse_count(toks[2], no, 0xffffffff));
            nformulas = parse_count(toks[3], no, 1u << 28);
            long long k = parse_int(toks[4], no);
            if (k < 1)
                throw ParseError(no, "k must be positive");
            d.k = static_cast<int>(k);
            d.default_names();
            seen_header = true;
            header_line = no;
            continue;
        }
        if (toks[0] == "v") {
            if (toks.size() != 3)
                throw ParseError(no, "expected 'v <id> <name>'");
            auto id = parse_count(toks[1], no, d.nvars);
            if (id == 0)
                throw ParseError(no, "variable ids are 1-based");
            d.names[id - 1] = std::string(toks[2]);
            continue;
        }
        if (d.formulas.size() == nformulas)
            throw ParseError(no, "more formula lines than the header declares");
        d.formulas.push_back(parse_formula_line(raw, d.nvars, d.k, no));
    }
    if (!seen_header)
        throw ParseError(lines.items.empty() ? 1 : lines.items.back().first, "missing header");
    if (d.formulas.size() != nformulas)
        throw ParseError(lines.items.back().first,
                         "fewer formula lines than the header declares");
    d.family = family;
    try {
        d.validate();
    } catch (const std::invalid_argument& e) {
        throw ParseError(header_line, e.what());
    }
    return d;
}

std::string serialize_cdxor(const CdXorFormula& g) {
    std::string out = "p cdxor " + std::to_string(g.nvars) + " " + std::to_string(g.blocks.size()) +
                      " " + std::to_string(g.block_width) + " " + std::to_string(g.clauses.size()) +
                      "\n";
    for (VariableId v = 1; v <= g.nvars && v <= g.names.size(); ++v) {
        const std::string& name = g.names[v - 1];
        if (!name.empty() && name != default_name(v))
            out += "v " + std::to_string(v) + " " + name + "\n";
    }
    std::unordered_map<VariableId, std::size_t> block_of;
    for (std::size_t b = 0; b < g.blocks.size(); ++b) {
        block_of[g.blocks[b].front()] = b;
        out += 'b';
        for (VariableId v : g.blocks[b])
            out += " " + std::to_string(v);
        out += '\n';
    }
    for (const XorClause& c : g.clauses) {
        if (c.empty()) {
            out += "F\n";
            continue;
        }
        for (std::size_t a = 0; a < c.size(); ++a) {
            if (a)
                out += " | ";
            long long idx = static_cast<long long>(block_of.at(c[a].block.front())) + 1;
            out += std::to_string(c[a].sign ? idx : -idx);
        }
        out += '\n';
    }
    return out;
}

CdXorFormula parse_cdxor(std::string_view text) {
    Lines lines(text);
    CdXorFormula g;
    bool seen_header = false;
    std::size_t header_line = 0, nblocks = 0, nclauses = 0;

    for (auto [no, raw] : lines.items) {
        auto toks = split_ws(raw);
        if (toks[0] == "c")
            continue;
        if (!seen_header) {
            if (toks.size() != 6 || toks[0] != "p" || toks[1] != "cdxor")
                throw ParseError(no, "expected header 'p cdxor <nvars> <nblocks> <width> <nclauses>'");
            g.nvars = static_cast<VariableId>(parse_count(toks[2], no, 0xffffffff));
            nblocks = parse_count(toks[3], no, 1u << 28);
            g.block_width = static_cast<int>(parse_count(toks[4], no, 64));
            if (g.block_width < 1)
                throw ParseError(no, "block width must be positive");
            nclauses = parse_count(toks[5], no, 1u << 28);
            g.names.resize(g.nvars);
            for (VariableId v = 1; v <= g.nvars; ++v)
                g.names[v - 1] = default_name(v);
            seen_header = true;
            header_line = no;
            continue;
        }
        if (toks[0] == "v") {
            if (toks.size() != 3)
                throw ParseError(no, "expected 'v <id> <name>'");
            auto id = parse_count(toks[1], no, g.nvars);
            if (id == 0)
                throw ParseError(no, "variable ids are 1-based");
            g.names[id - 1] = std::string(toks[2]);
            continue;
        }
        if (toks[0] == "b") {
            if (g.blocks.size() == nblocks)
                throw ParseError(no, "more block lines than the header declares");
            if (toks.size() != static_cast<std::size_t>(g.block_width) + 1)
                throw ParseError(no, "block line must list exactly block_width ids");
            std::vector<VariableId> block;
            for (std::size_t i = 1; i < toks.size(); ++i) {
                auto id = parse_count(toks[i], no, g.nvars);
                if (id == 0)
                    throw ParseError(no, "variable ids are 1-based");
                block.push_back(static_cast<VariableId>(id));
            }
            g.blocks.push_back(std::move(block));
            continue;
        }
        if (g.blocks.size() != nblocks)
            throw ParseError(no, "clause line before all blocks are declared");
        if (g.clauses.size() == nclauses)
            throw ParseError(no, "more clause lines than the header declares");
        XorClause clause;
        if (trim(raw) != "F") {
            for (std::string_view piece : split_on(raw, '|')) {
                piece = trim(piece);
                if (piece.empty())
                    throw ParseError(no, "empty atom");
                long long idx = parse_int(piece, no);
                std::size_t b = static_cast<std::size_t>(idx < 0 ? -idx : idx);
                if (idx == 0 || b > g.blocks.size())
                    throw ParseError(no, "block index out of range");
                clause.push_back({idx > 0, g.blocks[b - 1]});
            }
        }
        g.clauses.push_back(std::move(clause));
    }
    if (!seen_header)
        throw ParseError(lines.items.empty() ? 1 : lines.items.back().first, "missing header");
    if (g.blocks.size() != nblocks || g.clauses.size() != nclauses)
        throw ParseError(lines.items.back().first, "fewer lines than the header declares");
    try {
        g.validate();
    } catch (const std::invalid_argument& e) {
        throw ParseError(header_line, e.what());
    }
    return g;
}

std::string export_dimacs(const DnfSet& d) {
    Clausification cl = clausify(d);
    std::string out = "c clausified k-DNF set: " + std::to_string(cl.original_vars) +
                      " original variables, " + std::to_string(cl.extensions.size()) +
                      " extension variables\n";
    if (d.family)
        out += "c family " + d.family->str() + "\n";
    for (const auto& e : cl.extensions)
        out += "c ext " + std::to_string(e.var) + " formula " + std::to_string(e.formula) +
               " term " + std::to_string(e.term) + "\n";
    out += "p cnf " + std::to_string(cl.cnf.nvars) + " " + std::to_string(cl.cnf.clauses.size()) +
           "\n";
    for (const CnfClause& c : cl.cnf.clauses) {
        for (const Literal& lit : c.lits)
            out += std::to_string(lit.positive ? static_cast<long long>(lit.var)
                                               : -static_cast<long long>(lit.var)) +
                   " ";
        out += "0\n";
    }
    return out;
}

std::uint64_t fnv1a64(std::string_view data) {
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char byte : data) {
        h ^= byte;
        h *= 1099511628211ULL;
    }
    return h;
}

namespace {

std::string hash_str(std::uint64_t h) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return std::string("fnv1a64:") + buf;
}

} // namespace

std::string instance_hash(const DnfSet& d) { return hash_str(fnv1a64(serialize_kdnf(d))); }

std::string instance_hash(const CdXorFormula& g) { return hash_str(fnv1a64(serialize_cdxor(g))); }

std::string emit_bounds_table(int k_lo, int k_hi, int m_lo, int m_hi,
                              const BoundsTableOptions& opts) {
    if (k_lo < 1 || m_lo < 1 || k_lo > k_hi || m_lo > m_hi)
        throw std::invalid_argument("emit_bounds_table: ranges must be nonempty and positive");

    std::vector<std::string> header = {"k", "m", "clause_set_bound", "var_upper_bound",
                                       "var_lower_bound"};
    if (opts.xor_bound)
        header.push_back("xor_lower_bound");
    if (opts.actual_counts) {
        header.push_back("min_unsat_nvars");
        header.push_back("min_unsat_nformulas");
    }

    std::vector<std::vector<std::string>> rows;
    for (int k = k_lo; k <= k_hi; ++k) {
        for (int m = m_lo; m <= m_hi; ++m) {
            std::vector<std::string> row = {std::to_string(k), std::to_string(m),
                                            clause_set_var_bound(m).str(),
                                            set_var_upper_bound(k, m).str(),
                                            rational_str(family_var_lower_bound(m, k))};
            if (opts.xor_bound)
                row.push_back(rational_str(xor_var_lower_bound(m, k)));
            if (opts.actual_counts) {
                if (k >= 2 && m >= 2) {
                    try {
                        DnfSet d = families::min_unsat_set(m, k);
                        row.push_back(std::to_string(d.nvars));
                        row.push_back(std::to_string(d.formulas.size()));
                    } catch (const std::length_error&) {
                        row.push_back("-");
                        row.push_back("-");
                    }
                } else {
                    row.push_back("-");
                    row.push_back("-");
                }
            }
            rows.push_back(std::move(row));
        }
    }

    std::string out;
    if (opts.format == TableFormat::Csv) {
        for (std::size_t i = 0; i < header.size(); ++i)
            out += (i ? "," : "") + header[i];
        out += '\n';
        for (const auto& row : rows) {
            for (std::size_t i = 0; i < row.size(); ++i)
                out += (i ? "," : "") + row[i];
            out += '\n';
        }
    } else {
        auto md_row = [&out](const std::vector<std::string>& cells) {
            out += '|';
            for (const auto& c : cells)
                out += " " + c + " |";
            out += '\n';
        };
        md_row(header);
        out += '|';
        for (std::size_t i = 0; i < header.size(); ++i)
            out += " --- |";
        out += '\n';
        for (const auto& row : rows)
            md_row(row);
    }
    return out;
}

} // namespace kdnf

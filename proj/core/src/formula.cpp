#include "kdnf/formula.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <sstream>

namespace kdnf {

namespace {

std::string join_ints(const std::vector<int>& xs) {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(xs[i]);
    }
    return out;
}

std::vector<int> split_ints(std::string_view s) {
    std::vector<int> out;
    std::size_t start = 0;
    while (start <= s.size()) {
        std::size_t comma = s.find(',', start);
        std::string_view piece = s.substr(start, comma == std::string_view::npos
                                                     ? std::string_view::npos
                                                     : comma - start);
        int value = 0;
        auto [ptr, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), value);
        if (ec != std::errc{} || ptr != piece.data() + piece.size())
            throw std::invalid_argument("bad index list: " + std::string(s));
        out.push_back(value);
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

} // namespace

std::string VarName::str() const {
    std::string out = tag;
    if (!sup.empty()) {
        out += '^';
        out += join_ints(sup);
    }
    if (!sub.empty()) {
        out += '_';
        out += join_ints(sub);
    }
    return out;
}

VarName VarName::parse(const std::string& text) {
    VarName n;
    std::size_t i = 0;
    while (i < text.size() && (std::isalpha(static_cast<unsigned char>(text[i])) != 0))
        ++i;
    if (i == 0) throw std::invalid_argument("variable name must start with a letter: " + text);
    n.tag = text.substr(0, i);
    std::size_t caret = text.find('^', i);
    std::size_t under = text.find('_', i);
    if (caret != std::string::npos) {
        if (caret != i) throw std::invalid_argument("malformed variable name: " + text);
        std::size_t end = (under == std::string::npos) ? text.size() : under;
        n.sup = split_ints(std::string_view(text).substr(caret + 1, end - caret - 1));
    }
    if (under != std::string::npos) {
        if (caret == std::string::npos && under != i)
            throw std::invalid_argument("malformed variable name: " + text);
        n.sub = split_ints(std::string_view(text).substr(under + 1));
    } else if (caret == std::string::npos && i != text.size()) {
        throw std::invalid_argument("malformed variable name: " + text);
    }
    return n;
}

Term::Term(std::vector<Literal> lits) : lits_(std::move(lits)) {
    std::sort(lits_.begin(), lits_.end(),
              [](const Literal& a, const Literal& b) { return a.var < b.var; });
    for (std::size_t i = 1; i < lits_.size(); ++i) {
        if (lits_[i].var == lits_[i - 1].var)
            throw std::invalid_argument("variable " + std::to_string(lits_[i].var) +
                                        " occurs twice in a term");
    }
}

Term Term::without(std::size_t index) const {
    if (index >= lits_.size()) throw std::out_of_range("literal index out of range");
    std::vector<Literal> rest = lits_;
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(index));
    Term t;
    t.lits_ = std::move(rest); // already sorted and duplicate-free
    return t;
}

std::size_t DnfFormula::width() const {
    std::size_t w = 0;
    for (const Term& t : terms) w = std::max(w, t.size());
    return w;
}

std::string FamilyDescriptor::str() const {
    std::string out = family;
    auto field = [&out](const char* key, const std::optional<int>& v) {
        if (v) {
            out += ' ';
            out += key;
            out += '=';
            out += std::to_string(*v);
        }
    };
    field("m", m);
    field("k", k);
    field("n", n);
    field("nu", nu_range);
    return out;
}

std::optional<FamilyDescriptor> FamilyDescriptor::parse(const std::string& text) {
    std::istringstream in(text);
    FamilyDescriptor d;
    if (!(in >> d.family)) return std::nullopt;
    std::string kv;
    while (in >> kv) {
        std::size_t eq = kv.find('=');
        if (eq == std::string::npos) return std::nullopt;
        int value = 0;
        auto num = kv.substr(eq + 1);
        auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), value);
        if (ec != std::errc{} || ptr != num.data() + num.size()) return std::nullopt;
        auto key = kv.substr(0, eq);
        if (key == "m") d.m = value;
        else if (key == "k") d.k = value;
        else if (key == "n") d.n = value;
        else if (key == "nu") d.nu_range = value;
        else return std::nullopt;
    }
    return d;
}

std::size_t DnfSet::width() const {
    std::size_t w = 0;
    for (const DnfFormula& f : formulas) w = std::max(w, f.width());
    return w;
}

const std::string& DnfSet::name_of(VariableId v) const {
    if (v == 0 || v > names.size())
        throw std::out_of_range("no name for variable " + std::to_string(v));
    return names[v - 1];
}

void DnfSet::default_names() {
    names.resize(nvars);
    for (VariableId v = 1; v <= nvars; ++v) {
        if (names[v - 1].empty())
            names[v - 1] = VarName{"x", {}, {static_cast<int>(v)}}.str();
    }
}

void DnfSet::validate() const {
    if (k < 1) throw std::invalid_argument("declared width bound k must be >= 1");
    if (names.size() != nvars)
        throw std::invalid_argument("name table has " + std::to_string(names.size()) +
                                    " entries for " + std::to_string(nvars) + " variables");
    for (const DnfFormula& f : formulas) {
        for (const Term& t : f.terms) {
            if (t.size() > static_cast<std::size_t>(k))
                throw std::invalid_argument("term of size " + std::to_string(t.size()) +
                                            " exceeds declared width " + std::to_string(k));
            for (const Literal& l : t.literals()) {
                if (l.var == 0 || l.var > nvars)
                    throw std::invalid_argument("variable " + std::to_string(l.var) +
                                                " outside universe of size " +
                                                std::to_string(nvars));
            }
        }
    }
}

std::size_t DnfSet::occurring_count() const {
    std::vector<bool> seen(nvars + 1, false);
    std::size_t count = 0;
    for (const DnfFormula& f : formulas)
        for (const Term& t : f.terms)
            for (const Literal& l : t.literals())
                if (l.var <= nvars && !seen[l.var]) {
                    seen[l.var] = true;
                    ++count;
                }
    return count;
}

Assignment Assignment::from_bits(std::uint64_t bits, std::size_t n) {
    Assignment a(n);
    for (std::size_t i = 0; i < n; ++i)
        a.values[i] = static_cast<std::uint8_t>((bits >> i) & 1u);
    return a;
}

bool eval_term(const Term& t, const Assignment& a) {
    for (const Literal& l : t.literals())
        if (a.value(l.var) != l.positive) return false;
    return true; // empty term is the constant true
}

bool eval_formula(const DnfFormula& f, const Assignment& a) {
    for (const Term& t : f.terms)
        if (eval_term(t, a)) return true;
    return false; // no terms means constant false
}

bool eval_set(const DnfSet& d, const Assignment& a) {
    for (const DnfFormula& f : d.formulas)
        if (!eval_formula(f, a)) return false;
    return true;
}

DnfSet weaken(const DnfSet& d, const WeakeningLocus& loc) {
    if (loc.formula >= d.formulas.size())
        throw std::out_of_range("formula index out of range");
    const DnfFormula& f = d.formulas[loc.formula];
    if (loc.term >= f.terms.size())
        throw std::out_of_range("term index out of range");
    DnfSet out = d;
    out.formulas[loc.formula].terms[loc.term] =
        f.terms[loc.term].without(loc.literal); // throws if literal out of range
    return out;
}

std::vector<WeakeningLocus> enumerate_weakening_loci(const DnfSet& d) {
    std::vector<WeakeningLocus> loci;
    for (std::size_t fi = 0; fi < d.formulas.size(); ++fi)
        for (std::size_t ti = 0; ti < d.formulas[fi].terms.size(); ++ti)
            for (std::size_t li = 0; li < d.formulas[fi].terms[ti].size(); ++li)
                loci.push_back({fi, ti, li});
    return loci;
}

} // namespace kdnf

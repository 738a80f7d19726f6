#pragma once

// Core data model for k-DNF sets: variables, literals, terms, formulas,
// assignments, and the single-literal weakening operator.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace kdnf {

using VariableId = std::uint32_t; // 1-based, dense within one variable universe

struct EvalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Structured variable label: family tag plus optional superscript and
/// subscript index lists. Rendered as e.g. "x_3", "u^2_1", "y^1,2_3,4".
struct VarName {
    std::string tag;
    std::vector<int> sup;
    std::vector<int> sub;

    std::string str() const;
    static VarName parse(const std::string& text); // throws std::invalid_argument
};

struct Literal {
    VariableId var = 0;
    bool positive = true;

    Literal() = default;
    Literal(VariableId v, bool pos) : var(v), positive(pos) {}

    Literal negated() const { return {var, !positive}; }
    friend auto operator<=>(const Literal&, const Literal&) = default;
};

inline Literal pos(VariableId v) { return {v, true}; }
inline Literal neg(VariableId v) { return {v, false}; }

/// Conjunction of literals, canonically ordered by variable id. A variable
/// may appear at most once; the empty term is the constant true.
class Term {
  public:
    Term() = default;
    explicit Term(std::vector<Literal> lits); // sorts; throws on duplicate variable

    const std::vector<Literal>& literals() const { return lits_; }
    std::size_t size() const { return lits_.size(); }
    bool empty() const { return lits_.empty(); }

    /// Copy with the literal at `index` removed.
    Term without(std::size_t index) const;

    friend auto operator<=>(const Term&, const Term&) = default;

  private:
    std::vector<Literal> lits_;
};

/// Disjunction of terms. No terms at all is the constant false.
struct DnfFormula {
    std::vector<Term> terms;

    std::size_t width() const;
    friend auto operator<=>(const DnfFormula&, const DnfFormula&) = default;
};

/// Parameter record identifying which generator produced an instance.
struct FamilyDescriptor {
    std::string family;
    std::optional<int> m, k, n, nu_range;

    std::string str() const;
    static std::optional<FamilyDescriptor> parse(const std::string& text);
    friend bool operator==(const FamilyDescriptor&, const FamilyDescriptor&) = default;
};

/// Ordered sequence of k-DNF formulas over a fixed variable universe 1..nvars.
/// Generators allocate ids densely so that every id occurs in some formula;
/// weakening may orphan a variable but never shrinks the universe.
struct DnfSet {
    std::vector<DnfFormula> formulas;
    int k = 1;                      // declared width bound
    VariableId nvars = 0;           // size of the variable universe
    std::vector<std::string> names; // names[i-1] labels variable i
    std::optional<FamilyDescriptor> family;

    std::size_t width() const; // max term size actually present
    const std::string& name_of(VariableId v) const;

    /// Fills names with "x_<id>" for ids lacking one.
    void default_names();

    /// Checks structural invariants: term vars within universe, width <= k,
    /// name table sized to nvars. Throws std::invalid_argument.
    void validate() const;

    /// Number of distinct variables occurring in some term.
    std::size_t occurring_count() const;

    friend bool operator==(const DnfSet&, const DnfSet&) = default;
};

/// Total truth assignment over variables 1..size().
struct Assignment {
    std::vector<std::uint8_t> values; // values[v-1] for variable v

    Assignment() = default;
    explicit Assignment(std::size_t n, bool init = false)
        : values(n, init ? 1 : 0) {}

    std::size_t size() const { return values.size(); }

    bool value(VariableId v) const {
        if (v == 0 || v > values.size())
            throw EvalError("variable " + std::to_string(v) + " is unassigned");
        return values[v - 1] != 0;
    }
    void set(VariableId v, bool b) { values.at(v - 1) = b ? 1 : 0; }

    /// Variable i takes bit (i-1) of `bits`; used by the brute-force oracle.
    static Assignment from_bits(std::uint64_t bits, std::size_t n);

    friend bool operator==(const Assignment&, const Assignment&) = default;
};

/// Address of one literal inside one term inside one formula of a DnfSet.
struct WeakeningLocus {
    std::size_t formula = 0;
    std::size_t term = 0;
    std::size_t literal = 0;

    friend auto operator<=>(const WeakeningLocus&, const WeakeningLocus&) = default;
};

bool eval_term(const Term& t, const Assignment& a);
bool eval_formula(const DnfFormula& f, const Assignment& a);
bool eval_set(const DnfSet& d, const Assignment& a);

/// Copy of `d` with the addressed literal removed from its term. Removing the
/// only literal of a unit term leaves the empty (constant-true) term in place,
/// which makes the containing formula trivially satisfied.
DnfSet weaken(const DnfSet& d, const WeakeningLocus& loc);

/// One locus per literal occurrence, in (formula, term, literal) order.
std::vector<WeakeningLocus> enumerate_weakening_loci(const DnfSet& d);

} // namespace kdnf

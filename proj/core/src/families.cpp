#include "kdnf/families.hpp"

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace kdnf::families {

namespace {

std::uint64_t ipow(std::uint64_t base, int exp) {
    std::uint64_t r = 1;
    for (int i = 0; i < exp; ++i) {
        if (base != 0 && r > std::numeric_limits<std::uint64_t>::max() / base)
            throw std::length_error("family instance size overflows");
        r *= base;
    }
    return r;
}

/// All tuples over [1, base]^len in lexicographic order, first coordinate
/// most significant.
std::vector<std::vector<int>> lex_tuples(int base, int len) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(static_cast<std::size_t>(len), 1);
    while (true) {
        out.push_back(cur);
        int p = len - 1;
        while (p >= 0 && cur[static_cast<std::size_t>(p)] == base)
            cur[static_cast<std::size_t>(p--)] = 1;
        if (p < 0) break;
        ++cur[static_cast<std::size_t>(p)];
    }
    return out;
}

struct Allocator {
    VariableId next = 0;
    std::vector<std::string> names;

    VariableId operator()(VarName n) {
        names.push_back(n.str());
        return ++next;
    }
};

/// One weight gadget's variables: the x-vector (index i-1 holds x_i) and the
/// auxiliary chains u_1..u_{m-1}, v_1..v_{m-1}.
struct GadgetVars {
    std::vector<VariableId> x, u, v;
};

/// Allocates in the order x-vector, u-chain, v-chain. `copy` becomes the
/// superscript on every name when the gadget is one of several copies.
GadgetVars alloc_gadget(Allocator& alloc, int m, int k, std::optional<int> copy) {
    std::vector<int> sup;
    if (copy) sup.push_back(*copy);
    GadgetVars gv;
    for (int i = 1; i <= m * (k - 1); ++i) gv.x.push_back(alloc({"x", sup, {i}}));
    for (int j = 1; j <= m - 1; ++j) gv.u.push_back(alloc({"u", sup, {j}}));
    for (int j = 1; j <= m - 1; ++j) gv.v.push_back(alloc({"v", sup, {j}}));
    return gv;
}

/// The 2m-1 gadget formulas, in display order: the u-formulas for j = 1..m-1,
/// the v-formulas for j = 1..m-1, then the final formula without v_m. Block
/// X_j is x_{(j-1)(k-1)+1} .. x_{j(k-1)}. Every v-formula's per-i disjunction
/// ranges over its own block; for j = 1 there is no predecessor chain variable
/// to conjoin, so the terms are one literal shorter, and at width 2 (block
/// size 1) the lone term is empty, i.e. constant true.
std::vector<DnfFormula> gadget_formulas(int m, int k, const GadgetVars& gv) {
    const int blk = k - 1;
    auto nx = [&gv](int i) { return neg(gv.x[static_cast<std::size_t>(i) - 1]); };
    std::vector<DnfFormula> out;

    for (int j = 1; j <= m - 1; ++j) {
        DnfFormula f;
        f.terms.emplace_back(std::vector<Literal>{neg(gv.u[j - 1])});
        std::vector<Literal> lits;
        if (j >= 2) lits.push_back(pos(gv.u[j - 2]));
        for (int i = (j - 1) * blk + 1; i <= j * blk; ++i) lits.push_back(nx(i));
        f.terms.emplace_back(std::move(lits));
        out.push_back(std::move(f));
    }

    for (int j = 1; j <= m - 1; ++j) {
        DnfFormula f;
        f.terms.emplace_back(std::vector<Literal>{neg(gv.v[j - 1])});
        f.terms.emplace_back(std::vector<Literal>{pos(gv.u[j - 1])});
        if (j == 1) {
            for (int i = 1; i <= blk; ++i) {
                std::vector<Literal> lits;
                for (int i2 = 1; i2 <= blk; ++i2)
                    if (i2 != i) lits.push_back(nx(i2));
                f.terms.emplace_back(std::move(lits));
            }
        } else {
            std::vector<Literal> vterm{pos(gv.v[j - 2])};
            for (int i = (j - 1) * blk + 1; i <= j * blk; ++i) vterm.push_back(nx(i));
            f.terms.emplace_back(std::move(vterm));
            for (int i = (j - 1) * blk + 1; i <= j * blk; ++i) {
                std::vector<Literal> lits{pos(gv.u[j - 2])};
                for (int i2 = (j - 1) * blk + 1; i2 <= j * blk; ++i2)
                    if (i2 != i) lits.push_back(nx(i2));
                f.terms.emplace_back(std::move(lits));
            }
        }
        out.push_back(std::move(f));
    }

    DnfFormula last;
    std::vector<Literal> vterm{pos(gv.v[m - 2])};
    for (int i = (m - 1) * blk + 1; i <= m * blk; ++i) vterm.push_back(nx(i));
    last.terms.emplace_back(std::move(vterm));
    for (int i = (m - 1) * blk + 1; i <= m * blk; ++i) {
        std::vector<Literal> lits{pos(gv.u[m - 2])};
        for (int i2 = (m - 1) * blk + 1; i2 <= m * blk; ++i2)
            if (i2 != i) lits.push_back(nx(i2));
        last.terms.emplace_back(std::move(lits));
    }
    out.push_back(std::move(last));
    return out;
}

void require(bool cond, const char* msg) {
    if (!cond) throw std::invalid_argument(msg);
}

} // namespace

DnfSet tarsi_cnf(int n) {
    require(n >= 1, "tarsi_cnf requires n >= 1");
    DnfSet d;
    d.k = 1;
    d.nvars = static_cast<VariableId>(n);
    for (int i = 1; i <= n; ++i) {
        d.names.push_back(VarName{"x", {}, {i}}.str());
        d.formulas.push_back({{Term{{pos(static_cast<VariableId>(i))}}}});
    }
    DnfFormula clause;
    for (int i = 1; i <= n; ++i) clause.terms.emplace_back(std::vector<Literal>{neg(static_cast<VariableId>(i))});
    d.formulas.push_back(std::move(clause));
    d.family = FamilyDescriptor{"tarsi", std::nullopt, std::nullopt, n, std::nullopt};
    d.validate();
    return d;
}

DnfSet naive_pair(int n) {
    require(n >= 1, "naive_pair requires n >= 1");
    DnfSet d;
    d.k = 2;
    d.nvars = static_cast<VariableId>(n) + 1;
    d.names.push_back("x"); // id 1
    for (int i = 1; i <= n; ++i) d.names.push_back(VarName{"y", {}, {i}}.str());
    DnfFormula with_x, with_notx;
    for (int i = 1; i <= n; ++i) {
        const VariableId y = static_cast<VariableId>(i) + 1;
        with_x.terms.emplace_back(std::vector<Literal>{pos(1), pos(y)});
        with_notx.terms.emplace_back(std::vector<Literal>{neg(1), pos(y)});
    }
    d.formulas.push_back(std::move(with_x));
    d.formulas.push_back(std::move(with_notx));
    d.family = FamilyDescriptor{"naive_pair", std::nullopt, std::nullopt, n, std::nullopt};
    d.validate();
    return d;
}

DnfSet substitute_or_of_ands(const DnfSet& cnf, int k) {
    require(k >= 2, "substitution requires k >= 2");
    require(cnf.width() <= 1, "substitution requires a width-1 input");
    const int n = static_cast<int>(cnf.nvars);
    const int k2 = k * k;

    // Input variable i becomes fresh variables x^1_i .. x^{k^2}_i with ids
    // (i-1)k^2 + 1 .. i k^2; superscript s is the offset within the group,
    // and block b of [0, k) covers superscripts bk+1 .. bk+k.
    DnfSet out;
    out.k = k;
    out.nvars = static_cast<VariableId>(k2 * n);
    for (int i = 1; i <= n; ++i)
        for (int s = 1; s <= k2; ++s) out.names.push_back(VarName{"x", {s}, {i}}.str());
    auto id = [k2](int i, int s) { return static_cast<VariableId>((i - 1) * k2 + s); };

    const auto choices = lex_tuples(k, k); // one pick per block, for negations
    for (const DnfFormula& f : cnf.formulas) {
        DnfFormula g;
        for (const Term& t : f.terms) {
            if (t.empty()) {
                g.terms.emplace_back();
                continue;
            }
            const Literal l = t.literals().front();
            const int i = static_cast<int>(l.var);
            if (l.positive) {
                for (int b = 0; b < k; ++b) {
                    std::vector<Literal> lits;
                    for (int s = b * k + 1; s <= b * k + k; ++s) lits.push_back(pos(id(i, s)));
                    g.terms.emplace_back(std::move(lits));
                }
            } else {
                for (const auto& c : choices) {
                    std::vector<Literal> lits;
                    for (int b = 0; b < k; ++b) lits.push_back(neg(id(i, b * k + c[b])));
                    g.terms.emplace_back(std::move(lits));
                }
            }
        }
        out.formulas.push_back(std::move(g));
    }
    out.family = FamilyDescriptor{"substitution", std::nullopt, k, n, std::nullopt};
    out.validate();
    return out;
}

DnfSet weight_gadget(int m, int k) {
    require(m >= 2 && k >= 2, "weight_gadget requires m, k >= 2");
    Allocator alloc;
    const GadgetVars gv = alloc_gadget(alloc, m, k, std::nullopt);
    DnfSet d;
    d.k = k;
    d.formulas = gadget_formulas(m, k, gv);
    d.nvars = alloc.next;
    d.names = std::move(alloc.names);
    d.family = FamilyDescriptor{"weight_gadget", m, k, std::nullopt, std::nullopt};
    d.validate();
    return d;
}

DnfSet min_unsat_set(int m, int k, std::optional<int> nu_range, std::size_t y_cap) {
    require(m >= 2 && k >= 2, "min_unsat_set requires m, k >= 2");
    const int R = nu_range.value_or(m * (k - 1));
    require(R >= 1, "nu range must be >= 1");
    const int xdim = m * (k - 1);
    const std::uint64_t tuples_per_nu = ipow(static_cast<std::uint64_t>(xdim), k - 1);
    const std::uint64_t y_total = tuples_per_nu * static_cast<std::uint64_t>(R);
    if (y_total > y_cap)
        throw std::length_error("min_unsat_set(" + std::to_string(m) + "," + std::to_string(k) +
                                ") needs " + std::to_string(y_total) +
                                " y-variables, over the cap of " + std::to_string(y_cap));

    // Allocation order: gadget copy 1 (x-vector, u-chain, v-chain), ...,
    // gadget copy k-1, then y^nu_tuple grouped by nu with tuples in
    // lexicographic order, then the fresh u_nu.
    Allocator alloc;
    std::vector<GadgetVars> copies;
    for (int j = 1; j < k; ++j) copies.push_back(alloc_gadget(alloc, m, k, j));

    const auto tuples = lex_tuples(xdim, k - 1);
    const VariableId y_base = alloc.next;
    for (int nu = 1; nu <= R; ++nu)
        for (const auto& t : tuples) alloc({"y", {nu}, t});
    auto y_id = [&](int nu, std::size_t rank) {
        return y_base + static_cast<VariableId>((nu - 1) * tuples_per_nu + rank) + 1;
    };
    std::vector<VariableId> u_nu;
    for (int nu = 1; nu <= R; ++nu) u_nu.push_back(alloc({"u", {}, {nu}}));

    DnfSet d;
    d.k = k;
    for (int j = 1; j < k; ++j)
        for (auto& f : gadget_formulas(m, k, copies[j - 1])) d.formulas.push_back(std::move(f));

    auto x_conjuncts = [&](const std::vector<int>& t) {
        std::vector<Literal> lits;
        for (int j = 1; j < k; ++j) lits.push_back(pos(copies[j - 1].x[t[j - 1] - 1]));
        return lits;
    };
    for (int nu = 1; nu <= R; ++nu) {
        DnfFormula f;
        for (std::size_t r = 0; r < tuples.size(); ++r) {
            std::vector<Literal> lits = x_conjuncts(tuples[r]);
            lits.push_back(pos(y_id(nu, r)));
            f.terms.emplace_back(std::move(lits));
        }
        d.formulas.push_back(std::move(f));
    }
    for (int nu = 1; nu <= R; ++nu) {
        DnfFormula f;
        f.terms.emplace_back(std::vector<Literal>{neg(u_nu[nu - 1])});
        for (std::size_t r = 0; r < tuples.size(); ++r) {
            std::vector<Literal> lits = x_conjuncts(tuples[r]);
            lits.push_back(neg(y_id(nu, r)));
            f.terms.emplace_back(std::move(lits));
        }
        d.formulas.push_back(std::move(f));
    }
    DnfFormula z;
    for (int nu = 1; nu <= R; ++nu) z.terms.emplace_back(std::vector<Literal>{pos(u_nu[nu - 1])});
    d.formulas.push_back(std::move(z));

    d.nvars = alloc.next;
    d.names = std::move(alloc.names);
    d.family = FamilyDescriptor{"min_unsat", m, k, std::nullopt, R};
    d.validate();
    return d;
}

XorImplicationPair xor_implication_pair(int m, int k, std::size_t y_cap) {
    require(m >= 2 && k >= 2, "xor_implication_pair requires m, k >= 2");
    const int R = m * (k - 1);
    const int xdim = m * (k - 1);
    const std::uint64_t tuples_per_nu = ipow(static_cast<std::uint64_t>(xdim), k - 1);
    const std::uint64_t y_total =
        tuples_per_nu * static_cast<std::uint64_t>(R) * static_cast<std::uint64_t>(k + 1);
    if (y_total > y_cap)
        throw std::length_error("xor_implication_pair(" + std::to_string(m) + "," +
                                std::to_string(k) + ") needs " + std::to_string(y_total) +
                                " y-variables, over the cap of " + std::to_string(y_cap));

    // Allocation order: gadget copies as in min_unsat_set, then one block of
    // y^{nu,1..k+1}_tuple per (nu, tuple), nu outermost, tuples lexicographic.
    Allocator alloc;
    std::vector<GadgetVars> copies;
    for (int j = 1; j < k; ++j) copies.push_back(alloc_gadget(alloc, m, k, j));

    const auto tuples = lex_tuples(xdim, k - 1);
    const VariableId y_base = alloc.next;
    for (int nu = 1; nu <= R; ++nu)
        for (const auto& t : tuples)
            for (int r = 1; r <= k + 1; ++r) alloc({"y", {nu, r}, t});
    auto y_id = [&](int nu, std::size_t rank, int r) {
        return y_base +
               static_cast<VariableId>(((nu - 1) * tuples_per_nu + rank) * (k + 1) + r);
    };

    DnfSet d;
    d.k = k;
    for (int j = 1; j < k; ++j)
        for (auto& f : gadget_formulas(m, k, copies[j - 1])) d.formulas.push_back(std::move(f));

    auto x_conjuncts = [&](const std::vector<int>& t) {
        std::vector<Literal> lits;
        for (int j = 1; j < k; ++j) lits.push_back(pos(copies[j - 1].x[t[j - 1] - 1]));
        return lits;
    };
    for (int nu = 1; nu <= R; ++nu) {
        DnfFormula f;
        for (std::size_t r = 0; r < tuples.size(); ++r) {
            std::vector<Literal> lits = x_conjuncts(tuples[r]);
            lits.push_back(pos(y_id(nu, r, 1)));
            f.terms.emplace_back(std::move(lits));
        }
        d.formulas.push_back(std::move(f));
    }
    for (int nu = 1; nu <= R; ++nu)
        for (int r2 = 2; r2 <= k + 1; ++r2) {
            DnfFormula f;
            for (std::size_t r = 0; r < tuples.size(); ++r) {
                std::vector<Literal> lits = x_conjuncts(tuples[r]);
                lits.push_back(neg(y_id(nu, r, r2)));
                f.terms.emplace_back(std::move(lits));
            }
            d.formulas.push_back(std::move(f));
        }

    d.nvars = alloc.next;
    d.names = std::move(alloc.names);
    d.family = FamilyDescriptor{"xor_pair", m, k, std::nullopt, std::nullopt};
    d.validate();

    CdXorFormula g;
    g.block_width = k + 1;
    g.nvars = d.nvars;
    g.names = d.names;
    for (int nu = 1; nu <= R; ++nu)
        for (std::size_t r = 0; r < tuples.size(); ++r) {
            std::vector<VariableId> block;
            for (int rr = 1; rr <= k + 1; ++rr) block.push_back(y_id(nu, r, rr));
            g.blocks.push_back(std::move(block));
        }
    for (int nu = 1; nu <= R; ++nu) {
        XorClause clause;
        for (std::size_t r = 0; r < tuples.size(); ++r) {
            const std::size_t bi = (static_cast<std::size_t>(nu) - 1) * tuples.size() + r;
            clause.push_back({true, g.blocks[bi]});
        }
        g.clauses.push_back(std::move(clause));
    }
    g.validate();
    return {std::move(d), std::move(g)};
}

} // namespace kdnf::families

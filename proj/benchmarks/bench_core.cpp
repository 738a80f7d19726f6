#include <kdnf/families.hpp>
#include <kdnf/io.hpp>
#include <kdnf/solver.hpp>
#include <kdnf/verify.hpp>

#include <benchmark/benchmark.h>

namespace {

using namespace kdnf;

DnfSet contradiction_chain(VariableId n) {
    DnfSet d;
    DnfFormula last;
    for (VariableId v = 1; v <= n; ++v) {
        d.formulas.push_back({{Term{{pos(v)}}}});
        last.terms.push_back(Term{{neg(v)}});
    }
    d.formulas.push_back(std::move(last));
    d.nvars = n;
    d.k = 1;
    d.default_names();
    return d;
}

void bm_brute_force(benchmark::State& state) {
    const DnfSet d = contradiction_chain(static_cast<VariableId>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(brute_force_sat(d).status);
}
BENCHMARK(bm_brute_force)->Arg(12)->Arg(16)->Arg(20);

void bm_clausify(benchmark::State& state) {
    const DnfSet d = contradiction_chain(static_cast<VariableId>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(clausify(d).cnf.clauses.size());
}
BENCHMARK(bm_clausify)->Arg(64)->Arg(256);

void bm_dpll(benchmark::State& state) {
    const DnfSet d = contradiction_chain(static_cast<VariableId>(state.range(0)));
    const CnfFormula cnf = clausify(d).cnf;
    for (auto _ : state) benchmark::DoNotOptimize(dpll_sat(cnf).status);
}
BENCHMARK(bm_dpll)->Arg(64)->Arg(256);

void bm_gen_min_unsat(benchmark::State& state) {
    const int m = static_cast<int>(state.range(0)), k = static_cast<int>(state.range(1));
    for (auto _ : state) benchmark::DoNotOptimize(families::min_unsat_set(m, k).nvars);
}
BENCHMARK(bm_gen_min_unsat)->Args({2, 3})->Args({4, 3})->Args({6, 4});

void bm_gen_xor_pair(benchmark::State& state) {
    const int m = static_cast<int>(state.range(0)), k = static_cast<int>(state.range(1));
    for (auto _ : state)
        benchmark::DoNotOptimize(families::xor_implication_pair(m, k).g.blocks.size());
}
BENCHMARK(bm_gen_xor_pair)->Args({2, 3})->Args({4, 4})->Args({6, 4});

void bm_verify_gadget(benchmark::State& state) {
    const int m = static_cast<int>(state.range(0)), k = static_cast<int>(state.range(1));
    VerifyOptions opts;
    opts.solve.brute_cap = 12;
    for (auto _ : state)
        benchmark::DoNotOptimize(check_weight_gadget(m, k, opts).verdict);
}
BENCHMARK(bm_verify_gadget)->Args({2, 3})->Args({3, 3})->Args({2, 4});

void bm_min_unsat_check(benchmark::State& state) {
    const DnfSet d = families::min_unsat_set(2, static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(check_min_unsat(d).verdict);
}
BENCHMARK(bm_min_unsat_check)->Arg(2)->Arg(3);

void bm_roundtrip_kdnf(benchmark::State& state) {
    const DnfSet d = families::min_unsat_set(static_cast<int>(state.range(0)), 4);
    for (auto _ : state) benchmark::DoNotOptimize(parse_kdnf(serialize_kdnf(d)).nvars);
}
BENCHMARK(bm_roundtrip_kdnf)->Arg(3)->Arg(6);

} // namespace

BENCHMARK_MAIN();

#include <rootfun/bezoutian.hpp>
#include <rootfun/functionals.hpp>
#include <rootfun/io.hpp>
#include <rootfun/solver.hpp>

#include <benchmark/benchmark.h>

#include <string>
#include <vector>

using namespace rootfun;

namespace {

PolySystem family(int k, int n, const Field& field) {
    const auto names = default_names(n);
    std::vector<Poly> polys;
    for (int i = 0; i < n; ++i)
        polys.push_back(parse_polynomial(names[i] + "^" + std::to_string(k) + " - " + std::to_string(i + 1), names, field));
    return PolySystem(field, std::move(polys));
}

const Field& gf() {
    static const Field f = Field::prime_field(32003);
    return f;
}

void BM_BezoutDet(benchmark::State& state) {
    const auto sys = family(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)), Field::rationals());
    for (auto _ : state) benchmark::DoNotOptimize(bezout_det(sys));
}
BENCHMARK(BM_BezoutDet)->ArgsProduct({{3, 5, 8}, {1, 2}});

void BM_ExtensionContext(benchmark::State& state) {
    const auto sys = family(static_cast<int>(state.range(0)), 2, gf());
    for (auto _ : state) {
        const ExtensionContext ctx(sys);
        benchmark::DoNotOptimize(&ctx);
    }
}
BENCHMARK(BM_ExtensionContext)->DenseRange(2, 4);

void BM_BuildOperator(benchmark::State& state) {
    const auto sys = family(static_cast<int>(state.range(0)), 2, gf());
    const ExtensionContext ctx(sys);
    const auto l = BoundedFunctional::coordinate(sys.basis(), Monomial({1, 1}), sys.field());
    for (auto _ : state) benchmark::DoNotOptimize(ctx.build_operator(l));
}
BENCHMARK(BM_BuildOperator)->DenseRange(2, 4);

void solve_family(benchmark::State& state, int n, const Field& field, bool fast) {
    const auto sys = family(static_cast<int>(state.range(0)), n, field);
    SolveOptions opts;
    opts.fast_path = fast;
    for (auto _ : state) benchmark::DoNotOptimize(solve(sys, opts));
    state.counters["D"] = static_cast<double>(sys.dimension());
}

void BM_SolveUnivariateFast(benchmark::State& state) { solve_family(state, 1, gf(), true); }
void BM_SolveUnivariateLiteral(benchmark::State& state) { solve_family(state, 1, gf(), false); }
void BM_SolveBivariateFast(benchmark::State& state) { solve_family(state, 2, gf(), true); }
void BM_SolveBivariateLiteral(benchmark::State& state) { solve_family(state, 2, gf(), false); }
void BM_SolveBivariateRational(benchmark::State& state) { solve_family(state, 2, Field::rationals(), true); }

BENCHMARK(BM_SolveUnivariateFast)->DenseRange(4, 12, 4);
BENCHMARK(BM_SolveUnivariateLiteral)->DenseRange(4, 12, 4);
BENCHMARK(BM_SolveBivariateFast)->DenseRange(2, 4);
BENCHMARK(BM_SolveBivariateLiteral)->DenseRange(2, 4);
BENCHMARK(BM_SolveBivariateRational)->DenseRange(2, 3);

}  // namespace
BENCHMARK_MAIN();

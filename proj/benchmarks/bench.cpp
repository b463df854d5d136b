#include "tautring/partitions.hpp"
#include "tautring/projectors.hpp"
#include "tautring/rewrite.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace tautring;

namespace {

const SurfaceModel& k3() {
    static const SurfaceModel model = SurfaceModel::k3();
    return model;
}

const CohomModel& k3cohom() {
    static const CohomModel model = CohomModel::k3(k3());
    return model;
}

std::vector<TautExpr> diagonalHeavyExprs(int count, int arity) {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<int> factor(1, arity);
    std::vector<TautExpr> out;
    for (int i = 0; i < count; ++i) {
        TautExpr e(arity);
        std::vector<Generator> gens;
        for (int g = 0; g < 4; ++g) {
            int r = factor(rng), s = factor(rng);
            while (s == r) s = factor(rng);
            gens.push_back(Generator::diagonal(r, s));
        }
        gens.push_back(Generator::point(factor(rng)));
        e.addTerm(Monomial(std::move(gens)), rational(1));
        out.push_back(std::move(e));
    }
    return out;
}

} // namespace

static void BM_NormalizeDiagonalChains(benchmark::State& state) {
    const auto exprs = diagonalHeavyExprs(64, static_cast<int>(state.range(0)));
    size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(normalize(exprs[i % exprs.size()], k3()));
        ++i;
    }
}
BENCHMARK(BM_NormalizeDiagonalChains)->Arg(3)->Arg(4)->Arg(6);

static void BM_SmallDiagonalDegree(benchmark::State& state) {
    for (auto _ : state) {
        TautExpr e = multiply(smallDiagonal(3, 3, {1, 2, 3}, k3()),
                              TautExpr::diagonal(3, 2, 3), k3());
        for (int d = 3; d >= 1; --d) e = pushforward(e, d, k3());
        benchmark::DoNotOptimize(e);
    }
}
BENCHMARK(BM_SmallDiagonalDegree);

static void BM_ComposeProjectors(benchmark::State& state) {
    const int m = static_cast<int>(state.range(0));
    const ProjectorFamily fam = powerProjectors(m, k3());
    const Correspondence& mid = fam.projector(2 * m);
    for (auto _ : state)
        benchmark::DoNotOptimize(compose(mid, mid, k3()));
}
BENCHMARK(BM_ComposeProjectors)->Arg(1)->Arg(2)->Arg(3);

static void BM_MultiplicativityTriple(benchmark::State& state) {
    const int m = static_cast<int>(state.range(0));
    const ProjectorFamily fam = powerProjectors(m, k3());
    for (auto _ : state)
        benchmark::DoNotOptimize(
            checkTriple(fam, 2 * m, 2 * m, 2 * m, k3(), k3cohom(), m >= 3));
}
BENCHMARK(BM_MultiplicativityTriple)->Arg(1)->Arg(2)->Arg(3);

static void BM_EvaluateCohomology(benchmark::State& state) {
    const TautExpr delta3 = smallDiagonal(3, 3, {1, 2, 3}, k3());
    for (auto _ : state)
        benchmark::DoNotOptimize(evaluate(delta3, k3cohom()));
}
BENCHMARK(BM_EvaluateCohomology);

static void BM_GradedTraces(benchmark::State& state) {
    const ProjectorFamily fam = powerProjectors(2, k3());
    for (auto _ : state)
        benchmark::DoNotOptimize(gradedTraces(fam.projector(4), k3cohom()));
}
BENCHMARK(BM_GradedTraces);

static void BM_HilbertPoincare(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(poincarePolynomial(dcmDecomposition(n), k3cohom()));
}
BENCHMARK(BM_HilbertPoincare)->Arg(3)->Arg(5);

BENCHMARK_MAIN();

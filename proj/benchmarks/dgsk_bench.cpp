// Microbenchmarks for the hot paths: algebra model construction, the full
// classification pipeline per parameter case, and both sides of the
// non-Calabi-Yau membership decision.

#include <benchmark/benchmark.h>

#include "dgsk/calabi_yau.hpp"
#include "dgsk/classifier.hpp"
#include "dgsk/cohomology.hpp"
#include "dgsk/sweep.hpp"

using namespace dgsk;

namespace {

SklyaninParams point(int a, int b, int c) {
    return *validate_quiet(Rational(a), Rational(b), Rational(c));
}

void BM_model_build(benchmark::State& state) {
    const SklyaninParams p = point(1, 2, 3);
    const auto cap = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        QuadraticAlgebraModel alg(p, cap);
        benchmark::DoNotOptimize(alg.dim(cap));
    }
}
BENCHMARK(BM_model_build)->Arg(3)->Arg(4)->Arg(5);

void BM_classify_generic(benchmark::State& state) {
    const SklyaninParams p = point(1, 2, 3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(classify(p));
    }
}
BENCHMARK(BM_classify_generic);

void BM_classify_anti_diagonal(benchmark::State& state) {
    const SklyaninParams p = point(1, -1, 0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(classify(p));
    }
}
BENCHMARK(BM_classify_anti_diagonal);

void BM_classify_diagonal(benchmark::State& state) {
    const SklyaninParams p = point(1, 1, 0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(classify(p));
    }
}
BENCHMARK(BM_classify_diagonal);

Matrix sample_rank_one(SampleSource& src) {
    Vec u(3), v(3);
    for (int i = 0; i < 3; ++i) {
        u[i] = src.small_rational();
        v[i] = src.small_rational();
    }
    Matrix m(3, 3);
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            m.at(i, j) = u[i] * v[j];
        }
    }
    return m;
}

void BM_noncy_fast(benchmark::State& state) {
    SampleSource src(7);
    std::vector<Matrix> pool;
    for (int i = 0; i < 64; ++i) {
        pool.push_back(sample_rank_one(src));
    }
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(noncy_fast(pool[i++ % pool.size()]));
    }
}
BENCHMARK(BM_noncy_fast);

void BM_noncy_oracle(benchmark::State& state) {
    SampleSource src(7);
    std::vector<Matrix> pool;
    for (int i = 0; i < 64; ++i) {
        pool.push_back(sample_rank_one(src));
    }
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(noncy_oracle(pool[i++ % pool.size()]));
    }
}
BENCHMARK(BM_noncy_oracle);

void BM_qpl_equivalent(benchmark::State& state) {
    SampleSource src(11);
    Matrix m(3, 3);
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            m.at(i, j) = src.small_rational();
        }
    }
    MonomialMatrix c;
    c.sigma = {2, 0, 1};
    c.scales = {RadicalScalar(Rational(2)), RadicalScalar(Rational(Integer(1), Integer(3))),
                RadicalScalar(Rational(-5))};
    auto img = qpl_apply(c, m);
    Matrix n(3, 3);
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            n.at(i, j) = img[i][j].as_rational();
        }
    }
    for (auto _ : state) {
        benchmark::DoNotOptimize(qpl_equivalent(m, n));
    }
}
BENCHMARK(BM_qpl_equivalent);

void BM_cohomology_truncated(benchmark::State& state) {
    const SklyaninParams p = point(1, -1, 0);
    const auto top = static_cast<std::size_t>(state.range(0));
    QuadraticAlgebraModel alg(p, top + 1 < 3 ? 3 : top + 1);
    DifferentialSpec d = DifferentialSpec::from_values(
        NcPoly(Rational(1), Word::parse("xx")), NcPoly(Rational(1), Word::parse("yx")),
        NcPoly(Rational(1), Word::parse("xz")));
    for (auto _ : state) {
        benchmark::DoNotOptimize(truncated_cohomology(alg, d, top));
    }
}
BENCHMARK(BM_cohomology_truncated)->Arg(3)->Arg(4);

}  // namespace

BENCHMARK_MAIN();

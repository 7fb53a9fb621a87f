// Serial reference kernels against their OpenMP versions.

#include <benchmark/benchmark.h>

#include <random>

#include "coarse/kernels.hpp"
#include "coarse/oracle.hpp"

using namespace coarse;
using kernels::Word;

namespace
{

std::vector<Word> random_bits(std::size_t n, std::size_t words, unsigned per_row, std::uint64_t seed)
{
    std::mt19937_64 g(seed);
    std::vector<Word> bits(n * words, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (unsigned k = 0; k < per_row; ++k) {
            const std::size_t j = g() % n;
            bits[i * words + j / 64] |= Word{1} << (j % 64);
        }
    return bits;
}

std::vector<IndexSet> random_rows(std::size_t n, unsigned per_row, std::uint64_t seed)
{
    std::mt19937_64 g(seed);
    std::vector<IndexSet> rows(n);
    for (auto& r : rows) {
        for (unsigned k = 0; k < per_row; ++k)
            r.push_back(static_cast<Index>(g() % n));
        std::sort(r.begin(), r.end());
        r.erase(std::unique(r.begin(), r.end()), r.end());
    }
    return rows;
}

template <bool Parallel>
void compose_dense_bench(benchmark::State& state)
{
    const auto n = static_cast<std::size_t>(state.range(0));
    const std::size_t words = kernels::words_for(n);
    const auto a = random_bits(n, words, 8, 1);
    const auto b = random_bits(n, words, 8, 2);
    std::vector<Word> out(n * words);
    for (auto _ : state) {
        if constexpr (Parallel)
            kernels::compose_dense(a, b, out, n, words);
        else
            kernels::compose_dense_serial(a, b, out, n, words);
        benchmark::DoNotOptimize(out.data());
    }
}

template <bool Parallel>
void compose_sparse_bench(benchmark::State& state)
{
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto a = random_rows(n, 6, 3);
    const auto b = random_rows(n, 6, 4);
    for (auto _ : state) {
        auto out = Parallel ? kernels::compose_sparse(a, b, n) : kernels::compose_sparse_serial(a, b, n);
        benchmark::DoNotOptimize(out);
    }
}

template <bool Parallel>
void oracle_bench(benchmark::State& state)
{
    const Window w(static_cast<std::size_t>(state.range(0)));
    const auto e = chain_relation(w, 1);
    const auto h = chain_relation(w, 2);
    for (auto _ : state) {
        auto r = Parallel ? brute_min_families(e, h) : brute_min_families_serial(e, h);
        benchmark::DoNotOptimize(r);
    }
}

} // namespace

BENCHMARK(compose_dense_bench<false>)->Arg(1024)->Arg(4096);
BENCHMARK(compose_dense_bench<true>)->Arg(1024)->Arg(4096);
BENCHMARK(compose_sparse_bench<false>)->Arg(10000)->Arg(100000);
BENCHMARK(compose_sparse_bench<true>)->Arg(10000)->Arg(100000);
BENCHMARK(oracle_bench<false>)->Arg(7)->Arg(9);
BENCHMARK(oracle_bench<true>)->Arg(7)->Arg(9);

BENCHMARK_MAIN();

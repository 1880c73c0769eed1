#include <benchmark/benchmark.h>

#include <cstddef>
#include <random>
#include <string>
#include <vector>

#include "sublat/burnside.hpp"
#include "sublat/context_lattice.hpp"
#include "sublat/matrix.hpp"
#include "sublat/projector.hpp"
#include "sublat/spin.hpp"
#include "sublat/subspace.hpp"

namespace {

using namespace sublat;

GaussianRational small_scalar(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-4, 4);
    std::uniform_int_distribution<int> den(1, 3);
    Rational re(num(rng), den(rng));
    Rational im(num(rng), den(rng));
    re.canonicalize();
    im.canonicalize();
    return {re, im};
}

ExactMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
    std::vector<GaussianRational> entries;
    entries.reserve(rows * cols);
    for (std::size_t k = 0; k < rows * cols; ++k) entries.push_back(small_scalar(rng));
    return ExactMatrix(rows, cols, std::move(entries));
}

Subspace random_subspace(std::mt19937_64& rng, std::size_t n, std::size_t vectors) {
    std::vector<ExactVector> vs;
    vs.reserve(vectors);
    for (std::size_t k = 0; k < vectors; ++k) {
        std::vector<GaussianRational> entries;
        entries.reserve(n);
        for (std::size_t j = 0; j < n; ++j) entries.push_back(small_scalar(rng));
        vs.emplace_back(std::move(entries));
    }
    return Subspace::from_span(vs, n);
}

/// Rank-one context: a random basis orthogonalized exactly, one projector
/// per basis line.
MaximalContext rank_one_context(std::size_t n) {
    std::mt19937_64 rng(11 + n);
    std::vector<ExactVector> basis;
    while (basis.size() < n) {
        ExactVector v = random_matrix(rng, 1, n).row(0);
        for (const ExactVector& u : basis) v = v - (inner(u, v) / inner(u, u)) * u;
        if (!v.is_zero()) basis.push_back(std::move(v));
    }
    std::vector<ExactMatrix> members;
    members.reserve(n);
    for (const ExactVector& v : basis) {
        const std::vector<ExactVector> span{v};
        members.push_back(projector_from_subspace(Subspace::from_span(span, n)).matrix());
    }
    return validate_context("bench", members);
}

void bm_rref(benchmark::State& state) {
    std::mt19937_64 rng(7);
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    const ExactMatrix m = random_matrix(rng, n, n);
    for (auto _ : state) benchmark::DoNotOptimize(rref(m));
}
BENCHMARK(bm_rref)->Arg(4)->Arg(8)->Arg(12);

void bm_meet(benchmark::State& state) {
    std::mt19937_64 rng(9);
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    const Subspace u = random_subspace(rng, n, n / 2);
    const Subspace v = random_subspace(rng, n, n / 2);
    for (auto _ : state) benchmark::DoNotOptimize(meet(u, v));
}
BENCHMARK(bm_meet)->Arg(4)->Arg(8);

void bm_context_lattice(benchmark::State& state) {
    const MaximalContext ctx = rank_one_context(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(context_lattice(ctx));
}
BENCHMARK(bm_context_lattice)->Arg(3)->Arg(4);

void bm_algebra_closure(benchmark::State& state) {
    const std::vector<ExactMatrix> gens = spin::generator_matrices();
    for (auto _ : state) benchmark::DoNotOptimize(algebra_closure(gens));
}
BENCHMARK(bm_algebra_closure);

void bm_projector_validate(benchmark::State& state) {
    const MaximalContext ctx = rank_one_context(4);
    std::vector<ExactMatrix> members;
    for (const Projector& p : ctx.members()) members.push_back(p.matrix());
    for (auto _ : state) benchmark::DoNotOptimize(validate_context("again", members));
}
BENCHMARK(bm_projector_validate);

} // namespace

BENCHMARK_MAIN();

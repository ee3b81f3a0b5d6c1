#include <benchmark/benchmark.h>

#include <liedegen/catalog.hpp>

using namespace liedegen;

namespace {

void BM_ScalarNormalize(benchmark::State& state) {
    auto syms = Symbols::make({"lam"});
    const Scalar a = Scalar::parse("(lam*t^3 - t^3 + lam*t - 1)/(lam*t^2 - t)", syms);
    const Scalar b = Scalar::parse("(t^2 - 1)/(4*t)", syms);
    for (auto _ : state) {
        benchmark::DoNotOptimize(a * b + b / a);
    }
}
BENCHMARK(BM_ScalarNormalize);

void BM_JacobiLambdaFamily(benchmark::State& state) {
    LieAlgebra mu = *find_fixture("g7_0.4")->algebra;
    for (auto _ : state) {
        benchmark::DoNotOptimize(jacobi_residuals(mu));
    }
}
BENCHMARK(BM_JacobiLambdaFamily);

void BM_WitnessVerify12346E(benchmark::State& state) {
    Fixture fx = *find_fixture("12346E");
    LieAlgebra mu = *fx.algebra;
    DeformationCurve curve = deform(
        mu, build_mu_D(mu, fx.complement_vector(), fx.ideal_subspace(), fx.ideal_derivation));
    LieAlgebra mu1 = specialize(curve, 1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(verify_witness(mu1, curve, fx.witness));
    }
}
BENCHMARK(BM_WitnessVerify12346E);

void BM_FullCertificateLambda(benchmark::State& state) {
    Fixture fx = *find_fixture("g7_0.4");
    for (auto _ : state) {
        benchmark::DoNotOptimize(certify_fixture(fx));
    }
}
BENCHMARK(BM_FullCertificateLambda);

void BM_DerivationSpace(benchmark::State& state) {
    LieAlgebra mu = *find_fixture("12346E")->algebra;
    for (auto _ : state) {
        benchmark::DoNotOptimize(derivation_space(mu));
    }
}
BENCHMARK(BM_DerivationSpace);

}  // namespace

BENCHMARK_MAIN();

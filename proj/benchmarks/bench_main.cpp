#include <benchmark/benchmark.h>

#include "hyperghz/ghz.hpp"
#include "hyperghz/hgsa.hpp"
#include "hyperghz/hgsg.hpp"
#include "hyperghz/metrics.hpp"
#include "hyperghz/swapping.hpp"

namespace {

using namespace hyperghz;

const std::vector<std::string> kABC = {"A", "B", "C"};

void BM_MakeHyperGhz(benchmark::State& state) {
    for (auto _ : state) {
        auto st = make_hyper_ghz({3, -1, 2, +1}, kABC);
        benchmark::DoNotOptimize(st.amplitudes().data());
    }
}
BENCHMARK(BM_MakeHyperGhz);

void BM_AnalyzerBranches(benchmark::State& state) {
    const PureState input = make_hyper_ghz({2, -1, 3, +1}, kABC);
    stage1_contract_map(3);  // warm the cached unitary
    for (auto _ : state) {
        auto branches = run_hgsa_branches(input);
        benchmark::DoNotOptimize(branches.data());
    }
}
BENCHMARK(BM_AnalyzerBranches);

void BM_AnalyzerExhaustive(benchmark::State& state) {
    stage1_contract_map(3);
    for (auto _ : state) {
        for (int i = 1; i <= 4; ++i)
            for (int p : {+1, -1})
                for (int j = 1; j <= 4; ++j)
                    for (int s : {+1, -1}) {
                        auto branches = run_hgsa_branches(make_hyper_ghz({i, p, j, s}, kABC));
                        benchmark::DoNotOptimize(branches.data());
                    }
    }
}
BENCHMARK(BM_AnalyzerExhaustive)->Unit(benchmark::kMillisecond);

void BM_Generation(benchmark::State& state) {
    for (auto _ : state) {
        auto result = run_hgsg(1, InteractionMode::ideal());
        benchmark::DoNotOptimize(result.branches.data());
    }
}
BENCHMARK(BM_Generation);

void BM_NetworkBuild(benchmark::State& state) {
    for (auto _ : state) {
        auto net = build_network_state();
        benchmark::DoNotOptimize(net.amplitudes().data());
    }
}
BENCHMARK(BM_NetworkBuild)->Unit(benchmark::kMillisecond);

void BM_SwapProjection(benchmark::State& state) {
    static const PureState net = build_network_state();
    for (auto _ : state) {
        auto [prob, remote] = project_123(net, {2, -1, 3, +1});
        benchmark::DoNotOptimize(prob);
        benchmark::DoNotOptimize(remote.amplitudes().data());
    }
}
BENCHMARK(BM_SwapProjection)->Unit(benchmark::kMillisecond);

void BM_SweepPoint(benchmark::State& state) {
    CavityParams p;
    p.g = 0.8 * 1.2;
    p.kappa_s = 0.2;
    p.gamma = 0.1;
    for (auto _ : state) {
        const double wd = solve_balanced_detuning(p);
        auto fd = fidelity_double(double_sided_coeffs(p.at_omega(wd)));
        const double ws = solve_pi_half_detuning(p);
        const double fp = fidelity_single(single_sided_coeffs(p.at_omega(ws)));
        benchmark::DoNotOptimize(fd);
        benchmark::DoNotOptimize(fp);
    }
}
BENCHMARK(BM_SweepPoint);

}  // namespace

BENCHMARK_MAIN();

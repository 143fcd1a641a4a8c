// Serial reference vs OpenMP for the two numeric hot loops.
#include <benchmark/benchmark.h>

#include "thetawb/invariants.hpp"
#include "thetawb/kernels.hpp"

using namespace thetawb;

namespace {

struct ThetaInput {
  SiegelTau tau;
  std::vector<Eigen::VectorXcd> zs;
};

const ThetaInput& theta_input(int g) {
  static std::vector<ThetaInput> cache = [] {
    std::vector<ThetaInput> v;
    for (int gg = 2; gg <= 4; ++gg) {
      SiegelTau tau = random_tau(gg, 2024);
      std::vector<Eigen::VectorXcd> zs;
      for (const auto& s : sample_kummer(tau, 256, 11)) zs.push_back(s.z);
      v.push_back({std::move(tau), std::move(zs)});
    }
    return v;
  }();
  return cache.at(static_cast<std::size_t>(g - 2));
}

template <auto Batch>
void BM_theta2_batch(benchmark::State& state) {
  const auto& in = theta_input(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(Batch(in.tau, in.zs, 1e-12));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(in.zs.size()));
}

template <auto Eval>
void BM_evaluation_matrix(benchmark::State& state) {
  static const SiegelTau tau = random_tau(3, 2024);
  static const auto pts = points_of(sample_kummer(tau, 512, 11));
  static const auto basis = [] {
    std::vector<RatPoly> b;
    for (const auto& m : all_monomials(3, 3)) b.push_back(RatPoly::term(3, m, 1));
    return b;
  }();
  for (auto _ : state) benchmark::DoNotOptimize(Eval(pts, basis));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(pts.size() * basis.size()));
}

}  // namespace

BENCHMARK(BM_theta2_batch<kernels::serial::theta2_batch>)->Name("theta2_batch/serial")->DenseRange(2, 4)->UseRealTime();
BENCHMARK(BM_theta2_batch<kernels::omp::theta2_batch>)->Name("theta2_batch/omp")->DenseRange(2, 4)->UseRealTime();
BENCHMARK(BM_evaluation_matrix<kernels::serial::evaluation_matrix>)->Name("evaluation_matrix/serial")->UseRealTime();
BENCHMARK(BM_evaluation_matrix<kernels::omp::evaluation_matrix>)->Name("evaluation_matrix/omp")->UseRealTime();

BENCHMARK_MAIN();

#include "gsp/denoise.hpp"
#include "gsp/frames.hpp"
#include "gsp/matrix_market.hpp"
#include "gsp/rng.hpp"
#include "gsp/sgwt.hpp"
#include "gsp/spectral.hpp"

#include <benchmark/benchmark.h>

#include <sstream>

using namespace gsp;

namespace {

SparseGraph make_grid(int rows, int cols) {
  std::vector<Eigen::Triplet<double>> t;
  auto id = [&](int r, int c) { return r * cols + c; };
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      if (c + 1 < cols) {
        t.emplace_back(id(r, c), id(r, c + 1), 1.0);
        t.emplace_back(id(r, c + 1), id(r, c), 1.0);
      }
      if (r + 1 < rows) {
        t.emplace_back(id(r, c), id(r + 1, c), 1.0);
        t.emplace_back(id(r + 1, c), id(r, c), 1.0);
      }
    }
  }
  SparseMatrixd m(rows * cols, rows * cols);
  m.setFromTriplets(t.begin(), t.end());
  return make_sparse_graph(std::move(m));
}

Eigen::VectorXd random_signal(Eigen::Index n) {
  Rng rng(7);
  Eigen::VectorXd f(n);
  for (Eigen::Index i = 0; i < n; ++i) f[i] = rng.normal();
  return f;
}

void BM_Eigensort(benchmark::State& state) {
  const int side = static_cast<int>(state.range(0));
  const SparseMatrixd lap = laplacian_mat(make_grid(side, side));
  for (auto _ : state) {
    benchmark::DoNotOptimize(eigensort(lap));
  }
  state.SetComplexityN(side * side);
}
BENCHMARK(BM_Eigensort)->RangeMultiplier(2)->Range(4, 16)->Complexity();

void BM_TightFrame(benchmark::State& state) {
  const int side = static_cast<int>(state.range(0));
  const EigenSystem es = eigensort(laplacian_mat(make_grid(side, side)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(tight_frame(es, 2.0));
  }
}
BENCHMARK(BM_TightFrame)->RangeMultiplier(2)->Range(4, 16);

void BM_AnalysisExplicitFrame(benchmark::State& state) {
  const int side = static_cast<int>(state.range(0));
  const EigenSystem es = eigensort(laplacian_mat(make_grid(side, side)));
  const TightFrame frame = tight_frame(es, 2.0);
  const Eigen::VectorXd f = random_signal(side * side);
  for (auto _ : state) {
    benchmark::DoNotOptimize(analysis(f, frame));
  }
}
BENCHMARK(BM_AnalysisExplicitFrame)->RangeMultiplier(2)->Range(4, 16);

void BM_ForwardSgwt(benchmark::State& state) {
  const int side = static_cast<int>(state.range(0));
  const EigenSystem es = eigensort(laplacian_mat(make_grid(side, side)));
  const Eigen::VectorXd f = random_signal(side * side);
  for (auto _ : state) {
    benchmark::DoNotOptimize(forward_sgwt(f, es, 2.0));
  }
}
BENCHMARK(BM_ForwardSgwt)->RangeMultiplier(2)->Range(4, 16);

void BM_SureSweep(benchmark::State& state) {
  const int side = static_cast<int>(state.range(0));
  const SparseGraph g = make_grid(side, side);
  const EigenSystem es = eigensort(laplacian_mat(g));
  const TightFrame frame = tight_frame(es, 2.0);
  const Eigen::VectorXd diag = diag_frame_gram(frame);
  const Eigen::VectorXd f = randsignal(0.05, 2, g, 11);
  const Eigen::VectorXd noisy = add_noise(f, NoiseModel{0.02}, 12);
  const WaveletCoeffs wcn = analysis(noisy, frame);
  const WaveletCoeffs wcf = analysis(f, frame);
  const Eigen::VectorXd grid = donoho_johnstone_grid(wcn);
  for (auto _ : state) {
    benchmark::DoNotOptimize(sure_mse_thresh(wcn, wcf, grid, diag, Beta(2.0),
                                             0.02, ThreshPolicy::Dependent,
                                             false));
  }
}
BENCHMARK(BM_SureSweep)->RangeMultiplier(2)->Range(4, 16);

void BM_ParseMatrixMarket(benchmark::State& state) {
  const int side = static_cast<int>(state.range(0));
  const SparseGraph g = make_grid(side, side);
  const std::string text =
      write_matrix_market(g.weights, MmSymmetry::Symmetric, MmField::Real);
  for (auto _ : state) {
    benchmark::DoNotOptimize(parse_matrix_market(text));
  }
  state.SetBytesProcessed(state.iterations() * text.size());
}
BENCHMARK(BM_ParseMatrixMarket)->RangeMultiplier(4)->Range(8, 32);

}  // namespace

BENCHMARK_MAIN();

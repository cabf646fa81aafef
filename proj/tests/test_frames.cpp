#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gsp/frames.hpp"
#include "gsp/graph.hpp"
#include "gsp/spectral.hpp"
#include "testutil.hpp"

using namespace gsp;

TEST_CASE("omega endpoints and midpoint") {
  CHECK(omega(0.0, 2.0) == 1.0);
  CHECK(omega(0.5, 2.0) == 1.0);  // flat on [0, 1/b]
  CHECK(omega(1.5, 2.0) == 0.0);
  CHECK(omega(1.0, 2.0) == doctest::Approx(0.0).scale(1e-12));
  // raised-cosine transition hits 1/2 at the midpoint of [1/b, 1]
  CHECK(omega(0.75, 2.0) == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("omega is non-increasing and bounded") {
  for (double b : {1.5, 2.0, 4.0}) {
    double prev = 1.0;
    for (int i = 0; i <= 1000; ++i) {
      const double x = 1.5 * i / 1000.0;
      const double w = omega(x, b);
      CHECK(w >= 0.0);
      CHECK(w <= 1.0);
      CHECK(w <= prev + 1e-15);
      prev = w;
    }
  }
}

TEST_CASE("omega rejects bad parameters") {
  CHECK_THROWS_AS(omega(0.5, 1.0), ValidationError);
  CHECK_THROWS_AS(omega(0.5, 0.5), ValidationError);
  CHECK_THROWS_AS(omega(-0.1, 2.0), ValidationError);
}

TEST_CASE("scale count") {
  CHECK(scale_count(8.0, 2.0) == 5);   // floor(log 8 / log 2) + 2
  CHECK(scale_count(2.0, 2.0) == 3);
  CHECK(scale_count(7.9, 2.0) == 4);
  CHECK(scale_count(8.1, 2.0) == 5);
  CHECK(scale_count(10.0, 4.0) == 3);
  CHECK(scale_count(1.0, 2.0) == 2);
  // exact powers stay put under tiny representational jitter
  CHECK(scale_count(8.0 * (1 + 1e-13), 2.0) == 5);
  CHECK_THROWS_WITH_AS(scale_count(0.0, 2.0), doctest::Contains("degenerate"),
                       ValidationError);
}

TEST_CASE("psi telescopes to a partition of unity") {
  const FilterBank bank(8.0, 2.0);
  CHECK(bank.max_scale() == 5);
  CHECK(bank.psi(0, 0.0) == 1.0);

  const double x = bank.lmax() / 3.0;
  double total = 0.0;
  for (int j = 0; j <= bank.max_scale(); ++j) total += bank.psi(j, x);
  CHECK(total == doctest::Approx(1.0).epsilon(1e-14));

  CHECK_THROWS_AS(bank.psi(-1, 0.0), ValidationError);
  CHECK_THROWS_AS(bank.psi(bank.max_scale() + 1, 0.0), ValidationError);
}

TEST_CASE("partition of unity at 1e-12 over dense samples") {
  struct Config {
    double b, lmax;
  };
  for (const Config cfg : {Config{2.0, 8.0}, Config{4.0, 10.0}, Config{3.0, 5.7}}) {
    const FilterBank bank(cfg.lmax, cfg.b);
    double worst = 0.0;
    for (int s = 0; s < 10000; ++s) {
      const double x = cfg.lmax * s / 9999.0;
      double total = 0.0;
      for (int j = 0; j <= bank.max_scale(); ++j) total += bank.psi(j, x);
      worst = std::max(worst, std::abs(total - 1.0));
    }
    CAPTURE(cfg.b);
    CHECK(worst <= 1e-12);
  }
}

TEST_CASE("psi clamps eigenvalue jitter past lmax") {
  const FilterBank bank(3.0, 2.0);
  double total = 0.0;
  for (int j = 0; j <= bank.max_scale(); ++j) {
    total += bank.psi(j, 3.0 + 1e-13);
  }
  CHECK(total == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("psi range stays in [0, 1]") {
  const FilterBank bank(11.3, 2.0);
  for (int j = 0; j <= bank.max_scale(); ++j) {
    for (int s = 0; s <= 500; ++s) {
      const double v = bank.psi(j, 11.3 * s / 500.0);
      CHECK(v >= 0.0);
      CHECK(v <= 1.0);
    }
  }
}

TEST_CASE("tight frame on K2") {
  const SparseGraph k2 = testutil::make_k2();
  const EigenSystem es = eigensort(laplacian_mat(k2));
  CHECK(es.evalues[0] == doctest::Approx(0.0).scale(1e-14));
  CHECK(es.evalues[1] == doctest::Approx(2.0).epsilon(1e-14));

  const TightFrame frame = tight_frame(es, 2.0);
  CHECK(frame.max_scale == 3);
  CHECK(frame.matrix.rows() == 2 * 4);
  CHECK(frame.matrix.cols() == 2);

  const Eigen::MatrixXd gram = frame.matrix.transpose() * frame.matrix;
  CHECK((gram - Eigen::MatrixXd::Identity(2, 2)).cwiseAbs().maxCoeff() <= 1e-10);
}

TEST_CASE("tight frame row blocks are symmetric sqrt filters") {
  const SparseGraph p3 = testutil::make_path_graph(3);
  const EigenSystem es = eigensort(laplacian_mat(p3));
  const TightFrame frame = tight_frame(es, 2.0);
  const FilterBank bank(es.lmax, 2.0);

  for (int j = 0; j <= frame.max_scale; ++j) {
    const Eigen::MatrixXd block = frame.block(j);
    CHECK((block - block.transpose()).cwiseAbs().maxCoeff() <= 1e-10);

    // brute-force U diag(sqrt(psi_j(lambda))) U^T from the eigenpairs
    Eigen::VectorXd d(3);
    for (int i = 0; i < 3; ++i) d[i] = std::sqrt(bank.psi(j, es.evalues[i]));
    const Eigen::MatrixXd expected =
        es.evectors * d.asDiagonal() * es.evectors.transpose();
    CHECK((block - expected).cwiseAbs().maxCoeff() <= 1e-12);

    // applying the block twice reproduces the unsquared filter
    Eigen::VectorXd psi_d(3);
    for (int i = 0; i < 3; ++i) psi_d[i] = bank.psi(j, es.evalues[i]);
    const Eigen::MatrixXd squared =
        es.evectors * psi_d.asDiagonal() * es.evectors.transpose();
    CHECK((block * block - squared).cwiseAbs().maxCoeff() <= 1e-8);
  }
}

TEST_CASE("tight frame on grid1") {
  const SparseGraph grid1 = testutil::load_grid1();
  const EigenSystem es = eigensort(laplacian_mat(grid1));
  const TightFrame frame = tight_frame(es, 2.0);

  const int expected_scales = scale_count(es.lmax, 2.0);
  CHECK(frame.max_scale == expected_scales);
  CHECK(frame.matrix.rows() == (expected_scales + 1) * 252);
  CHECK(frame.matrix.cols() == 252);

  const Eigen::MatrixXd gram = frame.matrix.transpose() * frame.matrix;
  CHECK((gram - Eigen::MatrixXd::Identity(252, 252)).cwiseAbs().maxCoeff() <=
        1e-8);
  // frame-operator trace == n
  CHECK(frame.matrix.squaredNorm() == doctest::Approx(252.0).epsilon(1e-9));
}

TEST_CASE("tight frame rejects a degenerate spectrum") {
  SparseMatrixd w(1, 1);
  const SparseGraph g = make_sparse_graph(w);
  const EigenSystem es = eigensort(laplacian_mat(g));
  CHECK_THROWS_WITH_AS(tight_frame(es, 2.0), doctest::Contains("degenerate"),
                       ValidationError);
}

TEST_CASE("filter curves") {
  const FilterBank bank(8.0, 2.0);
  const FilterCurves curves = filter_curves(bank, 33);
  CHECK(curves.x.size() == 33);
  CHECK(curves.values.cols() == 6);

  SUBCASE("rows sum to one") {
    for (Eigen::Index s = 0; s < curves.x.size(); ++s) {
      CHECK(std::abs(curves.values.row(s).sum() - 1.0) <= 1e-12);
    }
  }
  SUBCASE("first row is (1, 0, ..., 0)") {
    CHECK(curves.values(0, 0) == 1.0);
    for (Eigen::Index j = 1; j < curves.values.cols(); ++j) {
      CHECK(curves.values(0, j) == 0.0);
    }
  }
  SUBCASE("matches direct psi evaluation at the right edge") {
    for (Eigen::Index j = 0; j < curves.values.cols(); ++j) {
      CHECK(curves.values(32, j) ==
            doctest::Approx(bank.psi(j, 8.0)).epsilon(1e-14));
    }
  }
  SUBCASE("needs two samples") {
    CHECK_THROWS_AS(filter_curves(bank, 1), ValidationError);
  }
}

#include <cmath>
#include <random>
#include <stdexcept>

#include "doctest.h"
#include "oracles.hpp"
#include "squeezesim/gaussian_state.hpp"

using namespace squeezesim;

namespace {

double max_abs_diff(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

}  // namespace

TEST_CASE("vacuum is the SNU reference state") {
  const GaussianState v = vacuum(3);
  CHECK(v.n_modes() == 3);
  CHECK(v.mean().norm() == 0.0);
  CHECK(max_abs_diff(v.cov(), Eigen::MatrixXd::Identity(6, 6)) == 0.0);
  CHECK(purity(v) == doctest::Approx(1.0).epsilon(1e-12));
  const Eigen::VectorXd nu = symplectic_eigenvalues(v);
  for (int k = 0; k < 3; ++k) {
    CHECK(nu(k) == doctest::Approx(1.0).epsilon(1e-12));
  }
  CHECK(is_physical(v));
  CHECK_THROWS_AS(vacuum(0), std::invalid_argument);
}

TEST_CASE("constructor validates shapes and symmetrizes") {
  CHECK_THROWS_AS(GaussianState(Eigen::VectorXd::Zero(3),
                                Eigen::MatrixXd::Identity(3, 3)),
                  std::invalid_argument);
  CHECK_THROWS_AS(GaussianState(Eigen::VectorXd::Zero(2),
                                Eigen::MatrixXd::Identity(4, 4)),
                  std::invalid_argument);

  Eigen::MatrixXd skewed(2, 2);
  skewed << 1.0, 0.5, 0.1, 1.0;
  const GaussianState s(Eigen::VectorXd::Zero(2), skewed);
  CHECK(s.cov()(0, 1) == doctest::Approx(0.3).epsilon(1e-15));
  CHECK(s.cov()(0, 1) == s.cov()(1, 0));
}

TEST_CASE("single-mode squeezing hits the textbook variances") {
  const double r = 0.3;
  const GaussianState s = squeeze(vacuum(1), 0, r);
  CHECK(s.cov()(0, 0) == doctest::Approx(1.8221188003905089).epsilon(1e-14));
  CHECK(s.cov()(1, 1) == doctest::Approx(0.5488116360940264).epsilon(1e-14));
  CHECK(s.cov()(0, 1) == doctest::Approx(0.0));
  CHECK(purity(s) == doctest::Approx(1.0).epsilon(1e-12));

  // phase = pi/2 turns the ellipse: x becomes the squeezed axis.
  const GaussianState t = squeeze(vacuum(1), 0, r, 1.5707963267948966);
  CHECK(t.cov()(0, 0) == doctest::Approx(0.5488116360940264).epsilon(1e-12));
  CHECK(t.cov()(1, 1) == doctest::Approx(1.8221188003905089).epsilon(1e-12));

  CHECK_THROWS_AS(squeeze(vacuum(1), 0, -0.1), std::invalid_argument);
  CHECK_THROWS_AS(squeeze(vacuum(1), 1, 0.1), std::out_of_range);
}

TEST_CASE("two-mode squeezing gives thermal marginals and EPR cross block") {
  const double r = 0.138;
  const GaussianState s = two_mode_squeeze(vacuum(2), 0, 1, r);
  const double ch = 1.0383303973942724;  // cosh(0.276)
  const double sh = 0.279517466633031;   // sinh(0.276)
  for (int m : {0, 1}) {
    const GaussianState marginal = reduced(s, {m});
    CHECK(max_abs_diff(marginal.cov(), ch * Eigen::Matrix2d::Identity()) <
          1e-14);
  }
  CHECK(s.cov()(0, 2) == doctest::Approx(sh).epsilon(1e-14));
  CHECK(s.cov()(1, 3) == doctest::Approx(-sh).epsilon(1e-14));
  CHECK(s.cov()(0, 3) == doctest::Approx(0.0));
  CHECK(purity(s) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(is_physical(s));

  CHECK_THROWS_AS(two_mode_squeeze(vacuum(2), 0, 0, 0.1),
                  std::invalid_argument);
  CHECK_THROWS_AS(two_mode_squeeze(vacuum(2), 0, 1, -0.1),
                  std::invalid_argument);
}

TEST_CASE("two opposed single-mode squeezers on a 50:50 splitter make TMSV") {
  const double r = 0.37;
  GaussianState s = vacuum(2);
  s = squeeze(s, 0, r, 1.5707963267948966);
  s = squeeze(s, 1, r, 0.0);
  s = beamsplitter(s, 0, 1, 0.5);
  const GaussianState reference = two_mode_squeeze(vacuum(2), 0, 1, r);
  CHECK(max_abs_diff(s.cov(), reference.cov()) < 1e-12);
}

TEST_CASE("displacement moves the mean only") {
  const GaussianState s = displace(vacuum(2), 1, 0.7, -0.2);
  CHECK(s.mean()(2) == 0.7);
  CHECK(s.mean()(3) == -0.2);
  CHECK(s.mean()(0) == 0.0);
  CHECK(max_abs_diff(s.cov(), Eigen::MatrixXd::Identity(4, 4)) == 0.0);

  // 3-4-5 displacement of vacuum.
  CHECK(displace(vacuum(1), 0, 3.0, 4.0).mean().norm() == 5.0);
}

TEST_CASE("phase rotation turns quadratures into each other") {
  const double r = 0.4;
  const GaussianState s = squeeze(vacuum(1), 0, r);
  const GaussianState t = phase_rotate(s, 0, 1.5707963267948966);
  CHECK(t.cov()(0, 0) == doctest::Approx(s.cov()(1, 1)).epsilon(1e-12));
  CHECK(t.cov()(1, 1) == doctest::Approx(s.cov()(0, 0)).epsilon(1e-12));

  const GaussianState d = phase_rotate(displace(vacuum(1), 0, 1.0, 0.0), 0,
                                       1.5707963267948966);
  CHECK(d.mean()(0) == doctest::Approx(0.0));
  CHECK(d.mean()(1) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("beamsplitter sign convention on the means") {
  GaussianState s = displace(vacuum(2), 0, 1.0, 0.0);
  s = beamsplitter(s, 0, 1, 0.75);
  CHECK(s.mean()(0) == doctest::Approx(0.8660254037844386).epsilon(1e-14));
  CHECK(s.mean()(2) == doctest::Approx(-0.5).epsilon(1e-14));
  CHECK_THROWS_AS(beamsplitter(vacuum(2), 0, 1, 1.5), std::invalid_argument);
  CHECK_THROWS_AS(beamsplitter(vacuum(2), 1, 1, 0.5), std::invalid_argument);
}

TEST_CASE("50:50 splitter averages a squeezed input with vacuum") {
  const double r = 0.45;
  const GaussianState mixed =
      beamsplitter(squeeze(vacuum(2), 0, r), 0, 1, 0.5);
  for (int m : {0, 1}) {
    CHECK(mixed.cov()(2 * m, 2 * m) ==
          doctest::Approx(0.5 * (std::exp(2.0 * r) + 1.0)).epsilon(1e-13));
    CHECK(mixed.cov()(2 * m + 1, 2 * m + 1) ==
          doctest::Approx(0.5 * (std::exp(-2.0 * r) + 1.0)).epsilon(1e-13));
  }
}

TEST_CASE("loss interpolates toward vacuum") {
  const double r = 0.138;
  const double eta = 0.5;
  const GaussianState s = loss(squeeze(vacuum(1), 0, r), 0, eta);
  CHECK(s.cov()(0, 0) ==
        doctest::Approx(eta * 1.3178478640273033 + 0.5).epsilon(1e-14));
  CHECK(s.cov()(1, 1) ==
        doctest::Approx(eta * 0.7588129307612413 + 0.5).epsilon(1e-14));
  CHECK(purity(s) == doctest::Approx(0.9905529763972947).epsilon(1e-12));
  CHECK(is_physical(s));

  // eta = 1 is the identity, eta = 0 prepares vacuum.
  const GaussianState full = loss(squeeze(vacuum(1), 0, r), 0, 1.0);
  CHECK(max_abs_diff(full.cov(), squeeze(vacuum(1), 0, r).cov()) == 0.0);
  const GaussianState none = loss(displace(vacuum(1), 0, 2.0, 1.0), 0, 0.0);
  CHECK(max_abs_diff(none.cov(), Eigen::MatrixXd::Identity(2, 2)) < 1e-15);
  CHECK(none.mean().norm() == 0.0);

  CHECK_THROWS_AS(loss(vacuum(1), 0, -0.1), std::invalid_argument);
  CHECK_THROWS_AS(loss(vacuum(1), 0, 1.1), std::invalid_argument);
}

TEST_CASE("loss equals beamsplitter dilation on random states") {
  std::mt19937 rng(20240214u);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_int_distribution<int> modes(1, 3);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = modes(rng);
    const GaussianState s = testutil::random_circuit(rng, n, 10, true);
    const int mode = std::uniform_int_distribution<int>(0, n - 1)(rng);
    const double eta = unit(rng);
    const GaussianState direct = loss(s, mode, eta);
    const GaussianState dilated = testutil::loss_via_beamsplitter(s, mode, eta);
    CHECK(max_abs_diff(direct.cov(), dilated.cov()) < 1e-12);
    CHECK((direct.mean() - dilated.mean()).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("quadrature variance against closed forms") {
  const GaussianState v = vacuum(2);
  CHECK(quadrature_variance(v, QuadratureForm::x_axis(2, 0)) == 1.0);
  CHECK(quadrature_variance(v, QuadratureForm::p_axis(2, 1)) == 1.0);

  Eigen::VectorXd c(4);
  c << 1.0, 0.0, -1.0, 0.0;
  CHECK(quadrature_variance(v, QuadratureForm(c)) == doctest::Approx(2.0));

  CHECK_THROWS_AS(QuadratureForm(Eigen::VectorXd::Zero(4)),
                  std::invalid_argument);
  CHECK_THROWS_AS(quadrature_variance(v, QuadratureForm::x_axis(1, 0)),
                  std::invalid_argument);
}

TEST_CASE("symplectic eigenvalues and physicality") {
  GaussianState thermal(Eigen::VectorXd::Zero(2),
                        3.0 * Eigen::MatrixXd::Identity(2, 2));
  const Eigen::VectorXd nu = symplectic_eigenvalues(thermal);
  CHECK(nu(0) == doctest::Approx(3.0).epsilon(1e-12));
  CHECK(purity(thermal) == doctest::Approx(1.0 / 3.0).epsilon(1e-12));

  // Mixed squeezed state with a known symplectic spectrum.
  const GaussianState lossy = loss(squeeze(vacuum(1), 0, 0.5), 0, 0.7);
  CHECK(symplectic_eigenvalues(lossy)(0) ==
        doctest::Approx(1.108193966155024).epsilon(1e-12));

  GaussianState below(Eigen::VectorXd::Zero(2),
                      0.5 * Eigen::MatrixXd::Identity(2, 2));
  CHECK_FALSE(is_physical(below));
  CHECK(is_physical(below, 0.6));

  // TMSV is pure: both symplectic eigenvalues stay at 1.
  const Eigen::VectorXd tmsv_nu =
      symplectic_eigenvalues(two_mode_squeeze(vacuum(2), 0, 1, 0.9));
  CHECK(tmsv_nu(0) == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(tmsv_nu(1) == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("tensor product and partial trace invert each other") {
  const GaussianState a = squeeze(vacuum(1), 0, 0.2);
  const GaussianState b = displace(vacuum(2), 1, 0.4, -0.1);
  const GaussianState joint = tensor_product(a, b);
  CHECK(joint.n_modes() == 3);
  CHECK(max_abs_diff(reduced(joint, {0}).cov(), a.cov()) == 0.0);
  CHECK(max_abs_diff(reduced(joint, {1, 2}).cov(), b.cov()) == 0.0);
  CHECK((reduced(joint, {1, 2}).mean() - b.mean()).norm() == 0.0);

  // Mode reordering through reduced().
  const GaussianState swapped = reduced(joint, {2, 0});
  CHECK(swapped.cov()(2, 2) == a.cov()(0, 0));

  CHECK_THROWS_AS(reduced(joint, {}), std::invalid_argument);
  CHECK_THROWS_AS(reduced(joint, {0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(reduced(joint, {3}), std::out_of_range);
}

TEST_CASE("random circuits stay physical") {
  std::mt19937 rng(7071u);
  std::uniform_int_distribution<int> modes(1, 3);
  std::uniform_int_distribution<int> depth(1, 12);
  for (int trial = 0; trial < 2000; ++trial) {
    const GaussianState s =
        testutil::random_circuit(rng, modes(rng), depth(rng), true);
    CHECK(symplectic_eigenvalues(s).minCoeff() >= 1.0 - kPhysicalityTol);
  }
}

TEST_CASE("lossless circuits keep purity and symplectic spectrum at 1") {
  std::mt19937 rng(424242u);
  std::uniform_int_distribution<int> modes(1, 3);
  std::uniform_int_distribution<int> depth(1, 12);
  for (int trial = 0; trial < 500; ++trial) {
    const GaussianState s =
        testutil::random_circuit(rng, modes(rng), depth(rng), false);
    CHECK(purity(s) == doctest::Approx(1.0).epsilon(1e-9));
    const Eigen::VectorXd nu = symplectic_eigenvalues(s);
    CHECK(nu.minCoeff() >= 1.0 - 1e-9);
    CHECK(nu.maxCoeff() <= 1.0 + 1e-9);
  }
}

TEST_CASE("sequential losses compose multiplicatively") {
  std::mt19937 rng(90210u);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_int_distribution<int> modes(1, 3);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = modes(rng);
    const GaussianState s = testutil::random_circuit(rng, n, 8, true);
    const int mode = std::uniform_int_distribution<int>(0, n - 1)(rng);
    const double eta1 = unit(rng);
    const double eta2 = unit(rng);
    const GaussianState twice = loss(loss(s, mode, eta1), mode, eta2);
    const GaussianState once = loss(s, mode, eta1 * eta2);
    CHECK(max_abs_diff(twice.cov(), once.cov()) < 1e-10);
    CHECK((twice.mean() - once.mean()).cwiseAbs().maxCoeff() < 1e-10);
  }
}

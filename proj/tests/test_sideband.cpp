#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "doctest.h"
#include "oracles.hpp"
#include "squeezesim/sideband.hpp"

using namespace squeezesim;

TEST_CASE("vacuum sidebands sit exactly at the shot noise level") {
  for (double omega : {1.0, 2.0e5, 3.1e7}) {
    for (double alpha : {0.0, 1.0, 2000.0}) {
      const SidebandPair p = prepare_pair(omega, 0.0, alpha);
      CHECK(joint_phase_variance(p) == doctest::Approx(1.0).epsilon(1e-13));
      CHECK(joint_amplitude_variance(p) ==
            doctest::Approx(1.0).epsilon(1e-13));
    }
  }
}

TEST_CASE("phase-squeezed pair: joint variances and thermal marginals") {
  const double r = 0.138;
  const SidebandPair p = prepare_pair(3.1e7, r, 430.0);
  CHECK(joint_phase_variance(p) ==
        doctest::Approx(0.7588129307612413).epsilon(1e-13));
  CHECK(joint_amplitude_variance(p) ==
        doctest::Approx(1.3178478640273033).epsilon(1e-13));
  CHECK(p.carrier_alpha == 430.0);

  std::mt19937 rng(271828u);
  std::uniform_real_distribution<double> rdist(0.0, 1.5);
  for (int trial = 0; trial < 20; ++trial) {
    const double rr = rdist(rng);
    const SidebandPair q = prepare_pair(1.0e6, rr, 0.0);
    const double ch = std::cosh(2.0 * rr);
    for (int m : {0, 1}) {
      const Eigen::MatrixXd marginal = reduced(q.state, {m}).cov();
      CHECK((marginal - ch * Eigen::Matrix2d::Identity())
                .cwiseAbs()
                .maxCoeff() < 1e-10);
    }
  }
}

TEST_CASE("sideband pair validation") {
  CHECK_THROWS_AS(prepare_pair(0.0, 0.1, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(prepare_pair(-1.0, 0.1, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(prepare_pair(1.0, 0.1, -1.0), std::invalid_argument);
  CHECK_THROWS_AS(SidebandPair(1.0, vacuum(3), 0.0), std::invalid_argument);
}

TEST_CASE("symmetric loss pulls joint variances toward 1") {
  const double r = 0.6;
  const double eta = 0.41;
  const SidebandPair p = prepare_pair(5.0e6, r, 100.0);
  const SidebandPair q = apply_symmetric_loss(p, eta);
  CHECK(joint_phase_variance(q) ==
        doctest::Approx(eta * std::exp(-2.0 * r) + 1.0 - eta).epsilon(1e-13));
  CHECK(joint_amplitude_variance(q) ==
        doctest::Approx(eta * std::exp(2.0 * r) + 1.0 - eta).epsilon(1e-13));
  CHECK(q.carrier_alpha == doctest::Approx(std::sqrt(eta) * 100.0));
  CHECK(q.omega == p.omega);

  // Full loss lands exactly on vacuum noise.
  const SidebandPair dead = apply_symmetric_loss(p, 0.0);
  CHECK(joint_phase_variance(dead) == doctest::Approx(1.0).epsilon(1e-13));

  // Identity at eta = 1.
  const SidebandPair kept = apply_symmetric_loss(p, 1.0);
  CHECK(joint_phase_variance(kept) == joint_phase_variance(p));
  CHECK(kept.carrier_alpha == p.carrier_alpha);
}

TEST_CASE("squeezing erodes strictly as transmission drops") {
  for (double r : {0.05, 0.138, 0.9}) {
    const SidebandPair p = prepare_pair(1.0e6, r, 50.0);
    double previous = joint_phase_variance(p);
    for (int k = 19; k >= 0; --k) {
      const double v =
          joint_phase_variance(apply_symmetric_loss(p, 0.05 * k));
      CHECK(v > previous);
      CHECK(v <= 1.0 + 1e-13);
      previous = v;
    }
    CHECK(previous == doctest::Approx(1.0).epsilon(1e-13));
  }
}

TEST_CASE("homodyne arc interpolates amplitude and phase variances") {
  const double r = 0.138;
  const SidebandPair p = prepare_pair(2.0e6, r, 0.0);
  const double v_amp = joint_amplitude_variance(p);
  const double v_phase = joint_phase_variance(p);

  std::vector<double> thetas;
  for (int k = 0; k <= 24; ++k) {
    thetas.push_back(testutil::kTwoPi * k / 24.0);
  }
  const std::vector<ArcPoint> arc = homodyne_arc(p, thetas);
  REQUIRE(arc.size() == thetas.size());
  for (const ArcPoint& pt : arc) {
    const double c = std::cos(pt.theta);
    const double s = std::sin(pt.theta);
    CHECK(pt.variance ==
          doctest::Approx(v_amp * c * c + v_phase * s * s).epsilon(1e-10));
  }
  // Quarter turn reads the squeezed quadrature.
  CHECK(arc[6].variance == doctest::Approx(v_phase).epsilon(1e-10));
  CHECK(arc[0].variance == doctest::Approx(v_amp).epsilon(1e-10));

  // Vacuum arc is flat at 1.
  const std::vector<ArcPoint> flat =
      homodyne_arc(prepare_pair(2.0e6, 0.0, 0.0), thetas);
  for (const ArcPoint& pt : flat) {
    CHECK(pt.variance == doctest::Approx(1.0).epsilon(1e-13));
  }

  // On a fine grid the arc extremes are exactly the two joint variances.
  std::vector<double> fine;
  for (int k = 0; k <= 720; ++k) {
    fine.push_back(testutil::kTwoPi * k / 720.0);
  }
  double lo = 1e300;
  double hi = -1e300;
  for (const ArcPoint& pt : homodyne_arc(p, fine)) {
    lo = std::min(lo, pt.variance);
    hi = std::max(hi, pt.variance);
  }
  CHECK(lo == doctest::Approx(v_phase).epsilon(1e-9));
  CHECK(hi == doctest::Approx(v_amp).epsilon(1e-9));
}

TEST_CASE("joint variances match explicit quadrature forms") {
  std::mt19937 rng(5150u);
  std::uniform_real_distribution<double> rdist(0.0, 1.2);
  Eigen::VectorXd p_sum(4), x_diff(4), x_sum(4), p_diff(4);
  p_sum << 0.0, 1.0, 0.0, 1.0;
  x_diff << 1.0, 0.0, -1.0, 0.0;
  x_sum << 1.0, 0.0, 1.0, 0.0;
  p_diff << 0.0, 1.0, 0.0, -1.0;
  for (int trial = 0; trial < 25; ++trial) {
    SidebandPair p = prepare_pair(3.0e6, rdist(rng), 12.0);
    if (trial % 2 == 1) {
      p = apply_symmetric_loss(p, 0.3 + 0.7 * rdist(rng) / 1.2);
    }
    const double phase =
        0.25 * (quadrature_variance(p.state, QuadratureForm(p_sum)) +
                quadrature_variance(p.state, QuadratureForm(x_diff)));
    const double amp =
        0.25 * (quadrature_variance(p.state, QuadratureForm(x_sum)) +
                quadrature_variance(p.state, QuadratureForm(p_diff)));
    CHECK(joint_phase_variance(p) == doctest::Approx(phase).epsilon(1e-12));
    CHECK(joint_amplitude_variance(p) == doctest::Approx(amp).epsilon(1e-12));
  }
}

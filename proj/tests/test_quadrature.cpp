// Copyright 2026 The hpw Authors
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <numbers>

#include "doctest.h"
#include "hpw/chars.hpp"
#include "hpw/quadrature.hpp"

using namespace hpw;

namespace {

const double kPi = std::numbers::pi;

double gaussian(const Vec& y) { return std::exp(-y.squaredNorm()); }

}  // namespace

TEST_CASE("Gauss-Legendre rule") {
  const GaussRule r = gauss_legendre(20);
  double w = 0.0, x4 = 0.0;
  for (int i = 0; i < 20; ++i) {
    w += r.weights[i];
    x4 += r.weights[i] * std::pow(r.nodes[i], 38);
  }
  CHECK(w == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(x4 == doctest::Approx(2.0 / 39.0).epsilon(1e-13));
  CHECK_THROWS_AS(gauss_legendre(0), Error);
}

TEST_CASE("Gaussian integrals over the algebra") {
  const RootSystem a1 = build_root_system(GroupKind::A1);
  CHECK(integrate_invariant(build_chamber_quadrature(a1, 1.0, 64, 0.0), gaussian) ==
        doctest::Approx(std::pow(kPi, 1.5)).epsilon(1e-10));
  const RootSystem t2 = build_root_system(GroupKind::Torus, 2);
  CHECK(integrate_invariant(build_chamber_quadrature(t2, 1.0, 64, 0.0), gaussian) ==
        doctest::Approx(kPi).epsilon(1e-12));
  const RootSystem a2 = build_root_system(GroupKind::A2);
  CHECK(integrate_invariant(build_chamber_quadrature(a2, 1.0, 96, 0.0), gaussian) ==
        doctest::Approx(std::pow(kPi, 4)).epsilon(1e-8));
  CHECK_THROWS_AS(build_chamber_quadrature(a1, 1.0, 4, 0.0), Error);
  CHECK_THROWS_AS(build_chamber_quadrature(a1, 0.0, 16, 0.0), Error);
  const auto q = build_chamber_quadrature(a1, 1.0, 16, 0.0);
  CHECK_THROWS_AS(integrate_invariant(q, [](const Vec&) { return std::nan(""); }), Error);
}

TEST_CASE("linear exponential moments") {
  // The Ad-invariant part of e^{-<mu,Y>} is the orbital average.
  const RootSystem rs = build_root_system(GroupKind::A1);
  const Vec mu = 2.0 * shifted(rs, make_weight(rs, {3}));
  for (double t : {0.5, 1.0, 2.0}) {
    const auto q = build_chamber_quadrature(rs, t, 64, mu.norm());
    const double got = integrate_invariant(q, [&](const Vec& y) {
      return orbital_average(rs, mu, y, OrbitalScheme::closed_form()).value * std::exp(-y.squaredNorm() / t);
    });
    CHECK(got == doctest::Approx(gaussian_linear_moment(rs, mu, t)).epsilon(1e-10));
  }
}

TEST_CASE("holomorphic norm constant at t = 1") {
  const RootSystem a1 = build_root_system(GroupKind::A1);
  for (auto [label, expected] : {std::pair{0, 9.180620810611472}, std::pair{1, 41.14468794583562}}) {
    const Weight lambda = make_weight(a1, {label});
    const int d = dimension(a1, lambda);
    const auto q = build_chamber_quadrature(a1, 1.0, 64, 2.0 * shifted(a1, lambda).norm());
    const double c = integrate_invariant(q, [&](const Vec& y) {
      return weyl_char_holo(a1, lambda, 2.0 * y) * eta(a1, y) * std::exp(-y.squaredNorm()) / d;
    });
    CHECK(c == doctest::Approx(expected).epsilon(1e-10));
  }
}

TEST_CASE("order doubling is stable") {
  for (GroupKind kind : {GroupKind::A1, GroupKind::A2}) {
    const RootSystem rs = build_root_system(kind);
    const Weight lambda = make_weight(rs, std::vector<int>(rs.rank, 2));
    const HoloCharacter chi(rs, lambda);
    const double mu = 2.0 * shifted(rs, lambda).norm();
    auto f = [&](const Vec& y) { return chi(2.0 * y) * std::exp(-y.squaredNorm() / 1.5); };
    const int base = kind == GroupKind::A1 ? 48 : 64;
    const double lo = integrate_invariant(build_chamber_quadrature(rs, 1.5, base, mu), f);
    const double hi = integrate_invariant(build_chamber_quadrature(rs, 1.5, 2 * base, mu), f);
    CHECK(std::abs(lo - hi) <= 1e-10 * std::abs(hi));
  }
}

TEST_CASE("chamber reduction matches the Cartesian oracle") {
  const GroupModel model(GroupKind::A1);
  const RootSystem& rs = model.root_system();
  const Weight lambda = make_weight(rs, {2});
  const double mu = 2.0 * shifted(rs, lambda).norm();
  auto inv = [&](const Vec& y) { return weyl_char_holo(rs, lambda, 2.0 * y); };
  const double chamber =
      integrate_invariant(build_chamber_quadrature(rs, 1.0, 64, mu), [&](const Vec& y) { return inv(y) * std::exp(-y.squaredNorm()); });
  auto full = [&](const Vec& x) { return inv(model.chamber_representative(x)); };
  const Estimate grid = cartesian_oracle_integrate(model, full, 1.0, CartesianScheme::grid_a1(128, mu));
  CHECK(grid.value == doctest::Approx(chamber).epsilon(1e-10));
  const Estimate mc = cartesian_oracle_integrate(model, full, 1.0, CartesianScheme::monte_carlo(200000, 5));
  CHECK(std::abs(mc.value - chamber) <= 3.0 * mc.std_error);

  const GroupModel m2(GroupKind::A2);
  const RootSystem& r2 = m2.root_system();
  const Weight l2 = make_weight(r2, {1, 0});
  const HoloCharacter chi2(r2, l2);
  const double c2 = integrate_invariant(build_chamber_quadrature(r2, 1.0, 96, 2.0 * shifted(r2, l2).norm()),
                                        [&](const Vec& y) { return chi2(y) * std::exp(-y.squaredNorm()); });
  const Estimate mc2 = cartesian_oracle_integrate(
      m2, [&](const Vec& x) { return chi2(m2.chamber_representative(x)); }, 1.0, CartesianScheme::monte_carlo(100000, 6));
  CHECK(std::abs(mc2.value - c2) <= 3.0 * mc2.std_error);
  CHECK_THROWS_AS(cartesian_oracle_integrate(m2, [](const Vec&) { return 1.0; }, 1.0, CartesianScheme::grid_a1(32)), Error);
}

TEST_CASE("flag volume calibration") {
  const RootSystem a1 = build_root_system(GroupKind::A1);
  const FlagVolumeCalibration c1 = calibrate_flag_volume(a1);
  CHECK(c1.value == doctest::Approx(std::pow(2.0, 1.5) * kPi).epsilon(1e-10));
  CHECK(a1.flag_volume == doctest::Approx(c1.value).epsilon(1e-10));
  CHECK(std::abs(c1.mc_value - c1.value) <= 3.0 * c1.mc_std_error);
  const RootSystem a2 = build_root_system(GroupKind::A2);
  const FlagVolumeCalibration c2 = calibrate_flag_volume(a2, 100000, 2);
  CHECK(c2.value == doctest::Approx(4.0 * std::sqrt(3.0) * std::pow(kPi, 3)).epsilon(1e-8));
  CHECK(a2.flag_volume == doctest::Approx(c2.value).epsilon(1e-8));
  CHECK(calibrate_flag_volume(build_root_system(GroupKind::Torus, 3)).value == 1.0);
}

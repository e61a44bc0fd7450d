// Copyright 2026 The hpw Authors
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <numbers>

#include <unsupported/Eigen/MatrixFunctions>

#include "doctest.h"
#include "hpw/chars.hpp"
#include "hpw/models.hpp"
#include "hpw/rng.hpp"

using namespace hpw;

namespace {

double max_abs(const CMat& m) { return m.cwiseAbs().maxCoeff(); }

Mat2c cartan_exp(const GroupModel& model, double theta) {
  // exp(Y) for Y = i diag(theta, -theta).
  Vec y(1);
  y << std::sqrt(2.0) * theta;
  return Mat2c(model.cartan_element(y)).exp();
}

}  // namespace

TEST_CASE("algebra bases are orthonormal with commuting Cartan elements") {
  for (GroupKind kind : {GroupKind::A1, GroupKind::A2}) {
    const GroupModel model(kind);
    const auto& basis = model.algebra_basis();
    for (std::size_t a = 0; a < basis.size(); ++a) {
      CHECK(max_abs(basis[a] + basis[a].adjoint()) < 1e-15);
      CHECK(std::abs(basis[a].trace()) < 1e-15);
      for (std::size_t b = 0; b < basis.size(); ++b) {
        const double ip = -(basis[a] * basis[b]).trace().real();
        CHECK(std::abs(ip - (a == b ? 1.0 : 0.0)) < 1e-14);
      }
    }
    const int rank = model.root_system().rank;
    for (int a = 0; a < rank; ++a)
      for (int b = 0; b < rank; ++b) CHECK(max_abs(basis[a] * basis[b] - basis[b] * basis[a]) < 1e-14);
  }
  CHECK_THROWS_AS(GroupModel(GroupKind::Torus), Error);
}

TEST_CASE("irrep generators reproduce the su(2) structure constants") {
  const GroupModel model(GroupKind::A1);
  const auto& e = model.algebra_basis();
  for (int n = 0; n <= 6; ++n) {
    const IrrepMatrices m = make_irrep(n);
    CHECK(m.dim == n + 1);
    for (int a = 0; a < 3; ++a) {
      CHECK(max_abs(m.generators[a] + m.generators[a].adjoint()) < 1e-13);
      for (int b = 0; b < 3; ++b) {
        const Vec f = model.algebra_coords(e[a] * e[b] - e[b] * e[a]);
        CMat expected = CMat::Zero(m.dim, m.dim);
        for (int c = 0; c < 3; ++c) expected += f(c) * m.generators[c];
        const CMat got = m.generators[a] * m.generators[b] - m.generators[b] * m.generators[a];
        CHECK(max_abs(got - expected) < 1e-12);
      }
    }
  }
  CHECK_THROWS_AS(make_irrep(-1), Error);
}

TEST_CASE("rep_matrix basics") {
  const GroupModel model(GroupKind::A1);
  Stream stream(11);
  CHECK(max_abs(rep_matrix(make_irrep(0), model.haar_sample(stream)) - CMat::Identity(1, 1)) < 1e-14);
  CHECK(max_abs(rep_matrix(make_irrep(1), Mat2c::Identity()) - CMat::Identity(2, 2)) < 1e-14);
  // The spin-1/2 representation is the defining one.
  for (int k = 0; k < 20; ++k) {
    const CMat x = model.haar_sample(stream);
    CHECK(max_abs(rep_matrix(make_irrep(1), x) - x) < 1e-12);
  }
  CHECK(max_abs(rep_matrix(make_irrep(3), -Mat2c::Identity()) + CMat::Identity(4, 4)) < 1e-12);
  CHECK(max_abs(rep_matrix(make_irrep(2), -Mat2c::Identity()) - CMat::Identity(3, 3)) < 1e-12);
}

TEST_CASE("su2_log inverts the exponential") {
  const GroupModel model(GroupKind::A1);
  Stream stream(5);
  for (int k = 0; k < 100; ++k) {
    const Mat2c x = model.haar_sample(stream);
    const Vec c = su2_log(x);
    CHECK(c.norm() <= std::sqrt(2.0) * std::numbers::pi + 1e-12);
    CHECK(max_abs(Mat2c(model.algebra_element(c)).exp() - x) < 1e-12);
  }
}

TEST_CASE("character traces at exp(Y)") {
  const GroupModel model(GroupKind::A1);
  const RootSystem& rs = model.root_system();
  for (double theta : {0.3, 0.7, 1.9}) {
    Vec y(1);
    y << std::sqrt(2.0) * theta;
    const Mat2c x = cartan_exp(model, theta);
    // spin 1: sin(3 theta)/sin(theta); at the doubled point this is sin(6 theta)/sin(2 theta).
    CHECK(std::abs(rep_matrix(make_irrep(2), x).trace() - std::sin(3 * theta) / std::sin(theta)) < 1e-12);
    const auto chi = weyl_char_compact(rs, make_weight(rs, {2}), y);
    REQUIRE(chi.has_value());
    CHECK(std::abs(rep_matrix(make_irrep(2), x).trace() - *chi) < 1e-12);
    CHECK(std::abs(rep_matrix(make_irrep(2), cartan_exp(model, 2 * theta)).trace() -
                   std::sin(6 * theta) / std::sin(2 * theta)) < 1e-12);
  }
}

TEST_CASE("unitarity and multiplicativity on Haar samples") {
  const GroupModel model(GroupKind::A1);
  Stream stream(2024);
  double unit_err = 0.0, mult_err = 0.0;
  for (int n : {1, 2, 3, 4}) {
    const IrrepMatrices m = make_irrep(n);
    for (int k = 0; k < 250; ++k) {
      const Mat2c x = model.haar_sample(stream);
      const Mat2c y = model.haar_sample(stream);
      const CMat tx = rep_matrix(m, x);
      unit_err = std::max(unit_err, max_abs(tx.adjoint() * tx - CMat::Identity(m.dim, m.dim)));
      mult_err = std::max(mult_err, max_abs(rep_matrix(m, x * y) - tx * rep_matrix(m, y)));
    }
  }
  CHECK(unit_err < 1e-12);
  CHECK(mult_err < 1e-11);
}

TEST_CASE("rep_matrix_holo") {
  const GroupModel model(GroupKind::A1);
  const RootSystem& rs = model.root_system();
  Stream stream(3);
  const Mat2c x = model.haar_sample(stream);
  CHECK(max_abs(rep_matrix_holo(make_irrep(2), x, Vec::Zero(3)) - rep_matrix(make_irrep(2), x)) < 1e-13);

  for (double theta : {0.1, 0.5, 1.2}) {
    Vec y = Vec::Zero(3);
    y(0) = std::sqrt(2.0) * theta;
    const CMat f = holo_factor(make_irrep(1), y);
    CHECK(max_abs(f - f.adjoint()) < 1e-13);
    const double hs = rep_matrix_holo(make_irrep(1), Mat2c::Identity(), y).squaredNorm();
    CHECK(hs == doctest::Approx(std::sinh(4 * theta) / std::sinh(2 * theta)).epsilon(1e-12));
  }

  // ||T(exp iY)||^2_HS = chi^C(exp 2iY), and trace T(exp iY) = chi^C(exp iY).
  for (int n = 0; n <= 6; ++n) {
    const IrrepMatrices m = make_irrep(n);
    const Weight lambda = make_weight(rs, {n});
    for (int k = 0; k < 10; ++k) {
      Vec y(3);
      y << stream.normal(), stream.normal(), stream.normal();
      const Vec rep = model.chamber_representative(y);
      const CMat f = holo_factor(m, y);
      CHECK(f.squaredNorm() == doctest::Approx(weyl_char_holo(rs, lambda, 2.0 * rep)).epsilon(1e-10));
      CHECK(std::abs(f.trace() - weyl_char_holo(rs, lambda, rep)) <
            1e-11 * std::max(1.0, weyl_char_holo(rs, lambda, rep)));
      // Chebyshev route on the 2x2 complexified element.
      const Mat2c g = su2_polar(model, x, y);
      const Complex tr = rep_matrix_holo(m, x, y).trace();
      CHECK(std::abs(su2_character(n, g) - tr) < 1e-10 * std::max(1.0, std::abs(tr)));
    }
  }
}

TEST_CASE("Haar samples obey Schur orthogonality") {
  for (GroupKind kind : {GroupKind::A1, GroupKind::A2}) {
    const GroupModel model(kind);
    Stream stream(77);
    RunningStats re, im, chi, chi2;
    const int samples = 100000;
    for (int k = 0; k < samples; ++k) {
      const CMat g = model.haar_sample(stream);
      CHECK_MESSAGE(std::abs(g.determinant() - 1.0) < 1e-12, "det must be 1");
      re.add(g(0, 0).real());
      im.add(g(1, 0).imag());
      const Complex tr = g.trace();
      chi.add(tr.real());
      chi2.add(std::norm(tr));
    }
    CHECK(std::abs(re.mean()) <= 3 * re.std_error());
    CHECK(std::abs(im.mean()) <= 3 * im.std_error());
    CHECK(std::abs(chi.mean()) <= 3 * chi.std_error());
    CHECK(std::abs(chi2.mean() - 1.0) <= 3 * chi2.std_error());
  }
}

TEST_CASE("chamber representative of conjugated Cartan elements") {
  for (GroupKind kind : {GroupKind::A1, GroupKind::A2}) {
    const GroupModel model(kind);
    const RootSystem& rs = model.root_system();
    Stream stream(9);
    for (int k = 0; k < 20; ++k) {
      Vec y(rs.rank);
      for (int i = 0; i < rs.rank; ++i) y(i) = stream.normal();
      const CMat g = model.haar_sample(stream);
      const Vec coords = model.algebra_coords(g * model.cartan_element(y) * g.adjoint());
      CHECK((model.chamber_representative(coords) - to_dominant_chamber(rs, y)).norm() < 1e-12);
    }
  }
}

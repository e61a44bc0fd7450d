// Copyright 2026 The hpw Authors
// SPDX-License-Identifier: Apache-2.0

#include "hpw/models.hpp"

#include <cmath>
#include <numbers>

namespace hpw {

namespace {

constexpr Complex kI{0.0, 1.0};

std::vector<CMat> su2_basis() {
  const double s = 1.0 / std::sqrt(2.0);
  CMat e0 = CMat::Zero(2, 2), e1 = CMat::Zero(2, 2), e2 = CMat::Zero(2, 2);
  // i sigma_3, i sigma_1, i sigma_2, each scaled to unit norm.
  e0(0, 0) = kI * s;
  e0(1, 1) = -kI * s;
  e1(0, 1) = kI * s;
  e1(1, 0) = kI * s;
  e2(0, 1) = s;
  e2(1, 0) = -s;
  return {e0, e1, e2};
}

std::vector<CMat> su3_basis() {
  // i lambda_k / sqrt(2) with the Gell-Mann matrices, Cartan (3, 8) first.
  const double s = 1.0 / std::sqrt(2.0);
  std::vector<CMat> gm(8, CMat::Zero(3, 3));
  gm[0](0, 0) = 1.0;
  gm[0](1, 1) = -1.0;
  const double r3 = 1.0 / std::sqrt(3.0);
  gm[1](0, 0) = r3;
  gm[1](1, 1) = r3;
  gm[1](2, 2) = -2.0 * r3;
  auto sym = [](CMat& m, int i, int j) {
    m(i, j) = 1.0;
    m(j, i) = 1.0;
  };
  auto asym = [](CMat& m, int i, int j) {
    m(i, j) = -kI;
    m(j, i) = kI;
  };
  sym(gm[2], 0, 1);
  asym(gm[3], 0, 1);
  sym(gm[4], 0, 2);
  asym(gm[5], 0, 2);
  sym(gm[6], 1, 2);
  asym(gm[7], 1, 2);
  for (auto& m : gm) m *= kI * s;
  return gm;
}

}  // namespace

GroupModel::GroupModel(GroupKind kind) : rs_(build_root_system(kind)) {
  switch (kind) {
    case GroupKind::A1:
      n_ = 2;
      basis_ = su2_basis();
      break;
    case GroupKind::A2:
      n_ = 3;
      basis_ = su3_basis();
      break;
    case GroupKind::Torus:
      throw Error(ErrorCode::kUnsupported, "no matrix model for tori");
  }
}

CMat GroupModel::algebra_element(const Vec& coords) const {
  if (coords.size() != algebra_dim()) throw Error(ErrorCode::kInvalidArgument, "algebra coordinate size mismatch");
  CMat x = CMat::Zero(n_, n_);
  for (int k = 0; k < algebra_dim(); ++k) x += coords(k) * basis_[k];
  return x;
}

Vec GroupModel::algebra_coords(const CMat& x) const {
  Vec c(algebra_dim());
  for (int k = 0; k < algebra_dim(); ++k) c(k) = -(basis_[k] * x).trace().real();
  return c;
}

CMat GroupModel::cartan_element(const Vec& y) const {
  if (y.size() != rs_.rank) throw Error(ErrorCode::kInvalidArgument, "Cartan coordinate size mismatch");
  CMat x = CMat::Zero(n_, n_);
  for (int k = 0; k < rs_.rank; ++k) x += y(k) * basis_[k];
  return x;
}

Mat GroupModel::ad_matrix(const Vec& coords) const {
  const CMat x = algebra_element(coords);
  const int m = algebra_dim();
  Mat ad(m, m);
  for (int b = 0; b < m; ++b) {
    const CMat bracket = x * basis_[b] - basis_[b] * x;
    ad.col(b) = algebra_coords(bracket);
  }
  return ad;
}

Vec GroupModel::chamber_representative(const Vec& coords) const {
  const CMat h = -kI * algebra_element(coords);
  Eigen::SelfAdjointEigenSolver<CMat> solver(h, Eigen::EigenvaluesOnly);
  const Vec ascending = solver.eigenvalues();
  const Vec descending = ascending.reverse();
  return from_diagonal_entries(rs_, descending);
}

CMat GroupModel::haar_sample(Stream& stream) const {
  CMat g(n_, n_);
  const double s = 1.0 / std::sqrt(2.0);
  for (int j = 0; j < n_; ++j)
    for (int i = 0; i < n_; ++i) g(i, j) = Complex(stream.normal() * s, stream.normal() * s);
  Eigen::HouseholderQR<CMat> qr(g);
  CMat q = qr.householderQ();
  const CMat r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < n_; ++j) {
    const Complex d = r(j, j);
    const double mag = std::abs(d);
    q.col(j) *= mag > 0.0 ? d / mag : Complex(1.0);
  }
  const Complex det = q.determinant();
  q *= std::exp(-kI * std::arg(det) / static_cast<double>(n_));
  return q;
}

double GroupModel::adjoint_pairing(const Vec& mu, const CMat& g, const Vec& y) const {
  // Both arguments are diagonal: -tr(i diag(m) g i diag(a) g^*) = sum m_i a_j |g_ij|^2.
  const Vec m = diagonal_entries(rs_, mu);
  const Vec a = diagonal_entries(rs_, y);
  return m.dot(g.cwiseAbs2() * a);
}

IrrepMatrices make_irrep(int n) {
  if (n < 0) throw Error(ErrorCode::kInvalidArgument, "spin label must be >= 0");
  IrrepMatrices m;
  m.n = n;
  m.dim = n + 1;
  const double j = 0.5 * n;
  CMat jz = CMat::Zero(m.dim, m.dim), jp = CMat::Zero(m.dim, m.dim);
  for (int k = 0; k < m.dim; ++k) {
    const double mk = j - k;
    jz(k, k) = mk;
    // J+ |m> = sqrt(j(j+1) - m(m+1)) |m+1>, basis ordered m = j, j-1, ...
    if (k > 0) jp(k - 1, k) = std::sqrt(j * (j + 1.0) - mk * (mk + 1.0));
  }
  const CMat jm = jp.adjoint();
  const CMat jx = 0.5 * (jp + jm);
  const CMat jy = (jp - jm) / (2.0 * kI);
  const Complex scale = kI * std::sqrt(2.0);
  m.generators = {scale * jz, scale * jx, scale * jy};
  return m;
}

Mat2c exp_traceless2(const Mat2c& x) {
  const Complex s = -x.determinant();  // x^2 = s I
  const Complex w = std::sqrt(s);
  Complex c, sh;
  if (std::abs(w) < 1e-6) {
    c = 1.0 + s / 2.0 + s * s / 24.0;
    sh = 1.0 + s / 6.0 + s * s / 120.0;
  } else {
    c = std::cosh(w);
    sh = std::sinh(w) / w;
  }
  return c * Mat2c::Identity() + sh * x;
}

CMat exp_hermitian(const CMat& h) {
  Eigen::SelfAdjointEigenSolver<CMat> solver(h);
  const Vec ev = solver.eigenvalues();
  const CMat& v = solver.eigenvectors();
  return v * ev.array().exp().matrix().cast<Complex>().asDiagonal() * v.adjoint();
}

Vec su2_log(const Mat2c& x) {
  const double a0 = x(0, 0).real();
  const double a3 = x(0, 0).imag();
  const double a1 = x(0, 1).imag();
  const double a2 = x(0, 1).real();
  const double len = std::sqrt(a1 * a1 + a2 * a2 + a3 * a3);
  Vec c = Vec::Zero(3);
  if (len < 1e-15) {
    if (a0 < 0.0) c(0) = std::sqrt(2.0) * std::numbers::pi;
    return c;
  }
  const double phi = std::atan2(len, a0);
  const double f = std::sqrt(2.0) * phi / len;
  c << f * a3, f * a1, f * a2;
  return c;
}

CMat rep_matrix(const IrrepMatrices& m, const Mat2c& x) {
  if (m.generators.size() != 3) throw Error(ErrorCode::kDomainMismatch, "irrep matrices are SU(2) only");
  const Vec c = su2_log(x);
  CMat a = CMat::Zero(m.dim, m.dim);
  for (int k = 0; k < 3; ++k) a += c(k) * m.generators[k];
  // a is anti-hermitian: exp(a) = exp(i * (-i a)).
  Eigen::SelfAdjointEigenSolver<CMat> solver(-kI * a);
  const Vec ev = solver.eigenvalues();
  const CMat& v = solver.eigenvectors();
  Eigen::VectorXcd phases(ev.size());
  for (Eigen::Index k = 0; k < ev.size(); ++k) phases(k) = std::exp(kI * ev(k));
  return v * phases.asDiagonal() * v.adjoint();
}

CMat holo_factor(const IrrepMatrices& m, const Vec& y) {
  if (y.size() != 3) throw Error(ErrorCode::kInvalidArgument, "su(2) element needs 3 coordinates");
  CMat a = CMat::Zero(m.dim, m.dim);
  for (int k = 0; k < 3; ++k) a += y(k) * m.generators[k];
  return exp_hermitian(kI * a);
}

CMat rep_matrix_holo(const IrrepMatrices& m, const Mat2c& x, const Vec& y) {
  return rep_matrix(m, x) * holo_factor(m, y);
}

Complex su2_character(int n, const Mat2c& g) {
  const Complex c = 0.5 * g.trace();
  Complex prev = 1.0, cur = 2.0 * c;
  if (n == 0) return prev;
  for (int k = 1; k < n; ++k) {
    const Complex next = 2.0 * c * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

Mat2c su2_polar(const GroupModel& model, const Mat2c& x, const Vec& y) {
  const Mat2c iy = kI * Mat2c(model.algebra_element(y));
  return x * exp_traceless2(iy);
}

}  // namespace hpw

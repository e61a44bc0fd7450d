// Copyright 2026 The hpw Authors
// SPDX-License-Identifier: Apache-2.0

#include "hpw/chars.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "hpw/rng.hpp"

namespace hpw {

namespace {

constexpr Complex kI{0.0, 1.0};

double sinhc(double x) { return std::abs(x) < 1e-8 ? 1.0 + x * x / 6.0 : std::sinh(x) / x; }

Complex sinc_complex(Complex z) {
  return std::abs(z) < 1e-8 ? 1.0 - z * z / 6.0 : std::sin(z) / z;
}

// Kostant partition function on simple-root coordinates.
long partition_count(const RootSystem& rs, const std::vector<long>& c) {
  if (std::any_of(c.begin(), c.end(), [](long v) { return v < 0; })) return 0;
  switch (rs.kind) {
    case GroupKind::Torus:
      return std::all_of(c.begin(), c.end(), [](long v) { return v == 0; }) ? 1 : 0;
    case GroupKind::A1:
      return 1;
    case GroupKind::A2:
      // n1 a1 + n2 a2 + n3 (a1 + a2): n3 ranges over 0..min(c1, c2).
      return std::min(c[0], c[1]) + 1;
  }
  return 0;
}

std::vector<long> root_coordinates(const RootSystem& rs, const Mat& simple_inv, const Vec& v) {
  std::vector<long> out(rs.simple_roots.size());
  if (out.empty()) {
    // Torus: the zero vector is the only element of the (trivial) root lattice.
    return v.norm() < 1e-9 ? out : std::vector<long>{-1};
  }
  const Vec c = simple_inv * v;
  for (Eigen::Index i = 0; i < c.size(); ++i) out[i] = std::lround(c(i));
  return out;
}

}  // namespace

double eta(const RootSystem& rs, const Vec& y) {
  double prod = 1.0;
  for (const auto& a : rs.positive_roots) prod *= sinhc(a.dot(y));
  return prod;
}

double eta_det_oracle(const GroupModel& model, const Vec& coords) {
  const Mat ad = model.ad_matrix(coords);
  Eigen::EigenSolver<Mat> solver(ad, false);
  if (solver.info() != Eigen::Success) throw Error(ErrorCode::kNumerical, "ad(Y) eigen-solve did not converge");
  Complex det = 1.0;
  for (const Complex& ev : solver.eigenvalues()) det *= sinc_complex(ev);
  return std::sqrt(det.real());
}

double j_imaginary(const RootSystem& rs, const Vec& y) {
  double prod = 1.0;
  for (const auto& a : rs.positive_roots) {
    const double half = 0.5 * a.dot(y);
    prod *= std::abs(half) < 1e-8 ? 1.0 : std::sinh(half) / half;
  }
  return prod;
}

double j_half_identity_residual(const RootSystem& rs, const Vec& y) {
  return std::abs(j_imaginary(rs, y) - eta(rs, 0.5 * y));
}

std::vector<WeightMultiplicity> weight_system(const RootSystem& rs, const Weight& lambda) {
  if (!is_dominant(rs, lambda)) throw Error(ErrorCode::kInvalidArgument, "weight system of a non-dominant weight");
  if (rs.kind == GroupKind::Torus) return {{lambda.coords, 1}};

  const int rank = rs.rank;
  Mat simple(rank, rank);
  for (int i = 0; i < rank; ++i) simple.col(i) = rs.simple_roots[i];
  const Mat simple_inv = simple.inverse();

  const Vec top = shifted(rs, lambda);
  const int depth = 2 * std::accumulate(lambda.dynkin.begin(), lambda.dynkin.end(), 0);
  std::vector<WeightMultiplicity> out;
  std::vector<int> steps(rank, 0);
  while (true) {
    Vec mu = lambda.coords;
    for (int i = 0; i < rank; ++i) mu -= steps[i] * rs.simple_roots[i];
    long m = 0;
    for (const auto& w : rs.weyl_elements) {
      m += w.sign * partition_count(rs, root_coordinates(rs, simple_inv, w.matrix * top - (mu + rs.rho)));
    }
    if (m > 0) out.push_back({mu, static_cast<int>(m)});
    int pos = rank - 1;
    while (pos >= 0 && steps[pos] == depth) {
      steps[pos] = 0;
      --pos;
    }
    if (pos < 0) break;
    ++steps[pos];
  }
  return out;
}

std::optional<Complex> weyl_char_compact(const RootSystem& rs, const Weight& lambda, const Vec& y) {
  if (!is_dominant(rs, lambda)) throw Error(ErrorCode::kInvalidArgument, "character of a non-dominant weight");
  const Vec top = shifted(rs, lambda);
  Complex num = 0.0, den = 0.0;
  for (const auto& w : rs.weyl_elements) {
    num += static_cast<double>(w.sign) * std::exp(kI * (w.matrix * top).dot(y));
    den += static_cast<double>(w.sign) * std::exp(kI * (w.matrix * rs.rho).dot(y));
  }
  if (std::abs(den) < 1e-12) return std::nullopt;
  return num / den;
}

Complex char_compact_from_weights(const RootSystem& rs, const Weight& lambda, const Vec& y) {
  Complex sum = 0.0;
  for (const auto& wm : weight_system(rs, lambda)) {
    sum += static_cast<double>(wm.multiplicity) * std::exp(kI * wm.coords.dot(y));
  }
  return sum;
}

double char_holo_from_weights(const RootSystem& rs, const Weight& lambda, const Vec& y) {
  return HoloCharacter(rs, lambda)(y);
}

double weyl_char_holo(const RootSystem& rs, const Weight& lambda, const Vec& y) {
  if (!is_dominant(rs, lambda)) throw Error(ErrorCode::kInvalidArgument, "character of a non-dominant weight");
  const Vec top = shifted(rs, lambda);
  double num = 0.0, den = 0.0, num_scale = 0.0, den_scale = 0.0;
  for (const auto& w : rs.weyl_elements) {
    const double a = std::exp(-(w.matrix * top).dot(y));
    const double b = std::exp(-(w.matrix * rs.rho).dot(y));
    num += w.sign * a;
    den += w.sign * b;
    num_scale += a;
    den_scale += b;
  }
  // Cancellation in either alternating sum costs ~1e-16 * scale / |sum|.
  constexpr double kConditioning = 1e-6;
  if (std::abs(den) < kConditioning * den_scale || std::abs(num) < kConditioning * num_scale) {
    return char_holo_from_weights(rs, lambda, y);
  }
  return num / den;
}

HoloCharacter::HoloCharacter(const RootSystem& rs, const Weight& lambda) {
  const auto ws = weight_system(rs, lambda);
  weights_.resize(rs.rank, static_cast<Eigen::Index>(ws.size()));
  mult_.resize(static_cast<Eigen::Index>(ws.size()));
  dim_ = 0;
  for (std::size_t k = 0; k < ws.size(); ++k) {
    weights_.col(static_cast<Eigen::Index>(k)) = ws[k].coords;
    mult_(static_cast<Eigen::Index>(k)) = ws[k].multiplicity;
    dim_ += ws[k].multiplicity;
  }
}

double HoloCharacter::operator()(const Vec& y) const {
  return mult_.dot((-(weights_.transpose() * y)).array().exp().matrix());
}

Estimate orbital_average(const RootSystem& rs, const Vec& mu, const Vec& y, const OrbitalScheme& scheme) {
  if (mu.size() != rs.rank || y.size() != rs.rank) throw Error(ErrorCode::kInvalidArgument, "rank mismatch in orbital_average");
  if (scheme.kind == OrbitalScheme::Kind::kClosedFormA1) {
    if (rs.kind != GroupKind::A1) throw Error(ErrorCode::kDomainMismatch, "closed-form orbital average is A1 only");
    // Average of e^{-|mu||Y| cos phi} over the unit 2-sphere.
    return {sinhc(mu.norm() * y.norm()), 0.0};
  }
  if (rs.kind == GroupKind::Torus) return {std::exp(-mu.dot(y)), 0.0};
  const GroupModel model(rs.kind);
  Stream stream(scheme.seed);
  RunningStats stats;
  for (std::uint64_t s = 0; s < scheme.samples; ++s) {
    const CMat g = model.haar_sample(stream);
    stats.add(std::exp(-model.adjoint_pairing(mu, g, y)));
  }
  return {stats.mean(), stats.std_error()};
}

KirillovResult kirillov_residual(const RootSystem& rs, const Weight& lambda, const Vec& y,
                                 const OrbitalScheme& scheme, KirillovPoint point) {
  const int d = dimension(rs, lambda);
  const Vec top = shifted(rs, lambda);
  KirillovResult r;
  Estimate avg;
  if (point == KirillovPoint::kDoubled) {
    r.lhs = eta(rs, y) * weyl_char_holo(rs, lambda, 2.0 * y);
    avg = orbital_average(rs, 2.0 * top, y, scheme);
  } else {
    r.lhs = eta(rs, 0.5 * y) * weyl_char_holo(rs, lambda, y);
    avg = orbital_average(rs, top, y, scheme);
  }
  r.rhs = d * avg.value;
  r.std_error = d * avg.std_error;
  r.residual = std::abs(r.lhs - r.rhs);
  return r;
}

}  // namespace hpw

// Copyright 2026 The hpw Authors
// SPDX-License-Identifier: Apache-2.0

#include "hpw/quadrature.hpp"

#include <cmath>
#include <numbers>

#include "hpw/chars.hpp"
#include "hpw/rng.hpp"

namespace hpw {

GaussRule gauss_legendre(int n) {
  if (n < 1) throw Error(ErrorCode::kInvalidArgument, "Gauss-Legendre order must be >= 1");
  GaussRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      if (n == 1) p0 = 1.0;
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    rule.nodes[i] = -x;
    rule.nodes[n - 1 - i] = x;
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  return rule;
}

ChamberQuadrature build_chamber_quadrature(const RootSystem& rs, double t, int order,
                                           double target_mu_norm) {
  if (order < 8) throw Error(ErrorCode::kInvalidArgument, "quadrature order must be >= 8");
  if (!(t > 0.0)) throw Error(ErrorCode::kInvalidArgument, "t must be positive");
  ChamberQuadrature q;
  q.order = order;
  q.radius = std::sqrt(t) * (std::abs(target_mu_norm) * std::sqrt(t) / 2.0 + 8.0);
  const GaussRule gl = gauss_legendre(order);
  const double volume = rs.flag_volume / rs.diagonal_jacobian;  // orthonormal measure

  auto density = [&](const Vec& y) {
    double p = 1.0;
    for (const auto& a : rs.positive_roots) {
      const double v = a.dot(y);
      p *= v * v;
    }
    return p;
  };

  if (rs.kind == GroupKind::Torus) {
    // No roots: the chamber is all of t.
    const int n = rs.rank;
    std::vector<int> idx(n, 0);
    const double half = q.radius;
    while (true) {
      Vec y(n);
      double w = 1.0;
      for (int k = 0; k < n; ++k) {
        y(k) = half * gl.nodes[idx[k]];
        w *= half * gl.weights[idx[k]];
      }
      q.nodes.push_back(y);
      q.weights.push_back(w);
      int pos = n - 1;
      while (pos >= 0 && idx[pos] == order - 1) {
        idx[pos] = 0;
        --pos;
      }
      if (pos < 0) break;
      ++idx[pos];
    }
    return q;
  }

  if (rs.kind == GroupKind::A1) {
    const double half = q.radius / 2.0;
    for (int i = 0; i < order; ++i) {
      Vec y(1);
      y << half * (gl.nodes[i] + 1.0);
      q.nodes.push_back(y);
      q.weights.push_back(half * gl.weights[i] * density(y) * volume);
    }
    return q;
  }

  // A2: the chamber is the orthant s >= 0 in fundamental-weight coordinates;
  // |Y| >= s_i |w_i| there, so s_i <= R/|w_i| covers the truncation ball.
  const Vec& w1 = rs.fundamental_weights[0];
  const Vec& w2 = rs.fundamental_weights[1];
  Mat omega(2, 2);
  omega << w1, w2;
  const double jac = std::abs(omega.determinant());
  const double h1 = q.radius / w1.norm() / 2.0;
  const double h2 = q.radius / w2.norm() / 2.0;
  for (int i = 0; i < order; ++i) {
    const double s1 = h1 * (gl.nodes[i] + 1.0);
    for (int j = 0; j < order; ++j) {
      const double s2 = h2 * (gl.nodes[j] + 1.0);
      const Vec y = s1 * w1 + s2 * w2;
      q.nodes.push_back(y);
      q.weights.push_back(h1 * gl.weights[i] * h2 * gl.weights[j] * jac * density(y) * volume);
    }
  }
  return q;
}

double integrate_invariant(const ChamberQuadrature& q, const InvariantFn& f) {
  double sum = 0.0;
  for (std::size_t k = 0; k < q.nodes.size(); ++k) {
    const double v = f(q.nodes[k]);
    if (!std::isfinite(v)) throw Error(ErrorCode::kNumerical, "integrand is not finite at a quadrature node");
    sum += q.weights[k] * v;
  }
  return sum;
}

double gaussian_linear_moment(const RootSystem& rs, const Vec& mu, double t) {
  if (!(t > 0.0)) throw Error(ErrorCode::kInvalidArgument, "t must be positive");
  return std::pow(t * std::numbers::pi, rs.dim_k / 2.0) * std::exp(t * mu.squaredNorm() / 4.0);
}

std::vector<Estimate> cartesian_oracle_integrate(const GroupModel& model,
                                                 const std::vector<AlgebraFn>& gs, double t,
                                                 const CartesianScheme& scheme) {
  if (!(t > 0.0)) throw Error(ErrorCode::kInvalidArgument, "t must be positive");
  const int m = model.algebra_dim();
  std::vector<Estimate> out(gs.size());
  if (scheme.kind == CartesianScheme::Kind::kGridA1) {
    if (model.kind() != GroupKind::A1) throw Error(ErrorCode::kDomainMismatch, "radial grid is su(2) only");
    const GaussRule gl = gauss_legendre(scheme.order);
    const double half = std::sqrt(t) * (scheme.mu_norm * std::sqrt(t) / 2.0 + 8.0) / 2.0;
    for (std::size_t f = 0; f < gs.size(); ++f) {
      double sum = 0.0;
      for (int i = 0; i < scheme.order; ++i) {
        const double r = half * (gl.nodes[i] + 1.0);
        Vec y = Vec::Zero(m);
        y(0) = r;
        sum += half * gl.weights[i] * 4.0 * std::numbers::pi * r * r * gs[f](y) * std::exp(-r * r / t);
      }
      out[f] = {sum, 0.0};
    }
    return out;
  }
  const double scale = std::pow(t * std::numbers::pi, m / 2.0);
  const double sigma = std::sqrt(t / 2.0);
  std::vector<RunningStats> stats(gs.size());
  Stream stream(scheme.seed);
  Vec y(m);
  for (std::uint64_t s = 0; s < scheme.samples; ++s) {
    for (int k = 0; k < m; ++k) y(k) = sigma * stream.normal();
    for (std::size_t f = 0; f < gs.size(); ++f) stats[f].add(gs[f](y));
  }
  for (std::size_t f = 0; f < gs.size(); ++f) out[f] = {scale * stats[f].mean(), scale * stats[f].std_error()};
  return out;
}

Estimate cartesian_oracle_integrate(const GroupModel& model, const AlgebraFn& g, double t,
                                    const CartesianScheme& scheme) {
  return cartesian_oracle_integrate(model, std::vector<AlgebraFn>{g}, t, scheme).front();
}

FlagVolumeCalibration calibrate_flag_volume(const RootSystem& rs, std::uint64_t samples, std::uint64_t seed) {
  if (rs.kind == GroupKind::Torus) return {1.0, 1.0, 0.0};
  RootSystem unit = rs;
  unit.flag_volume = unit.diagonal_jacobian;  // unit volume against orthonormal measure
  const ChamberQuadrature q = build_chamber_quadrature(unit, 1.0, rs.kind == GroupKind::A1 ? 96 : 128, 0.0);
  const double gauss_ref = integrate_invariant(q, [](const Vec& y) { return std::exp(-y.squaredNorm()); });
  const double jac = rs.diagonal_jacobian;
  const double closed = jac * std::pow(std::numbers::pi, rs.dim_k / 2.0) / gauss_ref;

  const double eta_ref = integrate_invariant(q, [&](const Vec& y) { return eta(rs, y) * std::exp(-y.squaredNorm()); });
  const GroupModel model(rs.kind);
  const Estimate mc = cartesian_oracle_integrate(
      model, [&](const Vec& x) { return eta(rs, model.chamber_representative(x)); }, 1.0,
      CartesianScheme::monte_carlo(samples, seed));
  FlagVolumeCalibration c{closed, jac * mc.value / eta_ref, jac * mc.std_error / eta_ref};
  if (std::abs(c.mc_value - c.value) > 5.0 * c.mc_std_error) {
    throw Error(ErrorCode::kNumerical, "flag volume calibration disagrees with the Gaussian reference");
  }
  return c;
}

}  // namespace hpw

// Copyright 2026 The hpw Authors
// SPDX-License-Identifier: Apache-2.0

#include "hpw/hilbert.hpp"

#include <cmath>
#include <numbers>

#include "hpw/chars.hpp"
#include "hpw/rng.hpp"

namespace hpw {

namespace {

constexpr double kPi = std::numbers::pi;

void require_positive_t(double t) {
  if (!(t > 0.0) || !std::isfinite(t)) throw Error(ErrorCode::kInvalidArgument, "t must be positive");
}

double sinhc(double x) { return std::abs(x) < 1e-8 ? 1.0 + x * x / 6.0 : std::sinh(x) / x; }

// (1/d) int_k chi^C(exp s iY) w(Y) e^{-|Y|^2/tau} dY on the chamber.
double reduced_integral(const RootSystem& rs, const Weight& lambda, double tau, double s, bool with_eta,
                        double eta_scale, int order) {
  const HoloCharacter chi(rs, lambda);
  const double mu = s * shifted(rs, lambda).norm();
  const ChamberQuadrature q = build_chamber_quadrature(rs, tau, order, mu);
  const double sum = integrate_invariant(q, [&](const Vec& y) {
    double v = chi(s * y) * std::exp(-y.squaredNorm() / tau);
    if (with_eta) v *= eta(rs, eta_scale * y);
    return v;
  });
  return sum / chi.dimension();
}

}  // namespace

int default_quad_order(const RootSystem& rs) { return rs.rank == 1 ? 64 : 96; }

double c_constant(const RootSystem& rs, const Weight& lambda, double t) {
  require_positive_t(t);
  return std::pow(t * kPi, rs.dim_k / 2.0) * std::exp(t * norm2_shift(rs, lambda));
}

double d_constant(const RootSystem& rs, const Weight& lambda, double t) {
  require_positive_t(t);
  return std::pow(2.0 * t * kPi, rs.dim_k / 2.0) * std::exp(t * norm2_shift(rs, lambda) / 2.0);
}

double ratio_check(const RootSystem& rs, const Weight& lambda, double t) {
  const double scaled = std::pow(4.0 * t * kPi, -rs.dim_k / 4.0) * d_constant(rs, lambda, t);
  const double root_c = std::sqrt(c_constant(rs, lambda, t));
  return std::abs(scaled - root_c) / root_c;
}

NormIdentity verify_norm_identity(const RootSystem& rs, const Weight& lambda, double t, NormConstant which,
                                  int order) {
  require_positive_t(t);
  NormIdentity r;
  if (which == NormConstant::kC) {
    r.quadrature = reduced_integral(rs, lambda, t, 2.0, true, 1.0, order);
    r.closed_form = c_constant(rs, lambda, t);
  } else {
    r.quadrature = reduced_integral(rs, lambda, 2.0 * t, 1.0, true, 0.5, order);
    r.closed_form = d_constant(rs, lambda, t);
  }
  r.rel_residual = std::abs(r.quadrature - r.closed_form) / r.closed_form;
  return r;
}

NaiveConstant naive_constant(const RootSystem& rs, const Weight& lambda, double t, int order) {
  require_positive_t(t);
  const double lo = reduced_integral(rs, lambda, t, 2.0, false, 1.0, order);
  const double hi = reduced_integral(rs, lambda, t, 2.0, false, 1.0, 2 * order);
  return {hi, std::abs(hi - lo)};
}

const char* transform_name(Transform which) {
  switch (which) {
    case Transform::kH:
      return "H";
    case Transform::kHInverse:
      return "HInverse";
    case Transform::kTheta:
      return "Theta";
    case Transform::kThetaStar:
      return "ThetaStar";
    case Transform::kScaledTheta:
      return "ScaledTheta";
    case Transform::kHtilde:
      return "Htilde";
  }
  return "?";
}

FourierSeries transform_apply(const FourierSeries& s, Transform which, int naive_order) {
  const RootSystem rs = s.root_system();
  require_positive_t(s.t);
  Space from = Space::kHL2, to = Space::kL2K;
  switch (which) {
    case Transform::kHInverse:
    case Transform::kThetaStar:
      from = Space::kL2K;
      to = Space::kHL2;
      break;
    case Transform::kHtilde:
      from = Space::kHL2Naive;
      break;
    default:
      break;
  }
  if (s.space != from) {
    throw Error(ErrorCode::kDomainMismatch, std::string(transform_name(which)) + " expects a series in " +
                                                space_name(from) + ", got " + space_name(s.space));
  }
  const int order = naive_order > 0 ? naive_order : default_quad_order(rs);
  FourierSeries out = s;
  out.space = to;
  for (auto& [dynkin, c] : out.terms) {
    const Weight w = make_weight(rs, dynkin);
    double k = 1.0;
    switch (which) {
      case Transform::kH:
        k = std::sqrt(c_constant(rs, w, s.t));
        break;
      case Transform::kHInverse:
        k = 1.0 / std::sqrt(c_constant(rs, w, s.t));
        break;
      case Transform::kTheta:
        k = d_constant(rs, w, s.t);
        break;
      case Transform::kThetaStar:
        k = std::pow(2.0, rs.dim_k / 2.0) * std::exp(-s.t * norm2_shift(rs, w) / 2.0);
        break;
      case Transform::kScaledTheta:
        k = std::pow(4.0 * s.t * kPi, -rs.dim_k / 4.0) * d_constant(rs, w, s.t);
        break;
      case Transform::kHtilde:
        k = std::sqrt(naive_constant(rs, w, s.t, order).value);
        break;
    }
    c *= k;
  }
  return out;
}

Complex bks_bracket_spectral(const FourierSeries& phi, const FourierSeries& f) {
  if (phi.group != f.group) throw Error(ErrorCode::kDomainMismatch, "BKS bracket of series on different groups");
  if (phi.space != Space::kHL2 || f.space != Space::kL2K) {
    throw Error(ErrorCode::kDomainMismatch, "BKS bracket pairs an HL2 series with an L2K series");
  }
  const RootSystem rs = phi.root_system();
  Complex sum = 0.0;
  for (const auto& [dynkin, cp] : phi.terms) {
    const auto it = f.terms.find(dynkin);
    if (it == f.terms.end()) continue;
    const Weight w = make_weight(rs, dynkin);
    sum += dimension(rs, w) * d_constant(rs, w, phi.t) * (cp.adjoint() * it->second).trace();
  }
  return sum;
}

ComplexEstimate bks_bracket_integral(const GroupModel& model, const FourierSeries& phi, const FourierSeries& f,
                                     const BksIntegralScheme& scheme) {
  if (model.kind() != GroupKind::A1) throw Error(ErrorCode::kUnsupported, "irrep matrices unavailable for A2");
  if (phi.group != f.group) throw Error(ErrorCode::kDomainMismatch, "BKS bracket of series on different groups");
  if (phi.space != Space::kHL2 || f.space != Space::kL2K) {
    throw Error(ErrorCode::kDomainMismatch, "BKS bracket pairs an HL2 series with an L2K series");
  }
  const double t = phi.t;
  const double sigma = std::sqrt(t);
  const double scale = std::pow(2.0 * kPi * t, 1.5);
  Stream stream(scheme.seed);
  RunningStats re, im;
  Vec y(3);
  for (std::uint64_t s = 0; s < scheme.samples; ++s) {
    const Mat2c x = model.haar_sample(stream);
    for (int k = 0; k < 3; ++k) y(k) = sigma * stream.normal();
    // eta(Y/2) on su(2): the positive root takes the value sqrt(2)|Y|/2.
    const double w = scale * sinhc(y.norm() / std::sqrt(2.0));
    const Complex v = w * std::conj(synthesize(phi, x, y)) * synthesize(f, x);
    re.add(v.real());
    im.add(v.imag());
  }
  return {Complex(re.mean(), im.mean()), std::hypot(re.std_error(), im.std_error())};
}

double bks_function_value(int n, double t, const Mat2c& x, int order) {
  require_positive_t(t);
  static const GroupModel model(GroupKind::A1);
  const double tau = 2.0 * t;
  const double mu = (n + 1) / std::sqrt(2.0);
  const double radius = std::sqrt(tau) * (mu * std::sqrt(tau) / 2.0 + 8.0);
  const GaussRule gl = gauss_legendre(order);
  const int azimuths = 2 * order;
  double sum = 0.0;
  Vec y(3);
  for (int i = 0; i < order; ++i) {
    const double r = radius / 2.0 * (gl.nodes[i] + 1.0);
    const double radial = radius / 2.0 * gl.weights[i] * r * r * std::exp(-r * r / tau) * sinhc(r / std::sqrt(2.0));
    for (int j = 0; j < order; ++j) {
      const double u = gl.nodes[j];
      const double s = std::sqrt(1.0 - u * u);
      double ring = 0.0;
      for (int k = 0; k < azimuths; ++k) {
        const double phi = 2.0 * kPi * k / azimuths;
        y << r * u, r * s * std::cos(phi), r * s * std::sin(phi);
        ring += su2_character(n, su2_polar(model, x, y)).real();
      }
      sum += radial * gl.weights[j] * ring * 2.0 * kPi / azimuths;
    }
  }
  return sum;
}

ConstantsRow constants_row(const RootSystem& rs, const Weight& lambda, double t, int order) {
  ConstantsRow row;
  row.lambda = lambda;
  row.t = t;
  row.d = dimension(rs, lambda);
  row.norm2_shift = norm2_shift(rs, lambda);
  row.c = c_constant(rs, lambda, t);
  row.d_const = d_constant(rs, lambda, t);
  const NaiveConstant naive = naive_constant(rs, lambda, t, order);
  row.c_tilde = naive.value;
  row.c_tilde_err = naive.stability;
  row.ratio_check = ratio_check(rs, lambda, t);
  return row;
}

}  // namespace hpw

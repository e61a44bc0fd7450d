// Copyright 2026 The hpw Authors
// SPDX-License-Identifier: Apache-2.0

#include "hpw/heat.hpp"

#include <cmath>

#include "hpw/rng.hpp"

namespace hpw {

namespace {

constexpr int kMaxHeatTerms = 10000;

double heat_weight(int n, double t) {
  // d = n+1, eps = ((n+1)^2 - 1)/2 on su(2).
  const double d = n + 1.0;
  return d * std::exp(-t * (d * d - 1.0) / 4.0);
}

}  // namespace

double energy_eigenvalue(const RootSystem& rs, const Weight& lambda) {
  return norm2_shift(rs, lambda) - rs.rho.squaredNorm();
}

FourierSeries heat_multiplier_apply(const FourierSeries& s, double t, bool with_prefactor) {
  if (s.space != Space::kL2K) throw Error(ErrorCode::kDomainMismatch, "heat multiplier acts on L2K series");
  if (!(t >= 0.0) || !std::isfinite(t)) throw Error(ErrorCode::kInvalidArgument, "t must be non-negative");
  const RootSystem rs = s.root_system();
  FourierSeries out = s;
  double pre = 1.0;
  if (with_prefactor) {
    if (t == 0.0) throw Error(ErrorCode::kInvalidArgument, "the adjoint BKS map needs t > 0");
    pre = std::pow(2.0, rs.dim_k / 2.0) * std::exp(-t * rs.rho.squaredNorm() / 2.0);
    out.space = Space::kHL2;
    out.t = t;
  }
  for (auto& [dynkin, c] : out.terms) c *= pre * std::exp(-t * energy_eigenvalue(rs, make_weight(rs, dynkin)) / 2.0);
  return out;
}

HeatKernelValue heat_kernel_eval(const GroupModel& model, double t, const Mat2c& x, double cutoff) {
  if (model.kind() != GroupKind::A1) throw Error(ErrorCode::kUnsupported, "heat kernel evaluation is SU(2) only");
  if (!(t > 0.0)) throw Error(ErrorCode::kInvalidArgument, "t must be positive");
  if (!(cutoff > 0.0)) throw Error(ErrorCode::kInvalidArgument, "cutoff must be positive");
  HeatKernelValue r;
  // Chebyshev recursion for chi_n(x) = U_n(trace(x)/2).
  const Complex c = 0.5 * x.trace();
  Complex prev = 0.0, cur = 1.0;
  int n = 0;
  // d^2 e^{-t eps/2} rises before it falls for small t; run past the peak.
  const int peak = static_cast<int>(std::ceil(2.0 / std::sqrt(t)));
  while (n < peak || (n + 1.0) * heat_weight(n, t) >= cutoff) {
    if (n >= kMaxHeatTerms) throw Error(ErrorCode::kNumerical, "heat kernel truncation exceeds 10^4 terms; t too small for cutoff");
    r.value += heat_weight(n, t) * cur.real();
    const Complex next = 2.0 * c * cur - prev;
    prev = cur;
    cur = next;
    ++n;
  }
  r.terms = n;
  for (int k = n; k < n + 10000; ++k) {
    const double w = (k + 1.0) * heat_weight(k, t);
    r.truncation_bound += w;
    if (w < 1e-300) break;
  }
  return r;
}

HeatConvolutionResult heat_convolution_residual(const GroupModel& model, const FourierSeries& f, double t,
                                                std::uint64_t samples, std::uint64_t seed, int points,
                                                double cutoff) {
  if (model.kind() != GroupKind::A1) throw Error(ErrorCode::kUnsupported, "irrep matrices unavailable for A2");
  const FourierSeries target = heat_multiplier_apply(f, t);
  Stream point_stream = Stream::derive(seed, 0);
  std::vector<Mat2c> ys;
  for (int p = 0; p < points; ++p) ys.push_back(model.haar_sample(point_stream));
  std::vector<RunningStats> re(points), im(points);
  Stream stream = Stream::derive(seed, 1);
  for (std::uint64_t s = 0; s < samples; ++s) {
    const Mat2c x = model.haar_sample(stream);
    const Complex fx = synthesize(f, x);
    for (int p = 0; p < points; ++p) {
      const Complex v = heat_kernel_eval(model, t, Mat2c(ys[p] * x.adjoint()), cutoff).value * fx;
      re[p].add(v.real());
      im[p].add(v.imag());
    }
  }
  HeatConvolutionResult r;
  for (int p = 0; p < points; ++p) {
    const double err = std::abs(Complex(re[p].mean(), im[p].mean()) - synthesize(target, ys[p]));
    const double se = std::hypot(re[p].std_error(), im[p].std_error());
    r.residuals.push_back(err);
    r.std_errors.push_back(se);
    if (err > r.max_residual) {
      r.max_residual = err;
      r.std_error = se;
    }
    r.max_sigma = std::max(r.max_sigma, se > 0.0 ? err / se : (err > 1e-12 ? INFINITY : 0.0));
  }
  return r;
}

}  // namespace hpw

// Copyright 2026 The hpw Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <vector>

#include "hpw/common.hpp"
#include "hpw/fourier.hpp"
#include "hpw/models.hpp"
#include "hpw/rootdata.hpp"

namespace hpw {

/// Casimir eigenvalue |lambda+rho|^2 - |rho|^2; the Laplacian acts as its negative.
double energy_eigenvalue(const RootSystem& rs, const Weight& lambda);

/// e^{t Laplacian/2} on an L2K series: the lambda-term times e^{-t eps/2}.
/// With the prefactor 2^{dim/2} e^{-t |rho|^2/2} this is the adjoint BKS map
/// and the result is an HL2 series at parameter t.
FourierSeries heat_multiplier_apply(const FourierSeries& s, double t, bool with_prefactor = false);

struct HeatKernelValue {
  double value = 0.0;
  int terms = 0;             // spins 0 .. terms-1 were summed
  double truncation_bound = 0.0;  // sum of d^2 e^{-t eps/2} over the dropped spins
};

/// p_t(x) = sum_n d_n e^{-t eps_n/2} chi_n(x), summed while
/// d^2 e^{-t eps/2} >= cutoff. Throws kNumerical past 10^4 terms. SU(2) only.
HeatKernelValue heat_kernel_eval(const GroupModel& model, double t, const Mat2c& x, double cutoff);

struct HeatConvolutionResult {
  double max_residual = 0.0;   // max over points of |MC - multiplier|
  double std_error = 0.0;      // standard error at that point
  double max_sigma = 0.0;      // max over points of residual / std_error
  std::vector<double> residuals;   // per point
  std::vector<double> std_errors;  // per point
};

/// (p_t * f)(y) = (1/vol K) int_K p_t(y x^{-1}) f(x) dx by Haar Monte-Carlo,
/// against the synthesized heat multiplier of f at `points` random y.
HeatConvolutionResult heat_convolution_residual(const GroupModel& model, const FourierSeries& f, double t,
                                                std::uint64_t samples, std::uint64_t seed, int points = 10,
                                                double cutoff = 1e-14);

}  // namespace hpw

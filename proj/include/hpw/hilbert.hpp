// Copyright 2026 The hpw Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>

#include "hpw/common.hpp"
#include "hpw/fourier.hpp"
#include "hpw/quadrature.hpp"
#include "hpw/rootdata.hpp"

namespace hpw {

/// Default chamber quadrature order: 64 for rank one, 96 otherwise.
int default_quad_order(const RootSystem& rs);

/// C_{t,lambda} = (t pi)^{dim/2} e^{t |lambda+rho|^2}.
double c_constant(const RootSystem& rs, const Weight& lambda, double t);

/// D_{t,lambda} = (2 t pi)^{dim/2} e^{t |lambda+rho|^2 / 2}.
double d_constant(const RootSystem& rs, const Weight& lambda, double t);

/// |(4 t pi)^{-dim/4} D - C^{1/2}|.
double ratio_check(const RootSystem& rs, const Weight& lambda, double t);

enum class NormConstant { kC, kD };

struct NormIdentity {
  double quadrature = 0.0;
  double closed_form = 0.0;
  double rel_residual = 0.0;
};

/// Chamber-quadrature value of
///   C: (1/d) int_k chi^C(exp 2iY) eta(Y) e^{-|Y|^2/t} dY
///   D: (1/d) int_k chi^C(exp iY) eta(Y/2) e^{-|Y|^2/2t} dY
/// against the closed form. Tori and both A-types are supported.
NormIdentity verify_norm_identity(const RootSystem& rs, const Weight& lambda, double t, NormConstant which,
                                  int order);

struct NaiveConstant {
  double value = 0.0;
  double stability = 0.0;  // |value(order) - value(2 order)|
};

/// C~_{t,lambda} = (1/d) int_k chi^C(exp 2iY) e^{-|Y|^2/t} dY.
NaiveConstant naive_constant(const RootSystem& rs, const Weight& lambda, double t, int order);

/// Termwise multipliers:
///   H            HL2 -> L2K       C^{1/2}
///   HInverse     L2K -> HL2       C^{-1/2}
///   Theta        HL2 -> L2K       D
///   ThetaStar    L2K -> HL2       D / C = 2^{dim/2} e^{-t |lambda+rho|^2 / 2}
///   ScaledTheta  HL2 -> L2K       (4 t pi)^{-dim/4} D
///   Htilde       HL2Naive -> L2K  C~^{1/2}
/// ThetaStar takes t from the series when it is given in L2K.
enum class Transform { kH, kHInverse, kTheta, kThetaStar, kScaledTheta, kHtilde };

const char* transform_name(Transform which);

FourierSeries transform_apply(const FourierSeries& s, Transform which, int naive_order = 0);

struct BksIntegralScheme {
  std::uint64_t samples = 100000;
  std::uint64_t seed = 0;
};

/// <Phi, F>_BKS = sum d D trace(Phi^* F), conjugate-linear in Phi.
Complex bks_bracket_spectral(const FourierSeries& phi, const FourierSeries& f);

/// The same bracket as the double integral
///   (1/vol K) int_K int_k conj(Phi(x exp iY)) F(x) e^{-|Y|^2/2t} eta(Y/2) dY dx,
/// with x Haar-distributed and Y drawn from N(0, t) per coordinate. SU(2) only.
ComplexEstimate bks_bracket_integral(const GroupModel& model, const FourierSeries& phi, const FourierSeries& f,
                                     const BksIntegralScheme& scheme);

/// F_Phi(x) = int_k chi^C_n(x exp iY) e^{-|Y|^2/2t} eta(Y/2) dY by a
/// spherical product rule on su(2).
double bks_function_value(int n, double t, const Mat2c& x, int order);

struct ConstantsRow {
  Weight lambda;
  double t = 1.0;
  int d = 1;
  double norm2_shift = 0.0;
  double c = 0.0;
  double d_const = 0.0;
  double c_tilde = 0.0;
  double c_tilde_err = 0.0;
  double ratio_check = 0.0;
};

ConstantsRow constants_row(const RootSystem& rs, const Weight& lambda, double t, int order);

}  // namespace hpw

// Copyright 2026 The hpw Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "hpw/common.hpp"
#include "hpw/models.hpp"
#include "hpw/rng.hpp"
#include "hpw/rootdata.hpp"

namespace hpw {

/// L2K: functions on K. HL2: holomorphic functions on K^C with the
/// e^{-|Y|^2/t} eta measure. HL2Naive: the same space with eta dropped.
enum class Space { kL2K, kHL2, kHL2Naive };

const char* space_name(Space s);
Space space_from_name(const std::string& name);

/// f(x) = sum_lambda d_lambda trace(f_lambda T_lambda(x)). For the
/// holomorphic spaces the same coefficients describe the extension to K^C.
struct FourierSeries {
  std::string group = "A1";
  Space space = Space::kL2K;
  double t = 1.0;
  std::map<std::vector<int>, CMat> terms;  // Dynkin labels -> d x d matrix

  RootSystem root_system() const { return root_system_from_name(group); }
};

/// Throws kInvalidArgument unless every label is dominant and every matrix
/// has the size of its representation.
void validate(const FourierSeries& s);

/// The series of chi_lambda (or chi^C_lambda): the single term Id/d.
FourierSeries character_series(const RootSystem& rs, const Weight& lambda, Space space, double t = 1.0);

/// Random coefficients with independent standard complex normal entries on
/// every dominant weight up to max_level.
FourierSeries random_series(const RootSystem& rs, int max_level, Space space, double t, Stream& stream);

using GroupFn = std::function<Complex(const Mat2c&)>;

struct HaarScheme {
  std::uint64_t samples = 100000;
  std::uint64_t seed = 0;
};

struct CoefficientEstimate {
  CMat value;
  Mat std_error;  // per entry, real and imaginary parts combined
};

/// Monte-Carlo estimate of f_lambda = (1/vol K) int_K f(x) T_lambda(x^{-1}) dx.
/// SU(2) only.
CoefficientEstimate fourier_coeff(const GroupModel& model, const GroupFn& f, int n, const HaarScheme& scheme);

/// f(x); L2K only unless y is given.
Complex synthesize(const FourierSeries& s, const Mat2c& x);
/// Holomorphic extension at the polar point x exp(iY), Y in algebra coordinates.
Complex synthesize(const FourierSeries& s, const Mat2c& x, const Vec& y);

/// (a*b)(q) = (1/vol K) int_K a(x) b(x^{-1} q) dx, termwise as b_lambda a_lambda.
FourierSeries convolve(const FourierSeries& a, const FourierSeries& b);

/// Squared Plancherel norm: sum d ||f||^2_HS (L2K), sum d C ||c||^2_HS (HL2),
/// sum d C~ ||c||^2_HS (HL2Naive; C~ by quadrature of the given order,
/// zero meaning the default).
double plancherel_norm(const FourierSeries& s, int naive_order = 0);

/// (f*h)(e) = sum d trace(h_lambda f_lambda).
Complex symmetric_pairing(const FourierSeries& f, const FourierSeries& h);

/// Direct Monte-Carlo of (1/vol K) int_K a(x) b(x^{-1} q) dx.
ComplexEstimate convolution_oracle(const GroupModel& model, const FourierSeries& a, const FourierSeries& b,
                                   const Mat2c& q, const HaarScheme& scheme);

/// Monte-Carlo of (1/vol K) int_K |f|^2.
Estimate l2_norm_oracle(const GroupModel& model, const FourierSeries& s, const HaarScheme& scheme);

/// Coefficients of f up to max_level from one Haar sample set, synthesized
/// back at each point. The standard error is that of the synthesized value.
std::vector<ComplexEstimate> round_trip(const GroupModel& model, const GroupFn& f, int max_level,
                                        const std::vector<Mat2c>& points, const HaarScheme& scheme);

}  // namespace hpw

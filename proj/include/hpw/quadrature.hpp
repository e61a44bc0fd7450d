// Copyright 2026 The hpw Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "hpw/common.hpp"
#include "hpw/models.hpp"
#include "hpw/rootdata.hpp"

namespace hpw {

/// Gauss-Legendre rule on [-1, 1].
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};
GaussRule gauss_legendre(int n);

/// Nodes in the open dominant chamber (orthonormal t-coordinates) and
/// weights that already carry prod_{a in R+} a(Y)^2 and vol(K/T), so that
/// sum w f(node) approximates int_k f for Ad-invariant f.
struct ChamberQuadrature {
  std::vector<Vec> nodes;
  std::vector<double> weights;
  double radius = 0.0;
  int order = 0;
};

/// Tensor Gauss-Legendre rule on the dominant chamber truncated at
/// R = sqrt(t) (|mu| sqrt(t)/2 + 8), enough for integrands bounded by
/// poly(Y) e^{|mu||Y| - |Y|^2/t}. A2 uses Y = s1 w1 + s2 w2, s >= 0.
ChamberQuadrature build_chamber_quadrature(const RootSystem& rs, double t, int order,
                                           double target_mu_norm);

using InvariantFn = std::function<double(const Vec&)>;

/// sum w f(node). f is evaluated on t only; the caller guarantees that it
/// is the restriction of an Ad-invariant function.
double integrate_invariant(const ChamberQuadrature& q, const InvariantFn& f);

/// int_k e^{-<mu,Y> - |Y|^2/t} dY = (t pi)^{dim_k/2} e^{t |mu|^2 / 4}.
double gaussian_linear_moment(const RootSystem& rs, const Vec& mu, double t);

/// Function on the full algebra (coordinates in the model's orthonormal basis).
using AlgebraFn = std::function<double(const Vec&)>;

struct CartesianScheme {
  enum class Kind { kMonteCarlo, kGridA1 };
  Kind kind = Kind::kMonteCarlo;
  std::uint64_t samples = 1000000;
  std::uint64_t seed = 0;
  int order = 128;
  double mu_norm = 0.0;  // growth rate of g, sets the radial truncation

  static CartesianScheme monte_carlo(std::uint64_t samples, std::uint64_t seed) {
    return {Kind::kMonteCarlo, samples, seed, 0, 0.0};
  }
  static CartesianScheme grid_a1(int order, double mu_norm = 0.0) {
    return {Kind::kGridA1, 0, 0, order, mu_norm};
  }
};

/// Brute-force int_k g(Y) e^{-|Y|^2/t} dY over k = R^{dim_k} with no chamber
/// reduction. Monte-Carlo draws Y with variance t/2 per coordinate; GridA1 is
/// a radial rule along one axis of su(2), valid for Ad-invariant g.
Estimate cartesian_oracle_integrate(const GroupModel& model, const AlgebraFn& g, double t,
                                    const CartesianScheme& scheme);

/// Same, for several integrands over one shared sample set.
std::vector<Estimate> cartesian_oracle_integrate(const GroupModel& model,
                                                 const std::vector<AlgebraFn>& gs, double t,
                                                 const CartesianScheme& scheme);

struct FlagVolumeCalibration {
  double value = 1.0;       // closed form, in diagonal-entry coordinates
  double mc_value = 1.0;    // Monte-Carlo calibration
  double mc_std_error = 0.0;
};

/// Calibrates vol(K/T) in the chamber reduction. The Gaussian reference
/// pi^{dim/2} / int_{C+} prod a^2 e^{-|Y|^2} gives the closed form; a
/// Cartesian Monte-Carlo run against eta e^{-|Y|^2} must agree with it
/// within 5 standard errors.
FlagVolumeCalibration calibrate_flag_volume(const RootSystem& rs, std::uint64_t samples = 200000,
                                            std::uint64_t seed = 1);

}  // namespace hpw

// Copyright 2026 The hpw Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hpw/common.hpp"
#include "hpw/models.hpp"
#include "hpw/rootdata.hpp"

namespace hpw {

/// eta(Y) = det(sin(ad Y)/ad Y)^{1/2} = prod_{a in R+} sinh(a(Y))/a(Y).
double eta(const RootSystem& rs, const Vec& y);

/// eta from the spectrum of ad(Y) on the full algebra (Y in algebra coords).
double eta_det_oracle(const GroupModel& model, const Vec& coords);

/// j(iY) = prod_{a in R+} sinh(a(Y)/2)/(a(Y)/2).
double j_imaginary(const RootSystem& rs, const Vec& y);

/// |j(iY) - eta(Y/2)|.
double j_half_identity_residual(const RootSystem& rs, const Vec& y);

struct WeightMultiplicity {
  Vec coords;
  int multiplicity = 0;
};

/// Weights of the irreducible representation with highest weight lambda and
/// their multiplicities, from Kostant's multiplicity formula.
std::vector<WeightMultiplicity> weight_system(const RootSystem& rs, const Weight& lambda);

/// chi_lambda(exp Y) from the Weyl quotient; nullopt when |denominator| is
/// below 1e-12 (Y on or next to a wall).
std::optional<Complex> weyl_char_compact(const RootSystem& rs, const Weight& lambda, const Vec& y);

/// chi_lambda(exp Y) as sum_mu m_mu e^{i<mu,Y>}; defined everywhere.
Complex char_compact_from_weights(const RootSystem& rs, const Weight& lambda, const Vec& y);

/// Holomorphic character chi^C_lambda(exp iY) =
///   sum_w det(w) e^{-<w(lambda+rho),Y>} / sum_w det(w) e^{-<w rho,Y>}.
/// Near walls, where the quotient loses precision, the weight expansion
/// sum_mu m_mu e^{-<mu,Y>} is used instead.
double weyl_char_holo(const RootSystem& rs, const Weight& lambda, const Vec& y);

/// The weight expansion alone.
double char_holo_from_weights(const RootSystem& rs, const Weight& lambda, const Vec& y);

/// Evaluators that reuse one weight system across many points.
class HoloCharacter {
 public:
  HoloCharacter(const RootSystem& rs, const Weight& lambda);
  double operator()(const Vec& y) const;
  int dimension() const { return dim_; }

 private:
  Mat weights_;  // rank x count
  Vec mult_;
  int dim_ = 1;
};

struct OrbitalScheme {
  enum class Kind { kClosedFormA1, kMonteCarlo };
  Kind kind = Kind::kClosedFormA1;
  std::uint64_t samples = 100000;
  std::uint64_t seed = 0;

  static OrbitalScheme closed_form() { return {}; }
  static OrbitalScheme monte_carlo(std::uint64_t samples, std::uint64_t seed) {
    return {Kind::kMonteCarlo, samples, seed};
  }
};

/// Normalized orbital average A(mu, Y) = (1/vol K/T) int_{K/T} e^{-<mu, Ad_y Y>} d(yT).
Estimate orbital_average(const RootSystem& rs, const Vec& mu, const Vec& y, const OrbitalScheme& scheme);

/// Where Kirillov's formula is evaluated: at exp(2iY), where it reads
/// eta(Y) chi^C(exp 2iY) = d A(2(lambda+rho), Y), or at exp(iY), where it
/// reads eta(Y/2) chi^C(exp iY) = d A(lambda+rho, Y).
enum class KirillovPoint { kDoubled, kSingle };

struct KirillovResult {
  double lhs = 0.0;
  double rhs = 0.0;
  double residual = 0.0;
  double std_error = 0.0;  // of rhs; zero for the closed form
};

KirillovResult kirillov_residual(const RootSystem& rs, const Weight& lambda, const Vec& y,
                                 const OrbitalScheme& scheme,
                                 KirillovPoint point = KirillovPoint::kDoubled);

}  // namespace hpw

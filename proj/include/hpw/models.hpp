// Copyright 2026 The hpw Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "hpw/common.hpp"
#include "hpw/rng.hpp"
#include "hpw/rootdata.hpp"

namespace hpw {

using Mat2c = Eigen::Matrix2cd;

/// Matrix realization of SU(2) or SU(3) in the defining representation.
///
/// The algebra basis is orthonormal for <X,Y> = -trace(XY) and lists the
/// Cartan elements first, so the first `rank` algebra coordinates of a
/// Cartan element are its orthonormal t-coordinates.
class GroupModel {
 public:
  explicit GroupModel(GroupKind kind);

  GroupKind kind() const { return rs_.kind; }
  const RootSystem& root_system() const { return rs_; }
  int defining_dim() const { return n_; }
  int algebra_dim() const { return static_cast<int>(basis_.size()); }
  const std::vector<CMat>& algebra_basis() const { return basis_; }

  CMat algebra_element(const Vec& coords) const;
  Vec algebra_coords(const CMat& x) const;
  /// Cartan element with orthonormal t-coordinates y.
  CMat cartan_element(const Vec& y) const;

  /// Real dim_k x dim_k matrix of ad(X) in the orthonormal basis.
  Mat ad_matrix(const Vec& coords) const;

  /// Dominant-chamber representative (orthonormal t-coordinates) of the
  /// adjoint orbit through X, read off from the spectrum of -iX.
  Vec chamber_representative(const Vec& coords) const;

  /// Haar-distributed element of SU(n): Gaussian matrix, QR with phase fix,
  /// then determinant normalization.
  CMat haar_sample(Stream& stream) const;

  /// <mu, Ad_g(Y)> for mu, Y given in orthonormal t-coordinates.
  double adjoint_pairing(const Vec& mu, const CMat& g, const Vec& y) const;

 private:
  RootSystem rs_;
  int n_;
  std::vector<CMat> basis_;
};

/// Spin n/2 irreducible representation of SU(2) with generators for the
/// orthonormal algebra basis of GroupModel(GroupKind::A1).
struct IrrepMatrices {
  int n = 0;
  int dim = 1;
  std::vector<CMat> generators;  // anti-hermitian, dim x dim
};

IrrepMatrices make_irrep(int n);

/// exp(X) for a traceless 2x2 complex matrix, via X^2 = -det(X) I.
Mat2c exp_traceless2(const Mat2c& x);

/// exp(H) for a hermitian matrix, through its spectral decomposition.
CMat exp_hermitian(const CMat& h);

/// Algebra coordinates X with exp(X) = x for x in SU(2); the branch has
/// |X| <= sqrt(2) pi.
Vec su2_log(const Mat2c& x);

/// T_n(x) for x in SU(2).
CMat rep_matrix(const IrrepMatrices& m, const Mat2c& x);

/// T_n(x exp(iY)) = T_n(x) exp(i T_n'(Y)) for Y in su(2) (algebra coords).
CMat rep_matrix_holo(const IrrepMatrices& m, const Mat2c& x, const Vec& y);

/// The factor exp(i T_n'(Y)); positive-definite hermitian.
CMat holo_factor(const IrrepMatrices& m, const Vec& y);

/// Character of the spin n/2 representation at any g in SL(2,C), as the
/// Chebyshev polynomial U_n(trace(g)/2).
Complex su2_character(int n, const Mat2c& g);

/// The element x exp(iY) of SL(2,C) for x in SU(2), Y in su(2) coords.
Mat2c su2_polar(const GroupModel& model, const Mat2c& x, const Vec& y);

}  // namespace hpw

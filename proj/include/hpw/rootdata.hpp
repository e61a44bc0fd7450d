// Copyright 2026 The hpw Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

#include "hpw/common.hpp"

namespace hpw {

/// Root-system families handled by the library.
enum class GroupKind { A1, A2, Torus };

struct WeylElement {
  Mat matrix;
  int sign = 1;  // det(w)
};

/// Root data of su(2), su(3) or an abelian torus under the invariant inner
/// product <X,Y> = -trace(XY) in the defining representation. All vectors
/// are coordinates in an orthonormal basis of the Cartan subalgebra t.
struct RootSystem {
  GroupKind kind = GroupKind::A1;
  int rank = 1;
  int dim_k = 3;
  std::vector<Vec> positive_roots;
  std::vector<Vec> simple_roots;
  Vec rho;
  std::vector<WeylElement> weyl_elements;
  std::vector<Vec> fundamental_weights;
  /// vol(K/T) in the reduction  int_k f = flag_volume * int_{C+} prod a(Y)^2
  /// f dY, where dY on the chamber is Lebesgue measure in the diagonal-entry
  /// coordinates a_1..a_{n-1} of Y = i diag(a_1, ..., a_n).
  double flag_volume = 1.0;
  /// Ratio of orthonormal Lebesgue measure on t to diagonal-entry Lebesgue
  /// measure (sqrt(n) for su(n), 1 for tori).
  double diagonal_jacobian = 1.0;

  /// "A1", "A2" or "T<n>".
  std::string name() const;
};

/// Highest weight given by integer Dynkin labels; coords are derived.
struct Weight {
  std::vector<int> dynkin;
  Vec coords;

  bool operator==(const Weight& other) const { return dynkin == other.dynkin; }
  bool operator<(const Weight& other) const { return dynkin < other.dynkin; }
};

RootSystem build_root_system(GroupKind kind, int torus_rank = 1);

/// Parses "A1", "A2", "T<n>".
RootSystem root_system_from_name(const std::string& name);

Weight make_weight(const RootSystem& rs, std::vector<int> dynkin);
bool is_dominant(const RootSystem& rs, const Weight& w);

/// Dominant weights with every Dynkin label <= max_level, lexicographic in
/// the labels. On a torus every integral weight is dominant and the labels
/// range over [-max_level, max_level].
std::vector<Weight> enumerate_dominant(const RootSystem& rs, int max_level);

/// Weyl dimension formula.
int dimension(const RootSystem& rs, const Weight& lambda);

double weight_inner(const RootSystem& rs, const Vec& a, const Vec& b);
inline double weight_inner(const RootSystem& rs, const Weight& a, const Weight& b) {
  return weight_inner(rs, a.coords, b.coords);
}

/// lambda + rho in orthonormal coordinates.
Vec shifted(const RootSystem& rs, const Weight& lambda);

/// |lambda + rho|^2.
double norm2_shift(const RootSystem& rs, const Weight& lambda);

/// Maps a point of t onto its representative in the closed dominant chamber.
Vec to_dominant_chamber(const RootSystem& rs, const Vec& y);

/// Diagonal entries a with Y = i diag(a) for a point of t given in
/// orthonormal coordinates (A1, A2 only).
Vec diagonal_entries(const RootSystem& rs, const Vec& y);
Vec from_diagonal_entries(const RootSystem& rs, const Vec& a);

}  // namespace hpw

// Copyright 2026 The hpw Authors
// SPDX-License-Identifier: Apache-2.0

#include "hpw/rootdata.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace hpw {

namespace {

// Columns are the diagonal entries (divided by i) of an orthonormal basis of
// the diagonal Cartan subalgebra of su(n).
Mat diagonal_basis(GroupKind kind) {
  if (kind == GroupKind::A1) {
    Mat b(2, 1);
    b << 1.0 / std::sqrt(2.0), -1.0 / std::sqrt(2.0);
    return b;
  }
  Mat b(3, 2);
  const double s2 = 1.0 / std::sqrt(2.0);
  const double s6 = 1.0 / std::sqrt(6.0);
  b << s2, s6,
      -s2, s6,
      0.0, -2.0 * s6;
  return b;
}

Mat reflection(const Vec& alpha) {
  const Eigen::Index n = alpha.size();
  return Mat::Identity(n, n) - 2.0 * alpha * alpha.transpose() / alpha.squaredNorm();
}

// Closes the set of simple reflections under multiplication.
std::vector<WeylElement> generate_weyl(const std::vector<Vec>& simple_roots, int rank) {
  std::vector<WeylElement> group{{Mat::Identity(rank, rank), 1}};
  std::vector<Mat> gens;
  for (const auto& a : simple_roots) gens.push_back(reflection(a));
  for (std::size_t i = 0; i < group.size(); ++i) {
    for (const auto& g : gens) {
      Mat candidate = g * group[i].matrix;
      const bool known = std::any_of(group.begin(), group.end(), [&](const WeylElement& w) {
        return (w.matrix - candidate).cwiseAbs().maxCoeff() < 1e-12;
      });
      if (!known) group.push_back({candidate, -group[i].sign});
    }
  }
  return group;
}

}  // namespace

std::string RootSystem::name() const {
  switch (kind) {
    case GroupKind::A1: return "A1";
    case GroupKind::A2: return "A2";
    case GroupKind::Torus: return "T" + std::to_string(rank);
  }
  return "?";
}

RootSystem build_root_system(GroupKind kind, int torus_rank) {
  RootSystem rs;
  rs.kind = kind;
  const double pi = std::numbers::pi;
  switch (kind) {
    case GroupKind::A1: {
      rs.rank = 1;
      Vec a(1);
      a << std::sqrt(2.0);
      rs.positive_roots = {a};
      rs.simple_roots = {a};
      rs.diagonal_jacobian = std::sqrt(2.0);
      // 2 pi in orthonormal coordinates; see calibrate_flag_volume.
      rs.flag_volume = 2.0 * pi * rs.diagonal_jacobian;
      break;
    }
    case GroupKind::A2: {
      rs.rank = 2;
      const Mat b = diagonal_basis(kind);
      auto root = [&](int i, int j) -> Vec { return (b.row(i) - b.row(j)).transpose(); };
      rs.simple_roots = {root(0, 1), root(1, 2)};
      rs.positive_roots = {root(0, 1), root(1, 2), root(0, 2)};
      rs.diagonal_jacobian = std::sqrt(3.0);
      // 4 pi^3 in orthonormal coordinates; see calibrate_flag_volume.
      rs.flag_volume = 4.0 * pi * pi * pi * rs.diagonal_jacobian;
      break;
    }
    case GroupKind::Torus: {
      if (torus_rank < 1) throw Error(ErrorCode::kUnsupported, "torus rank must be >= 1");
      rs.rank = torus_rank;
      rs.diagonal_jacobian = 1.0;
      rs.flag_volume = 1.0;
      break;
    }
  }
  rs.dim_k = rs.rank + 2 * static_cast<int>(rs.positive_roots.size());
  rs.rho = Vec::Zero(rs.rank);
  for (const auto& a : rs.positive_roots) rs.rho += 0.5 * a;

  if (kind == GroupKind::Torus) {
    for (int i = 0; i < rs.rank; ++i) rs.fundamental_weights.push_back(Vec::Unit(rs.rank, i));
  } else {
    // Solve <omega_i, alpha_j^vee> = delta_ij.
    Mat coroots(rs.rank, rs.rank);
    for (int j = 0; j < rs.rank; ++j) {
      const Vec& a = rs.simple_roots[j];
      coroots.row(j) = (2.0 * a / a.squaredNorm()).transpose();
    }
    const Mat omegas = coroots.inverse();
    for (int i = 0; i < rs.rank; ++i) rs.fundamental_weights.push_back(omegas.col(i));
  }
  rs.weyl_elements = generate_weyl(rs.simple_roots, rs.rank);
  return rs;
}

RootSystem root_system_from_name(const std::string& name) {
  if (name == "A1") return build_root_system(GroupKind::A1);
  if (name == "A2") return build_root_system(GroupKind::A2);
  if (name.size() >= 2 && name[0] == 'T') {
    const std::string digits = name.substr(1);
    if (std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; })) {
      const int n = std::stoi(digits);
      if (n >= 1 && n <= 16) return build_root_system(GroupKind::Torus, n);
    }
  }
  throw Error(ErrorCode::kUnsupported, "unsupported group '" + name + "' (expected A1, A2 or T<n>)");
}

Weight make_weight(const RootSystem& rs, std::vector<int> dynkin) {
  if (static_cast<int>(dynkin.size()) != rs.rank) {
    throw Error(ErrorCode::kInvalidArgument, "weight has " + std::to_string(dynkin.size()) +
                                                 " Dynkin labels, rank is " + std::to_string(rs.rank));
  }
  Weight w;
  w.coords = Vec::Zero(rs.rank);
  for (int i = 0; i < rs.rank; ++i) w.coords += dynkin[i] * rs.fundamental_weights[i];
  w.dynkin = std::move(dynkin);
  return w;
}

bool is_dominant(const RootSystem& rs, const Weight& w) {
  if (rs.kind == GroupKind::Torus) return true;
  return std::all_of(w.dynkin.begin(), w.dynkin.end(), [](int k) { return k >= 0; });
}

std::vector<Weight> enumerate_dominant(const RootSystem& rs, int max_level) {
  if (max_level < 0) throw Error(ErrorCode::kInvalidArgument, "max_level must be >= 0");
  const int lo = rs.kind == GroupKind::Torus ? -max_level : 0;
  std::vector<Weight> out;
  std::vector<int> labels(rs.rank, lo);
  while (true) {
    out.push_back(make_weight(rs, labels));
    int pos = rs.rank - 1;
    while (pos >= 0 && labels[pos] == max_level) {
      labels[pos] = lo;
      --pos;
    }
    if (pos < 0) break;
    ++labels[pos];
  }
  return out;
}

int dimension(const RootSystem& rs, const Weight& lambda) {
  if (!is_dominant(rs, lambda)) throw Error(ErrorCode::kInvalidArgument, "dimension of a non-dominant weight");
  const Vec shifted_weight = lambda.coords + rs.rho;
  double d = 1.0;
  for (const auto& a : rs.positive_roots) d *= shifted_weight.dot(a) / rs.rho.dot(a);
  const double r = std::round(d);
  if (std::abs(d - r) > 1e-9) throw Error(ErrorCode::kNumerical, "Weyl dimension is not integral");
  return static_cast<int>(r);
}

double weight_inner(const RootSystem& rs, const Vec& a, const Vec& b) {
  if (a.size() != rs.rank || b.size() != rs.rank) {
    throw Error(ErrorCode::kInvalidArgument, "rank mismatch in weight_inner");
  }
  return a.dot(b);
}

Vec shifted(const RootSystem& rs, const Weight& lambda) { return lambda.coords + rs.rho; }

double norm2_shift(const RootSystem& rs, const Weight& lambda) {
  return shifted(rs, lambda).squaredNorm();
}

Vec to_dominant_chamber(const RootSystem& rs, const Vec& y) {
  switch (rs.kind) {
    case GroupKind::Torus: return y;
    case GroupKind::A1: {
      Vec out(1);
      out << std::abs(y(0));
      return out;
    }
    case GroupKind::A2: {
      Vec a = diagonal_entries(rs, y);
      std::sort(a.data(), a.data() + a.size(), std::greater<>());
      return from_diagonal_entries(rs, a);
    }
  }
  return y;
}

Vec diagonal_entries(const RootSystem& rs, const Vec& y) {
  if (rs.kind == GroupKind::Torus) throw Error(ErrorCode::kUnsupported, "tori have no matrix model");
  return diagonal_basis(rs.kind) * y;
}

Vec from_diagonal_entries(const RootSystem& rs, const Vec& a) {
  if (rs.kind == GroupKind::Torus) throw Error(ErrorCode::kUnsupported, "tori have no matrix model");
  return diagonal_basis(rs.kind).transpose() * a;
}

}  // namespace hpw

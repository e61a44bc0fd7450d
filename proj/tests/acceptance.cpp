// Copyright 2026 The hpw Authors
// SPDX-License-Identifier: Apache-2.0

// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <string>
#include <vector>

#include "hpw/chars.hpp"
#include "hpw/fourier.hpp"
#include "hpw/heat.hpp"
#include "hpw/hilbert.hpp"
#include "hpw/quadrature.hpp"
#include "hpw/rng.hpp"
#include "hpw/verify.hpp"

using namespace hpw;

namespace {

constexpr std::uint64_t kSeed = 42;

struct Tally {
  bool pass = true;
  int checks = 0;
  double worst_rel = 0.0;
  double worst_sigma = 0.0;
  std::vector<std::string> failures;

  void exact(const std::string& id, double err, double tol) {
    ++checks;
    worst_rel = std::max(worst_rel, err);
    if (!(err <= tol)) fail(id + " err=" + std::to_string(err));
  }
  void statistical(const std::string& id, double diff, double se) {
    ++checks;
    const double sigma = se > 0.0 ? std::abs(diff) / se : 0.0;
    worst_sigma = std::max(worst_sigma, sigma);
    const bool ok = se > 0.0 ? sigma <= 3.0 : std::abs(diff) <= 1e-12;
    if (!ok) fail(id + " sigma=" + std::to_string(sigma));
  }
  void require(const std::string& id, bool ok) {
    ++checks;
    if (!ok) fail(id);
  }
  void absorb(const Report& r) {
    for (const CheckRow& row : r.rows) {
      if (row.kind == CheckKind::kSkipped) continue;
      ++checks;
      if (row.kind == CheckKind::kExact) worst_rel = std::max(worst_rel, row.rel_err);
      if (row.kind == CheckKind::kStatistical) worst_sigma = std::max(worst_sigma, row.sigma);
      if (!row.pass) fail(row.id);
    }
  }
  void fail(const std::string& what) {
    pass = false;
    failures.push_back(what);
  }
};

Report run(const std::string& group, const std::string& suite, double t, int max_level, double tol,
           std::uint64_t samples = 100000) {
  RunConfig c;
  c.group = group;
  c.t = t;
  c.max_level = max_level;
  c.tolerance = tol;
  c.mc_samples = samples;
  c.seed = kSeed;
  return run_verification_suite(c, suite);
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::vector<Weight> a2_box(const RootSystem& rs, int cap) {
  std::vector<Weight> out;
  for (int a = 0; a <= cap; ++a)
    for (int b = 0; b <= cap; ++b) out.push_back(make_weight(rs, {a, b}));
  return out;
}

std::string lbl(const Weight& w) {
  std::string s = "(";
  for (std::size_t i = 0; i < w.dynkin.size(); ++i) s += (i ? "," : "") + std::to_string(w.dynkin[i]);
  return s + ")";
}

// Norm identity on the A1 grid (lambda 0..6, t in {0.5, 1, 2}) and the A2 box
// lambda <= (2,2) at t = 1, each inside its time budget.
void norm_grids(Tally& tally, NormConstant which) {
  const RootSystem a1 = build_root_system(GroupKind::A1);
  auto start = std::chrono::steady_clock::now();
  for (double t : {0.5, 1.0, 2.0})
    for (int n = 0; n <= 6; ++n) {
      const NormIdentity r = verify_norm_identity(a1, make_weight(a1, {n}), t, which, default_quad_order(a1));
      tally.exact("A1/(" + std::to_string(n) + ")/t=" + std::to_string(t), r.rel_residual, 1e-8);
    }
  const double a1_time = seconds_since(start);
  tally.require("A1 runtime " + std::to_string(a1_time) + " s < 1 s", a1_time < 1.0);

  const RootSystem a2 = build_root_system(GroupKind::A2);
  start = std::chrono::steady_clock::now();
  for (const Weight& w : a2_box(a2, 2)) {
    const NormIdentity r = verify_norm_identity(a2, w, 1.0, which, default_quad_order(a2));
    tally.exact("A2/" + lbl(w), r.rel_residual, 1e-6);
  }
  const double a2_time = seconds_since(start);
  tally.require("A2 runtime " + std::to_string(a2_time) + " s < 30 s", a2_time < 30.0);
}

Tally criterion1() {
  Tally t;
  norm_grids(t, NormConstant::kC);
  return t;
}

Tally criterion2() {
  Tally tally;
  norm_grids(tally, NormConstant::kD);
  const RootSystem a1 = build_root_system(GroupKind::A1);
  const GroupModel model(GroupKind::A1);
  Stream s = Stream::derive(kSeed, 2);
  std::vector<Mat2c> xs;
  for (int k = 0; k < 20; ++k) xs.push_back(model.haar_sample(s));
  for (double t : {0.5, 1.0, 2.0})
    for (int n = 0; n <= 6; ++n) {
      const double d = d_constant(a1, make_weight(a1, {n}), t);
      for (int k = 0; k < 20; ++k) {
        const double expected = d * su2_character(n, xs[k]).real();
        const double got = bks_function_value(n, t, xs[k], 48);
        // chi may vanish at x, so the error is measured against max(|D chi|, D).
        tally.exact("F_phi", std::abs(got - expected) / std::max(std::abs(expected), d), 1e-6);
      }
    }
  return tally;
}

Tally criterion3() {
  Tally tally;
  tally.absorb(run("A1", "kirillov", 1.0, 6, 1e-12));
  tally.absorb(run("A2", "kirillov", 1.0, 2, 1e-12, 100000));
  return tally;
}

Tally criterion4() {
  Tally tally;
  tally.absorb(run("A1", "weylint", 1.0, 2, 1e-12, 1000000));
  tally.absorb(run("A2", "weylint", 1.0, 2, 1e-12, 1000000));
  const RootSystem a1 = build_root_system(GroupKind::A1);
  const FlagVolumeCalibration cal = calibrate_flag_volume(a1, 1000000, kSeed);
  const double target = std::pow(2.0, 1.5) * std::numbers::pi;
  tally.exact("A1 flag volume (Gaussian reference)", std::abs(cal.value - target), 1e-3);
  tally.statistical("A1 flag volume (Monte-Carlo)", cal.mc_value - target, cal.mc_std_error);
  return tally;
}

Tally criterion5() {
  Tally tally;
  Stream s = Stream::derive(kSeed, 5);
  for (GroupKind kind : {GroupKind::A1, GroupKind::A2}) {
    const RootSystem rs = build_root_system(kind);
    const GroupModel model(kind);
    for (int k = 0; k < 100; ++k) {
      Vec x(model.algebra_dim());
      for (Eigen::Index i = 0; i < x.size(); ++i) x(i) = 0.8 * s.normal();
      const Vec y = model.chamber_representative(x);
      const double e = eta(rs, y);
      tally.exact("det oracle " + rs.name(), std::abs(eta_det_oracle(model, x) - e) / e, 1e-10);
      tally.exact("j identity " + rs.name(), j_half_identity_residual(rs, y), 1e-13);
    }
  }
  return tally;
}

Tally criterion6() {
  Tally tally;
  // Round trip of spins <= 2 and ||chi||^2 = 1 by Haar Monte-Carlo.
  tally.absorb(run("A1", "fourier", 1.0, 2, 1e-8));
  // HL2 norm of chi^C equals C, the C being the quadrature of criterion 1.
  for (const char* g : {"A1", "A2"}) tally.absorb(run(g, "plancherel", 1.0, g[1] == '1' ? 6 : 4, 1e-8));
  return tally;
}

Tally criterion7() {
  Tally tally;
  tally.absorb(run("A1", "convolution", 1.0, 2, 1e-12));
  return tally;
}

Tally criterion8() {
  Tally tally;
  for (const char* g : {"A1", "A2", "T2"}) tally.absorb(run(g, "unitarity", 1.0, 4, 1e-12));
  tally.absorb(run("A1", "bks", 1.0, 4, 1e-12));
  return tally;
}

Tally criterion9() {
  Tally tally;
  tally.absorb(run("A1", "heat", 1.0, 2, 1e-13));
  tally.absorb(run("A2", "heat", 1.0, 4, 1e-13));
  return tally;
}

Tally criterion10() {
  Tally tally;
  const RootSystem a1 = build_root_system(GroupKind::A1);
  for (int n = 0; n <= 4; ++n) {
    const NaiveConstant c = naive_constant(a1, make_weight(a1, {n}), 1.0, default_quad_order(a1));
    tally.exact("A1 C~ (" + std::to_string(n) + ") doubling", c.stability / c.value, 1e-8);
  }
  for (int rank : {1, 2}) {
    const RootSystem tn = build_root_system(GroupKind::Torus, rank);
    for (const Weight& w : enumerate_dominant(tn, 3)) {
      const double c = c_constant(tn, w, 1.0);
      const NaiveConstant naive = naive_constant(tn, w, 1.0, default_quad_order(tn));
      tally.exact("torus C~ = C " + lbl(w), std::abs(naive.value - c) / c, 1e-12);
    }
  }
  return tally;
}

}  // namespace

int main() {
  using Fn = Tally (*)();
  const std::vector<std::pair<const char*, Fn>> criteria = {
      {"holomorphic Peter-Weyl constants C", criterion1},
      {"BKS constants D and F_phi = D chi", criterion2},
      {"Kirillov character formula", criterion3},
      {"chamber integration formula and flag volume", criterion4},
      {"eta consistency", criterion5},
      {"Fourier synthesis and Plancherel", criterion6},
      {"convolution homomorphism", criterion7},
      {"unitarity of H and the BKS pairing", criterion8},
      {"heat multiplier, semigroup, heat kernel", criterion9},
      {"naive constant stability", criterion10},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Tally t;
    try {
      t = criteria[i].second();
    } catch (const std::exception& e) {
      t.fail(std::string("exception: ") + e.what());
    }
    std::printf("%s criterion %zu: %s [%d checks, max rel err %.3g, max sigma %.3g, %.1f s]\n", t.pass ? "PASS" : "FAIL",
                i + 1, criteria[i].first, t.checks, t.worst_rel, t.worst_sigma, seconds_since(start));
    for (std::size_t k = 0; k < std::min<std::size_t>(t.failures.size(), 10); ++k) {
      std::printf("    %s\n", t.failures[k].c_str());
    }
    failed += t.pass ? 0 : 1;
  }
  std::fflush(stdout);
  return failed == 0 ? 0 : 1;
}

// Copyright 2026 The hpw Authors
// SPDX-License-Identifier: Apache-2.0

#include "hpw/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <numbers>

#include "hpw/chars.hpp"
#include "hpw/fourier.hpp"
#include "hpw/heat.hpp"
#include "hpw/hilbert.hpp"
#include "hpw/io.hpp"
#include "hpw/quadrature.hpp"
#include "hpw/rng.hpp"
#include "json.hpp"

namespace hpw {

namespace {

constexpr double kSigmaBound = 3.0;

std::string label(const Weight& w) {
  std::string s = "(";
  for (std::size_t i = 0; i < w.dynkin.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(w.dynkin[i]);
  }
  return s + ")";
}

std::string index_label(const char* prefix, int k) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%s%03d", prefix, k);
  return buf;
}

std::string t_label(double t) { return "t=" + format_double(t); }

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

bool has_su2_irreps(const std::string& group) { return group == "A1"; }

class Checks {
 public:
  Checks(const RunConfig& c, std::string suite) : config_(c), suite_(std::move(suite)) {}

  const RunConfig& config() const { return config_; }

  /// A stream owned by one check, so adding checks never shifts others.
  Stream stream(const std::string& name) const { return Stream::derive(config_.seed, fnv1a(suite_ + "/" + name)); }
  std::uint64_t seed(const std::string& name) const { return Stream::derive(config_.seed, fnv1a(suite_ + "/" + name)).uniform() * 0x1p53; }

  void exact(const std::string& name, double lhs, double rhs, double scale = 0.0) {
    CheckRow r = row(name, CheckKind::kExact, lhs, rhs);
    r.abs_err = std::abs(lhs - rhs);
    const double denom = scale > 0.0 ? scale : std::abs(rhs);
    r.rel_err = denom > 0.0 ? r.abs_err / denom : r.abs_err;
    r.pass = r.rel_err <= config_.tolerance;
    rows_.push_back(r);
  }

  void exact(const std::string& name, Complex lhs, Complex rhs, double scale = 0.0) {
    CheckRow r = row(name, CheckKind::kExact, lhs.real(), rhs.real());
    r.abs_err = std::abs(lhs - rhs);
    const double denom = scale > 0.0 ? scale : std::abs(rhs);
    r.rel_err = denom > 0.0 ? r.abs_err / denom : r.abs_err;
    r.pass = r.rel_err <= config_.tolerance;
    rows_.push_back(r);
  }

  /// A residual that should vanish, measured against `scale`.
  void residual(const std::string& name, double value, double scale = 1.0) { exact(name, value, 0.0, scale); }

  void flag(const std::string& name, bool ok, const std::string& note) {
    CheckRow r = row(name, CheckKind::kExact, ok ? 1.0 : 0.0, 1.0);
    r.abs_err = ok ? 0.0 : 1.0;
    r.rel_err = r.abs_err;
    r.pass = ok;
    r.note = note;
    rows_.push_back(r);
  }

  void statistical(const std::string& name, Complex est, double se, Complex expected) {
    CheckRow r = row(name, CheckKind::kStatistical, est.real(), expected.real());
    r.abs_err = std::abs(est - expected);
    r.std_error = se;
    if (se > 0.0) {
      r.sigma = r.abs_err / se;
      r.pass = r.sigma <= kSigmaBound;
    } else {
      // Zero spread: the estimator is constant and must be exact.
      r.sigma = 0.0;
      r.pass = r.abs_err <= 1e-12 * std::max(1.0, std::abs(expected));
    }
    rows_.push_back(r);
  }

  void skipped(const std::string& name, const std::string& why) {
    CheckRow r = row(name, CheckKind::kSkipped, 0.0, 0.0);
    r.note = "skipped: " + why;
    rows_.push_back(r);
  }

  std::vector<CheckRow> take() { return std::move(rows_); }

 private:
  CheckRow row(const std::string& name, CheckKind kind, double lhs, double rhs) const {
    CheckRow r;
    r.id = suite_ + "/" + name;
    r.kind = kind;
    r.lhs = lhs;
    r.rhs = rhs;
    return r;
  }

  const RunConfig& config_;
  std::string suite_;
  std::vector<CheckRow> rows_;
};

int quad_order(const RunConfig& c, const RootSystem& rs) { return c.quad_order > 0 ? c.quad_order : default_quad_order(rs); }

Vec random_cartan(Stream& s, int rank, double scale) {
  Vec y(rank);
  for (int i = 0; i < rank; ++i) y(i) = scale * s.normal();
  return y;
}

double max_abs(const CMat& m) { return m.size() ? m.cwiseAbs().maxCoeff() : 0.0; }

// Largest entrywise deviation between two series over the terms of `a`.
double series_distance(const FourierSeries& a, const FourierSeries& b) {
  double worst = 0.0;
  for (const auto& [k, c] : a.terms) {
    const CMat& other = b.terms.at(k);
    const double scale = std::max(max_abs(c), 1e-300);
    worst = std::max(worst, max_abs(c - other) / scale);
  }
  return worst;
}

// Spins 0..min(max_level, cap) on SU(2).
int spin_cap(const RunConfig& c, int cap) { return std::min(c.max_level, cap); }

void suite_lemma33(Checks& ch, const RootSystem& rs) {
  const RunConfig& c = ch.config();
  for (const Weight& w : enumerate_dominant(rs, c.max_level)) {
    const NormIdentity r = verify_norm_identity(rs, w, c.t, NormConstant::kC, quad_order(c, rs));
    ch.exact("C/" + label(w) + "/" + t_label(c.t), r.quadrature, r.closed_form);
  }
}

void suite_lemma64(Checks& ch, const RootSystem& rs) {
  const RunConfig& c = ch.config();
  for (const Weight& w : enumerate_dominant(rs, c.max_level)) {
    const NormIdentity r = verify_norm_identity(rs, w, c.t, NormConstant::kD, quad_order(c, rs));
    ch.exact("D/" + label(w) + "/" + t_label(c.t), r.quadrature, r.closed_form);
  }
  if (!has_su2_irreps(c.group)) {
    ch.skipped("F_phi", "function-level BKS map needs SU(2) characters at group elements");
    return;
  }
  const GroupModel model(GroupKind::A1);
  Stream s = ch.stream("F_phi");
  std::vector<Mat2c> xs;
  for (int k = 0; k < 20; ++k) xs.push_back(model.haar_sample(s));
  for (int n = 0; n <= spin_cap(c, 3); ++n) {
    const double d = d_constant(rs, make_weight(rs, {n}), c.t);
    for (int k = 0; k < 20; ++k) {
      const double expected = d * su2_character(n, xs[k]).real();
      // Relative to max(|D chi(x)|, D): chi may vanish at x.
      ch.exact("F_phi/(" + std::to_string(n) + ")/" + index_label("x", k), bks_function_value(n, c.t, xs[k], 32),
               expected, std::max(std::abs(expected), d));
    }
  }
}

void suite_kirillov(Checks& ch, const RootSystem& rs) {
  const RunConfig& c = ch.config();
  const auto weights = enumerate_dominant(rs, c.max_level);
  Stream s = ch.stream("points");
  if (rs.kind == GroupKind::A2) {
    for (const Weight& w : enumerate_dominant(rs, std::min(c.max_level, 2))) {
      const Vec y = to_dominant_chamber(rs, random_cartan(s, rs.rank, 0.5));
      for (KirillovPoint p : {KirillovPoint::kDoubled, KirillovPoint::kSingle}) {
        const std::string name = std::string(p == KirillovPoint::kDoubled ? "doubled/" : "single/") + label(w);
        // The doubled point has e^{2|lambda+rho||Y|} growth; keep Y moderate there.
        const Vec yy = p == KirillovPoint::kDoubled ? Vec(0.5 * y) : y;
        const KirillovResult r =
            kirillov_residual(rs, w, yy, OrbitalScheme::monte_carlo(c.mc_samples, ch.seed(name)), p);
        ch.statistical(name, r.rhs, r.std_error, r.lhs);
      }
    }
    return;
  }
  // A1 closed form and tori: 100 random (lambda, Y).
  for (int k = 0; k < 100; ++k) {
    const Weight& w = weights[static_cast<std::size_t>(s.uniform() * weights.size())];
    const Vec y = random_cartan(s, rs.rank, 1.0);
    const KirillovPoint p = k % 2 == 0 ? KirillovPoint::kDoubled : KirillovPoint::kSingle;
    const OrbitalScheme scheme = rs.kind == GroupKind::A1 ? OrbitalScheme::closed_form() : OrbitalScheme::monte_carlo(1, 0);
    const KirillovResult r = kirillov_residual(rs, w, y, scheme, p);
    ch.exact(index_label("closed_form/p", k) + "/" + label(w), r.lhs, r.rhs);
  }
}

void suite_eta(Checks& ch, const RootSystem& rs) {
  Stream s = ch.stream("points");
  if (rs.kind == GroupKind::Torus) {
    for (int k = 0; k < 10; ++k) {
      const Vec y = random_cartan(s, rs.rank, 1.0);
      ch.exact(index_label("abelian/p", k), eta(rs, y), 1.0);
    }
    return;
  }
  const GroupModel model(rs.kind);
  for (int k = 0; k < 100; ++k) {
    const Vec x = random_cartan(s, model.algebra_dim(), 0.8);
    const Vec y = model.chamber_representative(x);
    const double e = eta(rs, y);
    ch.exact(index_label("det_oracle/p", k), eta_det_oracle(model, x), e);
    ch.residual(index_label("j_half/p", k), j_half_identity_residual(rs, y), e);
  }
}

void suite_weylint(Checks& ch, const RootSystem& rs) {
  const RunConfig& c = ch.config();
  if (rs.kind == GroupKind::Torus) {
    ch.skipped("cartesian", "the chamber of a torus is the whole Cartan algebra; nothing to reduce");
    ch.exact("flag_volume", rs.flag_volume, 1.0);
    return;
  }
  const GroupModel model(rs.kind);
  const double t = c.t;
  // Twenty invariant test functions on the algebra, given by their values on t.
  std::vector<std::pair<std::string, std::function<double(const Vec&)>>> fns;
  for (int k = 0; k <= 4; ++k) {
    fns.emplace_back("norm_pow" + std::to_string(2 * k), [k](const Vec& y) { return std::pow(y.squaredNorm(), k); });
  }
  fns.emplace_back("eta", [&rs](const Vec& y) { return eta(rs, y); });
  fns.emplace_back("j", [&rs](const Vec& y) { return j_imaginary(rs, y); });
  fns.emplace_back("cos_norm", [](const Vec& y) { return std::cos(y.norm()); });
  const auto weights = enumerate_dominant(rs, std::min(c.max_level, 2));
  for (const Weight& w : weights) {
    if (fns.size() >= 20) break;
    auto chi = std::make_shared<HoloCharacter>(rs, w);
    fns.emplace_back("chi_holo" + label(w), [chi](const Vec& y) { return (*chi)(0.5 * y); });
  }
  for (const Weight& w : weights) {
    if (fns.size() >= 20) break;
    fns.emplace_back("chi" + label(w), [&rs, w](const Vec& y) { return char_compact_from_weights(rs, w, y).real(); });
  }
  std::vector<AlgebraFn> full;
  std::vector<double> chamber;
  double mu = 0.0;
  for (const Weight& w : weights) mu = std::max(mu, shifted(rs, w).norm());
  const ChamberQuadrature q = build_chamber_quadrature(rs, t, quad_order(c, rs), 2.0 * mu);
  for (const auto& [name, f] : fns) {
    chamber.push_back(integrate_invariant(q, [&](const Vec& y) { return f(y) * std::exp(-y.squaredNorm() / t); }));
    full.push_back([&model, f = f](const Vec& x) { return f(model.chamber_representative(x)); });
  }
  const auto mc = cartesian_oracle_integrate(model, full, t, CartesianScheme::monte_carlo(c.mc_samples, ch.seed("cartesian")));
  for (std::size_t k = 0; k < fns.size(); ++k) ch.statistical("cartesian/" + fns[k].first, mc[k].value, mc[k].std_error, chamber[k]);

  const FlagVolumeCalibration cal = calibrate_flag_volume(rs, c.mc_samples, ch.seed("flag_volume"));
  ch.exact("flag_volume/closed_form", rs.flag_volume, cal.value);
  ch.statistical("flag_volume/monte_carlo", cal.mc_value, cal.mc_std_error, cal.value);
}

void suite_fourier(Checks& ch, const RootSystem& rs) {
  const RunConfig& c = ch.config();
  const GroupModel model(GroupKind::A1);
  const HaarScheme base{c.mc_samples, 0};
  const int cap = spin_cap(c, 2);

  // trace of the mu-th coefficient of chi_lambda: E[chi_lambda conj(chi_mu)] = delta.
  for (int l = 0; l <= cap; ++l)
    for (int m = 0; m <= cap; ++m) {
      const std::string name = "coeff_trace/(" + std::to_string(l) + ")/(" + std::to_string(m) + ")";
      Stream s = ch.stream(name);
      RunningStats stats;
      for (std::uint64_t k = 0; k < c.mc_samples; ++k) {
        const Mat2c x = model.haar_sample(s);
        stats.add((su2_character(l, x) * std::conj(su2_character(m, x))).real());
      }
      ch.statistical(name, stats.mean(), stats.std_error(), l == m ? 1.0 : 0.0);
    }
  {
    HaarScheme sc = base;
    sc.seed = ch.seed("constant");
    const CoefficientEstimate one = fourier_coeff(model, [](const Mat2c&) { return Complex(1.0); }, 0, sc);
    ch.exact("constant/(0)", one.value(0, 0), Complex(1.0));
  }
  {
    Stream s = ch.stream("round_trip");
    const FourierSeries f = random_series(rs, cap, Space::kL2K, c.t, s);
    std::vector<Mat2c> points;
    for (int k = 0; k < 100; ++k) points.push_back(model.haar_sample(s));
    HaarScheme sc = base;
    sc.seed = ch.seed("round_trip/samples");
    const auto est = round_trip(model, [&](const Mat2c& x) { return synthesize(f, x); }, cap, points, sc);
    for (int k = 0; k < 100; ++k) ch.statistical(index_label("round_trip/x", k), est[k].value, est[k].std_error, synthesize(f, points[k]));
  }
  for (int l = 0; l <= spin_cap(c, 4); ++l) {
    const std::string name = "l2_norm/(" + std::to_string(l) + ")";
    HaarScheme sc = base;
    sc.seed = ch.seed(name);
    const FourierSeries chi = character_series(rs, make_weight(rs, {l}), Space::kL2K);
    const Estimate e = l2_norm_oracle(model, chi, sc);
    ch.statistical(name, e.value, e.std_error, plancherel_norm(chi));
  }
}

void suite_convolution(Checks& ch, const RootSystem& rs) {
  const RunConfig& c = ch.config();
  const GroupModel model(GroupKind::A1);
  const int cap = spin_cap(c, 2);
  Stream s = ch.stream("points");
  for (int l = 0; l <= cap; ++l) {
    const std::string name = "char_self/(" + std::to_string(l) + ")";
    const FourierSeries chi = character_series(rs, make_weight(rs, {l}), Space::kL2K);
    const Mat2c q = model.haar_sample(s);
    const ComplexEstimate e = convolution_oracle(model, chi, chi, q, {c.mc_samples, ch.seed(name)});
    ch.statistical(name, e.value, e.std_error, synthesize(chi, q) / (l + 1.0));
    ch.exact("char_self_coeff/(" + std::to_string(l) + ")", synthesize(convolve(chi, chi), q), synthesize(chi, q) / (l + 1.0), l + 1.0);
  }
  for (int k = 0; k < 5; ++k) {
    const std::string name = index_label("random/q", k);
    const FourierSeries a = random_series(rs, std::max(cap, 1), Space::kL2K, c.t, s);
    const FourierSeries b = random_series(rs, std::max(cap, 1), Space::kL2K, c.t, s);
    const Mat2c q = model.haar_sample(s);
    const ComplexEstimate e = convolution_oracle(model, a, b, q, {c.mc_samples, ch.seed(name)});
    ch.statistical(name, e.value, e.std_error, synthesize(convolve(a, b), q));
  }
  for (int k = 0; k < 10; ++k) {
    const FourierSeries f = random_series(rs, std::max(cap, 1), Space::kL2K, c.t, s);
    const FourierSeries h = random_series(rs, std::max(cap, 1), Space::kL2K, c.t, s);
    const Complex pair = symmetric_pairing(f, h);
    ch.exact(index_label("pairing_at_e/p", k), synthesize(convolve(f, h), Mat2c::Identity()), pair, std::max(1.0, std::abs(pair)));
  }
  {
    const FourierSeries a = random_series(rs, std::max(cap, 1), Space::kL2K, c.t, s);
    FourierSeries one;
    one.terms[{0}] = CMat::Ones(1, 1);
    const FourierSeries r = convolve(a, one);
    ch.flag("constant_annihilates", r.terms.size() == 1 && r.terms.count({0}) == 1, "only the trivial term survives");
  }
}

void suite_plancherel(Checks& ch, const RootSystem& rs) {
  const RunConfig& c = ch.config();
  for (const Weight& w : enumerate_dominant(rs, c.max_level)) {
    ch.exact("L2K_char/" + label(w), plancherel_norm(character_series(rs, w, Space::kL2K)), 1.0);
    const NormIdentity q = verify_norm_identity(rs, w, c.t, NormConstant::kC, quad_order(c, rs));
    ch.exact("HL2_char/" + label(w) + "/" + t_label(c.t), plancherel_norm(character_series(rs, w, Space::kHL2, c.t)), q.quadrature);
  }
  ch.exact("empty", plancherel_norm(FourierSeries{rs.name(), Space::kL2K, c.t, {}}), 0.0);
  if (!has_su2_irreps(c.group)) {
    ch.skipped("L2K_random", "Haar integration of synthesized series needs SU(2) irrep matrices");
    return;
  }
  const GroupModel model(GroupKind::A1);
  for (int k = 0; k < 3; ++k) {
    const std::string name = index_label("L2K_random/s", k);
    Stream s = ch.stream(name);
    const FourierSeries f = random_series(rs, spin_cap(c, 2), Space::kL2K, c.t, s);
    const Estimate e = l2_norm_oracle(model, f, {c.mc_samples, ch.seed(name + "/samples")});
    ch.statistical(name, e.value, e.std_error, plancherel_norm(f));
  }
}

void suite_unitarity(Checks& ch, const RootSystem& rs) {
  const RunConfig& c = ch.config();
  for (double t : {c.t / 2.0, c.t, 2.0 * c.t})
    for (const Weight& w : enumerate_dominant(rs, c.max_level)) ch.residual("ratio/" + label(w) + "/" + t_label(t), ratio_check(rs, w, t));
  Stream s = ch.stream("series");
  const double scale = std::pow(4.0 * c.t * std::numbers::pi, -rs.dim_k / 4.0);
  for (int k = 0; k < 5; ++k) {
    const FourierSeries hl = random_series(rs, c.max_level, Space::kHL2, c.t, s);
    const FourierSeries h = transform_apply(hl, Transform::kH);
    ch.exact(index_label("H_norm/s", k), plancherel_norm(h), plancherel_norm(hl));
    ch.residual(index_label("H_inverse/s", k), series_distance(hl, transform_apply(h, Transform::kHInverse)));
    FourierSeries ts = transform_apply(h, Transform::kThetaStar);
    for (auto& [key, m] : ts.terms) m *= scale;
    ch.residual(index_label("theta_star_inverse/s", k), series_distance(hl, ts));
    ch.residual(index_label("scaled_theta/s", k), series_distance(h, transform_apply(hl, Transform::kScaledTheta)));
  }
  if (!has_su2_irreps(c.group)) {
    ch.skipped("rep_unitary", "irrep matrices unavailable for " + c.group);
    return;
  }
  const GroupModel model(GroupKind::A1);
  for (int n = 0; n <= c.max_level; ++n) {
    const IrrepMatrices m = make_irrep(n);
    double worst = 0.0;
    for (int k = 0; k < 100; ++k) {
      const CMat u = rep_matrix(m, model.haar_sample(s));
      worst = std::max(worst, max_abs(u.adjoint() * u - CMat::Identity(m.dim, m.dim)));
    }
    ch.residual("rep_unitary/(" + std::to_string(n) + ")", worst);
  }
}

void suite_bks(Checks& ch, const RootSystem& rs) {
  const RunConfig& c = ch.config();
  const auto weights = enumerate_dominant(rs, c.max_level);
  for (const Weight& w : weights) {
    const FourierSeries phi = character_series(rs, w, Space::kHL2, c.t);
    ch.exact("spectral_char/" + label(w), bks_bracket_spectral(phi, character_series(rs, w, Space::kL2K)),
             Complex(d_constant(rs, w, c.t)));
  }
  if (weights.size() > 1) {
    const Complex off = bks_bracket_spectral(character_series(rs, weights[1], Space::kHL2, c.t),
                                             character_series(rs, weights[0], Space::kL2K));
    ch.exact("spectral_orthogonal", off, Complex(0.0), 1.0);
  }
  Stream s = ch.stream("series");
  const FourierSeries phi = random_series(rs, c.max_level, Space::kHL2, c.t, s);
  const FourierSeries f = random_series(rs, c.max_level, Space::kL2K, c.t, s);
  const FourierSeries g = random_series(rs, c.max_level, Space::kL2K, c.t, s);
  const Complex a(0.3, -1.2);
  FourierSeries fg = f, aphi = phi;
  for (auto& [k, m] : fg.terms) m = m + a * g.terms.at(k);
  for (auto& [k, m] : aphi.terms) m *= a;
  const Complex lin = bks_bracket_spectral(phi, f) + a * bks_bracket_spectral(phi, g);
  ch.exact("linear_in_F", bks_bracket_spectral(phi, fg), lin, std::max(1.0, std::abs(lin)));
  const Complex anti = std::conj(a) * bks_bracket_spectral(phi, f);
  ch.exact("antilinear_in_phi", bks_bracket_spectral(aphi, f), anti, std::max(1.0, std::abs(anti)));

  if (!has_su2_irreps(c.group)) {
    ch.skipped("integral", "the integral route synthesizes series on SU(2)");
    return;
  }
  const GroupModel model(GroupKind::A1);
  for (int n = 0; n <= spin_cap(c, 2); ++n) {
    const std::string name = "integral_char/(" + std::to_string(n) + ")";
    const Weight w = make_weight(rs, {n});
    const FourierSeries p = character_series(rs, w, Space::kHL2, c.t);
    const FourierSeries q = character_series(rs, w, Space::kL2K);
    const ComplexEstimate e = bks_bracket_integral(model, p, q, {c.mc_samples, ch.seed(name)});
    ch.statistical(name, e.value, e.std_error, bks_bracket_spectral(p, q));
  }
  if (spin_cap(c, 2) >= 1) {
    const FourierSeries p = character_series(rs, make_weight(rs, {1}), Space::kHL2, c.t);
    const FourierSeries q = character_series(rs, make_weight(rs, {0}), Space::kL2K);
    const ComplexEstimate e = bks_bracket_integral(model, p, q, {c.mc_samples, ch.seed("integral_orthogonal")});
    ch.statistical("integral_orthogonal", e.value, e.std_error, 0.0);
  }
  {
    Stream rs2 = ch.stream("integral_random");
    const FourierSeries p = random_series(rs, spin_cap(c, 1), Space::kHL2, c.t, rs2);
    const FourierSeries q = random_series(rs, spin_cap(c, 1), Space::kL2K, c.t, rs2);
    const ComplexEstimate e = bks_bracket_integral(model, p, q, {c.mc_samples, ch.seed("integral_random/samples")});
    ch.statistical("integral_random", e.value, e.std_error, bks_bracket_spectral(p, q));
  }
}

void suite_heat(Checks& ch, const RootSystem& rs) {
  const RunConfig& c = ch.config();
  for (const Weight& w : enumerate_dominant(rs, c.max_level)) {
    const double e = energy_eigenvalue(rs, w);
    const bool trivial = std::all_of(w.dynkin.begin(), w.dynkin.end(), [](int v) { return v == 0; });
    const bool ok = trivial ? std::abs(e) < 1e-14 : e > 1e-12;
    ch.flag("energy/" + label(w), ok, "eps = " + format_double(e));
  }
  Stream s = ch.stream("series");
  for (int k = 0; k < 3; ++k) {
    FourierSeries f = random_series(rs, c.max_level, Space::kL2K, c.t, s);
    ch.residual(index_label("theta_star/s", k),
                series_distance(heat_multiplier_apply(f, c.t, true), transform_apply(f, Transform::kThetaStar)));
    const double t1 = 0.3 * c.t;
    ch.residual(index_label("semigroup/s", k),
                series_distance(heat_multiplier_apply(f, t1 + c.t), heat_multiplier_apply(heat_multiplier_apply(f, t1), c.t)));
  }
  if (!has_su2_irreps(c.group)) {
    ch.skipped("kernel", "pointwise heat kernel needs SU(2) characters at group elements");
    return;
  }
  const GroupModel model(GroupKind::A1);
  {
    const double a = heat_kernel_eval(model, c.t, Mat2c::Identity(), 1e-14).value;
    const double b = heat_kernel_eval(model, c.t, Mat2c::Identity(), 1e-15).value;
    ch.exact("kernel_at_e_cutoff", a, b);
    Stream ks = ch.stream("kernel_mass");
    RunningStats mass;
    for (std::uint64_t k = 0; k < c.mc_samples; ++k) mass.add(heat_kernel_eval(model, c.t, model.haar_sample(ks), 1e-12).value);
    ch.statistical("kernel_mass", mass.mean(), mass.std_error(), 1.0);
  }
  std::vector<std::pair<std::string, FourierSeries>> fs;
  FourierSeries one;
  one.terms[{0}] = CMat::Ones(1, 1);
  fs.emplace_back("constant", one);
  if (c.max_level >= 1) fs.emplace_back("chi(1)", character_series(rs, make_weight(rs, {1}), Space::kL2K));
  Stream rs2 = ch.stream("convolution_random");
  fs.emplace_back("random", random_series(rs, spin_cap(c, 2), Space::kL2K, c.t, rs2));
  for (const auto& [name, f] : fs) {
    const HeatConvolutionResult r = heat_convolution_residual(model, f, c.t, c.mc_samples, ch.seed("convolution/" + name));
    for (std::size_t k = 0; k < r.residuals.size(); ++k) {
      ch.statistical("convolution/" + name + "/" + index_label("y", static_cast<int>(k)), r.residuals[k], r.std_errors[k], 0.0);
    }
  }
}

using SuiteFn = void (*)(Checks&, const RootSystem&);

const std::map<std::string, std::pair<SuiteFn, bool>>& registry() {
  // name -> (runner, needs SU(2) irrep matrices)
  static const std::map<std::string, std::pair<SuiteFn, bool>> r = {
      {"lemma33", {suite_lemma33, false}},   {"lemma64", {suite_lemma64, false}},
      {"kirillov", {suite_kirillov, false}}, {"eta", {suite_eta, false}},
      {"weylint", {suite_weylint, false}},   {"fourier", {suite_fourier, true}},
      {"convolution", {suite_convolution, true}}, {"plancherel", {suite_plancherel, false}},
      {"bks", {suite_bks, false}},           {"heat", {suite_heat, false}},
      {"unitarity", {suite_unitarity, false}},
  };
  return r;
}

}  // namespace

void validate(const RunConfig& c) {
  root_system_from_name(c.group);
  if (!(c.t > 0.0) || !std::isfinite(c.t)) throw Error(ErrorCode::kInvalidArgument, "t must be positive");
  if (c.max_level < 0) throw Error(ErrorCode::kInvalidArgument, "max_level must be >= 0");
  if (c.quad_order < 0 || (c.quad_order > 0 && c.quad_order < 8)) throw Error(ErrorCode::kInvalidArgument, "quad_order must be >= 8");
  if (c.mc_samples < 2) throw Error(ErrorCode::kInvalidArgument, "mc_samples must be >= 2");
  if (!(c.tolerance > 0.0)) throw Error(ErrorCode::kInvalidArgument, "tolerance must be positive");
}

bool Report::all_passed() const { return failed() == 0; }

int Report::failed() const {
  return static_cast<int>(std::count_if(rows.begin(), rows.end(), [](const CheckRow& r) { return !r.pass; }));
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"lemma33", "lemma64", "kirillov", "eta",       "weylint", "fourier",
                                                 "convolution", "plancherel", "bks", "heat", "unitarity", "all"};
  return names;
}

Report run_verification_suite(const RunConfig& config, const std::string& suite) {
  validate(config);
  const RootSystem rs = root_system_from_name(config.group);
  const auto& reg = registry();
  Report report{suite, config, {}};
  auto run_one = [&](const std::string& name, bool skip_unsupported) {
    const auto& [fn, needs_irreps] = reg.at(name);
    Checks ch(config, name);
    if (needs_irreps && !has_su2_irreps(config.group)) {
      if (!skip_unsupported) throw Error(ErrorCode::kUnsupported, "irrep matrices unavailable for " + config.group);
      ch.skipped("suite", "irrep matrices unavailable for " + config.group);
    } else {
      fn(ch, rs);
    }
    for (auto& r : ch.take()) report.rows.push_back(std::move(r));
  };
  if (suite == "all") {
    for (const auto& [name, entry] : reg) run_one(name, true);
  } else if (reg.count(suite)) {
    run_one(suite, false);
  } else {
    throw Error(ErrorCode::kInvalidArgument, "unknown suite '" + suite + "'");
  }
  std::stable_sort(report.rows.begin(), report.rows.end(), [](const CheckRow& a, const CheckRow& b) { return a.id < b.id; });
  return report;
}

namespace {

const char* kind_name(CheckKind k) {
  switch (k) {
    case CheckKind::kExact:
      return "exact";
    case CheckKind::kStatistical:
      return "statistical";
    case CheckKind::kSkipped:
      return "skipped";
  }
  return "?";
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char ch : s) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
  return q + "\"";
}

}  // namespace

std::string report_to_json(const Report& r) {
  using nlohmann::ordered_json;
  ordered_json checks = ordered_json::array();
  for (const auto& row : r.rows) {
    ordered_json j;
    j["id"] = row.id;
    j["kind"] = kind_name(row.kind);
    j["lhs"] = row.lhs;
    j["rhs"] = row.rhs;
    j["abs_err"] = row.abs_err;
    if (row.kind == CheckKind::kStatistical) {
      j["std_error"] = row.std_error;
      j["sigma"] = row.sigma;
    } else {
      j["rel_err"] = row.rel_err;
    }
    j["pass"] = row.pass;
    if (!row.note.empty()) j["note"] = row.note;
    checks.push_back(j);
  }
  ordered_json out;
  out["suite"] = r.suite;
  out["config"] = {{"group", r.config.group},           {"t", r.config.t},
                   {"max_level", r.config.max_level},   {"quad_order", r.config.quad_order},
                   {"mc_samples", r.config.mc_samples}, {"seed", r.config.seed},
                   {"tolerance", r.config.tolerance}};
  out["checks"] = checks;
  out["n_checks"] = r.rows.size();
  out["n_failed"] = r.failed();
  out["passed"] = r.all_passed();
  return out.dump(2) + "\n";
}

std::string report_to_csv(const Report& r) {
  std::string out = "id,kind,lhs,rhs,abs_err,rel_err,std_error,sigma,pass,note\n";
  for (const auto& row : r.rows) {
    const bool stat = row.kind == CheckKind::kStatistical;
    out += row.id + ',' + kind_name(row.kind) + ',' + format_double(row.lhs) + ',' + format_double(row.rhs) + ',' +
           format_double(row.abs_err) + ',' + (stat ? "" : format_double(row.rel_err)) + ',' +
           (stat ? format_double(row.std_error) : "") + ',' + (stat ? format_double(row.sigma) : "") + ',' +
           (row.pass ? "true" : "false") + ',' + csv_field(row.note) + '\n';
  }
  return out;
}

}  // namespace hpw

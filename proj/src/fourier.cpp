// Copyright 2026 The hpw Authors
// SPDX-License-Identifier: Apache-2.0

#include "hpw/fourier.hpp"

#include <cmath>

#include "hpw/hilbert.hpp"

namespace hpw {

namespace {

void require_su2(const FourierSeries& s) {
  if (s.group == "A2") throw Error(ErrorCode::kUnsupported, "irrep matrices unavailable for A2");
  if (s.group != "A1") throw Error(ErrorCode::kUnsupported, "pointwise evaluation needs SU(2) irrep matrices");
}

void require_su2(const GroupModel& model) {
  if (model.kind() != GroupKind::A1) throw Error(ErrorCode::kUnsupported, "irrep matrices unavailable for A2");
}

ComplexEstimate finish(const RunningStats& re, const RunningStats& im) {
  return {Complex(re.mean(), im.mean()), std::hypot(re.std_error(), im.std_error())};
}

}  // namespace

const char* space_name(Space s) {
  switch (s) {
    case Space::kL2K:
      return "L2K";
    case Space::kHL2:
      return "HL2";
    case Space::kHL2Naive:
      return "HL2Naive";
  }
  return "?";
}

Space space_from_name(const std::string& name) {
  if (name == "L2K") return Space::kL2K;
  if (name == "HL2") return Space::kHL2;
  if (name == "HL2Naive") return Space::kHL2Naive;
  throw Error(ErrorCode::kInvalidArgument, "unknown space '" + name + "'");
}

void validate(const FourierSeries& s) {
  const RootSystem rs = s.root_system();
  if (!(s.t > 0.0) || !std::isfinite(s.t)) throw Error(ErrorCode::kInvalidArgument, "t must be positive");
  for (const auto& [dynkin, m] : s.terms) {
    const Weight w = make_weight(rs, dynkin);
    if (!is_dominant(rs, w)) throw Error(ErrorCode::kInvalidArgument, "series label is not dominant");
    const int d = dimension(rs, w);
    if (m.rows() != d || m.cols() != d) {
      throw Error(ErrorCode::kInvalidArgument, "coefficient matrix does not match the representation dimension");
    }
  }
}

FourierSeries character_series(const RootSystem& rs, const Weight& lambda, Space space, double t) {
  const int d = dimension(rs, lambda);
  FourierSeries s;
  s.group = rs.name();
  s.space = space;
  s.t = t;
  s.terms[lambda.dynkin] = CMat::Identity(d, d) / static_cast<double>(d);
  return s;
}

FourierSeries random_series(const RootSystem& rs, int max_level, Space space, double t, Stream& stream) {
  FourierSeries s;
  s.group = rs.name();
  s.space = space;
  s.t = t;
  const double h = 1.0 / std::sqrt(2.0);
  for (const Weight& w : enumerate_dominant(rs, max_level)) {
    const int d = dimension(rs, w);
    CMat m(d, d);
    for (int j = 0; j < d; ++j)
      for (int i = 0; i < d; ++i) m(i, j) = Complex(h * stream.normal(), h * stream.normal());
    s.terms[w.dynkin] = m;
  }
  return s;
}

CoefficientEstimate fourier_coeff(const GroupModel& model, const GroupFn& f, int n, const HaarScheme& scheme) {
  require_su2(model);
  const IrrepMatrices m = make_irrep(n);
  Stream stream(scheme.seed);
  std::vector<RunningStats> re(m.dim * m.dim), im(m.dim * m.dim);
  for (std::uint64_t s = 0; s < scheme.samples; ++s) {
    const Mat2c x = model.haar_sample(stream);
    const CMat v = f(x) * rep_matrix(m, x).adjoint();
    for (int j = 0; j < m.dim; ++j)
      for (int i = 0; i < m.dim; ++i) {
        re[i + j * m.dim].add(v(i, j).real());
        im[i + j * m.dim].add(v(i, j).imag());
      }
  }
  CoefficientEstimate out{CMat(m.dim, m.dim), Mat(m.dim, m.dim)};
  for (int j = 0; j < m.dim; ++j)
    for (int i = 0; i < m.dim; ++i) {
      const ComplexEstimate e = finish(re[i + j * m.dim], im[i + j * m.dim]);
      out.value(i, j) = e.value;
      out.std_error(i, j) = e.std_error;
    }
  return out;
}

Complex synthesize(const FourierSeries& s, const Mat2c& x) {
  require_su2(s);
  Complex sum = 0.0;
  for (const auto& [dynkin, c] : s.terms) {
    const IrrepMatrices m = make_irrep(dynkin[0]);
    sum += static_cast<double>(m.dim) * (c * rep_matrix(m, x)).trace();
  }
  return sum;
}

Complex synthesize(const FourierSeries& s, const Mat2c& x, const Vec& y) {
  require_su2(s);
  if (s.space == Space::kL2K) throw Error(ErrorCode::kDomainMismatch, "L2K series have no holomorphic extension here");
  Complex sum = 0.0;
  for (const auto& [dynkin, c] : s.terms) {
    const IrrepMatrices m = make_irrep(dynkin[0]);
    sum += static_cast<double>(m.dim) * (c * rep_matrix_holo(m, x, y)).trace();
  }
  return sum;
}

FourierSeries convolve(const FourierSeries& a, const FourierSeries& b) {
  if (a.group != b.group) throw Error(ErrorCode::kDomainMismatch, "convolution of series on different groups");
  if (a.space != b.space) throw Error(ErrorCode::kDomainMismatch, "convolution of series in different spaces");
  if (a.space != Space::kL2K && a.t != b.t) throw Error(ErrorCode::kDomainMismatch, "convolution of series with different t");
  FourierSeries out;
  out.group = a.group;
  out.space = a.space;
  out.t = a.t;
  for (const auto& [dynkin, ca] : a.terms) {
    const auto it = b.terms.find(dynkin);
    if (it != b.terms.end()) out.terms[dynkin] = it->second * ca;
  }
  return out;
}

double plancherel_norm(const FourierSeries& s, int naive_order) {
  const RootSystem rs = s.root_system();
  double sum = 0.0;
  for (const auto& [dynkin, c] : s.terms) {
    const Weight w = make_weight(rs, dynkin);
    double weight = dimension(rs, w);
    if (s.space == Space::kHL2) weight *= c_constant(rs, w, s.t);
    if (s.space == Space::kHL2Naive) {
      weight *= naive_constant(rs, w, s.t, naive_order > 0 ? naive_order : default_quad_order(rs)).value;
    }
    sum += weight * c.squaredNorm();
  }
  return sum;
}

Complex symmetric_pairing(const FourierSeries& f, const FourierSeries& h) {
  if (f.group != h.group) throw Error(ErrorCode::kDomainMismatch, "pairing of series on different groups");
  const RootSystem rs = f.root_system();
  Complex sum = 0.0;
  for (const auto& [dynkin, cf] : f.terms) {
    const auto it = h.terms.find(dynkin);
    if (it == h.terms.end()) continue;
    sum += static_cast<double>(dimension(rs, make_weight(rs, dynkin))) * (it->second * cf).trace();
  }
  return sum;
}

ComplexEstimate convolution_oracle(const GroupModel& model, const FourierSeries& a, const FourierSeries& b,
                                   const Mat2c& q, const HaarScheme& scheme) {
  require_su2(model);
  Stream stream(scheme.seed);
  RunningStats re, im;
  for (std::uint64_t s = 0; s < scheme.samples; ++s) {
    const Mat2c x = model.haar_sample(stream);
    const Complex v = synthesize(a, x) * synthesize(b, Mat2c(x.adjoint() * q));
    re.add(v.real());
    im.add(v.imag());
  }
  return finish(re, im);
}

Estimate l2_norm_oracle(const GroupModel& model, const FourierSeries& s, const HaarScheme& scheme) {
  require_su2(model);
  Stream stream(scheme.seed);
  RunningStats stats;
  for (std::uint64_t k = 0; k < scheme.samples; ++k) stats.add(std::norm(synthesize(s, model.haar_sample(stream))));
  return {stats.mean(), stats.std_error()};
}

std::vector<ComplexEstimate> round_trip(const GroupModel& model, const GroupFn& f, int max_level,
                                        const std::vector<Mat2c>& points, const HaarScheme& scheme) {
  require_su2(model);
  FourierSeries series;
  series.group = "A1";
  for (int n = 0; n <= max_level; ++n) series.terms[{n}] = fourier_coeff(model, f, n, scheme).value;

  // The synthesized value is the sample mean of f(x) sum_n (n+1) chi_n(x^{-1} p)
  // over the same draws; its spread gives the standard error.
  std::vector<RunningStats> re(points.size()), im(points.size());
  Stream stream(scheme.seed);
  for (std::uint64_t s = 0; s < scheme.samples; ++s) {
    const Mat2c x = model.haar_sample(stream);
    const Complex fx = f(x);
    for (std::size_t p = 0; p < points.size(); ++p) {
      const Mat2c g = x.adjoint() * points[p];
      Complex kernel = 0.0;
      for (int n = 0; n <= max_level; ++n) kernel += static_cast<double>(n + 1) * su2_character(n, g);
      const Complex v = fx * kernel;
      re[p].add(v.real());
      im[p].add(v.imag());
    }
  }
  std::vector<ComplexEstimate> out(points.size());
  for (std::size_t p = 0; p < points.size(); ++p) {
    out[p] = {synthesize(series, points[p]), std::hypot(re[p].std_error(), im[p].std_error())};
  }
  return out;
}

}  // namespace hpw

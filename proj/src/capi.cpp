// Copyright 2026 The hpw Authors
// SPDX-License-Identifier: Apache-2.0

#include "hpw/hpw.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "hpw/heat.hpp"
#include "hpw/hilbert.hpp"
#include "hpw/io.hpp"
#include "hpw/verify.hpp"

struct hpw_series {
  hpw::FourierSeries value;
};

struct hpw_report {
  hpw::Report value;
};

namespace {

thread_local std::string last_error;

hpw_status fail(hpw_status s, const std::string& msg) {
  last_error = msg;
  return s;
}

template <typename F>
hpw_status guarded(F&& f) {
  try {
    f();
    last_error.clear();
    return HPW_OK;
  } catch (const hpw::Error& e) {
    return fail(static_cast<hpw_status>(static_cast<int>(e.code())), e.what());
  } catch (const std::bad_alloc&) {
    return fail(HPW_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(HPW_ERR_INTERNAL, e.what());
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

hpw::RunConfig to_config(const hpw_config* c) {
  if (!c) throw hpw::Error(hpw::ErrorCode::kInvalidArgument, "null config");
  hpw::RunConfig r;
  r.group = c->group ? c->group : "";
  r.t = c->t;
  r.max_level = c->max_level;
  r.quad_order = c->quad_order;
  r.mc_samples = c->mc_samples;
  r.seed = c->seed;
  r.tolerance = c->tolerance;
  return r;
}

void require(const void* p, const char* what) {
  if (!p) throw hpw::Error(hpw::ErrorCode::kInvalidArgument, std::string("null ") + what);
}

hpw::Weight weight_of(const hpw::RootSystem& rs, const int* dynkin, size_t rank) {
  if (rank > 0) require(dynkin, "dynkin labels");
  hpw::Weight w = hpw::make_weight(rs, std::vector<int>(dynkin, dynkin + rank));
  if (!hpw::is_dominant(rs, w)) throw hpw::Error(hpw::ErrorCode::kInvalidArgument, "weight is not dominant");
  return w;
}

hpw::Transform transform_of(const std::string& which) {
  if (which == "h") return hpw::Transform::kH;
  if (which == "h-inverse") return hpw::Transform::kHInverse;
  if (which == "theta") return hpw::Transform::kTheta;
  if (which == "theta-star") return hpw::Transform::kThetaStar;
  if (which == "scaled-theta") return hpw::Transform::kScaledTheta;
  if (which == "htilde") return hpw::Transform::kHtilde;
  throw hpw::Error(hpw::ErrorCode::kInvalidArgument, "unknown transform '" + which + "'");
}

}  // namespace

extern "C" {

const char* hpw_version(void) { return "1.0.0"; }

const char* hpw_last_error(void) { return last_error.c_str(); }

void hpw_string_free(char* s) { std::free(s); }

void hpw_config_default(hpw_config* config) {
  if (!config) return;
  config->group = "A1";
  config->t = 1.0;
  config->max_level = 4;
  config->quad_order = 0;
  config->mc_samples = 100000;
  config->seed = 42;
  config->tolerance = 1e-8;
}

hpw_status hpw_config_validate(const hpw_config* config) {
  return guarded([&] { hpw::validate(to_config(config)); });
}

hpw_status hpw_run_suite(const hpw_config* config, const char* suite, hpw_report** out) {
  return guarded([&] {
    require(suite, "suite");
    require(out, "output");
    *out = nullptr;
    auto* r = new hpw_report{hpw::run_verification_suite(to_config(config), suite)};
    *out = r;
  });
}

size_t hpw_report_size(const hpw_report* report) { return report ? report->value.rows.size() : 0; }

size_t hpw_report_failed(const hpw_report* report) { return report ? static_cast<size_t>(report->value.failed()) : 0; }

hpw_status hpw_report_render(const hpw_report* report, const char* format, char** out) {
  return guarded([&] {
    require(report, "report");
    require(format, "format");
    require(out, "output");
    const std::string f = format;
    if (f == "json") *out = dup_string(hpw::report_to_json(report->value));
    else if (f == "csv") *out = dup_string(hpw::report_to_csv(report->value));
    else throw hpw::Error(hpw::ErrorCode::kInvalidArgument, "format must be json or csv");
  });
}

void hpw_report_free(hpw_report* report) { delete report; }

hpw_status hpw_constants_table(const hpw_config* config, const char* format, char** out) {
  return guarded([&] {
    require(format, "format");
    require(out, "output");
    const hpw::RunConfig c = to_config(config);
    hpw::validate(c);
    const std::string f = format;
    if (f != "json" && f != "csv") throw hpw::Error(hpw::ErrorCode::kInvalidArgument, "format must be json or csv");
    const hpw::RootSystem rs = hpw::root_system_from_name(c.group);
    const int order = c.quad_order > 0 ? c.quad_order : hpw::default_quad_order(rs);
    const hpw::ConstantsTable table = hpw::constants_table(rs, c.t, c.max_level, order);
    *out = dup_string(f == "json" ? hpw::constants_to_json(table) : hpw::constants_to_csv(table));
  });
}

hpw_status hpw_c_constant(const char* group, const int* dynkin, size_t rank, double t, double* out) {
  return guarded([&] {
    require(group, "group");
    require(out, "output");
    const hpw::RootSystem rs = hpw::root_system_from_name(group);
    *out = hpw::c_constant(rs, weight_of(rs, dynkin, rank), t);
  });
}

hpw_status hpw_d_constant(const char* group, const int* dynkin, size_t rank, double t, double* out) {
  return guarded([&] {
    require(group, "group");
    require(out, "output");
    const hpw::RootSystem rs = hpw::root_system_from_name(group);
    *out = hpw::d_constant(rs, weight_of(rs, dynkin, rank), t);
  });
}

hpw_status hpw_energy(const char* group, const int* dynkin, size_t rank, double* out) {
  return guarded([&] {
    require(group, "group");
    require(out, "output");
    const hpw::RootSystem rs = hpw::root_system_from_name(group);
    *out = hpw::energy_eigenvalue(rs, weight_of(rs, dynkin, rank));
  });
}

hpw_status hpw_series_parse(const char* json, hpw_series** out) {
  return guarded([&] {
    require(json, "json");
    require(out, "output");
    *out = nullptr;
    *out = new hpw_series{hpw::series_from_json(json)};
  });
}

hpw_status hpw_series_load(const char* path, hpw_series** out) {
  return guarded([&] {
    require(path, "path");
    require(out, "output");
    *out = nullptr;
    *out = new hpw_series{hpw::load_series(path)};
  });
}

hpw_status hpw_series_to_json(const hpw_series* series, char** out) {
  return guarded([&] {
    require(series, "series");
    require(out, "output");
    *out = dup_string(hpw::series_to_json(series->value));
  });
}

hpw_status hpw_series_save(const hpw_series* series, const char* path) {
  return guarded([&] {
    require(series, "series");
    require(path, "path");
    hpw::save_series(series->value, path);
  });
}

hpw_status hpw_series_plancherel(const hpw_series* series, double* out) {
  return guarded([&] {
    require(series, "series");
    require(out, "output");
    *out = hpw::plancherel_norm(series->value);
  });
}

hpw_status hpw_series_transform(const hpw_series* series, const char* which, hpw_series** out) {
  return guarded([&] {
    require(series, "series");
    require(which, "transform");
    require(out, "output");
    *out = nullptr;
    *out = new hpw_series{hpw::transform_apply(series->value, transform_of(which))};
  });
}

void hpw_series_free(hpw_series* series) { delete series; }

}  // extern "C"

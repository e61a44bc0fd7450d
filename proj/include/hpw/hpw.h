// Copyright 2026 The hpw Authors
// SPDX-License-Identifier: Apache-2.0

/* C interface to the hpw library. Objects are opaque handles released with
 * their *_free function; strings returned through char** are released with
 * hpw_string_free. Every call returns HPW_OK or an error status, and
 * hpw_last_error() describes the most recent failure on the calling thread. */
#ifndef HPW_HPW_H_
#define HPW_HPW_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define HPW_API __declspec(dllexport)
#else
#define HPW_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
  HPW_OK = 0,
  HPW_ERR_INVALID_ARGUMENT = 1,
  HPW_ERR_UNSUPPORTED = 2,
  HPW_ERR_DOMAIN_MISMATCH = 3,
  HPW_ERR_NUMERICAL = 4,
  HPW_ERR_IO = 5,
  HPW_ERR_INTERNAL = 6
} hpw_status;

typedef struct hpw_series hpw_series;
typedef struct hpw_report hpw_report;

typedef struct {
  const char* group; /* "A1", "A2", "T<n>" */
  double t;
  int max_level;
  int quad_order; /* 0 selects 64 (rank one) or 96 */
  uint64_t mc_samples;
  uint64_t seed;
  double tolerance;
} hpw_config;

HPW_API const char* hpw_version(void);
HPW_API const char* hpw_last_error(void);
HPW_API void hpw_string_free(char* s);

/* group "A1", t 1, max_level 4, quad_order 0, mc_samples 1e5, seed 42, tolerance 1e-8. */
HPW_API void hpw_config_default(hpw_config* config);
HPW_API hpw_status hpw_config_validate(const hpw_config* config);

/* Suites: lemma33 lemma64 kirillov eta weylint fourier convolution plancherel
 * bks heat unitarity all. Suites that need irrep matrices return
 * HPW_ERR_UNSUPPORTED outside SU(2). */
HPW_API hpw_status hpw_run_suite(const hpw_config* config, const char* suite, hpw_report** out);
HPW_API size_t hpw_report_size(const hpw_report* report);
HPW_API size_t hpw_report_failed(const hpw_report* report);
/* format: "json" or "csv". */
HPW_API hpw_status hpw_report_render(const hpw_report* report, const char* format, char** out);
HPW_API void hpw_report_free(hpw_report* report);

/* One row per dominant weight up to config->max_level; format "json" or "csv". */
HPW_API hpw_status hpw_constants_table(const hpw_config* config, const char* format, char** out);

HPW_API hpw_status hpw_c_constant(const char* group, const int* dynkin, size_t rank, double t, double* out);
HPW_API hpw_status hpw_d_constant(const char* group, const int* dynkin, size_t rank, double t, double* out);
HPW_API hpw_status hpw_energy(const char* group, const int* dynkin, size_t rank, double* out);

/* Fourier series in the JSON interchange format. */
HPW_API hpw_status hpw_series_parse(const char* json, hpw_series** out);
HPW_API hpw_status hpw_series_load(const char* path, hpw_series** out);
HPW_API hpw_status hpw_series_to_json(const hpw_series* series, char** out);
HPW_API hpw_status hpw_series_save(const hpw_series* series, const char* path);
/* Squared Plancherel norm in the series' own space. */
HPW_API hpw_status hpw_series_plancherel(const hpw_series* series, double* out);
/* which: h, h-inverse, theta, theta-star, scaled-theta, htilde. */
HPW_API hpw_status hpw_series_transform(const hpw_series* series, const char* which, hpw_series** out);
HPW_API void hpw_series_free(hpw_series* series);

#ifdef __cplusplus
}
#endif

#endif /* HPW_HPW_H_ */

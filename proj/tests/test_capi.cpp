// Copyright 2026 The hpw Authors
// SPDX-License-Identifier: Apache-2.0

#include <cstring>
#include <algorithm>
#include <string>

#include "doctest.h"
#include "hpw/hpw.h"

TEST_CASE("version and defaults") {
  CHECK(std::strlen(hpw_version()) > 0);
  hpw_config c;
  hpw_config_default(&c);
  CHECK(std::string(c.group) == "A1");
  CHECK(c.t == 1.0);
  CHECK(c.max_level == 4);
  CHECK(c.mc_samples == 100000);
  CHECK(c.tolerance == 1e-8);
  CHECK(hpw_config_validate(&c) == HPW_OK);
  c.t = -1.0;
  CHECK(hpw_config_validate(&c) == HPW_ERR_INVALID_ARGUMENT);
  CHECK(std::string(hpw_last_error()).find("t must be positive") != std::string::npos);
  CHECK(hpw_config_validate(nullptr) == HPW_ERR_INVALID_ARGUMENT);
}

TEST_CASE("suites") {
  hpw_config c;
  hpw_config_default(&c);
  c.max_level = 2;
  hpw_report* r = nullptr;
  REQUIRE(hpw_run_suite(&c, "lemma33", &r) == HPW_OK);
  CHECK(hpw_report_size(r) == 3);
  CHECK(hpw_report_failed(r) == 0);
  char* text = nullptr;
  REQUIRE(hpw_report_render(r, "json", &text) == HPW_OK);
  CHECK(std::string(text).find("\"lemma33/C/(0)/t=1\"") != std::string::npos);
  hpw_string_free(text);
  CHECK(hpw_report_render(r, "xml", &text) == HPW_ERR_INVALID_ARGUMENT);
  hpw_report_free(r);

  c.group = "A2";
  r = nullptr;
  CHECK(hpw_run_suite(&c, "fourier", &r) == HPW_ERR_UNSUPPORTED);
  CHECK(r == nullptr);
  CHECK(std::string(hpw_last_error()) == "irrep matrices unavailable for A2");
  CHECK(hpw_run_suite(&c, "bogus", &r) == HPW_ERR_INVALID_ARGUMENT);
}

TEST_CASE("constants") {
  const int zero[] = {0};
  double v = 0.0;
  REQUIRE(hpw_c_constant("A1", zero, 1, 1.0, &v) == HPW_OK);
  CHECK(v == doctest::Approx(9.180620810611472).epsilon(1e-14));
  REQUIRE(hpw_d_constant("A1", zero, 1, 1.0, &v) == HPW_OK);
  CHECK(v == doctest::Approx(20.222899473225628).epsilon(1e-14));
  const int one[] = {1};
  REQUIRE(hpw_energy("A1", one, 1, &v) == HPW_OK);
  CHECK(v == doctest::Approx(1.5));
  CHECK(hpw_c_constant("A1", zero, 2, 1.0, &v) == HPW_ERR_INVALID_ARGUMENT);
  const int neg[] = {-1};
  CHECK(hpw_c_constant("A1", neg, 1, 1.0, &v) == HPW_ERR_INVALID_ARGUMENT);

  hpw_config c;
  hpw_config_default(&c);
  c.max_level = 2;
  char* csv = nullptr;
  REQUIRE(hpw_constants_table(&c, "csv", &csv) == HPW_OK);
  std::string s(csv);
  hpw_string_free(csv);
  CHECK(std::count(s.begin(), s.end(), '\n') == 4);
}

TEST_CASE("series") {
  const char* text = R"({"group":"A1","space":"HL2","t":1.0,"terms":[{"dynkin":[0],"re":[[1]],"im":[[0]]}]})";
  hpw_series* s = nullptr;
  REQUIRE(hpw_series_parse(text, &s) == HPW_OK);
  double norm = 0.0;
  REQUIRE(hpw_series_plancherel(s, &norm) == HPW_OK);
  CHECK(norm == doctest::Approx(9.180620810611472).epsilon(1e-14));
  hpw_series* h = nullptr;
  REQUIRE(hpw_series_transform(s, "h", &h) == HPW_OK);
  REQUIRE(hpw_series_plancherel(h, &norm) == HPW_OK);
  CHECK(norm == doctest::Approx(9.180620810611472).epsilon(1e-12));
  hpw_series* bad = nullptr;
  CHECK(hpw_series_transform(h, "h", &bad) == HPW_ERR_DOMAIN_MISMATCH);
  CHECK(bad == nullptr);
  CHECK(hpw_series_transform(h, "sideways", &bad) == HPW_ERR_INVALID_ARGUMENT);
  char* json = nullptr;
  REQUIRE(hpw_series_to_json(h, &json) == HPW_OK);
  CHECK(std::string(json).find("\"L2K\"") != std::string::npos);
  hpw_string_free(json);
  hpw_series_free(h);
  hpw_series_free(s);
  CHECK(hpw_series_parse("{}", &s) == HPW_ERR_INVALID_ARGUMENT);
  CHECK(hpw_series_load("/nonexistent.json", &s) == HPW_ERR_IO);
  hpw_series_free(nullptr);
  hpw_report_free(nullptr);
}

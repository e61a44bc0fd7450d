// Copyright 2026 The hpw Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hpw/common.hpp"

namespace hpw {

struct RunConfig {
  std::string group = "A1";
  double t = 1.0;
  int max_level = 4;
  int quad_order = 0;  // 0: 64 for rank one, 96 otherwise
  std::uint64_t mc_samples = 100000;
  std::uint64_t seed = 42;
  double tolerance = 1e-8;
};

/// Throws kInvalidArgument on a bad group, non-positive t or tolerance,
/// negative max_level, quad_order in 1..7 or fewer than 2 samples.
void validate(const RunConfig& config);

enum class CheckKind { kExact, kStatistical, kSkipped };

/// Exact checks pass when rel_err <= tolerance; statistical ones when the
/// deviation is within 3 standard errors. Complex quantities report real
/// parts in lhs/rhs and the modulus of the difference in abs_err.
struct CheckRow {
  std::string id;
  CheckKind kind = CheckKind::kExact;
  double lhs = 0.0;
  double rhs = 0.0;
  double abs_err = 0.0;
  double rel_err = 0.0;    // exact checks
  double std_error = 0.0;  // statistical checks
  double sigma = 0.0;      // abs_err / std_error
  bool pass = true;
  std::string note;
};

struct Report {
  std::string suite;
  RunConfig config;
  std::vector<CheckRow> rows;  // sorted by id

  bool all_passed() const;
  int failed() const;
};

const std::vector<std::string>& suite_names();

/// Suites that need irrep matrices throw kUnsupported outside SU(2);
/// "all" reports them as skipped rows instead.
Report run_verification_suite(const RunConfig& config, const std::string& suite);

std::string report_to_json(const Report& r);
std::string report_to_csv(const Report& r);

}  // namespace hpw

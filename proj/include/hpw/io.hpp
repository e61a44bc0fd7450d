// Copyright 2026 The hpw Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

#include "hpw/fourier.hpp"
#include "hpw/hilbert.hpp"

namespace hpw {

/// {"group":"A1","space":"HL2","t":1.0,"terms":[{"dynkin":[1],"re":[[...]],"im":[[...]]}]}
/// with row-major matrices.
std::string series_to_json(const FourierSeries& s);
FourierSeries series_from_json(const std::string& text);

FourierSeries load_series(const std::string& path);
void save_series(const FourierSeries& s, const std::string& path);

struct ConstantsTable {
  std::string group;
  std::vector<ConstantsRow> rows;
};

ConstantsTable constants_table(const RootSystem& rs, double t, int max_level, int order);

/// Columns group,t,dynkin,d,norm2_shift,C,D,C_tilde,C_tilde_err,ratio_check;
/// Dynkin labels are space-separated inside the dynkin field.
std::string constants_to_csv(const ConstantsTable& table);
std::string constants_to_json(const ConstantsTable& table);
ConstantsTable constants_from_json(const std::string& text);

/// %.17g.
std::string format_double(double v);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

}  // namespace hpw

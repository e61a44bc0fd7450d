// Copyright 2026 The hpw Authors
// SPDX-License-Identifier: Apache-2.0

#include "hpw/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace hpw {

using nlohmann::json;

namespace {

Weight weight_from_json(const RootSystem& rs, const json& j) {
  return make_weight(rs, j.get<std::vector<int>>());
}

template <typename T>
T field(const json& j, const char* key) {
  if (!j.contains(key)) throw Error(ErrorCode::kInvalidArgument, std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception&) {
    throw Error(ErrorCode::kInvalidArgument, std::string("malformed field '") + key + "'");
  }
}

}  // namespace

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string series_to_json(const FourierSeries& s) {
  json out;
  out["group"] = s.group;
  out["space"] = space_name(s.space);
  out["t"] = s.t;
  json terms = json::array();
  for (const auto& [dynkin, m] : s.terms) {
    json re = json::array(), im = json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      json rr = json::array(), ri = json::array();
      for (Eigen::Index j = 0; j < m.cols(); ++j) {
        rr.push_back(m(i, j).real());
        ri.push_back(m(i, j).imag());
      }
      re.push_back(rr);
      im.push_back(ri);
    }
    terms.push_back({{"dynkin", dynkin}, {"re", re}, {"im", im}});
  }
  out["terms"] = terms;
  return out.dump(2) + "\n";
}

FourierSeries series_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kInvalidArgument, std::string("series JSON does not parse: ") + e.what());
  }
  FourierSeries s;
  s.group = field<std::string>(j, "group");
  s.space = space_from_name(field<std::string>(j, "space"));
  s.t = j.contains("t") ? field<double>(j, "t") : 1.0;
  const RootSystem rs = s.root_system();
  for (const json& term : field<json>(j, "terms")) {
    const Weight w = weight_from_json(rs, field<json>(term, "dynkin"));
    const auto re = field<std::vector<std::vector<double>>>(term, "re");
    const auto im = field<std::vector<std::vector<double>>>(term, "im");
    const std::size_t d = re.size();
    if (im.size() != d) throw Error(ErrorCode::kInvalidArgument, "re and im have different shapes");
    CMat m(d, d);
    for (std::size_t r = 0; r < d; ++r) {
      if (re[r].size() != d || im[r].size() != d) throw Error(ErrorCode::kInvalidArgument, "coefficient matrix is not square");
      for (std::size_t c = 0; c < d; ++c) m(r, c) = Complex(re[r][c], im[r][c]);
    }
    if (!s.terms.emplace(w.dynkin, m).second) throw Error(ErrorCode::kInvalidArgument, "duplicate series term");
  }
  validate(s);
  return s;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::kIo, "cannot write '" + path + "'");
  out << text;
  if (!out) throw Error(ErrorCode::kIo, "write to '" + path + "' failed");
}

FourierSeries load_series(const std::string& path) { return series_from_json(read_file(path)); }

void save_series(const FourierSeries& s, const std::string& path) { write_file(path, series_to_json(s)); }

ConstantsTable constants_table(const RootSystem& rs, double t, int max_level, int order) {
  ConstantsTable table{rs.name(), {}};
  for (const Weight& w : enumerate_dominant(rs, max_level)) table.rows.push_back(constants_row(rs, w, t, order));
  return table;
}

std::string constants_to_csv(const ConstantsTable& table) {
  std::string out = "group,t,dynkin,d,norm2_shift,C,D,C_tilde,C_tilde_err,ratio_check\n";
  for (const auto& r : table.rows) {
    std::string labels;
    for (std::size_t i = 0; i < r.lambda.dynkin.size(); ++i) {
      if (i) labels += ' ';
      labels += std::to_string(r.lambda.dynkin[i]);
    }
    out += table.group + ',' + format_double(r.t) + ',' + labels + ',' + std::to_string(r.d) + ',' +
           format_double(r.norm2_shift) + ',' + format_double(r.c) + ',' + format_double(r.d_const) + ',' +
           format_double(r.c_tilde) + ',' + format_double(r.c_tilde_err) + ',' + format_double(r.ratio_check) + '\n';
  }
  return out;
}

std::string constants_to_json(const ConstantsTable& table) {
  json rows = json::array();
  for (const auto& r : table.rows) {
    rows.push_back({{"dynkin", r.lambda.dynkin},
                    {"t", r.t},
                    {"d", r.d},
                    {"norm2_shift", r.norm2_shift},
                    {"C", r.c},
                    {"D", r.d_const},
                    {"C_tilde", r.c_tilde},
                    {"C_tilde_err", r.c_tilde_err},
                    {"ratio_check", r.ratio_check}});
  }
  json out{{"group", table.group}, {"rows", rows}};
  return out.dump(2) + "\n";
}

ConstantsTable constants_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kInvalidArgument, std::string("constants JSON does not parse: ") + e.what());
  }
  ConstantsTable table;
  table.group = field<std::string>(j, "group");
  const RootSystem rs = root_system_from_name(table.group);
  for (const json& r : field<json>(j, "rows")) {
    ConstantsRow row;
    row.lambda = weight_from_json(rs, field<json>(r, "dynkin"));
    row.t = field<double>(r, "t");
    row.d = field<int>(r, "d");
    row.norm2_shift = field<double>(r, "norm2_shift");
    row.c = field<double>(r, "C");
    row.d_const = field<double>(r, "D");
    row.c_tilde = field<double>(r, "C_tilde");
    row.c_tilde_err = field<double>(r, "C_tilde_err");
    row.ratio_check = field<double>(r, "ratio_check");
    table.rows.push_back(row);
  }
  return table;
}

}  // namespace hpw

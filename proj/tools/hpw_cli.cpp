// Copyright 2026 The hpw Authors
// SPDX-License-Identifier: Apache-2.0

// Command-line front end. Links only the C interface.
#include <cstdio>
#include <string>

#include "CLI11.hpp"
#include "hpw/hpw.h"

namespace {

constexpr int kExitFailedChecks = 1;
constexpr int kExitUsage = 2;

int report_error(hpw_status s) {
  std::fprintf(stderr, "error: %s\n", hpw_last_error());
  return s == HPW_ERR_NUMERICAL || s == HPW_ERR_INTERNAL ? kExitFailedChecks : kExitUsage;
}

// Writes to `path`, or stdout when empty.
int emit(const char* text, const std::string& path) {
  if (path.empty()) {
    std::fputs(text, stdout);
    return 0;
  }
  std::FILE* f = std::fopen(path.c_str(), "wb");
  if (!f) {
    std::fprintf(stderr, "error: cannot write '%s'\n", path.c_str());
    return kExitUsage;
  }
  const bool ok = std::fputs(text, f) >= 0;
  if (std::fclose(f) != 0 || !ok) {
    std::fprintf(stderr, "error: write to '%s' failed\n", path.c_str());
    return kExitUsage;
  }
  return 0;
}

struct Options {
  std::string group = "A1";
  double t = 1.0;
  int max_level = 4;
  int quad_order = 0;
  std::uint64_t mc_samples = 100000;
  std::uint64_t seed = 42;
  double tolerance = 1e-8;
  std::string format = "json";
  std::string out;

  hpw_config config() const {
    hpw_config c;
    hpw_config_default(&c);
    c.group = group.c_str();
    c.t = t;
    c.max_level = max_level;
    c.quad_order = quad_order;
    c.mc_samples = mc_samples;
    c.seed = seed;
    c.tolerance = tolerance;
    return c;
  }
};

void add_common(CLI::App* cmd, Options& o) {
  cmd->add_option("--group", o.group, "A1, A2 or T<n>")->capture_default_str();
  cmd->add_option("--t", o.t, "heat-time parameter t > 0")->capture_default_str();
  cmd->add_option("--max-level", o.max_level, "largest Dynkin label enumerated")->capture_default_str();
  cmd->add_option("--quad-order", o.quad_order, "chamber quadrature order (0: 64 for A1, 96 for A2)")->capture_default_str();
  cmd->add_option("--format", o.format, "json or csv")->capture_default_str();
  cmd->add_option("--out", o.out, "output file (default: stdout)");
}

int run_verify(const Options& o, const std::string& suite) {
  const hpw_config c = o.config();
  hpw_report* report = nullptr;
  hpw_status s = hpw_run_suite(&c, suite.c_str(), &report);
  if (s != HPW_OK) return report_error(s);
  char* text = nullptr;
  s = hpw_report_render(report, o.format.c_str(), &text);
  if (s != HPW_OK) {
    hpw_report_free(report);
    return report_error(s);
  }
  int rc = emit(text, o.out);
  const size_t failed = hpw_report_failed(report);
  if (rc == 0 && failed > 0) {
    std::fprintf(stderr, "%zu of %zu checks failed\n", failed, hpw_report_size(report));
    rc = kExitFailedChecks;
  }
  hpw_string_free(text);
  hpw_report_free(report);
  return rc;
}

int run_constants(const Options& o) {
  const hpw_config c = o.config();
  char* text = nullptr;
  const hpw_status s = hpw_constants_table(&c, o.format.c_str(), &text);
  if (s != HPW_OK) return report_error(s);
  const int rc = emit(text, o.out);
  hpw_string_free(text);
  return rc;
}

int run_transform(const std::string& which, const std::string& in, const std::string& out) {
  hpw_series* series = nullptr;
  hpw_status s = hpw_series_load(in.c_str(), &series);
  if (s != HPW_OK) return report_error(s);
  hpw_series* result = nullptr;
  s = hpw_series_transform(series, which.c_str(), &result);
  hpw_series_free(series);
  if (s != HPW_OK) return report_error(s);
  char* text = nullptr;
  s = hpw_series_to_json(result, &text);
  hpw_series_free(result);
  if (s != HPW_OK) return report_error(s);
  const int rc = emit(text, out);
  hpw_string_free(text);
  return rc;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Numerical checks for holomorphic Peter-Weyl theory and the BKS pairing"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(hpw_version()));

  Options verify_opts;
  std::string suite = "all";
  CLI::App* verify = app.add_subcommand("verify", "run a verification suite; exit 1 if any check fails");
  verify->add_option("--suite", suite,
                     "lemma33 lemma64 kirillov eta weylint fourier convolution plancherel bks heat unitarity all")
      ->capture_default_str();
  add_common(verify, verify_opts);
  verify->add_option("--mc-samples", verify_opts.mc_samples, "Monte-Carlo samples per estimate")->capture_default_str();
  verify->add_option("--seed", verify_opts.seed, "root seed")->capture_default_str();
  verify->add_option("--tolerance", verify_opts.tolerance, "relative tolerance of deterministic checks")
      ->capture_default_str();

  Options const_opts;
  const_opts.format = "csv";
  CLI::App* constants = app.add_subcommand("constants", "table of C, D and C~ per dominant weight");
  add_common(constants, const_opts);

  std::string which, in_path, out_path;
  CLI::App* transform = app.add_subcommand("transform", "apply H, Theta or Theta* to a Fourier series file");
  transform->add_option("--which", which, "h, h-inverse, theta, theta-star, scaled-theta or htilde")->required();
  transform->add_option("--in", in_path, "input series (JSON)")->required();
  transform->add_option("--out", out_path, "output series (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (*verify) return run_verify(verify_opts, suite);
  if (*constants) return run_constants(const_opts);
  return run_transform(which, in_path, out_path);
}

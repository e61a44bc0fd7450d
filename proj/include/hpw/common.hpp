// Copyright 2026 The hpw Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace hpw {

using Complex = std::complex<double>;
using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;
using CMat = Eigen::MatrixXcd;

/// Failure categories shared by the C++ core and the C API.
enum class ErrorCode {
  kInvalidArgument = 1,
  kUnsupported = 2,
  kDomainMismatch = 3,
  kNumerical = 4,
  kIo = 5,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// A Monte-Carlo or otherwise error-bearing scalar.
struct Estimate {
  double value = 0.0;
  double std_error = 0.0;
};

/// A complex-valued Monte-Carlo estimate; std_error bounds |value - mean|
/// at one standard deviation of the complex modulus.
struct ComplexEstimate {
  Complex value{};
  double std_error = 0.0;
};

}  // namespace hpw

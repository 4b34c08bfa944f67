#pragma once

#include <Eigen/Core>

#include <complex>
#include <stdexcept>
#include <string>

namespace qdeblur {

// All core math runs in 64-bit; images quantize on write only.
using Plane = Eigen::ArrayXXd;    // real m x n plane, (row, col) indexing
using CPlane = Eigen::ArrayXXcd;  // complex spectrum plane, same layout
using Index = Eigen::Index;

// Bad arguments, unreadable inputs, contract violations.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// Failures of the numerics themselves (singular systems, empty kernels).
class NumericalError : public std::runtime_error {
 public:
  explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace qdeblur

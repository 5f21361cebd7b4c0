#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace gnsent {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RVector = Eigen::VectorXd;

/// Numerical cut-offs shared by every module.
///
/// `rank` is relative: a singular value (or Gram eigenvalue) counts as zero
/// when it is at most `rank` times the largest one of the matrix at hand.
struct Tolerance {
  double rank = 1e-10;
  // eigenvalue grouping of a random central element normalized to unit HS norm
  double cluster = 1e-8;
  // residual checks on invariants (state recovery, homomorphism, ...)
  double check = 1e-9;
  // agreement between the GNS spectrum and the Wedderburn block spectrum
  double oracle = 1e-8;
};

/// Base for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad input: dimension mismatch, malformed scenario, unknown preset, ...
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Numerical breakdown: closure did not stabilize, integer checks failed,
/// random draws exhausted, invalid (non-positive) state.
class NumericalError : public Error {
 public:
  using Error::Error;
};

/// The GNS path and the Wedderburn path disagree.
class OracleDisagreement : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

}  // namespace gnsent

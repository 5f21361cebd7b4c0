#pragma once

#include <string_view>
#include <vector>

#include "gnsent/types.hpp"

namespace gnsent {

enum class LogBase { natural, two };

LogBase parse_log_base(std::string_view name);
std::string_view to_string(LogBase base);

/// Eigenvalue multiset of a density matrix: strictly positive weights that
/// sum to one.
class SpectralState {
 public:
  /// Drops entries in (-cut, cut], rejects anything more negative, checks
  /// the sum against 1 within 1e-8. Weights are kept in descending order.
  static SpectralState from_weights(std::vector<double> weights, double cut = 1e-10,
                                    LogBase base = LogBase::natural);

  const std::vector<double>& weights() const { return weights_; }
  LogBase log_base() const { return base_; }
  SpectralState in_base(LogBase base) const;

 private:
  std::vector<double> weights_;
  LogBase base_ = LogBase::natural;
};

/// -sum w log w in the state's log base, with 0 log 0 = 0.
double von_neumann_entropy(const SpectralState& s);

/// Max deviation between two spectra compared as sorted multisets, the
/// shorter one padded with zeros.
double spectral_distance(const SpectralState& a, const SpectralState& b);

}  // namespace gnsent

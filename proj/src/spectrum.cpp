#include "gnsent/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <string>

namespace gnsent {

LogBase parse_log_base(std::string_view name) {
  if (name == "natural" || name == "e" || name == "nats") return LogBase::natural;
  if (name == "two" || name == "2" || name == "bits") return LogBase::two;
  throw ValidationError("unknown log base '" + std::string(name) + "' (use natural or two)");
}

std::string_view to_string(LogBase base) { return base == LogBase::two ? "two" : "natural"; }

SpectralState SpectralState::from_weights(std::vector<double> weights, double cut, LogBase base) {
  SpectralState s;
  s.base_ = base;
  for (double w : weights) {
    if (!std::isfinite(w)) throw NumericalError("spectrum contains a non-finite weight");
    if (w <= -cut) throw NumericalError("spectrum contains negative weight " + std::to_string(w));
    if (w > cut) s.weights_.push_back(w);
  }
  std::sort(s.weights_.begin(), s.weights_.end(), std::greater<>());
  const double total = std::accumulate(s.weights_.begin(), s.weights_.end(), 0.0);
  if (std::abs(total - 1.0) > 1e-8)
    throw NumericalError("spectrum sums to " + std::to_string(total) + ", expected 1");
  return s;
}

SpectralState SpectralState::in_base(LogBase base) const {
  SpectralState s = *this;
  s.base_ = base;
  return s;
}

double von_neumann_entropy(const SpectralState& s) {
  double h = 0.0;
  for (double w : s.weights()) h -= w * std::log(w);
  return s.log_base() == LogBase::two ? h / std::log(2.0) : h;
}

double spectral_distance(const SpectralState& a, const SpectralState& b) {
  std::vector<double> x = a.weights(), y = b.weights();
  const std::size_t n = std::max(x.size(), y.size());
  x.resize(n, 0.0);
  y.resize(n, 0.0);
  double worst = 0.0;
  for (std::size_t i = 0; i < n; ++i) worst = std::max(worst, std::abs(x[i] - y[i]));
  return worst;
}

}  // namespace gnsent

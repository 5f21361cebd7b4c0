#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "gnsent/gns.hpp"
#include "gnsent/spectrum.hpp"
#include "gnsent/star_algebra.hpp"
#include "gnsent/types.hpp"

namespace gnsent {

/// Tr_W(x) = sum_k trace(z_k x) / m_k: every simple block counted once.
Complex block_trace(const WedderburnData& w, const CMatrix& x);

/// The unique Hermitian D in the span with Tr_W(D a) = omega(a) for all a,
/// together with its per-block spectrum (ambient multiplicities divided out).
struct DensityElement {
  struct Block {
    int block_rank = 0;
    int multiplicity = 0;
    std::vector<double> spectrum;  // ascending, n_k entries
  };
  CMatrix matrix;
  std::vector<Block> blocks;

  SpectralState spectrum(const Tolerance& tol = {}) const;
};

DensityElement density_element(const OperatorSpan& algebra, const WedderburnData& w,
                               const AlgebraState& state, const Tolerance& tol = {});

enum class Subsystem { A, B };

/// Reduced density matrix of the kept subsystem; index i * dim_b + j stands
/// for |i> (x) |j>.
CMatrix partial_trace(const CVector& psi, Eigen::Index dim_a, Eigen::Index dim_b, Subsystem keep);
CMatrix partial_trace(const CMatrix& rho, Eigen::Index dim_a, Eigen::Index dim_b, Subsystem keep);

/// Eigenvalue multiset of a density matrix.
SpectralState density_spectrum(const CMatrix& rho, const Tolerance& tol = {});

enum class Method { gns, wedderburn, both };
Method parse_method(std::string_view name);
std::string_view to_string(Method m);

struct RestrictionOptions {
  Method method = Method::both;
  std::uint64_t seed = 0;
  Tolerance tol;
};

struct RestrictionReport {
  Method method = Method::both;
  Eigen::Index algebra_dim = 0;
  Eigen::Index gns_dim = 0;
  Eigen::Index null_dim = 0;
  std::optional<Eigen::Index> commutant_dim;       // GNS path only
  std::optional<IsotypicDecomposition> isotypic;   // GNS path only
  std::optional<SpectralState> gns_spectrum;
  std::optional<DensityElement> density;           // Wedderburn path only
  std::optional<SpectralState> wedderburn_spectrum;
  std::optional<double> spectral_deviation;        // both paths only

  SpectralState spectrum;  // GNS spectrum when available, else Wedderburn
  double entropy_nats = 0;
  double entropy_bits = 0;
  bool pure = false;

  bool methods_agree() const { return spectral_deviation.has_value(); }
};

/// Entropy of the restriction of `state` to the unital span. With
/// Method::both, throws OracleDisagreement when the two spectra differ by
/// more than tol.oracle.
RestrictionReport restriction_entropy(const OperatorSpan& algebra, const AlgebraState& state,
                                      const RestrictionOptions& options = {});

/// Same, reusing a precomputed decomposition of `algebra` (sweeps, grids).
RestrictionReport restriction_entropy(const OperatorSpan& algebra, const WedderburnData& w,
                                      const AlgebraState& state,
                                      const RestrictionOptions& options = {});

}  // namespace gnsent

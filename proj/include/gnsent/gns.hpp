#pragma once

#include <cstdint>
#include <span>
#include <variant>
#include <vector>

#include "gnsent/spectrum.hpp"
#include "gnsent/star_algebra.hpp"
#include "gnsent/types.hpp"

namespace gnsent {

/// A state on the ambient matrix algebra, backed by a unit vector or a
/// density matrix. Restricting it to a span is just evaluating it there.
class AlgebraState {
 public:
  static AlgebraState from_vector(CVector psi, double tol = 1e-8);
  static AlgebraState from_density(CMatrix rho, double tol = 1e-8);

  Eigen::Index dim() const;
  bool is_vector() const { return std::holds_alternative<CVector>(backing_); }
  /// Throws ValidationError for density-backed states.
  const CVector& vector() const;
  CMatrix density() const;

  /// omega(x) = <psi|x|psi> or trace(rho x)
  Complex evaluate(const CMatrix& x) const;

  /// The state transported by a unitary: U psi, or U rho U^dagger.
  AlgebraState conjugated(const CMatrix& u) const;

 private:
  explicit AlgebraState(std::variant<CVector, CMatrix> backing) : backing_(std::move(backing)) {}
  std::variant<CVector, CMatrix> backing_;
};

/// G_ab = omega(x_a^dagger x_b). Throws NumericalError when G is not
/// Hermitian PSD within tolerance (the functional is not a state).
CMatrix gram_matrix(std::span<const CMatrix> elements, const AlgebraState& state,
                    const Tolerance& tol = {});
CMatrix gram_matrix(const OperatorSpan& algebra, const AlgebraState& state,
                    const Tolerance& tol = {});

/// Quotient data of the GNS construction. Coordinates refer to the basis of
/// `algebra`; quotient vectors are orthonormal for <[x]|[y]> = omega(x* y).
struct GnsSpace {
  OperatorSpan algebra;
  AlgebraState state;
  CMatrix gram;
  RVector gram_eigenvalues;
  CMatrix null_basis;      // algebra coordinates spanning the null ideal
  CMatrix quotient_basis;  // algebra coordinates of the quotient representatives
  std::vector<CMatrix> left;  // left multiplication in algebra coordinates
  std::vector<CMatrix> rep;   // pi(basis_a) on the quotient
  CVector cyclic;             // |[1]>

  Eigen::Index dim() const { return quotient_basis.cols(); }
  Eigen::Index null_dim() const { return null_basis.cols(); }
  /// pi of the element with the given algebra coordinates.
  CMatrix represent(const CVector& coords) const;
};

GnsSpace build_gns(const OperatorSpan& algebra, const AlgebraState& state,
                   const Tolerance& tol = {});

/// Worst-case violations of the defining properties of a GNS space.
struct GnsResiduals {
  double left_ideal = 0;      // max omega((x_a n)^* (x_a n)) over null n
  double homomorphism = 0;    // pi(x_a) pi(x_b) vs pi(x_a x_b)
  double adjoint = 0;         // pi(x_a^*) vs pi(x_a)^dagger
  double state_recovery = 0;  // omega(x_a) vs <[1]|pi(x_a)|[1]>
  double max() const;
};
GnsResiduals gns_residuals(const GnsSpace& gns);

struct IsotypicComponent {
  CMatrix projection;   // on the GNS space
  int irrep_dim = 0;    // n_k
  int multiplicity = 0; // m_k
  double weight = 0;    // |P_k [1]|^2
  std::vector<double> refined_weights;  // Schmidt weights, sum to weight
};

struct IsotypicDecomposition {
  std::vector<IsotypicComponent> components;
  Eigen::Index commutant_dim = 0;
};

/// Splits the GNS space into isotypic components using the center of the
/// commutant of pi, and refines each multiplicity space into Schmidt
/// weights through matrix units of the commutant block.
IsotypicDecomposition isotypic_decompose(const GnsSpace& gns, std::uint64_t seed,
                                         const Tolerance& tol = {});

/// Flattened refined weights, entries <= tol.rank dropped.
SpectralState gns_density(const IsotypicDecomposition& iso, const Tolerance& tol = {});

}  // namespace gnsent

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "gnsent/types.hpp"

namespace gnsent {

/// A linear span of complex D x D matrices with a Hilbert-Schmidt
/// orthonormal basis. Spans produced by span_closure, center and commutant
/// are *-closed algebras; the residual accessors report how well that holds
/// numerically.
class OperatorSpan {
 public:
  OperatorSpan() = default;

  /// Takes ownership of an HS-orthonormal basis. Throws ValidationError on
  /// shape mismatch, non-finite entries or a Gram residual above 1e-8.
  static OperatorSpan from_orthonormal(Eigen::Index ambient_dim, std::vector<CMatrix> basis,
                                       const Tolerance& tol = {});

  /// Orthonormalizes `elements` in order (modified Gram-Schmidt, one
  /// re-orthogonalization pass), dropping dependent ones. No closure.
  static OperatorSpan from_spanning(Eigen::Index ambient_dim, std::span<const CMatrix> elements,
                                    const Tolerance& tol = {});

  Eigen::Index ambient_dim() const { return ambient_dim_; }
  Eigen::Index dim() const { return static_cast<Eigen::Index>(basis_.size()); }
  const std::vector<CMatrix>& basis() const { return basis_; }
  const CMatrix& operator[](Eigen::Index a) const { return basis_[static_cast<std::size_t>(a)]; }

  bool has_unit() const { return has_unit_; }
  /// Coordinates of the ambient identity; empty when !has_unit().
  const CVector& unit_coords() const { return unit_coords_; }

  /// c_a = <B_a, x>_HS
  CVector coordinates(const CMatrix& x) const;
  CMatrix element(const CVector& coords) const;
  /// HS norm of the component of x orthogonal to the span.
  double residual(const CMatrix& x) const;

  double gram_residual() const;
  double product_residual() const;
  double adjoint_residual() const;

 private:
  Eigen::Index ambient_dim_ = 0;
  std::vector<CMatrix> basis_;
  bool has_unit_ = false;
  CVector unit_coords_;
};

/// Smallest *-closed span containing the generators (and the identity when
/// include_unit). Basis order: generators in input order, then the unit,
/// then adjoints and products in deterministic enumeration order.
OperatorSpan span_closure(Eigen::Index ambient_dim, std::span<const CMatrix> generators,
                          bool include_unit, const Tolerance& tol = {});

/// {x in A : [x, a] = 0 for all a in A}
OperatorSpan center(const OperatorSpan& algebra, const Tolerance& tol = {});

/// {X : XR = RX for all R}; always contains the identity.
OperatorSpan commutant(Eigen::Index n, std::span<const CMatrix> matrices,
                       const Tolerance& tol = {});

/// Left multiplication in coordinates: L[a](c, b) = <B_c, B_a B_b>.
std::vector<CMatrix> left_multiplication(const OperatorSpan& algebra);

/// Coordinates of adjoints: S(c, a) = <B_c, B_a^dagger>.
CMatrix adjoint_map(const OperatorSpan& algebra);

/// Minimal projections of a commutative *-closed span, from the eigenspaces
/// of a seeded random Hermitian element. Retries with fresh draws while the
/// number of distinct eigenvalues is below dim(center).
std::vector<CMatrix> minimal_projections(const OperatorSpan& commutative, std::uint64_t seed,
                                         const Tolerance& tol = {});

struct WedderburnBlock {
  CMatrix projection;   // minimal central projection z_k
  int block_rank = 0;   // n_k, the block is M_{n_k}
  int multiplicity = 0; // m_k, copies of the irrep in the ambient space
  int block_dim() const { return block_rank * block_rank; }
};

struct WedderburnData {
  std::vector<WedderburnBlock> blocks;
  int total_dim() const;
};

/// Decomposes a unital *-closed span into simple blocks. Blocks are sorted
/// by (n desc, m desc, diagonal of z_k), so the result is seed independent
/// up to numerical noise.
WedderburnData wedderburn(const OperatorSpan& algebra, std::uint64_t seed,
                          const Tolerance& tol = {});

}  // namespace gnsent

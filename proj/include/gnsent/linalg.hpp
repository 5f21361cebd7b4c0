#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "gnsent/types.hpp"

namespace gnsent {

/// Hilbert-Schmidt pairing trace(X^dagger Y).
Complex hs_inner(const CMatrix& x, const CMatrix& y);

double hs_norm(const CMatrix& x);

/// Column-major vectorization.
CVector vec(const CMatrix& x);
CMatrix unvec(const CVector& v, Eigen::Index rows, Eigen::Index cols);

CMatrix kron(const CMatrix& a, const CMatrix& b);

CMatrix commutator(const CMatrix& a, const CMatrix& b);

bool all_finite(const CMatrix& x);

/// Orthonormal basis (columns) of the kernel of `m`.
///
/// A singular value counts as zero when it is at most
/// rel_tol * max(sigma_max, scale). `scale` keeps an identically-zero or
/// round-off-only map from being read as full rank.
CMatrix null_space(const CMatrix& m, double rel_tol, double scale = 1.0);

/// Numerical rank of the column span of `m`, same cut as null_space.
Eigen::Index numerical_rank(const CMatrix& m, double rel_tol, double scale = 1.0);

/// Hermitian eigendecomposition with eigenvalues in ascending order.
struct HermitianEigen {
  RVector values;
  CMatrix vectors;
};
HermitianEigen hermitian_eigen(const CMatrix& h);

/// Groups of consecutive eigenvalue indices (ascending input) whose gaps are
/// at most `gap`.
std::vector<std::vector<Eigen::Index>> cluster_sorted(const RVector& sorted_values,
                                                      double gap);

/// (X + X^dagger) / 2
CMatrix hermitian_part(const CMatrix& x);

using Rng = std::mt19937_64;

/// Vector of i.i.d. standard normals.
RVector random_normals(Rng& rng, Eigen::Index n);

}  // namespace gnsent

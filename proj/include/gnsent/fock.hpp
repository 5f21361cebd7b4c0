#pragma once

#include <vector>

#include <Eigen/Sparse>

#include "gnsent/types.hpp"

namespace gnsent {

using SparseCMatrix = Eigen::SparseMatrix<Complex>;

enum class Statistics { fermionic, bosonic };

/// The k-particle sector of (C^d)^{(x)k}: antisymmetric for fermions,
/// symmetric for bosons. Modes are 0-based. Labels are increasing tuples for
/// fermions and non-decreasing pairs for bosons, in lexicographic order;
/// each maps to a unit-norm (anti)symmetrized tensor, e.g.
/// e_i ^ e_j = (e_i (x) e_j - e_j (x) e_i) / sqrt(2).
class FockContext {
 public:
  /// Fermions: 1 <= k <= d. Bosons: k in {1, 2}. d^k is capped at 65536.
  FockContext(int single_particle_dim, Statistics statistics, int particles);

  int single_particle_dim() const { return d_; }
  Statistics statistics() const { return statistics_; }
  int particles() const { return k_; }
  Eigen::Index dim() const { return static_cast<Eigen::Index>(labels_.size()); }

  const std::vector<std::vector<int>>& labels() const { return labels_; }
  /// Throws ValidationError when the label is not a sector basis label.
  Eigen::Index index_of(const std::vector<int>& label) const;

  /// d^k x dim isometry whose columns are the sector basis vectors.
  const CMatrix& embedding() const { return embedding_; }

 private:
  int d_;
  Statistics statistics_;
  int k_;
  std::vector<std::vector<int>> labels_;
  CMatrix embedding_;
};

/// Fermionic ladder operators on the 2^d occupation-number basis. Basis
/// index bit i is the occupation of mode i and
/// a_i^dagger |n> = (-1)^{sum_{j<i} n_j} |n + e_i> for n_i = 0.
class LadderSet {
 public:
  int modes() const { return static_cast<int>(annihilation_.size()); }
  Eigen::Index fock_dim() const { return Eigen::Index{1} << modes(); }
  const SparseCMatrix& annihilation(int mode) const;
  const SparseCMatrix& creation(int mode) const;
  SparseCMatrix number() const;

 private:
  friend LadderSet car_ladders(int d);
  std::vector<SparseCMatrix> annihilation_;
  std::vector<SparseCMatrix> creation_;
};

/// 1 <= d <= 12.
LadderSet car_ladders(int d);

/// Fock-space image of the fermionic sector basis:
/// column for (i_1 < ... < i_k) is a_{i_1}^dagger ... a_{i_k}^dagger |Omega>.
SparseCMatrix fock_sector_isometry(const FockContext& ctx);

/// Compression F^dagger X F of a Fock-space operator to a fermionic sector.
CMatrix compress_to_sector(const SparseCMatrix& op, const FockContext& ctx);

/// A^(k) = sum_j 1 (x) .. (x) A (x) .. (x) 1 compressed to the sector.
CMatrix coproduct_embed(const CMatrix& a, const FockContext& ctx);

/// U^{(x)k} compressed to the sector; U must be unitary within 1e-8.
CMatrix group_embed(const CMatrix& u, const FockContext& ctx);

/// Columns f^1, f^2, f^3 of the two-fermion sector of C^3 in sector
/// coordinates, f^k = e_i ^ e_j for (i, j, k) a cyclic permutation of (1,2,3).
CMatrix two_fermion_f_basis();

}  // namespace gnsent

#include "gnsent/fock.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <string>

#include "gnsent/linalg.hpp"

namespace gnsent {

namespace {

constexpr Eigen::Index kMaxTensorDim = 65536;

Eigen::Index ipow(Eigen::Index base, int exp) {
  Eigen::Index out = 1;
  for (int i = 0; i < exp; ++i) out *= base;
  return out;
}

// Tensor index of e_{t_1} (x) ... (x) e_{t_k}, first factor most significant.
Eigen::Index tensor_index(const std::vector<int>& factors, int d) {
  Eigen::Index idx = 0;
  for (int f : factors) idx = idx * d + f;
  return idx;
}

int permutation_sign(const std::vector<int>& perm) {
  int inversions = 0;
  for (std::size_t i = 0; i < perm.size(); ++i)
    for (std::size_t j = i + 1; j < perm.size(); ++j) inversions += perm[i] > perm[j];
  return inversions % 2 ? -1 : 1;
}

void enumerate_labels(int d, int k, bool strictly_increasing, std::vector<int>& current,
                      std::vector<std::vector<int>>& out) {
  if (static_cast<int>(current.size()) == k) {
    out.push_back(current);
    return;
  }
  const int start = current.empty() ? 0 : current.back() + (strictly_increasing ? 1 : 0);
  for (int i = start; i < d; ++i) {
    current.push_back(i);
    enumerate_labels(d, k, strictly_increasing, current, out);
    current.pop_back();
  }
}

CVector sector_vector(const std::vector<int>& label, int d, Statistics statistics) {
  const int k = static_cast<int>(label.size());
  CVector v = CVector::Zero(ipow(d, k));
  std::vector<int> perm(static_cast<std::size_t>(k));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<int> factors(static_cast<std::size_t>(k));
  do {
    for (int j = 0; j < k; ++j)
      factors[static_cast<std::size_t>(j)] = label[static_cast<std::size_t>(perm[static_cast<std::size_t>(j)])];
    const double sign = statistics == Statistics::fermionic ? permutation_sign(perm) : 1.0;
    v(tensor_index(factors, d)) += sign;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return v / v.norm();
}

// (x)_j op_j for a list of d x d factors
CMatrix tensor_product(const std::vector<const CMatrix*>& factors) {
  CMatrix out = CMatrix::Ones(1, 1);
  for (const CMatrix* f : factors) out = kron(out, *f);
  return out;
}

void require_single_particle(const CMatrix& a, const FockContext& ctx, const char* what) {
  const int d = ctx.single_particle_dim();
  if (a.rows() != d || a.cols() != d)
    throw ValidationError(std::string(what) + ": expected " + std::to_string(d) + "x" +
                          std::to_string(d) + " one-particle operator");
}

}  // namespace

FockContext::FockContext(int single_particle_dim, Statistics statistics, int particles)
    : d_(single_particle_dim), statistics_(statistics), k_(particles) {
  if (d_ < 1) throw ValidationError("single-particle dimension must be positive");
  if (statistics_ == Statistics::fermionic && (k_ < 1 || k_ > d_))
    throw ValidationError("fermionic sector needs 1 <= k <= d");
  if (statistics_ == Statistics::bosonic && (k_ < 1 || k_ > 2))
    throw ValidationError("bosonic sectors are supported for k = 1, 2 only");
  if (ipow(d_, k_) > kMaxTensorDim) throw ValidationError("tensor power too large");

  std::vector<int> current;
  enumerate_labels(d_, k_, statistics_ == Statistics::fermionic, current, labels_);
  embedding_.resize(ipow(d_, k_), dim());
  for (Eigen::Index c = 0; c < dim(); ++c)
    embedding_.col(c) = sector_vector(labels_[static_cast<std::size_t>(c)], d_, statistics_);
}

Eigen::Index FockContext::index_of(const std::vector<int>& label) const {
  const auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) throw ValidationError("label is not a basis label of this sector");
  return it - labels_.begin();
}

const SparseCMatrix& LadderSet::annihilation(int mode) const {
  if (mode < 0 || mode >= modes()) throw ValidationError("mode index out of range");
  return annihilation_[static_cast<std::size_t>(mode)];
}

const SparseCMatrix& LadderSet::creation(int mode) const {
  if (mode < 0 || mode >= modes()) throw ValidationError("mode index out of range");
  return creation_[static_cast<std::size_t>(mode)];
}

SparseCMatrix LadderSet::number() const {
  SparseCMatrix n(fock_dim(), fock_dim());
  for (int i = 0; i < modes(); ++i) n += creation(i) * annihilation(i);
  return n;
}

LadderSet car_ladders(int d) {
  if (d < 1 || d > 12) throw ValidationError("car_ladders: need 1 <= d <= 12");
  const Eigen::Index dim = Eigen::Index{1} << d;
  LadderSet set;
  for (int i = 0; i < d; ++i) {
    std::vector<Eigen::Triplet<Complex>> entries;
    const auto bit = std::uint64_t{1} << i;
    for (std::uint64_t n = 0; n < static_cast<std::uint64_t>(dim); ++n) {
      if (n & bit) continue;
      const int below = std::popcount(n & (bit - 1));
      entries.emplace_back(static_cast<Eigen::Index>(n | bit), static_cast<Eigen::Index>(n),
                           below % 2 ? -1.0 : 1.0);
    }
    SparseCMatrix up(dim, dim);
    up.setFromTriplets(entries.begin(), entries.end());
    set.creation_.push_back(up);
    set.annihilation_.push_back(SparseCMatrix(up.adjoint()));
  }
  return set;
}

SparseCMatrix fock_sector_isometry(const FockContext& ctx) {
  if (ctx.statistics() != Statistics::fermionic)
    throw ValidationError("fock_sector_isometry: fermionic sectors only");
  if (ctx.single_particle_dim() > 12) throw ValidationError("fock_sector_isometry: d > 12");
  const Eigen::Index fock_dim = Eigen::Index{1} << ctx.single_particle_dim();
  std::vector<Eigen::Triplet<Complex>> entries;
  for (Eigen::Index c = 0; c < ctx.dim(); ++c) {
    Eigen::Index occupation = 0;
    for (int mode : ctx.labels()[static_cast<std::size_t>(c)]) occupation |= Eigen::Index{1} << mode;
    entries.emplace_back(occupation, c, 1.0);
  }
  SparseCMatrix f(fock_dim, ctx.dim());
  f.setFromTriplets(entries.begin(), entries.end());
  return f;
}

CMatrix compress_to_sector(const SparseCMatrix& op, const FockContext& ctx) {
  const SparseCMatrix f = fock_sector_isometry(ctx);
  if (op.rows() != f.rows() || op.cols() != f.rows())
    throw ValidationError("compress_to_sector: operator does not act on the Fock space");
  return CMatrix(SparseCMatrix(f.adjoint()) * op * f);
}

CMatrix coproduct_embed(const CMatrix& a, const FockContext& ctx) {
  require_single_particle(a, ctx, "coproduct_embed");
  const CMatrix id = CMatrix::Identity(a.rows(), a.cols());
  const Eigen::Index big = ctx.embedding().rows();
  CMatrix lifted = CMatrix::Zero(big, big);
  for (int j = 0; j < ctx.particles(); ++j) {
    std::vector<const CMatrix*> factors(static_cast<std::size_t>(ctx.particles()), &id);
    factors[static_cast<std::size_t>(j)] = &a;
    lifted += tensor_product(factors);
  }
  return ctx.embedding().adjoint() * lifted * ctx.embedding();
}

CMatrix group_embed(const CMatrix& u, const FockContext& ctx) {
  require_single_particle(u, ctx, "group_embed");
  if ((u.adjoint() * u - CMatrix::Identity(u.rows(), u.cols())).norm() > 1e-8)
    throw ValidationError("group_embed: matrix is not unitary");
  const std::vector<const CMatrix*> factors(static_cast<std::size_t>(ctx.particles()), &u);
  return ctx.embedding().adjoint() * tensor_product(factors) * ctx.embedding();
}

CMatrix two_fermion_f_basis() {
  // sector order: e1^e2, e1^e3, e2^e3
  CMatrix f = CMatrix::Zero(3, 3);
  f(2, 0) = 1.0;   // f^1 = e2 ^ e3
  f(1, 1) = -1.0;  // f^2 = e3 ^ e1
  f(0, 2) = 1.0;   // f^3 = e1 ^ e2
  return f;
}

}  // namespace gnsent

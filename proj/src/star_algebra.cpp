#include "gnsent/star_algebra.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "gnsent/linalg.hpp"

namespace gnsent {

namespace {

constexpr int kMaxDraws = 32;

void require_square(const CMatrix& m, Eigen::Index d, const char* what) {
  if (m.rows() != d || m.cols() != d)
    throw ValidationError(std::string(what) + ": expected " + std::to_string(d) + "x" +
                          std::to_string(d) + " matrix, got " + std::to_string(m.rows()) + "x" +
                          std::to_string(m.cols()));
  if (!all_finite(m)) throw ValidationError(std::string(what) + ": non-finite entry");
}

// Incremental HS-orthonormal basis, modified Gram-Schmidt with one
// re-orthogonalization pass.
class HsBasisBuilder {
 public:
  explicit HsBasisBuilder(double rel_tol) : rel_tol_(rel_tol) {}

  bool add(const CMatrix& x, double scale) {
    CMatrix r = x;
    for (int pass = 0; pass < 2; ++pass)
      for (const CMatrix& b : basis_) r -= hs_inner(b, r) * b;
    const double nr = r.norm();
    if (nr <= rel_tol_ * std::max(x.norm(), scale)) return false;
    basis_.push_back(r / nr);
    return true;
  }

  std::size_t size() const { return basis_.size(); }
  const CMatrix& operator[](std::size_t i) const { return basis_[i]; }
  std::vector<CMatrix> take() && { return std::move(basis_); }

 private:
  double rel_tol_;
  std::vector<CMatrix> basis_;
};

std::vector<double> real_diagonal(const CMatrix& m) {
  std::vector<double> out(static_cast<std::size_t>(m.rows()));
  for (Eigen::Index i = 0; i < m.rows(); ++i) out[static_cast<std::size_t>(i)] = m(i, i).real();
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// OperatorSpan

OperatorSpan OperatorSpan::from_orthonormal(Eigen::Index ambient_dim, std::vector<CMatrix> basis,
                                            const Tolerance& tol) {
  if (ambient_dim <= 0) throw ValidationError("ambient dimension must be positive");
  for (const CMatrix& b : basis) require_square(b, ambient_dim, "span basis");

  OperatorSpan span;
  span.ambient_dim_ = ambient_dim;
  span.basis_ = std::move(basis);
  if (span.gram_residual() > 1e-8)
    throw ValidationError("span basis is not HS-orthonormal (residual " +
                          std::to_string(span.gram_residual()) + ")");

  const CMatrix id = CMatrix::Identity(ambient_dim, ambient_dim);
  if (span.residual(id) <= tol.check * std::sqrt(static_cast<double>(ambient_dim))) {
    span.has_unit_ = true;
    span.unit_coords_ = span.coordinates(id);
  }
  return span;
}

OperatorSpan OperatorSpan::from_spanning(Eigen::Index ambient_dim,
                                         std::span<const CMatrix> elements, const Tolerance& tol) {
  if (ambient_dim <= 0) throw ValidationError("ambient dimension must be positive");
  HsBasisBuilder builder(tol.rank);
  for (const CMatrix& x : elements) {
    require_square(x, ambient_dim, "span element");
    builder.add(x, 0.0);
  }
  return from_orthonormal(ambient_dim, std::move(builder).take(), tol);
}

CVector OperatorSpan::coordinates(const CMatrix& x) const {
  CVector c(dim());
  for (Eigen::Index a = 0; a < dim(); ++a) c(a) = hs_inner((*this)[a], x);
  return c;
}

CMatrix OperatorSpan::element(const CVector& coords) const {
  if (coords.size() != dim()) throw ValidationError("coordinate vector has wrong length");
  CMatrix x = CMatrix::Zero(ambient_dim_, ambient_dim_);
  for (Eigen::Index a = 0; a < dim(); ++a) x += coords(a) * (*this)[a];
  return x;
}

double OperatorSpan::residual(const CMatrix& x) const {
  return (x - element(coordinates(x))).norm();
}

double OperatorSpan::gram_residual() const {
  double worst = 0.0;
  for (Eigen::Index a = 0; a < dim(); ++a)
    for (Eigen::Index b = 0; b < dim(); ++b) {
      const Complex expected = a == b ? 1.0 : 0.0;
      worst = std::max(worst, std::abs(hs_inner((*this)[a], (*this)[b]) - expected));
    }
  return worst;
}

double OperatorSpan::product_residual() const {
  double worst = 0.0;
  for (const CMatrix& x : basis_)
    for (const CMatrix& y : basis_) worst = std::max(worst, residual(x * y));
  return worst;
}

double OperatorSpan::adjoint_residual() const {
  double worst = 0.0;
  for (const CMatrix& x : basis_) worst = std::max(worst, residual(x.adjoint()));
  return worst;
}

// ---------------------------------------------------------------------------
// closure, center, commutant

OperatorSpan span_closure(Eigen::Index ambient_dim, std::span<const CMatrix> generators,
                          bool include_unit, const Tolerance& tol) {
  if (ambient_dim <= 0) throw ValidationError("ambient dimension must be positive");
  for (const CMatrix& g : generators) require_square(g, ambient_dim, "generator");

  HsBasisBuilder builder(tol.rank);
  for (const CMatrix& g : generators) builder.add(g, 0.0);
  if (include_unit) builder.add(CMatrix::Identity(ambient_dim, ambient_dim), 0.0);

  const std::size_t max_dim = static_cast<std::size_t>(ambient_dim * ambient_dim);
  std::size_t processed = 0;
  for (Eigen::Index round = 0;; ++round) {
    const std::size_t start = processed;
    const std::size_t end = builder.size();
    if (start == end) break;
    if (round > ambient_dim * ambient_dim)
      throw NumericalError("span closure did not stabilize within D^2 rounds");

    for (std::size_t a = start; a < end; ++a) builder.add(builder[a].adjoint(), 1.0);
    for (std::size_t a = 0; a < end; ++a)
      for (std::size_t b = 0; b < end; ++b)
        if (a >= start || b >= start) {
          builder.add(builder[a] * builder[b], 1.0);
          if (builder.size() > max_dim)
            throw NumericalError("span closure exceeded D^2 elements; numerical breakdown");
        }
    processed = end;
  }
  return OperatorSpan::from_orthonormal(ambient_dim, std::move(builder).take(), tol);
}

OperatorSpan center(const OperatorSpan& algebra, const Tolerance& tol) {
  const Eigen::Index n = algebra.dim();
  const Eigen::Index d2 = algebra.ambient_dim() * algebra.ambient_dim();
  CMatrix map(n * d2, n);
  for (Eigen::Index b = 0; b < n; ++b)
    for (Eigen::Index a = 0; a < n; ++a)
      map.block(b * d2, a, d2, 1) = vec(commutator(algebra[a], algebra[b]));

  const CMatrix kernel = null_space(map, tol.rank);
  std::vector<CMatrix> basis;
  basis.reserve(static_cast<std::size_t>(kernel.cols()));
  for (Eigen::Index j = 0; j < kernel.cols(); ++j) basis.push_back(algebra.element(kernel.col(j)));
  return OperatorSpan::from_orthonormal(algebra.ambient_dim(), std::move(basis), tol);
}

namespace {

// True when the span of `matrices` contains their adjoints.
bool adjoint_closed(Eigen::Index n, std::span<const CMatrix> matrices, const Tolerance& tol) {
  const OperatorSpan span = OperatorSpan::from_spanning(n, matrices, tol);
  for (const CMatrix& r : matrices)
    if (span.residual(r.adjoint()) > tol.check * std::max(1.0, r.norm())) return false;
  return true;
}

// Orthonormal basis (vectorized) of the commutant of a fixed generic
// Hermitian element of a *-closed span: matrices that are block diagonal in
// its eigenbasis. This contains the commutant of the whole set.
CMatrix hermitian_commutant_seed(Eigen::Index n, std::span<const CMatrix> matrices,
                                 const Tolerance& tol) {
  Rng rng(0x9e3779b97f4a7c15ULL);
  CMatrix h = CMatrix::Zero(n, n);
  for (const CMatrix& r : matrices) {
    const RVector c = random_normals(rng, 2);
    h += Complex(c(0), c(1)) * r;
  }
  h = hermitian_part(h);
  const double scale = h.norm();
  if (scale == 0) return CMatrix::Identity(n * n, n * n);
  const HermitianEigen e = hermitian_eigen(h / scale);
  const auto clusters = cluster_sorted(e.values, tol.cluster);
  Eigen::Index k = 0;
  for (const auto& c : clusters) k += static_cast<Eigen::Index>(c.size() * c.size());
  CMatrix out(n * n, k);
  Eigen::Index col = 0;
  for (const auto& c : clusters)
    for (Eigen::Index j : c)
      for (Eigen::Index i : c) out.col(col++) = vec(e.vectors.col(i) * e.vectors.col(j).adjoint());
  return out;
}

}  // namespace

OperatorSpan commutant(Eigen::Index n, std::span<const CMatrix> matrices, const Tolerance& tol) {
  if (n <= 0) throw ValidationError("commutant: dimension must be positive");
  for (const CMatrix& r : matrices) require_square(r, n, "commutant input");

  CMatrix kernel = adjoint_closed(n, matrices, tol) ? hermitian_commutant_seed(n, matrices, tol)
                                                     : CMatrix::Identity(n * n, n * n);
  for (const CMatrix& r : matrices) {
    if (kernel.cols() == 0) break;
    // columns vec(X_j R - R X_j) for the current kernel basis X_j
    CMatrix image(n * n, kernel.cols());
    for (Eigen::Index j = 0; j < kernel.cols(); ++j) {
      const CMatrix x = unvec(kernel.col(j), n, n);
      image.col(j) = vec(x * r - r * x);
    }
    kernel = kernel * null_space(image, tol.rank, r.norm());
  }

  // re-orthonormalize the accumulated product of kernels
  Eigen::HouseholderQR<CMatrix> qr(kernel);
  const CMatrix q = qr.householderQ() * CMatrix::Identity(kernel.rows(), kernel.cols());
  std::vector<CMatrix> basis;
  for (Eigen::Index j = 0; j < q.cols(); ++j) basis.push_back(unvec(q.col(j), n, n));
  return OperatorSpan::from_orthonormal(n, std::move(basis), tol);
}

std::vector<CMatrix> left_multiplication(const OperatorSpan& algebra) {
  const Eigen::Index n = algebra.dim();
  std::vector<CMatrix> out(static_cast<std::size_t>(n), CMatrix(n, n));
  for (Eigen::Index a = 0; a < n; ++a)
    for (Eigen::Index b = 0; b < n; ++b)
      out[static_cast<std::size_t>(a)].col(b) = algebra.coordinates(algebra[a] * algebra[b]);
  return out;
}

CMatrix adjoint_map(const OperatorSpan& algebra) {
  CMatrix s(algebra.dim(), algebra.dim());
  for (Eigen::Index a = 0; a < algebra.dim(); ++a)
    s.col(a) = algebra.coordinates(algebra[a].adjoint());
  return s;
}

// ---------------------------------------------------------------------------
// central decomposition

std::vector<CMatrix> minimal_projections(const OperatorSpan& commutative, std::uint64_t seed,
                                         const Tolerance& tol) {
  const Eigen::Index d = commutative.ambient_dim();
  if (commutative.dim() == 0) throw ValidationError("minimal_projections: empty span");

  HsBasisBuilder hermitian(tol.rank);
  for (const CMatrix& c : commutative.basis()) {
    hermitian.add(hermitian_part(c), 1.0);
    hermitian.add(hermitian_part(Complex(0.0, -1.0) * c), 1.0);
  }
  const std::vector<CMatrix> herm = std::move(hermitian).take();

  for (int draw = 0; draw < kMaxDraws; ++draw) {
    std::seed_seq sequence{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                           static_cast<std::uint32_t>(draw)};
    Rng rng(sequence);
    const RVector coeffs = random_normals(rng, static_cast<Eigen::Index>(herm.size()));
    CMatrix h = CMatrix::Zero(d, d);
    for (std::size_t j = 0; j < herm.size(); ++j) h += coeffs(static_cast<Eigen::Index>(j)) * herm[j];
    const double norm = h.norm();
    if (norm == 0.0) continue;
    h /= norm;

    const HermitianEigen eig = hermitian_eigen(h);
    const auto groups = cluster_sorted(eig.values, tol.cluster);
    if (static_cast<Eigen::Index>(groups.size()) != commutative.dim()) continue;

    std::vector<CMatrix> projections;
    for (const auto& group : groups) {
      CMatrix v(d, static_cast<Eigen::Index>(group.size()));
      for (std::size_t j = 0; j < group.size(); ++j)
        v.col(static_cast<Eigen::Index>(j)) = eig.vectors.col(group[j]);
      projections.push_back(v * v.adjoint());
    }
    return projections;
  }
  throw NumericalError("minimal_projections: no random central element with " +
                       std::to_string(commutative.dim()) + " distinct eigenvalues after " +
                       std::to_string(kMaxDraws) + " draws");
}

int WedderburnData::total_dim() const {
  int total = 0;
  for (const auto& b : blocks) total += b.block_dim();
  return total;
}

WedderburnData wedderburn(const OperatorSpan& algebra, std::uint64_t seed, const Tolerance& tol) {
  if (!algebra.has_unit()) throw ValidationError("wedderburn: algebra must contain the identity");

  const Eigen::Index d = algebra.ambient_dim();
  WedderburnData data;
  for (CMatrix& z : minimal_projections(center(algebra, tol), seed, tol)) {
    CMatrix compressed(d * d, algebra.dim());
    for (Eigen::Index a = 0; a < algebra.dim(); ++a) compressed.col(a) = vec(z * algebra[a] * z);
    const auto block_dim = numerical_rank(compressed, tol.rank);
    const auto n = static_cast<int>(std::lround(std::sqrt(static_cast<double>(block_dim))));
    if (n < 1 || static_cast<Eigen::Index>(n) * n != block_dim)
      throw NumericalError("wedderburn: block dimension " + std::to_string(block_dim) +
                           " is not a perfect square");
    const double trace = z.trace().real();
    const auto m = static_cast<int>(std::lround(trace / n));
    if (m < 1 || std::abs(trace - static_cast<double>(n) * m) > 1e-6)
      throw NumericalError("wedderburn: trace(z) = " + std::to_string(trace) +
                           " is not a multiple of block rank " + std::to_string(n));
    data.blocks.push_back({std::move(z), n, m});
  }
  if (data.total_dim() != algebra.dim())
    throw NumericalError("wedderburn: sum of n_k^2 (" + std::to_string(data.total_dim()) +
                         ") differs from algebra dimension " + std::to_string(algebra.dim()));

  std::sort(data.blocks.begin(), data.blocks.end(),
            [](const WedderburnBlock& x, const WedderburnBlock& y) {
              if (x.block_rank != y.block_rank) return x.block_rank > y.block_rank;
              if (x.multiplicity != y.multiplicity) return x.multiplicity > y.multiplicity;
              return real_diagonal(x.projection) > real_diagonal(y.projection);
            });
  return data;
}

}  // namespace gnsent

#include "gnsent/gns.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "gnsent/linalg.hpp"

namespace gnsent {

namespace {

constexpr int kMaxDraws = 32;

Rng seeded(std::uint64_t seed, std::uint32_t stream, std::uint32_t draw) {
  std::seed_seq sequence{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                         stream, draw, 0x6e5u};
  return Rng(sequence);
}

// Orthonormal basis of the range of an orthogonal projection.
CMatrix range_basis(const CMatrix& projection) {
  const HermitianEigen eig = hermitian_eigen(projection);
  const auto rank = (eig.values.array() > 0.5).count();
  return eig.vectors.rightCols(rank);
}

// Schmidt weights of the cyclic vector inside one isotypic component of
// multiplicity m > 1. `block` spans the commutant compressed to the
// component (range coordinates), `xi` is the compressed cyclic vector.
std::vector<double> schmidt_weights(const std::vector<CMatrix>& block, const CVector& xi, int n,
                                    int m, std::uint64_t seed, std::uint32_t stream,
                                    const Tolerance& tol) {
  const Eigen::Index r = xi.size();
  for (int draw = 0; draw < kMaxDraws; ++draw) {
    Rng rng = seeded(seed, stream, static_cast<std::uint32_t>(draw));
    const RVector c = random_normals(rng, 4 * static_cast<Eigen::Index>(block.size()));

    CMatrix h = CMatrix::Zero(r, r);
    CMatrix y = CMatrix::Zero(r, r);
    for (std::size_t j = 0; j < block.size(); ++j) {
      const auto k = static_cast<Eigen::Index>(4 * j);
      h += c(k) * hermitian_part(block[j]) + c(k + 1) * hermitian_part(Complex(0, -1) * block[j]);
      y += Complex(c(k + 2), c(k + 3)) * block[j];
    }
    if (h.norm() == 0.0) continue;
    h /= h.norm();

    const HermitianEigen eig = hermitian_eigen(h);
    const auto groups = cluster_sorted(eig.values, tol.cluster);
    if (static_cast<int>(groups.size()) != m) continue;
    bool uniform = true;
    for (const auto& g : groups) uniform = uniform && static_cast<int>(g.size()) == n;
    if (!uniform) continue;

    // diagonal matrix units E_jj
    std::vector<CMatrix> diag;
    for (const auto& g : groups) {
      CMatrix v(r, n);
      for (int i = 0; i < n; ++i) v.col(i) = eig.vectors.col(g[static_cast<std::size_t>(i)]);
      diag.push_back(v * v.adjoint());
    }

    // E_1j from E_11 y E_jj by polar normalization; W_ij = <E_1i xi, E_1j xi>
    CMatrix moved(r, m);
    bool degenerate = false;
    for (int j = 0; j < m && !degenerate; ++j) {
      const CMatrix x = diag[0] * y * diag[static_cast<std::size_t>(j)];
      const double scale2 = (x * x.adjoint()).trace().real() / n;
      if (std::sqrt(scale2 * n) <= 1e-4 * y.norm()) degenerate = true;
      else moved.col(j) = (x / std::sqrt(scale2)) * xi;
    }
    if (degenerate) continue;

    const HermitianEigen w = hermitian_eigen(moved.adjoint() * moved);
    std::vector<double> out;
    for (Eigen::Index i = w.values.size(); i-- > 0;) out.push_back(std::max(0.0, w.values(i)));
    return out;
  }
  throw NumericalError("isotypic refinement: no usable random commutant element after " +
                       std::to_string(kMaxDraws) + " draws");
}

}  // namespace

// ---------------------------------------------------------------------------
// AlgebraState

AlgebraState AlgebraState::from_vector(CVector psi, double tol) {
  if (psi.size() == 0) throw ValidationError("state vector is empty");
  if (!all_finite(psi)) throw ValidationError("state vector has non-finite entries");
  if (std::abs(psi.norm() - 1.0) > tol)
    throw ValidationError("state vector is not normalized (norm " + std::to_string(psi.norm()) + ")");
  return AlgebraState(std::move(psi));
}

AlgebraState AlgebraState::from_density(CMatrix rho, double tol) {
  if (rho.rows() == 0 || rho.rows() != rho.cols()) throw ValidationError("density matrix must be square");
  if (!all_finite(rho)) throw ValidationError("density matrix has non-finite entries");
  if ((rho - rho.adjoint()).norm() > tol) throw ValidationError("density matrix is not Hermitian");
  if (std::abs(rho.trace() - Complex(1.0)) > tol) throw ValidationError("density matrix trace is not 1");
  if (hermitian_eigen(rho).values.minCoeff() < -tol)
    throw ValidationError("density matrix is not positive semidefinite");
  return AlgebraState(hermitian_part(rho));
}

Eigen::Index AlgebraState::dim() const {
  return std::visit([](const auto& b) { return b.rows(); }, backing_);
}

const CVector& AlgebraState::vector() const {
  if (!is_vector()) throw ValidationError("state is density-backed");
  return std::get<CVector>(backing_);
}

CMatrix AlgebraState::density() const {
  if (is_vector()) {
    const CVector& psi = std::get<CVector>(backing_);
    return psi * psi.adjoint();
  }
  return std::get<CMatrix>(backing_);
}

Complex AlgebraState::evaluate(const CMatrix& x) const {
  if (x.rows() != dim() || x.cols() != dim())
    throw ValidationError("observable dimension does not match the state");
  if (is_vector()) {
    const CVector& psi = std::get<CVector>(backing_);
    return psi.dot(x * psi);
  }
  return (std::get<CMatrix>(backing_) * x).trace();
}

AlgebraState AlgebraState::conjugated(const CMatrix& u) const {
  if (is_vector()) return AlgebraState(CVector(u * std::get<CVector>(backing_)));
  const CMatrix& rho = std::get<CMatrix>(backing_);
  return AlgebraState(CMatrix(u * rho * u.adjoint()));
}

// ---------------------------------------------------------------------------
// Gram matrix and quotient

CMatrix gram_matrix(std::span<const CMatrix> elements, const AlgebraState& state,
                    const Tolerance& tol) {
  const auto n = static_cast<Eigen::Index>(elements.size());
  CMatrix g(n, n);
  for (Eigen::Index a = 0; a < n; ++a)
    for (Eigen::Index b = 0; b < n; ++b)
      g(a, b) = state.evaluate(elements[static_cast<std::size_t>(a)].adjoint() *
                               elements[static_cast<std::size_t>(b)]);
  if (n == 0) return g;

  const double scale = std::max(1.0, g.norm());
  if ((g - g.adjoint()).norm() > tol.check * scale)
    throw NumericalError("Gram matrix is not Hermitian; not a state");
  if (hermitian_eigen(g).values.minCoeff() < -tol.check * scale)
    throw NumericalError("Gram matrix is not positive semidefinite; not a state");
  return hermitian_part(g);
}

CMatrix gram_matrix(const OperatorSpan& algebra, const AlgebraState& state, const Tolerance& tol) {
  return gram_matrix(std::span<const CMatrix>(algebra.basis()), state, tol);
}

CMatrix GnsSpace::represent(const CVector& coords) const {
  CMatrix out = CMatrix::Zero(dim(), dim());
  for (std::size_t a = 0; a < rep.size(); ++a) out += coords(static_cast<Eigen::Index>(a)) * rep[a];
  return out;
}

GnsSpace build_gns(const OperatorSpan& algebra, const AlgebraState& state, const Tolerance& tol) {
  if (!algebra.has_unit()) throw ValidationError("GNS construction needs a unital span");
  if (state.dim() != algebra.ambient_dim())
    throw ValidationError("state dimension " + std::to_string(state.dim()) +
                          " does not match ambient dimension " +
                          std::to_string(algebra.ambient_dim()));
  const double closure = std::max(algebra.product_residual(), algebra.adjoint_residual());
  if (closure > 1e-8)
    throw NumericalError("span is not a *-algebra (closure residual " + std::to_string(closure) + ")");

  GnsSpace g{.algebra = algebra, .state = state};
  g.gram = gram_matrix(algebra, state, tol);
  const HermitianEigen eig = hermitian_eigen(g.gram);
  g.gram_eigenvalues = eig.values;

  const double cut = tol.rank * eig.values.maxCoeff();
  Eigen::Index nulls = 0;
  while (nulls < eig.values.size() && eig.values(nulls) <= cut) ++nulls;
  const Eigen::Index kept = eig.values.size() - nulls;
  g.null_basis = eig.vectors.leftCols(nulls);
  g.quotient_basis = eig.vectors.rightCols(kept);
  for (Eigen::Index i = 0; i < kept; ++i)
    g.quotient_basis.col(i) /= std::sqrt(eig.values(nulls + i));

  g.left = left_multiplication(algebra);
  const CMatrix metric = g.quotient_basis.adjoint() * g.gram;
  for (const CMatrix& l : g.left) g.rep.push_back(metric * l * g.quotient_basis);
  g.cyclic = metric * algebra.unit_coords();
  return g;
}

double GnsResiduals::max() const {
  return std::max({left_ideal, homomorphism, adjoint, state_recovery});
}

GnsResiduals gns_residuals(const GnsSpace& g) {
  GnsResiduals r;
  const Eigen::Index n = g.algebra.dim();
  for (const CMatrix& l : g.left)
    for (Eigen::Index j = 0; j < g.null_dim(); ++j) {
      const CVector x = l * g.null_basis.col(j);
      r.left_ideal = std::max(r.left_ideal, std::abs(x.dot(g.gram * x)));
    }

  for (Eigen::Index a = 0; a < n; ++a)
    for (Eigen::Index b = 0; b < n; ++b) {
      const CMatrix lhs = g.rep[static_cast<std::size_t>(a)] * g.rep[static_cast<std::size_t>(b)];
      const CMatrix rhs = g.represent(g.left[static_cast<std::size_t>(a)].col(b));
      r.homomorphism = std::max(r.homomorphism, (lhs - rhs).norm());
    }

  const CMatrix adj = adjoint_map(g.algebra);
  for (Eigen::Index a = 0; a < n; ++a) {
    const CMatrix& pa = g.rep[static_cast<std::size_t>(a)];
    r.adjoint = std::max(r.adjoint, (g.represent(adj.col(a)) - pa.adjoint()).norm());
    const Complex expected = g.state.evaluate(g.algebra[a]);
    r.state_recovery = std::max(r.state_recovery, std::abs(expected - g.cyclic.dot(pa * g.cyclic)));
  }
  return r;
}

// ---------------------------------------------------------------------------
// isotypic decomposition

IsotypicDecomposition isotypic_decompose(const GnsSpace& gns, std::uint64_t seed,
                                         const Tolerance& tol) {
  IsotypicDecomposition out;
  const Eigen::Index d = gns.dim();
  if (d == 0) throw NumericalError("empty GNS space");

  const OperatorSpan comm = commutant(d, gns.rep, tol);
  out.commutant_dim = comm.dim();

  std::uint32_t stream = 1;
  for (CMatrix& p : minimal_projections(center(comm, tol), seed, tol)) {
    const CMatrix v = range_basis(p);
    const Eigen::Index r = v.cols();

    std::vector<CMatrix> block;
    CMatrix stacked(r * r, comm.dim());
    for (Eigen::Index j = 0; j < comm.dim(); ++j) {
      block.push_back(v.adjoint() * comm[j] * v);
      stacked.col(j) = vec(block.back());
    }
    const auto comm_block = numerical_rank(stacked, tol.rank);
    const auto m = static_cast<int>(std::lround(std::sqrt(static_cast<double>(comm_block))));
    if (m < 1 || static_cast<Eigen::Index>(m) * m != comm_block)
      throw NumericalError("isotypic component: commutant block dimension " +
                           std::to_string(comm_block) + " is not a perfect square");
    if (r % m != 0)
      throw NumericalError("isotypic component: rank " + std::to_string(r) +
                           " not divisible by multiplicity " + std::to_string(m));
    const int n = static_cast<int>(r / m);

    IsotypicComponent c;
    const CVector xi = v.adjoint() * gns.cyclic;
    c.weight = xi.squaredNorm();
    c.irrep_dim = n;
    c.multiplicity = m;
    c.refined_weights = m == 1 ? std::vector<double>{c.weight}
                               : schmidt_weights(block, xi, n, m, seed, stream, tol);
    c.projection = std::move(p);
    out.components.push_back(std::move(c));
    ++stream;
  }

  std::sort(out.components.begin(), out.components.end(),
            [](const IsotypicComponent& x, const IsotypicComponent& y) {
              if (x.irrep_dim != y.irrep_dim) return x.irrep_dim > y.irrep_dim;
              if (x.multiplicity != y.multiplicity) return x.multiplicity > y.multiplicity;
              return x.weight > y.weight;
            });
  return out;
}

SpectralState gns_density(const IsotypicDecomposition& iso, const Tolerance& tol) {
  std::vector<double> weights;
  for (const auto& c : iso.components)
    weights.insert(weights.end(), c.refined_weights.begin(), c.refined_weights.end());
  return SpectralState::from_weights(std::move(weights), tol.rank);
}

}  // namespace gnsent

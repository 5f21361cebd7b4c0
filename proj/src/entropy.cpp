#include "gnsent/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "gnsent/linalg.hpp"

namespace gnsent {

namespace {

CMatrix range_basis(const CMatrix& projection) {
  const HermitianEigen eig = hermitian_eigen(projection);
  return eig.vectors.rightCols((eig.values.array() > 0.5).count());
}

void check_bipartite(Eigen::Index total, Eigen::Index dim_a, Eigen::Index dim_b) {
  if (dim_a <= 0 || dim_b <= 0 || total != dim_a * dim_b)
    throw ValidationError("partial trace: dimension " + std::to_string(total) +
                          " does not factor as " + std::to_string(dim_a) + " x " +
                          std::to_string(dim_b));
}

RestrictionReport run_paths(const OperatorSpan& algebra, const WedderburnData* w,
                            const AlgebraState& state, const RestrictionOptions& opt) {
  const Tolerance& tol = opt.tol;
  RestrictionReport rep;
  rep.method = opt.method;
  rep.algebra_dim = algebra.dim();

  if (opt.method != Method::wedderburn) {
    const GnsSpace gns = build_gns(algebra, state, tol);
    rep.gns_dim = gns.dim();
    rep.null_dim = gns.null_dim();
    IsotypicDecomposition iso = isotypic_decompose(gns, opt.seed, tol);
    rep.commutant_dim = iso.commutant_dim;
    rep.gns_spectrum = gns_density(iso, tol);
    rep.isotypic = std::move(iso);
  } else {
    if (!algebra.has_unit()) throw ValidationError("restriction needs a unital span");
    if (state.dim() != algebra.ambient_dim())
      throw ValidationError("state dimension does not match ambient dimension");
    const RVector g = hermitian_eigen(gram_matrix(algebra, state, tol)).values;
    rep.null_dim = (g.array() <= tol.rank * g.maxCoeff()).count();
    rep.gns_dim = algebra.dim() - rep.null_dim;
  }

  if (opt.method != Method::gns) {
    WedderburnData local;
    if (w == nullptr) {
      local = wedderburn(algebra, opt.seed, tol);
      w = &local;
    }
    DensityElement d = density_element(algebra, *w, state, tol);
    rep.wedderburn_spectrum = d.spectrum(tol);
    rep.density = std::move(d);
  }

  if (opt.method == Method::both) {
    const double dev = spectral_distance(*rep.gns_spectrum, *rep.wedderburn_spectrum);
    if (dev > tol.oracle)
      throw OracleDisagreement("GNS and Wedderburn spectra disagree by " + std::to_string(dev));
    rep.spectral_deviation = dev;
  }

  rep.spectrum = rep.gns_spectrum ? *rep.gns_spectrum : *rep.wedderburn_spectrum;
  rep.entropy_nats = von_neumann_entropy(rep.spectrum);
  rep.entropy_bits = rep.entropy_nats / std::log(2.0);
  rep.pure = rep.entropy_nats < tol.check;
  return rep;
}

}  // namespace

Complex block_trace(const WedderburnData& w, const CMatrix& x) {
  Complex total = 0.0;
  for (const auto& b : w.blocks) total += (b.projection * x).trace() / static_cast<double>(b.multiplicity);
  return total;
}

SpectralState DensityElement::spectrum(const Tolerance& tol) const {
  std::vector<double> all;
  for (const auto& b : blocks) all.insert(all.end(), b.spectrum.begin(), b.spectrum.end());
  return SpectralState::from_weights(std::move(all), tol.rank);
}

DensityElement density_element(const OperatorSpan& algebra, const WedderburnData& w,
                               const AlgebraState& state, const Tolerance& tol) {
  if (state.dim() != algebra.ambient_dim())
    throw ValidationError("state dimension does not match ambient dimension");
  const Eigen::Index n = algebra.dim();

  CMatrix system(n, n);
  CVector rhs(n);
  for (Eigen::Index a = 0; a < n; ++a) {
    rhs(a) = state.evaluate(algebra[a]);
    for (Eigen::Index b = 0; b < n; ++b) system(a, b) = block_trace(w, algebra[b] * algebra[a]);
  }
  Eigen::FullPivLU<CMatrix> lu(system);
  lu.setThreshold(tol.rank);
  if (lu.rank() < n)
    throw NumericalError("density element: block-trace system is singular; inconsistent decomposition");
  const CVector coords = lu.solve(rhs);

  DensityElement out;
  const CMatrix d = algebra.element(coords);
  if ((d - d.adjoint()).norm() > 1e-8 * std::max(1.0, d.norm()))
    throw NumericalError("density element is not Hermitian");
  out.matrix = hermitian_part(d);

  for (const auto& block : w.blocks) {
    const CMatrix v = range_basis(block.projection);
    const RVector ev = hermitian_eigen(v.adjoint() * out.matrix * v).values;
    const int m = block.multiplicity;
    if (ev.size() != static_cast<Eigen::Index>(block.block_rank) * m)
      throw NumericalError("density element: block range does not match n_k * m_k");

    DensityElement::Block b{block.block_rank, m, {}};
    for (Eigen::Index start = 0; start < ev.size(); start += m) {
      const auto chunk = ev.segment(start, m);
      if (chunk.maxCoeff() - chunk.minCoeff() > tol.cluster)
        throw NumericalError("density element: eigenvalue multiplicity is not a multiple of m_k");
      const double value = chunk.mean();
      if (value < -tol.check)
        throw NumericalError("density element has negative eigenvalue " + std::to_string(value) +
                             "; not a state");
      b.spectrum.push_back(std::max(0.0, value));
    }
    out.blocks.push_back(std::move(b));
  }
  return out;
}

CMatrix partial_trace(const CVector& psi, Eigen::Index dim_a, Eigen::Index dim_b, Subsystem keep) {
  check_bipartite(psi.size(), dim_a, dim_b);
  // row-major reshape: amplitude(i, j) = psi(i * dim_b + j)
  const CMatrix amp = Eigen::Map<const CMatrix>(psi.data(), dim_b, dim_a).transpose();
  if (keep == Subsystem::A) return amp * amp.adjoint();
  return amp.transpose() * amp.conjugate();
}

CMatrix partial_trace(const CMatrix& rho, Eigen::Index dim_a, Eigen::Index dim_b, Subsystem keep) {
  if (rho.rows() != rho.cols()) throw ValidationError("partial trace: density matrix must be square");
  check_bipartite(rho.rows(), dim_a, dim_b);
  if (keep == Subsystem::A) {
    CMatrix out = CMatrix::Zero(dim_a, dim_a);
    for (Eigen::Index i = 0; i < dim_a; ++i)
      for (Eigen::Index k = 0; k < dim_a; ++k)
        for (Eigen::Index j = 0; j < dim_b; ++j) out(i, k) += rho(i * dim_b + j, k * dim_b + j);
    return out;
  }
  CMatrix out = CMatrix::Zero(dim_b, dim_b);
  for (Eigen::Index j = 0; j < dim_b; ++j)
    for (Eigen::Index l = 0; l < dim_b; ++l)
      for (Eigen::Index i = 0; i < dim_a; ++i) out(j, l) += rho(i * dim_b + j, i * dim_b + l);
  return out;
}

SpectralState density_spectrum(const CMatrix& rho, const Tolerance& tol) {
  const RVector ev = hermitian_eigen(rho).values;
  return SpectralState::from_weights(std::vector<double>(ev.begin(), ev.end()), tol.rank);
}

Method parse_method(std::string_view name) {
  if (name == "gns") return Method::gns;
  if (name == "wedderburn") return Method::wedderburn;
  if (name == "both") return Method::both;
  throw ValidationError("unknown method '" + std::string(name) + "' (use gns, wedderburn or both)");
}

std::string_view to_string(Method m) {
  switch (m) {
    case Method::gns: return "gns";
    case Method::wedderburn: return "wedderburn";
    case Method::both: return "both";
  }
  return "both";
}

RestrictionReport restriction_entropy(const OperatorSpan& algebra, const AlgebraState& state,
                                      const RestrictionOptions& options) {
  return run_paths(algebra, nullptr, state, options);
}

RestrictionReport restriction_entropy(const OperatorSpan& algebra, const WedderburnData& w,
                                      const AlgebraState& state,
                                      const RestrictionOptions& options) {
  return run_paths(algebra, &w, state, options);
}

}  // namespace gnsent

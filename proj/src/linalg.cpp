#include "gnsent/linalg.hpp"

#include <algorithm>
#include <cmath>

namespace gnsent {

Complex hs_inner(const CMatrix& x, const CMatrix& y) {
  return (x.array().conjugate() * y.array()).sum();
}

double hs_norm(const CMatrix& x) { return x.norm(); }

CVector vec(const CMatrix& x) {
  return Eigen::Map<const CVector>(x.data(), x.size());
}

CMatrix unvec(const CVector& v, Eigen::Index rows, Eigen::Index cols) {
  return Eigen::Map<const CMatrix>(v.data(), rows, cols);
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

CMatrix commutator(const CMatrix& a, const CMatrix& b) { return a * b - b * a; }

bool all_finite(const CMatrix& x) {
  return x.array().real().allFinite() && x.array().imag().allFinite();
}

namespace {

struct Svd {
  RVector sigma;
  CMatrix v;
};

Svd full_v_svd(const CMatrix& m) {
  if (m.rows() == 0) return {RVector::Zero(m.cols()), CMatrix::Identity(m.cols(), m.cols())};
  Eigen::JacobiSVD<CMatrix> svd(m, Eigen::ComputeFullV);
  RVector sigma = RVector::Zero(m.cols());
  sigma.head(svd.singularValues().size()) = svd.singularValues();
  return {sigma, svd.matrixV()};
}

}  // namespace

CMatrix null_space(const CMatrix& m, double rel_tol, double scale) {
  const Eigen::Index n = m.cols();
  if (n == 0) return CMatrix(0, 0);
  Svd s = full_v_svd(m);
  const double cut = rel_tol * std::max(s.sigma.maxCoeff(), scale);
  Eigen::Index rank = 0;
  while (rank < n && s.sigma(rank) > cut) ++rank;
  return s.v.rightCols(n - rank);
}

Eigen::Index numerical_rank(const CMatrix& m, double rel_tol, double scale) {
  if (m.size() == 0) return 0;
  Eigen::JacobiSVD<CMatrix> svd(m);
  const RVector& sigma = svd.singularValues();
  const double cut = rel_tol * std::max(sigma.size() ? sigma.maxCoeff() : 0.0, scale);
  return (sigma.array() > cut).count();
}

HermitianEigen hermitian_eigen(const CMatrix& h) {
  Eigen::SelfAdjointEigenSolver<CMatrix> es(hermitian_part(h));
  if (es.info() != Eigen::Success) throw NumericalError("Hermitian eigensolver did not converge");
  return {es.eigenvalues(), es.eigenvectors()};
}

std::vector<std::vector<Eigen::Index>> cluster_sorted(const RVector& sorted_values,
                                                      double gap) {
  std::vector<std::vector<Eigen::Index>> groups;
  for (Eigen::Index i = 0; i < sorted_values.size(); ++i) {
    if (groups.empty() || sorted_values(i) - sorted_values(i - 1) > gap) groups.emplace_back();
    groups.back().push_back(i);
  }
  return groups;
}

CMatrix hermitian_part(const CMatrix& x) { return (x + x.adjoint()) / 2.0; }

RVector random_normals(Rng& rng, Eigen::Index n) {
  std::normal_distribution<double> normal;
  RVector out(n);
  for (Eigen::Index i = 0; i < n; ++i) out(i) = normal(rng);
  return out;
}

}  // namespace gnsent

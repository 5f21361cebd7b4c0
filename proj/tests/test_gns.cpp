#include <doctest.h>

#include <cmath>
#include <numbers>

#include "gnsent/gns.hpp"
#include "gnsent/presets.hpp"
#include "support/oracles.hpp"

using namespace gnsent;

namespace {

CMatrix pauli(int mu) {
  CMatrix s(2, 2);
  switch (mu) {
    case 0: s << 1, 0, 0, 1; break;
    case 1: s << 0, 1, 1, 0; break;
    case 2: s << 0, Complex(0, -1), Complex(0, 1), 0; break;
    default: s << 1, 0, 0, -1; break;
  }
  return s;
}

}  // namespace

TEST_CASE("state validation") {
  CVector v(2);
  v << 1, 1;
  CHECK_THROWS_AS(AlgebraState::from_vector(v), ValidationError);
  CMatrix rho(2, 2);
  rho << 1.5, 0, 0, -0.5;
  CHECK_THROWS_AS(AlgebraState::from_density(rho), ValidationError);
  rho << 0.5, 0.1, 0.2, 0.5;
  CHECK_THROWS_AS(AlgebraState::from_density(rho), ValidationError);
  rho << 0.5, 0, 0, 0.4;
  CHECK_THROWS_AS(AlgebraState::from_density(rho), ValidationError);
}

TEST_CASE("vector and density backings evaluate alike") {
  Rng rng(3);
  const CVector psi = testing::random_unit_vector(rng, 3);
  const AlgebraState a = AlgebraState::from_vector(psi);
  const AlgebraState b = AlgebraState::from_density(psi * psi.adjoint());
  const CMatrix x = testing::random_unitary(rng, 3);
  CHECK(std::abs(a.evaluate(x) - b.evaluate(x)) < 1e-12);
  CHECK(std::abs(a.evaluate(x) - psi.dot(x * psi)) < 1e-12);
}

TEST_CASE("Gram matrix of the Bell state on local Paulis is the identity") {
  CVector bell = CVector::Zero(4);
  bell(1) = 1 / std::sqrt(2.0);
  bell(2) = -1 / std::sqrt(2.0);
  std::vector<CMatrix> sigmas;
  for (int mu = 0; mu < 4; ++mu) sigmas.push_back(kron(pauli(mu), CMatrix::Identity(2, 2)));
  const CMatrix g = gram_matrix(sigmas, AlgebraState::from_vector(bell));
  CHECK((g - CMatrix::Identity(4, 4)).norm() < 1e-12);
}

TEST_CASE("Gram matrix of the diagonal state on matrix units") {
  const double lambda = 0.3;
  const PresetScenario p = example_generators(Preset::ex1_m2);
  const CMatrix g = gram_matrix(p.algebra, p.states({{"lambda", lambda}}));
  // G(e_ij, e_kl) = delta_ik omega(e_jl)
  for (Eigen::Index a = 0; a < 4; ++a)
    for (Eigen::Index b = 0; b < 4; ++b) {
      const Complex expected = (p.algebra[a].adjoint() * p.algebra[b] *
                                CVector(Eigen::Vector2cd(lambda, 1 - lambda)).asDiagonal())
                                   .trace();
      CHECK(std::abs(g(a, b) - expected) < 1e-12);
    }
}

TEST_CASE("GNS dimensions follow the rank of the state") {
  const PresetScenario p = example_generators(Preset::ex1_m2);
  for (double lambda : {0.0, 1.0}) {
    const GnsSpace g = build_gns(p.algebra, p.states({{"lambda", lambda}}));
    CHECK(g.null_dim() == 2);
    CHECK(g.dim() == 2);
  }
  const GnsSpace inside = build_gns(p.algebra, p.states({{"lambda", 0.4}}));
  CHECK(inside.null_dim() == 0);
  CHECK(inside.dim() == 4);

  const PresetScenario ex4 = example_generators(Preset::ex4_left);
  for (double theta : {0.0, std::numbers::pi / 2}) {
    const GnsSpace g = build_gns(ex4.algebra, ex4.states({{"theta", theta}}));
    CHECK(g.null_dim() == 4);
    CHECK(g.dim() == 2);
  }
}

TEST_CASE("GNS invariants hold on every preset") {
  for (Preset preset : all_presets()) {
    const PresetScenario p = example_generators(preset);
    const GnsSpace g = build_gns(p.algebra, p.states());
    const GnsResiduals r = gns_residuals(g);
    INFO(to_string(preset));
    CHECK(r.left_ideal < 1e-9);
    CHECK(r.homomorphism < 1e-9);
    CHECK(r.adjoint < 1e-9);
    CHECK(r.state_recovery < 1e-9);
    CHECK(std::abs(g.cyclic.norm() - 1) < 1e-9);
  }
}

TEST_CASE("GNS invariants hold on random algebras and states") {
  Rng rng(53);
  for (int trial = 0; trial < 15; ++trial) {
    const auto ra = testing::random_algebra(rng);
    const OperatorSpan a = span_closure(ra.ambient_dim(), ra.generators, true);
    const Eigen::Index rank = 1 + trial % ra.ambient_dim();
    const GnsSpace g = build_gns(a, AlgebraState::from_density(testing::random_density(rng, ra.ambient_dim(), rank)));
    CHECK(gns_residuals(g).max() < 1e-9);
    CHECK(g.dim() + g.null_dim() == a.dim());
  }
}

TEST_CASE("isotypic decomposition of the Bell restriction") {
  const PresetScenario p = example_generators(Preset::ex2_bell);
  const GnsSpace g = build_gns(p.algebra, p.states());
  const IsotypicDecomposition iso = isotypic_decompose(g, 0);
  REQUIRE(iso.components.size() == 1);
  CHECK(iso.components[0].irrep_dim == 2);
  CHECK(iso.components[0].multiplicity == 2);
  CHECK(iso.commutant_dim == 4);
  REQUIRE(iso.components[0].refined_weights.size() == 2);
  CHECK(iso.components[0].refined_weights[0] == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(iso.components[0].refined_weights[1] == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("isotypic weights of the two-level fermion example") {
  const double theta = 0.7;
  const PresetScenario p = example_generators(Preset::ex3_choice2);
  const GnsSpace g = build_gns(p.algebra, p.states({{"theta", theta}}));
  const IsotypicDecomposition iso = isotypic_decompose(g, 0);
  REQUIRE(iso.components.size() == 2);
  CHECK(iso.components[0].irrep_dim == 2);
  CHECK(iso.components[1].irrep_dim == 1);
  CHECK(iso.components[0].weight == doctest::Approx(std::pow(std::cos(theta), 2)));
  CHECK(iso.components[1].weight == doctest::Approx(std::pow(std::sin(theta), 2)));
  CHECK(iso.commutant_dim == 2);
}

TEST_CASE("isotypic weights sum to one and refined weights sum to the weight") {
  Rng rng(59);
  for (int trial = 0; trial < 15; ++trial) {
    const auto ra = testing::random_algebra(rng);
    const OperatorSpan a = span_closure(ra.ambient_dim(), ra.generators, true);
    const GnsSpace g = build_gns(a, AlgebraState::from_vector(testing::random_unit_vector(rng, ra.ambient_dim())));
    const IsotypicDecomposition iso = isotypic_decompose(g, trial);
    double total = 0;
    for (const auto& c : iso.components) {
      double refined = 0;
      for (double w : c.refined_weights) refined += w;
      CHECK(refined == doctest::Approx(c.weight).epsilon(1e-9));
      total += c.weight;
    }
    CHECK(total == doctest::Approx(1.0).epsilon(1e-9));
  }
}

TEST_CASE("GNS needs a unital algebra of matching dimension") {
  const PresetScenario p = example_generators(Preset::ex1_m2);
  CHECK_THROWS_AS(build_gns(p.algebra, AlgebraState::from_vector(CVector::Unit(3, 0))), ValidationError);
}

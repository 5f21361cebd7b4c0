#include <doctest.h>

#include <cmath>
#include <numbers>

#include "gnsent/entropy.hpp"
#include "gnsent/presets.hpp"
#include "gnsent/scenario.hpp"
#include "support/oracles.hpp"

using namespace gnsent;

namespace {

double shannon(std::initializer_list<double> ps) {
  double h = 0;
  for (double p : ps)
    if (p > 0) h -= p * std::log(p);
  return h;
}

}  // namespace

TEST_CASE("spectral states validate their weights") {
  CHECK_THROWS_AS(SpectralState::from_weights({0.5, 0.4}), NumericalError);
  CHECK_THROWS_AS(SpectralState::from_weights({1.1, -0.1}), NumericalError);
  CHECK_THROWS_AS(SpectralState::from_weights({std::nan(""), 1.0}), NumericalError);
  const SpectralState s = SpectralState::from_weights({0.25, 1e-14, 0.75, -1e-14});
  REQUIRE(s.weights().size() == 2);
  CHECK(s.weights()[0] == 0.75);
}

TEST_CASE("von Neumann entropy in both log bases") {
  const SpectralState half = SpectralState::from_weights({0.5, 0.5});
  CHECK(von_neumann_entropy(half) == doctest::Approx(std::log(2.0)).epsilon(1e-14));
  CHECK(von_neumann_entropy(half.in_base(LogBase::two)) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(von_neumann_entropy(SpectralState::from_weights({1.0})) == 0.0);
  CHECK(parse_log_base("bits") == LogBase::two);
  CHECK(parse_log_base("e") == LogBase::natural);
  CHECK_THROWS_AS(parse_log_base("ten"), ValidationError);
}

TEST_CASE("spectral distance pads with zeros") {
  const SpectralState a = SpectralState::from_weights({0.5, 0.5});
  const SpectralState b = SpectralState::from_weights({1.0});
  CHECK(spectral_distance(a, b) == doctest::Approx(0.5));
  CHECK(spectral_distance(a, a) == 0.0);
}

TEST_CASE("partial traces of a maximally entangled pair") {
  CVector bell = CVector::Zero(4);
  bell(0) = bell(3) = 1 / std::sqrt(2.0);
  for (Subsystem keep : {Subsystem::A, Subsystem::B}) {
    const CMatrix r = partial_trace(bell, 2, 2, keep);
    CHECK((r - 0.5 * CMatrix::Identity(2, 2)).norm() < 1e-15);
    CHECK((partial_trace(CMatrix(bell * bell.adjoint()), 2, 2, keep) - r).norm() < 1e-15);
  }
  CHECK(von_neumann_entropy(density_spectrum(partial_trace(bell, 2, 2, Subsystem::A))) ==
        doctest::Approx(std::log(2.0)));
}

TEST_CASE("partial trace ordering: index i * dim_b + j") {
  // |0> (x) |+> with dim_a = 2, dim_b = 3
  CVector psi = CVector::Zero(6);
  psi(0) = psi(1) = 1 / std::sqrt(2.0);
  const CMatrix ra = partial_trace(psi, 2, 3, Subsystem::A);
  CHECK(std::abs(ra(0, 0) - 1.0) < 1e-15);
  const CMatrix rb = partial_trace(psi, 2, 3, Subsystem::B);
  CHECK(std::abs(rb(0, 1) - 0.5) < 1e-15);
  CHECK(std::abs(rb(2, 2)) < 1e-15);
}

TEST_CASE("block trace counts each simple block once") {
  const PresetScenario p = example_generators(Preset::ex4_left);
  const WedderburnData w = wedderburn(p.algebra, 0);
  const Complex t = block_trace(w, CMatrix::Identity(6, 6));
  int expected = 0;
  for (const auto& b : w.blocks) expected += b.block_rank;
  CHECK(std::abs(t - Complex(expected)) < 1e-10);
}

TEST_CASE("density element reproduces the state") {
  Rng rng(61);
  for (int trial = 0; trial < 10; ++trial) {
    const auto ra = testing::random_algebra(rng);
    const OperatorSpan a = span_closure(ra.ambient_dim(), ra.generators, true);
    const WedderburnData w = wedderburn(a, 0);
    const AlgebraState s = AlgebraState::from_density(testing::random_density(rng, ra.ambient_dim(), 2));
    const DensityElement d = density_element(a, w, s);
    CHECK(a.residual(d.matrix) < 1e-9);
    for (const CMatrix& x : a.basis()) CHECK(std::abs(block_trace(w, d.matrix * x) - s.evaluate(x)) < 1e-9);
  }
}

TEST_CASE("restriction of the diagonal state to M_2") {
  const PresetScenario p = example_generators(Preset::ex1_m2);
  for (double lambda : {0.0, 0.2, 0.5, 0.9, 1.0}) {
    const RestrictionReport r = restriction_entropy(p.algebra, p.states({{"lambda", lambda}}));
    CHECK(r.entropy_nats == doctest::Approx(shannon({lambda, 1 - lambda})).epsilon(1e-12));
    CHECK(r.pure == (lambda == 0.0 || lambda == 1.0));
    CHECK(r.methods_agree());
  }
}

TEST_CASE("two-level fermion entropy at sample angles") {
  const PresetScenario p = example_generators(Preset::ex3_choice2);
  for (double theta : {std::numbers::pi / 6, std::numbers::pi / 8}) {
    const double c = std::pow(std::cos(theta), 2);
    const RestrictionReport r = restriction_entropy(p.algebra, p.states({{"theta", theta}}));
    CHECK(r.entropy_nats == doctest::Approx(shannon({c, 1 - c})).epsilon(1e-12));
  }
  const RestrictionReport r6 = restriction_entropy(p.algebra, p.states({{"theta", std::numbers::pi / 6}}));
  CHECK(r6.entropy_nats == doctest::Approx(0.5623351).epsilon(1e-7));
  const RestrictionReport r8 = restriction_entropy(p.algebra, p.states({{"theta", std::numbers::pi / 8}}));
  CHECK(r8.entropy_nats == doctest::Approx(0.4165).epsilon(1e-4));
}

TEST_CASE("Bell restriction has one bit of entropy") {
  const PresetScenario p = example_generators(Preset::ex2_bell);
  const RestrictionReport r = restriction_entropy(p.algebra, p.states());
  CHECK(r.entropy_nats == doctest::Approx(std::log(2.0)).epsilon(1e-12));
  CHECK(r.entropy_bits == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("both methods agree with the block-structure oracle") {
  Rng rng(67);
  for (int trial = 0; trial < 25; ++trial) {
    const auto ra = testing::random_algebra(rng);
    const OperatorSpan a = span_closure(ra.ambient_dim(), ra.generators, true);
    const CMatrix rho = testing::random_density(rng, ra.ambient_dim(), 1 + trial % ra.ambient_dim());
    const RestrictionReport r = restriction_entropy(a, AlgebraState::from_density(rho), {.seed = std::uint64_t(trial)});
    CHECK(r.methods_agree());
    CHECK(testing::list_distance(r.spectrum.weights(), testing::block_structure_spectrum(ra, rho)) < 1e-8);
  }
}

TEST_CASE("single-method reports") {
  const PresetScenario p = example_generators(Preset::ex4_left);
  const AlgebraState s = p.states({{"theta", 0.4}});
  const RestrictionReport g = restriction_entropy(p.algebra, s, {.method = Method::gns});
  const RestrictionReport w = restriction_entropy(p.algebra, s, {.method = Method::wedderburn});
  CHECK(g.entropy_nats == doctest::Approx(w.entropy_nats).epsilon(1e-10));
  CHECK(g.gns_dim == w.gns_dim);
  CHECK(g.null_dim == w.null_dim);
  CHECK(g.commutant_dim.has_value());
  CHECK_FALSE(w.commutant_dim.has_value());
  CHECK_FALSE(w.methods_agree());
  CHECK(parse_method("wedderburn") == Method::wedderburn);
  CHECK_THROWS_AS(parse_method("svd"), ValidationError);
}

TEST_CASE("entropy is invariant under unitary conjugation of algebra and state") {
  Rng rng(71);
  for (int trial = 0; trial < 10; ++trial) {
    const auto ra = testing::random_algebra(rng);
    const Eigen::Index d = ra.ambient_dim();
    const OperatorSpan a = span_closure(d, ra.generators, true);
    const AlgebraState s = AlgebraState::from_vector(testing::random_unit_vector(rng, d));
    const CMatrix u = testing::random_unitary(rng, d);
    std::vector<CMatrix> moved;
    for (const CMatrix& g : ra.generators) moved.push_back(u * g * u.adjoint());
    const OperatorSpan b = span_closure(d, moved, true);
    const double s1 = restriction_entropy(a, s).entropy_nats;
    const double s2 = restriction_entropy(b, s.conjugated(u)).entropy_nats;
    CHECK(std::abs(s1 - s2) < 1e-9);
  }
}

TEST_CASE("purity coincides with an irreducible GNS representation") {
  Rng rng(73);
  for (int trial = 0; trial < 15; ++trial) {
    const auto ra = testing::random_algebra(rng);
    const OperatorSpan a = span_closure(ra.ambient_dim(), ra.generators, true);
    const CVector psi = trial % 2 ? testing::pure_restriction_vector(rng, ra)
                                  : testing::random_unit_vector(rng, ra.ambient_dim());
    const RestrictionReport r = restriction_entropy(a, AlgebraState::from_vector(psi));
    CHECK(r.pure == (*r.commutant_dim == 1));
    if (trial % 2) CHECK(r.pure);
  }
}

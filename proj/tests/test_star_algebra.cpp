#include <doctest.h>

#include <algorithm>

#include "gnsent/fock.hpp"
#include "gnsent/presets.hpp"
#include "gnsent/star_algebra.hpp"
#include "support/oracles.hpp"

using namespace gnsent;

namespace {

CMatrix unit(Eigen::Index d, Eigen::Index i, Eigen::Index j) {
  CMatrix e = CMatrix::Zero(d, d);
  e(i, j) = 1;
  return e;
}

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

std::vector<std::pair<int, int>> block_list(const WedderburnData& w) {
  std::vector<std::pair<int, int>> out;
  for (const auto& b : w.blocks) out.emplace_back(b.block_rank, b.multiplicity);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("span closure dimensions") {
  const std::vector<CMatrix> corner = {unit(3, 0, 0), unit(3, 0, 1)};
  CHECK(span_closure(3, corner, true).dim() == 5);  // M_2 + C

  CHECK(span_closure(3, std::vector<CMatrix>{}, true).dim() == 1);

  const std::vector<CMatrix> pauli_x = {kron(pauli(1), CMatrix::Identity(2, 2))};
  CHECK(span_closure(4, pauli_x, true).dim() == 2);

  const std::vector<CMatrix> m2 = {unit(2, 0, 1)};
  const OperatorSpan a = span_closure(2, m2, true);
  CHECK(a.dim() == 4);
  CHECK(a.has_unit());
  CHECK(a.gram_residual() < 1e-12);
  CHECK(a.product_residual() < 1e-12);
  CHECK(a.adjoint_residual() < 1e-12);
}

TEST_CASE("closure without the unit keeps the corner algebra non-unital") {
  const std::vector<CMatrix> corner = {unit(3, 0, 1)};
  const OperatorSpan a = span_closure(3, corner, false);
  CHECK(a.dim() == 4);
  CHECK_FALSE(a.has_unit());
}

TEST_CASE("closure of random block algebras has dimension sum n^2") {
  Rng rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    const auto ra = testing::random_algebra(rng);
    const OperatorSpan a = span_closure(ra.ambient_dim(), ra.generators, true);
    CHECK(a.dim() == ra.algebra_dim());
    CHECK(a.product_residual() < 1e-9);
  }
}

TEST_CASE("center dimensions against the brute-force oracle") {
  const OperatorSpan m2 = span_closure(2, std::vector<CMatrix>{unit(2, 0, 1)}, true);
  CHECK(center(m2).dim() == 1);

  const OperatorSpan diag = span_closure(2, std::vector<CMatrix>{unit(2, 0, 0)}, true);
  CHECK(center(diag).dim() == 2);

  const OperatorSpan three = span_closure(4, std::vector<CMatrix>{unit(4, 0, 1), unit(4, 2, 2)}, true);
  CHECK(center(three).dim() == 3);  // M_2 + C + C

  Rng rng(23);
  for (int trial = 0; trial < 10; ++trial) {
    const auto ra = testing::random_algebra(rng);
    const OperatorSpan a = span_closure(ra.ambient_dim(), ra.generators, true);
    CHECK(center(a).dim() == testing::brute_center_dim(a));
    CHECK(center(a).dim() == static_cast<Eigen::Index>(ra.blocks.size()));
  }
}

TEST_CASE("commutant dimensions against the brute-force oracle") {
  const OperatorSpan m2 = span_closure(2, std::vector<CMatrix>{unit(2, 0, 1)}, true);
  CHECK(commutant(2, m2.basis()).dim() == 1);

  std::vector<CMatrix> local;
  for (int mu = 0; mu < 4; ++mu) local.push_back(kron(pauli(mu), CMatrix::Identity(2, 2)));
  CHECK(commutant(4, local).dim() == 4);

  const OperatorSpan choice2 = example_generators(Preset::ex3_choice2).algebra;
  CHECK(commutant(3, choice2.basis()).dim() == 2);

  // not *-closed: strictly upper triangular generator
  const std::vector<CMatrix> nilpotent = {unit(2, 0, 1)};
  CHECK(commutant(2, nilpotent).dim() == 2);
  CHECK(testing::brute_commutant_dim(2, nilpotent) == 2);

  Rng rng(29);
  for (int trial = 0; trial < 10; ++trial) {
    const auto ra = testing::random_algebra(rng);
    const OperatorSpan a = span_closure(ra.ambient_dim(), ra.generators, true);
    Eigen::Index expected = 0;
    for (const auto& [n, m] : ra.blocks) expected += m * m;
    CHECK(commutant(ra.ambient_dim(), a.basis()).dim() == expected);
    CHECK(testing::brute_commutant_dim(ra.ambient_dim(), a.basis()) == expected);
  }
}

TEST_CASE("double commutant returns the algebra") {
  Rng rng(31);
  for (int trial = 0; trial < 10; ++trial) {
    const auto ra = testing::random_algebra(rng);
    const OperatorSpan a = span_closure(ra.ambient_dim(), ra.generators, true);
    const OperatorSpan c = commutant(ra.ambient_dim(), a.basis());
    const OperatorSpan cc = commutant(ra.ambient_dim(), c.basis());
    REQUIRE(cc.dim() == a.dim());
    for (const CMatrix& x : a.basis()) CHECK(cc.residual(x) < 1e-9);
  }
}

TEST_CASE("minimal projections are orthogonal idempotents summing to one") {
  Rng rng(37);
  const auto ra = testing::random_algebra(rng);
  const OperatorSpan a = span_closure(ra.ambient_dim(), ra.generators, true);
  const auto ps = minimal_projections(center(a), 5);
  CHECK(ps.size() == ra.blocks.size());
  CMatrix sum = CMatrix::Zero(ra.ambient_dim(), ra.ambient_dim());
  for (std::size_t i = 0; i < ps.size(); ++i) {
    CHECK((ps[i] * ps[i] - ps[i]).norm() < 1e-9);
    CHECK((ps[i].adjoint() - ps[i]).norm() < 1e-9);
    for (std::size_t j = i + 1; j < ps.size(); ++j) CHECK((ps[i] * ps[j]).norm() < 1e-9);
    sum += ps[i];
  }
  CHECK((sum - CMatrix::Identity(ra.ambient_dim(), ra.ambient_dim())).norm() < 1e-9);
}

TEST_CASE("Wedderburn blocks match the construction") {
  Rng rng(41);
  for (int trial = 0; trial < 20; ++trial) {
    const auto ra = testing::random_algebra(rng);
    const OperatorSpan a = span_closure(ra.ambient_dim(), ra.generators, true);
    auto expected = ra.blocks;
    std::sort(expected.begin(), expected.end());
    const WedderburnData w = wedderburn(a, 0);
    CHECK(block_list(w) == expected);
    CHECK(w.total_dim() == a.dim());
  }
}

TEST_CASE("Wedderburn data does not depend on the seed") {
  const OperatorSpan a = example_generators(Preset::ex5_bosons).algebra;
  const WedderburnData w0 = wedderburn(a, 0);
  for (std::uint64_t seed : {1u, 99u, 12345u}) {
    const WedderburnData w = wedderburn(a, seed);
    REQUIRE(w.blocks.size() == w0.blocks.size());
    for (std::size_t k = 0; k < w.blocks.size(); ++k) {
      CHECK(w.blocks[k].block_rank == w0.blocks[k].block_rank);
      CHECK(w.blocks[k].multiplicity == w0.blocks[k].multiplicity);
      CHECK((w.blocks[k].projection - w0.blocks[k].projection).norm() < 1e-8);
    }
  }
}

TEST_CASE("Wedderburn tables of the presets") {
  using Table = std::vector<std::pair<int, int>>;
  CHECK(block_list(wedderburn(example_generators(Preset::ex1_m2).algebra, 0)) == Table{{2, 1}});
  CHECK(block_list(wedderburn(example_generators(Preset::ex2_bell).algebra, 0)) == Table{{2, 2}});
  CHECK(block_list(wedderburn(example_generators(Preset::ex3_choice1).algebra, 0)) == Table{{3, 1}});
  CHECK(block_list(wedderburn(example_generators(Preset::ex3_choice2).algebra, 0)) == Table{{1, 1}, {2, 1}});
  const Table ex4 = block_list(wedderburn(example_generators(Preset::ex4_left).algebra, 0));
  CHECK(std::count(ex4.begin(), ex4.end(), std::pair<int, int>{2, 2}) == 1);
  CHECK(block_list(wedderburn(example_generators(Preset::ex5_bosons).algebra, 0)) ==
        Table{{1, 1}, {2, 1}, {3, 1}});
}

TEST_CASE("Wedderburn needs a unital span") {
  const OperatorSpan a = span_closure(3, std::vector<CMatrix>{unit(3, 0, 1)}, false);
  CHECK_THROWS_AS(wedderburn(a, 0), ValidationError);
}

TEST_CASE("orthonormal span rejects a non-orthonormal basis") {
  CHECK_THROWS_AS(OperatorSpan::from_orthonormal(2, {CMatrix::Identity(2, 2)}), ValidationError);
}

#include "gnsent/presets.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "gnsent/fock.hpp"
#include "gnsent/linalg.hpp"

namespace gnsent {

namespace {

CMatrix matrix_unit(Eigen::Index dim, Eigen::Index i, Eigen::Index j) {
  CMatrix e = CMatrix::Zero(dim, dim);
  e(i, j) = 1.0;
  return e;
}

CMatrix pauli(int mu) {
  CMatrix s = CMatrix::Zero(2, 2);
  switch (mu) {
    case 0: s << 1, 0, 0, 1; break;
    case 1: s << 0, 1, 1, 0; break;
    case 2: s << 0, Complex(0, -1), Complex(0, 1), 0; break;
    default: s << 1, 0, 0, -1; break;
  }
  return s;
}

AlgebraState ex1_state(const ParameterMap& p) {
  const double lambda = p.at("lambda");
  if (lambda < 0.0 || lambda > 1.0) throw ValidationError("lambda must lie in [0, 1]");
  CMatrix rho = CMatrix::Zero(2, 2);
  rho(0, 0) = lambda;
  rho(1, 1) = 1.0 - lambda;
  return AlgebraState::from_density(rho);
}

AlgebraState ex3_state(const ParameterMap& p) {
  // cos(theta) f^1 + sin(theta) f^3 in f-basis coordinates
  const double theta = p.at("theta");
  CVector psi = CVector::Zero(3);
  psi(0) = std::cos(theta);
  psi(2) = std::sin(theta);
  return AlgebraState::from_vector(psi);
}

PresetScenario make_ex1() {
  PresetScenario s{.preset = Preset::ex1_m2};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) s.generators.push_back(matrix_unit(2, i, j));
  s.states = {{"lambda"}, {{"lambda", 0.5}}, ex1_state};
  return s;
}

PresetScenario make_ex2() {
  PresetScenario s{.preset = Preset::ex2_bell};
  for (int mu = 0; mu < 4; ++mu) s.generators.push_back(kron(pauli(mu), pauli(0)));
  s.states = {{}, {}, [](const ParameterMap&) {
                // (|+>|-> - |->|+>) / sqrt 2 with |+> = e_0, |-> = e_1
                CVector psi = CVector::Zero(4);
                psi(1) = 1.0 / std::sqrt(2.0);
                psi(2) = -1.0 / std::sqrt(2.0);
                return AlgebraState::from_vector(psi);
              }};
  return s;
}

PresetScenario make_ex3_choice1() {
  PresetScenario s{.preset = Preset::ex3_choice1};
  const FockContext ctx(3, Statistics::fermionic, 2);
  const CMatrix f = two_fermion_f_basis();
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      s.generators.push_back(f.adjoint() * coproduct_embed(matrix_unit(3, i, j), ctx) * f);
  s.states = {{"theta"}, {{"theta", std::numbers::pi / 5}}, ex3_state};
  return s;
}

PresetScenario make_ex3_choice2() {
  PresetScenario s{.preset = Preset::ex3_choice2};
  // M^{ij} = |f^i><f^j| for i, j in {1, 2}
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) s.generators.push_back(matrix_unit(3, i, j));
  s.states = {{"theta"}, {{"theta", std::numbers::pi / 5}}, ex3_state};
  return s;
}

PresetScenario make_ex4() {
  PresetScenario s{.preset = Preset::ex4_left};
  // modes (a_1, a_2, b_1, b_2) = (0, 1, 2, 3)
  const FockContext ctx(4, Statistics::fermionic, 2);
  const LadderSet ladders = car_ladders(4);
  auto hop = [&](int i, int j) -> SparseCMatrix { return ladders.creation(i) * ladders.annihilation(j); };
  const Complex i_unit(0.0, 1.0);

  const SparseCMatrix t1 = 0.5 * (hop(0, 1) + hop(1, 0));
  const SparseCMatrix t2 = (-0.5 * i_unit) * (hop(0, 1) - hop(1, 0));
  const SparseCMatrix t3 = 0.5 * (hop(0, 0) - hop(1, 1));
  const SparseCMatrix n12 = hop(0, 0) * hop(1, 1);
  const SparseCMatrix na = hop(0, 0) + hop(1, 1);
  for (const SparseCMatrix* op : {&t1, &t2, &t3, &n12, &na})
    s.generators.push_back(compress_to_sector(*op, ctx));

  const Eigen::Index a1b2 = ctx.index_of({0, 3});
  const Eigen::Index a2b1 = ctx.index_of({1, 2});
  s.states = {{"theta"}, {{"theta", std::numbers::pi / 5}}, [a1b2, a2b1](const ParameterMap& p) {
                const double theta = p.at("theta");
                CVector psi = CVector::Zero(6);
                psi(a1b2) = std::cos(theta);
                psi(a2b1) = std::sin(theta);
                return AlgebraState::from_vector(psi);
              }};
  return s;
}

PresetScenario make_ex5() {
  PresetScenario s{.preset = Preset::ex5_bosons};
  const FockContext ctx(3, Statistics::bosonic, 2);
  const std::vector<std::vector<std::vector<int>>> blocks = {
      {{0, 0}, {0, 1}, {1, 1}},  // 3: |1>, |0>, |-1>
      {{0, 2}, {1, 2}},          // 2: |1/2>, |-1/2>
      {{2, 2}},                  // 1: |~0>
  };
  for (const auto& block : blocks)
    for (const auto& u : block)
      for (const auto& v : block)
        s.generators.push_back(matrix_unit(6, ctx.index_of(u), ctx.index_of(v)));

  const Eigen::Index e12 = ctx.index_of({0, 1});
  const Eigen::Index e13 = ctx.index_of({0, 2});
  const Eigen::Index e33 = ctx.index_of({2, 2});
  s.states = {{"theta", "phi"},
              {{"theta", 1.0}, {"phi", 0.7}},
              [e12, e13, e33](const ParameterMap& p) {
                const double theta = p.at("theta");
                const double phi = p.at("phi");
                CVector psi = CVector::Zero(6);
                psi(e12) = std::sin(theta) * std::cos(phi);
                psi(e13) = std::sin(theta) * std::sin(phi);
                psi(e33) = std::cos(theta);
                return AlgebraState::from_vector(psi);
              }};
  return s;
}

}  // namespace

Preset parse_preset(std::string_view name) {
  for (Preset p : all_presets())
    if (to_string(p) == name) return p;
  throw ValidationError("unknown preset '" + std::string(name) + "'");
}

std::string_view to_string(Preset p) {
  switch (p) {
    case Preset::ex1_m2: return "ex1_m2";
    case Preset::ex2_bell: return "ex2_bell";
    case Preset::ex3_choice1: return "ex3_choice1";
    case Preset::ex3_choice2: return "ex3_choice2";
    case Preset::ex4_left: return "ex4_left";
    case Preset::ex5_bosons: return "ex5_bosons";
  }
  return "?";
}

const std::vector<Preset>& all_presets() {
  static const std::vector<Preset> presets = {Preset::ex1_m2,      Preset::ex2_bell,
                                              Preset::ex3_choice1, Preset::ex3_choice2,
                                              Preset::ex4_left,    Preset::ex5_bosons};
  return presets;
}

bool StateFamily::has_parameter(std::string_view name) const {
  return std::find(parameters.begin(), parameters.end(), name) != parameters.end();
}

AlgebraState StateFamily::operator()(const ParameterMap& values) const {
  ParameterMap merged = defaults;
  for (const auto& [name, value] : values) {
    if (!has_parameter(name)) throw ValidationError("unknown state parameter '" + name + "'");
    if (!std::isfinite(value)) throw ValidationError("parameter '" + name + "' is not finite");
    merged[name] = value;
  }
  return build(merged);
}

PresetScenario example_generators(Preset preset, const Tolerance& tol) {
  PresetScenario s = [&] {
    switch (preset) {
      case Preset::ex1_m2: return make_ex1();
      case Preset::ex2_bell: return make_ex2();
      case Preset::ex3_choice1: return make_ex3_choice1();
      case Preset::ex3_choice2: return make_ex3_choice2();
      case Preset::ex4_left: return make_ex4();
      case Preset::ex5_bosons: return make_ex5();
    }
    throw ValidationError("unknown preset");
  }();
  const Eigen::Index dim = s.generators.front().rows();
  s.algebra = span_closure(dim, s.generators, true, tol);
  return s;
}

}  // namespace gnsent

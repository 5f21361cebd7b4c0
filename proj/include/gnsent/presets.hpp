#pragma once

#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "gnsent/gns.hpp"
#include "gnsent/star_algebra.hpp"

namespace gnsent {

/// The worked scenarios shipped with the library.
///   ex1_m2       full M_2(C), state lambda e11 + (1 - lambda) e22
///   ex2_bell     span{sigma_mu (x) 1} on C^2 (x) C^2, singlet Bell vector
///   ex3_choice1  full one-particle algebra on the two-fermion space of C^3
///   ex3_choice2  algebra generated by |f^i><f^j| (i, j in {1, 2}) and 1
///   ex4_left     1, T_1, T_2, T_3, n_12, N_a on two fermions in C^4
///   ex5_bosons   block algebra of 6 = 3 + 2 + 1 on two bosons in C^3
enum class Preset { ex1_m2, ex2_bell, ex3_choice1, ex3_choice2, ex4_left, ex5_bosons };

Preset parse_preset(std::string_view name);
std::string_view to_string(Preset p);
const std::vector<Preset>& all_presets();

using ParameterMap = std::map<std::string, double>;

/// A parameterized family of states; missing parameters take defaults.
struct StateFamily {
  std::vector<std::string> parameters;
  ParameterMap defaults;
  std::function<AlgebraState(const ParameterMap&)> build;

  bool has_parameter(std::string_view name) const;
  /// Throws ValidationError on parameters the family does not know.
  AlgebraState operator()(const ParameterMap& values = {}) const;
};

struct PresetScenario {
  Preset preset;
  std::vector<CMatrix> generators;
  OperatorSpan algebra;  // span_closure(generators, unit)
  StateFamily states;
};

PresetScenario example_generators(Preset preset, const Tolerance& tol = {});

}  // namespace gnsent

#include "gnsent/scenario.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <ostream>
#include <random>
#include <set>
#include <sstream>

#include "gnsent/fock.hpp"
#include "gnsent/linalg.hpp"

namespace gnsent {

using nlohmann::json;

namespace {

void require(bool ok, const std::string& message) {
  if (!ok) throw ValidationError(message);
}

void reject_unknown_keys(const json& obj, const std::set<std::string>& allowed, const char* where) {
  for (const auto& [key, value] : obj.items())
    require(allowed.count(key) > 0, std::string(where) + ": unknown key '" + key + "'");
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

ExampleCheck check_near(std::string name, double actual, double expected, double tol) {
  const bool ok = std::abs(actual - expected) <= tol;
  return {std::move(name), ok,
          "got " + format_double(actual) + ", expected " + format_double(expected) + " (tol " +
              format_double(tol) + ")"};
}

ExampleCheck check_equal(std::string name, long long actual, long long expected) {
  return {std::move(name), actual == expected,
          "got " + std::to_string(actual) + ", expected " + std::to_string(expected)};
}

ExampleCheck check_true(std::string name, bool value, std::string detail = {}) {
  return {std::move(name), value, detail.empty() ? (value ? "true" : "false") : std::move(detail)};
}

std::string block_signature(const IsotypicDecomposition& iso) {
  std::string s;
  for (const auto& c : iso.components) {
    if (!s.empty()) s += " + ";
    s += std::to_string(c.irrep_dim) + "x" + std::to_string(c.multiplicity);
  }
  return s;
}

RestrictionReport run_preset(const PresetScenario& p, const ParameterMap& params,
                             const RestrictionOptions& opt) {
  return restriction_entropy(p.algebra, p.states(params), opt);
}

std::vector<ExampleCheck> example1(const RestrictionOptions& opt) {
  std::vector<ExampleCheck> checks;
  const PresetScenario p = example_generators(Preset::ex1_m2, opt.tol);
  checks.push_back(check_equal("algebra dimension", p.algebra.dim(), 4));
  for (int step = 0; step <= 10; ++step) {
    const double lambda = step / 10.0;
    const std::string tag = "lambda=" + format_double(lambda) + " ";
    const RestrictionReport r = run_preset(p, {{"lambda", lambda}}, opt);
    const bool edge = step == 0 || step == 10;
    checks.push_back(check_near(tag + "entropy", r.entropy_nats, binary_entropy(lambda), 1e-9));
    checks.push_back(check_equal(tag + "null dimension", r.null_dim, edge ? 2 : 0));
    checks.push_back(check_equal(tag + "GNS dimension", r.gns_dim, edge ? 2 : 4));
    checks.push_back(check_true(tag + "purity", r.pure == edge));
  }
  const double lambda = 0.3;
  const CMatrix g = gram_matrix(p.algebra, p.states({{"lambda", lambda}}));
  RVector expected(4);
  expected << lambda, 1 - lambda, lambda, 1 - lambda;
  checks.push_back(check_near("Gram matrix diag(l, 1-l, l, 1-l)",
                              (g - CMatrix(expected.cast<Complex>().asDiagonal())).norm(), 0.0, 1e-12));
  const RestrictionReport r = run_preset(p, {{"lambda", lambda}}, opt);
  const auto& iso = *r.isotypic;
  checks.push_back(check_true("single isotypic component of multiplicity 2",
                              iso.components.size() == 1 && iso.components[0].multiplicity == 2,
                              block_signature(iso)));
  checks.push_back(check_near("refined weight lambda", r.spectrum.weights().back(), lambda, 1e-9));
  return checks;
}

std::vector<ExampleCheck> example2(const RestrictionOptions& opt) {
  std::vector<ExampleCheck> checks;
  const PresetScenario p = example_generators(Preset::ex2_bell, opt.tol);
  const AlgebraState bell = p.states();
  const CMatrix g = gram_matrix(p.generators, bell);
  checks.push_back(check_near("Gram on sigma_mu x 1 is the identity",
                              (g - CMatrix::Identity(4, 4)).norm(), 0.0, 1e-12));
  const RestrictionReport r = restriction_entropy(p.algebra, bell, opt);
  checks.push_back(check_near("entropy log 2", r.entropy_nats, std::log(2.0), 1e-9));
  checks.push_back(check_near("entropy 1 bit", r.entropy_bits, 1.0, 1e-9));
  checks.push_back(check_equal("GNS dimension", r.gns_dim, 4));
  checks.push_back(check_equal("null dimension", r.null_dim, 0));
  const auto& w = r.spectrum.weights();
  checks.push_back(check_true("weights (1/2, 1/2)",
                              w.size() == 2 && std::abs(w[0] - 0.5) < 1e-9 && std::abs(w[1] - 0.5) < 1e-9));
  return checks;
}

std::vector<ExampleCheck> example3(const RestrictionOptions& opt) {
  std::vector<ExampleCheck> checks;
  const PresetScenario c2 = example_generators(Preset::ex3_choice2, opt.tol);
  checks.push_back(check_equal("choice 2 algebra dimension", c2.algebra.dim(), 5));

  const RestrictionReport r0 = run_preset(c2, {{"theta", 0.0}}, opt);
  checks.push_back(check_equal("theta=0 GNS dimension", r0.gns_dim, 2));
  checks.push_back(check_true("theta=0 pure", r0.pure));
  checks.push_back(check_true("theta=0 irreducible", r0.commutant_dim == 1));

  const double theta = std::numbers::pi / 5;
  const RestrictionReport r1 = run_preset(c2, {{"theta", theta}}, opt);
  const double c = std::cos(theta) * std::cos(theta);
  checks.push_back(check_equal("interior GNS dimension", r1.gns_dim, 3));
  checks.push_back(check_true("interior decomposition C^2 + C^1",
                              block_signature(*r1.isotypic) == "2x1 + 1x1", block_signature(*r1.isotypic)));
  checks.push_back(check_near("interior weight cos^2", r1.isotypic->components[0].weight, c, 1e-9));
  checks.push_back(check_near("interior weight sin^2", r1.isotypic->components[1].weight, 1 - c, 1e-9));
  checks.push_back(check_near("interior entropy", r1.entropy_nats, binary_entropy(c), 1e-9));

  const RestrictionReport r2 = run_preset(c2, {{"theta", std::numbers::pi / 2}}, opt);
  checks.push_back(check_equal("theta=pi/2 GNS dimension", r2.gns_dim, 1));
  checks.push_back(check_true("theta=pi/2 pure", r2.pure));

  const PresetScenario c1 = example_generators(Preset::ex3_choice1, opt.tol);
  checks.push_back(check_equal("choice 1 algebra dimension", c1.algebra.dim(), 9));
  Rng rng(opt.seed + 3);
  const RVector g = random_normals(rng, 6);
  CVector psi(3);
  for (int i = 0; i < 3; ++i) psi(i) = Complex(g(2 * i), g(2 * i + 1));
  psi.normalize();
  const RestrictionReport rc = restriction_entropy(c1.algebra, AlgebraState::from_vector(psi), opt);
  checks.push_back(check_near("choice 1 restriction entropy", rc.entropy_nats, 0.0, 1e-9));

  const FockContext ctx(3, Statistics::fermionic, 2);
  const CVector tensor = ctx.embedding() * (two_fermion_f_basis() * psi);
  const double pt = von_neumann_entropy(density_spectrum(partial_trace(tensor, 3, 3, Subsystem::A)));
  checks.push_back(check_near("choice 1 partial-trace entropy", pt, std::log(2.0), 1e-9));
  return checks;
}

std::vector<ExampleCheck> example4(const RestrictionOptions& opt) {
  std::vector<ExampleCheck> checks;
  const PresetScenario p = example_generators(Preset::ex4_left, opt.tol);
  checks.push_back(check_equal("algebra dimension", p.algebra.dim(), 6));
  for (double theta : {0.0, std::numbers::pi / 2}) {
    const std::string tag = "theta=" + format_double(theta) + " ";
    const RestrictionReport r = run_preset(p, {{"theta", theta}}, opt);
    checks.push_back(check_equal(tag + "null dimension", r.null_dim, 4));
    checks.push_back(check_equal(tag + "GNS dimension", r.gns_dim, 2));
    checks.push_back(check_true(tag + "pure", r.pure));
  }
  for (double theta : {std::numbers::pi / 4, std::numbers::pi / 5}) {
    const std::string tag = "theta=" + format_double(theta) + " ";
    const RestrictionReport r = run_preset(p, {{"theta", theta}}, opt);
    const double c = std::cos(theta) * std::cos(theta);
    checks.push_back(check_equal(tag + "GNS dimension", r.gns_dim, 4));
    checks.push_back(check_near(tag + "entropy", r.entropy_nats, binary_entropy(c), 1e-9));
  }
  const WedderburnData w = wedderburn(p.algebra, opt.seed, opt.tol);
  bool doublet_twice = false;
  for (const auto& b : w.blocks) doublet_twice = doublet_twice || (b.block_rank == 2 && b.multiplicity == 2);
  checks.push_back(check_true("Wedderburn block (n, m) = (2, 2)", doublet_twice));
  return checks;
}

std::vector<ExampleCheck> example5(const RestrictionOptions& opt) {
  std::vector<ExampleCheck> checks;
  const PresetScenario p = example_generators(Preset::ex5_bosons, opt.tol);
  checks.push_back(check_equal("algebra dimension 3^2 + 2^2 + 1^2", p.algebra.dim(), 14));
  const WedderburnData w = wedderburn(p.algebra, opt.seed, opt.tol);
  std::string blocks;
  for (const auto& b : w.blocks) blocks += std::to_string(b.block_rank) + "x" + std::to_string(b.multiplicity) + " ";
  checks.push_back(check_true("Wedderburn blocks 3 + 2 + 1", blocks == "3x1 2x1 1x1 ", blocks));

  const double theta = 1.0, phi = 0.7;
  const RestrictionReport r = restriction_entropy(p.algebra, w, p.states({{"theta", theta}, {"phi", phi}}), opt);
  checks.push_back(check_near("generic entropy", r.entropy_nats, boson_closed_form_entropy(theta, phi), 1e-9));
  checks.push_back(check_equal("generic GNS dimension", r.gns_dim, 6));

  const double pi = std::numbers::pi;
  const std::vector<std::pair<double, double>> axes = {
      {0, 0}, {pi, 0}, {pi / 2, 0}, {pi / 2, pi}, {pi / 2, pi / 2}, {pi / 2, 3 * pi / 2}};
  int zeros = 0;
  for (const auto& [t, f] : axes) {
    const RestrictionReport z = restriction_entropy(p.algebra, w, p.states({{"theta", t}, {"phi", f}}), opt);
    zeros += z.entropy_nats < 1e-9;
  }
  checks.push_back(check_equal("entropy vanishes at the six axis points", zeros, 6));

  const double t = std::acos(1 / std::sqrt(3.0));
  const RestrictionReport m = restriction_entropy(p.algebra, w, p.states({{"theta", t}, {"phi", pi / 4}}), opt);
  checks.push_back(check_near("equal coefficients give log 3", m.entropy_nats, std::log(3.0), 1e-9));
  return checks;
}

}  // namespace

// ---------------------------------------------------------------------------
// parsing

Complex parse_complex(const json& value) {
  require(value.is_array() && value.size() == 2 && value[0].is_number() && value[1].is_number(),
          "complex numbers must be [re, im] pairs");
  return {value[0].get<double>(), value[1].get<double>()};
}

CVector parse_vector(const json& value) {
  require(value.is_array() && !value.empty(), "vector must be a non-empty array of [re, im] pairs");
  CVector v(static_cast<Eigen::Index>(value.size()));
  for (std::size_t i = 0; i < value.size(); ++i) v(static_cast<Eigen::Index>(i)) = parse_complex(value[i]);
  return v;
}

CMatrix parse_matrix(const json& value, std::optional<Eigen::Index> dim) {
  require(value.is_array() && !value.empty(), "matrix must be a non-empty array");
  const bool nested = value[0].is_array() && !value[0].empty() && value[0][0].is_array();
  CMatrix m;
  if (nested) {
    const auto rows = static_cast<Eigen::Index>(value.size());
    m.resize(rows, rows);
    for (Eigen::Index i = 0; i < rows; ++i) {
      const json& row = value[static_cast<std::size_t>(i)];
      require(row.is_array() && static_cast<Eigen::Index>(row.size()) == rows, "matrix must be square");
      for (Eigen::Index j = 0; j < rows; ++j) m(i, j) = parse_complex(row[static_cast<std::size_t>(j)]);
    }
  } else {
    const auto n = static_cast<Eigen::Index>(std::lround(std::sqrt(static_cast<double>(value.size()))));
    require(n * n == static_cast<Eigen::Index>(value.size()), "flat matrix must have D^2 entries");
    m.resize(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = 0; j < n; ++j) m(i, j) = parse_complex(value[static_cast<std::size_t>(i * n + j)]);
  }
  if (dim) require(m.rows() == *dim, "matrix dimension " + std::to_string(m.rows()) +
                                         " does not match ambient_dim " + std::to_string(*dim));
  return m;
}

json matrix_to_json(const CMatrix& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back({m(i, j).real(), m(i, j).imag()});
    rows.push_back(std::move(row));
  }
  return rows;
}

ScenarioSpec parse_scenario(const json& doc) {
  require(doc.is_object(), "scenario must be a JSON object");
  reject_unknown_keys(doc, {"ambient_dim", "algebra", "state", "method", "seed", "tolerance", "log_base"},
                      "scenario");
  ScenarioSpec spec;

  if (doc.contains("ambient_dim")) {
    require(doc["ambient_dim"].is_number_integer() && doc["ambient_dim"].get<long long>() > 0,
            "ambient_dim must be a positive integer");
    spec.ambient_dim = doc["ambient_dim"].get<Eigen::Index>();
  }

  require(doc.contains("algebra") && doc["algebra"].is_object(), "scenario needs an 'algebra' object");
  const json& alg = doc["algebra"];
  reject_unknown_keys(alg, {"preset", "generators", "include_unit"}, "algebra");
  require(alg.contains("preset") != alg.contains("generators"),
          "algebra needs exactly one of 'preset' or 'generators'");
  if (alg.contains("preset")) {
    require(alg["preset"].is_string(), "preset must be a string");
    spec.preset = parse_preset(alg["preset"].get<std::string>());
  } else {
    require(spec.ambient_dim.has_value(), "generator algebras need ambient_dim");
    require(alg["generators"].is_array(), "generators must be an array of matrices");
    for (const json& g : alg["generators"]) spec.generators.push_back(parse_matrix(g, spec.ambient_dim));
  }
  if (alg.contains("include_unit")) {
    require(alg["include_unit"].is_boolean(), "include_unit must be a boolean");
    spec.include_unit = alg["include_unit"].get<bool>();
  }

  if (doc.contains("state")) {
    const json& st = doc["state"];
    require(st.is_object() && st.size() == 1,
            "state must be an object with exactly one of 'vector', 'density', 'parameters'");
    if (st.contains("vector")) {
      spec.state_kind = ScenarioSpec::StateKind::vector;
      spec.vector = parse_vector(st["vector"]);
      if (spec.ambient_dim)
        require(spec.vector.size() == *spec.ambient_dim, "state vector does not match ambient_dim");
    } else if (st.contains("density")) {
      spec.state_kind = ScenarioSpec::StateKind::density;
      spec.density = parse_matrix(st["density"], spec.ambient_dim);
    } else if (st.contains("parameters")) {
      require(st["parameters"].is_object(), "parameters must be an object of numbers");
      for (const auto& [name, value] : st["parameters"].items()) {
        require(value.is_number(), "parameter '" + name + "' must be a number");
        spec.parameters[name] = value.get<double>();
      }
    } else {
      throw ValidationError("state must contain 'vector', 'density' or 'parameters'");
    }
  } else {
    require(spec.preset.has_value(), "generator algebras need an explicit state");
  }
  if (!spec.preset) require(spec.state_kind != ScenarioSpec::StateKind::parameters,
                            "parameterized states need a preset algebra");

  if (doc.contains("method")) {
    require(doc["method"].is_string(), "method must be a string");
    spec.options.method = parse_method(doc["method"].get<std::string>());
  }
  if (doc.contains("seed")) {
    require(doc["seed"].is_number_unsigned(), "seed must be a non-negative integer");
    spec.options.seed = doc["seed"].get<std::uint64_t>();
  }
  if (doc.contains("log_base")) {
    require(doc["log_base"].is_string(), "log_base must be a string");
    spec.log_base = parse_log_base(doc["log_base"].get<std::string>());
  }
  if (doc.contains("tolerance")) {
    const json& t = doc["tolerance"];
    require(t.is_object(), "tolerance must be an object");
    reject_unknown_keys(t, {"rank", "cluster", "check", "oracle"}, "tolerance");
    auto read = [&](const char* key, double& slot) {
      if (!t.contains(key)) return;
      require(t[key].is_number() && t[key].get<double>() > 0, std::string("tolerance.") + key + " must be positive");
      slot = t[key].get<double>();
    };
    read("rank", spec.options.tol.rank);
    read("cluster", spec.options.tol.cluster);
    read("check", spec.options.tol.check);
    read("oracle", spec.options.tol.oracle);
  }
  return spec;
}

ScenarioSpec load_scenario(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open scenario file '" + path.string() + "'");
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ValidationError("malformed scenario file '" + path.string() + "': " + e.what());
  }
  return parse_scenario(doc);
}

// ---------------------------------------------------------------------------
// running

ResolvedScenario resolve(const ScenarioSpec& spec) {
  const Tolerance& tol = spec.options.tol;
  std::optional<PresetScenario> preset;
  OperatorSpan algebra;
  if (spec.preset) {
    preset = example_generators(*spec.preset, tol);
    algebra = preset->algebra;
    if (spec.ambient_dim)
      require(*spec.ambient_dim == algebra.ambient_dim(),
              "ambient_dim " + std::to_string(*spec.ambient_dim) + " does not match preset dimension " +
                  std::to_string(algebra.ambient_dim()));
  } else {
    algebra = span_closure(*spec.ambient_dim, spec.generators, spec.include_unit, tol);
  }

  auto make_state = [&]() -> AlgebraState {
    switch (spec.state_kind) {
      case ScenarioSpec::StateKind::vector:
        require(spec.vector.size() == algebra.ambient_dim(), "state vector does not match ambient dimension");
        return AlgebraState::from_vector(spec.vector);
      case ScenarioSpec::StateKind::density:
        require(spec.density.rows() == algebra.ambient_dim(), "density matrix does not match ambient dimension");
        return AlgebraState::from_density(spec.density);
      case ScenarioSpec::StateKind::parameters:
        return preset->states(spec.parameters);
    }
    throw ValidationError("bad state kind");
  };
  ResolvedScenario out{.algebra = algebra, .state = make_state(), .family = std::nullopt, .parameters = {}};
  if (preset && spec.state_kind == ScenarioSpec::StateKind::parameters) {
    out.family = preset->states;
    out.parameters = spec.parameters;
  }
  return out;
}

RestrictionReport run(const ScenarioSpec& spec) {
  const ResolvedScenario s = resolve(spec);
  return restriction_entropy(s.algebra, s.state, spec.options);
}

json report_to_json(const RestrictionReport& r, LogBase base) {
  json out;
  out["method"] = std::string(to_string(r.method));
  out["algebra_dim"] = r.algebra_dim;
  out["gns_dim"] = r.gns_dim;
  out["null_dim"] = r.null_dim;
  out["commutant_dim"] = r.commutant_dim ? json(*r.commutant_dim) : json(nullptr);
  out["entropy_nats"] = r.entropy_nats;
  out["entropy_bits"] = r.entropy_bits;
  out["log_base"] = std::string(to_string(base));
  out["entropy"] = base == LogBase::two ? r.entropy_bits : r.entropy_nats;
  out["pure"] = r.pure;
  out["spectrum"] = r.spectrum.weights();
  out["methods_agree"] = r.method == Method::both ? json(r.methods_agree()) : json(nullptr);
  out["spectral_deviation"] = r.spectral_deviation ? json(*r.spectral_deviation) : json(nullptr);

  json iso = json::array();
  if (r.isotypic)
    for (const auto& c : r.isotypic->components)
      iso.push_back({{"irrep_dim", c.irrep_dim},
                     {"multiplicity", c.multiplicity},
                     {"weight", c.weight},
                     {"refined_weights", c.refined_weights}});
  out["isotypic"] = iso;

  json blocks = json::array();
  if (r.density)
    for (const auto& b : r.density->blocks)
      blocks.push_back({{"block_rank", b.block_rank}, {"multiplicity", b.multiplicity}, {"spectrum", b.spectrum}});
  out["blocks"] = blocks;
  return out;
}

std::vector<SweepRow> sweep(const ScenarioSpec& spec, const std::string& parameter, double from,
                            double to, int steps) {
  require(std::isfinite(from) && std::isfinite(to), "sweep bounds must be finite");
  require(steps >= 1, "sweep needs at least one step");
  const ResolvedScenario s = resolve(spec);
  require(s.family.has_value(), "unknown parameter '" + parameter + "': scenario state is not a preset family");
  require(s.family->has_parameter(parameter), "unknown parameter '" + parameter + "' for this preset");

  std::optional<WedderburnData> w;
  if (spec.options.method != Method::gns) w = wedderburn(s.algebra, spec.options.seed, spec.options.tol);

  const int points = from == to ? 1 : steps;
  std::vector<SweepRow> rows;
  for (int i = 0; i < points; ++i) {
    double value = points == 1 ? from : from + (to - from) * i / (points - 1);
    if (i == points - 1 && points > 1) value = to;
    ParameterMap params = s.parameters;
    params[parameter] = value;
    const AlgebraState state = (*s.family)(params);
    const RestrictionReport r = w ? restriction_entropy(s.algebra, *w, state, spec.options)
                                  : restriction_entropy(s.algebra, state, spec.options);
    rows.push_back({value, r.entropy_nats, r.entropy_bits, r.gns_dim, r.null_dim});
  }
  return rows;
}

std::array<double, 3> sphere_point(double x, double y) {
  const double r2 = x * x + y * y;
  return {2 * x / (1 + r2), 2 * y / (1 + r2), (r2 - 1) / (r2 + 1)};
}

std::vector<GridRow> grid(int resolution, double extent, const RestrictionOptions& options, LogBase base) {
  require(resolution >= 2, "grid resolution must be at least 2");
  require(std::isfinite(extent) && extent > 0, "grid extent must be positive");
  const PresetScenario p = example_generators(Preset::ex5_bosons, options.tol);
  std::optional<WedderburnData> w;
  if (options.method != Method::gns) w = wedderburn(p.algebra, options.seed, options.tol);

  std::vector<GridRow> rows;
  rows.reserve(static_cast<std::size_t>(resolution) * static_cast<std::size_t>(resolution));
  for (int j = 0; j < resolution; ++j) {
    const double y = -extent + 2 * extent * j / (resolution - 1);
    for (int i = 0; i < resolution; ++i) {
      const double x = -extent + 2 * extent * i / (resolution - 1);
      const auto [sx, sy, sz] = sphere_point(x, y);
      const AlgebraState state = p.states({{"theta", std::acos(std::clamp(sz, -1.0, 1.0))},
                                           {"phi", std::atan2(sy, sx)}});
      const RestrictionReport r = w ? restriction_entropy(p.algebra, *w, state, options)
                                    : restriction_entropy(p.algebra, state, options);
      rows.push_back({x, y, base == LogBase::two ? r.entropy_bits : r.entropy_nats});
    }
  }
  return rows;
}

void write_sweep_csv(std::ostream& out, const std::string& parameter, const std::vector<SweepRow>& rows) {
  out << parameter << ",entropy_nats,entropy_bits,gns_dim,null_dim\n";
  for (const auto& r : rows)
    out << format_double(r.parameter) << ',' << format_double(r.entropy_nats) << ','
        << format_double(r.entropy_bits) << ',' << r.gns_dim << ',' << r.null_dim << '\n';
}

void write_grid_csv(std::ostream& out, const std::vector<GridRow>& rows) {
  out << "x,y,entropy\n";
  for (const auto& r : rows)
    out << format_double(r.x) << ',' << format_double(r.y) << ',' << format_double(r.entropy) << '\n';
}

double binary_entropy(double p) {
  double h = 0.0;
  if (p > 0) h -= p * std::log(p);
  if (p < 1) h -= (1 - p) * std::log(1 - p);
  return h;
}

double boson_closed_form_entropy(double theta, double phi) {
  double h = 0.0;
  for (double c : {std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi), std::cos(theta)}) {
    const double w = c * c;
    if (w > 0) h -= w * std::log(w);
  }
  return h;
}

std::vector<ExampleCheck> run_example(int number, const RestrictionOptions& options) {
  switch (number) {
    case 1: return example1(options);
    case 2: return example2(options);
    case 3: return example3(options);
    case 4: return example4(options);
    case 5: return example5(options);
  }
  throw ValidationError("example number must be between 1 and 5");
}

}  // namespace gnsent

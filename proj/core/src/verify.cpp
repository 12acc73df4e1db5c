#include "gmqaoa/verify.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <sstream>
#include <utility>

#include <Eigen/Dense>

#include "gmqaoa/errors.hpp"
#include "gmqaoa/limits.hpp"
#include "gmqaoa/mixers.hpp"
#include "gmqaoa/optimizer.hpp"

namespace gmqaoa {

namespace {

constexpr double pi = std::numbers::pi;

// The dense reference builds |F| x |F| matrices; past this size it is no
// longer a practical oracle.
constexpr std::size_t dense_reference_cap = 2048;

void require_matching_costs(const FeasibleSet& set, const CostTable& costs) {
  if (costs.set != &set || costs.value.size() != set.size()) {
    throw InputError("cost table does not belong to this feasible set");
  }
}

// Portable uniform double in [0, 1): 53 top bits of the generator output.
double u01(std::mt19937_64& rng) {
  return double(rng() >> 11) * 0x1.0p-53;
}

AngleSchedule random_schedule(std::mt19937_64& rng, std::size_t p) {
  AngleSchedule s = AngleSchedule::zeros(p);
  for (std::size_t r = 0; r < p; ++r) {
    s.gamma[r] = 2.0 * pi * u01(rng);
    s.beta[r] = 2.0 * pi * u01(rng);
  }
  return s;
}

std::string fmt(double x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

}  // namespace

CostClassPartition partition_by_cost(const CostTable& costs, double tol) {
  if (costs.set == nullptr) {
    throw InputError("cost table is not attached to a feasible set");
  }
  require_matching_costs(*costs.set, costs);
  std::vector<int> order(costs.value.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = int(i);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (costs.value[std::size_t(a)] != costs.value[std::size_t(b)]) {
      return costs.value[std::size_t(a)] < costs.value[std::size_t(b)];
    }
    return a < b;
  });

  CostClassPartition partition;
  partition.set = costs.set;
  for (const int idx : order) {
    const double v = costs.value[std::size_t(idx)];
    if (partition.classes.empty() ||
        v - partition.classes.back().value > tol) {
      partition.classes.push_back(CostClass{v, {}});
    }
    partition.classes.back().members.push_back(idx);
  }
  for (CostClass& c : partition.classes) {
    std::sort(c.members.begin(), c.members.end());
  }
  return partition;
}

OptimumResult brute_force_optimum(const FeasibleSet& set,
                                  const CostTable& costs, Sense sense) {
  require_matching_costs(set, costs);
  if (costs.value.empty()) throw InputError("empty feasible set");
  double opt = costs.value[0];
  for (const double v : costs.value) {
    if (sense == Sense::Maximize ? v > opt : v < opt) opt = v;
  }
  const double tol = 1e-12 * std::max(1.0, std::abs(opt));
  OptimumResult result;
  result.value = opt;
  for (std::size_t i = 0; i < costs.value.size(); ++i) {
    if (std::abs(costs.value[i] - opt) <= tol) result.members.push_back(int(i));
  }
  return result;
}

SubspaceState dense_reference_evolution(const FeasibleSet& set,
                                        const CostTable& costs,
                                        const AngleSchedule& schedule) {
  require_matching_costs(set, costs);
  if (set.size() > dense_reference_cap) {
    throw CapExceeded("dense reference evolution capped at " +
                      std::to_string(dense_reference_cap) + " members");
  }
  const Eigen::Index dim = Eigen::Index(set.size());
  Eigen::VectorXcd v =
      Eigen::VectorXcd::Constant(dim, cdouble(1.0 / std::sqrt(double(dim)), 0.0));
  for (std::size_t r = 0; r < schedule.rounds(); ++r) {
    Eigen::MatrixXcd phase = Eigen::MatrixXcd::Zero(dim, dim);
    for (Eigen::Index i = 0; i < dim; ++i) {
      phase(i, i) = std::polar(1.0, -schedule.gamma[r] *
                                        costs.value[std::size_t(i)]);
    }
    const cdouble coeff =
        (cdouble(1.0, 0.0) - std::polar(1.0, -schedule.beta[r])) /
        cdouble(double(dim), 0.0);
    Eigen::MatrixXcd mixer =
        Eigen::MatrixXcd::Identity(dim, dim) -
        coeff * Eigen::MatrixXcd::Ones(dim, dim);
    const Eigen::MatrixXcd round = mixer * phase;
    v = round * v;
  }
  SubspaceState out;
  out.set = &set;
  out.amp.resize(set.size());
  for (Eigen::Index i = 0; i < dim; ++i) out.amp[std::size_t(i)] = v(i);
  return out;
}

EqualAmplitudeReport check_equal_amplitudes(const FeasibleSet& set,
                                    const CostTable& costs,
                                    const AngleSchedule& schedule) {
  require_matching_costs(set, costs);
  const SubspaceState state = run_schedule(set, costs, schedule);
  const CostClassPartition partition = partition_by_cost(costs);

  EqualAmplitudeReport report;
  report.num_classes = int(partition.classes.size());
  for (const CostClass& c : partition.classes) {
    for (std::size_t a = 0; a < c.members.size(); ++a) {
      for (std::size_t b = a + 1; b < c.members.size(); ++b) {
        const double d = std::abs(state.amp[std::size_t(c.members[a])] -
                                  state.amp[std::size_t(c.members[b])]);
        report.max_class_spread = std::max(report.max_class_spread, d);
      }
    }
  }

  const SubspaceState dense = dense_reference_evolution(set, costs, schedule);
  for (std::size_t i = 0; i < set.size(); ++i) {
    report.reference_deviation = std::max(
        report.reference_deviation, std::abs(state.amp[i] - dense.amp[i]));
  }
  report.passed = report.max_class_spread < equal_amplitude_threshold;
  return report;
}

FullState run_circuit_pipeline(const PrepSpec& prep, const Encoding& enc,
                               const AngleSchedule& schedule) {
  if (prep.circuit.num_qubits != enc.num_qubits ||
      prep.set.num_qubits != enc.num_qubits) {
    throw InputError(
        "preparation width does not match the encoding register");
  }
  FullState state = run(prep.circuit);
  const std::vector<double> energy = energy_table(enc);
  for (std::size_t r = 0; r < schedule.rounds(); ++r) {
    apply_diagonal_phase(state, energy, schedule.gamma[r]);
    state = run(grover_mixer_circuit(prep.circuit, schedule.beta[r]), state);
  }
  return state;
}

double cross_check_engines(const PrepSpec& prep, const Encoding& enc,
                           const AngleSchedule& schedule) {
  const FullState full = run_circuit_pipeline(prep, enc, schedule);
  const CostTable costs = CostTable::from_function(prep.set, enc.cost);
  const FullState embedded =
      embed(run_schedule(prep.set, costs, schedule));
  double dev = 0.0;
  for (std::size_t x = 0; x < full.dim(); ++x) {
    dev = std::max(dev, std::abs(full.amp[x] - embedded.amp[x]));
  }
  return dev;
}

double support_check(const FullState& state, const FeasibleSet& set) {
  double leaked = 0.0;
  for (std::size_t x = 0; x < state.dim(); ++x) {
    if (!set.contains(Bitstring(x))) leaked += std::norm(state.amp[x]);
  }
  return leaked;
}

bool SuiteReport::passed() const {
  for (const CheckResult& c : checks) {
    if (!c.passed) return false;
  }
  return !checks.empty();
}

// --- Fixtures ---

namespace fixtures {

KvcInstance triangle_cover() {
  return KvcInstance{3, {{0, 1}, {0, 2}, {1, 2}}, 1};
}

KvcInstance path4_cover() {
  return KvcInstance{4, {{0, 1}, {1, 2}, {2, 3}}, 2};
}

KvcInstance random6_cover() {
  // Frozen sample of G(6, 1/2): 11 edges.
  return KvcInstance{6,
                     {{0, 1},
                      {0, 2},
                      {0, 4},
                      {1, 2},
                      {1, 3},
                      {1, 5},
                      {2, 3},
                      {2, 4},
                      {2, 5},
                      {3, 4},
                      {4, 5}},
                     3};
}

TspInstance three_city_tour() {
  return TspInstance{3, {{0, 1, 3}, {1, 0, 2}, {3, 2, 0}}, false};
}

TspInstance four_city_tour() {
  return TspInstance{
      4,
      {{0, 3, 5, 7}, {2, 0, 4, 6}, {5, 4, 0, 2}, {7, 1, 3, 0}},
      true};
}

PortfolioInstance four_asset_rebalance() {
  PortfolioInstance inst;
  inst.n = 4;
  inst.d = 2;
  inst.penalty_weight = 0.5;
  inst.mu = {0.12, 0.31, -0.04, 0.22};
  return inst;
}

std::vector<Problem> all() {
  return {triangle_cover(),     path4_cover(),      random6_cover(),
          three_city_tour(),    four_city_tour(),   four_asset_rebalance()};
}

}  // namespace fixtures

// --- Suites ---

namespace {

std::vector<std::pair<std::string, Problem>> labelled_fixtures() {
  return {{"triangle", fixtures::triangle_cover()},
          {"path4", fixtures::path4_cover()},
          {"random6", fixtures::random6_cover()},
          {"tsp3", fixtures::three_city_tour()},
          {"tsp4", fixtures::four_city_tour()},
          {"portfolio4", fixtures::four_asset_rebalance()}};
}

void add_check(SuiteReport& report, const std::string& name, double value,
               double threshold) {
  report.checks.push_back(CheckResult{name, value, threshold,
                                      value < threshold});
}

FeasibleSet weight_class_set(int n, int k) {
  std::vector<Bitstring> members;
  for (Bitstring x = 0; x < (Bitstring(1) << n); ++x) {
    if (popcount(x) == k) members.push_back(x);
  }
  return FeasibleSet::from_members(n, std::move(members));
}

SuiteReport suite_equal_amplitude(std::uint64_t seed, int trials) {
  SuiteReport report{"equal_amplitude", {}};
  std::mt19937_64 rng(seed);
  for (const auto& [label, problem] : labelled_fixtures()) {
    const Encoding enc = make_encoding(problem);
    const FeasibleSet set = feasible_set(problem);
    const CostTable costs = CostTable::from_function(set, enc.cost);
    for (std::size_t p = 1; p <= 3; ++p) {
      double spread = 0.0;
      double ref_dev = 0.0;
      for (int t = 0; t < trials; ++t) {
        const EqualAmplitudeReport r =
            check_equal_amplitudes(set, costs, random_schedule(rng, p));
        spread = std::max(spread, r.max_class_spread);
        ref_dev = std::max(ref_dev, r.reference_deviation);
      }
      const std::string base =
          "equal_amplitude/" + label + "/p" + std::to_string(p);
      add_check(report, base + "/class_spread", spread,
                equal_amplitude_threshold);
      add_check(report, base + "/dense_deviation", ref_dev, 1e-10);
    }
  }
  return report;
}

SuiteReport suite_mixer_identity(std::uint64_t, int) {
  SuiteReport report{"mixer_identity", {}};
  const Circuit prep = dicke_circuit(4, 2);
  const FeasibleSet set = weight_class_set(4, 2);
  const double amp = 1.0 / std::sqrt(double(set.size()));
  for (const double beta : {0.0, pi / 3.0, pi, 1.2345}) {
    const Eigen::MatrixXcd u =
        circuit_unitary(grover_mixer_circuit(prep, beta));
    Eigen::MatrixXcd ref = Eigen::MatrixXcd::Identity(16, 16);
    const cdouble coeff = cdouble(1.0, 0.0) - std::polar(1.0, -beta);
    for (const Bitstring x : set.members) {
      for (const Bitstring y : set.members) {
        ref(Eigen::Index(std::uint64_t(x)), Eigen::Index(std::uint64_t(y))) -=
            coeff * amp * amp;
      }
    }
    add_check(report, "mixer_identity/beta=" + fmt(beta),
              (u - ref).cwiseAbs().maxCoeff(), 1e-9);
  }
  return report;
}

void check_uniform_prep(SuiteReport& report, const std::string& label,
                        const Circuit& circuit, const FeasibleSet& target,
                        double amp_tol, double support_tol) {
  const FullState state = run(circuit);
  // The target set may be narrower than the circuit when ancillas are in
  // play; membership for leakage purposes pads with zero ancilla bits.
  FeasibleSet padded = FeasibleSet::from_members(
      circuit.num_qubits, std::vector<Bitstring>(target.members));
  const double expect = 1.0 / std::sqrt(double(target.size()));
  double amp_dev = 0.0;
  for (const Bitstring x : target.members) {
    amp_dev = std::max(
        amp_dev, std::abs(state.amp[std::size_t(std::uint64_t(x))] -
                          cdouble(expect, 0.0)));
  }
  add_check(report, "preparation/" + label + "/amplitude", amp_dev, amp_tol);
  add_check(report, "preparation/" + label + "/off_support",
            support_check(state, padded), support_tol);
}

SuiteReport suite_preparation(std::uint64_t, int) {
  SuiteReport report{"preparation", {}};

  check_uniform_prep(report, "wstate5", w_state_circuit(5),
                     weight_class_set(5, 1), 1e-9, 1e-18);
  check_uniform_prep(report, "dicke6_3", dicke_circuit(6, 3),
                     weight_class_set(6, 3), 1e-9, 1e-18);
  {
    const FullState direct = dicke_state(6, 3);
    const FullState circuit = run(dicke_circuit(6, 3));
    double dev = 0.0;
    for (std::size_t x = 0; x < direct.dim(); ++x) {
      dev = std::max(dev, std::abs(direct.amp[x] - circuit.amp[x]));
    }
    add_check(report, "preparation/dicke6_3/formula_agreement", dev, 1e-9);
  }

  TspInstance t3{3, {{0, 1, 1}, {1, 0, 1}, {1, 1, 0}}, false};
  TspInstance t4{4,
                 {{0, 1, 1, 1}, {1, 0, 1, 1}, {1, 1, 0, 1}, {1, 1, 1, 0}},
                 false};
  TspInstance t4f = t4;
  t4f.fixed_first_city = true;
  check_uniform_prep(report, "permutation3", permutation_circuit(3, false),
                     tsp_feasible(t3), 1e-9, 1e-18);
  check_uniform_prep(report, "permutation4", permutation_circuit(4, false),
                     tsp_feasible(t4), 1e-9, 1e-18);
  check_uniform_prep(report, "permutation4_fixed",
                     permutation_circuit(4, true), tsp_feasible(t4f), 1e-9,
                     1e-18);
  check_uniform_prep(report, "alternating3", alternating_circuit(3),
                     even_permutation_set(3), 1e-9, 1e-18);
  check_uniform_prep(report, "alternating4", alternating_circuit(4),
                     even_permutation_set(4), 1e-9, 1e-18);

  {
    PortfolioInstance pf = fixtures::four_asset_rebalance();
    const FeasibleSet set = portfolio_feasible(pf);
    check_uniform_prep(report, "band4_2", portfolio_band_circuit(4, 2), set,
                       1e-9, 1e-18);
    // Band probabilities: short weight m carries C(n,d+m)*C(n,m)/C(2n,n-d).
    const FullState state = run(portfolio_band_circuit(4, 2));
    const double want[3] = {6.0 / 28.0, 16.0 / 28.0, 6.0 / 28.0};
    double band_dev = 0.0;
    for (int m = 0; m <= 2; ++m) {
      double prob = 0.0;
      for (std::size_t x = 0; x < state.dim(); ++x) {
        if (popcount(Bitstring(x) & 0xF) == m) prob += std::norm(state.amp[x]);
      }
      band_dev = std::max(band_dev, std::abs(prob - want[m]));
    }
    add_check(report, "preparation/band4_2/band_probabilities", band_dev,
              1e-12);
  }
  return report;
}

// Independent dense XY Hamiltonians assembled from explicit Pauli tensor
// products (qubit 0 = rightmost Kronecker factor).
Eigen::MatrixXcd kron(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

Eigen::MatrixXcd single_qubit_operator(int n, int q,
                                       const Eigen::Matrix2cd& p) {
  Eigen::MatrixXcd op = Eigen::MatrixXcd::Identity(1, 1);
  for (int wire = n - 1; wire >= 0; --wire) {
    op = kron(op, wire == q ? Eigen::MatrixXcd(p)
                            : Eigen::MatrixXcd(
                                  Eigen::Matrix2cd::Identity()));
  }
  return op;
}

Eigen::MatrixXcd dense_xy(int n,
                          const std::vector<std::pair<int, int>>& edges) {
  Eigen::Matrix2cd px, py;
  px << 0, 1, 1, 0;
  py << 0, cdouble(0, -1), cdouble(0, 1), 0;
  const Eigen::Index dim = Eigen::Index(1) << n;
  Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(dim, dim);
  for (const auto& [a, b] : edges) {
    if (a == b) continue;
    h += single_qubit_operator(n, a, px) * single_qubit_operator(n, b, px);
    h += single_qubit_operator(n, a, py) * single_qubit_operator(n, b, py);
  }
  return h;
}

SuiteReport suite_mixer_catalogue(std::uint64_t seed, int trials) {
  SuiteReport report{"mixer_catalogue", {}};
  std::mt19937_64 rng(seed);
  for (int n = 1; n <= 6; ++n) {
    std::vector<std::pair<int, int>> ring_edges;
    for (int i = 0; i < n; ++i) ring_edges.push_back({i, (i + 1) % n});
    std::vector<std::pair<int, int>> clique_edges;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) clique_edges.push_back({i, j});
    }
    const Eigen::MatrixXcd ring_full = dense_xy(n, ring_edges);
    const Eigen::MatrixXcd clique_full = dense_xy(n, clique_edges);

    double nesting_violations = 0.0;
    double restriction_dev = 0.0;
    double exp_dev = 0.0;
    for (int k = 0; k <= n; ++k) {
      const FeasibleSet set = weight_class_set(n, k);
      const RestrictedHamiltonian ring = xy_ring_restricted(set);
      const RestrictedHamiltonian clique = xy_clique_restricted(set);
      const RestrictedHamiltonian gm = gm_restricted(set);
      const Eigen::Index dim = Eigen::Index(set.size());

      for (Eigen::Index i = 0; i < dim; ++i) {
        for (Eigen::Index j = 0; j < dim; ++j) {
          if (ring.matrix(i, j) != 0.0 && clique.matrix(i, j) == 0.0) {
            nesting_violations += 1.0;
          }
          if (clique.matrix(i, j) != 0.0 && gm.matrix(i, j) == 0.0) {
            nesting_violations += 1.0;
          }
          const auto full_index = [&](Eigen::Index m) {
            return Eigen::Index(std::uint64_t(set.members[std::size_t(m)]));
          };
          restriction_dev = std::max(
              restriction_dev,
              std::abs(ring.matrix(i, j) -
                       ring_full(full_index(i), full_index(j)).real()));
          restriction_dev = std::max(
              restriction_dev,
              std::abs(clique.matrix(i, j) -
                       clique_full(full_index(i), full_index(j)).real()));
          restriction_dev =
              std::max(restriction_dev,
                       std::abs(ring_full(full_index(i), full_index(j)).imag()));
        }
      }

      for (int t = 0; t < std::max(1, trials); ++t) {
        SubspaceState state;
        state.set = &set;
        state.amp.resize(set.size());
        double norm2 = 0.0;
        for (auto& a : state.amp) {
          a = cdouble(2.0 * u01(rng) - 1.0, 2.0 * u01(rng) - 1.0);
          norm2 += std::norm(a);
        }
        for (auto& a : state.amp) a /= std::sqrt(norm2);
        const double beta = 2.0 * pi * u01(rng);
        const SubspaceState via_exp =
            apply_restricted_exponential(state, gm, beta);
        const SubspaceState via_rank1 = apply_grover_mixer(state, beta);
        for (std::size_t i = 0; i < set.size(); ++i) {
          exp_dev = std::max(exp_dev,
                             std::abs(via_exp.amp[i] - via_rank1.amp[i]));
        }
      }
    }
    const std::string base = "mixer_catalogue/n" + std::to_string(n);
    add_check(report, base + "/pattern_nesting", nesting_violations, 0.5);
    add_check(report, base + "/dense_restriction", restriction_dev, 1e-12);
    add_check(report, base + "/grover_exponential", exp_dev, 1e-9);
  }
  return report;
}

SuiteReport suite_cross_check(std::uint64_t seed, int trials) {
  SuiteReport report{"cross_check", {}};
  std::mt19937_64 rng(seed);
  for (const auto& [label, problem] : labelled_fixtures()) {
    const PrepSpec prep = make_prep(problem);
    const Encoding enc = make_encoding(problem);
    const CostTable costs = CostTable::from_function(prep.set, enc.cost);
    double engine_dev = 0.0;
    double leaked = 0.0;
    for (std::size_t p = 1; p <= 3; ++p) {
      for (int t = 0; t < std::max(1, trials); ++t) {
        const AngleSchedule schedule = random_schedule(rng, p);
        const FullState full = run_circuit_pipeline(prep, enc, schedule);
        const FullState embedded =
            embed(run_schedule(prep.set, costs, schedule));
        for (std::size_t x = 0; x < full.dim(); ++x) {
          engine_dev =
              std::max(engine_dev, std::abs(full.amp[x] - embedded.amp[x]));
        }
        leaked = std::max(leaked, support_check(full, prep.set));
      }
    }
    add_check(report, "cross_check/" + label + "/engine_deviation",
              engine_dev, 1e-8);
    add_check(report, "cross_check/" + label + "/off_support", leaked, 1e-10);
  }
  return report;
}

SuiteReport suite_phase_decomposition(std::uint64_t, int) {
  SuiteReport report{"phase_decomposition", {}};
  for (int controls = 1; controls <= 5; ++controls) {
    double dev = 0.0;
    for (const double t : {0.0, 0.37, 1.0, -0.5}) {
      const Eigen::MatrixXcd u = circuit_unitary(decompose_mcz(t, controls));
      Eigen::MatrixXcd ref =
          Eigen::MatrixXcd::Identity(u.rows(), u.cols());
      ref(u.rows() - 1, u.cols() - 1) = std::polar(1.0, pi * t);
      dev = std::max(dev, (u - ref).cwiseAbs().maxCoeff());
    }
    add_check(report,
              "phase_decomposition/controls" + std::to_string(controls), dev,
              1e-9);
  }
  return report;
}

SuiteReport suite_optimizer(std::uint64_t, int) {
  SuiteReport report{"optimizer", {}};
  const KvcInstance inst = fixtures::path4_cover();
  const FeasibleSet set = kvc_feasible(inst);
  const CostTable costs =
      CostTable::from_function(set, [&](Bitstring x) { return kvc_cost(inst, x); });
  const Sense sense = Sense::Maximize;
  const double uniform_mean = expectation(uniform_state(set), costs);

  double embed_dev = 0.0;
  for (std::size_t p = 1; p <= 3; ++p) {
    embed_dev = std::max(
        embed_dev,
        std::abs(evaluate(set, costs, AngleSchedule::zeros(p)) - uniform_mean));
  }
  add_check(report, "optimizer/zero_rounds_embed", embed_dev, 1e-12);

  const OptimizationReport grid = grid_search(set, costs, 1, 16, sense, 1000);
  const OptimizationReport refined =
      simplex_refine(set, costs, grid.best_schedule, sense, 200, 1e-8, 2000);
  add_check(report, "optimizer/p1_strict_improvement",
            uniform_mean - refined.best_expectation, 0.0);
  add_check(report, "optimizer/ratio_bounded",
            refined.approximation_ratio - 1.0, 1e-9);

  const std::vector<OptimizationReport> sweep =
      p_sweep(set, costs, 3, 600, sense);
  add_check(report, "optimizer/p_sweep_monotone",
            double(monotonicity_violations(sweep, sense).size()), 0.5);
  return report;
}

}  // namespace

std::vector<std::string> available_suites() {
  return {"equal_amplitude",  "mixer_identity", "preparation",
          "mixer_catalogue",  "cross_check",    "phase_decomposition",
          "optimizer"};
}

SuiteReport run_suite(const std::string& name, std::uint64_t seed,
                      int trials) {
  if (trials < 1) throw InputError("trials must be at least 1");
  if (name == "equal_amplitude") return suite_equal_amplitude(seed, trials);
  if (name == "mixer_identity") return suite_mixer_identity(seed, trials);
  if (name == "preparation") return suite_preparation(seed, trials);
  if (name == "mixer_catalogue") return suite_mixer_catalogue(seed, trials);
  if (name == "cross_check") return suite_cross_check(seed, trials);
  if (name == "phase_decomposition") {
    return suite_phase_decomposition(seed, trials);
  }
  if (name == "optimizer") return suite_optimizer(seed, trials);
  std::string known;
  for (const std::string& s : available_suites()) {
    known += (known.empty() ? "" : ", ") + s;
  }
  throw InputError("unknown suite '" + name + "' (expected " + known + ")");
}

}  // namespace gmqaoa

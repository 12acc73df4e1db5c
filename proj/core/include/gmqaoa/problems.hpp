#pragma once

#include <functional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "gmqaoa/bitstring.hpp"
#include "gmqaoa/subspace.hpp"

namespace gmqaoa {

// Cover a maximum number of edges by choosing exactly k vertices.
struct KvcInstance {
  int n = 0;                                  // vertex count
  std::vector<std::pair<int, int>> edges;     // unordered, no self-loops
  int k = 0;                                  // cover size, 0 <= k <= n

  void validate() const;  // throws InputError on violations
};

// Closed tour over n cities minimizing total travel distance. Encoded on
// n*n qubits: bit r*n + c is 1 iff the city in tour position r is city c.
struct TspInstance {
  int n = 0;
  std::vector<std::vector<double>> dist;  // n x n, nonnegative, zero diagonal
  bool fixed_first_city = false;          // pin city 0 to position 0

  void validate() const;
};

// Choose long/short positions over n assets with a fixed net lot total d.
// Encoded on 2n qubits: bits [0,n) are the short register s, bits [n,2n)
// the long register l; feasibility is HW(l) - HW(s) = d.
struct PortfolioInstance {
  int n = 0;
  int d = 0;                   // net lot total, 0 <= d <= n
  double penalty_weight = 0.0; // charge per asset held both long and short
  std::vector<double> mu;      // per-asset expected return (default model)
  // Optional override for the return/cost part (receives the long and short
  // registers as bitmasks). When empty the default linear model
  // -sum_i mu_i * (l_i - s_i) is used. The doubly-held penalty is always
  // added on top.
  std::function<double(Bitstring longs, Bitstring shorts)> cost_model;

  void validate() const;
};

using Problem = std::variant<KvcInstance, TspInstance, PortfolioInstance>;

// One diagonal z-product term: weight * prod_{q in qubits} z_q with
// z_q = +1 when bit q is 0 and -1 when bit q is 1. An empty qubit list is a
// constant term.
struct DiagonalTerm {
  double weight = 0.0;
  std::vector<int> qubits;  // strictly increasing
};

// Everything a circuit-level pipeline needs to know about a problem: the
// register width, membership test, classical objective, and the diagonal
// Hamiltonian as z-product terms. Invariant: for every feasible x,
// evaluate_terms(terms, x) + constant_offset == cost(x).
struct Encoding {
  Problem problem;
  int num_qubits = 0;
  Sense sense = Sense::Minimize;
  std::function<bool(Bitstring)> feasible;
  std::function<double(Bitstring)> cost;
  std::vector<DiagonalTerm> terms;
  double constant_offset = 0.0;  // zero for all built-in encodings
};

// --- Feasible-set enumeration (members capped at max_feasible_members) ---

// All weight-k selections of n vertices; n <= 24.
FeasibleSet kvc_feasible(const KvcInstance& inst);
// All permutation matrices (n <= 8), or those with city 0 in position 0
// when fixed_first_city (n <= 9).
FeasibleSet tsp_feasible(const TspInstance& inst);
// All (s, l) register pairs with HW(l) - HW(s) = d; n <= 12.
FeasibleSet portfolio_feasible(const PortfolioInstance& inst);

// --- Objectives ---

// Number of edges with at least one selected endpoint.
double kvc_cost(const KvcInstance& inst, Bitstring x);
// Closed-tour length decoded from the one-hot rows; throws InputError when
// x is not a valid encoding.
double tsp_cost(const TspInstance& inst, Bitstring x);
// penalty_weight * |{i : l_i = s_i = 1}| + cost model term.
double portfolio_cost(const PortfolioInstance& inst, Bitstring x);

// Per-edge diagonal terms (3 - z_j z_l - z_j - z_l) / 4, one constant plus
// three z-products per edge; their sum evaluates to kvc_cost on every
// bitstring.
std::vector<DiagonalTerm> kvc_hamiltonian_terms(const KvcInstance& inst);

// sum_t weight_t * prod_{q in t} (1 - 2*bit_q(x)).
double evaluate_terms(const std::vector<DiagonalTerm>& terms, Bitstring x);

// Dense diagonal over all 2^num_qubits basis states:
// energy[x] = evaluate_terms(terms, x) + constant_offset. Capped by the
// statevector amplitude limit.
std::vector<double> energy_table(const Encoding& enc);

// Full encoding for any instance. TSP uses the one-hot projector form
// sum_r sum_{u != v} d(u,v) x_{r,u} x_{r+1,v} expanded into z-products;
// portfolio instances with a custom cost_model are refused (InputError)
// because an opaque callable has no term-list form.
Encoding make_encoding(const Problem& problem);

FeasibleSet feasible_set(const Problem& problem);
double problem_cost(const Problem& problem, Bitstring x);
int problem_num_qubits(const Problem& problem);
// Maximize for cover problems, minimize for tours and rebalancing.
Sense natural_sense(const Problem& problem);

// --- Instance file I/O ---

// JSON object with a "type" field ("kvc" | "tsp" | "portfolio"); schemas
// documented in the README. Throws InputError with position diagnostics on
// malformed input.
Problem parse_problem_json(const std::string& text);
// Plain graph edge list, one "u v" pair per line (# comments allowed);
// vertex count inferred, cover size k supplied by the caller.
KvcInstance parse_edge_list(const std::string& text, int k);
// Reads a file and dispatches on content: JSON when the first
// non-whitespace byte is '{', otherwise edge-list (using edge_list_k).
Problem load_problem(const std::string& path, int edge_list_k = 1);

}  // namespace gmqaoa

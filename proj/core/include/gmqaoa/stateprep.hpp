#pragma once

#include <string>
#include <vector>

#include "gmqaoa/circuit.hpp"
#include "gmqaoa/fullsim.hpp"
#include "gmqaoa/problems.hpp"
#include "gmqaoa/subspace.hpp"

namespace gmqaoa {

enum class PrepMethod {
  DickeFormula,          // X layer + unary-to-Dicke kernel
  WCircuit,              // Hamming-weight-1 cascade
  PermutationCircuit,    // uniform superposition of permutation matrices
  AlternatingCircuit,    // even permutations only, parity ancilla
  PortfolioBandCircuit,  // rotation stair + per-register unary-to-Dicke
};

// A state-preparation recipe: the target feasible set together with a gate
// program mapping |0...0> to the uniform superposition over it. All shipped
// constructions produce real positive amplitudes (global phase +1).
struct PrepSpec {
  FeasibleSet set;
  PrepMethod method{};
  Circuit circuit;
};

// Uniform superposition of all weight-k basis states, amplitude
// 1/sqrt(C(n,k)) each, built directly by formula; 0 <= k <= n <= 22.
FullState dicke_state(int n, int k);

// Circuit preparing the same state: X on qubits 0..k-1, then the
// unary-to-Dicke kernel over all n qubits.
Circuit dicke_circuit(int n, int k);

// Uniform Hamming-weight-1 superposition over the listed qubits: one PauliX
// on the first, then a cascade of ControlledRotY(2*arccos(1/sqrt(m))) and
// ControlledNot pairs. Circuit width is max listed index + 1.
Circuit w_state_circuit(const std::vector<int>& qubits);
Circuit w_state_circuit(int n);  // qubits 0..n-1

// Uniform superposition over all n! permutation matrices on n*n qubits
// (or the (n-1)! matrices with city 0 pinned to position 0). Rows fill top
// to bottom: a W state per remaining choice count, moved into place by
// mask-controlled swaps and cyclic shifts; the running free-column bitmask
// occupies the last row and ends as its one-hot value. 2 <= n <= 4.
Circuit permutation_circuit(int n, bool fixed_first_city);

// Uniform superposition over the even permutations only (n!/2 members),
// n in {3, 4}. One extra ancilla qubit (index n*n) tracks the running
// inversion parity and is uncomputed to |0> before the final mask update.
Circuit alternating_circuit(int n);

// The even-permutation encodings as a feasible set (inversion parity 0).
FeasibleSet even_permutation_set(int n);

// Uniform superposition over all portfolios with HW(l) - HW(s) = d on 2n
// qubits: a stair of (controlled) Y-rotations writes sqrt(band weight) onto
// unary markers, then a unary-to-Dicke kernel per register spreads each
// band uniformly. Band k carries probability C(n,d+k)*C(n,k) / C(2n,n-d).
Circuit portfolio_band_circuit(int n, int d);

// The natural preparation for a problem's feasible set: Dicke for covers,
// permutation circuit for tours, band circuit for rebalancing.
PrepSpec make_prep(const Problem& problem);
// By-name construction for the CLI ("auto" dispatches on the problem).
PrepSpec make_prep(const Problem& problem, const std::string& method);
std::vector<std::string> available_prep_methods();

}  // namespace gmqaoa

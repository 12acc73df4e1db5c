#pragma once

#include <Eigen/Dense>

#include "gmqaoa/bitstring.hpp"
#include "gmqaoa/subspace.hpp"

namespace gmqaoa {

// A mixing Hamiltonian conjugated into the feasible-subspace basis:
// matrix(i, j) = <members[i]| H |members[j]>. Real symmetric.
struct RestrictedHamiltonian {
  const FeasibleSet* set = nullptr;
  Eigen::MatrixXd matrix;
};

// Grover mixing Hamiltonian |F><F|: the all-ones matrix scaled by 1/|F|
// (rank-1 projector, eigenvalues {1, 0, ...}). |F| <= 4096.
RestrictedHamiltonian gm_restricted(const FeasibleSet& set);

// XY ring sum_i (sigma^x_i sigma^x_{i+1} + sigma^y_i sigma^y_{i+1}) with
// cyclic indexing, restricted to the set: entry (x, y) = 2 * number of
// ring-adjacent transpositions mapping x to y; zero diagonal. A 2-qubit
// ring contributes its single edge twice.
RestrictedHamiltonian xy_ring_restricted(const FeasibleSet& set);

// XY clique sum_{i<j} (...): entry (x, y) = 2 exactly when x and y differ
// in two bits of opposite value (Hamming distance 2, equal weight).
RestrictedHamiltonian xy_clique_restricted(const FeasibleSet& set);

// state <- exp(-i * beta * H) state via symmetric eigendecomposition.
// Throws InputError for a non-symmetric matrix, CapExceeded over 4096.
SubspaceState apply_restricted_exponential(const SubspaceState& state,
                                           const RestrictedHamiltonian& h,
                                           double beta);

// Minimum number of adjacent transpositions turning x into y; defined for
// equal-weight words of num_bits bits (throws InputError otherwise).
// Equals the L1 distance between the sorted one-position vectors.
int bubble_sort_distance(Bitstring x, Bitstring y, int num_bits);

}  // namespace gmqaoa

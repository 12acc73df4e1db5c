#include "gmqaoa/mixers.hpp"

#include <Eigen/Eigenvalues>
#include <bit>
#include <complex>
#include <string>
#include <vector>

#include "gmqaoa/errors.hpp"
#include "gmqaoa/limits.hpp"

namespace gmqaoa {

namespace {

void require_restricted_dim(const FeasibleSet& set) {
  if (set.size() > std::size_t(limits::max_restricted_dim)) {
    throw CapExceeded("restricted mixing matrices capped at " +
                      std::to_string(limits::max_restricted_dim) +
                      " members, got " + std::to_string(set.size()));
  }
}

std::vector<int> one_positions(Bitstring x, int num_bits) {
  std::vector<int> pos;
  for (int b = 0; b < num_bits; ++b) {
    if ((x >> b) & 1) pos.push_back(b);
  }
  return pos;
}

}  // namespace

RestrictedHamiltonian gm_restricted(const FeasibleSet& set) {
  require_restricted_dim(set);
  const Eigen::Index dim = Eigen::Index(set.size());
  RestrictedHamiltonian h;
  h.set = &set;
  h.matrix = Eigen::MatrixXd::Constant(dim, dim, 1.0 / double(dim));
  return h;
}

RestrictedHamiltonian xy_ring_restricted(const FeasibleSet& set) {
  require_restricted_dim(set);
  const Eigen::Index dim = Eigen::Index(set.size());
  RestrictedHamiltonian h;
  h.set = &set;
  h.matrix = Eigen::MatrixXd::Zero(dim, dim);
  const int n = set.num_qubits;
  if (n < 2) return h;
  for (Eigen::Index i = 0; i < dim; ++i) {
    const Bitstring x = set.members[std::size_t(i)];
    for (int a = 0; a < n; ++a) {
      const int b = (a + 1) % n;
      const bool bit_a = (x >> a) & 1;
      const bool bit_b = (x >> b) & 1;
      if (bit_a == bit_b) continue;  // XX + YY annihilates equal bits
      const Bitstring y = x ^ bit_mask(a) ^ bit_mask(b);
      const std::ptrdiff_t j = set.index_of(y);
      if (j < 0) continue;  // neighbour outside the set: projected away
      h.matrix(Eigen::Index(j), i) += 2.0;
    }
  }
  return h;
}

RestrictedHamiltonian xy_clique_restricted(const FeasibleSet& set) {
  require_restricted_dim(set);
  const Eigen::Index dim = Eigen::Index(set.size());
  RestrictedHamiltonian h;
  h.set = &set;
  h.matrix = Eigen::MatrixXd::Zero(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    for (Eigen::Index j = i + 1; j < dim; ++j) {
      const Bitstring diff =
          set.members[std::size_t(i)] ^ set.members[std::size_t(j)];
      if (popcount(diff) != 2) continue;
      // Exactly one differing bit set on each side <=> equal weight.
      if (popcount(set.members[std::size_t(i)] & diff) != 1) continue;
      h.matrix(i, j) = 2.0;
      h.matrix(j, i) = 2.0;
    }
  }
  return h;
}

SubspaceState apply_restricted_exponential(const SubspaceState& state,
                                           const RestrictedHamiltonian& h,
                                           double beta) {
  if (state.set == nullptr || h.set == nullptr || state.set != h.set) {
    throw InputError(
        "state and restricted Hamiltonian must share one feasible set");
  }
  const Eigen::Index dim = Eigen::Index(state.set->size());
  if (h.matrix.rows() != dim || h.matrix.cols() != dim) {
    throw InputError("restricted matrix dimension does not match the set");
  }
  require_restricted_dim(*state.set);
  const double asym = (h.matrix - h.matrix.transpose()).cwiseAbs().maxCoeff();
  if (!(asym < 1e-12)) {
    throw InputError("restricted mixing matrix must be symmetric");
  }

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(h.matrix);
  if (solver.info() != Eigen::Success) {
    throw InputError("eigendecomposition of the restricted matrix failed");
  }
  const Eigen::MatrixXd& basis = solver.eigenvectors();
  const Eigen::VectorXd& evals = solver.eigenvalues();

  Eigen::VectorXcd v(dim);
  for (Eigen::Index i = 0; i < dim; ++i) v(i) = state.amp[std::size_t(i)];
  Eigen::VectorXcd w = basis.transpose() * v;
  for (Eigen::Index i = 0; i < dim; ++i) {
    w(i) *= std::polar(1.0, -beta * evals(i));
  }
  v = basis * w;

  SubspaceState out = state;
  for (Eigen::Index i = 0; i < dim; ++i) out.amp[std::size_t(i)] = v(i);
  return out;
}

int bubble_sort_distance(Bitstring x, Bitstring y, int num_bits) {
  if (num_bits < 1 || num_bits > limits::max_bitstring_bits) {
    throw InputError("bit width must be between 1 and " +
                     std::to_string(limits::max_bitstring_bits));
  }
  const std::vector<int> px = one_positions(x, num_bits);
  const std::vector<int> py = one_positions(y, num_bits);
  if (px.size() != py.size()) {
    throw InputError(
        "adjacent-transposition distance requires equal Hamming weight");
  }
  int dist = 0;
  for (std::size_t k = 0; k < px.size(); ++k) dist += std::abs(px[k] - py[k]);
  return dist;
}

}  // namespace gmqaoa

#include "gmqaoa/stateprep.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <numeric>

#include "gmqaoa/errors.hpp"
#include "gmqaoa/limits.hpp"

namespace gmqaoa {

namespace {

constexpr double pi = std::numbers::pi;

double binomial_d(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  k = std::min(k, n - k);
  double c = 1.0;
  for (int i = 1; i <= k; ++i) c = c * double(n - k + i) / double(i);
  return c;
}

// Hamming-weight-1 cascade over the listed wires: X seeds the first, then
// each step peels amplitude cos = 1/sqrt(choices left) off to the previous
// wire and hands the rest on.
void append_w_cascade(Circuit& circuit, const std::vector<int>& qubits) {
  const int m = int(qubits.size());
  if (m < 1) throw InputError("W cascade needs at least one qubit");
  circuit.append(Gate::x(qubits[0]));
  for (int i = 1; i < m; ++i) {
    const int remaining = m - i + 1;
    const double theta = 2.0 * std::acos(1.0 / std::sqrt(double(remaining)));
    circuit.append(Gate::cry(qubits[i - 1], qubits[i], theta));
    circuit.append(Gate::cnot(qubits[i], qubits[i - 1]));
  }
}

std::vector<int> iota_vec(int first, int count) {
  std::vector<int> v(count);
  std::iota(v.begin(), v.end(), first);
  return v;
}

int inversion_count(const std::vector<int>& perm) {
  int inv = 0;
  for (std::size_t r = 0; r < perm.size(); ++r) {
    for (std::size_t r2 = r + 1; r2 < perm.size(); ++r2) {
      if (perm[r] > perm[r2]) ++inv;
    }
  }
  return inv;
}

}  // namespace

FullState dicke_state(int n, int k) {
  if (n < 1 || n > limits::max_dicke_qubits) {
    throw CapExceeded("direct symmetric states capped at " +
                      std::to_string(limits::max_dicke_qubits) + " qubits");
  }
  if (k < 0 || k > n) throw InputError("weight must satisfy 0 <= k <= n");
  FullState state = FullState::zero(n);
  state.amp[0] = cdouble(0.0, 0.0);
  const double a = 1.0 / std::sqrt(binomial_d(n, k));
  const std::size_t dim = state.amp.size();
  for (std::size_t x = 0; x < dim; ++x) {
    if (std::popcount(std::uint64_t(x)) == k) state.amp[x] = cdouble(a, 0.0);
  }
  return state;
}

Circuit dicke_circuit(int n, int k) {
  if (n < 1) throw InputError("need at least one qubit");
  if (k < 0 || k > n) throw InputError("weight must satisfy 0 <= k <= n");
  Circuit circuit(n);
  for (int q = 0; q < k; ++q) circuit.append(Gate::x(q));
  circuit.append(Gate::unary_to_dicke(iota_vec(0, n)));
  return circuit;
}

Circuit w_state_circuit(const std::vector<int>& qubits) {
  if (qubits.empty()) throw InputError("W state needs at least one qubit");
  const int width = *std::max_element(qubits.begin(), qubits.end()) + 1;
  Circuit circuit(width);
  append_w_cascade(circuit, qubits);
  return circuit;
}

Circuit w_state_circuit(int n) { return w_state_circuit(iota_vec(0, n)); }

// Shared skeleton of the permutation-superposition builders. Fills rows top
// to bottom; the bitmask of still-free columns lives in the last row and
// ends up holding the final row's one-hot value. When parity_ancilla >= 0,
// inversion parity is accumulated there after each row and steers the
// final two-column assignment (even permutations only).
namespace {

Circuit build_permutation_circuit(int n, bool fixed_first_city,
                                  int parity_ancilla) {
  const int width = n * n + (parity_ancilla >= 0 ? 1 : 0);
  Circuit circuit(width);
  const auto row_q = [n](int row, int col) { return row * n + col; };
  const auto mask_q = [n](int col) { return (n - 1) * n + col; };
  const int anc = parity_ancilla;

  const auto update_mask = [&](int row) {
    for (int col = 0; col < n; ++col) {
      circuit.append(Gate::cnot(row_q(row, col), mask_q(col)));
    }
  };
  // Adds, for the just-placed row, one parity flip per still-free column
  // smaller than the placed one: exactly the inversions this row creates.
  const auto accumulate_parity = [&](int row) {
    if (anc < 0) return;
    for (int col = 1; col < n; ++col) {
      for (int smaller = 0; smaller < col; ++smaller) {
        circuit.append(
            Gate::mtoffoli({row_q(row, col), mask_q(smaller)}, anc));
      }
    }
  };

  // Row 0: free choice among all n columns.
  if (fixed_first_city) {
    circuit.append(Gate::x(row_q(0, 0)));
  } else {
    append_w_cascade(circuit, iota_vec(0, n));
  }
  for (int col = 0; col < n; ++col) circuit.append(Gate::x(mask_q(col)));
  update_mask(0);
  accumulate_parity(0);

  // Middle rows: a W state over the still-possible choice count sits in a
  // scratch window (the last n-k+1 wires of the next row); each free column
  // grabs the window's last wire via a mask-controlled swap, then the
  // window rotates one step so the next candidate moves into place.
  for (int k = 2; k <= n - 2; ++k) {
    const int row = k - 1;
    const std::vector<int> window = iota_vec(k * n + k - 1, n - k + 1);
    append_w_cascade(circuit, window);
    for (int col = 0; col < n; ++col) {
      circuit.append(
          Gate::cswap(mask_q(col), (k + 1) * n - 1, row_q(row, col)));
      circuit.append(Gate::controlled_cyclic_shift(mask_q(col), window, +1));
    }
    update_mask(row);
    accumulate_parity(row);
  }

  // Second-to-last row: two columns remain per branch. Unconstrained, each
  // pair splits evenly (a multi-Toffoli-gated rotation pair); with a parity
  // ancilla the assignment is forced so the total inversion count is even.
  if (n >= 3) {
    const int row = n - 2;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        const int a = row_q(row, i);
        const int b = row_q(row, j);
        if (anc < 0) {
          circuit.append(Gate::ry(a, pi / 4));
          circuit.append(Gate::mtoffoli({mask_q(i), mask_q(j)}, a));
          circuit.append(Gate::ry(a, -pi / 4));
          circuit.append(Gate::mtoffoli({mask_q(i), mask_q(j)}, a));
          circuit.append(Gate::mtoffoli({mask_q(i), mask_q(j), a}, b));
          circuit.append(Gate::mtoffoli({mask_q(i), mask_q(j)}, b));
        } else {
          // Odd running parity takes the larger column now (one more
          // inversion); even parity takes the smaller.
          circuit.append(Gate::mtoffoli({mask_q(i), mask_q(j), anc}, b));
          circuit.append(Gate::x(anc));
          circuit.append(Gate::mtoffoli({mask_q(i), mask_q(j), anc}, a));
          circuit.append(Gate::x(anc));
        }
      }
    }
    if (anc >= 0) {
      // Uncompute the ancilla: the inversions created by this row, counted
      // against the masks before they are updated.
      for (int smaller = 0; smaller < n; ++smaller) {
        for (int col = smaller + 1; col < n; ++col) {
          circuit.append(
              Gate::mtoffoli({row_q(row, col), mask_q(smaller)}, anc));
        }
      }
    }
    update_mask(row);
  }

  return circuit;
}

}  // namespace

Circuit permutation_circuit(int n, bool fixed_first_city) {
  if (n < 2 || n > 4) {
    throw CapExceeded(
        "permutation superposition circuits support 2 to 4 cities");
  }
  return build_permutation_circuit(n, fixed_first_city, -1);
}

Circuit alternating_circuit(int n) {
  if (n < 3 || n > 4) {
    throw CapExceeded("even-permutation circuits support 3 or 4 cities");
  }
  return build_permutation_circuit(n, false, n * n);
}

FeasibleSet even_permutation_set(int n) {
  if (n < 2 || n > 8) {
    throw CapExceeded("even-permutation enumeration supports 2 to 8 cities");
  }
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<Bitstring> members;
  do {
    if (inversion_count(perm) % 2 != 0) continue;
    Bitstring x = 0;
    for (int r = 0; r < n; ++r) x |= bit_mask(r * n + perm[r]);
    members.push_back(x);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return FeasibleSet::from_members(n * n, std::move(members));
}

Circuit portfolio_band_circuit(int n, int d) {
  if (n < 1 || n > 12) {
    throw CapExceeded("band circuits support 1 to 12 assets");
  }
  if (d < 0 || d > n) throw InputError("net lot total must satisfy 0 <= d <= n");
  Circuit circuit(2 * n);

  // Unnormalized band weights v_k = C(n, d+k) * C(n, k) and suffix sums.
  const int bands = n - d + 1;
  std::vector<double> v(bands);
  for (int k = 0; k < bands; ++k) v[k] = binomial_d(n, d + k) * binomial_d(n, k);
  std::vector<double> suffix(bands);
  double running = 0.0;
  for (int k = bands - 1; k >= 0; --k) {
    running += v[k];
    suffix[k] = running;
  }

  // Base longs for band 0, then the rotation stair: step k either stops at
  // band k-1 (probability v_{k-1}/suffix_{k-1}) or extends both unary
  // markers by one.
  for (int i = 0; i < d; ++i) circuit.append(Gate::x(n + i));
  for (int k = 1; k <= n - d; ++k) {
    const double theta = 2.0 * std::acos(std::sqrt(v[k - 1] / suffix[k - 1]));
    if (k == 1) {
      circuit.append(Gate::ry(0, theta));
    } else {
      circuit.append(Gate::cry(k - 2, k - 1, theta));
    }
    circuit.append(Gate::cnot(k - 1, n + d + k - 1));
  }

  // Spread each unary marker over its Hamming-weight class.
  circuit.append(Gate::unary_to_dicke(iota_vec(0, n)));
  circuit.append(Gate::unary_to_dicke(iota_vec(n, n)));
  return circuit;
}

PrepSpec make_prep(const Problem& problem) {
  if (const auto* kvc = std::get_if<KvcInstance>(&problem)) {
    return PrepSpec{kvc_feasible(*kvc), PrepMethod::DickeFormula,
                    dicke_circuit(kvc->n, kvc->k)};
  }
  if (const auto* tsp = std::get_if<TspInstance>(&problem)) {
    return PrepSpec{tsp_feasible(*tsp), PrepMethod::PermutationCircuit,
                    permutation_circuit(tsp->n, tsp->fixed_first_city)};
  }
  const auto& pf = std::get<PortfolioInstance>(problem);
  return PrepSpec{portfolio_feasible(pf), PrepMethod::PortfolioBandCircuit,
                  portfolio_band_circuit(pf.n, pf.d)};
}

PrepSpec make_prep(const Problem& problem, const std::string& method) {
  if (method == "auto" || method.empty()) return make_prep(problem);
  if (method == "dicke" || method == "wstate") {
    const auto* kvc = std::get_if<KvcInstance>(&problem);
    if (kvc == nullptr) {
      throw InputError("method '" + method + "' applies to cover instances");
    }
    if (method == "dicke") return make_prep(problem);
    if (kvc->k != 1) {
      throw InputError("the W cascade prepares weight-1 sets only (k = 1)");
    }
    return PrepSpec{kvc_feasible(*kvc), PrepMethod::WCircuit,
                    w_state_circuit(kvc->n)};
  }
  if (method == "permutation" || method == "alternating") {
    const auto* tsp = std::get_if<TspInstance>(&problem);
    if (tsp == nullptr) {
      throw InputError("method '" + method + "' applies to tour instances");
    }
    if (method == "permutation") return make_prep(problem);
    if (tsp->fixed_first_city) {
      throw InputError(
          "even-permutation preparation has no fixed-first-city variant");
    }
    return PrepSpec{even_permutation_set(tsp->n), PrepMethod::AlternatingCircuit,
                    alternating_circuit(tsp->n)};
  }
  if (method == "band") {
    if (!std::holds_alternative<PortfolioInstance>(problem)) {
      throw InputError("method 'band' applies to portfolio instances");
    }
    return make_prep(problem);
  }
  std::string known;
  for (const std::string& name : available_prep_methods()) {
    known += (known.empty() ? "" : ", ") + name;
  }
  throw InputError("unknown preparation method '" + method + "' (expected " +
                   known + ")");
}

std::vector<std::string> available_prep_methods() {
  return {"auto", "dicke", "wstate", "permutation", "alternating", "band"};
}

}  // namespace gmqaoa

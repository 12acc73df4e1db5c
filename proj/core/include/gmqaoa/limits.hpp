#pragma once

#include <cstddef>

namespace gmqaoa::limits {

// Desk-scale resource caps. Enumeration ops refuse to build feasible sets
// beyond max_feasible_members so the full test suite stays fast; the
// statevector cap can be raised via the GMQAOA_MAX_AMPS environment variable.
inline constexpr std::size_t max_feasible_members = 50'000;
inline constexpr int max_bitstring_bits = 128;    // width of a basis label
inline constexpr int max_unitary_qubits = 12;     // circuit_unitary: 2^12 x 2^12
inline constexpr int max_dicke_qubits = 22;       // direct Dicke-state vectors
inline constexpr std::size_t max_restricted_dim = 4096;  // |F| for dense mixers

// Default 2^22 amplitudes; reads GMQAOA_MAX_AMPS once on first use.
std::size_t max_statevector_amps();

}  // namespace gmqaoa::limits

#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace gmqaoa {

// Basis-state label. 128 bits because tour encodings use n^2 qubits
// (n = 9 cities with a fixed first city already needs 81 bits).
// Qubit i is bit i of the label, i.e. qubit 0 is the least significant bit.
using Bitstring = unsigned __int128;

constexpr int bit(Bitstring x, int i) noexcept {
  return static_cast<int>((x >> i) & 1u);
}

constexpr Bitstring bit_mask(int i) noexcept { return Bitstring{1} << i; }

inline int popcount(Bitstring x) noexcept {
  return std::popcount(static_cast<std::uint64_t>(x)) +
         std::popcount(static_cast<std::uint64_t>(x >> 64));
}

// Renders MSB-first ("0011" is the 4-qubit string with qubits 0 and 1 set),
// matching the usual written form of binary words.
inline std::string to_bit_string(Bitstring x, int num_qubits) {
  std::string s(static_cast<std::size_t>(num_qubits), '0');
  for (int i = 0; i < num_qubits; ++i) {
    if (bit(x, i)) s[static_cast<std::size_t>(num_qubits - 1 - i)] = '1';
  }
  return s;
}

inline Bitstring parse_bit_string(std::string_view s) {
  if (s.empty() || s.size() > 128) {
    throw std::invalid_argument("bitstring must have 1..128 characters");
  }
  Bitstring x = 0;
  for (std::size_t pos = 0; pos < s.size(); ++pos) {
    const char c = s[pos];
    if (c != '0' && c != '1') {
      throw std::invalid_argument("bitstring may contain only '0' and '1'");
    }
    if (c == '1') x |= bit_mask(static_cast<int>(s.size() - 1 - pos));
  }
  return x;
}

}  // namespace gmqaoa

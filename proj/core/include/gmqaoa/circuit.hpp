#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gmqaoa {

// Gate alphabet of the statevector simulator. Multi-qubit kernels
// (MultiToffoli, Increment, CyclicShift, UnaryToDicke) execute as primitive
// basis-index permutations / reflections; compiling them to 1- and 2-qubit
// gates is out of scope.
enum class GateKind {
  PauliX,
  Hadamard,
  RotY,                  // param: angle in radians
  RotZ,                  // param: angle in radians
  PhaseShift,            // param t: diag(1, e^{i pi t}) -- exponent of pi
  ControlledNot,
  ControlledSwap,
  ControlledRotY,        // param: angle in radians
  MultiControlledPhase,  // param t: phase e^{i pi t} iff controls and target all 1
  MultiToffoli,          // X on target iff all controls 1 (0 controls = plain X)
  Increment,             // |v> -> |v+1 mod 2^m> on the target register
  Decrement,
  CyclicShift,           // bit at targets[k] moves to targets[k+dir]; param = dir
  UnaryToDicke,          // |1^m 0^{r-m}> -> uniform weight-m superposition, per m
};

struct Gate {
  GateKind kind{};
  std::vector<int> controls;
  std::vector<int> targets;  // registers are listed least-significant first
  double param = 0.0;

  // Exact unitary inverse: rotation/phase parameters negate, Increment and
  // Decrement swap kinds, CyclicShift reverses direction, the rest are
  // self-inverse.
  Gate inverse() const;

  static Gate x(int q);
  static Gate h(int q);
  static Gate ry(int q, double angle);
  static Gate rz(int q, double angle);
  static Gate phase(int q, double t);
  static Gate cnot(int control, int target);
  static Gate cswap(int control, int a, int b);
  static Gate cry(int control, int target, double angle);
  static Gate mcphase(std::vector<int> controls, int target, double t);
  static Gate mtoffoli(std::vector<int> controls, int target);
  static Gate increment(std::vector<int> reg);
  static Gate decrement(std::vector<int> reg);
  static Gate cyclic_shift(std::vector<int> reg, int direction);
  static Gate controlled_cyclic_shift(int control, std::vector<int> reg,
                                      int direction);
  static Gate unary_to_dicke(std::vector<int> reg);
};

struct Circuit {
  int num_qubits = 0;
  std::vector<Gate> gates;

  explicit Circuit(int num_qubits = 0) : num_qubits(num_qubits) {}

  // Validates qubit indices (distinct within the gate, in range).
  void append(Gate gate);

  // Reversed gate order with per-gate inverses.
  Circuit inverse() const;

  std::size_t size() const noexcept { return gates.size(); }
};

// Line-based text format, one gate per line:
//   <KIND> [c<q>...] <q>... [param]
// Control qubits carry a 'c' prefix; a kind that takes a parameter always has
// it as the last token (radians for rotations, exponent of pi for phases,
// +-1 for cyclic-shift direction). First line: "qubits <n>".
void write_circuit(std::ostream& out, const Circuit& circuit);
std::string circuit_to_string(const Circuit& circuit);
Circuit read_circuit(std::istream& in);
Circuit circuit_from_string(const std::string& text);

}  // namespace gmqaoa

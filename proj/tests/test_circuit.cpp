#include <bit>
#include <cmath>
#include <complex>
#include <cstdlib>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include <doctest.h>

#include "gmqaoa/circuit.hpp"
#include "gmqaoa/errors.hpp"
#include "gmqaoa/fullsim.hpp"

namespace {

using namespace gmqaoa;

constexpr double pi = std::numbers::pi;

FullState basis(int num_qubits, std::size_t index) {
  FullState s = FullState::zero(num_qubits);
  s.amp[0] = 0;
  s.amp[index] = 1;
  return s;
}

std::size_t sole_support(const FullState& s) {
  std::size_t where = s.dim();
  for (std::size_t i = 0; i < s.dim(); ++i) {
    if (std::abs(s.amp[i]) > 1e-12) {
      REQUIRE(where == s.dim());  // only one nonzero amplitude expected
      where = i;
    }
  }
  REQUIRE(where != s.dim());
  CHECK(std::abs(s.amp[where] - cdouble(1, 0)) < 1e-12);
  return where;
}

FullState random_state(int num_qubits, std::mt19937_64& rng) {
  FullState s = FullState::zero(num_qubits);
  double n2 = 0;
  for (auto& a : s.amp) {
    const double re = double(rng() >> 11) * 0x1.0p-53 - 0.5;
    const double im = double(rng() >> 11) * 0x1.0p-53 - 0.5;
    a = cdouble(re, im);
    n2 += std::norm(a);
  }
  for (auto& a : s.amp) a /= std::sqrt(n2);
  return s;
}

double max_dev(const FullState& a, const FullState& b) {
  REQUIRE(a.dim() == b.dim());
  double d = 0;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    d = std::max(d, std::abs(a.amp[i] - b.amp[i]));
  }
  return d;
}

}  // namespace

TEST_SUITE("circuit") {

TEST_CASE("append validates wires and arity") {
  Circuit c(2);
  CHECK_THROWS_AS(c.append(Gate::x(2)), InputError);
  CHECK_THROWS_AS(c.append(Gate::x(-1)), InputError);
  CHECK_THROWS_AS(c.append(Gate::cnot(0, 0)), InputError);
  CHECK_THROWS_AS(c.append(Gate::cswap(0, 1, 1)), InputError);
  CHECK_THROWS_AS(c.append(Gate::cyclic_shift({0, 1}, +2)), InputError);
  CHECK_THROWS_AS(c.append(Gate::cyclic_shift({0, 1}, 0)), InputError);
  c.append(Gate::cnot(0, 1));
  CHECK(c.size() == 1);
}

TEST_CASE("single-qubit gate conventions") {
  const double s = 1.0 / std::sqrt(2.0);
  FullState h = apply(basis(1, 0), Gate::h(0));
  CHECK(std::abs(h.amp[0] - cdouble(s, 0)) < 1e-15);
  CHECK(std::abs(h.amp[1] - cdouble(s, 0)) < 1e-15);

  CHECK(sole_support(apply(basis(1, 0), Gate::x(0))) == 1);

  const double theta = 0.6;
  FullState ry = apply(basis(1, 0), Gate::ry(0, theta));
  CHECK(std::abs(ry.amp[0] - cdouble(std::cos(theta / 2), 0)) < 1e-15);
  CHECK(std::abs(ry.amp[1] - cdouble(std::sin(theta / 2), 0)) < 1e-15);

  FullState rz = apply(h, Gate::rz(0, theta));
  CHECK(std::abs(rz.amp[0] - s * std::polar(1.0, -theta / 2)) < 1e-15);
  CHECK(std::abs(rz.amp[1] - s * std::polar(1.0, theta / 2)) < 1e-15);

  // PhaseShift(t) = diag(1, e^{i*pi*t}); t = 1/4 gives the eighth root.
  FullState ph = apply(basis(1, 1), Gate::phase(0, 0.25));
  CHECK(std::abs(ph.amp[1] - std::polar(1.0, pi / 4)) < 1e-15);
  FullState ph0 = apply(basis(1, 0), Gate::phase(0, 0.25));
  CHECK(std::abs(ph0.amp[0] - cdouble(1, 0)) == 0.0);
}

TEST_CASE("controlled gates fire only when controls are set") {
  // Qubit 0 is the least significant bit of the basis index.
  CHECK(sole_support(apply(basis(2, 1), Gate::cnot(0, 1))) == 3);
  CHECK(sole_support(apply(basis(2, 2), Gate::cnot(0, 1))) == 2);
  CHECK(sole_support(apply(basis(3, 0b011), Gate::cswap(0, 1, 2))) == 0b101);
  CHECK(sole_support(apply(basis(3, 0b010), Gate::cswap(0, 1, 2))) == 0b010);
  CHECK(sole_support(apply(basis(3, 0b011), Gate::mtoffoli({0, 1}, 2))) ==
        0b111);
  CHECK(sole_support(apply(basis(3, 0b001), Gate::mtoffoli({0, 1}, 2))) ==
        0b001);

  FullState cry = apply(basis(2, 0), Gate::cry(0, 1, 1.0));
  CHECK(std::abs(cry.amp[0] - cdouble(1, 0)) < 1e-15);  // control clear
  cry = apply(basis(2, 1), Gate::cry(0, 1, 1.0));
  CHECK(std::abs(cry.amp[1] - cdouble(std::cos(0.5), 0)) < 1e-15);
  CHECK(std::abs(cry.amp[3] - cdouble(std::sin(0.5), 0)) < 1e-15);

  // Phase lands only on the all-ones pattern of controls plus target.
  FullState mcp = apply(basis(3, 0b111), Gate::mcphase({0, 1}, 2, 0.5));
  CHECK(std::abs(mcp.amp[0b111] - std::polar(1.0, pi / 2)) < 1e-15);
  mcp = apply(basis(3, 0b101), Gate::mcphase({0, 1}, 2, 0.5));
  CHECK(std::abs(mcp.amp[0b101] - cdouble(1, 0)) == 0.0);
}

TEST_CASE("increment, decrement, and cyclic shifts on sub-registers") {
  // Targets list the register wires LSB first.
  CHECK(sole_support(apply(basis(2, 0b01), Gate::increment({0, 1}))) == 0b10);
  CHECK(sole_support(apply(basis(2, 0b11), Gate::increment({0, 1}))) == 0b00);
  CHECK(sole_support(apply(basis(2, 0b00), Gate::decrement({0, 1}))) == 0b11);
  // Scrambled wire order: register bit 0 lives on qubit 2.
  CHECK(sole_support(apply(basis(3, 0b100), Gate::increment({2, 0}))) ==
        0b001);

  // +1 moves the bit on targets[k] to targets[k+1]; -1 the other way.
  CHECK(sole_support(apply(basis(3, 0b001),
                           Gate::cyclic_shift({0, 1, 2}, +1))) == 0b010);
  CHECK(sole_support(apply(basis(3, 0b100),
                           Gate::cyclic_shift({0, 1, 2}, +1))) == 0b001);
  CHECK(sole_support(apply(basis(3, 0b001),
                           Gate::cyclic_shift({0, 1, 2}, -1))) == 0b100);
  // Controlled variant is inert when the control is clear.
  CHECK(sole_support(apply(
            basis(4, 0b0001),
            Gate::controlled_cyclic_shift(3, {0, 1, 2}, +1))) == 0b0001);
  CHECK(sole_support(apply(
            basis(4, 0b1001),
            Gate::controlled_cyclic_shift(3, {0, 1, 2}, +1))) == 0b1010);
}

TEST_CASE("unary-to-dicke is self-inverse and weight-preserving") {
  std::mt19937_64 rng(3);
  const FullState in = random_state(4, rng);
  const Gate u2d = Gate::unary_to_dicke({0, 1, 2, 3});
  const FullState once = apply(in, u2d);
  CHECK(max_dev(apply(once, u2d), in) < 1e-12);

  // A weight-2 basis input stays inside the weight-2 class.
  const FullState spread = apply(basis(4, 0b0101), u2d);
  for (std::size_t x = 0; x < spread.dim(); ++x) {
    if (std::popcount(x) != 2) CHECK(std::abs(spread.amp[x]) < 1e-15);
  }
}

TEST_CASE("every gate kind undoes itself via inverse()") {
  const std::vector<Gate> gates = {
      Gate::x(0),
      Gate::h(1),
      Gate::ry(2, 0.37),
      Gate::rz(0, -1.2),
      Gate::phase(1, 0.81),
      Gate::cnot(0, 3),
      Gate::cswap(1, 0, 2),
      Gate::cry(3, 1, 2.2),
      Gate::mcphase({0, 2}, 3, -0.4),
      Gate::mtoffoli({1, 3}, 0),
      Gate::increment({0, 1, 2}),
      Gate::decrement({1, 3}),
      Gate::cyclic_shift({0, 2, 3}, +1),
      Gate::controlled_cyclic_shift(1, {0, 2, 3}, -1),
      Gate::unary_to_dicke({0, 1, 2, 3}),
  };
  std::mt19937_64 rng(17);
  for (const Gate& g : gates) {
    const FullState in = random_state(4, rng);
    CHECK(max_dev(apply(apply(in, g), g.inverse()), in) < 1e-12);
  }
}

TEST_CASE("circuit inverse reverses the program") {
  Circuit c(3);
  c.append(Gate::h(0));
  c.append(Gate::cry(0, 1, 0.9));
  c.append(Gate::increment({0, 1, 2}));
  c.append(Gate::phase(2, 0.3));
  std::mt19937_64 rng(23);
  const FullState in = random_state(3, rng);
  CHECK(max_dev(run(c.inverse(), run(c, in)), in) < 1e-12);
}

TEST_CASE("text format round-trips and is frozen") {
  Circuit c(3);
  c.append(Gate::cry(0, 1, 0.5));
  c.append(Gate::mtoffoli({0, 2}, 1));
  const std::string golden = "qubits 3\nCRY c0 1 0.5\nMTOFF c0 c2 1\n";
  CHECK(circuit_to_string(c) == golden);

  Circuit all(5);
  all.append(Gate::x(0));
  all.append(Gate::h(1));
  all.append(Gate::ry(2, 0.25));
  all.append(Gate::rz(3, -0.75));
  all.append(Gate::phase(4, 0.125));
  all.append(Gate::cnot(0, 1));
  all.append(Gate::cswap(2, 3, 4));
  all.append(Gate::cry(1, 0, 1.5));
  all.append(Gate::mcphase({0, 1, 2}, 3, -0.5));
  all.append(Gate::mtoffoli({3, 4}, 0));
  all.append(Gate::increment({0, 1}));
  all.append(Gate::decrement({2, 3, 4}));
  all.append(Gate::cyclic_shift({0, 2, 4}, +1));
  all.append(Gate::controlled_cyclic_shift(1, {0, 2, 4}, -1));
  all.append(Gate::unary_to_dicke({0, 1, 2, 3, 4}));
  const std::string text = circuit_to_string(all);
  const Circuit parsed = circuit_from_string(text);
  CHECK(circuit_to_string(parsed) == text);
  CHECK(parsed.size() == all.size());

  // Semantics survive the round trip.
  std::mt19937_64 rng(31);
  const FullState in = random_state(5, rng);
  CHECK(max_dev(run(parsed, in), run(all, in)) < 1e-13);
}

TEST_CASE("parse errors carry line numbers") {
  CHECK_THROWS_AS(circuit_from_string("X 0\n"), InputError);
  CHECK_THROWS_AS(circuit_from_string("qubits 2\nFOO 0\n"), InputError);
  CHECK_THROWS_AS(circuit_from_string("qubits 2\nX 5\n"), InputError);
  CHECK_THROWS_AS(circuit_from_string("qubits 2\nRY 0\n"), InputError);
  try {
    circuit_from_string("qubits 2\nX zero\n");
    FAIL("expected InputError");
  } catch (const InputError& e) {
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
  // Comments and blank lines are fine.
  const Circuit ok = circuit_from_string("# header\nqubits 1\n\n# gate\nX 0\n");
  CHECK(ok.size() == 1);
}

TEST_CASE("circuit_unitary matches gate semantics and caps width") {
  Circuit h(1);
  h.append(Gate::h(0));
  const Eigen::MatrixXcd u = circuit_unitary(h);
  const double s = 1.0 / std::sqrt(2.0);
  CHECK(std::abs(u(0, 0) - cdouble(s, 0)) < 1e-15);
  CHECK(std::abs(u(1, 1) - cdouble(-s, 0)) < 1e-15);

  Circuit big(13);
  big.append(Gate::x(0));
  CHECK_THROWS_AS(circuit_unitary(big), CapExceeded);

  Circuit mixed(3);
  mixed.append(Gate::h(0));
  mixed.append(Gate::cry(0, 2, 0.7));
  mixed.append(Gate::increment({0, 1, 2}));
  const Eigen::MatrixXcd m = circuit_unitary(mixed);
  CHECK((m.adjoint() * m - Eigen::MatrixXcd::Identity(8, 8))
            .cwiseAbs()
            .maxCoeff() < 1e-13);
}

TEST_CASE("grover mixer circuit equals Id - (1-e^{-ib})|F><F|") {
  // Bell preparation: F = {00, 11}, amplitudes 1/sqrt(2). Built by hand so
  // the check does not depend on any library preparation routine.
  Circuit prep(2);
  prep.append(Gate::h(0));
  prep.append(Gate::cnot(0, 1));
  for (const double beta : {0.0, 0.9, pi}) {
    const Eigen::MatrixXcd u = circuit_unitary(grover_mixer_circuit(prep, beta));
    Eigen::MatrixXcd ref = Eigen::MatrixXcd::Identity(4, 4);
    const cdouble coeff =
        (cdouble(1, 0) - std::polar(1.0, -beta)) * 0.5;
    for (const int x : {0, 3}) {
      for (const int y : {0, 3}) ref(x, y) -= coeff;
    }
    CHECK((u - ref).cwiseAbs().maxCoeff() < 1e-13);
  }

  // Single-qubit register exercises the control-free phase branch.
  Circuit hadamard(1);
  hadamard.append(Gate::h(0));
  const double beta = 1.3;
  const Eigen::MatrixXcd u1 =
      circuit_unitary(grover_mixer_circuit(hadamard, beta));
  Eigen::MatrixXcd ref1 = Eigen::MatrixXcd::Identity(2, 2);
  const cdouble coeff = (cdouble(1, 0) - std::polar(1.0, -beta)) * 0.5;
  for (int x = 0; x < 2; ++x) {
    for (int y = 0; y < 2; ++y) ref1(x, y) -= coeff;
  }
  CHECK((u1 - ref1).cwiseAbs().maxCoeff() < 1e-13);
}

TEST_CASE("multi-controlled phase decomposition") {
  for (int controls = 1; controls <= 4; ++controls) {
    for (const double t : {0.0, 0.37, 1.0, -0.5}) {
      const Circuit c = decompose_mcz(t, controls);
      CHECK(c.num_qubits == controls + 1);
      for (const Gate& g : c.gates) {
        const bool allowed = g.kind == GateKind::MultiToffoli ||
                             g.kind == GateKind::Increment ||
                             g.kind == GateKind::Decrement ||
                             g.kind == GateKind::PhaseShift;
        CHECK(allowed);
      }
      const Eigen::MatrixXcd u = circuit_unitary(c);
      Eigen::MatrixXcd ref =
          Eigen::MatrixXcd::Identity(u.rows(), u.cols());
      ref(u.rows() - 1, u.cols() - 1) = std::polar(1.0, pi * t);
      const double dev = (u - ref).cwiseAbs().maxCoeff();
      if (t == 0.0) {
        CHECK(dev == 0.0);  // the construction cancels exactly
      } else {
        CHECK(dev < 1e-9);
      }
    }
  }
}

TEST_CASE("embed and extract move between registers faithfully") {
  const FeasibleSet set = FeasibleSet::from_members(4, {3, 5, 6, 9, 10, 12});
  SubspaceState sub;
  sub.set = &set;
  sub.amp = {cdouble(0.5, 0), cdouble(0, 0.5), cdouble(0.5, 0),
             cdouble(0, -0.5), cdouble(0, 0), cdouble(0, 0)};
  const FullState full = embed(sub);
  CHECK(full.num_qubits == 4);
  CHECK(std::abs(full.amp[3] - cdouble(0.5, 0)) == 0.0);
  CHECK(std::abs(full.amp[5] - cdouble(0, 0.5)) == 0.0);
  CHECK(std::abs(full.amp[0]) == 0.0);
  const SubspaceState back = extract(full, set);
  for (std::size_t i = 0; i < 6; ++i) CHECK(back.amp[i] == sub.amp[i]);
}

TEST_CASE("diagonal phase weights each basis state") {
  FullState state = FullState::zero(2);
  state.amp = {cdouble(0.5, 0), cdouble(0.5, 0), cdouble(0.5, 0),
               cdouble(0.5, 0)};
  const std::vector<double> energy = {0.0, 1.0, 2.0, 3.0};
  apply_diagonal_phase(state, energy, 0.3);
  for (std::size_t x = 0; x < 4; ++x) {
    CHECK(std::abs(state.amp[x] - 0.5 * std::polar(1.0, -0.3 * double(x))) <
          1e-15);
  }
}

TEST_CASE("statevector width is capped") {
  if (std::getenv("GMQAOA_MAX_AMPS") == nullptr) {
    // Within the representable range the limit is the (env-adjustable) cap.
    CHECK_THROWS_AS(FullState::zero(23), CapExceeded);
    CHECK_THROWS_AS(FullState::zero(40), CapExceeded);
  }
  // Beyond 48 qubits no cap setting can help: that is an input error.
  CHECK_THROWS_AS(FullState::zero(49), InputError);
  CHECK_THROWS_AS(FullState::zero(-1), InputError);
}

}  // TEST_SUITE

#include "gmqaoa/circuit.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>
#include <string_view>
#include <unordered_set>

#include "gmqaoa/errors.hpp"

namespace gmqaoa {

namespace {

struct KindInfo {
  GateKind kind;
  std::string_view name;
  bool has_param;
};

constexpr std::array<KindInfo, 14> kind_table{{
    {GateKind::PauliX, "X", false},
    {GateKind::Hadamard, "H", false},
    {GateKind::RotY, "RY", true},
    {GateKind::RotZ, "RZ", true},
    {GateKind::PhaseShift, "PHASE", true},
    {GateKind::ControlledNot, "CNOT", false},
    {GateKind::ControlledSwap, "CSWAP", false},
    {GateKind::ControlledRotY, "CRY", true},
    {GateKind::MultiControlledPhase, "MCPHASE", true},
    {GateKind::MultiToffoli, "MTOFF", false},
    {GateKind::Increment, "INC", false},
    {GateKind::Decrement, "DEC", false},
    {GateKind::CyclicShift, "CSHIFT", true},
    {GateKind::UnaryToDicke, "UNARYDICKE", false},
}};

const KindInfo& info_for(GateKind kind) {
  for (const KindInfo& info : kind_table) {
    if (info.kind == kind) return info;
  }
  throw InputError("unknown gate kind");
}

}  // namespace

Gate Gate::inverse() const {
  Gate g = *this;
  switch (kind) {
    case GateKind::RotY:
    case GateKind::RotZ:
    case GateKind::PhaseShift:
    case GateKind::ControlledRotY:
    case GateKind::MultiControlledPhase:
    case GateKind::CyclicShift:
      g.param = -param;
      break;
    case GateKind::Increment:
      g.kind = GateKind::Decrement;
      break;
    case GateKind::Decrement:
      g.kind = GateKind::Increment;
      break;
    default:
      break;  // self-inverse
  }
  return g;
}

Gate Gate::x(int q) { return Gate{GateKind::PauliX, {}, {q}, 0.0}; }
Gate Gate::h(int q) { return Gate{GateKind::Hadamard, {}, {q}, 0.0}; }
Gate Gate::ry(int q, double angle) { return Gate{GateKind::RotY, {}, {q}, angle}; }
Gate Gate::rz(int q, double angle) { return Gate{GateKind::RotZ, {}, {q}, angle}; }
Gate Gate::phase(int q, double t) {
  return Gate{GateKind::PhaseShift, {}, {q}, t};
}
Gate Gate::cnot(int control, int target) {
  return Gate{GateKind::ControlledNot, {control}, {target}, 0.0};
}
Gate Gate::cswap(int control, int a, int b) {
  return Gate{GateKind::ControlledSwap, {control}, {a, b}, 0.0};
}
Gate Gate::cry(int control, int target, double angle) {
  return Gate{GateKind::ControlledRotY, {control}, {target}, angle};
}
Gate Gate::mcphase(std::vector<int> controls, int target, double t) {
  return Gate{GateKind::MultiControlledPhase, std::move(controls), {target}, t};
}
Gate Gate::mtoffoli(std::vector<int> controls, int target) {
  return Gate{GateKind::MultiToffoli, std::move(controls), {target}, 0.0};
}
Gate Gate::increment(std::vector<int> reg) {
  return Gate{GateKind::Increment, {}, std::move(reg), 0.0};
}
Gate Gate::decrement(std::vector<int> reg) {
  return Gate{GateKind::Decrement, {}, std::move(reg), 0.0};
}
Gate Gate::cyclic_shift(std::vector<int> reg, int direction) {
  return Gate{GateKind::CyclicShift, {}, std::move(reg), double(direction)};
}
Gate Gate::controlled_cyclic_shift(int control, std::vector<int> reg,
                                   int direction) {
  return Gate{GateKind::CyclicShift, {control}, std::move(reg),
              double(direction)};
}
Gate Gate::unary_to_dicke(std::vector<int> reg) {
  return Gate{GateKind::UnaryToDicke, {}, std::move(reg), 0.0};
}

void Circuit::append(Gate gate) {
  if (gate.targets.empty()) throw InputError("gate needs at least one target");
  std::unordered_set<int> seen;
  const auto check = [&](int q) {
    if (q < 0 || q >= num_qubits) {
      throw InputError("gate qubit " + std::to_string(q) +
                       " outside circuit of width " +
                       std::to_string(num_qubits));
    }
    if (!seen.insert(q).second) {
      throw InputError("gate qubit " + std::to_string(q) + " listed twice");
    }
  };
  for (const int q : gate.controls) check(q);
  for (const int q : gate.targets) check(q);

  switch (gate.kind) {
    case GateKind::ControlledSwap:
      if (gate.controls.size() != 1 || gate.targets.size() != 2) {
        throw InputError("controlled swap takes one control and two targets");
      }
      break;
    case GateKind::ControlledNot:
    case GateKind::ControlledRotY:
      if (gate.controls.size() != 1 || gate.targets.size() != 1) {
        throw InputError("controlled gate takes one control and one target");
      }
      break;
    case GateKind::CyclicShift:
      if (gate.controls.size() > 1) {
        throw InputError("cyclic shift takes at most one control");
      }
      if (gate.param != 1.0 && gate.param != -1.0) {
        throw InputError("cyclic shift direction must be +1 or -1");
      }
      break;
    case GateKind::PauliX:
    case GateKind::Hadamard:
    case GateKind::RotY:
    case GateKind::RotZ:
    case GateKind::PhaseShift:
      if (!gate.controls.empty() || gate.targets.size() != 1) {
        throw InputError("single-qubit gate takes exactly one target");
      }
      break;
    case GateKind::MultiControlledPhase:
    case GateKind::MultiToffoli:
      if (gate.targets.size() != 1) {
        throw InputError("multi-controlled gate takes one target");
      }
      break;
    case GateKind::Increment:
    case GateKind::Decrement:
    case GateKind::UnaryToDicke:
      if (!gate.controls.empty()) {
        throw InputError("register gate takes no controls");
      }
      break;
  }
  gates.push_back(std::move(gate));
}

Circuit Circuit::inverse() const {
  Circuit inv(num_qubits);
  inv.gates.reserve(gates.size());
  for (auto it = gates.rbegin(); it != gates.rend(); ++it) {
    inv.gates.push_back(it->inverse());
  }
  return inv;
}

void write_circuit(std::ostream& out, const Circuit& circuit) {
  out << "qubits " << circuit.num_qubits << '\n';
  char buf[40];
  for (const Gate& g : circuit.gates) {
    const KindInfo& info = info_for(g.kind);
    out << info.name;
    for (const int q : g.controls) out << " c" << q;
    for (const int q : g.targets) out << ' ' << q;
    if (info.has_param) {
      const auto res = std::to_chars(buf, buf + sizeof buf, g.param,
                                     std::chars_format::general, 17);
      out << ' ' << std::string_view(buf, res.ptr - buf);
    }
    out << '\n';
  }
}

std::string circuit_to_string(const Circuit& circuit) {
  std::ostringstream out;
  write_circuit(out, circuit);
  return out.str();
}

Circuit read_circuit(std::istream& in) {
  std::string line;
  int line_no = 0;
  const auto fail = [&](const std::string& msg) -> InputError {
    return InputError("circuit line " + std::to_string(line_no) + ": " + msg);
  };

  // Header.
  Circuit circuit(0);
  bool have_header = false;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok) || tok[0] == '#') continue;
    if (!have_header) {
      int n = 0;
      if (tok != "qubits" || !(ls >> n) || n <= 0) {
        throw fail("expected header 'qubits <n>'");
      }
      circuit = Circuit(n);
      have_header = true;
      continue;
    }

    const KindInfo* info = nullptr;
    for (const KindInfo& candidate : kind_table) {
      if (candidate.name == tok) {
        info = &candidate;
        break;
      }
    }
    if (info == nullptr) throw fail("unknown gate kind '" + tok + "'");

    std::vector<std::string> rest;
    while (ls >> tok) rest.push_back(tok);
    Gate gate;
    gate.kind = info->kind;
    if (info->has_param) {
      if (rest.empty()) throw fail("missing parameter");
      const std::string& ptok = rest.back();
      const auto res = std::from_chars(ptok.data(), ptok.data() + ptok.size(),
                                       gate.param);
      if (res.ec != std::errc() || res.ptr != ptok.data() + ptok.size()) {
        throw fail("bad parameter '" + ptok + "'");
      }
      rest.pop_back();
    }
    for (const std::string& qtok : rest) {
      const bool is_control = qtok[0] == 'c';
      const std::string_view digits =
          is_control ? std::string_view(qtok).substr(1) : std::string_view(qtok);
      int q = 0;
      const auto res =
          std::from_chars(digits.data(), digits.data() + digits.size(), q);
      if (res.ec != std::errc() || res.ptr != digits.data() + digits.size()) {
        throw fail("bad qubit token '" + qtok + "'");
      }
      (is_control ? gate.controls : gate.targets).push_back(q);
    }
    try {
      circuit.append(std::move(gate));
    } catch (const InputError& e) {
      throw fail(e.what());
    }
  }
  if (!have_header) throw InputError("circuit text is empty");
  return circuit;
}

Circuit circuit_from_string(const std::string& text) {
  std::istringstream in(text);
  return read_circuit(in);
}

}  // namespace gmqaoa

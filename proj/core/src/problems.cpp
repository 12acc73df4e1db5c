#include "gmqaoa/problems.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>

#include <json.hpp>

#include "gmqaoa/errors.hpp"
#include "gmqaoa/limits.hpp"

namespace gmqaoa {

namespace {

std::uint64_t binomial64(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t c = 1;
  for (int i = 1; i <= k; ++i) c = c * std::uint64_t(n - k + i) / i;
  return c;
}

// All n-bit words of Hamming weight w, ascending (Gosper's hack).
template <typename Visit>
void for_each_weight(int n, int w, Visit&& visit) {
  if (w == 0) {
    visit(std::uint64_t{0});
    return;
  }
  const std::uint64_t limit = std::uint64_t{1} << n;
  std::uint64_t v = (std::uint64_t{1} << w) - 1;
  while (v < limit) {
    visit(v);
    const std::uint64_t c = v & (~v + 1);
    const std::uint64_t r = v + c;
    v = r | (((v ^ r) >> 2) / c);
  }
}

void require_member_cap(std::uint64_t count, const std::string& what) {
  if (count > limits::max_feasible_members) {
    throw CapExceeded(what + " has " + std::to_string(count) +
                      " members, over the cap of " +
                      std::to_string(limits::max_feasible_members));
  }
}

// Accumulates z-product terms with like-term collection and a stable
// (constant, singles, pairs; each ascending) emission order.
class TermBuilder {
 public:
  void add(std::vector<int> qubits, double weight) {
    std::sort(qubits.begin(), qubits.end());
    weights_[std::move(qubits)] += weight;
  }

  std::vector<DiagonalTerm> build() && {
    std::vector<DiagonalTerm> terms;
    terms.reserve(weights_.size());
    for (auto& [qubits, weight] : weights_) {
      if (weight == 0.0) continue;
      terms.push_back(DiagonalTerm{weight, qubits});
    }
    std::stable_sort(terms.begin(), terms.end(),
                     [](const DiagonalTerm& a, const DiagonalTerm& b) {
                       if (a.qubits.size() != b.qubits.size()) {
                         return a.qubits.size() < b.qubits.size();
                       }
                       return a.qubits < b.qubits;
                     });
    return terms;
  }

 private:
  std::map<std::vector<int>, double> weights_;
};

int checked_city(const TspInstance& inst, Bitstring x, int row) {
  int city = -1;
  for (int c = 0; c < inst.n; ++c) {
    if (bit(x, row * inst.n + c)) {
      if (city >= 0) {
        throw InputError("tour row " + std::to_string(row) +
                         " selects more than one city");
      }
      city = c;
    }
  }
  if (city < 0) {
    throw InputError("tour row " + std::to_string(row) + " selects no city");
  }
  return city;
}

}  // namespace

void KvcInstance::validate() const {
  if (n < 1) throw InputError("vertex count must be positive");
  if (k < 0 || k > n) throw InputError("cover size must satisfy 0 <= k <= n");
  for (const auto& [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n) {
      throw InputError("edge endpoint outside vertex range");
    }
    if (u == v) throw InputError("self-loops are not allowed");
  }
}

void TspInstance::validate() const {
  if (n < 1) throw InputError("city count must be positive");
  if (int(dist.size()) != n) throw InputError("distance matrix must be n x n");
  for (int u = 0; u < n; ++u) {
    if (int(dist[u].size()) != n) {
      throw InputError("distance matrix must be n x n");
    }
    for (int v = 0; v < n; ++v) {
      if (!std::isfinite(dist[u][v]) || dist[u][v] < 0) {
        throw InputError("distances must be finite and nonnegative");
      }
    }
    if (dist[u][u] != 0.0) throw InputError("distance diagonal must be zero");
  }
}

void PortfolioInstance::validate() const {
  if (n < 1) throw InputError("asset count must be positive");
  if (d < 0 || d > n) throw InputError("net lot total must satisfy 0 <= d <= n");
  if (penalty_weight < 0) throw InputError("penalty weight must be >= 0");
  if (!mu.empty() && int(mu.size()) != n) {
    throw InputError("expected-return vector must have one entry per asset");
  }
  for (const double m : mu) {
    if (!std::isfinite(m)) throw InputError("expected returns must be finite");
  }
}

FeasibleSet kvc_feasible(const KvcInstance& inst) {
  inst.validate();
  if (inst.n > 24) {
    throw CapExceeded("cover enumeration capped at 24 vertices");
  }
  require_member_cap(binomial64(inst.n, inst.k), "weight-k selection set");
  std::vector<Bitstring> members;
  members.reserve(binomial64(inst.n, inst.k));
  for_each_weight(inst.n, inst.k,
                  [&](std::uint64_t v) { members.push_back(Bitstring(v)); });
  return FeasibleSet::from_members(inst.n, std::move(members));
}

FeasibleSet tsp_feasible(const TspInstance& inst) {
  inst.validate();
  const int cap = inst.fixed_first_city ? 9 : 8;
  if (inst.n > cap) {
    throw CapExceeded("tour enumeration capped at " + std::to_string(cap) +
                      " cities" +
                      (inst.fixed_first_city ? " (fixed first city)" : ""));
  }
  std::vector<int> perm(inst.n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<Bitstring> members;
  do {
    if (inst.fixed_first_city && perm[0] != 0) continue;
    Bitstring x = 0;
    for (int r = 0; r < inst.n; ++r) x |= bit_mask(r * inst.n + perm[r]);
    members.push_back(x);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return FeasibleSet::from_members(inst.n * inst.n, std::move(members));
}

FeasibleSet portfolio_feasible(const PortfolioInstance& inst) {
  inst.validate();
  if (inst.n > 12) {
    throw CapExceeded("portfolio enumeration capped at 12 assets");
  }
  // Vandermonde: sum_k C(n, d+k) C(n, k) = C(2n, n-d).
  require_member_cap(binomial64(2 * inst.n, inst.n - inst.d), "position set");
  std::vector<Bitstring> members;
  for (int k = 0; inst.d + k <= inst.n; ++k) {
    for_each_weight(inst.n, inst.d + k, [&](std::uint64_t longs) {
      for_each_weight(inst.n, k, [&](std::uint64_t shorts) {
        members.push_back(Bitstring(shorts) | (Bitstring(longs) << inst.n));
      });
    });
  }
  return FeasibleSet::from_members(2 * inst.n, std::move(members));
}

double kvc_cost(const KvcInstance& inst, Bitstring x) {
  int covered = 0;
  for (const auto& [u, v] : inst.edges) {
    if (bit(x, u) || bit(x, v)) ++covered;
  }
  return double(covered);
}

double tsp_cost(const TspInstance& inst, Bitstring x) {
  std::vector<int> city(inst.n);
  Bitstring seen = 0;
  for (int r = 0; r < inst.n; ++r) {
    city[r] = checked_city(inst, x, r);
    if (bit(seen, city[r])) {
      throw InputError("tour visits city " + std::to_string(city[r]) +
                       " twice");
    }
    seen |= bit_mask(city[r]);
  }
  if (inst.fixed_first_city && city[0] != 0) {
    throw InputError("tour must start at city 0");
  }
  double total = 0.0;
  for (int r = 0; r < inst.n; ++r) {
    total += inst.dist[city[r]][city[(r + 1) % inst.n]];
  }
  return total;
}

double portfolio_cost(const PortfolioInstance& inst, Bitstring x) {
  const Bitstring reg_mask = (Bitstring{1} << inst.n) - 1;
  const Bitstring shorts = x & reg_mask;
  const Bitstring longs = (x >> inst.n) & reg_mask;
  const double penalty =
      inst.penalty_weight * double(popcount(longs & shorts));
  if (inst.cost_model) return penalty + inst.cost_model(longs, shorts);
  double model = 0.0;
  for (std::size_t i = 0; i < inst.mu.size(); ++i) {
    model -= inst.mu[i] * double(bit(longs, int(i)) - bit(shorts, int(i)));
  }
  return penalty + model;
}

std::vector<DiagonalTerm> kvc_hamiltonian_terms(const KvcInstance& inst) {
  inst.validate();
  std::vector<DiagonalTerm> terms;
  terms.reserve(4 * inst.edges.size());
  for (const auto& [u, v] : inst.edges) {
    const int j = std::min(u, v);
    const int l = std::max(u, v);
    terms.push_back(DiagonalTerm{0.75, {}});
    terms.push_back(DiagonalTerm{-0.25, {j, l}});
    terms.push_back(DiagonalTerm{-0.25, {j}});
    terms.push_back(DiagonalTerm{-0.25, {l}});
  }
  return terms;
}

double evaluate_terms(const std::vector<DiagonalTerm>& terms, Bitstring x) {
  double total = 0.0;
  for (const DiagonalTerm& term : terms) {
    double value = term.weight;
    for (const int q : term.qubits) {
      if (bit(x, q)) value = -value;
    }
    total += value;
  }
  return total;
}

std::vector<double> energy_table(const Encoding& enc) {
  if (enc.num_qubits < 0 || enc.num_qubits > 48) {
    throw InputError("encoding width out of range for a dense table");
  }
  const std::size_t dim = std::size_t{1} << enc.num_qubits;
  if (dim > limits::max_statevector_amps()) {
    throw CapExceeded("energy table would exceed the statevector cap");
  }
  std::vector<double> energy(dim);
  for (std::size_t x = 0; x < dim; ++x) {
    energy[x] = evaluate_terms(enc.terms, Bitstring(x)) + enc.constant_offset;
  }
  return energy;
}

Encoding make_encoding(const Problem& problem) {
  Encoding enc;
  enc.problem = problem;
  enc.num_qubits = problem_num_qubits(problem);
  enc.sense = natural_sense(problem);
  enc.constant_offset = 0.0;

  if (const auto* kvc = std::get_if<KvcInstance>(&problem)) {
    kvc->validate();
    const KvcInstance inst = *kvc;
    enc.feasible = [inst](Bitstring x) { return popcount(x) == inst.k; };
    enc.cost = [inst](Bitstring x) { return kvc_cost(inst, x); };
    enc.terms = kvc_hamiltonian_terms(inst);
    return enc;
  }

  if (const auto* tsp = std::get_if<TspInstance>(&problem)) {
    tsp->validate();
    const TspInstance inst = *tsp;
    enc.feasible = [inst](Bitstring x) {
      try {
        tsp_cost(inst, x);
        return true;
      } catch (const InputError&) {
        return false;
      }
    };
    enc.cost = [inst](Bitstring x) { return tsp_cost(inst, x); };
    // One-hot projector form: sum_r sum_{u != v} d(u,v) x_{r,u} x_{r+1,v},
    // expanded via x_q = (1 - z_q)/2 and collected.
    TermBuilder builder;
    for (int r = 0; r < inst.n; ++r) {
      const int r2 = (r + 1) % inst.n;
      for (int u = 0; u < inst.n; ++u) {
        for (int v = 0; v < inst.n; ++v) {
          if (u == v) continue;
          const double w = inst.dist[u][v];
          if (w == 0.0) continue;
          const int a = r * inst.n + u;
          const int b = r2 * inst.n + v;
          builder.add({}, w / 4);
          builder.add({a}, -w / 4);
          builder.add({b}, -w / 4);
          builder.add({a, b}, w / 4);
        }
      }
    }
    enc.terms = std::move(builder).build();
    return enc;
  }

  const auto& pf = std::get<PortfolioInstance>(problem);
  pf.validate();
  if (pf.cost_model) {
    throw InputError(
        "a custom portfolio cost model has no diagonal term-list form; "
        "encode only the default linear-return model");
  }
  const PortfolioInstance inst = pf;
  enc.feasible = [inst](Bitstring x) {
    const Bitstring reg_mask = (Bitstring{1} << inst.n) - 1;
    return popcount((x >> inst.n) & reg_mask) - popcount(x & reg_mask) ==
           inst.d;
  };
  enc.cost = [inst](Bitstring x) { return portfolio_cost(inst, x); };
  TermBuilder builder;
  for (int i = 0; i < inst.n; ++i) {
    const int s_q = i;
    const int l_q = inst.n + i;
    if (i < int(inst.mu.size()) && inst.mu[i] != 0.0) {
      // -mu_i (x_l - x_s) = -(mu_i/2) z_s + (mu_i/2) z_l.
      builder.add({s_q}, -inst.mu[i] / 2);
      builder.add({l_q}, inst.mu[i] / 2);
    }
    if (inst.penalty_weight != 0.0) {
      // lambda x_s x_l = lambda/4 (1 - z_s - z_l + z_s z_l).
      builder.add({}, inst.penalty_weight / 4);
      builder.add({s_q}, -inst.penalty_weight / 4);
      builder.add({l_q}, -inst.penalty_weight / 4);
      builder.add({s_q, l_q}, inst.penalty_weight / 4);
    }
  }
  enc.terms = std::move(builder).build();
  return enc;
}

FeasibleSet feasible_set(const Problem& problem) {
  return std::visit(
      [](const auto& inst) -> FeasibleSet {
        using T = std::decay_t<decltype(inst)>;
        if constexpr (std::is_same_v<T, KvcInstance>) {
          return kvc_feasible(inst);
        } else if constexpr (std::is_same_v<T, TspInstance>) {
          return tsp_feasible(inst);
        } else {
          return portfolio_feasible(inst);
        }
      },
      problem);
}

double problem_cost(const Problem& problem, Bitstring x) {
  return std::visit(
      [x](const auto& inst) -> double {
        using T = std::decay_t<decltype(inst)>;
        if constexpr (std::is_same_v<T, KvcInstance>) {
          return kvc_cost(inst, x);
        } else if constexpr (std::is_same_v<T, TspInstance>) {
          return tsp_cost(inst, x);
        } else {
          return portfolio_cost(inst, x);
        }
      },
      problem);
}

int problem_num_qubits(const Problem& problem) {
  return std::visit(
      [](const auto& inst) -> int {
        using T = std::decay_t<decltype(inst)>;
        if constexpr (std::is_same_v<T, KvcInstance>) {
          return inst.n;
        } else if constexpr (std::is_same_v<T, TspInstance>) {
          return inst.n * inst.n;
        } else {
          return 2 * inst.n;
        }
      },
      problem);
}

Sense natural_sense(const Problem& problem) {
  return std::holds_alternative<KvcInstance>(problem) ? Sense::Maximize
                                                      : Sense::Minimize;
}

namespace {

using nlohmann::json;

InputError json_error(const std::string& text, const json::exception& e,
                      std::size_t byte) {
  std::size_t line = 1;
  std::size_t col = 1;
  for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return InputError("instance JSON, line " + std::to_string(line) +
                    " column " + std::to_string(col) + ": " + e.what());
}

}  // namespace

Problem parse_problem_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw json_error(text, e, e.byte);
  }
  try {
    if (!doc.is_object() || !doc.contains("type")) {
      throw InputError("instance JSON needs a \"type\" field");
    }
    const std::string type = doc.at("type").get<std::string>();
    if (type == "kvc") {
      KvcInstance inst;
      inst.n = doc.at("n").get<int>();
      inst.k = doc.at("k").get<int>();
      for (const auto& e : doc.value("edges", json::array())) {
        inst.edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
      }
      inst.validate();
      return inst;
    }
    if (type == "tsp") {
      TspInstance inst;
      inst.dist = doc.at("dist").get<std::vector<std::vector<double>>>();
      inst.n = int(inst.dist.size());
      inst.fixed_first_city = doc.value("fixed_first_city", false);
      inst.validate();
      return inst;
    }
    if (type == "portfolio") {
      PortfolioInstance inst;
      inst.n = doc.at("n").get<int>();
      inst.d = doc.at("d").get<int>();
      inst.penalty_weight = doc.value("penalty_weight", 0.0);
      inst.mu = doc.value("mu", std::vector<double>{});
      inst.validate();
      return inst;
    }
    throw InputError("unknown instance type \"" + type +
                     "\" (expected kvc, tsp, or portfolio)");
  } catch (const json::exception& e) {
    throw InputError(std::string("instance JSON: ") + e.what());
  }
}

KvcInstance parse_edge_list(const std::string& text, int k) {
  KvcInstance inst;
  inst.k = k;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  int max_vertex = -1;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first) || first[0] == '#') continue;
    int u = 0;
    int v = 0;
    std::istringstream pair_stream(line);
    std::string trailing;
    if (!(pair_stream >> u >> v) || (pair_stream >> trailing)) {
      throw InputError("edge list line " + std::to_string(line_no) +
                       ": expected 'u v'");
    }
    inst.edges.emplace_back(u, v);
    max_vertex = std::max({max_vertex, u, v});
  }
  if (inst.edges.empty()) throw InputError("edge list has no edges");
  inst.n = max_vertex + 1;
  inst.validate();
  return inst;
}

Problem load_problem(const std::string& path, int edge_list_k) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open instance file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();
  const std::size_t first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) {
    throw InputError("instance file is empty: " + path);
  }
  if (text[first] == '{') return parse_problem_json(text);
  return parse_edge_list(text, edge_list_k);
}

}  // namespace gmqaoa

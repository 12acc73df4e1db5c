#include "gmqaoa/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "gmqaoa/errors.hpp"
#include "gmqaoa/verify.hpp"

namespace gmqaoa {

namespace {

// Interleaved coordinate vector [gamma_1, beta_1, gamma_2, beta_2, ...].
AngleSchedule to_schedule(const std::vector<double>& x) {
  const std::size_t p = x.size() / 2;
  AngleSchedule s = AngleSchedule::zeros(p);
  for (std::size_t r = 0; r < p; ++r) {
    s.gamma[r] = x[2 * r];
    s.beta[r] = x[2 * r + 1];
  }
  return s;
}

std::vector<double> to_coords(const AngleSchedule& s) {
  std::vector<double> x(2 * s.rounds());
  for (std::size_t r = 0; r < s.rounds(); ++r) {
    x[2 * r] = s.gamma[r];
    x[2 * r + 1] = s.beta[r];
  }
  return x;
}

bool better(double candidate, double incumbent, Sense sense) {
  return sense == Sense::Maximize ? candidate > incumbent
                                  : candidate < incumbent;
}

// Shared bookkeeping: every run_schedule call lands in the trace and the
// incumbent is updated with strict first-found tie-breaking.
struct Recorder {
  const FeasibleSet& set;
  const CostTable& costs;
  Sense sense;
  std::size_t budget;
  OptimizationReport report;
  bool have_best = false;

  bool exhausted() const { return report.evaluations >= budget; }

  // Returns false (without evaluating) once the budget is spent.
  bool eval(const AngleSchedule& schedule, double& value) {
    if (exhausted()) return false;
    const SubspaceState state = run_schedule(set, costs, schedule);
    value = expectation(state, costs);
    const double q = optimum_probability(state, costs, sense);
    report.trace.push_back(TraceEntry{schedule, value, q});
    ++report.evaluations;
    if (!have_best || better(value, report.best_expectation, sense)) {
      have_best = true;
      report.best_schedule = schedule;
      report.best_expectation = value;
      report.optimum_prob = q;
    }
    return true;
  }

  OptimizationReport finish() {
    report.approximation_ratio =
        report.best_expectation /
        brute_force_optimum(set, costs, sense).value;
    return std::move(report);
  }
};

}  // namespace

double evaluate(const FeasibleSet& set, const CostTable& costs,
                const AngleSchedule& schedule) {
  return expectation(run_schedule(set, costs, schedule), costs);
}

OptimizationReport grid_search(const FeasibleSet& set, const CostTable& costs,
                               std::size_t p, std::size_t resolution,
                               Sense sense, std::size_t budget) {
  if (resolution < 2) throw InputError("grid resolution must be at least 2");
  std::size_t count = 1;
  for (std::size_t d = 0; d < 2 * p; ++d) {
    if (count > budget / resolution) {
      throw CapExceeded("grid of " + std::to_string(resolution) + "^" +
                        std::to_string(2 * p) +
                        " points exceeds the evaluation budget of " +
                        std::to_string(budget));
    }
    count *= resolution;
  }
  if (count > budget) {
    throw CapExceeded("evaluation budget of " + std::to_string(budget) +
                      " cannot hold the grid");
  }

  Recorder rec{set, costs, sense, budget, {}, false};
  rec.report.trace.reserve(count);
  const double step = 2.0 * std::numbers::pi / double(resolution);
  std::vector<std::size_t> digit(2 * p, 0);
  for (std::size_t it = 0; it < count; ++it) {
    AngleSchedule schedule = AngleSchedule::zeros(p);
    for (std::size_t r = 0; r < p; ++r) {
      schedule.gamma[r] = step * double(digit[2 * r]);
      schedule.beta[r] = step * double(digit[2 * r + 1]);
    }
    double value = 0.0;
    rec.eval(schedule, value);
    // Odometer with gamma_1 as the most significant digit.
    for (std::size_t d = digit.size(); d-- > 0;) {
      if (++digit[d] < resolution) break;
      digit[d] = 0;
    }
  }
  return rec.finish();
}

OptimizationReport simplex_refine(const FeasibleSet& set,
                                  const CostTable& costs,
                                  const AngleSchedule& start, Sense sense,
                                  std::size_t max_iters, double tol,
                                  std::size_t eval_budget) {
  constexpr double kReflect = 1.0;
  constexpr double kExpand = 2.0;
  constexpr double kContract = 0.5;
  constexpr double kShrink = 0.5;
  constexpr double kInitialStep = 0.25;

  if (eval_budget == 0) {
    throw InputError("simplex refinement needs a nonzero evaluation budget");
  }
  Recorder rec{set, costs, sense, eval_budget, {}, false};
  const double sign = sense == Sense::Maximize ? -1.0 : 1.0;
  // Internally always minimized; +inf marks a vertex the budget cut off.
  const auto f = [&](const std::vector<double>& x) {
    double value = 0.0;
    if (!rec.eval(to_schedule(x), value)) {
      return std::numeric_limits<double>::infinity();
    }
    return sign * value;
  };

  const std::size_t dim = 2 * start.rounds();
  std::vector<std::vector<double>> vx;
  std::vector<double> vf;
  {
    const std::vector<double> x0 = to_coords(start);
    vx.push_back(x0);
    vf.push_back(f(x0));
    for (std::size_t i = 0; i < dim; ++i) {
      std::vector<double> xi = x0;
      xi[i] += kInitialStep;
      vx.push_back(xi);
      vf.push_back(f(xi));
    }
  }

  const auto order = [&] {
    std::vector<std::size_t> idx(vx.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(),
              [&](std::size_t a, std::size_t b) { return vf[a] < vf[b]; });
    std::vector<std::vector<double>> nx(vx.size());
    std::vector<double> nf(vf.size());
    for (std::size_t i = 0; i < idx.size(); ++i) {
      nx[i] = std::move(vx[idx[i]]);
      nf[i] = vf[idx[i]];
    }
    vx = std::move(nx);
    vf = std::move(nf);
  };
  const auto diameter = [&] {
    double d = 0.0;
    for (std::size_t i = 1; i < vx.size(); ++i) {
      for (std::size_t c = 0; c < dim; ++c) {
        d = std::max(d, std::abs(vx[i][c] - vx[0][c]));
      }
    }
    return d;
  };

  for (std::size_t iter = 0; dim > 0 && iter < max_iters; ++iter) {
    order();
    if (diameter() < tol || rec.exhausted()) break;

    const std::size_t worst = vx.size() - 1;
    std::vector<double> centroid(dim, 0.0);
    for (std::size_t i = 0; i < worst; ++i) {
      for (std::size_t c = 0; c < dim; ++c) centroid[c] += vx[i][c];
    }
    for (double& c : centroid) c /= double(worst);

    const auto along = [&](double t) {
      std::vector<double> x(dim);
      for (std::size_t c = 0; c < dim; ++c) {
        x[c] = centroid[c] + t * (vx[worst][c] - centroid[c]);
      }
      return x;
    };

    const std::vector<double> xr = along(-kReflect);
    const double fr = f(xr);
    if (fr < vf[0]) {
      const std::vector<double> xe = along(-kReflect * kExpand);
      const double fe = f(xe);
      if (fe < fr) {
        vx[worst] = xe;
        vf[worst] = fe;
      } else {
        vx[worst] = xr;
        vf[worst] = fr;
      }
      continue;
    }
    if (fr < vf[worst - 1]) {
      vx[worst] = xr;
      vf[worst] = fr;
      continue;
    }
    if (fr < vf[worst]) {
      const std::vector<double> xc = along(-kContract);  // outside
      const double fc = f(xc);
      if (fc <= fr) {
        vx[worst] = xc;
        vf[worst] = fc;
        continue;
      }
    } else {
      const std::vector<double> xc = along(kContract);  // inside
      const double fc = f(xc);
      if (fc < vf[worst]) {
        vx[worst] = xc;
        vf[worst] = fc;
        continue;
      }
    }
    for (std::size_t i = 1; i < vx.size(); ++i) {  // shrink toward the best
      for (std::size_t c = 0; c < dim; ++c) {
        vx[i][c] = vx[0][c] + kShrink * (vx[i][c] - vx[0][c]);
      }
      vf[i] = f(vx[i]);
    }
  }
  return rec.finish();
}

std::vector<OptimizationReport> p_sweep(const FeasibleSet& set,
                                        const CostTable& costs,
                                        std::size_t p_max,
                                        std::size_t per_p_budget,
                                        Sense sense) {
  std::vector<OptimizationReport> reports;
  reports.reserve(p_max);
  for (std::size_t p = 1; p <= p_max; ++p) {
    const std::size_t grid_budget = per_p_budget / 2;
    std::size_t resolution = std::max<std::size_t>(
        2, std::size_t(std::floor(
               std::pow(double(std::max<std::size_t>(grid_budget, 1)),
                        1.0 / double(2 * p)))));
    // Guard the floating-point estimate with exact integer arithmetic.
    const auto grid_points = [&](std::size_t r) {
      std::size_t n = 1;
      for (std::size_t d = 0; d < 2 * p; ++d) {
        if (n > per_p_budget / r) return per_p_budget + 1;
        n *= r;
      }
      return n;
    };
    while (resolution > 2 && grid_points(resolution) > grid_budget) {
      --resolution;
    }
    if (grid_points(resolution) > per_p_budget) {
      throw CapExceeded("per-depth budget of " +
                        std::to_string(per_p_budget) +
                        " cannot hold a 2-point grid at depth " +
                        std::to_string(p));
    }

    OptimizationReport grid =
        grid_search(set, costs, p, resolution, sense, per_p_budget);
    const std::size_t remainder =
        per_p_budget > grid.evaluations ? per_p_budget - grid.evaluations : 0;
    if (remainder == 0) {
      reports.push_back(std::move(grid));
      continue;
    }
    OptimizationReport refined = simplex_refine(
        set, costs, grid.best_schedule, sense, 200, 1e-6, remainder);
    refined.evaluations += grid.evaluations;
    refined.trace.insert(refined.trace.begin(),
                         std::make_move_iterator(grid.trace.begin()),
                         std::make_move_iterator(grid.trace.end()));
    reports.push_back(std::move(refined));
  }
  return reports;
}

std::vector<std::size_t> monotonicity_violations(
    const std::vector<OptimizationReport>& reports, Sense sense) {
  std::vector<std::size_t> out;
  for (std::size_t i = 1; i < reports.size(); ++i) {
    const double prev = reports[i - 1].best_expectation;
    const double cur = reports[i].best_expectation;
    const bool worse = sense == Sense::Maximize ? cur < prev - 1e-9
                                                : cur > prev + 1e-9;
    if (worse) out.push_back(i + 1);
  }
  return out;
}

}  // namespace gmqaoa

// Copyright 2026 The dment Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "dment/scan.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <thread>

#include "dment/error.hpp"

namespace dment {

namespace {

constexpr std::array<std::string_view, kMeasureCount> kMeasureNames = {
    "n_ab", "n_ac", "n_bc", "n_a_bc", "n_b_ac", "n_c_ab", "pi_a", "pi_b", "pi_c", "three_pi",
    "three_tangle", "concurrence_ab", "concurrence_ac", "concurrence_bc"};

unsigned resolve_jobs(unsigned jobs, std::size_t work) {
  if (jobs == 0) jobs = std::max(1U, std::thread::hardware_concurrency());
  return static_cast<unsigned>(std::min<std::size_t>(jobs, std::max<std::size_t>(work, 1)));
}

// Runs body(i) for i in [0, n) over `jobs` workers. Each index is written by
// exactly one worker, so callers store into preallocated slots and the output
// order never depends on scheduling. The first exception is rethrown.
template <class Body>
void parallel_for(std::size_t n, unsigned jobs, Body&& body) {
  jobs = resolve_jobs(jobs, n);
  if (jobs <= 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  {
    std::vector<std::jthread> workers;
    workers.reserve(jobs);
    for (unsigned w = 0; w < jobs; ++w) {
      workers.emplace_back([&] {
        for (std::size_t i = next.fetch_add(1); i < n; i = next.fetch_add(1)) {
          try {
            body(i);
          } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure) failure = std::current_exception();
            next.store(n);
          }
        }
      });
    }
  }
  if (failure) std::rethrow_exception(failure);
}

double publish(double v) { return std::abs(v) < kPublishedZero ? 0.0 : v; }

void publish(std::optional<double>& v) {
  if (v) *v = publish(*v);
}

EntanglementReport published(EntanglementReport r) {
  for (double* f : {&r.n_ab, &r.n_ac, &r.n_bc, &r.n_a_bc, &r.n_b_ac, &r.n_c_ab, &r.pi_a, &r.pi_b,
                    &r.pi_c, &r.three_pi}) {
    *f = publish(*f);
  }
  publish(r.three_tangle);
  publish(r.concurrence_ab);
  publish(r.concurrence_ac);
  publish(r.concurrence_bc);
  return r;
}

ReportOptions report_options(const MeasureSet& measures, NegativityConvention convention) {
  return {convention,
          measures.contains(Measure::concurrence_ab) || measures.contains(Measure::concurrence_ac) ||
              measures.contains(Measure::concurrence_bc),
          measures.contains(Measure::three_tangle)};
}

EntanglementReport measure_with(const Propagator& propagator, const DensityMatrix& env,
                                const PureState& system, double theta, const MeasureSet& measures,
                                NegativityConvention convention) {
  const auto full = propagator.evolve(compose(to_density(system), env), theta);
  const auto reduced = partial_trace(full, std::span<const QubitLabel>(system.labels));
  return published(full_report(reduced, report_options(measures, convention)));
}

struct GridPoint {
  double theta;
  std::optional<double> w1, w2, g0;
};

// Bipartite negativities for a W-family point, used by the crossing scan.
struct Bipartite {
  double w1, n_ab, n_ac, n_bc;
  double spread() const {
    return std::max({n_ab, n_ac, n_bc}) - std::min({n_ab, n_ac, n_bc});
  }
};

std::vector<Bipartite> bipartite_scan(double theta, double w2, const CrossingOptions& options) {
  if (!(options.w1_step > 0.0)) throw Error(ErrorCode::invalid_argument, "w1_step must be positive");
  if (!(std::abs(w2) <= 1.0)) throw Error(ErrorCode::invalid_argument, "|w2| must not exceed 1");
  const double w1_max = std::sqrt(std::max(0.0, 1.0 - w2 * w2));
  const Axis axis{0.0, w1_max, options.w1_step};
  const auto w1s = axis.values();
  const Propagator propagator(1.0, options.sites);
  const auto env = to_density(env_qubit(options.c0, options.c1, Normalize::yes));
  const MeasureSet wanted{Measure::n_ab, Measure::n_ac, Measure::n_bc};

  std::vector<Bipartite> out(w1s.size());
  parallel_for(w1s.size(), options.jobs, [&](std::size_t i) {
    const double w1 = w1s[i];
    const double w0 = std::sqrt(std::max(0.0, 1.0 - w1 * w1 - w2 * w2));
    const auto r = measure_with(propagator, env, w_state(w0, w1, w2, Normalize::yes), theta, wanted,
                                options.convention);
    out[i] = {w1, r.n_ab, r.n_ac, r.n_bc};
  });
  return out;
}

CrossingPoint to_crossing(double theta, double w2, const Bipartite& b) {
  return {theta, b.w1, w2, b.n_ab, b.n_ac, b.n_bc, (b.n_ab + b.n_ac + b.n_bc) / 3.0, b.spread()};
}

}  // namespace

std::string_view to_string(Measure m) { return kMeasureNames[static_cast<std::size_t>(m)]; }

Measure parse_measure(std::string_view name) {
  for (std::size_t i = 0; i < kMeasureNames.size(); ++i) {
    if (kMeasureNames[i] == name) return static_cast<Measure>(i);
  }
  throw Error(ErrorCode::unknown_measure, "'" + std::string(name) + "'");
}

const std::array<Measure, kMeasureCount>& all_measures() {
  static const auto all = [] {
    std::array<Measure, kMeasureCount> a{};
    for (std::size_t i = 0; i < kMeasureCount; ++i) a[i] = static_cast<Measure>(i);
    return a;
  }();
  return all;
}

MeasureSet MeasureSet::negativity_based() {
  return {Measure::n_ab,   Measure::n_ac, Measure::n_bc, Measure::n_a_bc, Measure::n_b_ac,
          Measure::n_c_ab, Measure::pi_a, Measure::pi_b, Measure::pi_c,   Measure::three_pi};
}

std::optional<double> value_of(const EntanglementReport& r, Measure m) {
  switch (m) {
    case Measure::n_ab: return r.n_ab;
    case Measure::n_ac: return r.n_ac;
    case Measure::n_bc: return r.n_bc;
    case Measure::n_a_bc: return r.n_a_bc;
    case Measure::n_b_ac: return r.n_b_ac;
    case Measure::n_c_ab: return r.n_c_ab;
    case Measure::pi_a: return r.pi_a;
    case Measure::pi_b: return r.pi_b;
    case Measure::pi_c: return r.pi_c;
    case Measure::three_pi: return r.three_pi;
    case Measure::three_tangle: return r.three_tangle;
    case Measure::concurrence_ab: return r.concurrence_ab;
    case Measure::concurrence_ac: return r.concurrence_ac;
    case Measure::concurrence_bc: return r.concurrence_bc;
  }
  return std::nullopt;
}

std::vector<double> Axis::values() const {
  if (!std::isfinite(start) || !std::isfinite(stop) || !std::isfinite(step)) {
    throw Error(ErrorCode::empty_grid, "axis bounds must be finite");
  }
  if (!(step > 0.0)) throw Error(ErrorCode::empty_grid, "axis step must be positive");
  if (start > stop) throw Error(ErrorCode::empty_grid, "axis start exceeds stop");
  // Index-based, so 0:0.8:0.1 yields exactly nine points.
  const auto count = static_cast<std::size_t>(std::floor((stop - start) / step + 1e-9)) + 1;
  std::vector<double> v(count);
  for (std::size_t i = 0; i < count; ++i) v[i] = start + static_cast<double>(i) * step;
  if (!v.empty() && v.back() > stop) v.back() = stop;
  return v;
}

std::string_view to_string(StateFamily f) { return f == StateFamily::w ? "w" : "ghz"; }

StateFamily parse_state_family(std::string_view text) {
  if (text == "w") return StateFamily::w;
  if (text == "ghz") return StateFamily::ghz;
  throw Error(ErrorCode::invalid_argument, "family must be 'w' or 'ghz', got '" + std::string(text) + "'");
}

EntanglementReport measure_point(const PureState& system, const PureState& environment, double theta,
                                 const MeasureSet& measures, NegativityConvention convention,
                                 CouplingSites sites) {
  const Propagator propagator(1.0, sites);
  return measure_with(propagator, to_density(environment), system, theta, measures, convention);
}

SweepResult run_sweep(const SweepGrid& grid) {
  SweepResult result;
  result.family = grid.family;
  result.measures = grid.measures;
  result.convention = grid.convention;

  std::vector<GridPoint> points;
  const auto thetas = grid.theta.values();
  if (grid.family == StateFamily::w) {
    const auto w1s = grid.w1.values();
    const auto w2s = grid.w2.values();
    for (const double th : thetas) {
      for (const double w1 : w1s) {
        for (const double w2 : w2s) {
          if (w1 * w1 + w2 * w2 > 1.0 + 1e-12) {
            ++result.skipped;
            continue;
          }
          points.push_back({th, w1, w2, std::nullopt});
        }
      }
    }
  } else {
    const auto g0s = grid.g0.values();
    for (const double th : thetas) {
      for (const double g0 : g0s) {
        if (std::abs(g0) > 1.0 + 1e-12) {
          ++result.skipped;
          continue;
        }
        points.push_back({th, std::nullopt, std::nullopt, g0});
      }
    }
  }
  if (points.empty()) {
    throw Error(ErrorCode::empty_grid, "no admissible grid point (" + std::to_string(result.skipped) +
                                           " skipped)");
  }

  const Propagator propagator(1.0, grid.sites);
  const auto env = to_density(env_qubit(grid.c0, grid.c1));
  result.rows.resize(points.size());
  parallel_for(points.size(), grid.jobs, [&](std::size_t i) {
    const auto& p = points[i];
    PureState system;
    if (grid.family == StateFamily::w) {
      const double w0 = std::sqrt(std::max(0.0, 1.0 - *p.w1 * *p.w1 - *p.w2 * *p.w2));
      system = w_state(w0, *p.w1, *p.w2, Normalize::yes);
    } else {
      const double g1 = std::sqrt(std::max(0.0, 1.0 - *p.g0 * *p.g0));
      system = ghz_state(*p.g0, g1, Normalize::yes);
    }
    result.rows[i] = {p.theta, p.w1, p.w2, p.g0,
                      measure_with(propagator, env, system, p.theta, grid.measures, grid.convention)};
  });
  return result;
}

std::vector<EsdInterval> detect_esd(const SweepResult& result, std::string_view measure_name,
                                    double tolerance) {
  const Measure measure = parse_measure(measure_name);
  if (!result.measures.contains(measure)) {
    throw Error(ErrorCode::unknown_measure, "'" + std::string(measure_name) + "' was not computed");
  }
  if (!(tolerance > 0.0)) throw Error(ErrorCode::invalid_argument, "tolerance must be positive");
  if (result.rows.empty()) return {};

  struct Param {
    const char* name;
    std::optional<double> (*get)(const SweepRow&);
  };
  const std::array<Param, 4> params{{
      {"theta", [](const SweepRow& r) -> std::optional<double> { return r.theta; }},
      {"w1", [](const SweepRow& r) { return r.w1; }},
      {"w2", [](const SweepRow& r) { return r.w2; }},
      {"g0", [](const SweepRow& r) { return r.g0; }},
  }};

  const Param* swept = nullptr;
  std::vector<std::pair<std::string, double>> context;
  for (const auto& p : params) {
    const auto first = p.get(result.rows.front());
    if (!first) continue;
    const bool varies = std::any_of(result.rows.begin(), result.rows.end(),
                                    [&](const SweepRow& r) { return p.get(r) != first; });
    if (varies) {
      if (swept != nullptr) {
        throw Error(ErrorCode::invalid_argument,
                    std::string("sweep varies both ") + swept->name + " and " + p.name);
      }
      swept = &p;
    } else {
      context.emplace_back(p.name, *first);
    }
  }
  if (swept == nullptr) swept = &params[0];

  std::vector<EsdInterval> out;
  const std::size_t n = result.rows.size();
  std::size_t i = 0;
  while (i < n) {
    const auto v = value_of(result.rows[i].report, measure);
    if (!v || *v >= tolerance) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j + 1 < n) {
      const auto next = value_of(result.rows[j + 1].report, measure);
      if (!next || *next >= tolerance) break;
      ++j;
    }
    EsdInterval interval;
    interval.measure = std::string(measure_name);
    interval.parameter = swept->name;
    interval.lo = *swept->get(result.rows[i]);
    interval.hi = *swept->get(result.rows[j]);
    interval.boundary = (i == 0 || j == n - 1);
    interval.context = context;
    out.push_back(std::move(interval));
    i = j + 1;
  }
  return out;
}

std::vector<CrossingPoint> find_crossings(double theta, double w2, const CrossingOptions& options) {
  const auto scan = bipartite_scan(theta, w2, options);
  auto is_crossing = [&](const Bipartite& b) {
    const double common = (b.n_ab + b.n_ac + b.n_bc) / 3.0;
    return std::abs(b.n_ab - b.n_ac) < options.cross_tolerance &&
           std::abs(b.n_ac - b.n_bc) < options.cross_tolerance && common >= options.min_common_value;
  };
  std::vector<CrossingPoint> out;
  std::size_t i = 0;
  while (i < scan.size()) {
    if (!is_crossing(scan[i])) {
      ++i;
      continue;
    }
    std::size_t best = i;
    std::size_t j = i;
    while (j + 1 < scan.size() && is_crossing(scan[j + 1])) {
      ++j;
      if (scan[j].spread() < scan[best].spread()) best = j;
    }
    out.push_back(to_crossing(theta, w2, scan[best]));
    i = j + 1;
  }
  return out;
}

CrossingPoint closest_approach(double theta, double w2, const CrossingOptions& options) {
  const auto scan = bipartite_scan(theta, w2, options);
  const auto best = std::min_element(scan.begin(), scan.end(), [](const Bipartite& a, const Bipartite& b) {
    return a.spread() < b.spread();
  });
  return to_crossing(theta, w2, *best);
}

PeriodResult find_period(const PureState& state, Measure measure, double theta_max, double tolerance,
                         const PeriodOptions& options) {
  if (!(options.step > 0.0) || !(theta_max > options.step) || !(tolerance > 0.0)) {
    throw Error(ErrorCode::invalid_argument, "find_period needs step > 0, theta_max > step, tolerance > 0");
  }
  const MeasureSet wanted{measure};
  const auto thetas = Axis{0.0, theta_max, options.step}.values();
  const Propagator propagator(1.0, options.sites);
  const auto env = to_density(env_qubit(options.c0, options.c1, Normalize::yes));

  std::vector<double> f(thetas.size());
  parallel_for(thetas.size(), options.jobs, [&](std::size_t i) {
    const auto r = measure_with(propagator, env, state, thetas[i], wanted, options.convention);
    const auto v = value_of(r, measure);
    if (!v) throw Error(ErrorCode::unknown_measure, std::string(to_string(measure)) + " unavailable");
    f[i] = *v;
  });

  const auto [lo, hi] = std::minmax_element(f.begin(), f.end());
  if (*hi - *lo < tolerance) return {options.step, true};

  const std::size_t n = f.size();
  for (std::size_t m = 1; 2 * m < n; ++m) {
    bool ok = true;
    for (std::size_t k = 0; k + m < n; ++k) {
      if (std::abs(f[k + m] - f[k]) >= tolerance) {
        ok = false;
        break;
      }
    }
    if (ok) return {static_cast<double>(m) * options.step, false};
  }
  throw Error(ErrorCode::no_period_found, "no period up to " + std::to_string(theta_max / 2));
}

}  // namespace dment

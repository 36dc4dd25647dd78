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

#pragma once

#include <array>
#include <bitset>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dment/dynamics.hpp"
#include "dment/measures.hpp"
#include "dment/states.hpp"

namespace dment {

/// Every measure that can appear as a sweep column, in CSV column order.
enum class Measure {
  n_ab,
  n_ac,
  n_bc,
  n_a_bc,
  n_b_ac,
  n_c_ab,
  pi_a,
  pi_b,
  pi_c,
  three_pi,
  three_tangle,
  concurrence_ab,
  concurrence_ac,
  concurrence_bc,
};

inline constexpr std::size_t kMeasureCount = 14;

std::string_view to_string(Measure m);
/// Throws unknown_measure.
Measure parse_measure(std::string_view name);
const std::array<Measure, kMeasureCount>& all_measures();

class MeasureSet {
 public:
  MeasureSet() = default;
  MeasureSet(std::initializer_list<Measure> ms) {
    for (const auto m : ms) insert(m);
  }
  static MeasureSet all() {
    MeasureSet s;
    s.bits_.set();
    return s;
  }
  /// The ten negativity-based measures.
  static MeasureSet negativity_based();

  void insert(Measure m) { bits_.set(static_cast<std::size_t>(m)); }
  bool contains(Measure m) const { return bits_.test(static_cast<std::size_t>(m)); }
  bool empty() const { return bits_.none(); }

  friend bool operator==(const MeasureSet&, const MeasureSet&) = default;

 private:
  std::bitset<kMeasureCount> bits_;
};

/// Value of `m` in the report, if it was computed.
std::optional<double> value_of(const EntanglementReport& r, Measure m);

/// Inclusive arithmetic progression start, start+step, ..., <= stop.
struct Axis {
  double start = 0.0;
  double stop = 0.0;
  double step = 1.0;

  static Axis single(double v) { return {v, v, 1.0}; }

  /// Throws empty_grid when step <= 0 or start > stop.
  std::vector<double> values() const;
  bool is_single() const { return start == stop; }
};

enum class StateFamily { w, ghz };

std::string_view to_string(StateFamily f);
StateFamily parse_state_family(std::string_view text);

struct SweepGrid {
  StateFamily family = StateFamily::w;
  Axis theta = Axis::single(0.0);
  Axis w1 = Axis::single(0.0);
  Axis w2 = Axis::single(0.0);
  Axis g0 = Axis::single(1.0);
  Complex c0 = 1.0;
  Complex c1 = 0.0;
  MeasureSet measures = MeasureSet::all();
  NegativityConvention convention = NegativityConvention::doubled;
  CouplingSites sites = CouplingSites::ab;
  /// Worker threads; 0 picks std::thread::hardware_concurrency().
  unsigned jobs = 0;
};

struct SweepRow {
  double theta = 0.0;
  std::optional<double> w1;
  std::optional<double> w2;
  std::optional<double> g0;
  EntanglementReport report;
};

struct SweepResult {
  StateFamily family = StateFamily::w;
  MeasureSet measures = MeasureSet::all();
  NegativityConvention convention = NegativityConvention::doubled;
  std::vector<SweepRow> rows;
  /// (w1, w2) points outside the unit disc.
  std::size_t skipped = 0;
};

/// Values with magnitude below this are published as exact zero.
inline constexpr double kPublishedZero = 1e-12;

/// Evaluates every admissible grid point, theta outer, then w1, then w2 (or
/// g0 for GHZ). Rows come back in grid order whatever `jobs` is. Throws
/// empty_grid for an empty axis or when no admissible point remains.
SweepResult run_sweep(const SweepGrid& grid);

/// Measures one (theta, state) point the same way run_sweep does.
EntanglementReport measure_point(const PureState& system, const PureState& environment,
                                 double theta, const MeasureSet& measures,
                                 NegativityConvention convention, CouplingSites sites);

inline constexpr double kDefaultEsdTolerance = 1e-6;
inline constexpr double kDefaultCrossTolerance = 5e-3;

struct EsdInterval {
  std::string measure;
  std::string parameter;
  double lo = 0.0;
  double hi = 0.0;
  /// Run touches the first or last grid point.
  bool boundary = false;
  /// Values of the parameters held fixed across the sweep.
  std::vector<std::pair<std::string, double>> context;
};

/// Maximal runs of consecutive rows with value < tolerance, along the single
/// parameter that varies across the rows. Throws unknown_measure when the
/// measure is unknown or was not computed, invalid_argument when several
/// parameters vary.
std::vector<EsdInterval> detect_esd(const SweepResult& result, std::string_view measure,
                                    double tolerance = kDefaultEsdTolerance);

struct CrossingPoint {
  double theta = 0.0;
  double w1 = 0.0;
  double w2 = 0.0;
  double n_ab = 0.0;
  double n_ac = 0.0;
  double n_bc = 0.0;
  double common_value = 0.0;
  double spread = 0.0;  // max - min of the three
};

struct CrossingOptions {
  double cross_tolerance = kDefaultCrossTolerance;
  double w1_step = 1e-3;
  /// Runs whose common value is below this are all-near-zero points, not
  /// crossings, and are not reported.
  double min_common_value = kDefaultCrossTolerance;
  Complex c0 = 1.0;
  Complex c1 = 0.0;
  NegativityConvention convention = NegativityConvention::doubled;
  CouplingSites sites = CouplingSites::ab;
  unsigned jobs = 0;
};

/// Scans w1 over [0, sqrt(1 - w2^2)] at fixed (theta, w2) and returns, for
/// each contiguous run where |N_AB - N_AC| and |N_AC - N_BC| are both below
/// cross_tolerance, the point of smallest spread.
std::vector<CrossingPoint> find_crossings(double theta, double w2, const CrossingOptions& options = {});

/// The scanned point with the smallest spread, crossing or not.
CrossingPoint closest_approach(double theta, double w2, const CrossingOptions& options = {});

struct PeriodOptions {
  double step = 1e-3;
  Complex c0 = 1.0;
  Complex c1 = 0.0;
  NegativityConvention convention = NegativityConvention::doubled;
  CouplingSites sites = CouplingSites::ab;
  unsigned jobs = 0;
};

struct PeriodResult {
  double period = 0.0;
  /// The sampled measure never moves by `tolerance`; period is then `step`.
  bool constant = false;
};

/// Smallest P = m * step with |f(theta + P) - f(theta)| < tolerance for all
/// samples on [0, theta_max]. Throws no_period_found when no shift leaves at
/// least half of the sampled range to compare.
PeriodResult find_period(const PureState& state, Measure measure, double theta_max, double tolerance,
                         const PeriodOptions& options = {});

}  // namespace dment

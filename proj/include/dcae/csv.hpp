// Copyright 2026 The DCAE Simulator Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//
// Plot-ready CSV emission. Formatting is fully pinned down (integers for
// exact revenues, 6-decimal fixed point for satisfactions and means) so
// repeated runs with the same seed produce byte-identical files.

#ifndef DCAE_CSV_HPP
#define DCAE_CSV_HPP

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <string>
#include <vector>

#include "dcae/errors.hpp"
#include "dcae/experiment.hpp"

namespace dcae {

inline std::string format_fixed6(double v) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.6f", v);
  return buffer;
}

// Axis values print as plain integers on the integer axes (m, copies) and
// as fixed-point on the epsilon axis, so 1.0 and 1 never collide.
inline std::string format_axis_value(const std::string& axis, double v) {
  if (axis == "epsilon") return format_fixed6(v);
  return std::to_string(static_cast<long long>(v));
}

inline constexpr const char* kTrialCsvHeader =
    "dcae_revenue,random_revenue,best_revenue,min_revenue,"
    "dcae_satisfaction,random_satisfaction,best_satisfaction,seed";

inline constexpr const char* kSweepCsvHeader =
    "axis_value,dcae_revenue,random_revenue,best_revenue,min_revenue,"
    "dcae_satisfaction,random_satisfaction,best_satisfaction,seed";

// One row per trial, in trial order.
inline void write_trials_csv(std::ostream& out, const std::vector<TrialResult>& trials,
                             std::uint64_t seed) {
  out << kTrialCsvHeader << "\n";
  for (const TrialResult& t : trials) {
    out << t.dcae_revenue << ',' << t.random_revenue << ',' << t.best_revenue << ','
        << t.min_revenue << ',' << format_fixed6(t.dcae_satisfaction) << ','
        << format_fixed6(t.random_satisfaction) << ','
        << format_fixed6(t.best_satisfaction) << ',' << seed << "\n";
  }
}

// One row per axis value; revenue cells are means over trials.
inline void write_sweep_csv(std::ostream& out, const SweepResult& sweep,
                            std::uint64_t seed) {
  out << kSweepCsvHeader << "\n";
  for (std::size_t i = 0; i < sweep.axis_values.size(); ++i) {
    out << format_axis_value(sweep.axis, sweep.axis_values[i]) << ','
        << format_fixed6(sweep.dcae_revenue_mean[i]) << ','
        << format_fixed6(sweep.random_revenue_mean[i]) << ','
        << format_fixed6(sweep.best_revenue_mean[i]) << ','
        << format_fixed6(sweep.min_revenue_mean[i]) << ','
        << format_fixed6(sweep.dcae_satisfaction_mean[i]) << ','
        << format_fixed6(sweep.random_satisfaction_mean[i]) << ','
        << format_fixed6(sweep.best_satisfaction_mean[i]) << ',' << seed << "\n";
  }
}

namespace detail {

template <typename WriteFn>
void emit_file(const std::filesystem::path& path, WriteFn&& write) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open for writing: " + path.string());
  write(out);
  out.flush();
  if (!out) throw IoError("write failed: " + path.string());
}

}  // namespace detail

inline void emit_trials_csv(const std::filesystem::path& path,
                            const std::vector<TrialResult>& trials, std::uint64_t seed) {
  detail::emit_file(path, [&](std::ostream& out) { write_trials_csv(out, trials, seed); });
}

inline void emit_sweep_csv(const std::filesystem::path& path, const SweepResult& sweep,
                           std::uint64_t seed) {
  detail::emit_file(path, [&](std::ostream& out) { write_sweep_csv(out, sweep, seed); });
}

}  // namespace dcae

#endif  // DCAE_CSV_HPP

// Copyright 2026 The sdgen Authors. All Rights Reserved.
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

#include "sdgen/serialize.h"

#include <cmath>
#include <cstdio>
#include <ostream>

namespace sdgen {
namespace {

nlohmann::json optional_number(const std::optional<double>& v) {
  return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
}

nlohmann::json to_json(const MetricSummary& s) {
  return {{"mean", s.mean}, {"std", s.stddev}, {"count", s.count}};
}

nlohmann::json params_json(const std::vector<std::string>& names,
                           const ParamPoint& point) {
  nlohmann::json out = nlohmann::json::object();
  for (std::size_t i = 0; i < names.size() && i < point.size(); ++i) {
    out[names[i]] = point[i];
  }
  return out;
}

}  // namespace

std::string format_number(double value) {
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  if (std::isnan(value)) return "nan";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", value);
  // snprintf honours LC_NUMERIC; the CSV contract is a '.' separator.
  for (char& c : buf) {
    if (c == ',') c = '.';
  }
  return buf;
}

nlohmann::json to_json(const GraphStats& stats) {
  return {
      {"node_count", stats.node_count},
      {"edge_count", stats.edge_count},
      {"edges_per_node",
       {{"numerator", stats.edges_per_node.numerator},
        {"denominator", stats.edges_per_node.denominator},
        {"value", stats.edges_per_node.value()}}},
      {"diameter", stats.diameter ? nlohmann::json(*stats.diameter)
                                  : nlohmann::json(nullptr)},
      {"largest_component_diameter", stats.largest_component_diameter},
      {"weakly_connected", stats.weakly_connected},
  };
}

nlohmann::json to_json(const MetricsReport& report) {
  nlohmann::json out = {
      {"ks_in", report.ks_in},
      {"ks_out", report.ks_out},
      {"msd_in", optional_number(report.msd_in)},
      {"msd_out", optional_number(report.msd_out)},
  };
  if (report.spectral_distance) {
    out["spectral_distance"] = *report.spectral_distance;
  }
  return out;
}

nlohmann::json to_json(const TuneResult& result) {
  return {
      {"model", to_string(result.model)},
      {"objective", to_string(result.objective)},
      {"best_params", params_json(result.param_names, result.best_params)},
      {"best_score", result.best_score},
      {"replicate_std", result.replicate_std},
      {"grid_points", result.score_table.size()},
  };
}

nlohmann::json to_json(const StabilityReport& report) {
  nlohmann::json out = {{"ks_in", to_json(report.ks_in)},
                        {"ks_out", to_json(report.ks_out)},
                        {"msd_in", nullptr},
                        {"msd_out", nullptr}};
  if (report.msd_in) out["msd_in"] = to_json(*report.msd_in);
  if (report.msd_out) out["msd_out"] = to_json(*report.msd_out);
  return out;
}

void write_score_table_csv(const TuneResult& result, std::ostream& out) {
  for (const auto& name : result.param_names) out << name << ',';
  out << "score\n";
  for (const auto& [point, score] : result.score_table) {
    for (double v : point) out << format_number(v) << ',';
    out << format_number(score) << '\n';
  }
}

void write_spectrum_csv(std::span<const double> magnitudes, std::ostream& out) {
  out << "magnitude\n";
  for (double m : magnitudes) out << format_number(m) << '\n';
}

}  // namespace sdgen

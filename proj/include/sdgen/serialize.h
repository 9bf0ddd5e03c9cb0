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

// JSON and CSV renderings of results. CSV numbers use '.' as the decimal
// separator and 6 significant digits regardless of the process locale.

#pragma once

#include <iosfwd>
#include <span>
#include <string>

#include <json.hpp>

#include "sdgen/digraph.h"
#include "sdgen/metrics.h"
#include "sdgen/tuning.h"

namespace sdgen {

/// printf("%.6g") in the C locale; infinities print as "inf".
std::string format_number(double value);

nlohmann::json to_json(const GraphStats& stats);
/// Flat object: ks_in, ks_out, msd_in, msd_out (null when unavailable), plus
/// spectral_distance when computed.
nlohmann::json to_json(const MetricsReport& report);
nlohmann::json to_json(const TuneResult& result);
nlohmann::json to_json(const StabilityReport& report);

/// One row per grid point: parameter columns then "score".
void write_score_table_csv(const TuneResult& result, std::ostream& out);

/// Header "magnitude" then one value per line.
void write_spectrum_csv(std::span<const double> magnitudes, std::ostream& out);

}  // namespace sdgen

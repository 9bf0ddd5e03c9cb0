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

#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "sdgen/digraph.h"
#include "sdgen/generators.h"

namespace sdgen {

/// Normalized cumulative degree distribution: cumulative[i] is the fraction
/// of nodes with degree <= support[i].
struct DegreeCdf {
  std::vector<std::uint32_t> support;
  std::vector<double> cumulative;

  /// Fraction of nodes with degree <= k.
  double at(std::uint32_t k) const;
};

DegreeCdf degree_cdf(const DegreeSequence& seq);

/// max_k |CDF_a(k) - CDF_b(k)| on normalized CDFs, so sequences of different
/// lengths are comparable. Throws std::invalid_argument on empty input or
/// mismatched kinds.
double ks_statistic(const DegreeSequence& reference,
                    const DegreeSequence& generated);

/// Mean squared difference of the two sequences after sorting each one.
/// Empty when the lengths differ. Throws on mismatched kinds.
std::optional<double> msd_sorted(const DegreeSequence& reference,
                                 const DegreeSequence& generated);

struct MetricsReport {
  double ks_in = 0.0;
  double ks_out = 0.0;
  std::optional<double> msd_in;
  std::optional<double> msd_out;
  /// Mean absolute gap of sorted spectra; only filled on request.
  std::optional<double> spectral_distance;
};

/// Degree metrics of `candidate` against `reference`. MSD is present only
/// when the node counts match.
MetricsReport compare(const Digraph& reference, const Digraph& candidate,
                      bool with_spectrum = false);

/// Same metrics from precomputed sequences (e.g. restricted to new nodes).
MetricsReport compare_sequences(const DegreeSequence& reference_in,
                                const DegreeSequence& reference_out,
                                const DegreeSequence& candidate_in,
                                const DegreeSequence& candidate_out);

/// Degrees of the listed nodes, in list order, counted in the whole graph.
/// Throws ValidationError for ids outside the graph.
DegreeSequence restrict_to_new_nodes(const Digraph& g,
                                     std::span<const NodeId> new_node_ids,
                                     DegreeKind kind);

/// Eigenvalues of the 0/1 adjacency matrix. The matrix is first split into
/// strongly connected components (block triangular form); acyclic parts
/// contribute exact zeros and only non-trivial components go to the dense
/// eigensolver. Throws Error if the solver does not converge.
std::vector<std::complex<double>> adjacency_eigenvalues(const Digraph& g);

/// Eigenvalue magnitudes sorted descending; one per node.
std::vector<double> spectrum(const Digraph& g);

/// Mean absolute difference of two descending magnitude lists, the shorter
/// one padded with zeros.
double spectral_distance(std::span<const double> a, std::span<const double> b);

inline constexpr std::uint32_t kDefaultTailStart = 5;

/// Discrete power-law exponent by the approximate maximum-likelihood
/// estimator 1 + n / sum(ln(x / (k_min - 0.5))), where x = k + shift and the
/// sum runs over the n values with x >= k_min. A positive shift fits laws of
/// the form (k + shift)^-a: the shifted degrees are treated as the sample.
///
/// Throws ValidationError when fewer than kMinTailEntries values reach k_min,
/// or when all of them are equal (no tail shape to fit).
double fit_powerlaw_exponent(const DegreeSequence& seq,
                             std::uint32_t k_min = kDefaultTailStart,
                             double shift = 0.0);

inline constexpr std::size_t kMinTailEntries = 50;

/// Closed-form degree laws of sdg output, with c1 = 1 - e1 and c2 = 1 - e2:
/// in-degree p_k ~ k^-(1 + c2)/c2, out-degree p_k ~ (k + out_offset)^-(1 + c1)/c1
/// where out_offset = (1 - c1)/c1 * E/N.
struct TheoreticalExponents {
  double in_exponent = 0.0;
  double out_exponent = 0.0;
  double out_offset = 0.0;
};

/// Throws std::invalid_argument when e1 or e2 equals 1 or N == 0.
TheoreticalExponents theoretical_exponents(const SdgParams& params,
                                           std::uint64_t n_nodes,
                                           std::uint64_t n_edges);

}  // namespace sdgen

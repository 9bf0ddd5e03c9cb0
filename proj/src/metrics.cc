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

#include "sdgen/metrics.h"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>
#include <string>

#include "sdgen/errors.h"

namespace sdgen {
namespace {

void require_same_kind(const DegreeSequence& a, const DegreeSequence& b) {
  if (a.kind != b.kind) {
    throw std::invalid_argument(std::string("cannot compare ") +
                                to_string(a.kind) + "-degrees with " +
                                to_string(b.kind) + "-degrees");
  }
}

std::vector<std::uint32_t> sorted_values(const DegreeSequence& seq) {
  std::vector<std::uint32_t> v = seq.values;
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

double DegreeCdf::at(std::uint32_t k) const {
  const auto it = std::upper_bound(support.begin(), support.end(), k);
  if (it == support.begin()) return 0.0;
  return cumulative[static_cast<std::size_t>(it - support.begin()) - 1];
}

DegreeCdf degree_cdf(const DegreeSequence& seq) {
  if (seq.values.empty()) {
    throw std::invalid_argument("degree_cdf: empty degree sequence");
  }
  const auto values = sorted_values(seq);
  const double n = static_cast<double>(values.size());
  DegreeCdf cdf;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i + 1 == values.size() || values[i + 1] != values[i]) {
      cdf.support.push_back(values[i]);
      cdf.cumulative.push_back(static_cast<double>(i + 1) / n);
    }
  }
  return cdf;
}

double ks_statistic(const DegreeSequence& reference,
                    const DegreeSequence& generated) {
  require_same_kind(reference, generated);
  if (reference.values.empty() || generated.values.empty()) {
    throw std::invalid_argument("ks_statistic: empty degree sequence");
  }
  // Both CDFs are step functions that only move at support points, so the
  // supremum is attained on the merged support.
  const auto a = sorted_values(reference);
  const auto b = sorted_values(generated);
  const double na = static_cast<double>(a.size());
  const double nb = static_cast<double>(b.size());
  std::size_t ia = 0;
  std::size_t ib = 0;
  double gap = 0.0;
  while (ia < a.size() || ib < b.size()) {
    std::uint32_t k;
    if (ib == b.size() || (ia < a.size() && a[ia] <= b[ib])) {
      k = a[ia];
    } else {
      k = b[ib];
    }
    while (ia < a.size() && a[ia] == k) ++ia;
    while (ib < b.size() && b[ib] == k) ++ib;
    gap = std::max(gap, std::abs(static_cast<double>(ia) / na -
                                 static_cast<double>(ib) / nb));
  }
  return gap;
}

std::optional<double> msd_sorted(const DegreeSequence& reference,
                                 const DegreeSequence& generated) {
  require_same_kind(reference, generated);
  if (reference.values.size() != generated.values.size()) return std::nullopt;
  if (reference.values.empty()) return 0.0;
  const auto a = sorted_values(reference);
  const auto b = sorted_values(generated);
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = static_cast<double>(a[i]) - static_cast<double>(b[i]);
    sum += d * d;
  }
  return sum / static_cast<double>(a.size());
}

MetricsReport compare_sequences(const DegreeSequence& reference_in,
                                const DegreeSequence& reference_out,
                                const DegreeSequence& candidate_in,
                                const DegreeSequence& candidate_out) {
  MetricsReport report;
  report.ks_in = ks_statistic(reference_in, candidate_in);
  report.ks_out = ks_statistic(reference_out, candidate_out);
  report.msd_in = msd_sorted(reference_in, candidate_in);
  report.msd_out = msd_sorted(reference_out, candidate_out);
  return report;
}

MetricsReport compare(const Digraph& reference, const Digraph& candidate,
                      bool with_spectrum) {
  MetricsReport report =
      compare_sequences(degree_sequence(reference, DegreeKind::kIn),
                        degree_sequence(reference, DegreeKind::kOut),
                        degree_sequence(candidate, DegreeKind::kIn),
                        degree_sequence(candidate, DegreeKind::kOut));
  if (with_spectrum) {
    report.spectral_distance =
        spectral_distance(spectrum(reference), spectrum(candidate));
  }
  return report;
}

DegreeSequence restrict_to_new_nodes(const Digraph& g,
                                     std::span<const NodeId> new_node_ids,
                                     DegreeKind kind) {
  DegreeSequence seq{kind, {}};
  seq.values.reserve(new_node_ids.size());
  for (NodeId v : new_node_ids) {
    if (v >= g.node_count()) {
      throw ValidationError("node id " + std::to_string(v) +
                            " is not in a graph of " +
                            std::to_string(g.node_count()) + " nodes");
    }
    seq.values.push_back(kind == DegreeKind::kIn ? g.in_degree(v)
                                                 : g.out_degree(v));
  }
  return seq;
}

std::vector<std::complex<double>> adjacency_eigenvalues(const Digraph& g) {
  NodeId n_components = 0;
  const std::vector<NodeId> label = strong_components(g, &n_components);
  std::vector<std::vector<NodeId>> members(n_components);
  for (NodeId v = 0; v < g.node_count(); ++v) members[label[v]].push_back(v);

  // Permuting nodes by component gives a block-triangular matrix whose
  // eigenvalues are those of the diagonal blocks. A single node without a
  // self-loop is a zero block.
  std::vector<std::complex<double>> values;
  values.reserve(g.node_count());
  std::vector<NodeId> local(g.node_count());
  for (NodeId c = 0; c < n_components; ++c) {
    const auto& nodes = members[c];
    if (nodes.size() == 1) {
      values.emplace_back(0.0, 0.0);
      continue;
    }
    const auto size = static_cast<Eigen::Index>(nodes.size());
    for (Eigen::Index i = 0; i < size; ++i) local[nodes[i]] = static_cast<NodeId>(i);
    Eigen::MatrixXd block = Eigen::MatrixXd::Zero(size, size);
    for (NodeId v : nodes) {
      for (NodeId w : g.successors(v)) {
        if (label[w] == c) block(local[v], local[w]) = 1.0;
      }
    }
    Eigen::EigenSolver<Eigen::MatrixXd> solver(block, false);
    if (solver.info() != Eigen::Success) {
      throw Error("eigensolver did not converge on a component of " +
                  std::to_string(nodes.size()) + " nodes");
    }
    const auto& ev = solver.eigenvalues();
    for (Eigen::Index i = 0; i < ev.size(); ++i) values.push_back(ev[i]);
  }
  return values;
}

std::vector<double> spectrum(const Digraph& g) {
  if (g.node_count() == 0) {
    throw std::invalid_argument("spectrum: graph has no nodes");
  }
  std::vector<double> magnitudes;
  for (const auto& z : adjacency_eigenvalues(g)) magnitudes.push_back(std::abs(z));
  std::sort(magnitudes.begin(), magnitudes.end(), std::greater<>());
  return magnitudes;
}

double spectral_distance(std::span<const double> a, std::span<const double> b) {
  const std::size_t n = std::max(a.size(), b.size());
  if (n == 0) return 0.0;
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double x = i < a.size() ? a[i] : 0.0;
    const double y = i < b.size() ? b[i] : 0.0;
    sum += std::abs(x - y);
  }
  return sum / static_cast<double>(n);
}

double fit_powerlaw_exponent(const DegreeSequence& seq, std::uint32_t k_min,
                             double shift) {
  if (k_min == 0) throw std::invalid_argument("k_min must be positive");
  if (!(shift >= 0.0)) throw std::invalid_argument("shift must be >= 0");
  const double x_min = static_cast<double>(k_min);
  const double denominator = x_min - 0.5;
  std::size_t n = 0;
  double log_sum = 0.0;
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (std::uint32_t k : seq.values) {
    const double x = static_cast<double>(k) + shift;
    if (x < x_min) continue;
    ++n;
    log_sum += std::log(x / denominator);
    lo = std::min(lo, x);
    hi = std::max(hi, x);
  }
  if (n < kMinTailEntries) {
    throw ValidationError("insufficient tail: " + std::to_string(n) +
                          " entries >= " + std::to_string(k_min) + ", need " +
                          std::to_string(kMinTailEntries));
  }
  if (lo == hi) {
    throw ValidationError("degenerate tail: all " + std::to_string(n) +
                          " entries are equal");
  }
  return 1.0 + static_cast<double>(n) / log_sum;
}

TheoreticalExponents theoretical_exponents(const SdgParams& params,
                                           std::uint64_t n_nodes,
                                           std::uint64_t n_edges) {
  params.validate();
  if (params.e1 >= 1.0 || params.e2 >= 1.0) {
    throw std::invalid_argument(
        "exponents are undefined for e1 = 1 or e2 = 1 (no preferential step)");
  }
  if (n_nodes == 0) throw std::invalid_argument("n_nodes must be positive");
  const double c1 = 1.0 - params.e1;
  const double c2 = 1.0 - params.e2;
  return {(1.0 + c2) / c2, (1.0 + c1) / c1,
          (1.0 - c1) / c1 * static_cast<double>(n_edges) /
              static_cast<double>(n_nodes)};
}

}  // namespace sdgen

// Copyright 2026 The AGA Authors
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

#ifndef AGA_GRAPH_HPP
#define AGA_GRAPH_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "aga/permutation.hpp"
#include "aga/worlds.hpp"

namespace aga {

// The four values of a two-dimensional marginal distribution, kept as exact
// counts over a common denominator.
struct MarginalPair {
  std::int64_t n00 = 0, n01 = 0, n10 = 0, n11 = 0;
  std::int64_t den = 1;

  double p00() const { return static_cast<double>(n00) / static_cast<double>(den); }
  double p01() const { return static_cast<double>(n01) / static_cast<double>(den); }
  double p10() const { return static_cast<double>(n10) / static_cast<double>(den); }
  double p11() const { return static_cast<double>(n11) / static_cast<double>(den); }
};

// Node and pair concurrence counts of an observation set. Counts are exact
// integers; the weighted adjacency matrix A[i][j] = count(i,j)/N (with node
// weights on the diagonal) is a derived view.
class ConcurrenceGraph {
 public:
  ConcurrenceGraph() = default;

  // Exact tally over the observation set: node_counts[i] = number of images
  // with bit i set, pair_counts[i][j] = number of images with bits i and j
  // both set.
  static ConcurrenceGraph build(const ObservationSet& observations);

  static ConcurrenceGraph from_counts(int n, std::int64_t total_observations,
                                      std::vector<std::int64_t> node_counts,
                                      std::vector<std::int64_t> pair_counts_lower);

  int size() const { return n_; }
  std::int64_t total_observations() const { return total_; }

  // Symmetric count matrix including the diagonal (node counts).
  std::int64_t count(int i, int j) const {
    return counts_[static_cast<std::size_t>(i) * n_ + j];
  }
  double weight(int i, int j) const {
    return static_cast<double>(count(i, j)) / static_cast<double>(total_);
  }

  std::vector<std::int64_t> node_counts() const;
  std::vector<std::int64_t> pair_counts_lower() const;

  // All n(n+1)/2 weights (upper triangle plus diagonal), for binning.
  std::vector<double> all_weights() const;

  // The four probabilities Psi_{i,j}(0,0), (0,1), (1,0), (1,1); i != j.
  MarginalPair marginal_pair(int i, int j) const;

  std::string to_json() const;
  static ConcurrenceGraph from_json(const std::string& text);
  void save(const std::string& path) const;
  static ConcurrenceGraph load(const std::string& path);

 private:
  int n_ = 0;
  std::int64_t total_ = 0;
  std::vector<std::int64_t> counts_;  // n x n, symmetric, diag = node counts
};

// A generic node- and edge-weighted complete graph with real weights on a
// dense symmetric matrix (diagonal = node weights). Used where weights do
// not come from integer counts.
class WeightedGraph {
 public:
  WeightedGraph() = default;
  explicit WeightedGraph(int n) : n_(n), w_(static_cast<std::size_t>(n) * n, 0.0) {}
  explicit WeightedGraph(const ConcurrenceGraph& graph);

  int size() const { return n_; }
  double weight(int i, int j) const { return w_[static_cast<std::size_t>(i) * n_ + j]; }
  void set_weight(int i, int j, double w) {
    w_[static_cast<std::size_t>(i) * n_ + j] = w;
    w_[static_cast<std::size_t>(j) * n_ + i] = w;
  }
  std::vector<double> all_weights() const;

 private:
  int n_ = 0;
  std::vector<double> w_;
};

// Max-norm deviation ||AP - PA||_inf of a permutation, equal (under
// P[i][j] = 1 iff perm(j) = i) to max over all ordered pairs, diagonal
// included, of |A[perm(i)][perm(j)] - A[i][j]|. Exact for count-backed
// graphs: the maximum absolute count difference divided by N.
double deviation(const ConcurrenceGraph& graph, const Permutation& perm);
double deviation(const WeightedGraph& graph, const Permutation& perm);

// Numerator of the exact deviation: max |count(perm i, perm j) - count(i,j)|.
std::int64_t deviation_numerator(const ConcurrenceGraph& graph,
                                 const Permutation& perm);

}  // namespace aga

#endif  // AGA_GRAPH_HPP

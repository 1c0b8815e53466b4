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

#include "aga/graph.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace aga {

ConcurrenceGraph ConcurrenceGraph::build(const ObservationSet& observations) {
  if (observations.total() == 0)
    throw std::invalid_argument("ConcurrenceGraph::build: empty observation set");
  const int n = observations.spec.node_count();
  if (n <= 0) throw std::invalid_argument("ConcurrenceGraph::build: bad dimensions");
  const std::size_t expected_words = (static_cast<std::size_t>(n) + 63) / 64;
  if (observations.words_per_image != expected_words)
    throw std::invalid_argument("ConcurrenceGraph::build: dimension mismatch");

  ConcurrenceGraph graph;
  graph.n_ = n;
  graph.total_ = static_cast<std::int64_t>(observations.total());
  graph.counts_.assign(static_cast<std::size_t>(n) * n, 0);

  // Observations are sparse; iterate set bits only.
  std::vector<int> bits;
  bits.reserve(64);
  for (std::size_t obs = 0; obs < observations.total(); ++obs) {
    const auto img = observations.image(obs);
    bits.clear();
    for (std::size_t k = 0; k < img.size(); ++k) {
      std::uint64_t w = img[k];
      while (w) {
        bits.push_back(static_cast<int>(k * 64 + std::countr_zero(w)));
        w &= w - 1;
      }
    }
    for (std::size_t a = 0; a < bits.size(); ++a) {
      const std::size_t row = static_cast<std::size_t>(bits[a]) * n;
      ++graph.counts_[row + bits[a]];
      for (std::size_t b = a + 1; b < bits.size(); ++b) {
        ++graph.counts_[row + bits[b]];
        ++graph.counts_[static_cast<std::size_t>(bits[b]) * n + bits[a]];
      }
    }
  }
  return graph;
}

ConcurrenceGraph ConcurrenceGraph::from_counts(
    int n, std::int64_t total_observations, std::vector<std::int64_t> node_counts,
    std::vector<std::int64_t> pair_counts_lower) {
  if (n <= 0 || total_observations <= 0)
    throw std::invalid_argument("ConcurrenceGraph::from_counts: bad sizes");
  if (static_cast<int>(node_counts.size()) != n)
    throw std::invalid_argument("ConcurrenceGraph::from_counts: node_counts size");
  if (pair_counts_lower.size() !=
      static_cast<std::size_t>(n) * (n - 1) / 2)
    throw std::invalid_argument("ConcurrenceGraph::from_counts: pair_counts size");

  ConcurrenceGraph graph;
  graph.n_ = n;
  graph.total_ = total_observations;
  graph.counts_.assign(static_cast<std::size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i)
    graph.counts_[static_cast<std::size_t>(i) * n + i] = node_counts[i];
  std::size_t k = 0;
  for (int i = 1; i < n; ++i) {
    for (int j = 0; j < i; ++j, ++k) {
      graph.counts_[static_cast<std::size_t>(i) * n + j] = pair_counts_lower[k];
      graph.counts_[static_cast<std::size_t>(j) * n + i] = pair_counts_lower[k];
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const std::int64_t c = graph.count(i, j);
      const std::int64_t cap =
          std::min(graph.count(i, i), graph.count(j, j));
      if (c < 0 || c > cap || graph.count(i, i) > total_observations)
        throw std::invalid_argument("ConcurrenceGraph::from_counts: invalid counts");
    }
  }
  return graph;
}

std::vector<std::int64_t> ConcurrenceGraph::node_counts() const {
  std::vector<std::int64_t> out(n_);
  for (int i = 0; i < n_; ++i) out[i] = count(i, i);
  return out;
}

std::vector<std::int64_t> ConcurrenceGraph::pair_counts_lower() const {
  std::vector<std::int64_t> out;
  out.reserve(static_cast<std::size_t>(n_) * (n_ - 1) / 2);
  for (int i = 1; i < n_; ++i)
    for (int j = 0; j < i; ++j) out.push_back(count(i, j));
  return out;
}

std::vector<double> ConcurrenceGraph::all_weights() const {
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(n_) * (n_ + 1) / 2);
  for (int i = 0; i < n_; ++i)
    for (int j = i; j < n_; ++j) out.push_back(weight(i, j));
  return out;
}

MarginalPair ConcurrenceGraph::marginal_pair(int i, int j) const {
  if (i == j) throw std::invalid_argument("marginal_pair: i == j");
  if (i < 0 || j < 0 || i >= n_ || j >= n_)
    throw std::invalid_argument("marginal_pair: node out of range");
  MarginalPair m;
  m.den = total_;
  m.n11 = count(i, j);
  m.n10 = count(i, i) - m.n11;
  m.n01 = count(j, j) - m.n11;
  m.n00 = total_ - count(i, i) - count(j, j) + m.n11;
  return m;
}

std::string ConcurrenceGraph::to_json() const {
  nlohmann::json j;
  j["n"] = n_;
  j["total_observations"] = total_;
  j["node_counts"] = node_counts();
  j["pair_counts"] = pair_counts_lower();
  return j.dump();
}

ConcurrenceGraph ConcurrenceGraph::from_json(const std::string& text) {
  const nlohmann::json j = nlohmann::json::parse(text);
  return from_counts(j.at("n").get<int>(),
                     j.at("total_observations").get<std::int64_t>(),
                     j.at("node_counts").get<std::vector<std::int64_t>>(),
                     j.at("pair_counts").get<std::vector<std::int64_t>>());
}

void ConcurrenceGraph::save(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << to_json() << '\n';
}

ConcurrenceGraph ConcurrenceGraph::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open for reading: " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return from_json(buffer.str());
}

WeightedGraph::WeightedGraph(const ConcurrenceGraph& graph)
    : WeightedGraph(graph.size()) {
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      w_[static_cast<std::size_t>(i) * n_ + j] = graph.weight(i, j);
}

std::vector<double> WeightedGraph::all_weights() const {
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(n_) * (n_ + 1) / 2);
  for (int i = 0; i < n_; ++i)
    for (int j = i; j < n_; ++j) out.push_back(weight(i, j));
  return out;
}

std::int64_t deviation_numerator(const ConcurrenceGraph& graph,
                                 const Permutation& perm) {
  if (perm.size() != graph.size())
    throw std::invalid_argument("deviation: permutation length mismatch");
  std::int64_t worst = 0;
  const int n = graph.size();
  for (int i = 0; i < n; ++i) {
    const int pi = perm[i];
    for (int j = 0; j < n; ++j) {
      const std::int64_t d = std::llabs(graph.count(pi, perm[j]) - graph.count(i, j));
      if (d > worst) worst = d;
    }
  }
  return worst;
}

double deviation(const ConcurrenceGraph& graph, const Permutation& perm) {
  return static_cast<double>(deviation_numerator(graph, perm)) /
         static_cast<double>(graph.total_observations());
}

double deviation(const WeightedGraph& graph, const Permutation& perm) {
  if (perm.size() != graph.size())
    throw std::invalid_argument("deviation: permutation length mismatch");
  double worst = 0;
  const int n = graph.size();
  for (int i = 0; i < n; ++i) {
    const int pi = perm[i];
    for (int j = 0; j < n; ++j) {
      const double d = std::abs(graph.weight(pi, perm[j]) - graph.weight(i, j));
      if (d > worst) worst = d;
    }
  }
  return worst;
}

}  // namespace aga

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

#ifndef AGA_BINNING_HPP
#define AGA_BINNING_HPP

#include <span>
#include <string>
#include <vector>

namespace aga {

// A density curve sampled on a uniform grid.
struct DensityCurve {
  double x0 = 0;
  double dx = 0;
  std::vector<double> values;

  double x_at(int i) const { return x0 + dx * i; }
};

// Gaussian-kernel density estimate of the weights, evaluated on a uniform
// grid over [min(w) - 3h, max(w) + 3h].
DensityCurve estimate_density(std::span<const double> weights, double bandwidth,
                              int grid_points);

// Positions of the local maxima of the sampled curve (strictly greater than
// both neighbors; plateau runs collapse to their midpoint).
std::vector<double> local_maxima(const DensityCurve& density);

// An ordered weight-interval partition. Weight zero always has its own bin 0;
// a positive weight falls in bin 1 + (number of boundaries strictly below
// it), so a weight exactly on a boundary goes to the lower bin.
class BinSet {
 public:
  static constexpr int kDefaultGridPoints = 4096;

  BinSet() = default;
  explicit BinSet(std::vector<double> boundaries, double bandwidth = 0,
                  int grid_points = 0);

  // KDE-based bins: zeros are grouped separately, the density of the
  // positive weights is estimated with a Gaussian kernel, and boundaries are
  // placed halfway between consecutive density maxima.
  static BinSet from_kde(std::span<const double> weights, double bandwidth,
                         int grid_points = kDefaultGridPoints);

  // One bin per distinct positive weight (boundaries halfway between
  // consecutive distinct values), plus the zero bin.
  static BinSet exact(std::span<const double> weights);

  int bin_of(double weight) const;
  int bin_count() const { return static_cast<int>(boundaries_.size()) + 2; }
  const std::vector<double>& boundaries() const { return boundaries_; }
  double bandwidth() const { return bandwidth_; }
  int grid_points() const { return grid_points_; }

  std::string to_json() const;
  static BinSet from_json(const std::string& text);

 private:
  std::vector<double> boundaries_;  // strictly increasing
  double bandwidth_ = 0;
  int grid_points_ = 0;
};

}  // namespace aga

#endif  // AGA_BINNING_HPP

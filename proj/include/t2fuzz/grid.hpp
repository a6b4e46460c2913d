// Copyright 2026 The t2fuzz Authors
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

// Sample-grid helpers shared by the scalar checks and the convolution
// engines.

#ifndef T2FUZZ_GRID_HPP_
#define T2FUZZ_GRID_HPP_

#include <algorithm>
#include <cmath>

namespace t2fuzz {

inline double grid_point(int i, int n) {
  return static_cast<double>(i) / static_cast<double>(n);
}

// Values this close (in bucket units) below the next grid point are snapped
// up, so that x = i/n lands in bucket i even when i/n * n rounds down.
inline constexpr double kBucketSnap = 1e-9;

// Floor-bucketing on [0,1]: x in [k/n, (k+1)/n) goes to k, and only x = 1
// (after snapping) goes to n.
inline int bucket_of(double x, int n) {
  if (!(x > 0.0)) return 0;
  const double scaled = x * n;
  double k = std::floor(scaled);
  if (scaled - k > 1.0 - kBucketSnap) k += 1.0;
  return static_cast<int>(std::min(k, static_cast<double>(n)));
}

}  // namespace t2fuzz

#endif  // T2FUZZ_GRID_HPP_

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

// Test-side reference computations. These avoid the library's grids and
// closed forms so they can serve as independent checks.

#ifndef T2FUZZ_TESTS_ORACLES_HPP_
#define T2FUZZ_TESTS_ORACLES_HPP_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "t2fuzz/membership.hpp"

namespace t2fuzz::testing {

using Scalar = std::function<double(double, double)>;

inline double tmin(double x, double y) { return std::min(x, y); }
inline double tprod(double x, double y) { return x * y; }
inline double tluk(double x, double y) { return std::max(x + y - 1.0, 0.0); }

// Candidate points for sups of a piecewise-linear upper semicontinuous f:
// a dense uniform grid plus every breakpoint.
inline std::vector<double> probe(const MembershipFunction& f, int m) {
  std::vector<double> pts;
  for (int i = 0; i <= m; ++i) pts.push_back(static_cast<double>(i) / m);
  for (double b : f.breakpoints()) pts.push_back(b);
  std::sort(pts.begin(), pts.end());
  return pts;
}

// sup{ f(y) : y >= x } and sup{ f(y) : y <= x }, by scanning.
inline double sup_right(const MembershipFunction& f, double x, int m = 2048) {
  double s = f(x);
  for (double p : probe(f, m)) {
    if (p >= x) s = std::max(s, f(p));
  }
  return s;
}
inline double sup_left(const MembershipFunction& f, double x, int m = 2048) {
  double s = f(x);
  for (double p : probe(f, m)) {
    if (p <= x) s = std::max(s, f(p));
  }
  return s;
}

// sup{ star(f(y), g(z)) : comb(y, z) = x } for a combiner continuous and
// non-decreasing in z. For each y on a dense grid, the level set in z is an
// interval [lo, hi] found by bisection; the sup of g on it is scanned.
inline double level_set_sup(const Scalar& star, const Scalar& comb, const MembershipFunction& f,
                            const MembershipFunction& g, double x, int m = 1024) {
  double best = -1.0;
  const auto gp = probe(g, m);
  for (int i = 0; i <= m; ++i) {
    const double y = static_cast<double>(i) / m;
    if (comb(y, 0.0) > x + 1e-15 || comb(y, 1.0) < x - 1e-15) continue;
    // smallest z with comb(y, z) >= x and largest z with comb(y, z) <= x
    double a = 0.0, b = 1.0;
    for (int k = 0; k < 60; ++k) {
      const double mid = 0.5 * (a + b);
      (comb(y, mid) >= x ? b : a) = mid;
    }
    const double lo = comb(y, 0.0) >= x ? 0.0 : b;
    a = 0.0;
    b = 1.0;
    for (int k = 0; k < 60; ++k) {
      const double mid = 0.5 * (a + b);
      (comb(y, mid) <= x ? a : b) = mid;
    }
    const double hi = comb(y, 1.0) <= x ? 1.0 : a;
    double gs = std::max(g(lo), g(hi));
    for (double z : gp) {
      if (z >= lo && z <= hi) gs = std::max(gs, g(z));
    }
    best = std::max(best, star(f(y), gs));
  }
  return best;
}

// Random piecewise-linear member of the normal convex class: a trapezoid
// with arbitrary real breakpoints (not on any lattice).
inline MembershipFunction random_trapezoid(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  double p = u(rng), q = u(rng);
  if (p > q) std::swap(p, q);
  std::vector<double> t, v;
  if (p > 0.0) {
    t.push_back(0.0);
    v.push_back(u(rng));
  }
  t.push_back(p);
  v.push_back(1.0);
  if (q > p) {
    t.push_back(q);
    v.push_back(1.0);
  }
  if (q < 1.0) {
    t.push_back(1.0);
    v.push_back(u(rng));
  }
  return MembershipFunction::from_samples(t, v);
}

}  // namespace t2fuzz::testing

#endif  // T2FUZZ_TESTS_ORACLES_HPP_

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

// Seeded generators for members of the truth-value lattice (normal, convex
// membership functions) and the finite families the axiom harness samples.

#ifndef T2FUZZ_GENERATORS_HPP_
#define T2FUZZ_GENERATORS_HPP_

#include <cstdint>
#include <random>

#include "t2fuzz/membership.hpp"

namespace t2fuzz {

// Breakpoints are drawn from multiples of 1/kPositionLattice and heights from
// multiples of 1/kHeightLattice, so every breakpoint is a sample point of any
// grid whose resolution is a multiple of kPositionLattice and 1 - t is exact.
inline constexpr int kPositionLattice = 64;
inline constexpr int kHeightLattice = 256;

class LatticeGenerator {
 public:
  explicit LatticeGenerator(std::uint64_t seed) : rng_(seed) {}

  // Continuous tent or trapezoid with an optional knee on each shoulder.
  MembershipFunction next_tent();
  // Tent with a jump on one or both shoulders. The value at a jump is the
  // larger one-sided limit, so the function stays upper semicontinuous.
  MembershipFunction next_jump();
  // Single-peak tent with the peak in [1/4, 3/4]; slopes stay at most 4.
  MembershipFunction next_interior_tent();
  // Either of the first two with equal probability.
  MembershipFunction next();

  // Uniform integer in [lo, hi].
  int uniform(int lo, int hi);

 private:
  std::mt19937_64 rng_;
};

// Largest |slope| over the pieces; +inf if f has a jump.
double lipschitz_constant(const MembershipFunction& f);

// x rounded to the nearest multiple of 1/kPositionLattice.
double snap_to_lattice(double x);

}  // namespace t2fuzz

#endif  // T2FUZZ_GENERATORS_HPP_

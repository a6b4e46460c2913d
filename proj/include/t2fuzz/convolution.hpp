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

// Convolution of membership functions:
//
//   (f op g)(x) = sup { f(y) star g(z) : combiner(y, z) = x }
//
// with a grid engine for arbitrary (star, combiner), exact engines for
// characteristic-function inputs, and an independent brute-force oracle.

#ifndef T2FUZZ_CONVOLUTION_HPP_
#define T2FUZZ_CONVOLUTION_HPP_

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "t2fuzz/interval_ops.hpp"
#include "t2fuzz/membership.hpp"

namespace t2fuzz {

// Which slot the combiner fills: a t-norm-like combiner (meet-like) or a
// t-conorm-like one (join-like). Metadata only; the formula is the same.
enum class ConvolutionKind { kMeet, kJoin };
enum class Engine { kGrid, kExact, kAuto };

std::string_view to_string(ConvolutionKind k);
std::string_view to_string(Engine e);

inline constexpr int kDefaultGridN = 256;
inline constexpr int kDefaultRefineDepth = 6;

struct ConvolutionOperator {
  BinaryOp star;
  BinaryOp combiner;
  ConvolutionKind kind = ConvolutionKind::kMeet;
  Engine engine = Engine::kAuto;
  int grid_n = kDefaultGridN;
  // Halvings of the sample spacing tried for buckets the main sweep missed.
  int refine_depth = kDefaultRefineDepth;
};

// Numeric image of a convolution: bucket k holds the largest candidate whose
// combined argument fell in [k/n, (k+1)/n) (bucket n: exactly 1).
struct GridFunction {
  int n = 0;
  std::vector<double> values;
  std::vector<char> filled;
  // The star is discontinuous, so sampled sups may miss the true sup.
  bool lower_bound = false;
  int refined_buckets = 0;

  bool complete() const;
  int unfilled_count() const;
  double at(int k) const { return values.at(k); }
};

// Connects the filled buckets (k/n, value) by straight lines; constant beyond
// the first and last filled bucket.
MembershipFunction lift(const GridFunction& g);

enum class EngineUsed { kGrid, kExactPoints, kExactIntervals, kExactNeutral };

std::string_view to_string(EngineUsed e);

struct ConvolutionResult {
  std::variant<MembershipFunction, GridFunction> value;
  EngineUsed engine = EngineUsed::kGrid;

  bool is_exact() const { return engine != EngineUsed::kGrid; }
  const MembershipFunction& exact() const { return std::get<MembershipFunction>(value); }
  const GridFunction& grid() const { return std::get<GridFunction>(value); }
  // Bucket view at resolution n: exact results are sampled at k/n.
  std::vector<double> samples(int n) const;
};

// Raised when the combiner is not surjective onto [0,1].
class NonSurjectiveCombiner : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

// Raised when engine == kExact but no exact path applies.
class ExactEngineUnavailable : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

// A ConvolutionOperator prepared for repeated use: the combiner's bucket
// table and the gates of the exact engines are computed once.
class Convolver {
 public:
  explicit Convolver(ConvolutionOperator opr);

  const ConvolutionOperator& op() const noexcept { return opr_; }
  int grid_n() const noexcept { return opr_.grid_n; }

  ConvolutionResult convolve(const MembershipFunction& f,
                             const MembershipFunction& g) const;
  // Forces the grid engine.
  GridFunction convolve_grid(const MembershipFunction& f,
                             const MembershipFunction& g) const;
  // Grid engine on pre-sampled inputs (values at k/n, k = 0..n).
  GridFunction convolve_samples(std::span<const double> f,
                                std::span<const double> g) const;

  // Star acts as boolean AND on {0,1}: chi_x op chi_y = chi_{x combiner y}.
  bool exact_points_available() const noexcept { return exact_points_; }
  // Star is a continuous t-norm and the combiner is continuous and
  // increasing: chi-intervals map to chi-intervals.
  bool exact_intervals_available() const noexcept { return exact_intervals_; }
  // Star and combiner share the neutral element of `kind` and star has the
  // matching annihilator.
  bool exact_neutral_available() const noexcept { return exact_neutral_; }
  // Sampled sups are lower bounds (discontinuous star).
  bool lower_bound_mode() const noexcept { return lower_bound_; }

  std::optional<MembershipFunction> try_exact(const MembershipFunction& f,
                                              const MembershipFunction& g,
                                              EngineUsed* used = nullptr,
                                              bool allow_neutral = true) const;

 private:
  void sweep_refine(std::span<const double> fv, std::span<const double> gv,
                    const MembershipFunction* f, const MembershipFunction* g,
                    GridFunction& out) const;

  ConvolutionOperator opr_;
  std::vector<int> bucket_;  // (n+1)^2 combiner buckets, row-major in y
  bool exact_points_ = false;
  bool exact_intervals_ = false;
  bool exact_neutral_ = false;
  bool lower_bound_ = false;
};

ConvolutionResult convolve(const ConvolutionOperator& opr, const MembershipFunction& f,
                           const MembershipFunction& g);

// star(f(1), g(1)). Requires the combiner to reach 1 only at (1,1).
double convolve_boundary_value(const ConvolutionOperator& opr,
                               const MembershipFunction& f, const MembershipFunction& g);

// Dense enumeration at pairs_n samples per axis (raised to at least
// 4 * grid_n), bucketed at grid_n. Shares no code with the grid engine.
GridFunction convolve_bruteforce(const ConvolutionOperator& opr,
                                 const MembershipFunction& f,
                                 const MembershipFunction& g, int pairs_n);

// chi_[a,b] op chi_[c,d]. Exact chi_[a comb c, b comb d] when the interval
// engine's gate holds, otherwise the grid engine.
ConvolutionResult closure_on_intervals(const ConvolutionOperator& opr, UnitValue a,
                                       UnitValue b, UnitValue c, UnitValue d);

// Discrete analogues of membership in the lattice for grid results.
bool grid_is_normal(const GridFunction& g, double eps);
bool grid_is_convex(const GridFunction& g, double eps);

// Grid result equal to the characteristic function of one bucket / one run of
// buckets (values within eps of 0 or 1 on filled buckets).
std::optional<int> grid_characteristic_point(const GridFunction& g, double eps);
std::optional<std::pair<int, int>> grid_characteristic_interval(const GridFunction& g,
                                                                double eps);

}  // namespace t2fuzz

#endif  // T2FUZZ_CONVOLUTION_HPP_

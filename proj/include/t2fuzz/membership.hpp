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

// Exact piecewise-linear membership functions on [0,1] with jumps.
//
// A function is stored as strictly increasing breakpoints 0 = t_0 < ... <
// t_m = 1, the value attained at each breakpoint, and for every open piece
// (t_i, t_{i+1}) its two one-sided limits. Inside a piece the function is the
// affine interpolation of those limits. Values at breakpoints are therefore
// independent of the neighbouring pieces, which is what lets characteristic
// functions and the step witnesses live in the same type as tents.
//
// Every constructor canonicalizes: interior breakpoints whose value continues
// both neighbouring pieces on a common line are removed. Two canonical
// functions are equal iff they are structurally identical.

#ifndef T2FUZZ_MEMBERSHIP_HPP_
#define T2FUZZ_MEMBERSHIP_HPP_

#include <array>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "t2fuzz/interval_ops.hpp"

namespace t2fuzz {

class MembershipFunction {
 public:
  // One-sided limits of an open piece: `left` at t_i+, `right` at t_{i+1}-.
  struct Piece {
    double left;
    double right;
    friend bool operator==(const Piece&, const Piece&) = default;
  };
  // The same piece as a*t + b.
  struct Affine {
    double a;
    double b;
  };

  // Validates and canonicalizes. Throws std::invalid_argument if breakpoints
  // do not run strictly from 0 to 1, sizes disagree, or a value leaves [0,1].
  static MembershipFunction create(std::vector<double> breakpoints,
                                   std::vector<double> point_values,
                                   std::vector<Piece> pieces);
  // Same, with pieces given as affine maps.
  static MembershipFunction from_affine(std::vector<double> breakpoints,
                                        std::vector<double> point_values,
                                        std::span<const Affine> pieces);
  // Continuous interpolation through (t_k, v_k); t must start at 0, end at 1.
  static MembershipFunction from_samples(std::vector<double> t,
                                         std::vector<double> v);

  static MembershipFunction constant(double c);

  double operator()(double t) const;
  double eval(UnitValue x) const { return (*this)(x.value()); }

  // Values at i/n for i = 0..n.
  std::vector<double> sample(int n) const;

  std::span<const double> breakpoints() const noexcept { return breakpoints_; }
  std::span<const double> point_values() const noexcept { return values_; }
  std::span<const Piece> pieces() const noexcept { return pieces_; }
  std::size_t num_pieces() const noexcept { return pieces_.size(); }
  Affine affine(std::size_t piece) const;

  // Structural equality of canonical forms.
  friend bool operator==(const MembershipFunction&, const MembershipFunction&) = default;

 private:
  MembershipFunction() = default;
  void canonicalize();

  std::vector<double> breakpoints_;
  std::vector<double> values_;
  std::vector<Piece> pieces_;
};

// Characteristic functions of {x} and of [a, b].
MembershipFunction chi_point(UnitValue x);
MembershipFunction chi_interval(UnitValue a, UnitValue b);  // throws if a > b

// Step witness: 0 on [0, x), t on [x, 1].
MembershipFunction w_func(UnitValue x);
// Affine witness t -> (x - 1) t + 1, decreasing from 1 to x.
MembershipFunction v_func(UnitValue x);

// Continuous tent: left_height at 0 rising to 1 at `peak`, falling to
// right_height at 1.
MembershipFunction tent(UnitValue peak, UnitValue left_height,
                        UnitValue right_height);

// Running suprema from the left (f^L) and from the right (f^R).
MembershipFunction envelope_left(const MembershipFunction& f);
MembershipFunction envelope_right(const MembershipFunction& f);

// Exact supremum over breakpoint values and one-sided limits.
double sup_of(const MembershipFunction& f);
bool is_normal(const MembershipFunction& f);

struct ConvexityResult {
  bool convex = true;
  // x < y < z with f(y) < min(f(x), f(z)) when not convex.
  std::optional<std::array<double, 3>> witness;
};

// Quasiconcavity (the fuzzy-set notion of convexity), decided exactly.
ConvexityResult is_convex(const MembershipFunction& f);

// Normal and convex: a member of the truth-value lattice.
bool in_lattice(const MembershipFunction& f);

// t -> f(1 - t).
MembershipFunction negate(const MembershipFunction& f);

// Pointwise min / max.
MembershipFunction pointwise_min(const MembershipFunction& f,
                                 const MembershipFunction& g);
MembershipFunction pointwise_max(const MembershipFunction& f,
                                 const MembershipFunction& g);

// f <= g everywhere, decided on the merged breakpoints and piece limits.
bool pointwise_leq(const MembershipFunction& f, const MembershipFunction& g,
                   double eps = 0.0);

// eps == 0: structural equality. eps > 0: |f - g| <= eps at every merged
// breakpoint and one-sided limit.
bool func_eq(const MembershipFunction& f, const MembershipFunction& g,
             double eps = 0.0);

// Same number of breakpoints, each breakpoint, value and limit within eps;
// falls back to func_eq(f, g, eps). Used where a breakpoint position is itself
// the result of a floating-point operation (e.g. the support of chi_{x op y}).
bool near_equal(const MembershipFunction& f, const MembershipFunction& g,
                double eps);

// [a, b] when f is the characteristic function of a closed interval
// (a == b for a point), std::nullopt otherwise.
std::optional<std::pair<double, double>> characteristic_support(
    const MembershipFunction& f);

}  // namespace t2fuzz

#endif  // T2FUZZ_MEMBERSHIP_HPP_

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

// Binary operations on the unit interval: the t-norm / t-conorm catalog,
// user-supplied table operations, and grid-exhaustive scalar axiom checks.

#ifndef T2FUZZ_INTERVAL_OPS_HPP_
#define T2FUZZ_INTERVAL_OPS_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace t2fuzz {

// Raised when a documented precondition of an operation does not hold.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A real number in [0,1]. Construction rejects anything else (including NaN).
class UnitValue {
 public:
  explicit UnitValue(double v);
  double value() const noexcept { return value_; }
  friend bool operator==(UnitValue, UnitValue) = default;

 private:
  double value_;
};

enum class OpClass { kTNorm, kTConorm, kOther };

std::string_view to_string(OpClass c);

// A named binary operation on [0,1]. The declared class and continuity flag
// are metadata only; nothing in the harness trusts them without a check.
class BinaryOp {
 public:
  using Fn = std::function<double(double, double)>;

  BinaryOp(std::string name, Fn fn, OpClass declared_class,
           bool declared_continuous, std::vector<double> params = {},
           bool closed_form = false);

  double operator()(double x, double y) const { return fn_(x, y); }

  const std::string& name() const noexcept { return name_; }
  OpClass declared_class() const noexcept { return declared_class_; }
  bool declared_continuous() const noexcept { return declared_continuous_; }
  std::span<const double> params() const noexcept { return params_; }
  // True for catalog entries given by an exact real formula.
  bool closed_form() const noexcept { return closed_form_; }
  // Name plus parameters, e.g. "hamacher(2)".
  std::string label() const;

 private:
  std::string name_;
  Fn fn_;
  OpClass declared_class_;
  bool declared_continuous_;
  std::vector<double> params_;
  bool closed_form_;
};

struct ParamSpec {
  std::string name;
  double min;
  double max;  // inclusive; +inf for unbounded
  std::string description;
};

struct CatalogEntry {
  std::string name;
  OpClass declared_class;
  bool declared_continuous;
  bool broken;  // deliberately violates at least one of T1-T4
  std::string formula;
  std::vector<ParamSpec> params;
};

// Every entry the catalog understands, in manifest order.
const std::vector<CatalogEntry>& catalog_entries();

// Throws std::invalid_argument for unknown names, a wrong parameter count or
// parameters outside the family's domain.
BinaryOp catalog_lookup(std::string_view name,
                        std::span<const double> params = {});

// Dense (m+1)x(m+1) table of values at (i/m, j/m), row-major in x. Off-grid
// points are bilinearly interpolated.
BinaryOp table_op(std::string name, int m, std::vector<double> values);

enum class ScalarAxiom { kT1, kT2, kT3, kT4, kT4Prime };

std::string_view to_string(ScalarAxiom a);

enum class Verdict { kPass, kFail, kSkipped };

std::string_view to_string(Verdict v);

// Outcome of one scalar axiom. On failure `witness` holds the points
// (x, y) for T1, (x, y, z) for T2, (x1, x2, y) for T3 and (x) for T4/T4'.
// `side` says which argument was involved for T3/T4/T4' ("left"/"right").
struct ScalarCheck {
  ScalarAxiom axiom = ScalarAxiom::kT1;
  Verdict verdict = Verdict::kPass;
  std::vector<double> witness;
  std::string side;
  double lhs = 0.0;
  double rhs = 0.0;
  std::uint64_t cases = 0;
};

// Sampled, never proven: a jump that does not shrink when the grid is
// refined is taken as evidence of a discontinuity.
struct ContinuityEstimate {
  double max_jump = 0.0;         // at grid_n
  double max_jump_refined = 0.0; // at 2 * grid_n
  bool continuous = true;
};

struct ScalarReport {
  std::string op;
  int grid_n = 0;
  int assoc_grid_n = 0;
  double eps = 0.0;
  std::vector<ScalarCheck> checks;  // T1, T2, T3, T4, T4' in that order
  ContinuityEstimate continuity;

  const ScalarCheck& get(ScalarAxiom a) const;
  bool passes(ScalarAxiom a) const { return get(a).verdict == Verdict::kPass; }
  bool is_t_norm() const;
  bool is_t_conorm() const;
  // Failed checks among T1-T4 (t-norm reading) or T1-T3,T4' (t-conorm).
  std::vector<ScalarAxiom> failures(bool conorm = false) const;
};

inline constexpr double kDefaultScalarEps = 1e-12;
inline constexpr int kDefaultAssocGrid = 64;

// Checks T1, T3, T4, T4' over all pairs of grid points i/grid_n and T2 over
// all triples of the coarser assoc grid. Always produces a report.
ScalarReport check_scalar_axioms(const BinaryOp& op, int grid_n,
                                 double eps = kDefaultScalarEps,
                                 int assoc_grid_n = kDefaultAssocGrid);

ContinuityEstimate estimate_continuity(const BinaryOp& op, int grid_n);

struct OneIffBothOne {
  bool holds = true;
  std::optional<std::pair<double, double>> witness;
};

// True iff op(x, y) = 1 on the grid happens exactly at (1, 1).
OneIffBothOne is_one_iff_both_one(const BinaryOp& op, int grid_n,
                                  double eps = kDefaultScalarEps);

// True iff op maps {0,1}^2 like boolean AND, i.e. op(1,1)=1 and op is 0 on
// the other three corners.
bool acts_as_and_on_booleans(const BinaryOp& op);

struct SurjectivityCheck {
  bool surjective = true;
  double image_min = 0.0;
  double image_max = 1.0;
  int first_missing_bucket = -1;  // at resolution grid_n, -1 if none
};

// Every bucket [k/n, (k+1)/n) must be hit when sampling at 4n per axis, or
// the op must look continuous and attain both 0 and 1.
SurjectivityCheck check_surjective(const BinaryOp& op, int grid_n);

}  // namespace t2fuzz

#endif  // T2FUZZ_INTERVAL_OPS_HPP_

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

// Lifted axiom harness: checks O1-O7 (and O3', O5') for a convolution
// operator over finite function families, and builds the counterexample
// witnesses that carry a scalar axiom failure up to the lifted level.

#ifndef T2FUZZ_AXIOMS_HPP_
#define T2FUZZ_AXIOMS_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "t2fuzz/convolution.hpp"
#include "t2fuzz/interval_ops.hpp"
#include "t2fuzz/membership.hpp"

namespace t2fuzz {

enum class LiftedAxiom { kO1, kO2, kO3, kO3Prime, kO4, kO5, kO5Prime, kO6, kO7 };

std::string_view to_string(LiftedAxiom a);
std::optional<LiftedAxiom> parse_lifted_axiom(std::string_view id);
// O1-O4 together with O3'.
bool is_basic(LiftedAxiom a);

enum class Mode { kExact, kGrid, kLowerBound };

std::string_view to_string(Mode m);

// The inputs of one axiom instance and the values on both sides at `point`.
// Function order per axiom: O1 (f, g); O2 (f, g, h); O3/O3' (f);
// O4 (f, g, h) with g below h; O5/O5' (chi_[0,1], chi_[a,b]); O6/O7 (f, g).
struct Witness {
  std::vector<MembershipFunction> functions;
  std::vector<std::string> labels;
  double point = 1.0;
  double lhs = 0.0;
  double rhs = 0.0;
  std::string description;
};

struct AxiomReport {
  LiftedAxiom axiom = LiftedAxiom::kO1;
  std::string family;
  Verdict verdict = Verdict::kPass;
  Mode mode = Mode::kExact;
  int grid_n = 0;
  double eps = 0.0;
  std::optional<Witness> witness;
  int instances = 0;
  // Largest raw per-bucket |LHS - RHS| seen (grid instances), 0 in exact mode.
  double max_residual = 0.0;
  std::string note;

  std::string id() const { return std::string(to_string(axiom)); }
};

enum class FamilyKind { kPoints, kIntervals, kV, kW, kRandom, kCustom };

struct FunctionFamily {
  std::string name;
  FamilyKind kind = FamilyKind::kCustom;
  std::string description;
  std::vector<MembershipFunction> members;
  std::vector<std::string> labels;
};

struct FamilySizes {
  int points = 21;
  int intervals = 15;
  int v = 11;
  int w = 11;
  int random = 50;
};

// chi_{x} at x = i/(n-1), snapped to the 1/64 lattice.
FunctionFamily points_family(int n);
// chi_[a,b] over endpoints i/m for the smallest m giving n intervals.
FunctionFamily intervals_family(int n);
FunctionFamily v_family(int n);
FunctionFamily w_family(int n);
FunctionFamily random_family(int n, std::uint64_t seed);
// Continuous single-peak tents with the peak in [1/4, 3/4].
FunctionFamily tent_family(int n, std::uint64_t seed);
std::vector<FunctionFamily> default_families(std::uint64_t seed = 42,
                                             const FamilySizes& sizes = {});

inline constexpr double kDefaultHarnessEps = 1e-6;
inline constexpr double kDefaultExactTol = 1e-12;

struct HarnessConfig {
  int o2_triples = 24;
  int o4_cases = 48;
  int o5_samples = 10;
  // O2 compares bucket k against buckets k-window..k+window of the other
  // side, since the two nestings round the intermediate argument differently.
  int bucket_window = 1;
  std::uint64_t seed = 42;
  // Tolerance for breakpoint positions and values in exact comparisons.
  double exact_tol = kDefaultExactTol;
};

std::vector<AxiomReport> check_tr_axioms(const Convolver& conv, const FunctionFamily& family,
                                         double eps = kDefaultHarnessEps,
                                         const HarnessConfig& cfg = {});
std::vector<AxiomReport> check_tr_axioms(const ConvolutionOperator& opr,
                                         const FunctionFamily& family,
                                         double eps = kDefaultHarnessEps,
                                         const HarnessConfig& cfg = {});

struct InstanceOutcome {
  bool violated = false;
  bool exact = true;
  double point = 0.0;
  double lhs = 0.0;
  double rhs = 0.0;
  double residual = 0.0;
  std::string description;
};

// Evaluates one instance of `axiom` on `functions` (order as in Witness).
// With `at`, only that point is compared; otherwise the worst point is found.
// Throws PreconditionError for a malformed instance (wrong arity, O4 pair
// not comparable).
InstanceOutcome evaluate_instance(const Convolver& conv, LiftedAxiom axiom,
                                  const std::vector<MembershipFunction>& functions,
                                  std::optional<double> at, double eps,
                                  const HarnessConfig& cfg = {});

// Largest raw per-bucket |LHS - RHS| of O2 over `triples` seeded triples
// from the family.
double max_o2_residual(const Convolver& conv, const FunctionFamily& family, int triples,
                       std::uint64_t seed, double eps = kDefaultHarnessEps);

// Recomputes a failed report's witness from scratch; true iff the failure
// is reproduced at the recorded point.
bool reevaluate(const ConvolutionOperator& opr, const AxiomReport& report,
                const HarnessConfig& cfg = {});

// Which slot the scalar failure lives in.
enum class WitnessMode { kStar, kCombiner };

// Lifts a scalar failure of the star (or of the combiner) to a failing
// lifted-axiom instance. Returns a report with verdict kFail when the
// construction reproduces the failure and kPass when it does not. Throws
// PreconditionError when the check did not fail.
AxiomReport build_witness(const ConvolutionOperator& opr, const ScalarCheck& failed,
                          WitnessMode mode, double eps = kDefaultHarnessEps,
                          const HarnessConfig& cfg = {});

}  // namespace t2fuzz

#endif  // T2FUZZ_AXIOMS_HPP_

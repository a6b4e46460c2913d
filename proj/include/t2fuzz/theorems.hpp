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

// Theorem round-trips: scalar axiom verdicts of the star (or the combiner)
// linked to lifted axiom verdicts, plus a suite of named lemma checks.

#ifndef T2FUZZ_THEOREMS_HPP_
#define T2FUZZ_THEOREMS_HPP_

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "t2fuzz/axioms.hpp"

namespace t2fuzz {

struct TheoremOptions {
  int grid_n = kDefaultGridN;
  double eps = kDefaultHarnessEps;
  HarnessConfig harness;
  // Unset: meet when the combiner is a t-norm, join when it is a t-conorm.
  std::optional<ConvolutionKind> kind;
};

// One failed scalar axiom and what it was lifted to.
struct ScalarLink {
  ScalarCheck scalar;
  AxiomReport witness;
  // build_witness reproduced the failure and a fresh re-evaluation agrees.
  bool reproduced = false;
  // Basic lifted axioms that failed on the families, as "O3@L".
  std::vector<std::string> harness_failures;

  bool linked() const { return reproduced || !harness_failures.empty(); }
};

struct TheoremRecord {
  WitnessMode mode = WitnessMode::kStar;
  std::string star;
  std::string combiner;
  ConvolutionKind kind = ConvolutionKind::kMeet;
  int grid_n = 0;
  double eps = 0.0;
  // Scalar report of the operation under test.
  ScalarReport scalar;
  bool scalar_holds = false;
  std::vector<AxiomReport> lifted;
  int lifted_failures = 0;
  int basic_failures = 0;
  std::vector<ScalarLink> links;
  // The outcome matches the theorem: scalar pass with no lifted failure, or
  // scalar failure with every failed axiom linked to a lifted failure.
  bool consistent = false;
  std::string note;
};

// Star under test; the combiner must be a continuous t-norm (meet) or
// t-conorm (join). Throws PreconditionError otherwise.
TheoremRecord theorem_roundtrip_star(const BinaryOp& star, const BinaryOp& combiner,
                                     std::span<const FunctionFamily> families,
                                     const TheoremOptions& opts = {});

// Combiner under test; the star must be a continuous t-norm and the combiner
// surjective. Throws PreconditionError (or NonSurjectiveCombiner) otherwise.
TheoremRecord theorem_roundtrip_combiner(const BinaryOp& star, const BinaryOp& combiner,
                                         std::span<const FunctionFamily> families,
                                         const TheoremOptions& opts = {});

struct LemmaVerdict {
  std::string name;
  std::string statement;
  Verdict verdict = Verdict::kPass;
  Mode mode = Mode::kExact;
  int instances = 0;
  std::string detail;
};

// Named checks: boundary identity, chi composition, chi order, V order,
// envelope identities, neutral element, annihilator, monotone lift.
std::vector<LemmaVerdict> lemma_suite(const BinaryOp& star, const BinaryOp& combiner,
                                      const FunctionFamily& family,
                                      const TheoremOptions& opts = {});

enum class MatrixGroup { kForward, kContrapositive, kDual };

std::string_view to_string(MatrixGroup g);

struct MatrixCell {
  MatrixGroup group = MatrixGroup::kForward;
  TheoremRecord record;
  // The cell behaves as the theorems predict.
  bool as_predicted = false;
  std::string expectation;
};

struct MatrixSlice {
  // Matched against catalog cells by label, e.g. "hamacher(2)".
  std::optional<BinaryOp> star;
  std::optional<BinaryOp> combiner;
  std::optional<WitnessMode> mode;
};

// Forward: star, combiner in {min, product, Lukasiewicz, Hamacher(2)}.
// Contrapositive: broken stars {mean, scaled-product, left-projection,
// asym-power} over combiners {min, product}. Dual: star = min with combiners
// {mean, left-projection} (expected to fail) and {product, maximum}.
std::vector<MatrixCell> theorem_matrix(std::span<const FunctionFamily> families,
                                       const TheoremOptions& opts = {},
                                       const MatrixSlice& slice = {});

}  // namespace t2fuzz

#endif  // T2FUZZ_THEOREMS_HPP_

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

#include <string>
#include <vector>

#include "doctest.h"
#include "t2fuzz/theorems.hpp"

using namespace t2fuzz;

namespace {

BinaryOp op(const char* name) { return catalog_lookup(name); }

std::vector<FunctionFamily> families() {
  return default_families(42, FamilySizes{11, 8, 6, 6, 12});
}

bool links_to(const TheoremRecord& r, ScalarAxiom scalar, LiftedAxiom lifted) {
  for (const auto& l : r.links) {
    if (l.scalar.axiom == scalar && l.reproduced && l.witness.axiom == lifted) return true;
  }
  return false;
}

const LemmaVerdict& lemma(const std::vector<LemmaVerdict>& vs, const std::string& name) {
  for (const auto& v : vs) {
    if (v.name == name) return v;
  }
  FAIL("lemma missing: " << name);
  return vs.front();
}

}  // namespace

TEST_SUITE("theorems") {
  TEST_CASE("a t-norm star passes on both levels") {
    const auto r = theorem_roundtrip_star(op("product"), op("minimum"), families());
    CHECK(r.scalar_holds);
    CHECK(r.lifted_failures == 0);
    CHECK(r.consistent);
  }

  TEST_CASE("scaled product fails the boundary condition on both levels") {
    const auto r = theorem_roundtrip_star(op("scaled-product"), op("product"), families());
    CHECK_FALSE(r.scalar_holds);
    CHECK_FALSE(r.scalar.passes(ScalarAxiom::kT4));
    CHECK(links_to(r, ScalarAxiom::kT4, LiftedAxiom::kO3));
    CHECK(r.consistent);
  }

  TEST_CASE("left projection fails commutativity on both levels") {
    const auto r = theorem_roundtrip_star(op("left-projection"), op("minimum"), families());
    CHECK_FALSE(r.scalar.passes(ScalarAxiom::kT1));
    CHECK(links_to(r, ScalarAxiom::kT1, LiftedAxiom::kO1));
    CHECK(r.consistent);
    for (const auto& l : r.links) CHECK(l.linked());
  }

  TEST_CASE("property: every scalar failure links to a lifted failure") {
    for (const char* s : {"mean", "scaled-product", "left-projection", "asym-power"}) {
      for (const char* c : {"minimum", "product", "lukasiewicz"}) {
        CAPTURE(s);
        CAPTURE(c);
        const auto r = theorem_roundtrip_star(op(s), op(c), families());
        CHECK_FALSE(r.scalar_holds);
        CHECK(r.basic_failures > 0);
        CHECK(r.consistent);
        CHECK_FALSE(r.links.empty());
        for (const auto& l : r.links) CHECK(l.reproduced);
      }
    }
  }

  TEST_CASE("combiner round trips") {
    const auto p = theorem_roundtrip_combiner(op("minimum"), op("product"), families());
    CHECK(p.scalar_holds);
    CHECK(p.lifted_failures == 0);
    CHECK(p.consistent);

    const auto m = theorem_roundtrip_combiner(op("minimum"), op("mean"), families());
    CHECK_FALSE(m.scalar.passes(ScalarAxiom::kT4));
    CHECK(m.consistent);
    bool chi_witness = false;
    for (const auto& l : m.links) {
      if (l.reproduced && l.witness.axiom == LiftedAxiom::kO3 && l.witness.mode == Mode::kExact) {
        chi_witness = true;
      }
    }
    CHECK(chi_witness);

    const auto x = theorem_roundtrip_combiner(op("minimum"), op("maximum"), families());
    CHECK(x.kind == ConvolutionKind::kJoin);
    CHECK(x.scalar_holds);
    CHECK(x.lifted_failures == 0);
    bool conorm_forms = false;
    for (const auto& a : x.lifted) {
      if (a.axiom == LiftedAxiom::kO3Prime || a.axiom == LiftedAxiom::kO5Prime) conorm_forms = true;
    }
    CHECK(conorm_forms);
  }

  TEST_CASE("round trips check their hypotheses") {
    CHECK_THROWS_AS(theorem_roundtrip_star(op("product"), op("mean"), families()),
                    PreconditionError);
    CHECK_THROWS_AS(theorem_roundtrip_combiner(op("drastic"), op("product"), families()),
                    PreconditionError);
  }

  TEST_CASE("lemma suite") {
    const auto fam = random_family(20, 42);
    const auto vs = lemma_suite(op("lukasiewicz"), op("product"), fam);
    const LemmaVerdict& b = lemma(vs, "boundary-identity");
    CHECK(b.verdict == Verdict::kPass);
    CHECK(b.mode == Mode::kExact);
    CHECK(b.instances >= 20);
    CHECK(lemma(vs, "v-order").verdict == Verdict::kPass);
    CHECK(lemma(vs, "chi-order").verdict == Verdict::kPass);
    for (const auto& v : vs) {
      CAPTURE(v.name);
      CHECK(v.verdict != Verdict::kFail);
    }
  }

  TEST_CASE("matrix slices") {
    TheoremOptions opts;
    MatrixSlice slice;
    slice.star = op("mean");
    slice.combiner = op("minimum");
    const auto cells = theorem_matrix(families(), opts, slice);
    REQUIRE(cells.size() == 1);
    CHECK(cells[0].group == MatrixGroup::kContrapositive);
    CHECK(cells[0].as_predicted);
    CHECK(links_to(cells[0].record, ScalarAxiom::kT4, LiftedAxiom::kO3));

    MatrixSlice dual;
    dual.mode = WitnessMode::kCombiner;
    const auto dcells = theorem_matrix(families(), opts, dual);
    CHECK(dcells.size() == 4);
    for (const auto& c : dcells) CHECK(c.as_predicted);
  }
}

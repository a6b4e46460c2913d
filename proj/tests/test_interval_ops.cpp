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

#include <cmath>
#include <random>
#include <vector>

#include "doctest.h"
#include "t2fuzz/interval_ops.hpp"

using namespace t2fuzz;

namespace {

BinaryOp op(const char* name, std::vector<double> p = {}) { return catalog_lookup(name, p); }

std::vector<BinaryOp> parametric_samples() {
  std::vector<BinaryOp> out;
  for (double g : {0.0, 0.5, 1.0, 2.0, 5.0}) out.push_back(op("hamacher", {g}));
  return out;
}

}  // namespace

TEST_SUITE("interval_ops") {
  TEST_CASE("catalog evaluations") {
    CHECK(op("product")(0.5, 0.5) == 0.25);
    CHECK(op("lukasiewicz")(0.3, 0.4) == 0.0);
    CHECK(op("mean")(1.0, 0.5) == 0.75);
    CHECK(op("hamacher", {2.0})(1.0, 0.3) == doctest::Approx(0.3).epsilon(1e-15));
    CHECK(op("hamacher", {0.0})(0.0, 0.0) == 0.0);
    CHECK(op("asym-power")(0.5, 0.8) == doctest::Approx(0.32));
    CHECK(op("asym-power")(0.8, 0.5) == doctest::Approx(0.20));
  }

  TEST_CASE("unit values reject out-of-range input") {
    CHECK_THROWS_AS(UnitValue(1.5), std::domain_error);
    CHECK_THROWS_AS(UnitValue(-0.1), std::domain_error);
    CHECK_THROWS_AS(UnitValue(std::nan("")), std::domain_error);
    CHECK(UnitValue(0.0).value() == 0.0);
  }

  TEST_CASE("catalog lookup errors") {
    CHECK_THROWS_AS(op("nope"), std::invalid_argument);
    CHECK_THROWS_AS(op("hamacher"), std::invalid_argument);
    CHECK_THROWS_AS(op("hamacher", {-1.0}), std::invalid_argument);
    CHECK_THROWS_AS(op("min-mean-blend", {1.5}), std::invalid_argument);
    CHECK_THROWS_AS(op("product", {1.0}), std::invalid_argument);
  }

  TEST_CASE("labels carry parameters") {
    CHECK(op("product").label() == "product");
    CHECK(op("hamacher", {2.0}).label() == "hamacher(2)");
    CHECK(op("min-mean-blend", {0.5}).label() == "min-mean-blend(0.5)");
  }

  TEST_CASE("minimum passes every scalar axiom on a 64 grid") {
    const ScalarReport r = check_scalar_axioms(op("minimum"), 64);
    for (ScalarAxiom a : {ScalarAxiom::kT1, ScalarAxiom::kT2, ScalarAxiom::kT3, ScalarAxiom::kT4}) {
      CHECK(r.passes(a));
    }
    CHECK(r.is_t_norm());
    CHECK(r.failures().empty());
  }

  TEST_CASE("mean fails associativity and the boundary condition") {
    const BinaryOp mean = op("mean");
    const ScalarReport r = check_scalar_axioms(mean, 64);
    CHECK(r.passes(ScalarAxiom::kT1));
    CHECK_FALSE(r.passes(ScalarAxiom::kT2));
    CHECK_FALSE(r.passes(ScalarAxiom::kT4));
    const auto f = r.failures();
    CHECK(f == std::vector<ScalarAxiom>{ScalarAxiom::kT2, ScalarAxiom::kT4});
    // witnesses reproduce by direct evaluation
    const auto& t2 = r.get(ScalarAxiom::kT2).witness;
    REQUIRE(t2.size() == 3);
    CHECK(std::abs(mean(mean(t2[0], t2[1]), t2[2]) - mean(t2[0], mean(t2[1], t2[2]))) > 1e-12);
    const auto& t4 = r.get(ScalarAxiom::kT4).witness;
    REQUIRE(t4.size() == 1);
    CHECK(std::abs(mean(1.0, t4[0]) - t4[0]) > 1e-12);
    // the documented instance
    CHECK(mean(1.0, 0.5) == 0.75);
  }

  TEST_CASE("asym-power fails commutativity") {
    const BinaryOp ap = op("asym-power");
    const ScalarReport r = check_scalar_axioms(ap, 64);
    const ScalarCheck& t1 = r.get(ScalarAxiom::kT1);
    REQUIRE(t1.verdict == Verdict::kFail);
    REQUIRE(t1.witness.size() == 2);
    CHECK(ap(t1.witness[0], t1.witness[1]) == doctest::Approx(t1.lhs));
    CHECK(ap(t1.witness[1], t1.witness[0]) == doctest::Approx(t1.rhs));
    CHECK(t1.lhs != doctest::Approx(t1.rhs));
    CHECK(0.5 * 0.8 * 0.8 == doctest::Approx(0.32));
    CHECK(0.8 * 0.5 * 0.5 == doctest::Approx(0.20));
  }

  TEST_CASE("one iff both one") {
    CHECK(is_one_iff_both_one(op("minimum"), 64).holds);
    CHECK(is_one_iff_both_one(op("product"), 64).holds);
    const OneIffBothOne mx = is_one_iff_both_one(op("maximum"), 64);
    CHECK_FALSE(mx.holds);
    REQUIRE(mx.witness);
    CHECK(std::max(mx.witness->first, mx.witness->second) == 1.0);
    CHECK(std::min(mx.witness->first, mx.witness->second) < 1.0);
    CHECK(op("maximum")(mx.witness->first, mx.witness->second) == 1.0);
  }

  TEST_CASE("declared t-norms pass T1-T4 at 256") {
    std::vector<BinaryOp> ops;
    for (const auto& e : catalog_entries()) {
      if (e.declared_class == OpClass::kTNorm && e.params.empty()) ops.push_back(op(e.name.c_str()));
    }
    for (const auto& p : parametric_samples()) ops.push_back(p);
    for (const auto& o : ops) {
      CAPTURE(o.label());
      const ScalarReport r = check_scalar_axioms(o, 256, 1e-12);
      CHECK(r.is_t_norm());
    }
  }

  TEST_CASE("declared t-conorms pass T1-T3 and T4' at 256") {
    for (const auto& e : catalog_entries()) {
      if (e.declared_class != OpClass::kTConorm) continue;
      CAPTURE(e.name);
      const ScalarReport r = check_scalar_axioms(op(e.name.c_str()), 256, 1e-12);
      CHECK(r.is_t_conorm());
      CHECK(r.failures(true).empty());
    }
  }

  TEST_CASE("declared broken ops fail and name the failed axiom") {
    std::vector<BinaryOp> ops;
    for (const auto& e : catalog_entries()) {
      if (!e.broken) continue;
      if (e.params.empty()) {
        ops.push_back(op(e.name.c_str()));
      } else {
        ops.push_back(op(e.name.c_str(), {0.5}));
      }
    }
    REQUIRE(ops.size() >= 5);
    for (const auto& o : ops) {
      CAPTURE(o.label());
      const ScalarReport r = check_scalar_axioms(o, 256, 1e-12);
      const auto fails = r.failures();
      CHECK_FALSE(fails.empty());
      for (ScalarAxiom a : fails) CHECK_FALSE(r.get(a).witness.empty());
    }
  }

  TEST_CASE("hamacher with parameter 1 coincides with product on the grid") {
    const BinaryOp h = op("hamacher", {1.0});
    const BinaryOp p = op("product");
    double worst = 0.0;
    for (int i = 0; i <= 256; ++i) {
      for (int j = 0; j <= 256; ++j) {
        const double x = i / 256.0, y = j / 256.0;
        worst = std::max(worst, std::abs(h(x, y) - p(x, y)));
      }
    }
    CHECK(worst <= 1e-12);
  }

  TEST_CASE("catalog values stay in the unit interval") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (const auto& e : catalog_entries()) {
      const BinaryOp o = e.params.empty() ? op(e.name.c_str()) : op(e.name.c_str(), {0.5});
      for (int k = 0; k < 500; ++k) {
        const double v = o(u(rng), u(rng));
        CHECK((v >= 0.0 && v <= 1.0));
      }
    }
  }

  TEST_CASE("continuity estimate separates drastic from product") {
    CHECK(estimate_continuity(op("product"), 128).continuous);
    CHECK_FALSE(estimate_continuity(op("drastic"), 128).continuous);
    CHECK_FALSE(estimate_continuity(op("nilpotent-minimum"), 128).continuous);
    const ScalarReport r = check_scalar_axioms(op("drastic"), 64);
    CHECK(r.is_t_norm());
    CHECK_FALSE(r.continuity.continuous);
  }

  TEST_CASE("boolean behaviour and surjectivity") {
    CHECK(acts_as_and_on_booleans(op("product")));
    CHECK(acts_as_and_on_booleans(op("drastic")));
    CHECK_FALSE(acts_as_and_on_booleans(op("mean")));
    CHECK(check_surjective(op("mean"), 64).surjective);
    const SurjectivityCheck s = check_surjective(op("scaled-product"), 64);
    CHECK_FALSE(s.surjective);
    CHECK(s.image_max == doctest::Approx(0.5));
  }

  TEST_CASE("table operations") {
    // min on a 3x3 grid
    const BinaryOp t = table_op("tab", 2, {0, 0, 0, 0, 0.5, 0.5, 0, 0.5, 1});
    CHECK(t(0.5, 1.0) == doctest::Approx(0.5));
    CHECK(t(0.25, 1.0) == doctest::Approx(0.25));
    CHECK(check_scalar_axioms(t, 2).is_t_norm());
    CHECK_THROWS_AS(table_op("bad", 2, {0, 1}), std::invalid_argument);
  }

  TEST_CASE("property: closed-form t-norms are commutative, monotone and bounded by min") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::vector<BinaryOp> ops = {op("minimum"), op("product"), op("lukasiewicz")};
    for (const auto& p : parametric_samples()) ops.push_back(p);
    for (const auto& o : ops) {
      for (int k = 0; k < 2000; ++k) {
        const double x = u(rng), y = u(rng), z = u(rng);
        CHECK(std::abs(o(x, y) - o(y, x)) <= 1e-12);
        CHECK(o(x, y) <= std::min(x, y) + 1e-12);
        if (y <= z) CHECK(o(x, y) <= o(x, z) + 1e-12);
      }
    }
  }
}

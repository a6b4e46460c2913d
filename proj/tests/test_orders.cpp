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

#include <random>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "t2fuzz/generators.hpp"
#include "t2fuzz/orders.hpp"

using namespace t2fuzz;
namespace tt = t2fuzz::testing;

namespace {

UnitValue U(double x) { return UnitValue(x); }

std::vector<MembershipFunction> members(int n, std::uint64_t seed) {
  LatticeGenerator gen(seed);
  std::vector<MembershipFunction> out;
  for (int i = 0; i < n; ++i) out.push_back(gen.next());
  return out;
}

}  // namespace

TEST_SUITE("orders") {
  TEST_CASE("meet with the constant one is the right envelope") {
    for (const auto& g : members(20, 1)) {
      CHECK(ww_meet(chi_interval(U(0.0), U(1.0)), g) == envelope_right(g));
    }
  }

  TEST_CASE("meet and join of characteristic points") {
    for (double a : {0.0, 0.2, 0.5, 1.0}) {
      for (double b : {0.1, 0.5, 0.9}) {
        CHECK(ww_meet(chi_point(U(a)), chi_point(U(b))) == chi_point(U(std::min(a, b))));
        CHECK(ww_join(chi_point(U(a)), chi_point(U(b))) == chi_point(U(std::max(a, b))));
      }
    }
    CHECK(ww_join(chi_point(U(0.3)), chi_point(U(0.6))) == chi_point(U(0.6)));
  }

  TEST_CASE("meet order examples") {
    CHECK(leq_meet_order(chi_point(U(0.2)), chi_point(U(0.8))));
    CHECK_FALSE(leq_meet_order(chi_point(U(0.9)), chi_point(U(0.2))));
    CHECK(leq_meet_order(v_func(U(0.3)), v_func(U(0.7))));
    CHECK(leq_meet_order_by_envelopes(v_func(U(0.3)), v_func(U(0.7))));
    for (const auto& f : members(20, 2)) {
      CHECK(leq_meet_order(f, f));
      CHECK(leq_meet_order_by_envelopes(f, f));
      CHECK(leq_join_order(f, f));
    }
    const auto a = tent(U(0.3), U(0.2), U(0.5));
    const auto b = tent(U(0.7), U(0.6), U(0.1));
    CHECK(leq_meet_order(a, b) == leq_meet_order_by_envelopes(a, b));
    CHECK(leq_meet_order(b, a) == leq_meet_order_by_envelopes(b, a));
  }

  TEST_CASE("join order examples") {
    CHECK(leq_join_order(chi_point(U(0.2)), chi_point(U(0.9))));
    CHECK_FALSE(leq_join_order(chi_point(U(0.9)), chi_point(U(0.2))));
    for (const auto& f : members(20, 3)) CHECK(leq_join_order(chi_point(U(0.0)), f));
  }

  TEST_CASE("envelope criterion requires normal convex inputs") {
    const auto dip = MembershipFunction::from_samples({0.0, 0.25, 0.5, 0.75, 1.0},
                                                      {0.0, 1.0, 0.2, 1.0, 0.0});
    CHECK_THROWS_AS(leq_meet_order_by_envelopes(dip, v_func(U(0.5))), PreconditionError);
  }

  TEST_CASE("property: closed-form meet and join against a level-set oracle") {
    const auto fs = members(16, 4);
    for (std::size_t i = 0; i + 1 < fs.size(); i += 2) {
      const auto& f = fs[i];
      const auto& g = fs[i + 1];
      const auto m = ww_meet(f, g);
      const auto j = ww_join(f, g);
      for (int k = 0; k <= 64; ++k) {
        const double x = k / 64.0;
        CHECK(m(x) == doctest::Approx(tt::level_set_sup(tt::tmin, tt::tmin, f, g, x, 256))
                          .epsilon(1e-12));
        const auto tmax = [](double a, double b) { return std::max(a, b); };
        CHECK(j(x) ==
              doctest::Approx(tt::level_set_sup(tt::tmin, tmax, f, g, x, 256)).epsilon(1e-12));
      }
    }
  }

  TEST_CASE("property: definitional order agrees with both criteria on 200 pairs") {
    const auto fs = members(400, 5);
    int comparable = 0;
    for (std::size_t i = 0; i < fs.size(); i += 2) {
      const bool def = leq_meet_order(fs[i], fs[i + 1]);
      comparable += def ? 1 : 0;
      CHECK(def == leq_meet_order_by_envelopes(fs[i], fs[i + 1]));
      CHECK(def == leq_meet_order_by_criterion(fs[i], fs[i + 1]));
      CHECK(leq_join_order(fs[i], fs[i + 1]) == leq_join_order_by_criterion(fs[i], fs[i + 1]));
    }
    CHECK(comparable > 0);
  }

  TEST_CASE("property: partial order laws") {
    const auto fs = members(60, 6);
    std::mt19937_64 rng(6);
    for (int k = 0; k < 300; ++k) {
      const auto& a = fs[rng() % fs.size()];
      const auto& b = fs[rng() % fs.size()];
      const auto& c = fs[rng() % fs.size()];
      if (leq_meet_order(a, b) && leq_meet_order(b, a)) CHECK(near_equal(a, b, 1e-12));
      if (leq_meet_order(a, b) && leq_meet_order(b, c)) CHECK(leq_meet_order(a, c));
      // meets are lower bounds
      const auto m = ww_meet(a, b);
      CHECK(leq_meet_order(m, a));
      CHECK(leq_meet_order(m, b));
    }
  }

  TEST_CASE("property: extreme points bound the class") {
    for (const auto& f : members(50, 7)) {
      CHECK(leq_meet_order(chi_point(U(0.0)), f));
      CHECK(leq_meet_order(f, chi_point(U(1.0))));
    }
  }

  TEST_CASE("property: meet and join on real-valued breakpoints") {
    std::mt19937_64 rng(8);
    for (int k = 0; k < 20; ++k) {
      const auto f = tt::random_trapezoid(rng);
      const auto g = tt::random_trapezoid(rng);
      CHECK(near_equal(ww_meet(f, g), ww_meet(g, f), 1e-12));
      CHECK(near_equal(ww_join(f, g), ww_join(g, f), 1e-12));
      CHECK(near_equal(ww_meet(f, ww_join(f, g)), f, 1e-12));
    }
  }
}

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

#include "t2fuzz/orders.hpp"

namespace t2fuzz {

MembershipFunction ww_meet(const MembershipFunction& f, const MembershipFunction& g) {
  return pointwise_max(pointwise_min(f, envelope_right(g)),
                       pointwise_min(envelope_right(f), g));
}

MembershipFunction ww_join(const MembershipFunction& f, const MembershipFunction& g) {
  return pointwise_max(pointwise_min(f, envelope_left(g)),
                       pointwise_min(envelope_left(f), g));
}

bool leq_meet_order(const MembershipFunction& f, const MembershipFunction& g) {
  return near_equal(ww_meet(f, g), f, kOrderTol);
}

bool leq_meet_order_by_envelopes(const MembershipFunction& f,
                                 const MembershipFunction& g) {
  if (!in_lattice(f) || !in_lattice(g)) {
    throw PreconditionError("envelope criterion requires normal convex functions");
  }
  return pointwise_leq(envelope_left(g), envelope_left(f), kOrderTol) &&
         pointwise_leq(envelope_right(f), envelope_right(g), kOrderTol);
}

bool leq_meet_order_by_criterion(const MembershipFunction& f,
                                 const MembershipFunction& g, double eps) {
  return pointwise_leq(pointwise_min(envelope_right(f), g), f, eps) &&
         pointwise_leq(f, envelope_right(g), eps);
}

bool leq_join_order(const MembershipFunction& f, const MembershipFunction& g) {
  return near_equal(ww_join(f, g), g, kOrderTol);
}

bool leq_join_order_by_criterion(const MembershipFunction& f,
                                 const MembershipFunction& g, double eps) {
  return pointwise_leq(pointwise_min(f, envelope_left(g)), g, eps) &&
         pointwise_leq(g, envelope_left(f), eps);
}

}  // namespace t2fuzz

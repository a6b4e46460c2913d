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

// Meet and join of membership functions (sup of min over y AND z = x, resp.
// y OR z = x) and the two partial orders they induce.

#ifndef T2FUZZ_ORDERS_HPP_
#define T2FUZZ_ORDERS_HPP_

#include "t2fuzz/membership.hpp"

namespace t2fuzz {

// Crossing points of computed pieces carry rounding; order decisions treat
// differences up to this size as equal.
inline constexpr double kOrderTol = 1e-12;

// Closed forms: meet = (f ^ g^R) v (f^R ^ g), join = (f ^ g^L) v (f^L ^ g).
MembershipFunction ww_meet(const MembershipFunction& f, const MembershipFunction& g);
MembershipFunction ww_join(const MembershipFunction& f, const MembershipFunction& g);

// f below g in the meet order: meet(f, g) equals f up to kOrderTol.
bool leq_meet_order(const MembershipFunction& f, const MembershipFunction& g);

// Envelope test g^L <= f^L and f^R <= g^R. Only valid on normal convex
// functions; throws PreconditionError otherwise.
bool leq_meet_order_by_envelopes(const MembershipFunction& f,
                                 const MembershipFunction& g);

// f^R ^ g <= f <= g^R, valid for every membership function.
bool leq_meet_order_by_criterion(const MembershipFunction& f,
                                 const MembershipFunction& g, double eps = kOrderTol);

// f below g in the join order: join(f, g) equals g up to kOrderTol.
bool leq_join_order(const MembershipFunction& f, const MembershipFunction& g);

// f ^ g^L <= g <= f^L.
bool leq_join_order_by_criterion(const MembershipFunction& f,
                                 const MembershipFunction& g, double eps = kOrderTol);

}  // namespace t2fuzz

#endif  // T2FUZZ_ORDERS_HPP_

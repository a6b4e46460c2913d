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

#include "t2fuzz/generators.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace t2fuzz {

namespace {

double pos(int k) { return static_cast<double>(k) / kPositionLattice; }
double height(int k) { return static_cast<double>(k) / kHeightLattice; }

}  // namespace

int LatticeGenerator::uniform(int lo, int hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<int>(rng_() % span);
}

MembershipFunction LatticeGenerator::next_tent() {
  const int peak = uniform(0, kPositionLattice);
  const int plateau_end =
      uniform(0, 1) ? peak : std::min(kPositionLattice, peak + uniform(1, 8));
  const int left = uniform(0, kHeightLattice - 1);
  const int right = uniform(0, kHeightLattice - 1);

  std::vector<double> t, v;
  if (peak > 0) {
    t.push_back(0.0);
    v.push_back(height(left));
    if (peak > 1 && uniform(0, 1)) {
      t.push_back(pos(uniform(1, peak - 1)));
      v.push_back(height(uniform(left, kHeightLattice)));
    }
  }
  t.push_back(pos(peak));
  v.push_back(1.0);
  if (plateau_end > peak) {
    t.push_back(pos(plateau_end));
    v.push_back(1.0);
  }
  if (plateau_end < kPositionLattice) {
    if (kPositionLattice - plateau_end > 1 && uniform(0, 1)) {
      t.push_back(pos(uniform(plateau_end + 1, kPositionLattice - 1)));
      v.push_back(height(uniform(right, kHeightLattice)));
    }
    t.push_back(1.0);
    v.push_back(height(right));
  }
  auto f = MembershipFunction::from_samples(std::move(t), std::move(v));
  if (!in_lattice(f)) throw std::logic_error("tent generator left the lattice");
  return f;
}

MembershipFunction LatticeGenerator::next_interior_tent() {
  const int peak = uniform(kPositionLattice / 4, 3 * kPositionLattice / 4);
  const double left = height(uniform(0, kHeightLattice));
  const double right = height(uniform(0, kHeightLattice));
  return MembershipFunction::from_samples({0.0, pos(peak), 1.0}, {left, 1.0, right});
}

MembershipFunction LatticeGenerator::next_jump() {
  // Peak strictly inside so both shoulders have room for a jump.
  const int peak = uniform(2, kPositionLattice - 2);
  const bool jump_left = uniform(0, 2) != 0;
  const bool jump_right = !jump_left || uniform(0, 1);

  std::vector<double> bps{0.0}, vals;
  std::vector<MembershipFunction::Piece> pieces;

  // Rising shoulder: h0 at 0, optionally lo at u-, jump to hi at u, 1 at peak.
  const int h0 = uniform(0, kHeightLattice - 2);
  if (jump_left) {
    const int u = uniform(1, peak - 1);
    const int lo = uniform(h0, kHeightLattice - 2);
    const int hi = uniform(lo + 1, kHeightLattice);
    vals.push_back(height(h0));
    pieces.push_back({height(h0), height(lo)});
    bps.push_back(pos(u));
    vals.push_back(height(hi));
    pieces.push_back({height(hi), 1.0});
  } else {
    vals.push_back(height(h0));
    pieces.push_back({height(h0), 1.0});
  }
  bps.push_back(pos(peak));
  vals.push_back(1.0);

  // Falling shoulder, mirrored.
  const int h1 = uniform(0, kHeightLattice - 2);
  if (jump_right) {
    const int w = uniform(peak + 1, kPositionLattice - 1);
    const int lo = uniform(h1, kHeightLattice - 2);
    const int hi = uniform(lo + 1, kHeightLattice);
    pieces.push_back({1.0, height(hi)});
    bps.push_back(pos(w));
    vals.push_back(height(hi));
    pieces.push_back({height(lo), height(h1)});
  } else {
    pieces.push_back({1.0, height(h1)});
  }
  bps.push_back(1.0);
  vals.push_back(height(h1));

  auto f = MembershipFunction::create(std::move(bps), std::move(vals), std::move(pieces));
  if (!in_lattice(f)) throw std::logic_error("jump generator left the lattice");
  return f;
}

MembershipFunction LatticeGenerator::next() {
  return uniform(0, 1) ? next_jump() : next_tent();
}

double lipschitz_constant(const MembershipFunction& f) {
  const auto bps = f.breakpoints();
  const auto vals = f.point_values();
  double lip = 0.0;
  for (std::size_t i = 0; i < f.num_pieces(); ++i) {
    const auto& p = f.pieces()[i];
    if (p.left != vals[i] || p.right != vals[i + 1]) {
      return std::numeric_limits<double>::infinity();
    }
    lip = std::max(lip, std::abs(p.right - p.left) / (bps[i + 1] - bps[i]));
  }
  return lip;
}

double snap_to_lattice(double x) {
  return std::round(x * kPositionLattice) / kPositionLattice;
}

}  // namespace t2fuzz

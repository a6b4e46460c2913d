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

#include "t2fuzz/convolution.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "t2fuzz/grid.hpp"

namespace t2fuzz {

std::string_view to_string(ConvolutionKind k) {
  return k == ConvolutionKind::kMeet ? "meet" : "join";
}

std::string_view to_string(Engine e) {
  switch (e) {
    case Engine::kGrid: return "grid";
    case Engine::kExact: return "exact";
    case Engine::kAuto: return "auto";
  }
  return "?";
}

std::string_view to_string(EngineUsed e) {
  switch (e) {
    case EngineUsed::kGrid: return "grid";
    case EngineUsed::kExactPoints: return "exact-points";
    case EngineUsed::kExactIntervals: return "exact-intervals";
    case EngineUsed::kExactNeutral: return "exact-neutral";
  }
  return "?";
}

bool GridFunction::complete() const {
  return std::all_of(filled.begin(), filled.end(), [](char c) { return c != 0; });
}

int GridFunction::unfilled_count() const {
  return static_cast<int>(std::count(filled.begin(), filled.end(), 0));
}

MembershipFunction lift(const GridFunction& g) {
  std::vector<double> t, v;
  for (int k = 0; k <= g.n; ++k) {
    if (!g.filled[k]) continue;
    if (t.empty() && k > 0) {
      t.push_back(0.0);
      v.push_back(g.values[k]);
    }
    t.push_back(grid_point(k, g.n));
    v.push_back(g.values[k]);
  }
  if (t.empty()) throw std::invalid_argument("cannot lift a grid with no filled bucket");
  if (t.back() < 1.0) {
    const double last = v.back();
    t.push_back(1.0);
    v.push_back(last);
  }
  return MembershipFunction::from_samples(std::move(t), std::move(v));
}

std::vector<double> ConvolutionResult::samples(int n) const {
  if (is_exact()) return exact().sample(n);
  const GridFunction& g = grid();
  if (g.n != n) throw std::invalid_argument("grid resolution mismatch");
  return g.values;
}

namespace {

double unit_clamp(double v) { return std::clamp(v, 0.0, 1.0); }

bool has_neutral(const BinaryOp& op, double e, int n) {
  for (int i = 0; i <= n; ++i) {
    const double x = grid_point(i, n);
    if (std::abs(op(e, x) - x) > kDefaultScalarEps ||
        std::abs(op(x, e) - x) > kDefaultScalarEps) {
      return false;
    }
  }
  return true;
}

bool has_zero_annihilator(const BinaryOp& op, int n) {
  for (int i = 0; i <= n; ++i) {
    const double x = grid_point(i, n);
    if (op(0.0, x) != 0.0 || op(x, 0.0) != 0.0) return false;
  }
  return true;
}

constexpr int kGateGrid = 64;

}  // namespace

Convolver::Convolver(ConvolutionOperator opr) : opr_(std::move(opr)) {
  const int n = opr_.grid_n;
  if (n < 2) throw PreconditionError("grid_n must be at least 2");
  if (opr_.refine_depth < 0) throw PreconditionError("refine_depth must be >= 0");
  const SurjectivityCheck surj = check_surjective(opr_.combiner, n);
  if (!surj.surjective) {
    std::ostringstream os;
    os << "combiner " << opr_.combiner.label() << " is not surjective onto [0,1] (image ["
       << surj.image_min << ", " << surj.image_max << "], bucket "
       << surj.first_missing_bucket << " never hit)";
    throw NonSurjectiveCombiner(os.str());
  }

  bucket_.resize(static_cast<std::size_t>(n + 1) * (n + 1));
  for (int i = 0; i <= n; ++i) {
    const double y = grid_point(i, n);
    for (int j = 0; j <= n; ++j) {
      bucket_[i * (n + 1) + j] = bucket_of(opr_.combiner(y, grid_point(j, n)), n);
    }
  }

  const ContinuityEstimate star_cont = estimate_continuity(opr_.star, kGateGrid);
  lower_bound_ = !star_cont.continuous;
  exact_points_ = acts_as_and_on_booleans(opr_.star);

  const ScalarReport star_report = check_scalar_axioms(opr_.star, kGateGrid);
  const ScalarReport comb_report = check_scalar_axioms(opr_.combiner, kGateGrid);
  exact_intervals_ = opr_.star.declared_continuous() &&
                     opr_.star.declared_class() == OpClass::kTNorm &&
                     star_report.is_t_norm() && star_cont.continuous &&
                     comb_report.passes(ScalarAxiom::kT3) &&
                     comb_report.continuity.continuous;

  const double neutral = opr_.kind == ConvolutionKind::kMeet ? 1.0 : 0.0;
  exact_neutral_ = has_neutral(opr_.star, 1.0, kGateGrid) &&
                   has_zero_annihilator(opr_.star, kGateGrid) &&
                   has_neutral(opr_.combiner, neutral, kGateGrid);
}

std::optional<MembershipFunction> Convolver::try_exact(const MembershipFunction& f,
                                                       const MembershipFunction& g,
                                                       EngineUsed* used,
                                                       bool allow_neutral) const {
  const auto fs = characteristic_support(f);
  const auto gs = characteristic_support(g);
  auto mark = [used](EngineUsed e) {
    if (used) *used = e;
  };
  if (fs && gs) {
    const bool points = fs->first == fs->second && gs->first == gs->second;
    if (points && exact_points_) {
      mark(EngineUsed::kExactPoints);
      return chi_point(UnitValue(unit_clamp(opr_.combiner(fs->first, gs->first))));
    }
    if (exact_intervals_) {
      mark(EngineUsed::kExactIntervals);
      const double lo = unit_clamp(opr_.combiner(fs->first, gs->first));
      const double hi = unit_clamp(opr_.combiner(fs->second, gs->second));
      return chi_interval(UnitValue(lo), UnitValue(std::max(lo, hi)));
    }
  }
  if (exact_neutral_ && allow_neutral) {
    const double neutral = opr_.kind == ConvolutionKind::kMeet ? 1.0 : 0.0;
    const auto is_neutral = [neutral](const std::optional<std::pair<double, double>>& s) {
      return s && s->first == neutral && s->second == neutral;
    };
    if (is_neutral(gs)) {
      mark(EngineUsed::kExactNeutral);
      return f;
    }
    if (is_neutral(fs)) {
      mark(EngineUsed::kExactNeutral);
      return g;
    }
  }
  return std::nullopt;
}

ConvolutionResult Convolver::convolve(const MembershipFunction& f,
                                      const MembershipFunction& g) const {
  if (opr_.engine != Engine::kGrid) {
    EngineUsed used = EngineUsed::kGrid;
    if (auto exact = try_exact(f, g, &used)) {
      return ConvolutionResult{std::move(*exact), used};
    }
    if (opr_.engine == Engine::kExact) {
      throw ExactEngineUnavailable("no exact engine applies to these inputs");
    }
  }
  return ConvolutionResult{convolve_grid(f, g), EngineUsed::kGrid};
}

GridFunction Convolver::convolve_grid(const MembershipFunction& f,
                                      const MembershipFunction& g) const {
  const auto fv = f.sample(opr_.grid_n);
  const auto gv = g.sample(opr_.grid_n);
  GridFunction out;
  sweep_refine(fv, gv, &f, &g, out);
  return out;
}

GridFunction Convolver::convolve_samples(std::span<const double> f,
                                         std::span<const double> g) const {
  const std::size_t side = static_cast<std::size_t>(opr_.grid_n) + 1;
  if (f.size() != side || g.size() != side) {
    throw std::invalid_argument("sample count does not match grid_n + 1");
  }
  GridFunction out;
  sweep_refine(f, g, nullptr, nullptr, out);
  return out;
}

void Convolver::sweep_refine(std::span<const double> fv, std::span<const double> gv,
                             const MembershipFunction* f, const MembershipFunction* g,
                             GridFunction& out) const {
  const int n = opr_.grid_n;
  const int side = n + 1;
  out.n = n;
  out.values.assign(side, 0.0);
  out.filled.assign(side, 0);
  out.lower_bound = lower_bound_;
  out.refined_buckets = 0;

  const BinaryOp& star = opr_.star;
  for (int i = 0; i < side; ++i) {
    const double fi = fv[i];
    const int* row = &bucket_[static_cast<std::size_t>(i) * side];
    for (int j = 0; j < side; ++j) {
      const int k = row[j];
      const double c = star(fi, gv[j]);
      if (!out.filled[k] || c > out.values[k]) {
        out.values[k] = c;
        out.filled[k] = 1;
      }
    }
  }
  if (out.complete() || opr_.refine_depth == 0) return;

  // Refinement: subdivide sample cells whose corner images straddle a
  // bucket that the sweep missed, and record candidates only into those
  // buckets.
  auto sample_at = [n](std::span<const double> v, const MembershipFunction* fn, double t) {
    if (fn) return (*fn)(t);
    const double s = t * n;
    const int k = std::min(static_cast<int>(s), n - 1);
    return v[k] + (v[k + 1] - v[k]) * (s - k);
  };
  std::vector<char> target(side);
  for (int k = 0; k < side; ++k) target[k] = !out.filled[k];
  std::vector<char> newly(side, 0);
  std::vector<int> open_prefix(side + 1);
  auto rebuild_prefix = [&] {
    open_prefix[0] = 0;
    for (int k = 0; k < side; ++k) {
      open_prefix[k + 1] = open_prefix[k] + (target[k] && !newly[k] ? 1 : 0);
    }
  };
  rebuild_prefix();
  auto straddles = [&](double y, double z, double h) {
    const double c[4] = {opr_.combiner(y, z), opr_.combiner(y + h, z),
                         opr_.combiner(y, z + h), opr_.combiner(y + h, z + h)};
    const int lo = bucket_of(*std::min_element(c, c + 4), n);
    const int hi = bucket_of(*std::max_element(c, c + 4), n);
    return open_prefix[hi + 1] - open_prefix[lo] > 0;
  };
  auto record = [&](double y, double z) {
    y = std::min(y, 1.0);
    z = std::min(z, 1.0);
    const int k = bucket_of(opr_.combiner(y, z), n);
    if (!target[k]) return;
    const double c = star(sample_at(fv, f, y), sample_at(gv, g, z));
    if (!newly[k] || c > out.values[k]) {
      out.values[k] = c;
      newly[k] = 1;
    }
  };

  struct Cell {
    double y, z, h;
  };
  std::vector<Cell> cells;
  const double h0 = 1.0 / n;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const Cell c{grid_point(i, n), grid_point(j, n), h0};
      if (straddles(c.y, c.z, c.h)) cells.push_back(c);
    }
  }
  constexpr std::size_t kMaxCells = std::size_t{1} << 20;
  for (int depth = 0; depth < opr_.refine_depth && !cells.empty(); ++depth) {
    std::vector<Cell> next;
    for (const Cell& c : cells) {
      const double h = c.h / 2;
      // The five new points of the 2x2 split.
      record(c.y + h, c.z);
      record(c.y, c.z + h);
      record(c.y + h, c.z + h);
      record(c.y + c.h, c.z + h);
      record(c.y + h, c.z + c.h);
      for (int a = 0; a < 2; ++a) {
        for (int b = 0; b < 2; ++b) next.push_back({c.y + a * h, c.z + b * h, h});
      }
    }
    rebuild_prefix();
    cells.clear();
    for (const Cell& c : next) {
      if (cells.size() < kMaxCells && straddles(c.y, c.z, c.h)) cells.push_back(c);
    }
  }
  for (int k = 0; k < side; ++k) {
    if (newly[k]) {
      out.filled[k] = 1;
      ++out.refined_buckets;
    }
  }
}

ConvolutionResult convolve(const ConvolutionOperator& opr, const MembershipFunction& f,
                           const MembershipFunction& g) {
  return Convolver(opr).convolve(f, g);
}

double convolve_boundary_value(const ConvolutionOperator& opr,
                               const MembershipFunction& f, const MembershipFunction& g) {
  const OneIffBothOne check = is_one_iff_both_one(opr.combiner, opr.grid_n);
  if (!check.holds) {
    std::ostringstream os;
    os << "combiner " << opr.combiner.label() << " reaches 1 at ("
       << check.witness->first << ", " << check.witness->second
       << "), so the value at 1 is not star(f(1), g(1))";
    throw PreconditionError(os.str());
  }
  return opr.star(f(1.0), g(1.0));
}

GridFunction convolve_bruteforce(const ConvolutionOperator& opr,
                                 const MembershipFunction& f,
                                 const MembershipFunction& g, int pairs_n) {
  const int n = opr.grid_n;
  const int m = std::max(pairs_n, 4 * n);
  GridFunction out;
  out.n = n;
  out.values.assign(n + 1, 0.0);
  out.filled.assign(n + 1, 0);
  std::vector<double> gz(m + 1);
  for (int j = 0; j <= m; ++j) gz[j] = g(static_cast<double>(j) / m);
  for (int i = 0; i <= m; ++i) {
    const double y = static_cast<double>(i) / m;
    const double fy = f(y);
    for (int j = 0; j <= m; ++j) {
      const double z = static_cast<double>(j) / m;
      const double x = opr.combiner(y, z);
      int k;
      if (x >= 1.0) {
        k = n;
      } else if (x <= 0.0) {
        k = 0;
      } else {
        const double scaled = x * n;
        k = static_cast<int>(std::floor(scaled));
        if (scaled - k > 1.0 - kBucketSnap) ++k;
        k = std::min(k, n);
      }
      const double c = opr.star(fy, gz[j]);
      if (!out.filled[k] || c > out.values[k]) {
        out.values[k] = c;
        out.filled[k] = 1;
      }
    }
  }
  return out;
}

ConvolutionResult closure_on_intervals(const ConvolutionOperator& opr, UnitValue a,
                                       UnitValue b, UnitValue c, UnitValue d) {
  if (a.value() > b.value() || c.value() > d.value()) {
    throw PreconditionError("closure_on_intervals needs a <= b and c <= d");
  }
  Convolver conv(opr);
  const auto f = chi_interval(a, b);
  const auto g = chi_interval(c, d);
  if (conv.exact_intervals_available() && opr.engine != Engine::kGrid) {
    const double lo = unit_clamp(opr.combiner(a.value(), c.value()));
    const double hi = unit_clamp(opr.combiner(b.value(), d.value()));
    return ConvolutionResult{chi_interval(UnitValue(lo), UnitValue(std::max(lo, hi))),
                             EngineUsed::kExactIntervals};
  }
  return ConvolutionResult{conv.convolve_grid(f, g), EngineUsed::kGrid};
}

bool grid_is_normal(const GridFunction& g, double eps) {
  double m = 0.0;
  for (int k = 0; k <= g.n; ++k) {
    if (g.filled[k]) m = std::max(m, g.values[k]);
  }
  return m >= 1.0 - eps;
}

bool grid_is_convex(const GridFunction& g, double eps) {
  std::vector<double> v;
  for (int k = 0; k <= g.n; ++k) {
    if (g.filled[k]) v.push_back(g.values[k]);
  }
  if (v.size() < 3) return true;
  std::vector<double> suffix(v.size());
  suffix.back() = v.back();
  for (std::size_t i = v.size() - 1; i-- > 0;) suffix[i] = std::max(v[i], suffix[i + 1]);
  double prefix = v[0];
  for (std::size_t j = 1; j + 1 < v.size(); ++j) {
    if (std::min(prefix, suffix[j + 1]) - v[j] > eps) return false;
    prefix = std::max(prefix, v[j]);
  }
  return true;
}

namespace {

// Filled buckets as 0/1 flags, or nullopt if some value is neither.
std::optional<std::vector<int>> boolean_buckets(const GridFunction& g, double eps) {
  std::vector<int> ones;
  for (int k = 0; k <= g.n; ++k) {
    if (!g.filled[k]) continue;
    const double v = g.values[k];
    if (std::abs(v - 1.0) <= eps) {
      ones.push_back(k);
    } else if (std::abs(v) > eps) {
      return std::nullopt;
    }
  }
  return ones;
}

}  // namespace

std::optional<int> grid_characteristic_point(const GridFunction& g, double eps) {
  const auto ones = boolean_buckets(g, eps);
  if (!ones || ones->size() != 1) return std::nullopt;
  return ones->front();
}

std::optional<std::pair<int, int>> grid_characteristic_interval(const GridFunction& g,
                                                                double eps) {
  const auto ones = boolean_buckets(g, eps);
  if (!ones || ones->empty()) return std::nullopt;
  const int lo = ones->front(), hi = ones->back();
  for (int k = lo; k <= hi; ++k) {
    if (g.filled[k] && std::abs(g.values[k] - 1.0) > eps) return std::nullopt;
  }
  return std::make_pair(lo, hi);
}

}  // namespace t2fuzz

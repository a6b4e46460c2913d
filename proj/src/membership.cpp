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

#include "t2fuzz/membership.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace t2fuzz {

namespace {

// Values this far outside [0,1] are rounding noise and are clamped.
constexpr double kRangeSlack = 1e-12;
// Tolerance of the collinearity test used when merging pieces.
constexpr double kMergeTol = 1e-12;
// Crossings closer than this to a piece end do not split the piece.
constexpr double kMinPieceWidth = 1e-13;

double interpolate(double left, double right, double s, double e, double t) {
  return left + (right - left) * ((t - s) / (e - s));
}

double clamp_unit(double v) {
  if (v < 0.0 && v >= -kRangeSlack) return 0.0;
  if (v > 1.0 && v <= 1.0 + kRangeSlack) return 1.0;
  return v;
}

// One-sided limits of f on (s, e), where (s, e) lies inside a single piece.
std::pair<double, double> limits_on(const MembershipFunction& f, double s, double e) {
  const auto bps = f.breakpoints();
  const auto it = std::upper_bound(bps.begin(), bps.end(), s);
  const std::size_t k = static_cast<std::size_t>(it - bps.begin()) - 1;
  const auto& p = f.pieces()[k];
  const double ts = bps[k], te = bps[k + 1];
  const double a = (s == ts) ? p.left : interpolate(p.left, p.right, ts, te, s);
  const double b = (e == te) ? p.right : interpolate(p.left, p.right, ts, te, e);
  return {a, b};
}

std::vector<double> merged_breakpoints(const MembershipFunction& f,
                                       const MembershipFunction& g) {
  std::vector<double> out;
  out.reserve(f.breakpoints().size() + g.breakpoints().size());
  std::set_union(f.breakpoints().begin(), f.breakpoints().end(),
                 g.breakpoints().begin(), g.breakpoints().end(),
                 std::back_inserter(out));
  return out;
}

// Visits every merged breakpoint and every merged open piece in order.
template <class PointFn, class PieceFn>
void walk_merged(const MembershipFunction& f, const MembershipFunction& g,
                 PointFn&& on_point, PieceFn&& on_piece) {
  const auto ts = merged_breakpoints(f, g);
  for (std::size_t i = 0; i < ts.size(); ++i) {
    on_point(ts[i], f(ts[i]), g(ts[i]));
    if (i + 1 < ts.size()) {
      on_piece(ts[i], ts[i + 1], limits_on(f, ts[i], ts[i + 1]),
               limits_on(g, ts[i], ts[i + 1]));
    }
  }
}

MembershipFunction combine(const MembershipFunction& f, const MembershipFunction& g,
                           bool take_max) {
  std::vector<double> bps, vals;
  std::vector<MembershipFunction::Piece> pieces;
  auto pick = [take_max](double a, double b) {
    return take_max ? std::max(a, b) : std::min(a, b);
  };
  walk_merged(
      f, g,
      [&](double t, double fv, double gv) {
        bps.push_back(t);
        vals.push_back(pick(fv, gv));
      },
      [&](double s, double e, std::pair<double, double> fl,
          std::pair<double, double> gl) {
        // d <= 0 where f is the chosen function.
        const double da = take_max ? gl.first - fl.first : fl.first - gl.first;
        const double db = take_max ? gl.second - fl.second : fl.second - gl.second;
        if (da <= 0.0 && db <= 0.0) {
          pieces.push_back({fl.first, fl.second});
          return;
        }
        if (da >= 0.0 && db >= 0.0) {
          pieces.push_back({gl.first, gl.second});
          return;
        }
        const double frac = da / (da - db);
        const double tc = s + (e - s) * frac;
        if (!(tc - s > kMinPieceWidth) || !(e - tc > kMinPieceWidth)) {
          // Crossing sits on an end: the interior follows whichever function
          // is chosen at the other end.
          const bool f_inside = (tc - s <= kMinPieceWidth) ? db <= 0.0 : da <= 0.0;
          const auto& l = f_inside ? fl : gl;
          pieces.push_back({l.first, l.second});
          return;
        }
        const double vc = clamp_unit(fl.first + (fl.second - fl.first) * frac);
        const auto& first = da <= 0.0 ? fl : gl;
        const auto& second = da <= 0.0 ? gl : fl;
        pieces.push_back({first.first, vc});
        // The breakpoint for t = e is pushed by on_point; insert tc before it.
        bps.push_back(tc);
        vals.push_back(vc);
        pieces.push_back({vc, second.second});
      });
  return MembershipFunction::create(std::move(bps), std::move(vals), std::move(pieces));
}

MembershipFunction envelope(const MembershipFunction& f, bool from_left) {
  const auto bps = f.breakpoints();
  const auto vals = f.point_values();
  const auto pcs = f.pieces();
  const std::size_t m = pcs.size();
  auto pos = [&](std::size_t k) { return from_left ? bps[k] : bps[m - k]; };
  auto val = [&](std::size_t k) { return from_left ? vals[k] : vals[m - k]; };
  // Limits of the k-th piece in traversal order: (near end, far end).
  auto lims = [&](std::size_t k) {
    const auto& p = from_left ? pcs[k] : pcs[m - 1 - k];
    return from_left ? std::make_pair(p.left, p.right)
                     : std::make_pair(p.right, p.left);
  };

  std::vector<double> ot{pos(0)};
  std::vector<double> ov{val(0)};
  std::vector<std::pair<double, double>> op;  // (near, far)
  double running = val(0);
  for (std::size_t k = 0; k < m; ++k) {
    const auto [a, b] = lims(k);
    const double s = pos(k), e = pos(k + 1);
    const double level = std::max(running, a);
    double end_sup;
    if (b > level) {
      if (a >= running) {
        op.emplace_back(a, b);
      } else {
        const double tc = s + (e - s) * ((running - a) / (b - a));
        const bool inside = from_left ? (tc - s > kMinPieceWidth && e - tc > kMinPieceWidth)
                                      : (s - tc > kMinPieceWidth && tc - e > kMinPieceWidth);
        if (inside) {
          op.emplace_back(running, running);
          ot.push_back(tc);
          ov.push_back(running);
        }
        op.emplace_back(running, b);
      }
      end_sup = b;
    } else {
      op.emplace_back(level, level);
      end_sup = level;
    }
    running = std::max(end_sup, val(k + 1));
    ot.push_back(e);
    ov.push_back(running);
  }

  std::vector<MembershipFunction::Piece> pieces;
  pieces.reserve(op.size());
  if (from_left) {
    for (const auto& [near, far] : op) pieces.push_back({near, far});
  } else {
    std::reverse(ot.begin(), ot.end());
    std::reverse(ov.begin(), ov.end());
    for (auto it = op.rbegin(); it != op.rend(); ++it) {
      pieces.push_back({it->second, it->first});
    }
  }
  return MembershipFunction::create(std::move(ot), std::move(ov), std::move(pieces));
}

}  // namespace

MembershipFunction MembershipFunction::create(std::vector<double> breakpoints,
                                              std::vector<double> point_values,
                                              std::vector<Piece> pieces) {
  if (breakpoints.size() < 2) {
    throw std::invalid_argument("need at least the breakpoints 0 and 1");
  }
  if (breakpoints.front() != 0.0 || breakpoints.back() != 1.0) {
    throw std::invalid_argument("breakpoints must start at 0 and end at 1");
  }
  for (std::size_t i = 1; i < breakpoints.size(); ++i) {
    if (!(breakpoints[i] > breakpoints[i - 1])) {
      throw std::invalid_argument("breakpoints must be strictly increasing");
    }
  }
  if (point_values.size() != breakpoints.size() ||
      pieces.size() + 1 != breakpoints.size()) {
    throw std::invalid_argument("breakpoint, value and piece counts disagree");
  }
  auto check = [](double& v) {
    v = clamp_unit(v);
    if (!(v >= 0.0 && v <= 1.0)) {
      std::ostringstream os;
      os << "membership value " << v << " is outside [0,1]";
      throw std::invalid_argument(os.str());
    }
  };
  for (double& v : point_values) check(v);
  for (Piece& p : pieces) {
    check(p.left);
    check(p.right);
  }
  MembershipFunction f;
  f.breakpoints_ = std::move(breakpoints);
  f.values_ = std::move(point_values);
  f.pieces_ = std::move(pieces);
  f.canonicalize();
  return f;
}

MembershipFunction MembershipFunction::from_affine(std::vector<double> breakpoints,
                                                   std::vector<double> point_values,
                                                   std::span<const Affine> pieces) {
  if (pieces.size() + 1 != breakpoints.size()) {
    throw std::invalid_argument("breakpoint and piece counts disagree");
  }
  std::vector<Piece> limits;
  limits.reserve(pieces.size());
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    limits.push_back({pieces[i].a * breakpoints[i] + pieces[i].b,
                      pieces[i].a * breakpoints[i + 1] + pieces[i].b});
  }
  return create(std::move(breakpoints), std::move(point_values), std::move(limits));
}

MembershipFunction MembershipFunction::from_samples(std::vector<double> t,
                                                    std::vector<double> v) {
  if (t.size() != v.size()) throw std::invalid_argument("sample sizes disagree");
  std::vector<Piece> pieces;
  for (std::size_t i = 0; i + 1 < v.size(); ++i) pieces.push_back({v[i], v[i + 1]});
  return create(std::move(t), std::move(v), std::move(pieces));
}

MembershipFunction MembershipFunction::constant(double c) {
  return create({0.0, 1.0}, {c, c}, {{c, c}});
}

void MembershipFunction::canonicalize() {
  // one-sided limits within rounding of the point value are continuous there
  for (std::size_t i = 0; i < pieces_.size(); ++i) {
    Piece& p = pieces_[i];
    if (std::abs(p.left - values_[i]) <= kMergeTol) p.left = values_[i];
    if (std::abs(p.right - values_[i + 1]) <= kMergeTol) p.right = values_[i + 1];
  }
  std::vector<double> bps{breakpoints_.front()};
  std::vector<double> vals{values_.front()};
  std::vector<Piece> pcs;
  for (std::size_t i = 0; i < pieces_.size(); ++i) {
    const Piece& p = pieces_[i];
    if (!pcs.empty()) {
      Piece& last = pcs.back();
      const double t_mid = bps.back();
      const double v_mid = vals.back();
      const double t_start = bps[bps.size() - 2];
      const double t_end = breakpoints_[i + 1];
      if (last.right == v_mid && p.left == v_mid &&
          std::abs(interpolate(last.left, p.right, t_start, t_end, t_mid) - v_mid) <=
              kMergeTol) {
        last.right = p.right;
        bps.back() = t_end;
        vals.back() = values_[i + 1];
        continue;
      }
    }
    pcs.push_back(p);
    bps.push_back(breakpoints_[i + 1]);
    vals.push_back(values_[i + 1]);
  }
  breakpoints_ = std::move(bps);
  values_ = std::move(vals);
  pieces_ = std::move(pcs);
}

double MembershipFunction::operator()(double t) const {
  if (!(t >= 0.0 && t <= 1.0)) {
    std::ostringstream os;
    os << "evaluation point " << t << " is outside [0,1]";
    throw std::domain_error(os.str());
  }
  const auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), t);
  const std::size_t k = static_cast<std::size_t>(it - breakpoints_.begin()) - 1;
  if (breakpoints_[k] == t) return values_[k];
  const Piece& p = pieces_[k];
  return interpolate(p.left, p.right, breakpoints_[k], breakpoints_[k + 1], t);
}

std::vector<double> MembershipFunction::sample(int n) const {
  std::vector<double> out(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) out[i] = (*this)(static_cast<double>(i) / n);
  return out;
}

MembershipFunction::Affine MembershipFunction::affine(std::size_t piece) const {
  const Piece& p = pieces_.at(piece);
  const double s = breakpoints_[piece], e = breakpoints_[piece + 1];
  const double a = (p.right - p.left) / (e - s);
  return {a, p.left - a * s};
}

MembershipFunction chi_point(UnitValue x) {
  const double v = x.value();
  if (v == 0.0) return MembershipFunction::create({0.0, 1.0}, {1.0, 0.0}, {{0.0, 0.0}});
  if (v == 1.0) return MembershipFunction::create({0.0, 1.0}, {0.0, 1.0}, {{0.0, 0.0}});
  return MembershipFunction::create({0.0, v, 1.0}, {0.0, 1.0, 0.0},
                                    {{0.0, 0.0}, {0.0, 0.0}});
}

MembershipFunction chi_interval(UnitValue a, UnitValue b) {
  const double lo = a.value(), hi = b.value();
  if (lo > hi) throw PreconditionError("chi_interval needs a <= b");
  if (lo == hi) return chi_point(a);
  std::vector<double> bps{0.0}, vals{lo == 0.0 ? 1.0 : 0.0};
  std::vector<MembershipFunction::Piece> pieces;
  if (lo > 0.0) {
    pieces.push_back({0.0, 0.0});
    bps.push_back(lo);
    vals.push_back(1.0);
  }
  pieces.push_back({1.0, 1.0});
  bps.push_back(hi);
  vals.push_back(1.0);
  if (hi < 1.0) {
    pieces.push_back({0.0, 0.0});
    bps.push_back(1.0);
    vals.push_back(0.0);
  }
  return MembershipFunction::create(std::move(bps), std::move(vals), std::move(pieces));
}

MembershipFunction w_func(UnitValue x) {
  const double v = x.value();
  if (v == 0.0) return MembershipFunction::create({0.0, 1.0}, {0.0, 1.0}, {{0.0, 1.0}});
  if (v == 1.0) return MembershipFunction::create({0.0, 1.0}, {0.0, 1.0}, {{0.0, 0.0}});
  return MembershipFunction::create({0.0, v, 1.0}, {0.0, v, 1.0}, {{0.0, 0.0}, {v, 1.0}});
}

MembershipFunction v_func(UnitValue x) {
  const double v = x.value();
  return MembershipFunction::create({0.0, 1.0}, {1.0, v}, {{1.0, v}});
}

MembershipFunction tent(UnitValue peak, UnitValue left_height, UnitValue right_height) {
  const double p = peak.value(), l = left_height.value(), r = right_height.value();
  if (p == 0.0) return MembershipFunction::create({0.0, 1.0}, {1.0, r}, {{1.0, r}});
  if (p == 1.0) return MembershipFunction::create({0.0, 1.0}, {l, 1.0}, {{l, 1.0}});
  return MembershipFunction::create({0.0, p, 1.0}, {l, 1.0, r}, {{l, 1.0}, {1.0, r}});
}

MembershipFunction envelope_left(const MembershipFunction& f) { return envelope(f, true); }

MembershipFunction envelope_right(const MembershipFunction& f) { return envelope(f, false); }

double sup_of(const MembershipFunction& f) {
  double s = 0.0;
  for (double v : f.point_values()) s = std::max(s, v);
  for (const auto& p : f.pieces()) s = std::max({s, p.left, p.right});
  return s;
}

bool is_normal(const MembershipFunction& f) { return sup_of(f) == 1.0; }

ConvexityResult is_convex(const MembershipFunction& f) {
  // Flatten into point, left limit, right limit, point, ... Limits are
  // approached by attained values, so a strict dip anywhere in this sequence
  // is a genuine violation and no dip means f is quasiconcave.
  const auto bps = f.breakpoints();
  const auto vals = f.point_values();
  const auto pcs = f.pieces();
  struct Entry {
    double value;
    int kind;  // 0 point, 1 left limit, 2 right limit
    std::size_t index;
  };
  std::vector<Entry> seq;
  for (std::size_t k = 0; k < pcs.size(); ++k) {
    seq.push_back({vals[k], 0, k});
    seq.push_back({pcs[k].left, 1, k});
    seq.push_back({pcs[k].right, 2, k});
  }
  seq.push_back({vals.back(), 0, pcs.size()});

  const std::size_t n = seq.size();
  std::vector<std::size_t> pre(n), suf(n);
  pre[0] = 0;
  for (std::size_t i = 1; i < n; ++i) {
    pre[i] = seq[i].value > seq[pre[i - 1]].value ? i : pre[i - 1];
  }
  suf[n - 1] = n - 1;
  for (std::size_t i = n - 1; i-- > 0;) {
    suf[i] = seq[i].value >= seq[suf[i + 1]].value ? i : suf[i + 1];
  }
  double best = 0.0;
  std::size_t bi = 0, bj = 0, bk = 0;
  for (std::size_t j = 1; j + 1 < n; ++j) {
    const double dip =
        std::min(seq[pre[j - 1]].value, seq[suf[j + 1]].value) - seq[j].value;
    if (dip > best) {
      best = dip;
      bi = pre[j - 1];
      bj = j;
      bk = suf[j + 1];
    }
  }
  ConvexityResult result;
  if (best <= 0.0) return result;
  result.convex = false;

  auto locate = [&](const Entry& e) {
    if (e.kind == 0) return bps[e.index];
    const auto& p = pcs[e.index];
    const double s = bps[e.index], t = bps[e.index + 1];
    const double slope = std::abs(p.right - p.left);
    const double theta = slope > 0.0 ? std::min(0.25, best / (4.0 * slope)) : 0.25;
    return e.kind == 1 ? s + theta * (t - s) : t - theta * (t - s);
  };
  result.witness = std::array<double, 3>{locate(seq[bi]), locate(seq[bj]), locate(seq[bk])};
  return result;
}

bool in_lattice(const MembershipFunction& f) { return is_normal(f) && is_convex(f).convex; }

MembershipFunction negate(const MembershipFunction& f) {
  const auto bps = f.breakpoints();
  std::vector<double> t(bps.size()), v(bps.size());
  for (std::size_t i = 0; i < bps.size(); ++i) {
    const std::size_t r = bps.size() - 1 - i;
    t[i] = 1.0 - bps[r];
    v[i] = f.point_values()[r];
  }
  std::vector<MembershipFunction::Piece> pieces;
  for (auto it = f.pieces().rbegin(); it != f.pieces().rend(); ++it) {
    pieces.push_back({it->right, it->left});
  }
  return MembershipFunction::create(std::move(t), std::move(v), std::move(pieces));
}

MembershipFunction pointwise_min(const MembershipFunction& f, const MembershipFunction& g) {
  return combine(f, g, false);
}

MembershipFunction pointwise_max(const MembershipFunction& f, const MembershipFunction& g) {
  return combine(f, g, true);
}

bool pointwise_leq(const MembershipFunction& f, const MembershipFunction& g, double eps) {
  bool ok = true;
  walk_merged(
      f, g, [&](double, double fv, double gv) { ok = ok && fv <= gv + eps; },
      [&](double, double, std::pair<double, double> fl, std::pair<double, double> gl) {
        ok = ok && fl.first <= gl.first + eps && fl.second <= gl.second + eps;
      });
  return ok;
}

bool func_eq(const MembershipFunction& f, const MembershipFunction& g, double eps) {
  if (eps == 0.0) return f == g;
  bool ok = true;
  walk_merged(
      f, g, [&](double, double fv, double gv) { ok = ok && std::abs(fv - gv) <= eps; },
      [&](double, double, std::pair<double, double> fl, std::pair<double, double> gl) {
        ok = ok && std::abs(fl.first - gl.first) <= eps &&
             std::abs(fl.second - gl.second) <= eps;
      });
  return ok;
}

bool near_equal(const MembershipFunction& f, const MembershipFunction& g, double eps) {
  if (f == g) return true;
  const auto fb = f.breakpoints(), gb = g.breakpoints();
  if (fb.size() == gb.size()) {
    bool ok = true;
    for (std::size_t i = 0; ok && i < fb.size(); ++i) {
      ok = std::abs(fb[i] - gb[i]) <= eps &&
           std::abs(f.point_values()[i] - g.point_values()[i]) <= eps;
    }
    for (std::size_t i = 0; ok && i < f.num_pieces(); ++i) {
      ok = std::abs(f.pieces()[i].left - g.pieces()[i].left) <= eps &&
           std::abs(f.pieces()[i].right - g.pieces()[i].right) <= eps;
    }
    if (ok) return true;
  }
  return eps > 0.0 && func_eq(f, g, eps);
}

std::optional<std::pair<double, double>> characteristic_support(
    const MembershipFunction& f) {
  const auto bps = f.breakpoints();
  const auto vals = f.point_values();
  const auto pcs = f.pieces();
  auto boolean = [](double v) { return v == 0.0 || v == 1.0; };
  // Sequence: point 0, piece 0, point 1, ...; ones must form one run that
  // starts and ends on a point.
  int first = -1, last = -1;
  bool run_closed = false;
  const int n = static_cast<int>(2 * pcs.size() + 1);
  for (int s = 0; s < n; ++s) {
    double v;
    if (s % 2 == 0) {
      v = vals[s / 2];
      if (!boolean(v)) return std::nullopt;
    } else {
      const auto& p = pcs[s / 2];
      if (p.left != p.right || !boolean(p.left)) return std::nullopt;
      v = p.left;
    }
    if (v == 1.0) {
      if (run_closed) return std::nullopt;
      if (first < 0) first = s;
      last = s;
    } else if (first >= 0) {
      run_closed = true;
    }
  }
  if (first < 0 || first % 2 != 0 || last % 2 != 0) return std::nullopt;
  return std::make_pair(bps[first / 2], bps[last / 2]);
}

}  // namespace t2fuzz

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

#include "t2fuzz/axioms.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>

#include "t2fuzz/generators.hpp"
#include "t2fuzz/grid.hpp"
#include "t2fuzz/orders.hpp"

namespace t2fuzz {

std::string_view to_string(LiftedAxiom a) {
  switch (a) {
    case LiftedAxiom::kO1: return "O1";
    case LiftedAxiom::kO2: return "O2";
    case LiftedAxiom::kO3: return "O3";
    case LiftedAxiom::kO3Prime: return "O3'";
    case LiftedAxiom::kO4: return "O4";
    case LiftedAxiom::kO5: return "O5";
    case LiftedAxiom::kO5Prime: return "O5'";
    case LiftedAxiom::kO6: return "O6";
    case LiftedAxiom::kO7: return "O7";
  }
  return "?";
}

std::optional<LiftedAxiom> parse_lifted_axiom(std::string_view id) {
  for (LiftedAxiom a : {LiftedAxiom::kO1, LiftedAxiom::kO2, LiftedAxiom::kO3,
                        LiftedAxiom::kO3Prime, LiftedAxiom::kO4, LiftedAxiom::kO5,
                        LiftedAxiom::kO5Prime, LiftedAxiom::kO6, LiftedAxiom::kO7}) {
    if (to_string(a) == id) return a;
  }
  return std::nullopt;
}

bool is_basic(LiftedAxiom a) {
  return a == LiftedAxiom::kO1 || a == LiftedAxiom::kO2 || a == LiftedAxiom::kO3 ||
         a == LiftedAxiom::kO3Prime || a == LiftedAxiom::kO4;
}

std::string_view to_string(Mode m) {
  switch (m) {
    case Mode::kExact: return "exact";
    case Mode::kGrid: return "grid";
    case Mode::kLowerBound: return "lower-bound";
  }
  return "?";
}

namespace {

std::string num(double x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

std::string chi_label(double a, double b) {
  if (a == b) return "chi{" + num(a) + "}";
  return "chi[" + num(a) + "," + num(b) + "]";
}

}  // namespace

FunctionFamily points_family(int n) {
  if (n < 1) throw PreconditionError("points family needs at least one member");
  FunctionFamily fam{"J", FamilyKind::kPoints, "characteristic functions of points", {}, {}};
  for (int i = 0; i < n; ++i) {
    const double x = n == 1 ? 1.0 : snap_to_lattice(static_cast<double>(i) / (n - 1));
    fam.members.push_back(chi_point(UnitValue(x)));
    fam.labels.push_back(chi_label(x, x));
  }
  return fam;
}

FunctionFamily intervals_family(int n) {
  if (n < 1) throw PreconditionError("intervals family needs at least one member");
  FunctionFamily fam{"K", FamilyKind::kIntervals,
                     "characteristic functions of closed intervals", {}, {}};
  int m = 0;
  while ((m + 1) * (m + 2) / 2 < n) ++m;
  for (int i = 0; i <= m && static_cast<int>(fam.members.size()) < n; ++i) {
    for (int j = i; j <= m && static_cast<int>(fam.members.size()) < n; ++j) {
      const double a = m == 0 ? 1.0 : snap_to_lattice(static_cast<double>(i) / m);
      const double b = m == 0 ? 1.0 : snap_to_lattice(static_cast<double>(j) / m);
      fam.members.push_back(chi_interval(UnitValue(a), UnitValue(b)));
      fam.labels.push_back(chi_label(a, b));
    }
  }
  return fam;
}

namespace {

FunctionFamily parametric_family(int n, std::string name, FamilyKind kind,
                                 std::string description,
                                 MembershipFunction (*make)(UnitValue)) {
  if (n < 1) throw PreconditionError("family needs at least one member");
  FunctionFamily fam{name, kind, std::move(description), {}, {}};
  for (int i = 0; i < n; ++i) {
    const double x = n == 1 ? 0.5 : snap_to_lattice(static_cast<double>(i) / (n - 1));
    fam.members.push_back(make(UnitValue(x)));
    fam.labels.push_back(name + "(" + num(x) + ")");
  }
  return fam;
}

}  // namespace

FunctionFamily v_family(int n) {
  return parametric_family(n, "V", FamilyKind::kV, "affine witnesses from 1 down to x",
                           v_func);
}

FunctionFamily w_family(int n) {
  return parametric_family(n, "W", FamilyKind::kW, "step-identity witnesses", w_func);
}

FunctionFamily random_family(int n, std::uint64_t seed) {
  if (n < 1) throw PreconditionError("random family needs at least one member");
  FunctionFamily fam{"L", FamilyKind::kRandom,
                     "seeded random normal convex functions (seed " + std::to_string(seed) + ")",
                     {}, {}};
  LatticeGenerator gen(seed);
  for (int i = 0; i < n; ++i) {
    fam.members.push_back(gen.next());
    fam.labels.push_back("L#" + std::to_string(i));
  }
  return fam;
}

FunctionFamily tent_family(int n, std::uint64_t seed) {
  if (n < 1) throw PreconditionError("tent family needs at least one member");
  FunctionFamily fam{"T", FamilyKind::kRandom,
                     "seeded interior-peak tents (seed " + std::to_string(seed) + ")", {}, {}};
  LatticeGenerator gen(seed);
  for (int i = 0; i < n; ++i) {
    fam.members.push_back(gen.next_interior_tent());
    fam.labels.push_back("T#" + std::to_string(i));
  }
  return fam;
}

std::vector<FunctionFamily> default_families(std::uint64_t seed, const FamilySizes& sizes) {
  return {points_family(sizes.points), intervals_family(sizes.intervals), v_family(sizes.v),
          w_family(sizes.w), random_family(sizes.random, seed)};
}

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// A convolution result (or a reference function) together with its view at
// the grid resolution.
struct Value {
  std::optional<MembershipFunction> exact;
  std::optional<GridFunction> grid;
  std::vector<double> v;
  std::vector<char> filled;
};

Value from_function(const MembershipFunction& f, int n) {
  Value out;
  out.exact = f;
  out.v = f.sample(n);
  out.filled.assign(n + 1, 1);
  return out;
}

Value from_grid(GridFunction g) {
  Value out;
  out.v = g.values;
  out.filled = g.filled;
  out.grid = std::move(g);
  return out;
}

MembershipFunction as_function(const Value& v) {
  return v.exact ? *v.exact : lift(*v.grid);
}

std::vector<double> probe_points(const MembershipFunction& a, const MembershipFunction& b) {
  std::vector<double> t(a.breakpoints().begin(), a.breakpoints().end());
  t.insert(t.end(), b.breakpoints().begin(), b.breakpoints().end());
  std::sort(t.begin(), t.end());
  t.erase(std::unique(t.begin(), t.end()), t.end());
  const std::size_t m = t.size();
  for (std::size_t i = 0; i + 1 < m; ++i) t.push_back((t[i] + t[i + 1]) / 2);
  std::sort(t.begin(), t.end());
  return t;
}

bool worse(const InstanceOutcome& a, const InstanceOutcome& b) {
  if (a.violated != b.violated) return a.violated;
  return std::abs(a.lhs - a.rhs) > std::abs(b.lhs - b.rhs);
}

class Lifted {
 public:
  Lifted(const Convolver& conv, double eps, const HarnessConfig& cfg)
      : conv_(conv), eps_(eps), cfg_(cfg), n_(conv.grid_n()) {
    const BinaryOp& comb = conv.op().combiner;
    const bool meet = conv.op().kind == ConvolutionKind::kMeet;
    // The extreme bucket is exact when only the corner pair reaches it.
    if (meet) {
      strict_top_ = is_one_iff_both_one(comb, n_).holds;
    } else {
      const BinaryOp dual("dual", [&comb](double x, double y) { return 1.0 - comb(1.0 - x, 1.0 - y); },
                          OpClass::kOther, false);
      strict_bottom_ = is_one_iff_both_one(dual, n_).holds;
    }
  }

  int n() const { return n_; }
  double eps() const { return eps_; }

  Value conv(const MembershipFunction& f, const MembershipFunction& g) const {
    if (auto e = conv_.try_exact(f, g, nullptr, false)) return from_function(*e, n_);
    return from_grid(conv_.convolve_grid(f, g));
  }

  InstanceOutcome equal(const Value& l, const Value& r, int window,
                        std::optional<double> at) const {
    if (l.exact && r.exact) return exact_equal(*l.exact, *r.exact, at);
    InstanceOutcome out;
    out.exact = false;
    auto measure = [&](int k) -> double {
      if (!l.filled[k] || !r.filled[k]) return -kInf;
      if (window == 0 || (strict_top_ && k == n_) || (strict_bottom_ && k == 0)) {
        return std::abs(l.v[k] - r.v[k]);
      }
      double lw = -kInf, rw = -kInf;
      for (int j = std::max(0, k - window); j <= std::min(n_, k + window); ++j) {
        if (l.filled[j]) lw = std::max(lw, l.v[j]);
        if (r.filled[j]) rw = std::max(rw, r.v[j]);
      }
      return std::max({l.v[k] - rw, r.v[k] - lw, 0.0});
    };
    for (int k = 0; k <= n_; ++k) {
      if (l.filled[k] && r.filled[k]) {
        out.residual = std::max(out.residual, std::abs(l.v[k] - r.v[k]));
      }
    }
    return pick(measure, l, r, at, out);
  }

  // F below G in the meet order.
  InstanceOutcome below(const Value& f, const Value& g, std::optional<double> at) const {
    if (f.exact && g.exact) return exact_below(*f.exact, *g.exact, at);
    InstanceOutcome out;
    out.exact = false;
    std::vector<double> fr(n_ + 2, -kInf), gr(n_ + 2, -kInf);
    for (int k = n_; k >= 0; --k) {
      fr[k] = std::max(fr[k + 1], f.filled[k] ? f.v[k] : -kInf);
      gr[k] = std::max(gr[k + 1], g.filled[k] ? g.v[k] : -kInf);
    }
    auto measure = [&](int k) -> double {
      if (!f.filled[k] || !g.filled[k]) return -kInf;
      return std::max({std::min(fr[k], g.v[k]) - f.v[k], f.v[k] - gr[k], 0.0});
    };
    return pick(measure, f, g, at, out);
  }

  InstanceOutcome exact_equal(const MembershipFunction& l, const MembershipFunction& r,
                              std::optional<double> at) const {
    InstanceOutcome out;
    const bool same = near_equal(l, r, cfg_.exact_tol);
    if (at) {
      out.point = *at;
      out.lhs = l(*at);
      out.rhs = r(*at);
      out.violated = !same && std::abs(out.lhs - out.rhs) > cfg_.exact_tol;
      return out;
    }
    if (same) return out;
    double worst = -1.0;
    for (double p : probe_points(l, r)) {
      const double d = std::abs(l(p) - r(p));
      if (d > worst) {
        worst = d;
        out.point = p;
        out.lhs = l(p);
        out.rhs = r(p);
      }
    }
    out.violated = worst > cfg_.exact_tol;
    return out;
  }

  InstanceOutcome exact_below(const MembershipFunction& f, const MembershipFunction& g,
                              std::optional<double> at) const {
    InstanceOutcome out;
    const MembershipFunction fr = envelope_right(f), gr = envelope_right(g);
    auto measure = [&](double p) {
      return std::max({std::min(fr(p), g(p)) - f(p), f(p) - gr(p), 0.0});
    };
    const bool holds = leq_meet_order_by_criterion(f, g, cfg_.exact_tol);
    auto fill = [&](double p) {
      out.point = p;
      out.lhs = f(p);
      out.rhs = g(p);
    };
    if (at) {
      fill(*at);
      out.violated = !holds && measure(*at) > cfg_.exact_tol;
      return out;
    }
    if (holds) return out;
    double worst = -1.0;
    for (double p : probe_points(f, g)) {
      const double m = measure(p);
      if (m > worst) {
        worst = m;
        fill(p);
      }
    }
    out.violated = worst > cfg_.exact_tol;
    return out;
  }

 private:
  template <class Measure>
  InstanceOutcome pick(Measure measure, const Value& l, const Value& r,
                       std::optional<double> at, InstanceOutcome out) const {
    int best = -1;
    double best_m = -kInf;
    if (at) {
      best = bucket_of(*at, n_);
      best_m = measure(best);
    } else {
      for (int k = 0; k <= n_; ++k) {
        const double m = measure(k);
        if (m > best_m) {
          best_m = m;
          best = k;
        }
      }
    }
    out.point = grid_point(best, n_);
    out.lhs = l.v[best];
    out.rhs = r.v[best];
    out.violated = best_m > eps_;
    return out;
  }

  const Convolver& conv_;
  double eps_;
  HarnessConfig cfg_;
  int n_;
  bool strict_top_ = false;
  bool strict_bottom_ = false;
};

void require_arity(LiftedAxiom axiom, const std::vector<MembershipFunction>& fns,
                   std::size_t n) {
  if (fns.size() != n) {
    throw PreconditionError(std::string(to_string(axiom)) + " takes " + std::to_string(n) +
                            " functions, got " + std::to_string(fns.size()));
  }
}

InstanceOutcome closure(const Lifted& ctx, const Value& r, bool points) {
  InstanceOutcome out;
  if (r.exact) {
    const auto s = characteristic_support(*r.exact);
    if (s && (!points || s->first == s->second)) return out;
    out.violated = true;
    if (s) {
      out.point = s->second;
      out.lhs = 1.0;
      out.rhs = 0.0;
      out.description = "result is the characteristic function of an interval";
      return out;
    }
    double worst = -1.0;
    for (double p : probe_points(*r.exact, *r.exact)) {
      const double v = (*r.exact)(p);
      const double d = std::min(v, 1.0 - v);
      if (d > worst) {
        worst = d;
        out.point = p;
        out.lhs = v;
        out.rhs = std::round(v);
      }
    }
    out.description = "result is not a characteristic function";
    return out;
  }
  out.exact = false;
  const GridFunction& g = *r.grid;
  const double eps = ctx.eps();
  const bool ok = points ? grid_characteristic_point(g, eps).has_value()
                         : grid_characteristic_interval(g, eps).has_value();
  if (ok) return out;
  out.violated = true;
  int ones = 0;
  bool in_run = false, run_closed = false;
  for (int k = 0; k <= g.n; ++k) {
    if (!g.filled[k]) continue;
    const double v = g.values[k];
    const bool one = std::abs(v - 1.0) <= eps;
    const bool zero = std::abs(v) <= eps;
    if (!one && !zero) {
      out.point = grid_point(k, g.n);
      out.lhs = v;
      out.rhs = std::round(v);
      out.description = "bucket value is neither 0 nor 1";
      return out;
    }
    if (one) {
      ++ones;
      if ((points && ones == 2) || run_closed) {
        out.point = grid_point(k, g.n);
        out.lhs = 1.0;
        out.rhs = 0.0;
        out.description = points ? "more than one bucket at 1" : "buckets at 1 are not contiguous";
        return out;
      }
      in_run = true;
    } else if (in_run) {
      run_closed = true;
    }
  }
  out.point = 1.0;
  out.lhs = sup_of(lift(g));
  out.rhs = 1.0;
  out.description = "no bucket at 1";
  return out;
}

InstanceOutcome evaluate(const Lifted& ctx, LiftedAxiom axiom,
                         const std::vector<MembershipFunction>& fns,
                         std::optional<double> at, int window) {
  const int n = ctx.n();
  switch (axiom) {
    case LiftedAxiom::kO1: {
      require_arity(axiom, fns, 2);
      return ctx.equal(ctx.conv(fns[0], fns[1]), ctx.conv(fns[1], fns[0]), 0, at);
    }
    case LiftedAxiom::kO2: {
      require_arity(axiom, fns, 3);
      const Value fg = ctx.conv(fns[0], fns[1]);
      const Value left = ctx.conv(as_function(fg), fns[2]);
      const Value gh = ctx.conv(fns[1], fns[2]);
      const Value right = ctx.conv(fns[0], as_function(gh));
      InstanceOutcome o = ctx.equal(left, right, window, at);
      if (!fg.exact || !gh.exact) o.exact = false;
      return o;
    }
    case LiftedAxiom::kO3:
    case LiftedAxiom::kO3Prime: {
      require_arity(axiom, fns, 1);
      const MembershipFunction e = chi_point(UnitValue(axiom == LiftedAxiom::kO3 ? 1.0 : 0.0));
      const Value ref = from_function(fns[0], n);
      InstanceOutcome a = ctx.equal(ctx.conv(fns[0], e), ref, 0, at);
      a.description = "T(f, e) vs f";
      InstanceOutcome b = ctx.equal(ctx.conv(e, fns[0]), ref, 0, at);
      b.description = "T(e, f) vs f";
      return worse(b, a) ? b : a;
    }
    case LiftedAxiom::kO4: {
      require_arity(axiom, fns, 3);
      if (!leq_meet_order(fns[1], fns[2])) {
        throw PreconditionError("O4 instance needs g below h in the meet order");
      }
      InstanceOutcome a = ctx.below(ctx.conv(fns[0], fns[1]), ctx.conv(fns[0], fns[2]), at);
      a.description = "T(f, g) below T(f, h)";
      InstanceOutcome b = ctx.below(ctx.conv(fns[1], fns[0]), ctx.conv(fns[2], fns[0]), at);
      b.description = "T(g, f) below T(h, f)";
      return worse(b, a) ? b : a;
    }
    case LiftedAxiom::kO5:
    case LiftedAxiom::kO5Prime: {
      require_arity(axiom, fns, 2);
      const auto s = characteristic_support(fns[1]);
      if (!s) throw PreconditionError("O5 instance needs a characteristic interval");
      const MembershipFunction expected =
          axiom == LiftedAxiom::kO5 ? chi_interval(UnitValue(0.0), UnitValue(s->second))
                                    : chi_interval(UnitValue(s->first), UnitValue(1.0));
      return ctx.equal(ctx.conv(fns[0], fns[1]), from_function(expected, n), 0, at);
    }
    case LiftedAxiom::kO6:
    case LiftedAxiom::kO7: {
      require_arity(axiom, fns, 2);
      return closure(ctx, ctx.conv(fns[0], fns[1]), axiom == LiftedAxiom::kO6);
    }
  }
  return {};
}

// Collects instance outcomes into one report.
class Accumulator {
 public:
  Accumulator(LiftedAxiom axiom, const std::string& family, int grid_n, double eps,
              bool lower_bound)
      : lower_bound_(lower_bound) {
    report_.axiom = axiom;
    report_.family = family;
    report_.grid_n = grid_n;
    report_.eps = eps;
  }

  void add(const InstanceOutcome& o, const std::vector<MembershipFunction>& fns,
           const std::vector<std::string>& labels) {
    ++report_.instances;
    if (!o.exact) {
      any_grid_ = true;
      report_.max_residual = std::max(report_.max_residual, o.residual);
    }
    if (!o.violated) return;
    if (!o.exact && lower_bound_) {
      ++ignored_;
      return;
    }
    const double mag = std::abs(o.lhs - o.rhs);
    if (report_.witness && mag <= worst_) return;
    worst_ = mag;
    report_.witness = Witness{fns, labels, o.point, o.lhs, o.rhs, o.description};
    witness_exact_ = o.exact;
  }

  AxiomReport finish(std::string empty_note = "no instances") {
    if (report_.instances == 0) {
      report_.verdict = Verdict::kSkipped;
      report_.note = std::move(empty_note);
      report_.mode = Mode::kExact;
      return report_;
    }
    report_.mode = lower_bound_ && any_grid_ ? Mode::kLowerBound
                   : any_grid_               ? Mode::kGrid
                                             : Mode::kExact;
    if (report_.witness) {
      report_.verdict = Verdict::kFail;
      if (witness_exact_) report_.note = "exact witness";
    } else if (lower_bound_ && any_grid_) {
      report_.verdict = Verdict::kSkipped;
      report_.note = "lower-bound mode: discontinuous star, sampled sups not judged (" +
                     std::to_string(ignored_) + " grid violations ignored)";
    } else {
      report_.verdict = Verdict::kPass;
    }
    return report_;
  }

 private:
  AxiomReport report_;
  bool lower_bound_;
  bool any_grid_ = false;
  bool witness_exact_ = false;
  int ignored_ = 0;
  double worst_ = 0.0;
};

std::uint64_t stream_seed(std::uint64_t seed, const std::string& family, int stream) {
  std::uint64_t h = seed * 0x9E3779B97F4A7C15ULL + static_cast<std::uint64_t>(stream);
  for (char c : family) h = (h ^ static_cast<unsigned char>(c)) * 0x100000001B3ULL;
  return h;
}

}  // namespace

InstanceOutcome evaluate_instance(const Convolver& conv, LiftedAxiom axiom,
                                  const std::vector<MembershipFunction>& functions,
                                  std::optional<double> at, double eps,
                                  const HarnessConfig& cfg) {
  const Lifted ctx(conv, eps, cfg);
  return evaluate(ctx, axiom, functions, at, cfg.bucket_window);
}

std::vector<AxiomReport> check_tr_axioms(const ConvolutionOperator& opr,
                                         const FunctionFamily& family, double eps,
                                         const HarnessConfig& cfg) {
  return check_tr_axioms(Convolver(opr), family, eps, cfg);
}

std::vector<AxiomReport> check_tr_axioms(const Convolver& conv, const FunctionFamily& family,
                                         double eps, const HarnessConfig& cfg) {
  const auto& mem = family.members;
  if (mem.empty()) throw PreconditionError("function family is empty");
  const Lifted ctx(conv, eps, cfg);
  const int n = conv.grid_n();
  const bool meet = conv.op().kind == ConvolutionKind::kMeet;
  const bool lb = conv.lower_bound_mode();
  const std::size_t size = mem.size();
  auto label = [&](std::size_t i) {
    return i < family.labels.size() ? family.labels[i] : "#" + std::to_string(i);
  };
  auto make = [&](LiftedAxiom a) { return Accumulator(a, family.name, n, eps, lb); };
  std::vector<AxiomReport> out;

  {
    Accumulator acc = make(LiftedAxiom::kO1);
    for (std::size_t i = 0; i < size; ++i) {
      for (std::size_t j = i + 1; j < size; ++j) {
        acc.add(evaluate(ctx, LiftedAxiom::kO1, {mem[i], mem[j]}, std::nullopt, 0),
                {mem[i], mem[j]}, {label(i), label(j)});
      }
    }
    out.push_back(acc.finish("family has a single member"));
  }
  {
    Accumulator acc = make(LiftedAxiom::kO2);
    std::mt19937_64 rng(stream_seed(cfg.seed, family.name, 2));
    for (int t = 0; t < cfg.o2_triples; ++t) {
      const std::size_t i = rng() % size, j = rng() % size, k = rng() % size;
      acc.add(evaluate(ctx, LiftedAxiom::kO2, {mem[i], mem[j], mem[k]}, std::nullopt,
                       cfg.bucket_window),
              {mem[i], mem[j], mem[k]}, {label(i), label(j), label(k)});
    }
    AxiomReport r = acc.finish();
    if (r.mode != Mode::kExact && r.verdict != Verdict::kSkipped) {
      r.note = "grid-mode nesting, intermediate result lifted; bucket window " +
               std::to_string(cfg.bucket_window);
    }
    out.push_back(r);
  }
  {
    const LiftedAxiom a = meet ? LiftedAxiom::kO3 : LiftedAxiom::kO3Prime;
    Accumulator acc = make(a);
    for (std::size_t i = 0; i < size; ++i) {
      acc.add(evaluate(ctx, a, {mem[i]}, std::nullopt, 0), {mem[i]}, {label(i)});
    }
    out.push_back(acc.finish());
  }
  {
    Accumulator acc = make(LiftedAxiom::kO4);
    std::vector<std::pair<std::size_t, std::size_t>> comparable;
    for (std::size_t i = 0; i < size; ++i) {
      for (std::size_t j = 0; j < size; ++j) {
        if (i != j && mem[i] != mem[j] && leq_meet_order(mem[i], mem[j])) {
          comparable.emplace_back(i, j);
        }
      }
    }
    std::mt19937_64 rng(stream_seed(cfg.seed, family.name, 4));
    for (std::size_t t = comparable.size(); t > 1; --t) {
      std::swap(comparable[t - 1], comparable[rng() % t]);
    }
    if (static_cast<int>(comparable.size()) > cfg.o4_cases) comparable.resize(cfg.o4_cases);
    for (const auto& [g, h] : comparable) {
      const std::size_t f = rng() % size;
      acc.add(evaluate(ctx, LiftedAxiom::kO4, {mem[f], mem[g], mem[h]}, std::nullopt, 0),
              {mem[f], mem[g], mem[h]}, {label(f), label(g), label(h)});
    }
    out.push_back(acc.finish("no comparable pairs in family"));
  }
  {
    const LiftedAxiom a = meet ? LiftedAxiom::kO5 : LiftedAxiom::kO5Prime;
    Accumulator acc = make(a);
    std::mt19937_64 rng(stream_seed(cfg.seed, family.name, 5));
    const MembershipFunction whole = chi_interval(UnitValue(0.0), UnitValue(1.0));
    for (int t = 0; t < cfg.o5_samples; ++t) {
      double lo = static_cast<double>(rng() % (kPositionLattice + 1)) / kPositionLattice;
      double hi = static_cast<double>(rng() % (kPositionLattice + 1)) / kPositionLattice;
      if (lo > hi) std::swap(lo, hi);
      const MembershipFunction ab = chi_interval(UnitValue(lo), UnitValue(hi));
      acc.add(evaluate(ctx, a, {whole, ab}, std::nullopt, 0), {whole, ab},
              {chi_label(0.0, 1.0), chi_label(lo, hi)});
    }
    out.push_back(acc.finish());
  }
  for (const LiftedAxiom a : {LiftedAxiom::kO6, LiftedAxiom::kO7}) {
    const bool points = a == LiftedAxiom::kO6;
    Accumulator acc = make(a);
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < size; ++i) {
      const auto s = characteristic_support(mem[i]);
      if (s && (!points || s->first == s->second)) idx.push_back(i);
    }
    for (std::size_t i : idx) {
      for (std::size_t j : idx) {
        acc.add(evaluate(ctx, a, {mem[i], mem[j]}, std::nullopt, 0), {mem[i], mem[j]},
                {label(i), label(j)});
      }
    }
    out.push_back(acc.finish(points ? "family has no characteristic functions of points"
                                    : "family has no characteristic functions of intervals"));
  }
  return out;
}

double max_o2_residual(const Convolver& conv, const FunctionFamily& family, int triples,
                       std::uint64_t seed, double eps) {
  const auto& mem = family.members;
  if (mem.empty()) throw PreconditionError("function family is empty");
  const HarnessConfig cfg;
  const Lifted ctx(conv, eps, cfg);
  std::mt19937_64 rng(seed);
  double worst = 0.0;
  for (int t = 0; t < triples; ++t) {
    const std::size_t i = rng() % mem.size(), j = rng() % mem.size(), k = rng() % mem.size();
    const InstanceOutcome o =
        evaluate(ctx, LiftedAxiom::kO2, {mem[i], mem[j], mem[k]}, std::nullopt, cfg.bucket_window);
    worst = std::max(worst, o.residual);
  }
  return worst;
}

bool reevaluate(const ConvolutionOperator& opr, const AxiomReport& report,
                const HarnessConfig& cfg) {
  if (!report.witness) return false;
  ConvolutionOperator fresh = opr;
  fresh.grid_n = report.grid_n > 0 ? report.grid_n : opr.grid_n;
  const Convolver conv(fresh);
  const InstanceOutcome o = evaluate_instance(conv, report.axiom, report.witness->functions,
                                              report.witness->point, report.eps, cfg);
  return o.violated;
}

namespace {

struct Candidate {
  LiftedAxiom axiom;
  std::vector<MembershipFunction> functions;
  std::vector<std::string> labels;
  std::optional<double> at;
  std::string description;
};

Candidate mirror(Candidate c) {
  for (auto& f : c.functions) f = negate(f);
  for (auto& l : c.labels) l = "neg " + l;
  if (c.at) c.at = 1.0 - *c.at;
  if (c.axiom == LiftedAxiom::kO3) c.axiom = LiftedAxiom::kO3Prime;
  if (c.axiom == LiftedAxiom::kO5) c.axiom = LiftedAxiom::kO5Prime;
  c.description += " (mirrored by t -> 1 - t)";
  return c;
}

std::vector<Candidate> star_candidates(const ScalarCheck& c) {
  auto V = [](double x) { return v_func(UnitValue(x)); };
  auto Vl = [](double x) { return "V(" + num(x) + ")"; };
  const auto& w = c.witness;
  std::vector<Candidate> out;
  switch (c.axiom) {
    case ScalarAxiom::kT1:
      out.push_back({LiftedAxiom::kO1, {V(w[0]), V(w[1])}, {Vl(w[0]), Vl(w[1])}, 1.0,
                     "commutativity lifted through the value at 1"});
      break;
    case ScalarAxiom::kT2:
      out.push_back({LiftedAxiom::kO2,
                     {V(w[0]), V(w[1]), V(w[2])},
                     {Vl(w[0]), Vl(w[1]), Vl(w[2])},
                     1.0,
                     "associativity lifted through the value at 1"});
      break;
    case ScalarAxiom::kT3:
      out.push_back({LiftedAxiom::kO4,
                     {V(w[2]), V(w[0]), V(w[1])},
                     {Vl(w[2]), Vl(w[0]), Vl(w[1])},
                     1.0,
                     "monotonicity lifted through the value at 1"});
      break;
    case ScalarAxiom::kT4:
    case ScalarAxiom::kT4Prime: {
      const double x = w[0];
      const MembershipFunction c0 = chi_point(UnitValue(0.0)), c1 = chi_point(UnitValue(1.0));
      const std::string d = "neutral element lifted";
      if (x > 0.0 && x < 1.0) {
        out.push_back({LiftedAxiom::kO3, {w_func(UnitValue(x))}, {"W(" + num(x) + ")"}, x, d});
      } else if (x == 0.0) {
        out.push_back({LiftedAxiom::kO3, {c0}, {"chi{0}"}, 1.0, d});
      } else {
        out.push_back({LiftedAxiom::kO3, {c1}, {"chi{1}"}, 1.0, d});
      }
      out.push_back({LiftedAxiom::kO3, {w_func(UnitValue(x))}, {"W(" + num(x) + ")"},
                     std::nullopt, d});
      out.push_back({LiftedAxiom::kO3, {c0}, {"chi{0}"}, std::nullopt, d});
      out.push_back({LiftedAxiom::kO3, {c1}, {"chi{1}"}, std::nullopt, d});
      out.push_back({LiftedAxiom::kO3, {V(x)}, {"V(" + num(x) + ")"}, std::nullopt, d});
      break;
    }
  }
  return out;
}

std::vector<Candidate> combiner_candidates(const ScalarCheck& c) {
  auto X = [](double x) { return chi_point(UnitValue(x)); };
  auto Xl = [](double x) { return chi_label(x, x); };
  const auto& w = c.witness;
  switch (c.axiom) {
    case ScalarAxiom::kT1:
      return {{LiftedAxiom::kO1, {X(w[0]), X(w[1])}, {Xl(w[0]), Xl(w[1])}, std::nullopt,
               "chi{x} T chi{y} = chi{x comb y}"}};
    case ScalarAxiom::kT2:
      return {{LiftedAxiom::kO2,
               {X(w[0]), X(w[1]), X(w[2])},
               {Xl(w[0]), Xl(w[1]), Xl(w[2])},
               std::nullopt,
               "chi{x} T chi{y} = chi{x comb y}"}};
    case ScalarAxiom::kT3:
      return {{LiftedAxiom::kO4,
               {X(w[2]), X(w[0]), X(w[1])},
               {Xl(w[2]), Xl(w[0]), Xl(w[1])},
               std::nullopt,
               "chi{x1} below chi{x2} iff x1 <= x2"}};
    case ScalarAxiom::kT4:
      return {{LiftedAxiom::kO3, {X(w[0])}, {Xl(w[0])}, std::nullopt,
               "chi{1} T chi{x} = chi{1 comb x}"}};
    case ScalarAxiom::kT4Prime:
      return {{LiftedAxiom::kO3Prime, {X(w[0])}, {Xl(w[0])}, std::nullopt,
               "chi{0} T chi{x} = chi{0 comb x}"}};
  }
  return {};
}

}  // namespace

AxiomReport build_witness(const ConvolutionOperator& opr, const ScalarCheck& failed,
                          WitnessMode mode, double eps, const HarnessConfig& cfg) {
  if (failed.verdict != Verdict::kFail || failed.witness.empty()) {
    throw PreconditionError(std::string("no scalar failure of ") +
                            std::string(to_string(failed.axiom)) + " to witness");
  }
  const Convolver conv(opr);
  const Lifted ctx(conv, eps, cfg);
  std::vector<Candidate> cands;
  if (mode == WitnessMode::kStar) {
    cands = star_candidates(failed);
    if (opr.kind == ConvolutionKind::kJoin) {
      std::vector<Candidate> mirrored;
      for (const Candidate& c : cands) {
        mirrored.push_back(mirror(c));
        if (c.axiom == LiftedAxiom::kO4) {
          Candidate swapped = mirrored.back();
          std::swap(swapped.functions[1], swapped.functions[2]);
          std::swap(swapped.labels[1], swapped.labels[2]);
          mirrored.push_back(std::move(swapped));
        }
      }
      cands = std::move(mirrored);
    }
  } else {
    cands = combiner_candidates(failed);
  }

  AxiomReport report;
  report.family = mode == WitnessMode::kStar ? "witness(star)" : "witness(combiner)";
  report.grid_n = conv.grid_n();
  report.eps = eps;
  report.verdict = Verdict::kPass;
  report.note = "construction did not reproduce the failure";
  for (const Candidate& c : cands) {
    if (c.axiom == LiftedAxiom::kO4 && !leq_meet_order(c.functions[1], c.functions[2])) {
      continue;
    }
    const InstanceOutcome o = evaluate(ctx, c.axiom, c.functions, c.at, cfg.bucket_window);
    ++report.instances;
    if (!report.witness || o.violated) {
      report.axiom = c.axiom;
      report.mode = o.exact ? Mode::kExact
                            : (conv.lower_bound_mode() ? Mode::kLowerBound : Mode::kGrid);
      report.max_residual = o.residual;
      report.witness = Witness{c.functions, c.labels, o.point, o.lhs, o.rhs,
                               c.description + (o.description.empty() ? "" : "; " + o.description)};
    }
    if (o.violated) {
      report.verdict = Verdict::kFail;
      report.note = "scalar " + std::string(to_string(failed.axiom)) + " failure lifted to " +
                    std::string(to_string(c.axiom));
      break;
    }
  }
  return report;
}

}  // namespace t2fuzz

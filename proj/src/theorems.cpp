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

#include "t2fuzz/theorems.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "t2fuzz/generators.hpp"
#include "t2fuzz/grid.hpp"
#include "t2fuzz/orders.hpp"

namespace t2fuzz {

namespace {

ConvolutionKind combiner_kind(const ScalarReport& comb, const TheoremOptions& opts) {
  if (opts.kind) return *opts.kind;
  if (comb.is_t_norm()) return ConvolutionKind::kMeet;
  if (comb.is_t_conorm()) return ConvolutionKind::kJoin;
  return ConvolutionKind::kMeet;
}

void run_families(TheoremRecord& rec, const ConvolutionOperator& opr,
                  std::span<const FunctionFamily> families, const TheoremOptions& opts) {
  const Convolver conv(opr);
  for (const FunctionFamily& fam : families) {
    for (AxiomReport& r : check_tr_axioms(conv, fam, opts.eps, opts.harness)) {
      if (r.verdict == Verdict::kFail) {
        ++rec.lifted_failures;
        if (is_basic(r.axiom)) ++rec.basic_failures;
      }
      rec.lifted.push_back(std::move(r));
    }
  }
}

void link_failures(TheoremRecord& rec, const ConvolutionOperator& opr, WitnessMode mode) {
  const bool conorm = mode == WitnessMode::kCombiner && rec.kind == ConvolutionKind::kJoin;
  std::vector<std::string> basic;
  for (const AxiomReport& r : rec.lifted) {
    if (r.verdict == Verdict::kFail && is_basic(r.axiom)) basic.push_back(r.id() + "@" + r.family);
  }
  bool all_linked = true;
  for (ScalarAxiom a : rec.scalar.failures(conorm)) {
    ScalarLink link;
    link.scalar = rec.scalar.get(a);
    link.witness = build_witness(opr, link.scalar, mode, rec.eps, {});
    link.reproduced = link.witness.verdict == Verdict::kFail && reevaluate(opr, link.witness);
    link.harness_failures = basic;
    all_linked = all_linked && link.linked();
    rec.links.push_back(std::move(link));
  }
  const bool any_lifted =
      rec.basic_failures > 0 ||
      std::any_of(rec.links.begin(), rec.links.end(), [](const ScalarLink& l) { return l.reproduced; });
  rec.consistent = all_linked && any_lifted;
  if (!rec.consistent) {
    rec.note = "harness inconsistency: scalar failure without a lifted failure";
  }
}

void finish_forward(TheoremRecord& rec) {
  rec.consistent = rec.lifted_failures == 0;
  if (!rec.consistent) rec.note = "harness inconsistency: scalar pass but lifted failure";
}

}  // namespace

TheoremRecord theorem_roundtrip_star(const BinaryOp& star, const BinaryOp& combiner,
                                     std::span<const FunctionFamily> families,
                                     const TheoremOptions& opts) {
  const ScalarReport comb = check_scalar_axioms(combiner, opts.grid_n);
  const ConvolutionKind kind = combiner_kind(comb, opts);
  const bool comb_ok = kind == ConvolutionKind::kMeet ? comb.is_t_norm() : comb.is_t_conorm();
  if (!comb_ok || !comb.continuity.continuous || !combiner.declared_continuous()) {
    throw PreconditionError("combiner " + combiner.label() + " is not a continuous " +
                            (kind == ConvolutionKind::kMeet ? "t-norm" : "t-conorm"));
  }
  TheoremRecord rec;
  rec.mode = WitnessMode::kStar;
  rec.star = star.label();
  rec.combiner = combiner.label();
  rec.kind = kind;
  rec.grid_n = opts.grid_n;
  rec.eps = opts.eps;
  rec.scalar = check_scalar_axioms(star, opts.grid_n);
  rec.scalar_holds = rec.scalar.is_t_norm();
  const ConvolutionOperator opr{star, combiner, kind, Engine::kAuto, opts.grid_n};
  run_families(rec, opr, families, opts);
  if (rec.scalar_holds) {
    finish_forward(rec);
  } else {
    link_failures(rec, opr, WitnessMode::kStar);
  }
  if (!rec.scalar.continuity.continuous && rec.note.empty()) {
    rec.note = "star looks discontinuous: grid verdicts are lower bounds";
  }
  return rec;
}

TheoremRecord theorem_roundtrip_combiner(const BinaryOp& star, const BinaryOp& combiner,
                                         std::span<const FunctionFamily> families,
                                         const TheoremOptions& opts) {
  const ScalarReport st = check_scalar_axioms(star, opts.grid_n);
  if (!st.is_t_norm() || !st.continuity.continuous || !star.declared_continuous()) {
    throw PreconditionError("star " + star.label() + " is not a continuous t-norm");
  }
  TheoremRecord rec;
  rec.mode = WitnessMode::kCombiner;
  rec.star = star.label();
  rec.combiner = combiner.label();
  rec.grid_n = opts.grid_n;
  rec.eps = opts.eps;
  rec.scalar = check_scalar_axioms(combiner, opts.grid_n);
  rec.kind = combiner_kind(rec.scalar, opts);
  rec.scalar_holds = rec.kind == ConvolutionKind::kMeet ? rec.scalar.is_t_norm()
                                                        : rec.scalar.is_t_conorm();
  const ConvolutionOperator opr{star, combiner, rec.kind, Engine::kAuto, opts.grid_n};
  run_families(rec, opr, families, opts);
  if (rec.scalar_holds) {
    finish_forward(rec);
  } else {
    link_failures(rec, opr, WitnessMode::kCombiner);
  }
  return rec;
}

namespace {

LemmaVerdict lemma(std::string name, std::string statement) {
  LemmaVerdict v;
  v.name = std::move(name);
  v.statement = std::move(statement);
  return v;
}

void fail(LemmaVerdict& v, const std::string& detail) {
  if (v.verdict == Verdict::kFail) return;
  v.verdict = Verdict::kFail;
  v.detail = detail;
}

double lattice_point(std::mt19937_64& rng) {
  return static_cast<double>(rng() % (kPositionLattice + 1)) / kPositionLattice;
}

std::string str(double x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

}  // namespace

std::vector<LemmaVerdict> lemma_suite(const BinaryOp& star, const BinaryOp& combiner,
                                      const FunctionFamily& family,
                                      const TheoremOptions& opts) {
  std::vector<LemmaVerdict> out;
  const ScalarReport comb = check_scalar_axioms(combiner, 64);
  const ConvolutionKind kind = combiner_kind(comb, opts);
  const ConvolutionOperator opr{star, combiner, kind, Engine::kAuto, opts.grid_n};
  const Convolver conv(opr);
  const int n = opts.grid_n;
  const auto& mem = family.members;
  std::mt19937_64 rng(opts.harness.seed);

  {
    LemmaVerdict v = lemma("boundary-identity", "(f T g)(1) = f(1) star g(1)");
    if (!is_one_iff_both_one(combiner, n).holds) {
      v.verdict = Verdict::kSkipped;
      v.detail = "combiner reaches 1 away from (1,1)";
    } else {
      for (std::size_t i = 0; i < mem.size(); ++i) {
        for (std::size_t j = i; j < mem.size() && v.instances < 400; ++j) {
          const GridFunction g = conv.convolve_grid(mem[i], mem[j]);
          const double want = convolve_boundary_value(opr, mem[i], mem[j]);
          ++v.instances;
          if (!g.filled[n] || g.values[n] != want) {
            fail(v, "pair (" + std::to_string(i) + "," + std::to_string(j) + "): bucket " +
                        str(g.values[n]) + " vs " + str(want));
          }
        }
      }
    }
    out.push_back(v);
  }
  {
    LemmaVerdict v = lemma("chi-composition", "chi{x} T chi{y} = chi{x comb y}");
    if (!conv.exact_points_available()) {
      v.verdict = Verdict::kSkipped;
      v.detail = "star does not act as AND on {0,1}";
    } else {
      for (int t = 0; t < 100; ++t) {
        const double x = lattice_point(rng), y = lattice_point(rng);
        const auto fx = chi_point(UnitValue(x)), fy = chi_point(UnitValue(y));
        const double z = std::clamp(combiner(x, y), 0.0, 1.0);
        const ConvolutionResult r = conv.convolve(fx, fy);
        ++v.instances;
        if (!r.is_exact() || r.exact() != chi_point(UnitValue(z))) {
          fail(v, "exact engine disagrees at (" + str(x) + "," + str(y) + ")");
        }
        const GridFunction g = conv.convolve_grid(fx, fy);
        const auto k = grid_characteristic_point(g, 0.0);
        if (!k || *k != bucket_of(z, n)) {
          fail(v, "grid engine disagrees at (" + str(x) + "," + str(y) + ")");
        }
      }
    }
    out.push_back(v);
  }
  {
    LemmaVerdict v = lemma("chi-order", "chi{x1} below chi{x2} iff x1 <= x2");
    std::vector<std::pair<double, double>> pairs = {{0.9, 0.2}, {0.2, 0.9}, {0.5, 0.5}};
    for (int t = 0; t < 50; ++t) pairs.emplace_back(lattice_point(rng), lattice_point(rng));
    for (auto [a, b] : pairs) {
      ++v.instances;
      if (leq_meet_order(chi_point(UnitValue(a)), chi_point(UnitValue(b))) != (a <= b)) {
        fail(v, "order of chi{" + str(a) + "} and chi{" + str(b) + "} is wrong");
      }
    }
    out.push_back(v);
  }
  {
    LemmaVerdict v = lemma("v-order", "V(x1) below V(x2) iff x1 <= x2");
    for (int i = 0; i <= 10; ++i) {
      for (int j = 0; j <= 10; ++j) {
        const double a = i / 10.0, b = j / 10.0;
        ++v.instances;
        if (leq_meet_order(v_func(UnitValue(a)), v_func(UnitValue(b))) != (a <= b)) {
          fail(v, "order of V(" + str(a) + ") and V(" + str(b) + ") is wrong");
        }
      }
    }
    out.push_back(v);
  }
  {
    LemmaVerdict v = lemma("envelopes",
                           "envelopes are idempotent, mixed envelopes equal the sup, "
                           "f^L(0) = f(0) and f^R(1) = f(1)");
    for (const auto& f : mem) {
      const auto l = envelope_left(f), r = envelope_right(f);
      const auto top = MembershipFunction::constant(sup_of(f));
      ++v.instances;
      if (envelope_left(l) != l || envelope_right(r) != r) fail(v, "envelope not idempotent");
      if (envelope_right(l) != top || envelope_left(r) != top) fail(v, "mixed envelope is not the sup");
      if (l(0.0) != f(0.0) || r(1.0) != f(1.0)) fail(v, "envelope moves an endpoint");
    }
    out.push_back(v);
  }
  {
    // Detection: the lifted neutral law on W(x) fails exactly when x is not
    // neutral for the star.
    LemmaVerdict v = lemma("neutral-element", "T(f, chi{1}) = f forces x star 1 = x");
    v.mode = Mode::kGrid;
    for (int i = 1; i < 10; ++i) {
      const double x = snap_to_lattice(i / 10.0);
      const bool scalar_ok = std::abs(star(x, 1.0) - x) <= kDefaultScalarEps &&
                             std::abs(star(1.0, x) - x) <= kDefaultScalarEps;
      const InstanceOutcome o = evaluate_instance(conv, LiftedAxiom::kO3, {w_func(UnitValue(x))},
                                                  x, opts.eps, opts.harness);
      ++v.instances;
      if (o.violated == scalar_ok) {
        fail(v, "lifted and scalar neutral law disagree at x = " + str(x));
      }
    }
    out.push_back(v);
  }
  {
    LemmaVerdict v = lemma("annihilator", "T(f, chi{1}) = f forces 0 star 1 = 0");
    v.mode = Mode::kGrid;
    if (!is_one_iff_both_one(combiner, n).holds) {
      v.verdict = Verdict::kSkipped;
      v.detail = "combiner reaches 1 away from (1,1)";
    } else {
      for (int i = 2; i < 10; ++i) {
        const double x = snap_to_lattice(i / 10.0);
        const double t = snap_to_lattice(x / 2);
        bool scalar_ok = star(0.0, 1.0) == 0.0 && star(1.0, 0.0) == 0.0;
        for (int k = 0; k <= n; ++k) {
          const double y = grid_point(k, n);
          scalar_ok = scalar_ok && star(y, 0.0) == 0.0 && star(0.0, y) == 0.0;
        }
        const InstanceOutcome o = evaluate_instance(
            conv, LiftedAxiom::kO3, {w_func(UnitValue(x))}, t, opts.eps, opts.harness);
        ++v.instances;
        if (o.violated == scalar_ok) {
          fail(v, "lifted value below the step of W(" + str(x) + ") disagrees with 0 star y");
        }
      }
    }
    out.push_back(v);
  }
  {
    LemmaVerdict v = lemma("monotone-lift",
                           "x1 <= x2 gives T(V(x1), V(y)) below T(V(x2), V(y)) iff "
                           "x1 star y <= x2 star y");
    v.mode = Mode::kGrid;
    if (!is_one_iff_both_one(combiner, n).holds) {
      v.verdict = Verdict::kSkipped;
      v.detail = "combiner reaches 1 away from (1,1)";
    } else {
      for (int t = 0; t < 20; ++t) {
        double a = lattice_point(rng), b = lattice_point(rng);
        const double y = lattice_point(rng);
        if (a > b) std::swap(a, b);
        const bool scalar_ok = star(a, y) <= star(b, y) + kDefaultScalarEps &&
                               star(y, a) <= star(y, b) + kDefaultScalarEps;
        const InstanceOutcome o = evaluate_instance(
            conv, LiftedAxiom::kO4,
            {v_func(UnitValue(y)), v_func(UnitValue(a)), v_func(UnitValue(b))}, 1.0, opts.eps,
            opts.harness);
        ++v.instances;
        if (o.violated == scalar_ok) {
          fail(v, "lifted and scalar monotonicity disagree at (" + str(a) + "," + str(b) +
                      "," + str(y) + ")");
        }
      }
    }
    out.push_back(v);
  }
  return out;
}

std::string_view to_string(MatrixGroup g) {
  switch (g) {
    case MatrixGroup::kForward: return "forward";
    case MatrixGroup::kContrapositive: return "contrapositive";
    case MatrixGroup::kDual: return "dual";
  }
  return "?";
}

namespace {

struct CellSpec {
  MatrixGroup group;
  WitnessMode mode;
  std::string star;
  std::vector<double> star_params;
  std::string combiner;
  std::vector<double> combiner_params;
  bool expect_pass;
};

std::vector<CellSpec> default_cells() {
  std::vector<CellSpec> cells;
  const std::vector<std::pair<std::string, std::vector<double>>> norms = {
      {"minimum", {}}, {"product", {}}, {"lukasiewicz", {}}, {"hamacher", {2.0}}};
  for (const auto& s : norms) {
    for (const auto& c : norms) {
      cells.push_back({MatrixGroup::kForward, WitnessMode::kStar, s.first, s.second, c.first,
                       c.second, true});
    }
  }
  for (const char* s : {"mean", "scaled-product", "left-projection", "asym-power"}) {
    for (const char* c : {"minimum", "product"}) {
      cells.push_back({MatrixGroup::kContrapositive, WitnessMode::kStar, s, {}, c, {}, false});
    }
  }
  for (const char* c : {"mean", "left-projection"}) {
    cells.push_back({MatrixGroup::kDual, WitnessMode::kCombiner, "minimum", {}, c, {}, false});
  }
  for (const char* c : {"product", "maximum"}) {
    cells.push_back({MatrixGroup::kDual, WitnessMode::kCombiner, "minimum", {}, c, {}, true});
  }
  return cells;
}

bool matches(const std::optional<BinaryOp>& want, const BinaryOp& op) {
  return !want || want->label() == op.label();
}

MatrixCell run_cell(const CellSpec& spec, const BinaryOp& star, const BinaryOp& comb,
                    std::span<const FunctionFamily> families, const TheoremOptions& opts,
                    bool adhoc) {
  MatrixCell cell;
  cell.group = spec.group;
  cell.record = spec.mode == WitnessMode::kStar
                    ? theorem_roundtrip_star(star, comb, families, opts)
                    : theorem_roundtrip_combiner(star, comb, families, opts);
  const TheoremRecord& r = cell.record;
  if (adhoc) {
    cell.expectation = "scalar and lifted verdicts agree";
    cell.as_predicted = r.consistent;
  } else if (spec.expect_pass) {
    cell.expectation = "scalar pass, zero lifted failures";
    cell.as_predicted = r.consistent && r.scalar_holds && r.lifted_failures == 0;
  } else if (spec.group == MatrixGroup::kContrapositive) {
    cell.expectation = "every scalar failure reproduced by a lifted witness";
    cell.as_predicted = r.consistent && !r.scalar_holds &&
                        std::all_of(r.links.begin(), r.links.end(),
                                    [](const ScalarLink& l) { return l.reproduced; });
  } else {
    cell.expectation = "scalar failure reproduced by an exact chi witness on O1 or O3";
    cell.as_predicted =
        r.consistent && !r.scalar_holds &&
        std::any_of(r.links.begin(), r.links.end(), [](const ScalarLink& l) {
          return l.reproduced && l.witness.mode == Mode::kExact &&
                 (l.witness.axiom == LiftedAxiom::kO1 || l.witness.axiom == LiftedAxiom::kO3);
        });
  }
  return cell;
}

}  // namespace

std::vector<MatrixCell> theorem_matrix(std::span<const FunctionFamily> families,
                                       const TheoremOptions& opts, const MatrixSlice& slice) {
  std::vector<MatrixCell> out;
  bool any = false;
  for (const CellSpec& spec : default_cells()) {
    const BinaryOp star = catalog_lookup(spec.star, spec.star_params);
    const BinaryOp comb = catalog_lookup(spec.combiner, spec.combiner_params);
    if (!matches(slice.star, star) || !matches(slice.combiner, comb)) continue;
    if (slice.mode && *slice.mode != spec.mode) continue;
    any = true;
    out.push_back(run_cell(spec, star, comb, families, opts, false));
  }
  if (!any && slice.star && slice.combiner) {
    const BinaryOp& star = *slice.star;
    const BinaryOp& comb = *slice.combiner;
    const WitnessMode mode = slice.mode.value_or(WitnessMode::kStar);
    const CellSpec spec{mode == WitnessMode::kStar ? MatrixGroup::kContrapositive
                                                   : MatrixGroup::kDual,
                        mode, star.name(), {}, comb.name(), {}, false};
    MatrixCell cell = run_cell(spec, star, comb, families, opts, true);
    if (cell.record.scalar_holds) cell.group = MatrixGroup::kForward;
    out.push_back(std::move(cell));
  }
  return out;
}

}  // namespace t2fuzz

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

#include "t2fuzz/interval_ops.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <sstream>

#include "t2fuzz/grid.hpp"

namespace t2fuzz {

UnitValue::UnitValue(double v) : value_(v) {
  if (!(v >= 0.0 && v <= 1.0)) {
    std::ostringstream os;
    os << "value " << v << " is outside [0,1]";
    throw std::domain_error(os.str());
  }
}

std::string_view to_string(OpClass c) {
  switch (c) {
    case OpClass::kTNorm: return "t-norm";
    case OpClass::kTConorm: return "t-conorm";
    case OpClass::kOther: return "other";
  }
  return "other";
}

std::string_view to_string(ScalarAxiom a) {
  switch (a) {
    case ScalarAxiom::kT1: return "T1";
    case ScalarAxiom::kT2: return "T2";
    case ScalarAxiom::kT3: return "T3";
    case ScalarAxiom::kT4: return "T4";
    case ScalarAxiom::kT4Prime: return "T4'";
  }
  return "?";
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::kPass: return "pass";
    case Verdict::kFail: return "fail";
    case Verdict::kSkipped: return "skipped";
  }
  return "?";
}

BinaryOp::BinaryOp(std::string name, Fn fn, OpClass declared_class,
                   bool declared_continuous, std::vector<double> params,
                   bool closed_form)
    : name_(std::move(name)),
      fn_(std::move(fn)),
      declared_class_(declared_class),
      declared_continuous_(declared_continuous),
      params_(std::move(params)),
      closed_form_(closed_form) {
  if (!fn_) throw std::invalid_argument("BinaryOp needs a callable");
}

std::string BinaryOp::label() const {
  if (params_.empty()) return name_;
  std::string out = name_ + '(';
  for (std::size_t i = 0; i < params_.size(); ++i) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof buf, params_[i]);
    if (i) out += ',';
    out.append(buf, res.ptr);
  }
  return out + ')';
}

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double hamacher(double gamma, double x, double y) {
  const double num = x * y;
  if (num == 0.0) return 0.0;
  return num / (gamma + (1.0 - gamma) * (x + y - num));
}

}  // namespace

const std::vector<CatalogEntry>& catalog_entries() {
  static const std::vector<CatalogEntry> entries = {
      {"minimum", OpClass::kTNorm, true, false, "min(x,y)", {}},
      {"product", OpClass::kTNorm, true, false, "x*y", {}},
      {"lukasiewicz", OpClass::kTNorm, true, false, "max(x+y-1,0)", {}},
      {"drastic", OpClass::kTNorm, false, false,
       "min(x,y) if max(x,y)=1 else 0", {}},
      {"nilpotent-minimum", OpClass::kTNorm, false, false,
       "min(x,y) if x+y>1 else 0", {}},
      {"hamacher", OpClass::kTNorm, true, false,
       "x*y/(g+(1-g)*(x+y-x*y)), 0 at (0,0) when g=0",
       {{"gamma", 0.0, kInf, "Hamacher parameter, g >= 0"}}},
      {"maximum", OpClass::kTConorm, true, false, "max(x,y)", {}},
      {"probabilistic-sum", OpClass::kTConorm, true, false, "x+y-x*y", {}},
      {"bounded-sum", OpClass::kTConorm, true, false, "min(x+y,1)", {}},
      {"drastic-conorm", OpClass::kTConorm, false, false,
       "max(x,y) if min(x,y)=0 else 1", {}},
      {"mean", OpClass::kOther, true, true, "(x+y)/2", {}},
      {"scaled-product", OpClass::kOther, true, true, "x*y/2", {}},
      {"left-projection", OpClass::kOther, true, true, "x", {}},
      {"asym-power", OpClass::kOther, true, true, "x*y^2", {}},
      {"min-mean-blend", OpClass::kOther, true, true,
       "l*min(x,y)+(1-l)*(x+y)/2",
       {{"lambda", 0.0, 1.0, "weight of the minimum"}}},
  };
  return entries;
}

BinaryOp catalog_lookup(std::string_view name, std::span<const double> params) {
  const auto& entries = catalog_entries();
  const auto it = std::find_if(entries.begin(), entries.end(),
                               [&](const CatalogEntry& e) { return e.name == name; });
  if (it == entries.end()) {
    throw std::invalid_argument("unknown operation '" + std::string(name) + "'");
  }
  if (params.size() != it->params.size()) {
    std::ostringstream os;
    os << "operation '" << name << "' takes " << it->params.size()
       << " parameter(s), got " << params.size();
    throw std::invalid_argument(os.str());
  }
  for (std::size_t i = 0; i < params.size(); ++i) {
    const ParamSpec& spec = it->params[i];
    if (!(params[i] >= spec.min && params[i] <= spec.max) || !std::isfinite(params[i])) {
      std::ostringstream os;
      os << "parameter " << spec.name << "=" << params[i] << " of '" << name
         << "' is outside its domain";
      throw std::invalid_argument(os.str());
    }
  }
  std::vector<double> p(params.begin(), params.end());
  BinaryOp::Fn fn;
  if (name == "minimum") {
    fn = [](double x, double y) { return std::min(x, y); };
  } else if (name == "product") {
    fn = [](double x, double y) { return x * y; };
  } else if (name == "lukasiewicz") {
    fn = [](double x, double y) { return std::max(x + y - 1.0, 0.0); };
  } else if (name == "drastic") {
    fn = [](double x, double y) {
      return std::max(x, y) == 1.0 ? std::min(x, y) : 0.0;
    };
  } else if (name == "nilpotent-minimum") {
    fn = [](double x, double y) { return x + y > 1.0 ? std::min(x, y) : 0.0; };
  } else if (name == "hamacher") {
    const double gamma = p[0];
    fn = [gamma](double x, double y) { return hamacher(gamma, x, y); };
  } else if (name == "maximum") {
    fn = [](double x, double y) { return std::max(x, y); };
  } else if (name == "probabilistic-sum") {
    fn = [](double x, double y) { return x + y - x * y; };
  } else if (name == "bounded-sum") {
    fn = [](double x, double y) { return std::min(x + y, 1.0); };
  } else if (name == "drastic-conorm") {
    fn = [](double x, double y) {
      return std::min(x, y) == 0.0 ? std::max(x, y) : 1.0;
    };
  } else if (name == "mean") {
    fn = [](double x, double y) { return (x + y) / 2.0; };
  } else if (name == "scaled-product") {
    fn = [](double x, double y) { return x * y / 2.0; };
  } else if (name == "left-projection") {
    fn = [](double x, double) { return x; };
  } else if (name == "asym-power") {
    fn = [](double x, double y) { return x * y * y; };
  } else {  // min-mean-blend
    const double lambda = p[0];
    fn = [lambda](double x, double y) {
      return lambda * std::min(x, y) + (1.0 - lambda) * ((x + y) / 2.0);
    };
  }
  return BinaryOp(it->name, std::move(fn), it->declared_class,
                  it->declared_continuous, std::move(p), /*closed_form=*/true);
}

BinaryOp table_op(std::string name, int m, std::vector<double> values) {
  if (m < 1) throw std::invalid_argument("table needs at least a 2x2 grid");
  const std::size_t side = static_cast<std::size_t>(m) + 1;
  if (values.size() != side * side) {
    throw std::invalid_argument("table size does not match its resolution");
  }
  for (double v : values) {
    if (!(v >= 0.0 && v <= 1.0)) {
      throw std::invalid_argument("table value outside [0,1]");
    }
  }
  auto fn = [m, side, vals = std::move(values)](double x, double y) {
    const double fx = std::clamp(x, 0.0, 1.0) * m;
    const double fy = std::clamp(y, 0.0, 1.0) * m;
    const int i = std::min(static_cast<int>(fx), m - 1);
    const int j = std::min(static_cast<int>(fy), m - 1);
    const double u = fx - i;
    const double w = fy - j;
    auto at = [&](int a, int b) { return vals[a * side + b]; };
    const double v = (1 - u) * (1 - w) * at(i, j) + u * (1 - w) * at(i + 1, j) +
                     (1 - u) * w * at(i, j + 1) + u * w * at(i + 1, j + 1);
    return std::clamp(v, 0.0, 1.0);
  };
  return BinaryOp(std::move(name), std::move(fn), OpClass::kOther, true, {},
                  /*closed_form=*/false);
}

const ScalarCheck& ScalarReport::get(ScalarAxiom a) const {
  for (const auto& c : checks) {
    if (c.axiom == a) return c;
  }
  throw std::out_of_range("axiom not present in report");
}

bool ScalarReport::is_t_norm() const {
  return passes(ScalarAxiom::kT1) && passes(ScalarAxiom::kT2) &&
         passes(ScalarAxiom::kT3) && passes(ScalarAxiom::kT4);
}

bool ScalarReport::is_t_conorm() const {
  return passes(ScalarAxiom::kT1) && passes(ScalarAxiom::kT2) &&
         passes(ScalarAxiom::kT3) && passes(ScalarAxiom::kT4Prime);
}

std::vector<ScalarAxiom> ScalarReport::failures(bool conorm) const {
  std::vector<ScalarAxiom> out;
  for (ScalarAxiom a : {ScalarAxiom::kT1, ScalarAxiom::kT2, ScalarAxiom::kT3,
                        conorm ? ScalarAxiom::kT4Prime : ScalarAxiom::kT4}) {
    if (!passes(a)) out.push_back(a);
  }
  return out;
}

namespace {

// Keeps the largest violation seen so far.
ScalarCheck make_check(ScalarAxiom a) {
  ScalarCheck c;
  c.axiom = a;
  return c;
}

struct WorstViolation {
  double magnitude = 0.0;
  bool found = false;
  ScalarCheck* check;

  void offer(double lhs, double rhs, double eps, std::vector<double> witness,
             std::string side = {}) {
    const double d = std::abs(lhs - rhs);
    if (!(d > eps)) return;
    if (!found || d > magnitude) {
      found = true;
      magnitude = d;
      check->verdict = Verdict::kFail;
      check->witness = std::move(witness);
      check->side = std::move(side);
      check->lhs = lhs;
      check->rhs = rhs;
    }
  }
};

ScalarCheck neutral_check(const BinaryOp& op, const std::vector<double>& pts,
                          double neutral, ScalarAxiom axiom, double eps) {
  ScalarCheck check = make_check(axiom);
  // Interior witnesses are preferred: they drive the richer lifted
  // constructions. Endpoint failures are used only if nothing else fails.
  ScalarCheck endpoint = make_check(axiom);
  WorstViolation interior{0.0, false, &check};
  WorstViolation boundary{0.0, false, &endpoint};
  for (double x : pts) {
    WorstViolation& sink = (x > 0.0 && x < 1.0) ? interior : boundary;
    sink.offer(op(neutral, x), x, eps, {x}, "left");
    sink.offer(op(x, neutral), x, eps, {x}, "right");
    check.cases += 2;
  }
  if (!interior.found && boundary.found) {
    endpoint.cases = check.cases;
    return endpoint;
  }
  return check;
}

}  // namespace

ContinuityEstimate estimate_continuity(const BinaryOp& op, int grid_n) {
  auto max_jump = [&op](int n) {
    double jump = 0.0;
    std::vector<double> prev_row(n + 1);
    for (int i = 0; i <= n; ++i) {
      const double x = grid_point(i, n);
      double prev = 0.0;
      for (int j = 0; j <= n; ++j) {
        const double v = op(x, grid_point(j, n));
        if (j > 0) jump = std::max(jump, std::abs(v - prev));
        if (i > 0) jump = std::max(jump, std::abs(v - prev_row[j]));
        prev_row[j] = v;
        prev = v;
      }
    }
    return jump;
  };
  ContinuityEstimate est;
  est.max_jump = max_jump(grid_n);
  est.max_jump_refined = max_jump(2 * grid_n);
  est.continuous = est.max_jump_refined <= 0.75 * est.max_jump + 1e-12;
  return est;
}

ScalarReport check_scalar_axioms(const BinaryOp& op, int grid_n, double eps,
                                 int assoc_grid_n) {
  if (grid_n < 2) throw PreconditionError("grid_n must be at least 2");
  if (assoc_grid_n < 2) throw PreconditionError("assoc_grid_n must be at least 2");

  ScalarReport report;
  report.op = op.label();
  report.grid_n = grid_n;
  report.assoc_grid_n = assoc_grid_n;
  report.eps = eps;

  const int side = grid_n + 1;
  std::vector<double> pts(side);
  for (int i = 0; i < side; ++i) pts[i] = grid_point(i, grid_n);
  std::vector<double> table(static_cast<std::size_t>(side) * side);
  for (int i = 0; i < side; ++i) {
    for (int j = 0; j < side; ++j) table[i * side + j] = op(pts[i], pts[j]);
  }
  auto at = [&](int i, int j) { return table[i * side + j]; };

  ScalarCheck t1 = make_check(ScalarAxiom::kT1);
  {
    WorstViolation worst{0.0, false, &t1};
    for (int i = 0; i < side; ++i) {
      for (int j = i + 1; j < side; ++j) {
        worst.offer(at(i, j), at(j, i), eps, {pts[i], pts[j]});
        ++t1.cases;
      }
    }
  }

  ScalarCheck t2 = make_check(ScalarAxiom::kT2);
  {
    WorstViolation worst{0.0, false, &t2};
    const int m = assoc_grid_n;
    std::vector<double> q(m + 1);
    for (int i = 0; i <= m; ++i) q[i] = grid_point(i, m);
    std::vector<double> inner(static_cast<std::size_t>(m + 1) * (m + 1));
    for (int i = 0; i <= m; ++i) {
      for (int j = 0; j <= m; ++j) inner[i * (m + 1) + j] = op(q[i], q[j]);
    }
    for (int i = 0; i <= m; ++i) {
      for (int j = 0; j <= m; ++j) {
        const double xy = inner[i * (m + 1) + j];
        for (int k = 0; k <= m; ++k) {
          const double lhs = op(xy, q[k]);
          const double rhs = op(q[i], inner[j * (m + 1) + k]);
          worst.offer(lhs, rhs, eps, {q[i], q[j], q[k]});
          ++t2.cases;
        }
      }
    }
  }

  ScalarCheck t3 = make_check(ScalarAxiom::kT3);
  {
    WorstViolation worst{0.0, false, &t3};
    for (int i = 0; i + 1 < side; ++i) {
      for (int j = 0; j < side; ++j) {
        // First argument: x1 = pts[i] <= x2 = pts[i+1], y = pts[j].
        const double a = at(i, j), b = at(i + 1, j);
        if (a > b + eps) worst.offer(a, b, eps, {pts[i], pts[i + 1], pts[j]}, "left");
        const double c = at(j, i), d = at(j, i + 1);
        if (c > d + eps) worst.offer(c, d, eps, {pts[i], pts[i + 1], pts[j]}, "right");
        t3.cases += 2;
      }
    }
  }

  report.checks = {t1, t2, t3,
                   neutral_check(op, pts, 1.0, ScalarAxiom::kT4, eps),
                   neutral_check(op, pts, 0.0, ScalarAxiom::kT4Prime, eps)};
  report.continuity = estimate_continuity(op, grid_n);
  return report;
}

OneIffBothOne is_one_iff_both_one(const BinaryOp& op, int grid_n, double eps) {
  OneIffBothOne out;
  if (!(op(1.0, 1.0) >= 1.0 - eps)) {
    out.holds = false;
    out.witness = std::make_pair(1.0, 1.0);
    return out;
  }
  for (int i = 0; i <= grid_n; ++i) {
    const double x = grid_point(i, grid_n);
    for (int j = 0; j <= grid_n; ++j) {
      if (i == grid_n && j == grid_n) continue;
      const double y = grid_point(j, grid_n);
      if (op(x, y) >= 1.0 - eps) {
        out.holds = false;
        out.witness = std::make_pair(x, y);
        return out;
      }
    }
  }
  return out;
}

bool acts_as_and_on_booleans(const BinaryOp& op) {
  return op(1.0, 1.0) == 1.0 && op(1.0, 0.0) == 0.0 && op(0.0, 1.0) == 0.0 &&
         op(0.0, 0.0) == 0.0;
}

SurjectivityCheck check_surjective(const BinaryOp& op, int grid_n) {
  SurjectivityCheck out;
  const int dense = 4 * grid_n;
  std::vector<char> hit(grid_n + 1, 0);
  double lo = 1.0, hi = 0.0;
  for (int i = 0; i <= dense; ++i) {
    const double x = grid_point(i, dense);
    for (int j = 0; j <= dense; ++j) {
      const double v = op(x, grid_point(j, dense));
      lo = std::min(lo, v);
      hi = std::max(hi, v);
      hit[bucket_of(v, grid_n)] = 1;
    }
  }
  out.image_min = lo;
  out.image_max = hi;
  const auto missing = std::find(hit.begin(), hit.end(), 0);
  if (missing == hit.end()) return out;
  out.first_missing_bucket = static_cast<int>(missing - hit.begin());
  // A continuous op on the connected square that attains 0 and 1 hits every
  // value in between.
  out.surjective = lo == 0.0 && hi == 1.0 && estimate_continuity(op, grid_n).continuous;
  return out;
}

}  // namespace t2fuzz

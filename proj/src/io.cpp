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

#include "t2fuzz/io.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace t2fuzz {

namespace {

std::string fmt(double x) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

Json finite_or_null(double x) { return std::isfinite(x) ? Json(x) : Json(nullptr); }

template <class T>
T require(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw FormatError(std::string("missing field '") + key + "'");
  }
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("field '") + key + "': " + e.what());
  }
}

}  // namespace

Json to_json(const MembershipFunction& f) {
  Json segs = Json::array();
  const auto t = f.breakpoints();
  for (std::size_t i = 0; i < f.num_pieces(); ++i) {
    const auto aff = f.affine(i);
    segs.push_back({{"a", aff.a},
                    {"b", aff.b},
                    {"left", f.pieces()[i].left},
                    {"right", f.pieces()[i].right}});
  }
  return {{"breakpoints", std::vector<double>(t.begin(), t.end())},
          {"point_values", std::vector<double>(f.point_values().begin(), f.point_values().end())},
          {"segments", segs}};
}

MembershipFunction function_from_json(const Json& j) {
  auto t = require<std::vector<double>>(j, "breakpoints");
  auto v = require<std::vector<double>>(j, "point_values");
  const Json segs = require<Json>(j, "segments");
  if (!segs.is_array() || segs.size() + 1 != t.size()) {
    throw FormatError("need one segment per gap between breakpoints");
  }
  try {
    bool limits = true;
    for (const auto& s : segs) limits = limits && s.contains("left") && s.contains("right");
    if (limits) {
      std::vector<MembershipFunction::Piece> pieces;
      for (const auto& s : segs) {
        pieces.push_back({require<double>(s, "left"), require<double>(s, "right")});
      }
      return MembershipFunction::create(std::move(t), std::move(v), std::move(pieces));
    }
    std::vector<MembershipFunction::Affine> aff;
    for (const auto& s : segs) aff.push_back({require<double>(s, "a"), require<double>(s, "b")});
    return MembershipFunction::from_affine(std::move(t), std::move(v), aff);
  } catch (const std::invalid_argument& e) {
    throw FormatError(std::string("invalid function: ") + e.what());
  }
}

Json to_json(const BinaryOp& op) {
  return {{"name", op.name()},
          {"params", std::vector<double>(op.params().begin(), op.params().end())}};
}

BinaryOp op_from_json(const Json& j, const std::filesystem::path& base_dir) {
  if (j.is_string()) return catalog_lookup(j.get<std::string>());
  if (j.is_object() && j.contains("table")) {
    std::filesystem::path p = require<std::string>(j, "table");
    if (p.is_relative() && !base_dir.empty()) p = base_dir / p;
    return read_op_table_csv(p);
  }
  const auto name = require<std::string>(j, "name");
  std::vector<double> params;
  if (j.contains("params")) params = require<std::vector<double>>(j, "params");
  try {
    return catalog_lookup(name, params);
  } catch (const std::invalid_argument& e) {
    throw FormatError(e.what());
  }
}

Json to_json(const ConvolutionOperator& opr) {
  return {{"star", to_json(opr.star)},
          {"combiner", to_json(opr.combiner)},
          {"kind", to_string(opr.kind)},
          {"engine", to_string(opr.engine)},
          {"grid_n", opr.grid_n}};
}

ConvolutionOperator operator_from_json(const Json& j, const std::filesystem::path& base_dir) {
  ConvolutionOperator opr{op_from_json(require<Json>(j, "star"), base_dir),
                          op_from_json(require<Json>(j, "combiner"), base_dir)};
  if (j.contains("kind")) {
    const auto k = require<std::string>(j, "kind");
    if (k == "meet") {
      opr.kind = ConvolutionKind::kMeet;
    } else if (k == "join") {
      opr.kind = ConvolutionKind::kJoin;
    } else {
      throw FormatError("kind must be 'meet' or 'join', got '" + k + "'");
    }
  }
  if (j.contains("engine")) {
    const auto e = require<std::string>(j, "engine");
    if (e == "grid") {
      opr.engine = Engine::kGrid;
    } else if (e == "exact") {
      opr.engine = Engine::kExact;
    } else if (e == "auto") {
      opr.engine = Engine::kAuto;
    } else {
      throw FormatError("engine must be 'grid', 'exact' or 'auto', got '" + e + "'");
    }
  }
  if (j.contains("grid_n")) opr.grid_n = require<int>(j, "grid_n");
  if (opr.grid_n < 2) throw FormatError("grid_n must be at least 2");
  return opr;
}

Json to_json(const GridFunction& g) {
  Json filled = Json::array();
  for (char c : g.filled) filled.push_back(c != 0);
  return {{"n", g.n},
          {"values", g.values},
          {"filled", filled},
          {"lower_bound", g.lower_bound},
          {"refined_buckets", g.refined_buckets},
          {"unfilled", g.unfilled_count()}};
}

Json to_json(const ScalarReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    Json jc = {{"axiom", to_string(c.axiom)}, {"verdict", to_string(c.verdict)}, {"cases", c.cases}};
    if (c.verdict == Verdict::kFail) {
      jc["witness"] = c.witness;
      if (!c.side.empty()) jc["side"] = c.side;
      jc["lhs"] = c.lhs;
      jc["rhs"] = c.rhs;
    }
    checks.push_back(jc);
  }
  return {{"op", r.op},
          {"grid_n", r.grid_n},
          {"assoc_grid_n", r.assoc_grid_n},
          {"eps", r.eps},
          {"t_norm", r.is_t_norm()},
          {"t_conorm", r.is_t_conorm()},
          {"checks", checks},
          {"continuity",
           {{"max_jump", r.continuity.max_jump},
            {"max_jump_refined", r.continuity.max_jump_refined},
            {"continuous", r.continuity.continuous}}}};
}

Json to_json(const AxiomReport& r) {
  Json j = {{"axiom", r.id()},
            {"family", r.family},
            {"verdict", to_string(r.verdict)},
            {"mode", to_string(r.mode)},
            {"grid_n", r.grid_n},
            {"eps", r.eps},
            {"instances", r.instances},
            {"max_residual", r.max_residual}};
  if (!r.note.empty()) j["note"] = r.note;
  if (r.witness) {
    Json fns = Json::array();
    for (const auto& f : r.witness->functions) fns.push_back(to_json(f));
    j["witness"] = {{"labels", r.witness->labels},
                    {"point", r.witness->point},
                    {"lhs", r.witness->lhs},
                    {"rhs", r.witness->rhs},
                    {"description", r.witness->description},
                    {"functions", fns}};
  }
  return j;
}

Json to_json(const TheoremRecord& r) {
  Json links = Json::array();
  for (const auto& l : r.links) {
    links.push_back({{"scalar_axiom", to_string(l.scalar.axiom)},
                     {"scalar_witness", l.scalar.witness},
                     {"scalar_lhs", l.scalar.lhs},
                     {"scalar_rhs", l.scalar.rhs},
                     {"lifted", to_json(l.witness)},
                     {"reproduced", l.reproduced},
                     {"harness_failures", l.harness_failures},
                     {"linked", l.linked()}});
  }
  Json lifted = Json::array();
  for (const auto& a : r.lifted) lifted.push_back(to_json(a));
  Json j = {{"mode", r.mode == WitnessMode::kStar ? "star" : "combiner"},
            {"star", r.star},
            {"combiner", r.combiner},
            {"kind", to_string(r.kind)},
            {"grid_n", r.grid_n},
            {"eps", r.eps},
            {"scalar_holds", r.scalar_holds},
            {"lifted_failures", r.lifted_failures},
            {"basic_failures", r.basic_failures},
            {"consistent", r.consistent},
            {"scalar", to_json(r.scalar)},
            {"links", links},
            {"lifted", lifted}};
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

Json to_json(const LemmaVerdict& v) {
  Json j = {{"name", v.name},
            {"statement", v.statement},
            {"verdict", to_string(v.verdict)},
            {"mode", to_string(v.mode)},
            {"instances", v.instances}};
  if (!v.detail.empty()) j["detail"] = v.detail;
  return j;
}

Json to_json(const MatrixCell& c) {
  return {{"group", to_string(c.group)},
          {"expectation", c.expectation},
          {"as_predicted", c.as_predicted},
          {"record", to_json(c.record)}};
}

void write_function_csv(std::ostream& os, const MembershipFunction& f, int n) {
  os << "t,value\n";
  const auto v = f.sample(n);
  for (int i = 0; i <= n; ++i) {
    os << fmt(static_cast<double>(i) / n) << ',' << fmt(v[i]) << '\n';
  }
}

void write_grid_csv(std::ostream& os, const GridFunction& g) {
  os << "x,value,filled\n";
  for (int k = 0; k <= g.n; ++k) {
    os << fmt(static_cast<double>(k) / g.n) << ',' << (g.filled[k] ? fmt(g.values[k]) : "")
       << ',' << (g.filled[k] ? 1 : 0) << '\n';
  }
}

void write_op_table_csv(std::ostream& os, const BinaryOp& op, int m) {
  os << "x,y,value\n";
  for (int i = 0; i <= m; ++i) {
    for (int j = 0; j <= m; ++j) {
      const double x = static_cast<double>(i) / m, y = static_cast<double>(j) / m;
      os << fmt(x) << ',' << fmt(y) << ',' << fmt(op(x, y)) << '\n';
    }
  }
}

BinaryOp read_op_table_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open op table " + path.string());
  std::string line;
  std::vector<std::array<double, 3>> rows;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || (lineno == 1 && line.rfind("x", 0) == 0)) continue;
    std::array<double, 3> r{};
    std::istringstream ls(line);
    std::string cell;
    for (int c = 0; c < 3; ++c) {
      if (!std::getline(ls, cell, ',')) {
        throw FormatError(path.string() + ":" + std::to_string(lineno) + ": need x,y,value");
      }
      const auto res = std::from_chars(cell.data(), cell.data() + cell.size(), r[c]);
      if (res.ec != std::errc()) {
        throw FormatError(path.string() + ":" + std::to_string(lineno) + ": bad number '" +
                          cell + "'");
      }
    }
    rows.push_back(r);
  }
  const auto side = static_cast<std::size_t>(std::llround(std::sqrt(rows.size())));
  if (side < 2 || side * side != rows.size()) {
    throw FormatError(path.string() + ": row count is not a square of at least 4");
  }
  const int m = static_cast<int>(side) - 1;
  std::vector<double> values;
  for (std::size_t k = 0; k < rows.size(); ++k) {
    const double x = static_cast<double>(k / side) / m, y = static_cast<double>(k % side) / m;
    if (std::abs(rows[k][0] - x) > 1e-9 || std::abs(rows[k][1] - y) > 1e-9) {
      throw FormatError(path.string() + ": row " + std::to_string(k + 1) +
                        " is not at the expected grid point (row-major in x)");
    }
    values.push_back(rows[k][2]);
  }
  try {
    return table_op("table:" + path.filename().string(), m, std::move(values));
  } catch (const std::invalid_argument& e) {
    throw FormatError(path.string() + ": " + e.what());
  }
}

std::string to_text(const ScalarReport& r) {
  std::ostringstream os;
  os << "op " << r.op << "  grid_n=" << r.grid_n << " assoc_grid_n=" << r.assoc_grid_n
     << " eps=" << r.eps << '\n';
  os << std::left << std::setw(6) << "axiom" << std::setw(9) << "verdict" << "witness\n";
  for (const auto& c : r.checks) {
    os << std::setw(6) << to_string(c.axiom) << std::setw(9) << to_string(c.verdict);
    if (c.verdict == Verdict::kFail) {
      os << '(';
      for (std::size_t i = 0; i < c.witness.size(); ++i) os << (i ? ", " : "") << c.witness[i];
      os << ')';
      if (!c.side.empty()) os << ' ' << c.side;
      os << "  " << c.lhs << " vs " << c.rhs;
    }
    os << '\n';
  }
  os << "continuity: " << (r.continuity.continuous ? "continuous" : "discontinuous")
     << " (max jump " << r.continuity.max_jump << " -> " << r.continuity.max_jump_refined
     << ")\n";
  os << "t-norm: " << (r.is_t_norm() ? "yes" : "no")
     << "  t-conorm: " << (r.is_t_conorm() ? "yes" : "no") << '\n';
  return os.str();
}

std::string to_text(std::span<const AxiomReport> reports) {
  std::ostringstream os;
  os << std::left << std::setw(8) << "family" << std::setw(6) << "axiom" << std::setw(9)
     << "verdict" << std::setw(12) << "mode" << std::setw(10) << "instances"
     << "detail\n";
  for (const auto& r : reports) {
    os << std::setw(8) << r.family << std::setw(6) << r.id() << std::setw(9)
       << to_string(r.verdict) << std::setw(12) << to_string(r.mode) << std::setw(10)
       << r.instances;
    if (r.witness) {
      os << '[';
      for (std::size_t i = 0; i < r.witness->labels.size(); ++i) {
        os << (i ? ", " : "") << r.witness->labels[i];
      }
      os << "] at " << r.witness->point << ": " << r.witness->lhs << " vs " << r.witness->rhs;
    } else if (!r.note.empty()) {
      os << r.note;
    }
    os << '\n';
  }
  return os.str();
}

std::string to_text(const TheoremRecord& r) {
  std::ostringstream os;
  os << (r.mode == WitnessMode::kStar ? "star " : "combiner ") << "round-trip: star=" << r.star
     << " combiner=" << r.combiner << " kind=" << to_string(r.kind) << '\n';
  os << "  scalar: " << (r.scalar_holds ? "pass" : "fail") << "  lifted failures: "
     << r.lifted_failures << " (basic " << r.basic_failures << ")  "
     << (r.consistent ? "consistent" : "INCONSISTENT") << '\n';
  for (const auto& l : r.links) {
    os << "  scalar " << to_string(l.scalar.axiom) << " fail => lifted " << l.witness.id() << ' '
       << (l.reproduced ? "fail (witness reproduced)" : "not reproduced");
    if (l.witness.witness) {
      const auto& w = *l.witness.witness;
      os << " [";
      for (std::size_t i = 0; i < w.labels.size(); ++i) os << (i ? ", " : "") << w.labels[i];
      os << "] at " << w.point << ": " << w.lhs << " vs " << w.rhs;
    }
    os << '\n';
  }
  if (!r.note.empty()) os << "  note: " << r.note << '\n';
  return os.str();
}

Json catalog_manifest() {
  Json entries = Json::array();
  for (const auto& e : catalog_entries()) {
    Json params = Json::array();
    for (const auto& p : e.params) {
      params.push_back({{"name", p.name},
                        {"min", finite_or_null(p.min)},
                        {"max", finite_or_null(p.max)},
                        {"description", p.description}});
    }
    entries.push_back({{"name", e.name},
                       {"class", to_string(e.declared_class)},
                       {"continuous", e.declared_continuous},
                       {"broken", e.broken},
                       {"formula", e.formula},
                       {"params", params}});
  }
  return {{"format", "t2fuzz-catalog"},
          {"version", 1},
          {"license", "Apache-2.0"},
          {"entries", entries}};
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw FormatError(path.string() + ": " + e.what());
  }
}

MembershipFunction read_function_file(const std::filesystem::path& path) {
  return function_from_json(read_json_file(path));
}

void write_file_atomic(const std::filesystem::path& path, const std::string& content) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    out << content;
    if (!out.flush()) throw std::runtime_error("write failed for " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace t2fuzz

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

#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "t2fuzz/generators.hpp"
#include "t2fuzz/io.hpp"
#include "t2fuzz/theorems.hpp"

namespace t2fuzz::cli {

namespace {

constexpr const char* kVersion = "0.1.0";

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  return out;
}

double to_number(const std::string& s, const std::string& context) {
  try {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw FormatError("bad number '" + s + "' in " + context);
  }
}

UnitValue unit(double v, const std::string& context) {
  try {
    return UnitValue(v);
  } catch (const std::domain_error&) {
    throw FormatError(context + ": " + std::to_string(v) + " is outside [0,1]");
  }
}

std::filesystem::path resolve(const std::filesystem::path& p, const std::filesystem::path& base) {
  return p.is_relative() && !base.empty() ? base / p : p;
}

double eps_or(const RunConfig& c, double fallback) { return c.eps.value_or(fallback); }

Json header(const RunConfig& c, double eps) {
  return {{"tool", "t2fuzz"},
          {"version", kVersion},
          {"subcommand", c.subcommand},
          {"grid_n", c.grid_n},
          {"eps", eps},
          {"seed", c.seed},
          {"families",
           {{"points", c.sizes.points},
            {"intervals", c.sizes.intervals},
            {"v", c.sizes.v},
            {"w", c.sizes.w},
            {"random", c.sizes.random}}},
          {"harness",
           {{"o2_triples", c.harness.o2_triples},
            {"o4_cases", c.harness.o4_cases},
            {"o5_samples", c.harness.o5_samples},
            {"bucket_window", c.harness.bucket_window}}}};
}

std::string text_header(const RunConfig& c, double eps) {
  std::ostringstream os;
  os << "# t2fuzz " << c.subcommand << " grid_n=" << c.grid_n << " eps=" << eps
     << " seed=" << c.seed << " families=J" << c.sizes.points << ",K" << c.sizes.intervals
     << ",V" << c.sizes.v << ",W" << c.sizes.w << ",L" << c.sizes.random << '\n';
  return os.str();
}

std::string out_name(const RunConfig& c) { return c.name.empty() ? c.subcommand : c.name; }

void write_outputs(const RunConfig& c, const std::string& suffix, const std::string& content) {
  write_file_atomic(c.out_dir / (out_name(c) + suffix), content);
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

ConvolutionKind parse_kind(const std::string& kind, const BinaryOp& combiner) {
  if (kind == "meet") return ConvolutionKind::kMeet;
  if (kind == "join") return ConvolutionKind::kJoin;
  if (kind == "auto") {
    return combiner.declared_class() == OpClass::kTConorm ? ConvolutionKind::kJoin
                                                          : ConvolutionKind::kMeet;
  }
  throw FormatError("--kind must be meet, join or auto");
}

Engine parse_engine(const std::string& e) {
  if (e == "auto") return Engine::kAuto;
  if (e == "grid") return Engine::kGrid;
  if (e == "exact") return Engine::kExact;
  throw FormatError("--engine must be auto, grid or exact");
}

HarnessConfig harness_of(const RunConfig& c) {
  HarnessConfig h = c.harness;
  h.seed = c.seed;
  return h;
}

// Reads a JSON object whose keys are long flag names (dashes or underscores).
class JsonConfig : public CLI::Config {
 public:
  std::string to_config(const CLI::App*, bool, bool, std::string) const override {
    return "{}\n";
  }

  std::vector<CLI::ConfigItem> from_config(std::istream& in) const override {
    Json j;
    try {
      j = Json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
      throw CLI::ConversionError(std::string("config file: ") + e.what());
    }
    if (!j.is_object()) throw CLI::ConversionError("config file must hold a JSON object");
    std::vector<CLI::ConfigItem> items;
    for (const auto& [key, value] : j.items()) {
      CLI::ConfigItem item;
      item.name = key;
      std::replace(item.name.begin(), item.name.end(), '_', '-');
      if (value.is_array()) {
        for (const auto& e : value) item.inputs.push_back(scalar(e));
      } else {
        item.inputs.push_back(scalar(value));
      }
      items.push_back(std::move(item));
    }
    return items;
  }

 private:
  static std::string scalar(const Json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
    if (v.is_number()) return v.dump();
    throw CLI::ConversionError("config values must be strings, numbers, booleans or arrays");
  }
};

}  // namespace

MembershipFunction parse_function_spec(const std::string& spec,
                                       const std::filesystem::path& base_dir) {
  if (spec.empty()) throw FormatError("empty function spec");
  if (spec.size() > 5 && spec.substr(spec.size() - 5) == ".json") {
    return read_function_file(resolve(spec, base_dir));
  }
  const auto colon = spec.find(':');
  const std::string name = spec.substr(0, colon);
  std::vector<double> args;
  if (colon != std::string::npos) {
    for (const auto& a : split(spec.substr(colon + 1), ',')) args.push_back(to_number(a, spec));
  }
  auto need = [&](std::size_t lo, std::size_t hi) {
    if (args.size() < lo || args.size() > hi) {
      throw FormatError("function spec '" + spec + "' has the wrong number of arguments");
    }
  };
  if (name == "v") {
    need(1, 1);
    return v_func(unit(args[0], spec));
  }
  if (name == "w") {
    need(1, 1);
    return w_func(unit(args[0], spec));
  }
  if (name == "chi-point") {
    need(1, 1);
    return chi_point(unit(args[0], spec));
  }
  if (name == "chi-interval") {
    need(2, 2);
    if (args[0] > args[1]) throw FormatError("chi-interval needs a <= b in '" + spec + "'");
    return chi_interval(unit(args[0], spec), unit(args[1], spec));
  }
  if (name == "const") {
    need(1, 1);
    unit(args[0], spec);
    return MembershipFunction::constant(args[0]);
  }
  if (name == "tent") {
    need(1, 3);
    const double l = args.size() > 1 ? args[1] : 0.0;
    const double r = args.size() > 2 ? args[2] : 0.0;
    return tent(unit(args[0], spec), unit(l, spec), unit(r, spec));
  }
  throw FormatError("unknown function '" + name +
                    "' (expected v, w, chi-point, chi-interval, const, tent or a .json path)");
}

BinaryOp parse_op_spec(const std::string& spec, const std::vector<double>& params,
                       const std::filesystem::path& base_dir) {
  if (spec.empty()) throw FormatError("empty op spec");
  if (spec.rfind("table:", 0) == 0) return read_op_table_csv(resolve(spec.substr(6), base_dir));
  std::string name = spec;
  std::vector<double> all;
  const auto open = spec.find('(');
  if (open != std::string::npos) {
    if (spec.back() != ')') throw FormatError("unbalanced parentheses in op spec '" + spec + "'");
    name = spec.substr(0, open);
    const std::string inner = spec.substr(open + 1, spec.size() - open - 2);
    if (!inner.empty()) {
      for (const auto& a : split(inner, ',')) all.push_back(to_number(a, spec));
    }
  }
  all.insert(all.end(), params.begin(), params.end());
  if (name == "min") name = "minimum";
  if (name == "max") name = "maximum";
  try {
    return catalog_lookup(name, all);
  } catch (const std::invalid_argument& e) {
    throw FormatError(e.what());
  }
}

int cmd_check_op(const RunConfig& c, std::ostream& out) {
  if (c.op.empty()) throw FormatError("check-op needs --op");
  const BinaryOp op = parse_op_spec(c.op, c.params, c.base_dir);
  const double eps = eps_or(c, kDefaultScalarEps);
  const ScalarReport r = check_scalar_axioms(op, c.grid_n, eps, c.assoc_grid);
  bool conorm = op.declared_class() == OpClass::kTConorm;
  if (c.reading == "norm") {
    conorm = false;
  } else if (c.reading == "conorm") {
    conorm = true;
  } else if (c.reading != "auto") {
    throw FormatError("--reading must be norm, conorm or auto");
  }
  const auto failed = r.failures(conorm);
  Json failed_ids = Json::array();
  std::string failed_text;
  for (ScalarAxiom a : failed) {
    failed_ids.push_back(to_string(a));
    failed_text += (failed_text.empty() ? "" : ", ") + std::string(to_string(a));
  }
  const Json j = {{"header", header(c, eps)},
                  {"op", to_json(op)},
                  {"reading", conorm ? "t-conorm" : "t-norm"},
                  {"failed", failed_ids},
                  {"report", to_json(r)}};
  std::string text = text_header(c, eps) + to_text(r);
  text += std::string("reading: ") + (conorm ? "t-conorm" : "t-norm") + "; failed: " +
          (failed.empty() ? "none" : failed_text) + "\n";
  write_outputs(c, ".json", dump(j));
  write_outputs(c, ".txt", text);
  out << text;
  return failed.empty() ? kExitOk : kExitAxiomFailure;
}

int cmd_convolve(const RunConfig& c, std::ostream& out) {
  if (c.f.empty() || c.g.empty()) throw FormatError("convolve needs --f and --g");
  const BinaryOp star = parse_op_spec(c.star, c.star_params, c.base_dir);
  const BinaryOp comb = parse_op_spec(c.combiner, c.combiner_params, c.base_dir);
  const ConvolutionOperator opr{star, comb, parse_kind(c.kind, comb), parse_engine(c.engine),
                                c.grid_n};
  const MembershipFunction f = parse_function_spec(c.f, c.base_dir);
  const MembershipFunction g = parse_function_spec(c.g, c.base_dir);
  const Convolver conv(opr);
  const ConvolutionResult r = conv.convolve(f, g);
  const int samples = c.samples > 0 ? c.samples : c.grid_n;
  const double eps = eps_or(c, kDefaultHarnessEps);

  Json j = {{"header", header(c, eps)},
            {"operator", to_json(opr)},
            {"f", to_json(f)},
            {"g", to_json(g)},
            {"engine", to_string(r.engine)},
            {"lower_bound_mode", conv.lower_bound_mode()}};
  std::ostringstream text;
  text << text_header(c, eps) << "star=" << star.label() << " combiner=" << comb.label()
       << " kind=" << to_string(opr.kind) << " engine=" << to_string(r.engine) << '\n';
  std::ostringstream csv;
  int unfilled = 0;
  if (r.is_exact()) {
    j["result"] = {{"function", to_json(r.exact())}};
    write_function_csv(csv, r.exact(), samples);
    text << "exact result with " << r.exact().breakpoints().size() << " breakpoints\n";
  } else {
    const GridFunction& grid = r.grid();
    j["result"] = {{"grid", to_json(grid)}};
    write_grid_csv(csv, grid);
    unfilled = grid.unfilled_count();
    text << "grid result: " << grid.n + 1 << " buckets, " << grid.refined_buckets
         << " filled by refinement, " << unfilled << " unfilled"
         << (grid.lower_bound ? ", lower-bound mode" : "") << '\n';
    if (grid.filled[grid.n]) text << "value at 1: " << grid.values[grid.n] << '\n';
  }
  try {
    const double b = convolve_boundary_value(opr, f, g);
    j["boundary_value"] = b;
    text << "boundary value star(f(1), g(1)) = " << b << '\n';
  } catch (const PreconditionError&) {
    j["boundary_value"] = nullptr;
  }
  std::ostringstream fcsv, gcsv;
  write_function_csv(fcsv, f, samples);
  write_function_csv(gcsv, g, samples);
  write_outputs(c, ".json", dump(j));
  write_outputs(c, ".csv", csv.str());
  write_outputs(c, "-f.csv", fcsv.str());
  write_outputs(c, "-g.csv", gcsv.str());
  write_outputs(c, ".txt", text.str());
  out << text.str();
  if (unfilled > 0 && !c.allow_partial) {
    out << unfilled << " buckets were never hit; rerun with --allow-partial to accept\n";
    return kExitAxiomFailure;
  }
  return kExitOk;
}

int cmd_verify_theorems(const RunConfig& c, std::ostream& out) {
  const double eps = eps_or(c, kDefaultHarnessEps);
  const auto families = default_families(c.seed, c.sizes);
  TheoremOptions opts;
  opts.grid_n = c.grid_n;
  opts.eps = eps;
  opts.harness = harness_of(c);
  MatrixSlice slice;
  if (c.star_given) slice.star = parse_op_spec(c.star, c.star_params, c.base_dir);
  if (c.combiner_given) slice.combiner = parse_op_spec(c.combiner, c.combiner_params, c.base_dir);
  if (c.mode == "star") {
    slice.mode = WitnessMode::kStar;
  } else if (c.mode == "combiner") {
    slice.mode = WitnessMode::kCombiner;
  } else if (c.mode != "all") {
    throw FormatError("--mode must be star, combiner or all");
  }
  const auto cells = theorem_matrix(families, opts, slice);
  if (cells.empty()) {
    throw FormatError("the slice matches no matrix cell; give both --star and --combiner");
  }
  Json jcells = Json::array();
  std::ostringstream text;
  text << text_header(c, eps);
  int predicted = 0, inconsistent = 0;
  for (const auto& cell : cells) {
    jcells.push_back(to_json(cell));
    predicted += cell.as_predicted ? 1 : 0;
    inconsistent += cell.record.consistent ? 0 : 1;
    text << (cell.as_predicted ? "[ok]   " : "[FAIL] ") << to_string(cell.group) << ": "
         << cell.expectation << '\n'
         << to_text(cell.record);
  }
  Json j = {{"header", header(c, eps)},
            {"summary",
             {{"cells", cells.size()}, {"as_predicted", predicted}, {"inconsistent", inconsistent}}},
            {"cells", jcells}};
  if (c.lemmas) {
    Json lemmas = Json::array();
    std::set<std::string> seen;
    const FunctionFamily fam = random_family(std::min(c.sizes.random, 20), c.seed);
    for (const auto& cell : cells) {
      const std::string key = cell.record.star + "|" + cell.record.combiner;
      if (!seen.insert(key).second) continue;
      const BinaryOp star = parse_op_spec(cell.record.star);
      const BinaryOp comb = parse_op_spec(cell.record.combiner);
      Json entry = {{"star", cell.record.star}, {"combiner", cell.record.combiner}};
      Json vs = Json::array();
      text << "lemmas star=" << cell.record.star << " combiner=" << cell.record.combiner << '\n';
      for (const auto& v : lemma_suite(star, comb, fam, opts)) {
        vs.push_back(to_json(v));
        text << "  " << v.name << ": " << to_string(v.verdict) << " (" << v.instances
             << " instances)" << (v.detail.empty() ? "" : " " + v.detail) << '\n';
      }
      entry["lemmas"] = vs;
      lemmas.push_back(entry);
    }
    j["lemmas"] = lemmas;
  }
  text << predicted << "/" << cells.size() << " cells as predicted, " << inconsistent
       << " inconsistent\n";
  write_outputs(c, ".json", dump(j));
  write_outputs(c, ".txt", text.str());
  out << text.str();
  if (inconsistent > 0) return kExitInconsistent;
  return predicted == static_cast<int>(cells.size()) ? kExitOk : kExitAxiomFailure;
}

int cmd_sweep(const RunConfig& c, std::ostream& out) {
  const double eps = eps_or(c, kDefaultHarnessEps);
  std::ostringstream csv, text;
  text << text_header(c, eps);
  Json rows = Json::array();
  bool all_pass = true;
  if (c.family == "hamacher" || c.family == "min-mean-blend") {
    std::vector<double> values = c.values;
    if (values.empty()) {
      values = c.family == "hamacher" ? std::vector<double>{0, 0.5, 1, 2, 5}
                                      : std::vector<double>{0, 0.5, 1};
    }
    const BinaryOp comb = parse_op_spec(c.combiner, c.combiner_params, c.base_dir);
    const auto families = default_families(c.seed, c.sizes);
    csv << "value,T1,T2,T3,T4,scalar,lifted,lifted_failures,worst_witness\n";
    for (double v : values) {
      BinaryOp op = [&] {
        try {
          return catalog_lookup(c.family, std::vector<double>{v});
        } catch (const std::invalid_argument& e) {
          throw FormatError(e.what());
        }
      }();
      const ScalarReport sr = check_scalar_axioms(op, c.grid_n, kDefaultScalarEps, c.assoc_grid);
      const Convolver conv({op, comb, parse_kind(c.kind, comb), Engine::kAuto, c.grid_n});
      int failures = 0;
      double worst = 0.0;
      for (const auto& fam : families) {
        for (const auto& r : check_tr_axioms(conv, fam, eps, harness_of(c))) {
          if (r.verdict != Verdict::kFail) continue;
          ++failures;
          worst = std::max(worst, std::abs(r.witness->lhs - r.witness->rhs));
        }
      }
      const bool pass = sr.is_t_norm() && failures == 0;
      all_pass = all_pass && pass;
      csv << v;
      for (ScalarAxiom a : {ScalarAxiom::kT1, ScalarAxiom::kT2, ScalarAxiom::kT3, ScalarAxiom::kT4}) {
        csv << ',' << to_string(sr.get(a).verdict);
      }
      csv << ',' << (sr.is_t_norm() ? "pass" : "fail") << ',' << (failures == 0 ? "pass" : "fail")
          << ',' << failures << ',' << worst << '\n';
      rows.push_back({{"value", v},
                      {"op", op.label()},
                      {"scalar", to_json(sr)},
                      {"lifted_failures", failures},
                      {"worst_witness", worst},
                      {"pass", pass}});
      text << op.label() << ": scalar " << (sr.is_t_norm() ? "pass" : "fail") << ", lifted "
           << failures << " failures, worst witness " << worst << '\n';
    }
  } else if (c.family == "grid") {
    std::vector<double> values = c.values;
    if (values.empty()) values = {64, 128, 256, 512};
    const BinaryOp star = parse_op_spec(c.star_given ? c.star : "product", c.star_params, c.base_dir);
    const BinaryOp comb =
        parse_op_spec(c.combiner_given ? c.combiner : "product", c.combiner_params, c.base_dir);
    const FunctionFamily fam = tent_family(12, c.seed);
    csv << "grid_n,max_o2_residual\n";
    double prev = std::numeric_limits<double>::infinity();
    for (double v : values) {
      const int n = static_cast<int>(v);
      if (n < 2 || n != v) throw FormatError("grid sweep values must be integers >= 2");
      const Convolver conv({star, comb, parse_kind(c.kind, comb), Engine::kGrid, n});
      const double res = max_o2_residual(conv, fam, c.harness.o2_triples, c.seed, eps);
      all_pass = all_pass && res <= prev;
      prev = res;
      csv << n << ',' << res << '\n';
      rows.push_back({{"grid_n", n}, {"max_o2_residual", res}});
      text << "grid_n=" << n << ": max O2 residual " << res << '\n';
    }
    text << (all_pass ? "residual is non-increasing\n" : "residual increased\n");
  } else {
    throw FormatError("--family must be hamacher, min-mean-blend or grid");
  }
  const Json j = {{"header", header(c, eps)}, {"family", c.family}, {"rows", rows}};
  write_outputs(c, ".json", dump(j));
  write_outputs(c, ".csv", csv.str());
  write_outputs(c, ".txt", text.str());
  out << text.str();
  return all_pass ? kExitOk : kExitAxiomFailure;
}

int cmd_export_function(const RunConfig& c, std::ostream& out) {
  if (c.f.empty()) throw FormatError("export-function needs --f");
  const MembershipFunction f = parse_function_spec(c.f, c.base_dir);
  const int samples = c.samples > 0 ? c.samples : c.grid_n;
  std::ostringstream csv;
  write_function_csv(csv, f, samples);
  write_outputs(c, ".json", dump(to_json(f)));
  write_outputs(c, ".csv", csv.str());
  out << c.f << ": " << f.breakpoints().size() << " breakpoints, normal="
      << (is_normal(f) ? "yes" : "no") << ", convex=" << (is_convex(f).convex ? "yes" : "no")
      << ", " << samples + 1 << " samples written\n";
  return kExitOk;
}

int cmd_catalog(const RunConfig& c, std::ostream& out) {
  write_outputs(c, ".json", dump(catalog_manifest()));
  for (const auto& e : catalog_entries()) {
    out << e.name << "  " << to_string(e.declared_class)
        << (e.declared_continuous ? "" : " discontinuous") << (e.broken ? " broken" : "") << "  "
        << e.formula << '\n';
  }
  return kExitOk;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig c;
  CLI::App app{"Lifted t-norm axioms for type-2 fuzzy truth values", "t2fuzz"};
  app.require_subcommand(1);
  app.fallthrough();
  app.config_formatter(std::make_shared<JsonConfig>());
  app.set_config("--config", "", "JSON file whose keys mirror the long flags");
  app.allow_config_extras(CLI::config_extras_mode::error);

  app.add_option("--op", c.op, "Operation: catalog name, name(params) or table:path.csv");
  app.add_option("--param", c.params, "Parameter of --op (repeatable)");
  auto* star = app.add_option("--star", c.star, "Star operation (default minimum)");
  app.add_option("--star-param", c.star_params, "Parameter of --star");
  auto* comb = app.add_option("--combiner", c.combiner, "Combiner operation (default minimum)");
  app.add_option("--combiner-param", c.combiner_params, "Parameter of --combiner");
  app.add_option("--kind", c.kind, "meet, join or auto");
  app.add_option("--engine", c.engine, "auto, grid or exact");
  app.add_option("--reading", c.reading, "check-op: norm, conorm or auto");
  app.add_option("-f,--f", c.f, "First function spec or JSON path");
  app.add_option("-g,--g", c.g, "Second function spec or JSON path");
  app.add_option("--grid-n", c.grid_n, "Grid resolution")->check(CLI::Range(2, 1 << 14));
  app.add_option("--eps", c.eps, "Tolerance (check-op 1e-12, otherwise 1e-6)");
  app.add_option("--assoc-grid", c.assoc_grid, "Grid for scalar associativity")
      ->check(CLI::Range(1, 1024));
  app.add_option("--seed", c.seed, "Seed for the random families");
  app.add_option("--samples", c.samples, "CSV resolution (default grid-n)");
  app.add_flag("--allow-partial", c.allow_partial, "Accept unfilled buckets");
  app.add_option("--mode", c.mode, "verify-theorems: star, combiner or all");
  app.add_option("--family", c.family, "sweep: hamacher, min-mean-blend or grid");
  app.add_option("--values", c.values, "sweep: parameter values");
  app.add_option("--points", c.sizes.points, "J family size")->check(CLI::PositiveNumber);
  app.add_option("--intervals", c.sizes.intervals, "K family size")->check(CLI::PositiveNumber);
  app.add_option("--v-members", c.sizes.v, "V family size")->check(CLI::PositiveNumber);
  app.add_option("--w-members", c.sizes.w, "W family size")->check(CLI::PositiveNumber);
  app.add_option("--random-members", c.sizes.random, "Random family size")
      ->check(CLI::PositiveNumber);
  app.add_option("--o2-triples", c.harness.o2_triples, "Sampled triples for O2");
  app.add_option("--o4-cases", c.harness.o4_cases, "Cap on O4 cases");
  app.add_option("--o5-samples", c.harness.o5_samples, "Sampled (a,b) for O5");
  app.add_option("--bucket-window", c.harness.bucket_window, "O2 bucket window");
  app.add_flag("--lemmas", c.lemmas, "verify-theorems: also run the lemma suite");
  auto* outdir = app.add_option("--out-dir", c.out_dir, "Output directory");
  app.add_option("--name", c.name, "Output file stem (default: subcommand)");

  struct Sub {
    const char* name;
    const char* help;
    int (*fn)(const RunConfig&, std::ostream&);
  };
  const Sub subs[] = {
      {"check-op", "Check T1-T4 for one operation", cmd_check_op},
      {"convolve", "Convolve two functions", cmd_convolve},
      {"verify-theorems", "Run the theorem matrix", cmd_verify_theorems},
      {"sweep", "Sweep a parametric family or the grid resolution", cmd_sweep},
      {"export-function", "Write a function as JSON and CSV", cmd_export_function},
      {"catalog", "Write the catalog manifest", cmd_catalog},
  };
  for (const Sub& s : subs) app.add_subcommand(s.name, s.help);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "t2fuzz: " << e.what() << '\n';
    return kExitConfigError;
  }

  c.star_given = star->count() > 0;
  c.combiner_given = comb->count() > 0;
  const auto* cfg = app.get_config_ptr();
  if (cfg && cfg->count() > 0) {
    c.base_dir = std::filesystem::path(cfg->as<std::string>()).parent_path();
  }
  if (outdir->count() == 0) {
    const char* env = std::getenv(kOutDirEnv);
    c.out_dir = env && *env ? env : "t2fuzz-out";
  }
  for (const Sub& s : subs) {
    if (!app.got_subcommand(s.name)) continue;
    c.subcommand = s.name;
    try {
      return s.fn(c, out);
    } catch (const FormatError& e) {
      err << "t2fuzz " << s.name << ": " << e.what() << '\n';
    } catch (const PreconditionError& e) {
      err << "t2fuzz " << s.name << ": " << e.what() << '\n';
    } catch (const std::invalid_argument& e) {
      err << "t2fuzz " << s.name << ": " << e.what() << '\n';
    } catch (const std::domain_error& e) {
      err << "t2fuzz " << s.name << ": " << e.what() << '\n';
    } catch (const std::filesystem::filesystem_error& e) {
      err << "t2fuzz " << s.name << ": " << e.what() << '\n';
    }
    return kExitConfigError;
  }
  return kExitConfigError;
}

}  // namespace t2fuzz::cli

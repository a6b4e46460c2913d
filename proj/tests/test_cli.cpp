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

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "doctest.h"
#include "t2fuzz/io.hpp"

using namespace t2fuzz;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "t2fuzz");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch_dir(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("t2fuzz-cli-" + name);
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::vector<std::vector<std::string>> read_csv(const fs::path& p) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(slurp(p));
  std::string line;
  std::getline(in, line);
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::istringstream ls(line);
    std::string c;
    while (std::getline(ls, c, ',')) cells.push_back(c);
    rows.push_back(cells);
  }
  return rows;
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("check-op exit codes") {
    const fs::path d = scratch_dir("check");
    CHECK(run({"check-op", "--op", "product", "--out-dir", d.string()}).code == cli::kExitOk);
    const Run mean = run({"check-op", "--op", "mean", "--out-dir", d.string(), "--name", "mean"});
    CHECK(mean.code == cli::kExitAxiomFailure);
    const Json j = read_json_file(d / "mean.json");
    CHECK(j["failed"] == Json::array({"T2", "T4"}));
    CHECK(mean.out.find("failed: T2, T4") != std::string::npos);
    CHECK(run({"check-op", "--op", "hamacher", "--param", "2.0", "--out-dir", d.string()}).code ==
          cli::kExitOk);
    CHECK(run({"check-op", "--op", "maximum", "--out-dir", d.string()}).code == cli::kExitOk);
  }

  TEST_CASE("report headers carry the defaults") {
    const fs::path d = scratch_dir("header");
    run({"check-op", "--op", "product", "--out-dir", d.string()});
    const Json h = read_json_file(d / "check-op.json")["header"];
    CHECK(h["grid_n"] == 256);
    CHECK(h["seed"] == 42);
    CHECK(h["families"]["random"] == 50);
    CHECK(h["subcommand"] == "check-op");
  }

  TEST_CASE("convolve characteristic points") {
    const fs::path d = scratch_dir("conv-chi");
    const Run r = run({"convolve", "--star", "product", "--combiner", "product", "-f",
                       "chi-point:0.5", "-g", "chi-point:0.5", "--grid-n", "64", "--out-dir",
                       d.string()});
    CHECK(r.code == cli::kExitOk);
    const auto rows = read_csv(d / "convolve.csv");
    REQUIRE(rows.size() == 65);
    for (int k = 0; k <= 64; ++k) CHECK(std::stod(rows[k][1]) == (k == 16 ? 1.0 : 0.0));
  }

  TEST_CASE("convolve V shapes") {
    const fs::path d = scratch_dir("conv-v");
    const Run r = run({"convolve", "--star", "product", "--combiner", "product", "-f", "v:0.5",
                       "-g", "v:0.5", "--out-dir", d.string()});
    CHECK(r.code == cli::kExitOk);
    const auto rows = read_csv(d / "convolve.csv");
    REQUIRE(rows.size() == 257);
    CHECK(std::stod(rows.back()[0]) == 1.0);
    CHECK(std::stod(rows.back()[1]) == 0.25);
    CHECK(fs::exists(d / "convolve-f.csv"));
    CHECK(fs::exists(d / "convolve-g.csv"));
  }

  TEST_CASE("convolve with the neutral point returns the input") {
    const fs::path d = scratch_dir("conv-neutral");
    const Run r = run({"convolve", "--star", "min", "--combiner", "min", "-f", "tent:0.3,0.2,0.6",
                       "-g", "chi-point:1", "--grid-n", "64", "--out-dir", d.string()});
    CHECK(r.code == cli::kExitOk);
    const auto out = read_csv(d / "convolve.csv");
    const auto in = read_csv(d / "convolve-f.csv");
    REQUIRE(out.size() == in.size());
    for (std::size_t k = 0; k < out.size(); ++k) {
      CHECK(std::stod(out[k][1]) == doctest::Approx(std::stod(in[k][1])).epsilon(1e-12));
    }
  }

  TEST_CASE("verify-theorems slices") {
    const fs::path d = scratch_dir("verify");
    const Run star = run({"verify-theorems", "--star", "mean", "--combiner", "min",
                          "--random-members", "10", "--out-dir", d.string()});
    CHECK(star.code == cli::kExitOk);
    CHECK(star.out.find("scalar T4 fail => lifted O3 fail") != std::string::npos);
    const Run comb = run({"verify-theorems", "--mode", "combiner", "--combiner", "mean", "--star",
                          "min", "--random-members", "10", "--out-dir", d.string()});
    CHECK(comb.code == cli::kExitOk);
    CHECK(comb.out.find("witness reproduced") != std::string::npos);
    CHECK(comb.out.find("chi") != std::string::npos);
  }

  TEST_CASE("sweeps") {
    const fs::path d = scratch_dir("sweep");
    CHECK(run({"sweep", "--family", "hamacher", "--random-members", "8", "--out-dir",
               d.string()})
              .code == cli::kExitOk);
    const Run blend = run({"sweep", "--family", "min-mean-blend", "--random-members", "8",
                           "--out-dir", d.string(), "--name", "blend"});
    CHECK(blend.code == cli::kExitAxiomFailure);
    const auto rows = read_csv(d / "blend.csv");
    REQUIRE(rows.size() == 3);
    CHECK(rows[0][4] == "fail");
    CHECK(rows[1][4] == "fail");
    CHECK(rows[2][4] == "pass");
    CHECK(rows[0][6] == "fail");
    CHECK(rows[2][6] == "pass");
    CHECK(rows[2][7] == "0");
    CHECK(run({"sweep", "--family", "grid", "--values", "64", "128", "256", "--out-dir",
               d.string()})
              .code == cli::kExitOk);
  }

  TEST_CASE("export-function and catalog") {
    const fs::path d = scratch_dir("export");
    CHECK(run({"export-function", "-f", "w:0.5", "--samples", "4", "--out-dir", d.string()}).code ==
          cli::kExitOk);
    CHECK(slurp(d / "export-function.csv") == "t,value\n0,0\n0.25,0\n0.5,0.5\n0.75,0.75\n1,1\n");
    CHECK(function_from_json(read_json_file(d / "export-function.json")) ==
          w_func(UnitValue(0.5)));
    CHECK(run({"catalog", "--out-dir", d.string()}).code == cli::kExitOk);
    CHECK(read_json_file(d / "catalog.json") == catalog_manifest());
  }

  TEST_CASE("configuration errors exit with 2") {
    const fs::path d = scratch_dir("errors");
    CHECK(run({}).code == cli::kExitConfigError);
    CHECK(run({"bogus"}).code == cli::kExitConfigError);
    CHECK(run({"check-op", "--op", "nosuch", "--out-dir", d.string()}).code ==
          cli::kExitConfigError);
    CHECK(run({"check-op", "--out-dir", d.string()}).code == cli::kExitConfigError);
    CHECK(run({"check-op", "--op", "hamacher", "--out-dir", d.string()}).code ==
          cli::kExitConfigError);
    CHECK(run({"convolve", "-f", "v:1.5", "-g", "v:0.5", "--out-dir", d.string()}).code ==
          cli::kExitConfigError);
    CHECK(run({"convolve", "-f", "zigzag:1", "-g", "v:0.5", "--out-dir", d.string()}).code ==
          cli::kExitConfigError);
    CHECK(run({"convolve", "-f", "v:0.5", "-g", "v:0.5", "--combiner", "scaled-product",
               "--out-dir", d.string()})
              .code == cli::kExitConfigError);
    CHECK(run({"check-op", "--op", "product", "--grid-n", "1", "--out-dir", d.string()}).code ==
          cli::kExitConfigError);
    CHECK(run({"sweep", "--family", "nope", "--out-dir", d.string()}).code ==
          cli::kExitConfigError);
    CHECK(run({"--help"}).code == cli::kExitOk);
  }

  TEST_CASE("JSON config mirrors the flags") {
    const fs::path d = scratch_dir("config");
    {
      std::ofstream cfg(d / "cfg.json");
      cfg << R"({"op": "hamacher", "param": [2.0], "grid_n": 64, "out_dir": ")" << d.string()
          << R"("})";
    }
    const Run r = run({"check-op", "--config", (d / "cfg.json").string()});
    CHECK(r.code == cli::kExitOk);
    CHECK(read_json_file(d / "check-op.json")["header"]["grid_n"] == 64);
    {
      std::ofstream cfg(d / "bad.json");
      cfg << R"({"no_such_flag": 1})";
    }
    CHECK(run({"check-op", "--config", (d / "bad.json").string()}).code == cli::kExitConfigError);
    {
      std::ofstream cfg(d / "broken.json");
      cfg << "{";
    }
    CHECK(run({"check-op", "--config", (d / "broken.json").string()}).code ==
          cli::kExitConfigError);
  }

  TEST_CASE("function files resolve relative to the config") {
    const fs::path d = scratch_dir("files");
    write_file_atomic(d / "f.json", to_json(v_func(UnitValue(0.5))).dump());
    {
      std::ofstream cfg(d / "cfg.json");
      cfg << R"({"f": "f.json", "g": "v:0.5", "star": "product", "combiner": "product",
                 "out_dir": ")"
          << d.string() << R"("})";
    }
    CHECK(run({"convolve", "--config", (d / "cfg.json").string()}).code == cli::kExitOk);
    const auto rows = read_csv(d / "convolve.csv");
    CHECK(std::stod(rows.back()[1]) == 0.25);
  }

  TEST_CASE("output directory from the environment") {
    const fs::path d = scratch_dir("env");
    ::setenv(cli::kOutDirEnv, d.string().c_str(), 1);
    const Run r = run({"check-op", "--op", "minimum"});
    ::unsetenv(cli::kOutDirEnv);
    CHECK(r.code == cli::kExitOk);
    CHECK(fs::exists(d / "check-op.json"));
  }

  TEST_CASE("identical configurations give byte-identical reports") {
    const fs::path a = scratch_dir("det-a"), b = scratch_dir("det-b");
    for (const auto& d : {a, b}) {
      run({"verify-theorems", "--star", "asym-power", "--combiner", "product",
           "--random-members", "8", "--out-dir", d.string()});
      run({"convolve", "-f", "tent:0.4,0.1,0.3", "-g", "w:0.5", "--out-dir", d.string()});
    }
    CHECK(slurp(a / "verify-theorems.json") == slurp(b / "verify-theorems.json"));
    CHECK(slurp(a / "convolve.json") == slurp(b / "convolve.json"));
    CHECK_FALSE(slurp(a / "verify-theorems.json").empty());
  }

  TEST_CASE("spec parsers") {
    CHECK(cli::parse_function_spec("chi-interval:0.2,0.7", {}) ==
          chi_interval(UnitValue(0.2), UnitValue(0.7)));
    CHECK(cli::parse_function_spec("const:0.5", {}) == MembershipFunction::constant(0.5));
    CHECK_THROWS_AS(cli::parse_function_spec("chi-interval:0.7,0.2", {}), FormatError);
    CHECK_THROWS_AS(cli::parse_function_spec("v:abc", {}), FormatError);
    CHECK_THROWS_AS(cli::parse_function_spec("v:0.1,0.2", {}), FormatError);
    CHECK(cli::parse_op_spec("hamacher(2)", {}, {}).label() == "hamacher(2)");
    CHECK(cli::parse_op_spec("min", {}, {}).name() == "minimum");
    CHECK_THROWS_AS(cli::parse_op_spec("hamacher(2", {}, {}), FormatError);
  }
}

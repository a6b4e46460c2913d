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

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "t2fuzz/generators.hpp"
#include "t2fuzz/io.hpp"

using namespace t2fuzz;
namespace fs = std::filesystem;

namespace {

UnitValue U(double x) { return UnitValue(x); }

fs::path scratch_dir(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("t2fuzz-io-" + name);
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

}  // namespace

TEST_SUITE("io") {
  TEST_CASE("functions round-trip through JSON") {
    LatticeGenerator gen(21);
    std::vector<MembershipFunction> fs = {chi_point(U(0.3)), w_func(U(0.5)), v_func(U(0.2)),
                                          chi_interval(U(0.1), U(0.6))};
    for (int i = 0; i < 20; ++i) fs.push_back(gen.next());
    for (const auto& f : fs) {
      const Json j = Json::parse(to_json(f).dump());
      CHECK(function_from_json(j) == f);
    }
  }

  TEST_CASE("segments given by slope and intercept") {
    const Json j = Json::parse(R"({"breakpoints":[0,0.5,1],"point_values":[0,1,0],
      "segments":[{"a":2,"b":0},{"a":-2,"b":2}]})");
    CHECK(function_from_json(j) == tent(U(0.5), U(0.0), U(0.0)));
  }

  TEST_CASE("malformed function JSON") {
    CHECK_THROWS_AS(function_from_json(Json::parse(R"({"breakpoints":[0,1]})")), FormatError);
    CHECK_THROWS_AS(function_from_json(Json::parse(
                        R"({"breakpoints":[0,1],"point_values":[0,2],"segments":[{"left":0,"right":2}]})")),
                    FormatError);
    CHECK_THROWS_AS(function_from_json(Json::parse(
                        R"({"breakpoints":[0,0.5,1],"point_values":[0,1,0],"segments":[]})")),
                    FormatError);
  }

  TEST_CASE("operations and operators from JSON") {
    CHECK(op_from_json(Json("product")).label() == "product");
    CHECK(op_from_json(Json::parse(R"({"name":"hamacher","params":[2]})")).label() ==
          "hamacher(2)");
    CHECK_THROWS_AS(op_from_json(Json::parse(R"({"name":"hamacher","params":[-3]})")),
                    FormatError);
    const ConvolutionOperator opr =
        operator_from_json(to_json(ConvolutionOperator{catalog_lookup("lukasiewicz"),
                                                       catalog_lookup("maximum"),
                                                       ConvolutionKind::kJoin, Engine::kGrid, 64}));
    CHECK(opr.star.name() == "lukasiewicz");
    CHECK(opr.combiner.name() == "maximum");
    CHECK(opr.kind == ConvolutionKind::kJoin);
    CHECK(opr.engine == Engine::kGrid);
    CHECK(opr.grid_n == 64);
  }

  TEST_CASE("operation tables round-trip through CSV") {
    const fs::path dir = scratch_dir("table");
    {
      std::ofstream out(dir / "min.csv");
      write_op_table_csv(out, catalog_lookup("minimum"), 8);
    }
    const BinaryOp t = read_op_table_csv(dir / "min.csv");
    for (int i = 0; i <= 8; ++i) {
      for (int j = 0; j <= 8; ++j) CHECK(t(i / 8.0, j / 8.0) == doctest::Approx(std::min(i, j) / 8.0));
    }
    CHECK(check_scalar_axioms(t, 8).is_t_norm());
    const BinaryOp viaj = op_from_json(Json::parse(R"({"table":"min.csv"})"), dir);
    CHECK(viaj(0.5, 0.25) == doctest::Approx(0.25));
    {
      std::ofstream bad(dir / "bad.csv");
      bad << "x,y,value\n0,0,0\n0,1,0\n1,0,zero\n";
    }
    CHECK_THROWS_AS(read_op_table_csv(dir / "bad.csv"), FormatError);
    {
      std::ofstream bad(dir / "short.csv");
      bad << "x,y,value\n0,0,0\n0,1,0\n1,0,0\n";
    }
    CHECK_THROWS_AS(read_op_table_csv(dir / "short.csv"), FormatError);
    CHECK_THROWS_AS(read_op_table_csv(dir / "missing.csv"), FormatError);
  }

  TEST_CASE("CSV samples") {
    std::ostringstream os;
    write_function_csv(os, w_func(U(0.5)), 4);
    CHECK(os.str() == "t,value\n0,0\n0.25,0\n0.5,0.5\n0.75,0.75\n1,1\n");
    GridFunction g;
    g.n = 2;
    g.values = {0.0, 0.5, 1.0};
    g.filled = {1, 0, 1};
    std::ostringstream gs;
    write_grid_csv(gs, g);
    CHECK(gs.str().find("x,value,filled\n") == 0);
    CHECK(gs.str().find("0.5,,0") != std::string::npos);
  }

  TEST_CASE("atomic writes leave no temporary file") {
    const fs::path dir = scratch_dir("atomic");
    write_file_atomic(dir / "a.json", "{}\n");
    write_file_atomic(dir / "a.json", "[]\n");
    std::ifstream in(dir / "a.json");
    std::string s((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    CHECK(s == "[]\n");
    CHECK_FALSE(fs::exists(dir / "a.json.tmp"));
  }

  TEST_CASE("the shipped catalog matches the library") {
    const Json shipped = read_json_file(fs::path(T2FUZZ_SOURCE_DIR) / "share" / "catalog.json");
    CHECK(shipped == catalog_manifest());
  }

  TEST_CASE("reports serialize") {
    const ScalarReport r = check_scalar_axioms(catalog_lookup("mean"), 16);
    const Json j = to_json(r);
    CHECK(j["op"] == "mean");
    CHECK(j.dump() == to_json(check_scalar_axioms(catalog_lookup("mean"), 16)).dump());
    CHECK(to_text(r).find("T4") != std::string::npos);
  }
}

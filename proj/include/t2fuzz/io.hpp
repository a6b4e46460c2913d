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

// JSON and CSV serialization for functions, operations, operators and
// reports, plus the catalog manifest.

#ifndef T2FUZZ_IO_HPP_
#define T2FUZZ_IO_HPP_

#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"
#include "t2fuzz/axioms.hpp"
#include "t2fuzz/convolution.hpp"
#include "t2fuzz/interval_ops.hpp"
#include "t2fuzz/membership.hpp"
#include "t2fuzz/theorems.hpp"

namespace t2fuzz {

using Json = nlohmann::ordered_json;

// Raised for malformed input files and specs.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// {breakpoints, point_values, segments: [{a, b, left, right}]}.
Json to_json(const MembershipFunction& f);
MembershipFunction function_from_json(const Json& j);

// {name, params}.
Json to_json(const BinaryOp& op);
// {name, params} from the catalog, or {table: "path.csv"} resolved
// against base_dir.
BinaryOp op_from_json(const Json& j, const std::filesystem::path& base_dir = {});

// {star, combiner, kind, engine, grid_n}.
Json to_json(const ConvolutionOperator& opr);
ConvolutionOperator operator_from_json(const Json& j,
                                       const std::filesystem::path& base_dir = {});

Json to_json(const GridFunction& g);
Json to_json(const ScalarReport& r);
Json to_json(const AxiomReport& r);
Json to_json(const TheoremRecord& r);
Json to_json(const LemmaVerdict& v);
Json to_json(const MatrixCell& c);

// `t,value` rows at i/n.
void write_function_csv(std::ostream& os, const MembershipFunction& f, int n);
// `x,value,filled` rows, one per bucket.
void write_grid_csv(std::ostream& os, const GridFunction& g);
// `x,y,value` rows, row-major on an (m+1)x(m+1) grid.
void write_op_table_csv(std::ostream& os, const BinaryOp& op, int m);
BinaryOp read_op_table_csv(const std::filesystem::path& path);

// Human-readable tables.
std::string to_text(const ScalarReport& r);
std::string to_text(std::span<const AxiomReport> reports);
std::string to_text(const TheoremRecord& r);

// Every catalog entry with class, continuity, formula and parameter domains.
Json catalog_manifest();

Json read_json_file(const std::filesystem::path& path);
MembershipFunction read_function_file(const std::filesystem::path& path);
// Writes to a sibling temporary file and renames it into place.
void write_file_atomic(const std::filesystem::path& path, const std::string& content);

}  // namespace t2fuzz

#endif  // T2FUZZ_IO_HPP_

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

// Command-line front end. Each cmd_* writes its report files into
// config.out_dir and returns the process exit status.

#ifndef T2FUZZ_TOOLS_CLI_HPP_
#define T2FUZZ_TOOLS_CLI_HPP_

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "t2fuzz/axioms.hpp"

namespace t2fuzz::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitAxiomFailure = 1;
inline constexpr int kExitConfigError = 2;
inline constexpr int kExitInconsistent = 3;

inline constexpr const char* kOutDirEnv = "T2FUZZ_OUT_DIR";

struct RunConfig {
  std::string subcommand;
  std::string op;
  std::vector<double> params;
  std::string star = "minimum";
  std::vector<double> star_params;
  std::string combiner = "minimum";
  std::vector<double> combiner_params;
  bool star_given = false;
  bool combiner_given = false;
  std::string kind = "auto";
  std::string engine = "auto";
  std::string reading = "auto";
  std::string f;
  std::string g;
  int grid_n = kDefaultGridN;
  std::optional<double> eps;
  int assoc_grid = kDefaultAssocGrid;
  std::uint64_t seed = 42;
  int samples = 0;
  bool allow_partial = false;
  std::string mode = "all";
  std::string family;
  std::vector<double> values;
  FamilySizes sizes;
  HarnessConfig harness;
  bool lemmas = false;
  std::filesystem::path out_dir;
  std::string name;
  // Directory that relative paths inside a config file are resolved against.
  std::filesystem::path base_dir;
};

int cmd_check_op(const RunConfig& config, std::ostream& out);
int cmd_convolve(const RunConfig& config, std::ostream& out);
int cmd_verify_theorems(const RunConfig& config, std::ostream& out);
int cmd_sweep(const RunConfig& config, std::ostream& out);
int cmd_export_function(const RunConfig& config, std::ostream& out);
int cmd_catalog(const RunConfig& config, std::ostream& out);

// Parses argv (flags, optional --config JSON file, T2FUZZ_OUT_DIR) and
// dispatches. Errors go to `err` and map onto the exit codes above.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

// "v:0.5", "w:0.5", "chi-point:0.5", "chi-interval:0.2,0.7", "const:0.8",
// "tent:peak[,left,right]" or a path to a function JSON file.
MembershipFunction parse_function_spec(const std::string& spec,
                                       const std::filesystem::path& base_dir = {});
// "product", "hamacher(2)", or "table:path.csv". `params` is appended to
// any inline parameters.
BinaryOp parse_op_spec(const std::string& spec, const std::vector<double>& params = {},
                       const std::filesystem::path& base_dir = {});

}  // namespace t2fuzz::cli

#endif  // T2FUZZ_TOOLS_CLI_HPP_

// Copyright 2026 The hnfsub Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace hnfsub {

/// Parsed command line of one job.
struct JobConfig {
  std::string command;
  std::string input;
  std::uint64_t modulus = 2147483647;
  std::uint64_t seed = 1;
  std::optional<std::size_t> m;
  std::vector<std::size_t> indices;
  std::optional<std::int64_t> det_bound;
  std::optional<std::int64_t> adj_bound;
  bool exact_det = false;
  std::optional<std::uint64_t> sample_size;
  std::string out;
  bool verify = false;
  bool json = false;
  // bench grid
  std::vector<std::size_t> bench_n{8, 16};
  std::size_t bench_alpha = 2;
  std::size_t bench_d = 2;
};

/// Exit codes: 0 success, 1 input or usage error, 2 singular, 3 fail.
enum ExitCode : int { kExitOk = 0, kExitError = 1, kExitSingular = 2, kExitFail = 3 };

int cmd_hnf_submatrix(const JobConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_change_order(const JobConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_bench(const JobConfig& cfg, std::ostream& out, std::ostream& err);

/// Parses argv and dispatches to the command functions.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hnfsub

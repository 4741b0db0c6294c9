// Copyright 2026 The gsp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace gsp::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitParameter = 1;
inline constexpr int kExitPromise = 2;
inline constexpr int kExitResource = 3;
inline constexpr int kExitCheckFailed = 4;

/// Runs the `gsp` command line. argv[0] is the program name.
int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err);

/// "2,3,5", "3..8", or a mix like "2,4..6". Empty text is an empty list.
std::vector<std::uint64_t> parse_list(std::string_view text);

struct BenchRow {
  std::uint32_t p = 0;
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t d = 0;
  std::string solver;
  std::uint64_t seed = 0;
  std::uint64_t queries = 0;
  bool recovered_ok = false;
  std::uint64_t bound = 0;
  double wall_ms = 0;
};

inline constexpr std::string_view kBenchHeader =
    "p,n,k,d,solver,seed,queries,recovered_ok,bound,wall_ms";

std::string to_csv(const BenchRow& row);

}  // namespace gsp::cli

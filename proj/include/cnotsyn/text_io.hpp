// Copyright 2026 The cnotsyn Authors
//
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

#pragma once

// Plain-text formats read and written by the command line tool.
//
//   matrix:   "n m" header, then n lines of m characters from {0,1}
//   circuit:  "n" header, then one "CNOT c t" line per gate
//   indices:  n space-separated 0-based integers on one line (orderings
//             and row permutations)

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "cnotsyn/bit_matrix.hpp"
#include "cnotsyn/circuit.hpp"

namespace cnotsyn {

BitMatrix parse_matrix(std::string_view text);
std::string format_matrix(const BitMatrix& m);

CnotCircuit parse_circuit(std::string_view text);
std::string format_circuit(const CnotCircuit& c);

std::vector<std::size_t> parse_indices(std::string_view text);
std::string format_indices(const std::vector<std::size_t>& v);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view contents);

}  // namespace cnotsyn

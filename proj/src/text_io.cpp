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

#include "cnotsyn/text_io.hpp"

#include <fstream>
#include <sstream>

#include "cnotsyn/errors.hpp"

namespace cnotsyn {

namespace {

// Non-empty lines with trailing CR/whitespace stripped.
std::vector<std::string> content_lines(std::string_view text) {
  std::vector<std::string> lines;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    const auto end = line.find_last_not_of(" \t\r");
    if (end == std::string::npos) continue;
    lines.push_back(line.substr(0, end + 1));
  }
  return lines;
}

std::size_t parse_count(const std::string& token, const char* what) {
  std::size_t pos = 0;
  unsigned long long value = 0;
  try {
    value = std::stoull(token, &pos);
  } catch (const std::exception&) {
    throw ParseError(std::string("expected an integer for ") + what);
  }
  if (pos != token.size() || token.front() == '-')
    throw ParseError(std::string("expected an integer for ") + what);
  return static_cast<std::size_t>(value);
}

}  // namespace

BitMatrix parse_matrix(std::string_view text) {
  const auto lines = content_lines(text);
  if (lines.empty()) throw ParseError("matrix: empty input");
  std::istringstream header(lines[0]);
  std::string rows_tok;
  std::string cols_tok;
  std::string extra;
  if (!(header >> rows_tok >> cols_tok) || (header >> extra))
    throw ParseError("matrix: header must be \"n m\"");
  const std::size_t n = parse_count(rows_tok, "matrix row count");
  const std::size_t m = parse_count(cols_tok, "matrix column count");
  if (lines.size() != n + 1)
    throw ParseError("matrix: expected " + std::to_string(n) + " rows, found " +
                     std::to_string(lines.size() - 1));
  BitMatrix out(n, m);
  for (std::size_t r = 0; r < n; ++r) {
    const auto& row = lines[r + 1];
    if (row.size() != m)
      throw ParseError("matrix: row " + std::to_string(r) + " has length " +
                       std::to_string(row.size()) + ", expected " +
                       std::to_string(m));
    for (std::size_t c = 0; c < m; ++c) {
      if (row[c] == '1')
        out.set(r, c);
      else if (row[c] != '0')
        throw ParseError("matrix: invalid character in row " + std::to_string(r));
    }
  }
  return out;
}

std::string format_matrix(const BitMatrix& m) {
  return std::to_string(m.rows()) + " " + std::to_string(m.cols()) + "\n" +
         m.to_string();
}

CnotCircuit parse_circuit(std::string_view text) {
  const auto lines = content_lines(text);
  if (lines.empty()) throw ParseError("circuit: empty input");
  std::istringstream header(lines[0]);
  std::string n_tok;
  std::string extra;
  if (!(header >> n_tok) || (header >> extra))
    throw ParseError("circuit: header must be the wire count");
  const std::size_t n = parse_count(n_tok, "circuit wire count");
  CnotCircuit c(n);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    std::istringstream fields(lines[i]);
    std::string name;
    std::string control;
    std::string target;
    if (!(fields >> name >> control >> target) || (fields >> extra) ||
        name != "CNOT")
      throw ParseError("circuit: malformed gate on line " + std::to_string(i + 1));
    const auto cc = parse_count(control, "gate control");
    const auto tt = parse_count(target, "gate target");
    if (cc >= n || tt >= n || cc == tt)
      throw ParseError("circuit: invalid wires on line " + std::to_string(i + 1));
    c.add(cc, tt);
  }
  return c;
}

std::string format_circuit(const CnotCircuit& c) {
  std::ostringstream os;
  os << c.n_wires() << '\n';
  for (const auto& g : c.gates()) os << "CNOT " << g.control << ' ' << g.target << '\n';
  return os.str();
}

std::vector<std::size_t> parse_indices(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::vector<std::size_t> out;
  std::string tok;
  while (in >> tok) out.push_back(parse_count(tok, "index"));
  return out;
}

std::string format_indices(const std::vector<std::size_t>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? " " : "") << v[i];
  os << '\n';
  return os.str();
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::filesystem::path& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  out << contents;
}

}  // namespace cnotsyn

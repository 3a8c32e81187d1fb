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

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "cnotsyn/bit_matrix.hpp"
#include "cnotsyn/topology.hpp"

namespace cnotsyn {

struct CnotGate {
  std::size_t control = 0;
  std::size_t target = 0;
  bool operator==(const CnotGate&) const = default;
};

/// Ordered list of CNOT gates over a fixed register. Gates execute left to
/// right; wire indices are 0-based.
class CnotCircuit {
 public:
  CnotCircuit() = default;
  explicit CnotCircuit(std::size_t n_wires) : n_wires_(n_wires) {}
  CnotCircuit(std::size_t n_wires, std::vector<CnotGate> gates);

  std::size_t n_wires() const { return n_wires_; }
  std::size_t size() const { return gates_.size(); }
  bool empty() const { return gates_.empty(); }
  const std::vector<CnotGate>& gates() const { return gates_; }
  const CnotGate& operator[](std::size_t i) const { return gates_[i]; }

  void add(std::size_t control, std::size_t target);
  void add(CnotGate g) { add(g.control, g.target); }
  void append(std::span<const CnotGate> gates);
  void append(const CnotCircuit& other);
  /// Inserts a gate so that it executes after the first `position` gates.
  void insert(std::size_t position, CnotGate g);

  bool operator==(const CnotCircuit&) const = default;

 private:
  void check(CnotGate g) const;

  std::size_t n_wires_ = 0;
  std::vector<CnotGate> gates_;
};

/// Applies the gates to `state` as row additions, in execution order.
void apply_gates(BitMatrix& state, std::span<const CnotGate> gates);
BitMatrix simulate(const CnotCircuit& c);

CnotCircuit inverse_circuit(const CnotCircuit& c);
/// Circuit whose operator is the transpose of the input's operator.
CnotCircuit transpose_circuit(const CnotCircuit& c);
/// `first` followed by `second`.
CnotCircuit concat(const CnotCircuit& first, const CnotCircuit& second);
/// Renames wire w to mapping[w].
CnotCircuit relabel_wires(const CnotCircuit& c,
                          std::span<const std::size_t> mapping);

bool complies_with(const CnotCircuit& c, const ConnectivityGraph& g);

CnotCircuit random_circuit(std::size_t n, std::size_t n_gates,
                           std::uint64_t seed);
/// Operator of a circuit with `n_gates` uniformly placed CNOTs.
BitMatrix random_operator(std::size_t n, std::size_t n_gates,
                          std::uint64_t seed);

}  // namespace cnotsyn

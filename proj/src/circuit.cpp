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

#include "cnotsyn/circuit.hpp"

#include <algorithm>

#include "cnotsyn/errors.hpp"
#include "cnotsyn/rng.hpp"

namespace cnotsyn {

CnotCircuit::CnotCircuit(std::size_t n_wires, std::vector<CnotGate> gates)
    : n_wires_(n_wires), gates_(std::move(gates)) {
  for (const auto& g : gates_) check(g);
}

void CnotCircuit::check(CnotGate g) const {
  if (g.control >= n_wires_ || g.target >= n_wires_)
    throw ContractViolation("CNOT wire index out of range");
  if (g.control == g.target)
    throw ContractViolation("CNOT control and target coincide");
}

void CnotCircuit::add(std::size_t control, std::size_t target) {
  const CnotGate g{control, target};
  check(g);
  gates_.push_back(g);
}

void CnotCircuit::append(std::span<const CnotGate> gates) {
  for (const auto& g : gates) check(g);
  gates_.insert(gates_.end(), gates.begin(), gates.end());
}

void CnotCircuit::append(const CnotCircuit& other) {
  if (other.n_wires_ != n_wires_)
    throw ContractViolation("append: wire counts differ");
  gates_.insert(gates_.end(), other.gates_.begin(), other.gates_.end());
}

void CnotCircuit::insert(std::size_t position, CnotGate g) {
  check(g);
  if (position > gates_.size())
    throw ContractViolation("insert: position past the end of the circuit");
  gates_.insert(gates_.begin() + static_cast<std::ptrdiff_t>(position), g);
}

void apply_gates(BitMatrix& state, std::span<const CnotGate> gates) {
  for (const auto& g : gates) state.add_row(g.target, g.control);
}

BitMatrix simulate(const CnotCircuit& c) {
  BitMatrix state = BitMatrix::identity(c.n_wires());
  apply_gates(state, c.gates());
  return state;
}

CnotCircuit inverse_circuit(const CnotCircuit& c) {
  std::vector<CnotGate> gates(c.gates().rbegin(), c.gates().rend());
  return {c.n_wires(), std::move(gates)};
}

CnotCircuit transpose_circuit(const CnotCircuit& c) {
  std::vector<CnotGate> gates;
  gates.reserve(c.size());
  for (auto it = c.gates().rbegin(); it != c.gates().rend(); ++it)
    gates.push_back({it->target, it->control});
  return {c.n_wires(), std::move(gates)};
}

CnotCircuit concat(const CnotCircuit& first, const CnotCircuit& second) {
  CnotCircuit out = first;
  out.append(second);
  return out;
}

CnotCircuit relabel_wires(const CnotCircuit& c,
                          std::span<const std::size_t> mapping) {
  if (mapping.size() != c.n_wires())
    throw ContractViolation("relabel_wires: mapping size mismatch");
  std::vector<CnotGate> gates;
  gates.reserve(c.size());
  for (const auto& g : c.gates())
    gates.push_back({mapping[g.control], mapping[g.target]});
  return {c.n_wires(), std::move(gates)};
}

bool complies_with(const CnotCircuit& c, const ConnectivityGraph& g) {
  if (c.n_wires() != g.size())
    throw ContractViolation("complies_with: wire count differs from graph size");
  return std::all_of(c.gates().begin(), c.gates().end(), [&](const CnotGate& x) {
    return g.adjacent(x.control, x.target);
  });
}

CnotCircuit random_circuit(std::size_t n, std::size_t n_gates,
                           std::uint64_t seed) {
  if (n < 2) throw ContractViolation("random_circuit: need at least two wires");
  Rng rng(seed);
  CnotCircuit c(n);
  for (std::size_t i = 0; i < n_gates; ++i) {
    const auto control = static_cast<std::size_t>(rng.below(n));
    auto target = static_cast<std::size_t>(rng.below(n - 1));
    if (target >= control) ++target;
    c.add(control, target);
  }
  return c;
}

BitMatrix random_operator(std::size_t n, std::size_t n_gates,
                          std::uint64_t seed) {
  return simulate(random_circuit(n, n_gates, seed));
}

}  // namespace cnotsyn

// Copyright 2026 The revqc authors
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

#include <vector>

#include "revqc/circuit.hpp"

namespace revqc {

/// Toffoli to NCV-|v1> cascade via control sensitization.
///
/// For controls c1 < ... < ck and target t the cascade is
///
///   V c1; V c2 @c1; ...; V ck @c(k-1);   (chain each control up to v1)
///   NOT t @ck;                           (fires iff all controls were 1)
///   V+ ck @c(k-1); ...; V+ c2 @c1; V+ c1 (restore the controls)
///
/// which is 2k+1 gates and needs no ancillary lines. A control reaches v1
/// exactly when it was 1 and every control before it in the chain was 1,
/// so the v1-triggered NOT implements the Toffoli condition.
inline std::vector<quantum_gate> map_gate_v1(const toffoli_gate& gate) {
  if (gate.controls.empty())
    return {make_quantum_gate(quantum_op::NOT, gate.target)};
  std::vector<quantum_gate> out;
  out.reserve(2 * gate.controls.size() + 1);
  out.push_back(make_quantum_gate(quantum_op::V, gate.controls[0]));
  for (std::size_t i = 1; i < gate.controls.size(); ++i)
    out.push_back(make_quantum_gate(quantum_op::V, gate.controls[i],
                                    gate.controls[i - 1]));
  out.push_back(make_quantum_gate(quantum_op::NOT, gate.target,
                                  gate.controls.back()));
  for (std::size_t i = gate.controls.size(); i-- > 1;)
    out.push_back(make_quantum_gate(quantum_op::VDAG, gate.controls[i],
                                    gate.controls[i - 1]));
  out.push_back(make_quantum_gate(quantum_op::VDAG, gate.controls[0]));
  return out;
}

inline quantum_circuit map_circuit_v1(const reversible_circuit& circuit) {
  quantum_circuit out{circuit.line_count, gate_library::ncv_v1, {}};
  for (const auto& gate : circuit.gates)
    for (quantum_gate g : map_gate_v1(gate)) out.gates.push_back(g);
  return out;
}

}  // namespace revqc

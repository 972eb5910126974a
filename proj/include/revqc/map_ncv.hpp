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

#include <string>
#include <vector>

#include "revqc/circuit.hpp"

namespace revqc {

struct unsupported_control_count : circuit_error {
  using circuit_error::circuit_error;
};

/// Toffoli to NCV cascade, up to two controls. Gates with three or more
/// controls are rejected; their cost is available via the cost table only.
inline std::vector<quantum_gate> map_gate_ncv(const toffoli_gate& gate) {
  switch (gate.controls.size()) {
    case 0:
      return {make_quantum_gate(quantum_op::NOT, gate.target)};
    case 1:
      return {make_quantum_gate(quantum_op::NOT, gate.target,
                                gate.controls[0])};
    case 2: {
      // Controls are sorted; c1 is the lower line index and serves as the
      // outer control of the 5-gate cascade.
      line_id c1 = gate.controls[0];
      line_id c2 = gate.controls[1];
      line_id t = gate.target;
      return {make_quantum_gate(quantum_op::V, t, c2),
              make_quantum_gate(quantum_op::NOT, c2, c1),
              make_quantum_gate(quantum_op::VDAG, t, c2),
              make_quantum_gate(quantum_op::NOT, c2, c1),
              make_quantum_gate(quantum_op::V, t, c1)};
    }
    default:
      throw unsupported_control_count(
          "NCV mapping supports at most 2 controls, gate has " +
          std::to_string(gate.controls.size()));
  }
}

inline quantum_circuit map_circuit_ncv(const reversible_circuit& circuit) {
  quantum_circuit out{circuit.line_count, gate_library::ncv, {}};
  for (std::size_t i = 0; i < circuit.gates.size(); ++i) {
    if (circuit.gates[i].controls.size() > 2)
      throw unsupported_control_count(
          "gate " + std::to_string(i) + " has " +
          std::to_string(circuit.gates[i].controls.size()) +
          " controls; NCV mapping supports at most 2");
    for (quantum_gate g : map_gate_ncv(circuit.gates[i]))
      out.gates.push_back(g);
  }
  return out;
}

}  // namespace revqc

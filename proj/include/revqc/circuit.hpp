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

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace revqc {

/// Zero-based index of a circuit line. Line 0 is drawn topmost and is the
/// most significant digit of input/output patterns.
using line_id = std::uint32_t;

struct circuit_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct target_in_controls : circuit_error {
  using circuit_error::circuit_error;
};

struct duplicate_control : circuit_error {
  using circuit_error::circuit_error;
};

struct line_out_of_range : circuit_error {
  using circuit_error::circuit_error;
};

/// Multiple-control Toffoli gate: inverts `target` iff every control line
/// carries 1. Controls are kept sorted by line index so that mapped output
/// is deterministic.
struct toffoli_gate {
  std::vector<line_id> controls;
  line_id target{};

  bool operator==(const toffoli_gate&) const = default;
};

inline toffoli_gate make_toffoli(std::vector<line_id> controls,
                                 line_id target) {
  std::sort(controls.begin(), controls.end());
  if (std::adjacent_find(controls.begin(), controls.end()) != controls.end())
    throw duplicate_control("duplicate control line in Toffoli gate");
  if (std::binary_search(controls.begin(), controls.end(), target))
    throw target_in_controls("target line " + std::to_string(target) +
                             " also listed as control");
  return toffoli_gate{std::move(controls), target};
}

/// Cascade of Toffoli gates over `line_count` lines, applied left to right.
struct reversible_circuit {
  std::uint32_t line_count{};
  std::vector<toffoli_gate> gates;

  bool operator==(const reversible_circuit&) const = default;
};

inline void check_line(line_id line, std::uint32_t line_count) {
  if (line >= line_count)
    throw line_out_of_range("line " + std::to_string(line) +
                            " out of range for circuit with " +
                            std::to_string(line_count) + " lines");
}

inline reversible_circuit append_gate(reversible_circuit circuit,
                                      toffoli_gate gate) {
  for (line_id c : gate.controls) check_line(c, circuit.line_count);
  check_line(gate.target, circuit.line_count);
  circuit.gates.push_back(std::move(gate));
  return circuit;
}

enum class quantum_op { NOT, V, VDAG };

enum class gate_library { ncv, ncv_v1 };

/// Elementary quantum gate with at most one control. The value that makes a
/// control fire depends on the library: 1 for NCV, v1 for NCV-|v1>.
struct quantum_gate {
  quantum_op kind{};
  line_id target{};
  std::optional<line_id> control;

  bool operator==(const quantum_gate&) const = default;
};

inline quantum_gate make_quantum_gate(quantum_op kind, line_id target,
                                      std::optional<line_id> control = {}) {
  if (control && *control == target)
    throw target_in_controls("quantum gate control equals target line " +
                             std::to_string(target));
  return quantum_gate{kind, target, control};
}

struct quantum_circuit {
  std::uint32_t line_count{};
  gate_library library{gate_library::ncv};
  std::vector<quantum_gate> gates;

  bool operator==(const quantum_circuit&) const = default;
};

inline quantum_circuit append_gate(quantum_circuit circuit,
                                   quantum_gate gate) {
  if (gate.control && *gate.control == gate.target)
    throw target_in_controls("quantum gate control equals target line " +
                             std::to_string(gate.target));
  if (gate.control) check_line(*gate.control, circuit.line_count);
  check_line(gate.target, circuit.line_count);
  circuit.gates.push_back(gate);
  return circuit;
}

}  // namespace revqc

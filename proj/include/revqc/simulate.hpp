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

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "revqc/circuit.hpp"

namespace revqc {

/// The four line values reachable from Boolean inputs under NOT/V/V+.
/// Enumerator order is the qudit basis order (0, v0, 1, v1), so V is the
/// cyclic successor, NOT the half turn, and V+ the cyclic predecessor.
enum class quart : std::uint8_t { zero = 0, v0 = 1, one = 2, v1 = 3 };

using quart_state = std::vector<quart>;

struct length_mismatch : circuit_error {
  using circuit_error::circuit_error;
};

struct too_many_lines : circuit_error {
  using circuit_error::circuit_error;
};

struct invalid_symbol : circuit_error {
  using circuit_error::circuit_error;
};

/// Raised when an NCV-mode controlled gate sees v0 or v1 on its control
/// line; the restricted 4-valued model is only defined for Boolean controls.
struct invalid_ncv_control : circuit_error {
  std::size_t gate_index;
  explicit invalid_ncv_control(std::size_t index)
      : circuit_error("gate " + std::to_string(index) +
                      ": NCV control line holds a non-Boolean value"),
        gate_index(index) {}
};

inline quart step_quart(quart value, quantum_op kind) {
  unsigned shift = kind == quantum_op::V      ? 1
                   : kind == quantum_op::NOT  ? 2
                                              : 3;
  return static_cast<quart>((static_cast<unsigned>(value) + shift) % 4);
}

inline bool is_boolean(quart value) {
  return value == quart::zero || value == quart::one;
}

inline bool is_boolean(const quart_state& state) {
  for (quart v : state)
    if (!is_boolean(v)) return false;
  return true;
}

inline std::vector<bool> simulate_reversible(const reversible_circuit& circuit,
                                             std::vector<bool> input) {
  if (input.size() != circuit.line_count)
    throw length_mismatch("input pattern has " + std::to_string(input.size()) +
                          " values, circuit has " +
                          std::to_string(circuit.line_count) + " lines");
  for (const auto& gate : circuit.gates) {
    bool fire = true;
    for (line_id c : gate.controls) fire = fire && input[c];
    if (fire) input[gate.target] = !input[gate.target];
  }
  return input;
}

inline quart control_trigger(gate_library library) {
  return library == gate_library::ncv ? quart::one : quart::v1;
}

namespace detail {

inline void apply_quantum_gate(const quantum_circuit& circuit,
                               std::size_t gate_index, quart_state& state) {
  const quantum_gate& gate = circuit.gates[gate_index];
  if (gate.control) {
    quart held = state[*gate.control];
    if (circuit.library == gate_library::ncv && !is_boolean(held))
      throw invalid_ncv_control(gate_index);
    if (held != control_trigger(circuit.library)) return;
  }
  state[gate.target] = step_quart(state[gate.target], gate.kind);
}

}  // namespace detail

inline quart_state simulate_quantum(const quantum_circuit& circuit,
                                    quart_state input) {
  if (input.size() != circuit.line_count)
    throw length_mismatch("input pattern has " + std::to_string(input.size()) +
                          " values, circuit has " +
                          std::to_string(circuit.line_count) + " lines");
  for (std::size_t i = 0; i < circuit.gates.size(); ++i)
    detail::apply_quantum_gate(circuit, i, input);
  return input;
}

/// State after each gate, in order; result has one entry per gate.
inline std::vector<quart_state> simulate_quantum_trace(
    const quantum_circuit& circuit, quart_state input) {
  if (input.size() != circuit.line_count)
    throw length_mismatch("input pattern has " + std::to_string(input.size()) +
                          " values, circuit has " +
                          std::to_string(circuit.line_count) + " lines");
  std::vector<quart_state> trace;
  trace.reserve(circuit.gates.size());
  for (std::size_t i = 0; i < circuit.gates.size(); ++i) {
    detail::apply_quantum_gate(circuit, i, input);
    trace.push_back(input);
  }
  return trace;
}

// Pattern <-> state conversions. Line 0 is the most significant bit, so the
// pattern 1111 -> 1000 of a 4-line circuit reads top to bottom.

inline std::vector<bool> bool_state_from_pattern(std::uint64_t pattern,
                                                 std::uint32_t line_count) {
  std::vector<bool> state(line_count);
  for (std::uint32_t i = 0; i < line_count; ++i)
    state[i] = (pattern >> (line_count - 1 - i)) & 1u;
  return state;
}

inline std::uint64_t pattern_from_bool_state(const std::vector<bool>& state) {
  std::uint64_t pattern = 0;
  for (bool b : state) pattern = (pattern << 1) | (b ? 1u : 0u);
  return pattern;
}

inline quart_state quart_state_from_pattern(std::uint64_t pattern,
                                            std::uint32_t line_count) {
  quart_state state(line_count);
  for (std::uint32_t i = 0; i < line_count; ++i)
    state[i] = ((pattern >> (line_count - 1 - i)) & 1u) ? quart::one
                                                        : quart::zero;
  return state;
}

inline std::vector<bool> to_bool_state(const quart_state& state) {
  std::vector<bool> out(state.size());
  for (std::size_t i = 0; i < state.size(); ++i) {
    if (!is_boolean(state[i]))
      throw invalid_symbol("line " + std::to_string(i) +
                           " holds a non-Boolean value");
    out[i] = state[i] == quart::one;
  }
  return out;
}

inline std::string to_string(quart value) {
  switch (value) {
    case quart::zero: return "0";
    case quart::v0: return "v0";
    case quart::one: return "1";
    case quart::v1: return "v1";
  }
  return "?";
}

inline std::string format_quart_state(const quart_state& state,
                                      std::string_view separator = "") {
  std::string out;
  for (std::size_t i = 0; i < state.size(); ++i) {
    if (i) out += separator;
    out += to_string(state[i]);
  }
  return out;
}

/// Parses patterns like "1111", "1v10" or "0 v1 1"; 'v' must be followed by
/// '0' or '1'.
inline quart_state parse_quart_pattern(std::string_view text) {
  quart_state state;
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (c == ' ' || c == '\t') continue;
    if (c == '0') {
      state.push_back(quart::zero);
    } else if (c == '1') {
      state.push_back(quart::one);
    } else if (c == 'v' && i + 1 < text.size() &&
               (text[i + 1] == '0' || text[i + 1] == '1')) {
      state.push_back(text[i + 1] == '0' ? quart::v0 : quart::v1);
      ++i;
    } else {
      throw invalid_symbol(std::string("invalid pattern symbol '") + c + "'");
    }
  }
  return state;
}

/// Full 2^n permutation computed by a reversible circuit.
inline std::vector<std::uint64_t> truth_table(const reversible_circuit& circuit,
                                              std::uint32_t max_lines = 20) {
  if (circuit.line_count > max_lines)
    throw too_many_lines("truth table over " +
                         std::to_string(circuit.line_count) +
                         " lines exceeds the exhaustive bound of " +
                         std::to_string(max_lines));
  std::uint64_t size = std::uint64_t{1} << circuit.line_count;
  std::vector<std::uint64_t> table(size);
  std::vector<bool> seen(size, false);
  for (std::uint64_t pattern = 0; pattern < size; ++pattern) {
    std::uint64_t out = pattern_from_bool_state(simulate_reversible(
        circuit, bool_state_from_pattern(pattern, circuit.line_count)));
    table[pattern] = out;
    if (seen[out])
      throw std::logic_error("truth table is not a bijection");
    seen[out] = true;
  }
  return table;
}

}  // namespace revqc

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

#include <array>
#include <cmath>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "revqc/circuit.hpp"

namespace revqc {

struct out_of_table_range : circuit_error {
  using circuit_error::circuit_error;
};

struct insufficient_ancillae : circuit_error {
  using circuit_error::circuit_error;
};

/// Reference NCV quantum costs for a Toffoli gate with k controls (rows
/// 1..15), by number of available ancillary lines (columns, starting at 1).
/// 0 marks an unpopulated cell; within a row, more ancillae never cost more.
/// The k=1 entry is the CNOT itself, which needs no ancilla; the column is
/// read as "cost with at least that many ancillae available".
inline constexpr std::array<std::array<unsigned, 6>, 15> ncv_cost_table{{
    {1, 0, 0, 0, 0, 0},
    {5, 0, 0, 0, 0, 0},
    {14, 0, 0, 0, 0, 0},
    {20, 0, 0, 0, 0, 0},
    {32, 0, 0, 0, 0, 0},
    {44, 0, 0, 0, 0, 0},
    {64, 56, 0, 0, 0, 0},
    {76, 68, 0, 0, 0, 0},
    {96, 88, 80, 0, 0, 0},
    {108, 100, 92, 0, 0, 0},
    {132, 120, 112, 104, 0, 0},
    {156, 132, 124, 116, 0, 0},
    {180, 156, 148, 136, 128, 0},
    {204, 180, 172, 148, 140, 0},
    {228, 204, 198, 172, 160, 152},
}};

inline unsigned ncv_table_row_width(unsigned k) {
  const auto& row = ncv_cost_table[k - 1];
  unsigned width = 0;
  while (width < row.size() && row[width] != 0) ++width;
  return width;
}

/// NCV cost of a k-control Toffoli given the number of available ancillary
/// lines; uses the populated column with the largest ancilla count that does
/// not exceed `ancillae`.
inline unsigned ncv_cost(unsigned k, unsigned ancillae) {
  if (k < 1 || k > ncv_cost_table.size())
    throw out_of_table_range("no NCV cost entry for " + std::to_string(k) +
                             " controls");
  if (ancillae < 1)
    throw insufficient_ancillae(
        "NCV cost table requires at least one ancillary line");
  unsigned width = ncv_table_row_width(k);
  unsigned column = ancillae < width ? ancillae : width;
  return ncv_cost_table[k - 1][column - 1];
}

/// NCV-|v1> cost: the controlled-gate count 2k-1 of the sensitization
/// cascade; a control-free gate costs one NOT.
inline unsigned ncvv1_cost(unsigned k) { return k == 0 ? 1 : 2 * k - 1; }

/// Relative savings of NCV-|v1> over NCV for k controls, as min/max rounded
/// percentages over all populated ancilla columns.
inline std::pair<int, int> delta_range(unsigned k) {
  if (k < 1 || k > ncv_cost_table.size())
    throw out_of_table_range("no NCV cost entry for " + std::to_string(k) +
                             " controls");
  int low = 100;
  int high = 0;
  unsigned width = ncv_table_row_width(k);
  for (unsigned a = 1; a <= width; ++a) {
    double ncv = ncv_cost(k, a);
    double saving = 100.0 * (ncv - ncvv1_cost(k)) / ncv;
    int rounded = static_cast<int>(std::lround(saving));
    low = std::min(low, rounded);
    high = std::max(high, rounded);
  }
  return {low, high};
}

struct cost_entry {
  std::size_t gate_index{};
  std::size_t control_count{};
  std::size_t cost{};

  bool operator==(const cost_entry&) const = default;
};

struct cost_report {
  std::size_t total_gates{};
  std::size_t controlled_gates{};
  std::vector<cost_entry> per_gate;
};

/// Gate counts of a quantum circuit; cost counts controlled gates only,
/// uncontrolled gates cost 0 and are reported in total_gates.
inline cost_report report(const quantum_circuit& circuit) {
  cost_report out;
  out.total_gates = circuit.gates.size();
  for (std::size_t i = 0; i < circuit.gates.size(); ++i) {
    bool controlled = circuit.gates[i].control.has_value();
    if (controlled) ++out.controlled_gates;
    out.per_gate.push_back({i, controlled ? 1u : 0u, controlled ? 1u : 0u});
  }
  return out;
}

}  // namespace revqc

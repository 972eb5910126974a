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

// Dense complex state-vector simulation. This is the oracle the restricted
// 4-valued simulator is validated against, not the workhorse; line counts
// are capped accordingly.

#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <vector>

#include "revqc/circuit.hpp"
#include "revqc/simulate.hpp"

namespace revqc {

using cdouble = std::complex<double>;
using cmatrix = std::vector<std::vector<cdouble>>;

struct non_boolean_ncv_input : circuit_error {
  using circuit_error::circuit_error;
};

struct state_vector {
  std::vector<cdouble> amplitudes;
  unsigned radix{2};  // 2 for NCV qubits, 4 for NCV-|v1> qudits
  std::uint32_t line_count{};
};

inline unsigned library_radix(gate_library library) {
  return library == gate_library::ncv ? 2u : 4u;
}

namespace detail {

inline cmatrix base_unitary(quantum_op kind, gate_library library) {
  const cdouble i{0.0, 1.0};
  if (library == gate_library::ncv) {
    switch (kind) {
      case quantum_op::NOT:
        return {{0, 1}, {1, 0}};
      case quantum_op::V:
        return {{(1.0 + i) / 2.0, (1.0 - i) / 2.0},
                {(1.0 - i) / 2.0, (1.0 + i) / 2.0}};
      case quantum_op::VDAG:
        return {{(1.0 - i) / 2.0, (1.0 + i) / 2.0},
                {(1.0 + i) / 2.0, (1.0 - i) / 2.0}};
    }
  }
  // NCV-|v1>: permutation matrices over basis order 0, v0, 1, v1.
  // Row r, column c is 1 iff step_quart(c) == r.
  unsigned shift = kind == quantum_op::V ? 1 : kind == quantum_op::NOT ? 2 : 3;
  cmatrix m(4, std::vector<cdouble>(4, 0.0));
  for (unsigned c = 0; c < 4; ++c) m[(c + shift) % 4][c] = 1.0;
  return m;
}

}  // namespace detail

/// Full matrix of a single gate on its own lines, control (when present) as
/// the more significant subsystem. A controlled gate acts as identity on
/// every control-value block except the trigger block (1 for NCV, v1 for
/// NCV-|v1>), where it acts as the base matrix.
inline cmatrix gate_unitary(const quantum_gate& gate, gate_library library) {
  cmatrix base = detail::base_unitary(gate.kind, library);
  if (!gate.control) return base;
  unsigned d = library_radix(library);
  unsigned trigger = d - 1;  // basis index of the trigger value
  cmatrix m(d * d, std::vector<cdouble>(d * d, 0.0));
  for (unsigned c = 0; c < d; ++c) {
    for (unsigned r = 0; r < d; ++r) {
      for (unsigned s = 0; s < d; ++s) {
        m[c * d + r][c * d + s] =
            c == trigger ? base[r][s] : (r == s ? 1.0 : 0.0);
      }
    }
  }
  return m;
}

/// State vector of a product of per-line values. For radix 4 the four values
/// are basis states; for radix 2 the v-values are the superpositions
/// v0 = (1+i)/2 (1, -i) and v1 = (1+i)/2 (-i, 1).
inline state_vector embed_state(const quart_state& state, unsigned radix) {
  const cdouble i{0.0, 1.0};
  auto n = static_cast<std::uint32_t>(state.size());
  if (radix == 4) {
    std::size_t size = std::size_t{1} << (2 * n);
    std::vector<cdouble> amps(size, 0.0);
    std::size_t index = 0;
    for (quart v : state) index = index * 4 + static_cast<std::size_t>(v);
    amps[index] = 1.0;
    return {std::move(amps), 4, n};
  }
  std::vector<cdouble> amps{1.0};
  for (quart v : state) {
    std::vector<cdouble> line;
    switch (v) {
      case quart::zero: line = {1.0, 0.0}; break;
      case quart::one: line = {0.0, 1.0}; break;
      case quart::v0: line = {(1.0 + i) / 2.0, (1.0 - i) / 2.0}; break;
      case quart::v1: line = {(1.0 - i) / 2.0, (1.0 + i) / 2.0}; break;
    }
    std::vector<cdouble> next(amps.size() * 2);
    for (std::size_t a = 0; a < amps.size(); ++a)
      for (std::size_t b = 0; b < 2; ++b) next[a * 2 + b] = amps[a] * line[b];
    amps = std::move(next);
  }
  return {std::move(amps), 2, n};
}

namespace detail {

inline void apply_dense(std::vector<cdouble>& amps, const cmatrix& base,
                        unsigned radix, std::uint32_t line_count,
                        line_id target, std::optional<line_id> control,
                        unsigned trigger) {
  // Digit position: line i sits at place value radix^(line_count-1-i).
  std::size_t target_stride = 1;
  for (std::uint32_t p = 0; p < line_count - 1 - target; ++p)
    target_stride *= radix;
  std::size_t control_stride = 1;
  if (control)
    for (std::uint32_t p = 0; p < line_count - 1 - *control; ++p)
      control_stride *= radix;

  std::vector<cdouble> block(radix);
  for (std::size_t index = 0; index < amps.size(); ++index) {
    if ((index / target_stride) % radix != 0) continue;  // visit groups once
    if (control && (index / control_stride) % radix != trigger) continue;
    for (unsigned v = 0; v < radix; ++v)
      block[v] = amps[index + v * target_stride];
    for (unsigned r = 0; r < radix; ++r) {
      cdouble sum = 0.0;
      for (unsigned s = 0; s < radix; ++s) sum += base[r][s] * block[s];
      amps[index + r * target_stride] = sum;
    }
  }
}

}  // namespace detail

inline state_vector simulate_dense(const quantum_circuit& circuit,
                                   const quart_state& basis_input) {
  if (basis_input.size() != circuit.line_count)
    throw length_mismatch("input pattern has " +
                          std::to_string(basis_input.size()) +
                          " values, circuit has " +
                          std::to_string(circuit.line_count) + " lines");
  unsigned radix = library_radix(circuit.library);
  std::uint32_t bound = radix == 2 ? 8 : 6;
  if (circuit.line_count > bound)
    throw too_many_lines("dense simulation limited to " +
                         std::to_string(bound) + " lines at radix " +
                         std::to_string(radix));
  if (radix == 2 && !is_boolean(basis_input))
    throw non_boolean_ncv_input("NCV dense simulation takes Boolean inputs");

  state_vector state = embed_state(basis_input, radix);
  unsigned trigger = radix - 1;
  for (const auto& gate : circuit.gates)
    detail::apply_dense(state.amplitudes,
                        detail::base_unitary(gate.kind, circuit.library),
                        radix, circuit.line_count, gate.target, gate.control,
                        trigger);
  return state;
}

inline double max_abs_diff(const state_vector& a, const state_vector& b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.amplitudes.size(); ++i)
    worst = std::max(worst, std::abs(a.amplitudes[i] - b.amplitudes[i]));
  return worst;
}

inline double norm(const state_vector& v) {
  double sum = 0.0;
  for (const cdouble& a : v.amplitudes) sum += std::norm(a);
  return std::sqrt(sum);
}

}  // namespace revqc

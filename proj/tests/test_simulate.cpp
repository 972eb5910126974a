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

#include <catch2/catch_amalgamated.hpp>
#include <random>

#include "revqc/circuit.hpp"
#include "revqc/simulate.hpp"
#include "test_util.hpp"

using namespace revqc;

namespace {

reversible_circuit fig1_circuit() {
  reversible_circuit circuit{4, {}};
  circuit = append_gate(std::move(circuit), make_toffoli({0, 1}, 3));
  circuit = append_gate(std::move(circuit), make_toffoli({0}, 1));
  circuit = append_gate(std::move(circuit), make_toffoli({0}, 2));
  circuit = append_gate(std::move(circuit), make_toffoli({3}, 0));
  return circuit;
}

// 6-gate NCV realization of the same function.
quantum_circuit fig3_circuit() {
  quantum_circuit circuit{4, gate_library::ncv, {}};
  circuit = append_gate(std::move(circuit), make_quantum_gate(quantum_op::V, 3, 1));
  circuit = append_gate(std::move(circuit), make_quantum_gate(quantum_op::V, 3, 0));
  circuit = append_gate(std::move(circuit), make_quantum_gate(quantum_op::NOT, 1, 0));
  circuit = append_gate(std::move(circuit), make_quantum_gate(quantum_op::VDAG, 3, 1));
  circuit = append_gate(std::move(circuit), make_quantum_gate(quantum_op::NOT, 2, 0));
  circuit = append_gate(std::move(circuit), make_quantum_gate(quantum_op::NOT, 0, 3));
  return circuit;
}

// 9-gate NCV-|v1> realization (5 controlled gates).
quantum_circuit fig4_circuit() {
  quantum_circuit circuit{4, gate_library::ncv_v1, {}};
  circuit = append_gate(std::move(circuit), make_quantum_gate(quantum_op::V, 0));
  circuit = append_gate(std::move(circuit), make_quantum_gate(quantum_op::V, 1, 0));
  circuit = append_gate(std::move(circuit), make_quantum_gate(quantum_op::NOT, 3, 1));
  circuit = append_gate(std::move(circuit), make_quantum_gate(quantum_op::V, 1, 0));
  circuit = append_gate(std::move(circuit), make_quantum_gate(quantum_op::NOT, 2, 0));
  circuit = append_gate(std::move(circuit), make_quantum_gate(quantum_op::VDAG, 0));
  circuit = append_gate(std::move(circuit), make_quantum_gate(quantum_op::V, 3));
  circuit = append_gate(std::move(circuit), make_quantum_gate(quantum_op::NOT, 0, 3));
  circuit = append_gate(std::move(circuit), make_quantum_gate(quantum_op::VDAG, 3));
  return circuit;
}

}  // namespace

TEST_CASE("step_quart follows the transition diagram") {
  CHECK(step_quart(quart::one, quantum_op::V) == quart::v1);
  CHECK(step_quart(quart::v0, quantum_op::VDAG) == quart::zero);
  CHECK(step_quart(quart::v0, quantum_op::NOT) == quart::v1);
  CHECK(step_quart(quart::zero, quantum_op::V) == quart::v0);
  CHECK(step_quart(quart::v1, quantum_op::V) == quart::zero);
  CHECK(step_quart(quart::one, quantum_op::NOT) == quart::zero);
}

TEST_CASE("V squared is NOT and V undoes V+ on all four values") {
  for (int raw = 0; raw < 4; ++raw) {
    auto v = static_cast<quart>(raw);
    CHECK(step_quart(step_quart(v, quantum_op::V), quantum_op::V) ==
          step_quart(v, quantum_op::NOT));
    CHECK(step_quart(step_quart(v, quantum_op::V), quantum_op::VDAG) == v);
    CHECK(step_quart(step_quart(v, quantum_op::VDAG), quantum_op::V) == v);
  }
}

TEST_CASE("reversible simulation of the 4-gate example") {
  auto circuit = fig1_circuit();
  CHECK(simulate_reversible(circuit, bool_state_from_pattern(0b1111, 4)) ==
        bool_state_from_pattern(0b1000, 4));
  CHECK_THROWS_AS(simulate_reversible(circuit, std::vector<bool>{true, true}),
                  length_mismatch);
}

TEST_CASE("empty circuit is the identity") {
  reversible_circuit circuit{3, {}};
  for (std::uint64_t p = 0; p < 8; ++p) {
    auto in = bool_state_from_pattern(p, 3);
    CHECK(simulate_reversible(circuit, in) == in);
  }
}

TEST_CASE("single Toffoli flips only 110 and 111") {
  reversible_circuit circuit{3, {}};
  circuit = append_gate(std::move(circuit), make_toffoli({0, 1}, 2));
  for (std::uint64_t p = 0; p < 8; ++p) {
    auto out = pattern_from_bool_state(
        simulate_reversible(circuit, bool_state_from_pattern(p, 3)));
    if (p == 0b110)
      CHECK(out == 0b111);
    else if (p == 0b111)
      CHECK(out == 0b110);
    else
      CHECK(out == p);
  }
}

TEST_CASE("truth tables") {
  CHECK(truth_table(fig1_circuit())[0b1111] == 0b1000);

  reversible_circuit empty{3, {}};
  auto id = truth_table(empty);
  for (std::uint64_t p = 0; p < 8; ++p) CHECK(id[p] == p);

  reversible_circuit single_not{1, {}};
  single_not = append_gate(std::move(single_not), make_toffoli({}, 0));
  CHECK(truth_table(single_not) == std::vector<std::uint64_t>{1, 0});

  reversible_circuit wide{21, {}};
  CHECK_THROWS_AS(truth_table(wide), too_many_lines);
}

TEST_CASE("truth table of random circuits is a bijection") {
  std::mt19937 rng(23);
  for (int round = 0; round < 30; ++round) {
    std::uint32_t n = 2 + rng() % 9;  // up to 10 lines
    auto circuit = testutil::random_reversible(rng, n, 12, n - 1);
    auto table = truth_table(circuit);  // throws if not bijective
    CHECK(table.size() == (std::uint64_t{1} << n));
  }
}

TEST_CASE("NCV trace matches the annotated 6-gate circuit") {
  auto circuit = fig3_circuit();
  auto trace = simulate_quantum_trace(circuit, quart_state_from_pattern(0b1111, 4));
  REQUIRE(trace.size() == 6);
  CHECK(trace[0] == quart_state{quart::one, quart::one, quart::one, quart::v1});
  CHECK(trace[1] == quart_state{quart::one, quart::one, quart::one, quart::zero});
  CHECK(trace[2] == quart_state{quart::one, quart::zero, quart::one, quart::zero});
  CHECK(trace[3] == quart_state{quart::one, quart::zero, quart::one, quart::zero});
  CHECK(trace[4] == quart_state{quart::one, quart::zero, quart::zero, quart::zero});
  CHECK(trace[5] == quart_state{quart::one, quart::zero, quart::zero, quart::zero});
}

TEST_CASE("NCV-|v1> trace matches the annotated 9-gate circuit") {
  auto circuit = fig4_circuit();
  auto trace = simulate_quantum_trace(circuit, quart_state_from_pattern(0b1111, 4));
  REQUIRE(trace.size() == 9);
  CHECK(trace[1] == quart_state{quart::v1, quart::v1, quart::one, quart::one});
  CHECK(trace[2] == quart_state{quart::v1, quart::v1, quart::one, quart::zero});
  CHECK(trace[3] == quart_state{quart::v1, quart::zero, quart::one, quart::zero});
  CHECK(trace[5] == quart_state{quart::one, quart::zero, quart::zero, quart::zero});
  CHECK(trace[8] == quart_state_from_pattern(0b1000, 4));
}

TEST_CASE("NCV control on a non-Boolean value is an error") {
  quantum_circuit circuit{2, gate_library::ncv, {}};
  circuit = append_gate(std::move(circuit), make_quantum_gate(quantum_op::V, 0));
  circuit = append_gate(std::move(circuit), make_quantum_gate(quantum_op::NOT, 1, 0));
  try {
    simulate_quantum(circuit, quart_state_from_pattern(0b00, 2));
    FAIL("expected invalid_ncv_control");
  } catch (const invalid_ncv_control& e) {
    CHECK(e.gate_index == 1);
  }
}

TEST_CASE("NCV-|v1> controls never fire on Boolean 1") {
  quantum_circuit circuit{2, gate_library::ncv_v1, {}};
  circuit = append_gate(std::move(circuit), make_quantum_gate(quantum_op::NOT, 1, 0));
  auto out = simulate_quantum(circuit, quart_state_from_pattern(0b11, 2));
  CHECK(out == quart_state_from_pattern(0b11, 2));  // 1 != v1, no trigger
  quantum_circuit sensitized{2, gate_library::ncv_v1, {}};
  sensitized = append_gate(std::move(sensitized), make_quantum_gate(quantum_op::V, 0));
  sensitized = append_gate(std::move(sensitized), make_quantum_gate(quantum_op::NOT, 1, 0));
  auto fired = simulate_quantum(sensitized, quart_state_from_pattern(0b11, 2));
  CHECK(fired == quart_state{quart::v1, quart::zero});
}

TEST_CASE("pattern parsing and formatting") {
  CHECK(parse_quart_pattern("1v10") ==
        quart_state{quart::one, quart::v1, quart::zero});
  CHECK(parse_quart_pattern("0 v0 1") ==
        quart_state{quart::zero, quart::v0, quart::one});
  CHECK_THROWS_AS(parse_quart_pattern("1x0"), invalid_symbol);
  CHECK(format_quart_state({quart::v1, quart::one}, " ") == "v1 1");
}

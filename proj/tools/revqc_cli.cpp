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

// revqc command line: map reversible circuits to quantum gate cascades,
// simulate both, verify equivalence and report quantum costs.
//
// Exit codes: 0 success/equivalent, 1 operational error, 2 verification
// failure.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>

#include "revqc/revqc.hpp"

using nlohmann::json;
using namespace revqc;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << content;
}

bool looks_like_quantum(const std::string& text) {
  return text.find(".library") != std::string::npos;
}

int saving_percent(unsigned ncv, unsigned v1) {
  return static_cast<int>(
      std::lround(100.0 * (static_cast<double>(ncv) - v1) / ncv));
}

int run_map(const std::string& input, const std::string& lib,
            const std::string& output) {
  auto doc = parse_real_document(read_file(input));
  quantum_circuit mapped = lib == "ncv" ? map_circuit_ncv(doc.circuit)
                                        : map_circuit_v1(doc.circuit);
  std::string text = write_qc(mapped, doc.variables);
  if (output.empty())
    std::cout << text;
  else
    write_file(output, text);
  auto r = report(mapped);
  std::cerr << "mapped " << doc.circuit.gates.size() << " Toffoli gates to "
            << r.total_gates << " quantum gates (" << r.controlled_gates
            << " controlled)\n";
  return 0;
}

int run_sim(const std::string& input, const std::string& pattern, bool trace) {
  std::string text = read_file(input);
  quart_state in = parse_quart_pattern(pattern);
  if (looks_like_quantum(text)) {
    auto circuit = parse_qc(text);
    if (trace) {
      auto states = simulate_quantum_trace(circuit, in);
      for (std::size_t i = 0; i < states.size(); ++i)
        std::cout << "after gate " << i + 1 << ": "
                  << format_quart_state(states[i], " ") << "\n";
      std::cout << format_quart_state(states.empty() ? in : states.back())
                << "\n";
    } else {
      std::cout << format_quart_state(simulate_quantum(circuit, in)) << "\n";
    }
    return 0;
  }
  auto circuit = parse_real(text);
  std::vector<bool> bits = to_bool_state(in);
  if (trace) {
    std::vector<bool> state = bits;
    if (state.size() != circuit.line_count)
      throw length_mismatch("pattern length does not match line count");
    for (std::size_t i = 0; i < circuit.gates.size(); ++i) {
      reversible_circuit one{circuit.line_count, {circuit.gates[i]}};
      state = simulate_reversible(one, state);
      std::cout << "after gate " << i + 1 << ": ";
      for (bool b : state) std::cout << (b ? '1' : '0');
      std::cout << "\n";
    }
    for (bool b : state) std::cout << (b ? '1' : '0');
    std::cout << "\n";
  } else {
    auto out = simulate_reversible(circuit, bits);
    for (bool b : out) std::cout << (b ? '1' : '0');
    std::cout << "\n";
  }
  return 0;
}

int report_counterexample(std::uint64_t pattern, std::uint32_t n,
                          const std::string& expected,
                          const std::string& got) {
  std::cout << "NOT EQUIVALENT\ncounterexample: input ";
  for (std::uint32_t i = 0; i < n; ++i)
    std::cout << ((pattern >> (n - 1 - i)) & 1u);
  std::cout << " expected " << expected << " got " << got << "\n";
  return 2;
}

int run_verify(const std::string& rev_path, const std::string& qc_path,
               const std::string& mode, std::uint64_t seed,
               std::uint64_t samples) {
  auto rev = parse_real(read_file(rev_path));
  auto qc = parse_qc(read_file(qc_path));
  if (rev.line_count != qc.line_count)
    throw length_mismatch("circuits have different line counts");
  std::uint32_t n = rev.line_count;

  auto check_pattern = [&](std::uint64_t p) -> int {
    auto expected = simulate_reversible(rev, bool_state_from_pattern(p, n));
    std::string expected_text;
    for (bool b : expected) expected_text += b ? '1' : '0';
    if (mode == "dense") {
      auto dense = simulate_dense(qc, quart_state_from_pattern(p, n));
      quart_state expected_state(n);
      for (std::uint32_t i = 0; i < n; ++i)
        expected_state[i] = expected[i] ? quart::one : quart::zero;
      auto reference = embed_state(expected_state, dense.radix);
      if (max_abs_diff(dense, reference) > 1e-10)
        return report_counterexample(p, n, expected_text, "non-basis state");
      return 0;
    }
    auto out = simulate_quantum(qc, quart_state_from_pattern(p, n));
    if (!is_boolean(out))
      return report_counterexample(p, n, expected_text,
                                   format_quart_state(out, ""));
    if (to_bool_state(out) != expected)
      return report_counterexample(p, n, expected_text,
                                   format_quart_state(out, ""));
    return 0;
  };

  if (mode == "exhaustive" || mode == "dense") {
    if (mode == "exhaustive" && n > 20)
      throw too_many_lines("exhaustive mode limited to 20 lines");
    for (std::uint64_t p = 0; p < (std::uint64_t{1} << n); ++p)
      if (int rc = check_pattern(p)) return rc;
  } else if (mode == "random") {
    std::cout << "seed " << seed << "\n";
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint64_t> pick(
        0, (std::uint64_t{1} << n) - 1);
    for (std::uint64_t s = 0; s < samples; ++s)
      if (int rc = check_pattern(pick(rng))) return rc;
  } else {
    throw std::runtime_error("unknown mode '" + mode + "'");
  }
  std::cout << "EQUIVALENT\n";
  return 0;
}

int run_cost(const std::string& input, unsigned ancillae, bool as_json) {
  auto circuit = parse_real(read_file(input));
  json rows = json::array();
  unsigned long total_ncv = 0, total_v1 = 0;
  bool ncv_total_valid = true;
  for (std::size_t i = 0; i < circuit.gates.size(); ++i) {
    auto k = static_cast<unsigned>(circuit.gates[i].controls.size());
    unsigned v1 = ncvv1_cost(k);
    total_v1 += v1;
    json row{{"gate", i}, {"controls", k}, {"ncv_v1_cost", v1}};
    try {
      unsigned ncv = k == 0 ? 1 : ncv_cost(k, ancillae);
      total_ncv += ncv;
      row["ncv_cost"] = ncv;
      row["delta_percent"] = saving_percent(ncv, v1);
    } catch (const out_of_table_range& e) {
      row["ncv_cost"] = nullptr;
      row["error"] = e.what();
      ncv_total_valid = false;
    }
    rows.push_back(std::move(row));
  }
  if (as_json) {
    json out{{"ancillae", ancillae},
             {"gates", rows},
             {"total_ncv_v1_cost", total_v1}};
    if (ncv_total_valid) out["total_ncv_cost"] = total_ncv;
    std::cout << out.dump(2) << "\n";
    return 0;
  }
  std::cout << "gate | k | ncv | ncv-v1 | delta\n";
  for (const auto& row : rows) {
    std::cout << row["gate"] << " | " << row["controls"] << " | ";
    if (row.contains("error"))
      std::cout << "out of table range | " << row["ncv_v1_cost"] << " | -\n";
    else
      std::cout << row["ncv_cost"] << " | " << row["ncv_v1_cost"] << " | "
                << row["delta_percent"] << "%\n";
  }
  std::cout << "total ncv-v1 cost: " << total_v1 << "\n";
  if (ncv_total_valid)
    std::cout << "total ncv cost (" << ancillae << " ancillae): " << total_ncv
              << "\n";
  return 0;
}

int run_tables(bool as_json) {
  if (as_json) {
    json ncv = json::array();
    for (unsigned k = 1; k <= 15; ++k) {
      json costs = json::array();
      for (unsigned a = 1; a <= ncv_table_row_width(k); ++a)
        costs.push_back(ncv_cost(k, a));
      ncv.push_back({{"controls", k}, {"costs_by_ancillae", costs}});
    }
    json v1 = json::array();
    for (unsigned k = 1; k <= 15; ++k) {
      auto [low, high] = delta_range(k);
      v1.push_back({{"controls", k},
                    {"cost", ncvv1_cost(k)},
                    {"delta_percent", {low, high}}});
    }
    std::cout << json{{"ncv", ncv}, {"ncv_v1", v1}}.dump(2) << "\n";
    return 0;
  }
  std::cout << "k | ncv costs by ancillae | ncv-v1 cost | delta\n";
  for (unsigned k = 1; k <= 15; ++k) {
    std::cout << k << " |";
    for (unsigned a = 1; a <= ncv_table_row_width(k); ++a)
      std::cout << " " << ncv_cost(k, a);
    auto [low, high] = delta_range(k);
    std::cout << " | " << ncvv1_cost(k) << " | " << low;
    if (high != low) std::cout << "-" << high;
    std::cout << "%\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"reversible-to-quantum circuit mapping toolkit"};
  app.require_subcommand(1);

  std::string input, output, qc_path, pattern;
  std::string lib = "ncv-v1";
  std::string mode = "exhaustive";
  unsigned ancillae = 1;
  std::uint64_t seed = std::random_device{}();
  std::uint64_t samples = 1000;
  bool trace = false;
  bool as_json = false;

  auto* map_cmd = app.add_subcommand("map", "map a reversible circuit file");
  map_cmd->add_option("input", input, "reversible circuit (.real)")
      ->required();
  map_cmd->add_option("--lib", lib, "target library (ncv or ncv-v1)")
      ->check(CLI::IsMember({"ncv", "ncv-v1"}));
  map_cmd->add_option("-o,--output", output, "output path (default stdout)");

  auto* sim_cmd = app.add_subcommand("sim", "simulate a circuit on a pattern");
  sim_cmd->add_option("input", input, "circuit file")->required();
  sim_cmd->add_option("pattern", pattern, "input pattern, e.g. 1111 or 1v10")
      ->required();
  sim_cmd->add_flag("--trace", trace, "print the state after every gate");

  auto* verify_cmd =
      app.add_subcommand("verify", "check a quantum circuit against a "
                                   "reversible one on Boolean inputs");
  verify_cmd->add_option("reversible", input, "reversible circuit (.real)")
      ->required();
  verify_cmd->add_option("quantum", qc_path, "quantum circuit (.qc)")
      ->required();
  verify_cmd->add_option("--mode", mode, "exhaustive, random or dense")
      ->check(CLI::IsMember({"exhaustive", "random", "dense"}));
  verify_cmd->add_option("--seed", seed, "seed for random mode");
  verify_cmd->add_option("--samples", samples, "sample count for random mode");

  auto* cost_cmd =
      app.add_subcommand("cost", "per-gate quantum costs of a reversible "
                                 "circuit under both libraries");
  cost_cmd->add_option("input", input, "reversible circuit (.real)")
      ->required();
  cost_cmd->add_option("--ancillae", ancillae, "available ancillary lines");
  cost_cmd->add_flag("--json", as_json, "machine-readable output");

  auto* tables_cmd =
      app.add_subcommand("tables", "dump the embedded cost tables");
  tables_cmd->add_flag("--json", as_json, "machine-readable output");

  CLI11_PARSE(app, argc, argv);

  try {
    if (map_cmd->parsed()) return run_map(input, lib, output);
    if (sim_cmd->parsed()) return run_sim(input, pattern, trace);
    if (verify_cmd->parsed())
      return run_verify(input, qc_path, mode, seed, samples);
    if (cost_cmd->parsed()) return run_cost(input, ancillae, as_json);
    if (tables_cmd->parsed()) return run_tables(as_json);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}

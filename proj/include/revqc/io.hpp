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

// Text formats for circuits, a strict subset of the community .real
// convention:
//
//   # comment to end of line
//   .numvars N
//   .variables v1 ... vN      (optional; defaults to x1..xN)
//   .begin
//   tK c1 ... c(K-1) target   (reversible files)
//   .end
//
// Quantum circuit files add a required `.library ncv|ncv-v1` directive and
// use gate lines `not t`, `v t`, `v+ t`, `cnot c t`, `cv c t`, `cv+ c t`.
// Directives and mnemonics are case-insensitive; LF and CRLF are accepted,
// LF is emitted. RevLib features outside this subset (constants, garbage,
// other gate types) are rejected explicitly.

#pragma once

#include <cctype>
#include <charconv>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "revqc/circuit.hpp"

namespace revqc {

struct parse_error : circuit_error {
  std::size_t line;
  std::size_t column;
  parse_error(const std::string& message, std::size_t line_no,
              std::size_t column_no)
      : circuit_error("line " + std::to_string(line_no) + ", column " +
                      std::to_string(column_no) + ": " + message),
        line(line_no),
        column(column_no) {}
};

struct unknown_variable : parse_error {
  using parse_error::parse_error;
};

struct arity_mismatch : parse_error {
  using parse_error::parse_error;
};

struct missing_section : parse_error {
  using parse_error::parse_error;
};

struct unknown_library : parse_error {
  using parse_error::parse_error;
};

struct unsupported_feature : parse_error {
  using parse_error::parse_error;
};

struct real_document {
  std::vector<std::string> variables;
  reversible_circuit circuit;
};

struct qc_document {
  std::vector<std::string> variables;
  quantum_circuit circuit;
};

namespace io_detail {

struct token {
  std::string text;
  std::size_t line;
  std::size_t column;
};

inline std::string lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

inline std::vector<std::vector<token>> tokenize(std::string_view text) {
  std::vector<std::vector<token>> lines;
  std::size_t line_no = 1;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(
        pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (std::size_t hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    std::vector<token> tokens;
    std::size_t col = 0;
    while (col < line.size()) {
      if (std::isspace(static_cast<unsigned char>(line[col]))) {
        ++col;
        continue;
      }
      std::size_t start = col;
      while (col < line.size() &&
             !std::isspace(static_cast<unsigned char>(line[col])))
        ++col;
      tokens.push_back(
          {std::string(line.substr(start, col - start)), line_no, start + 1});
    }
    if (!tokens.empty()) lines.push_back(std::move(tokens));
    if (eol == std::string_view::npos) break;
    pos = eol + 1;
    ++line_no;
  }
  return lines;
}

inline bool is_unsupported_directive(const std::string& d) {
  static const char* known[] = {".inputs",   ".outputs", ".constants",
                                ".garbage",  ".version", ".inputbus",
                                ".outputbus", ".state",  ".module",
                                ".define"};
  for (const char* k : known)
    if (d == k) return true;
  return false;
}

// Shared header state for both formats.
struct header {
  std::uint32_t numvars = 0;
  bool have_numvars = false;
  std::vector<std::string> variables;
  std::unordered_map<std::string, line_id> index;
};

inline void set_variables(header& h, const std::vector<token>& line) {
  if (!h.have_numvars)
    throw parse_error(".variables before .numvars", line[0].line,
                      line[0].column);
  if (line.size() - 1 != h.numvars)
    throw parse_error(".variables lists " + std::to_string(line.size() - 1) +
                          " names, .numvars declared " +
                          std::to_string(h.numvars),
                      line[0].line, line[0].column);
  for (std::size_t i = 1; i < line.size(); ++i) {
    if (h.index.count(line[i].text))
      throw parse_error("duplicate variable name '" + line[i].text + "'",
                        line[i].line, line[i].column);
    h.index.emplace(line[i].text, static_cast<line_id>(i - 1));
    h.variables.push_back(line[i].text);
  }
}

inline void set_numvars(header& h, const std::vector<token>& line) {
  if (line.size() != 2)
    throw parse_error(".numvars takes exactly one argument", line[0].line,
                      line[0].column);
  std::uint32_t n = 0;
  auto [ptr, ec] = std::from_chars(line[1].text.data(),
                                   line[1].text.data() + line[1].text.size(), n);
  if (ec != std::errc{} || ptr != line[1].text.data() + line[1].text.size() ||
      n == 0)
    throw parse_error("invalid line count '" + line[1].text + "'",
                      line[1].line, line[1].column);
  h.numvars = n;
  h.have_numvars = true;
}

inline void default_variables(header& h) {
  if (!h.variables.empty()) return;
  for (std::uint32_t i = 0; i < h.numvars; ++i) {
    std::string name = "x" + std::to_string(i + 1);
    h.index.emplace(name, i);
    h.variables.push_back(name);
  }
}

inline line_id resolve(const header& h, const token& t) {
  auto it = h.index.find(t.text);
  if (it == h.index.end())
    throw unknown_variable("unknown variable '" + t.text + "'", t.line,
                           t.column);
  return it->second;
}

inline std::vector<std::string> default_names(std::uint32_t line_count) {
  std::vector<std::string> names;
  for (std::uint32_t i = 0; i < line_count; ++i)
    names.push_back("x" + std::to_string(i + 1));
  return names;
}

}  // namespace io_detail

inline real_document parse_real_document(std::string_view text) {
  using namespace io_detail;
  auto lines = tokenize(text);
  header h;
  real_document doc;
  bool in_body = false;
  bool ended = false;
  std::size_t last_line = 0;
  for (const auto& line : lines) {
    const token& first = line[0];
    last_line = first.line;
    std::string word = lower(first.text);
    if (ended)
      throw parse_error("content after .end", first.line, first.column);
    if (!in_body) {
      if (word == ".numvars") {
        set_numvars(h, line);
      } else if (word == ".variables") {
        set_variables(h, line);
      } else if (word == ".begin") {
        if (!h.have_numvars)
          throw missing_section(".begin before .numvars", first.line,
                                first.column);
        default_variables(h);
        doc.circuit.line_count = h.numvars;
        in_body = true;
      } else if (is_unsupported_directive(word)) {
        throw unsupported_feature("directive '" + first.text +
                                      "' is not supported",
                                  first.line, first.column);
      } else {
        throw parse_error("unexpected token '" + first.text + "'", first.line,
                          first.column);
      }
      continue;
    }
    if (word == ".end") {
      ended = true;
      continue;
    }
    if (word.size() >= 2 && (word[0] == 'f' || word[0] == 'p' ||
                             word[0] == 'v') &&
        std::isdigit(static_cast<unsigned char>(word[1])))
      throw unsupported_feature("gate type '" + first.text +
                                    "' is not supported (Toffoli gates only)",
                                first.line, first.column);
    if (word[0] != 't')
      throw parse_error("expected a Toffoli gate line, got '" + first.text +
                            "'",
                        first.line, first.column);
    unsigned arity = 0;
    auto [ptr, ec] = std::from_chars(word.data() + 1, word.data() + word.size(),
                                     arity);
    if (ec != std::errc{} || ptr != word.data() + word.size() || arity == 0)
      throw parse_error("malformed gate mnemonic '" + first.text + "'",
                        first.line, first.column);
    if (line.size() - 1 != arity)
      throw arity_mismatch("gate '" + first.text + "' expects " +
                               std::to_string(arity) + " lines, got " +
                               std::to_string(line.size() - 1),
                           first.line, first.column);
    std::vector<line_id> controls;
    for (std::size_t i = 1; i + 1 < line.size(); ++i)
      controls.push_back(resolve(h, line[i]));
    line_id target = resolve(h, line.back());
    try {
      doc.circuit = append_gate(std::move(doc.circuit),
                                make_toffoli(std::move(controls), target));
    } catch (const circuit_error& e) {
      throw parse_error(e.what(), first.line, first.column);
    }
  }
  if (!h.have_numvars)
    throw missing_section("missing .numvars", last_line, 1);
  if (!in_body) throw missing_section("missing .begin", last_line, 1);
  if (!ended) throw missing_section("missing .end", last_line, 1);
  doc.variables = h.variables;
  return doc;
}

inline reversible_circuit parse_real(std::string_view text) {
  return parse_real_document(text).circuit;
}

inline qc_document parse_qc_document(std::string_view text) {
  using namespace io_detail;
  auto lines = tokenize(text);
  header h;
  qc_document doc;
  bool in_body = false;
  bool ended = false;
  bool have_library = false;
  std::size_t last_line = 0;
  for (const auto& line : lines) {
    const token& first = line[0];
    last_line = first.line;
    std::string word = lower(first.text);
    if (ended)
      throw parse_error("content after .end", first.line, first.column);
    if (!in_body) {
      if (word == ".numvars") {
        set_numvars(h, line);
      } else if (word == ".variables") {
        set_variables(h, line);
      } else if (word == ".library") {
        if (line.size() != 2)
          throw parse_error(".library takes exactly one argument", first.line,
                            first.column);
        std::string lib = lower(line[1].text);
        if (lib == "ncv")
          doc.circuit.library = gate_library::ncv;
        else if (lib == "ncv-v1")
          doc.circuit.library = gate_library::ncv_v1;
        else
          throw unknown_library("unknown library '" + line[1].text + "'",
                                line[1].line, line[1].column);
        have_library = true;
      } else if (word == ".begin") {
        if (!h.have_numvars)
          throw missing_section(".begin before .numvars", first.line,
                                first.column);
        if (!have_library)
          throw missing_section(".begin before .library", first.line,
                                first.column);
        default_variables(h);
        doc.circuit.line_count = h.numvars;
        in_body = true;
      } else if (is_unsupported_directive(word)) {
        throw unsupported_feature("directive '" + first.text +
                                      "' is not supported",
                                  first.line, first.column);
      } else {
        throw parse_error("unexpected token '" + first.text + "'", first.line,
                          first.column);
      }
      continue;
    }
    if (word == ".end") {
      ended = true;
      continue;
    }
    quantum_op kind;
    bool controlled;
    if (word == "not") {
      kind = quantum_op::NOT;
      controlled = false;
    } else if (word == "v") {
      kind = quantum_op::V;
      controlled = false;
    } else if (word == "v+") {
      kind = quantum_op::VDAG;
      controlled = false;
    } else if (word == "cnot") {
      kind = quantum_op::NOT;
      controlled = true;
    } else if (word == "cv") {
      kind = quantum_op::V;
      controlled = true;
    } else if (word == "cv+") {
      kind = quantum_op::VDAG;
      controlled = true;
    } else {
      throw parse_error("unknown gate mnemonic '" + first.text + "'",
                        first.line, first.column);
    }
    std::size_t expected = controlled ? 2u : 1u;
    if (line.size() - 1 != expected)
      throw arity_mismatch("gate '" + first.text + "' expects " +
                               std::to_string(expected) + " lines, got " +
                               std::to_string(line.size() - 1),
                           first.line, first.column);
    std::optional<line_id> control;
    if (controlled) control = resolve(h, line[1]);
    line_id target = resolve(h, line.back());
    try {
      doc.circuit = append_gate(std::move(doc.circuit),
                                make_quantum_gate(kind, target, control));
    } catch (const circuit_error& e) {
      throw parse_error(e.what(), first.line, first.column);
    }
  }
  if (!h.have_numvars)
    throw missing_section("missing .numvars", last_line, 1);
  if (!have_library)
    throw missing_section("missing .library", last_line, 1);
  if (!in_body) throw missing_section("missing .begin", last_line, 1);
  if (!ended) throw missing_section("missing .end", last_line, 1);
  doc.variables = h.variables;
  return doc;
}

inline quantum_circuit parse_qc(std::string_view text) {
  return parse_qc_document(text).circuit;
}

inline std::string write_real(const reversible_circuit& circuit,
                              std::vector<std::string> names = {}) {
  if (names.empty()) names = io_detail::default_names(circuit.line_count);
  std::string out;
  out += ".numvars " + std::to_string(circuit.line_count) + "\n";
  out += ".variables";
  for (const auto& name : names) out += " " + name;
  out += "\n.begin\n";
  for (const auto& gate : circuit.gates) {
    out += "t" + std::to_string(gate.controls.size() + 1);
    for (line_id c : gate.controls) out += " " + names[c];
    out += " " + names[gate.target] + "\n";
  }
  out += ".end\n";
  return out;
}

inline std::string write_qc(const quantum_circuit& circuit,
                            std::vector<std::string> names = {}) {
  if (names.empty()) names = io_detail::default_names(circuit.line_count);
  std::string out;
  out += ".numvars " + std::to_string(circuit.line_count) + "\n";
  out += ".variables";
  for (const auto& name : names) out += " " + name;
  out += "\n.library ";
  out += circuit.library == gate_library::ncv ? "ncv" : "ncv-v1";
  out += "\n.begin\n";
  for (const auto& gate : circuit.gates) {
    const char* base = gate.kind == quantum_op::NOT  ? "not"
                       : gate.kind == quantum_op::V  ? "v"
                                                     : "v+";
    if (gate.control)
      out += std::string("c") + base + " " + names[*gate.control] + " " +
             names[gate.target] + "\n";
    else
      out += std::string(base) + " " + names[gate.target] + "\n";
  }
  out += ".end\n";
  return out;
}

}  // namespace revqc

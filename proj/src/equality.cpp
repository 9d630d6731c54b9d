// Copyright 2026 The sb3lint Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "sb3lint/equality.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace sb3lint {

namespace {

void appendEscaped(std::ostringstream& out, const std::string& text) {
  for (char c : text) {
    if (c == '\\' || c == '(' || c == ')' || c == ',') out << '\\';
    out << c;
  }
}

// Inputs compared by slot name, order-insensitively: hand-edited JSON may
// reorder the inputs map without changing meaning.
template <typename Render>
void appendNamedChildren(std::ostringstream& out,
                         const std::vector<std::string>& names,
                         const std::vector<Expression>& children,
                         Render&& render) {
  std::vector<std::size_t> order(children.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const std::string& na = a < names.size() ? names[a] : "";
    const std::string& nb = b < names.size() ? names[b] : "";
    if (na != nb) return na < nb;
    return a < b;
  });
  for (std::size_t i : order) {
    out << '(';
    appendEscaped(out, i < names.size() ? names[i] : "");
    out << '=';
    render(children[i]);
    out << ')';
  }
}

void writeExpression(std::ostringstream& out, const Expression& e) {
  out << 'e' << static_cast<int>(e.kind) << '(';
  appendEscaped(out, e.opcode);
  out << ',';
  switch (e.kind) {
    case ExpressionKind::NumberLiteral:
      out << e.number;
      break;
    case ExpressionKind::BoolLiteral:
      out << (e.boolValue ? 't' : 'f');
      break;
    case ExpressionKind::Comparison:
      out << static_cast<int>(e.comparison);
      break;
    case ExpressionKind::BoolOp:
      out << static_cast<int>(e.boolOp);
      break;
    case ExpressionKind::ParameterRef:
      out << static_cast<int>(e.parameterKind) << ',';
      appendEscaped(out, e.text);
      break;
    default:
      appendEscaped(out, e.text);
      break;
  }
  for (const auto& [name, field] : e.fields) {
    out << ",f(";
    appendEscaped(out, name);
    out << '=';
    appendEscaped(out, field.value);
    out << ')';
  }
  appendNamedChildren(out, e.operandNames, e.operands,
                      [&](const Expression& child) { writeExpression(out, child); });
  out << ')';
}

void writeStatement(std::ostringstream& out, const Statement& s);

void writeList(std::ostringstream& out, const StatementList& list) {
  out << '[';
  for (const Statement& s : list.statements) writeStatement(out, s);
  out << ']';
}

void writeStatement(std::ostringstream& out, const Statement& s) {
  out << 's' << static_cast<int>(s.kind) << '(';
  appendEscaped(out, s.opcode);
  if (s.kind == StatementKind::Stop) out << ',' << static_cast<int>(s.stopTarget);
  if (s.kind == StatementKind::CallProcedure) {
    out << ',';
    appendEscaped(out, s.proccode);
  }
  for (const auto& [name, field] : s.fields) {
    out << ",f(";
    appendEscaped(out, name);
    out << '=';
    appendEscaped(out, field.value);
    out << ')';
  }
  appendNamedChildren(out, s.inputNames, s.inputs,
                      [&](const Expression& child) { writeExpression(out, child); });
  for (const StatementList& sub : s.subStacks) writeList(out, sub);
  out << ')';
}

void writeShape(std::ostringstream& out, const Statement& s) {
  out << '#';
  appendEscaped(out, s.opcode);
  for (const StatementList& sub : s.subStacks) {
    out << '[';
    for (const Statement& child : sub.statements) writeShape(out, child);
    out << ']';
  }
}

}  // namespace

std::string normalizedForm(const Expression& e) {
  std::ostringstream out;
  writeExpression(out, e);
  return out.str();
}

std::string normalizedForm(const Statement& s) {
  std::ostringstream out;
  writeStatement(out, s);
  return out.str();
}

std::string normalizedForm(const StatementList& list) {
  std::ostringstream out;
  writeList(out, list);
  return out.str();
}

std::string normalizedForm(const Script& script) {
  std::ostringstream out;
  out << "script(ev" << static_cast<int>(script.event.kind) << ',';
  appendEscaped(out, script.event.key);
  out << ',';
  appendEscaped(out, script.event.name);
  out << ',';
  appendEscaped(out, script.event.attribute);
  out << ')';
  writeList(out, script.body);
  return out.str();
}

std::string shapeForm(const Statement& s) {
  std::ostringstream out;
  writeShape(out, s);
  return out.str();
}

}  // namespace sb3lint

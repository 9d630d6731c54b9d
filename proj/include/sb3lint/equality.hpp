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
//
// Structural tree equality: block ids and internal ids erased, literals
// and names retained. No algebraic normalization.

#ifndef SB3LINT_EQUALITY_HPP
#define SB3LINT_EQUALITY_HPP

#include <string>

#include "sb3lint/ast.hpp"

namespace sb3lint {

// Canonical text form with ids erased; equal strings == equal trees.
std::string normalizedForm(const Expression& e);
std::string normalizedForm(const Statement& s);
std::string normalizedForm(const StatementList& list);
std::string normalizedForm(const Script& script);  // includes the event

// Shape-only form: opcodes and nesting retained, literals, names and
// fields masked. Two statements with equal shapeForm are rename-equivalent
// (type 2 clones).
std::string shapeForm(const Statement& s);

inline bool structurallyEqual(const Expression& a, const Expression& b) {
  return normalizedForm(a) == normalizedForm(b);
}
inline bool structurallyEqual(const Statement& a, const Statement& b) {
  return normalizedForm(a) == normalizedForm(b);
}
inline bool structurallyEqual(const StatementList& a, const StatementList& b) {
  return normalizedForm(a) == normalizedForm(b);
}
inline bool structurallyEqual(const Script& a, const Script& b) {
  return normalizedForm(a) == normalizedForm(b);
}

}  // namespace sb3lint

#endif  // SB3LINT_EQUALITY_HPP

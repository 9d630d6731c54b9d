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

#ifndef SB3LINT_SRC_FINDERS_CATALOG_HPP
#define SB3LINT_SRC_FINDERS_CATALOG_HPP

#include <memory>
#include <vector>

#include "sb3lint/finders.hpp"

namespace sb3lint::catalog {

std::vector<std::unique_ptr<Finder>> syntaxFinders();
std::vector<std::unique_ptr<Finder>> scratchBugFinders();
std::vector<std::unique_ptr<Finder>> generalBugFinders();
std::vector<std::unique_ptr<Finder>> smellFinders();
std::unique_ptr<Finder> clonedCodeFinder();

}  // namespace sb3lint::catalog

#endif  // SB3LINT_SRC_FINDERS_CATALOG_HPP

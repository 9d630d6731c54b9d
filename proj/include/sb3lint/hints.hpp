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
// Localized hint texts. Bundles are plain key=value resources; English is
// authoritative and every other locale falls back to it key by key.

#ifndef SB3LINT_HINTS_HPP
#define SB3LINT_HINTS_HPP

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "sb3lint/issue.hpp"

namespace sb3lint {

class HintCatalog {
 public:
  // The compiled-in catalog (en + de).
  static const HintCatalog& builtin();

  // Parses `key=value` lines; '#' starts a comment, blanks are skipped.
  void addBundle(const std::string& locale, std::string_view text);

  bool hasKey(const std::string& locale, const std::string& key) const;
  std::vector<std::string> locales() const;

  // Resolves {param} placeholders from the issue's hint parameters.
  // Unknown locales fall back to English; a key missing from English is a
  // tool defect and throws MissingHintKey.
  std::string render(const Issue& issue, const std::string& locale) const;

  // Startup self-check: every registered finder id has English text.
  void verifyCoverage() const;

 private:
  std::map<std::string, std::map<std::string, std::string>> bundles_;
};

namespace hints {
const char* englishBundle();
const char* germanBundle();
}  // namespace hints

}  // namespace sb3lint

#endif  // SB3LINT_HINTS_HPP

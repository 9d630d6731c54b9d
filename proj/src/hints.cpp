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

#include "sb3lint/hints.hpp"

#include "sb3lint/errors.hpp"
#include "sb3lint/finders.hpp"

namespace sb3lint {

const HintCatalog& HintCatalog::builtin() {
  static const HintCatalog catalog = [] {
    HintCatalog c;
    c.addBundle("en", hints::englishBundle());
    c.addBundle("de", hints::germanBundle());
    return c;
  }();
  return catalog;
}

void HintCatalog::addBundle(const std::string& locale, std::string_view text) {
  auto& bundle = bundles_[locale];
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    if (line.empty() || line[0] == '#') continue;
    std::size_t eq = line.find('=');
    if (eq == std::string_view::npos) continue;
    bundle[std::string(line.substr(0, eq))] = std::string(line.substr(eq + 1));
    if (end == text.size()) break;
  }
}

bool HintCatalog::hasKey(const std::string& locale, const std::string& key) const {
  auto it = bundles_.find(locale);
  return it != bundles_.end() && it->second.count(key) > 0;
}

std::vector<std::string> HintCatalog::locales() const {
  std::vector<std::string> out;
  for (const auto& [locale, bundle] : bundles_) out.push_back(locale);
  return out;
}

std::string HintCatalog::render(const Issue& issue, const std::string& locale) const {
  const std::string* text = nullptr;
  auto it = bundles_.find(locale);
  if (it != bundles_.end()) {
    auto key = it->second.find(issue.hintKey);
    if (key != it->second.end()) text = &key->second;
  }
  if (text == nullptr) {
    auto en = bundles_.find("en");
    if (en != bundles_.end()) {
      auto key = en->second.find(issue.hintKey);
      if (key != en->second.end()) text = &key->second;
    }
  }
  if (text == nullptr)
    throw MissingHintKey("no English hint text for key " + issue.hintKey);

  std::string out;
  out.reserve(text->size());
  for (std::size_t i = 0; i < text->size(); ++i) {
    char c = (*text)[i];
    if (c != '{') {
      out += c;
      continue;
    }
    std::size_t close = text->find('}', i);
    if (close == std::string::npos) {
      out += c;
      continue;
    }
    std::string name = text->substr(i + 1, close - i - 1);
    auto param = issue.hintParams.find(name);
    out += param != issue.hintParams.end() ? param->second : "{" + name + "}";
    i = close;
  }
  return out;
}

void HintCatalog::verifyCoverage() const {
  for (const Finder* finder : finderRegistry()) {
    if (!hasKey("en", std::string(finder->id())))
      throw MissingHintKey("finder without English hint text: " +
                           std::string(finder->id()));
  }
}

}  // namespace sb3lint

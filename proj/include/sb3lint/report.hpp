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
// Report emission: console lines, CSV data files, the JSON report, and
// annotated project exports. All writers are deterministic: identical
// inputs produce byte-identical output.

#ifndef SB3LINT_REPORT_HPP
#define SB3LINT_REPORT_HPP

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "sb3lint/ast.hpp"
#include "sb3lint/hints.hpp"
#include "sb3lint/issue.hpp"
#include "sb3lint/metrics.hpp"

namespace sb3lint {

// One line per issue: [SEVERITY] finder @ actor/block: hint
std::string console_line(const Issue& issue, const HintCatalog& catalog,
                         const std::string& locale);

struct ProjectRow {
  std::string projectRef;
  MetricsRecord metrics;
  std::map<std::string, std::int64_t> issueCounts;  // finder id -> total
};

// Check-mode CSV: project, metric columns, one column per registered
// finder id in registry order.
std::string write_csv(const std::vector<ProjectRow>& rows);

// Stats-mode CSV: project plus metric columns only.
std::string write_stats_csv(
    const std::vector<std::pair<std::string, MetricsRecord>>& rows);

// The JSON report document for one project.
std::string write_json_report(const Program& program,
                              const std::vector<Issue>& issues,
                              const MetricsRecord& metrics,
                              const std::string& locale,
                              const HintCatalog& catalog = HintCatalog::builtin());

// Batch form: an array of per-project report documents.
struct ReportEntry {
  const Program* program;
  std::vector<Issue> issues;
  MetricsRecord metrics;
};
std::string write_json_reports(const std::vector<ReportEntry>& entries,
                               const std::string& locale,
                               const HintCatalog& catalog = HintCatalog::builtin());

// Adds one comment per issue to the owning target of the raw project.json;
// everything else is preserved. Throws BlockNotFound when an issue points
// at a block that is not in the document.
std::string annotate_project(std::string_view rawProjectJson,
                             const std::vector<Issue>& issues,
                             const std::string& locale,
                             const HintCatalog& catalog = HintCatalog::builtin());

// Same for a .sb3 archive; assets are copied over unchanged.
std::vector<std::uint8_t> annotate_sb3(const std::vector<std::uint8_t>& archiveBytes,
                                       const std::vector<Issue>& issues,
                                       const std::string& locale,
                                       const HintCatalog& catalog = HintCatalog::builtin());

}  // namespace sb3lint

#endif  // SB3LINT_REPORT_HPP

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

#include "sb3lint/report.hpp"

#include <json.hpp>

#include <set>
#include <sstream>

#include "sb3lint/finders.hpp"
#include "sb3lint/scratchblocks.hpp"

namespace sb3lint {

namespace {

using ojson = nlohmann::ordered_json;

// RFC 4180: quote fields containing comma, quote or newline.
std::string csvField(const std::string& value) {
  bool needsQuotes = value.find_first_of(",\"\r\n") != std::string::npos;
  if (!needsQuotes) return value;
  std::string out = "\"";
  for (char c : value) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string csvRow(const std::vector<std::string>& fields) {
  std::string out;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i > 0) out += ',';
    out += csvField(fields[i]);
  }
  out += "\r\n";
  return out;
}

// Scratchblocks rendering of the script or procedure that owns the issue,
// with the issue's blocks marked.
std::string issueScratchblocks(const Program& program, const Issue& issue) {
  if (issue.scriptTopBlockId.empty()) return "";
  const ActorDefinition* actor = program.actorByName(issue.actorName);
  if (actor == nullptr) return "";
  std::set<std::string> highlight(issue.blockIds.begin(), issue.blockIds.end());
  for (const Script& script : actor->scripts)
    if (script.topBlockId == issue.scriptTopBlockId)
      return render_scratchblocks(script, highlight);
  for (const ProcedureDefinition& proc : actor->procedures)
    if (proc.definitionBlockId == issue.scriptTopBlockId)
      return render_scratchblocks(proc, highlight);
  return "";
}

ojson metricsJson(const MetricsRecord& metrics) {
  ojson out;
  out["blockCount"] = metrics.blockCount;
  out["scriptCount"] = metrics.scriptCount;
  out["spriteCount"] = metrics.spriteCount;
  out["procedureCount"] = metrics.procedureCount;
  out["looseScriptCount"] = metrics.looseScriptCount;
  out["weightedMeanComplexity"] = metrics.weightedMeanComplexity;
  return out;
}

ojson reportJson(const Program& program, const std::vector<Issue>& issues,
                 const MetricsRecord& metrics, const std::string& locale,
                 const HintCatalog& catalog) {
  ojson doc;
  doc["project"] = ojson::object();
  doc["project"]["name"] = program.name;
  if (program.projectId) doc["project"]["id"] = *program.projectId;
  doc["metrics"] = metricsJson(metrics);
  doc["issues"] = ojson::array();
  for (const Issue& issue : issues) {
    ojson entry;
    entry["finderId"] = issue.finderId;
    entry["category"] = categoryName(issue.category);
    entry["severity"] = severityName(issue.severity);
    entry["actor"] = issue.actorName;
    if (issue.scriptTopBlockId.empty())
      entry["scriptTopBlockId"] = nullptr;
    else
      entry["scriptTopBlockId"] = issue.scriptTopBlockId;
    entry["blockIds"] = issue.blockIds;
    entry["hint"] = catalog.render(issue, locale);
    entry["scratchblocks"] = issueScratchblocks(program, issue);
    doc["issues"].push_back(std::move(entry));
  }
  return doc;
}

}  // namespace

std::string console_line(const Issue& issue, const HintCatalog& catalog,
                         const std::string& locale) {
  std::ostringstream out;
  out << '[' << severityName(issue.severity) << "] " << issue.finderId << " @ "
      << issue.actorName << '/'
      << (issue.blockIds.empty() ? "-" : issue.blockIds.front()) << ": "
      << catalog.render(issue, locale);
  return out.str();
}

std::string write_csv(const std::vector<ProjectRow>& rows) {
  std::vector<std::string> header = {"project"};
  for (const std::string& column : metricsColumns()) header.push_back(column);
  for (const Finder* finder : finderRegistry())
    header.push_back(std::string(finder->id()));

  std::string out = csvRow(header);
  for (const ProjectRow& row : rows) {
    std::vector<std::string> fields = {row.projectRef};
    for (const std::string& value : metricsValues(row.metrics))
      fields.push_back(value);
    for (const Finder* finder : finderRegistry()) {
      auto it = row.issueCounts.find(std::string(finder->id()));
      fields.push_back(std::to_string(it == row.issueCounts.end() ? 0 : it->second));
    }
    out += csvRow(fields);
  }
  return out;
}

std::string write_stats_csv(
    const std::vector<std::pair<std::string, MetricsRecord>>& rows) {
  std::vector<std::string> header = {"project"};
  for (const std::string& column : metricsColumns()) header.push_back(column);
  std::string out = csvRow(header);
  for (const auto& [projectRef, metrics] : rows) {
    std::vector<std::string> fields = {projectRef};
    for (const std::string& value : metricsValues(metrics)) fields.push_back(value);
    out += csvRow(fields);
  }
  return out;
}

std::string write_json_report(const Program& program,
                              const std::vector<Issue>& issues,
                              const MetricsRecord& metrics,
                              const std::string& locale,
                              const HintCatalog& catalog) {
  return reportJson(program, issues, metrics, locale, catalog).dump(2) + "\n";
}

std::string write_json_reports(const std::vector<ReportEntry>& entries,
                               const std::string& locale,
                               const HintCatalog& catalog) {
  ojson doc = ojson::array();
  for (const ReportEntry& entry : entries)
    doc.push_back(reportJson(*entry.program, entry.issues, entry.metrics, locale,
                             catalog));
  return doc.dump(2) + "\n";
}

}  // namespace sb3lint

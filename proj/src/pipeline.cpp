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

#include "sb3lint/pipeline.hpp"

#include <atomic>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>

#include "sb3lint/cfg.hpp"
#include "sb3lint/errors.hpp"
#include "sb3lint/finders.hpp"
#include "sb3lint/metrics.hpp"
#include "sb3lint/parser.hpp"
#include "sb3lint/report.hpp"

namespace sb3lint {

namespace {

struct Outcome {
  ProjectSource source;
  bool ok = false;
  std::string error;
  Program program;
  AssetInventory assets;
  MetricsRecord metrics;
  std::vector<Issue> issues;
  std::vector<std::string> diagnostics;
  bool isArchive = false;
  std::vector<std::uint8_t> rawArchive;  // LOCAL_SB3 only, for annotation
  std::string rawJson;                   // other kinds
};

std::vector<std::uint8_t> readBinary(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ToolError("cannot open " + path.string());
  return std::vector<std::uint8_t>(std::istreambuf_iterator<char>(in),
                                   std::istreambuf_iterator<char>());
}

void analyzeOne(const PipelineOptions& options, Outcome& outcome) {
  const ProjectSource& source = outcome.source;
  std::string name = source.resolvedName;

  if (source.kind == ProjectSource::Kind::LOCAL_SB3) {
    outcome.isArchive = true;
    outcome.rawArchive = readBinary(source.path);
    auto [program, assets] = load_sb3(outcome.rawArchive, name);
    outcome.program = std::move(program);
    outcome.assets = std::move(assets);
  } else {
    std::filesystem::path jsonPath = source.path;
    if (source.kind == ProjectSource::Kind::REMOTE_ID)
      jsonPath = fetch_project(source.id, options.cacheDir, options.fetch);
    std::vector<std::uint8_t> bytes = readBinary(jsonPath);
    outcome.rawJson.assign(bytes.begin(), bytes.end());
    auto [program, assets] = parse_project_with_assets(outcome.rawJson, name);
    outcome.program = std::move(program);
    outcome.assets = std::move(assets);
    if (source.kind == ProjectSource::Kind::REMOTE_ID)
      outcome.program.projectId = source.id;
  }
  if (source.kind != ProjectSource::Kind::REMOTE_ID)
    outcome.program.sourcePath = source.path.string();

  outcome.metrics = compute_metrics(outcome.program);
  if (options.mode == RunMode::CHECK) {
    RunResult result = run_all(outcome.program, outcome.assets, options.finders);
    outcome.issues = std::move(result.issues);
    outcome.diagnostics = std::move(result.diagnostics);
  }
  outcome.ok = true;
}

std::string outputKind(const std::filesystem::path& output) {
  std::string ext = output.extension().string();
  if (ext == ".csv" || ext == ".json") return ext;
  throw UsageError("cannot deduce report format from output file name '" +
                   output.string() + "' (expected .csv or .json)");
}

void writeFile(const std::filesystem::path& path, std::string_view data) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ToolError("cannot write " + path.string());
  out.write(data.data(), static_cast<std::streamsize>(data.size()));
}

void writeFile(const std::filesystem::path& path,
               const std::vector<std::uint8_t>& data) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ToolError("cannot write " + path.string());
  out.write(reinterpret_cast<const char*>(data.data()),
            static_cast<std::streamsize>(data.size()));
}

void writeAnnotated(const PipelineOptions& options, const Outcome& outcome) {
  std::filesystem::path dir = options.output
                                  ? options.output->parent_path()
                                  : std::filesystem::current_path();
  if (dir.empty()) dir = std::filesystem::current_path();
  if (outcome.isArchive) {
    writeFile(dir / (outcome.source.resolvedName + ".annotated.sb3"),
              annotate_sb3(outcome.rawArchive, outcome.issues, options.locale));
  } else {
    writeFile(dir / (outcome.source.resolvedName + ".annotated.json"),
              annotate_project(outcome.rawJson, outcome.issues, options.locale));
  }
}

}  // namespace

int run_pipeline(const std::vector<ProjectSource>& sources,
                 const PipelineOptions& options, std::ostream& console,
                 std::ostream& errors) {
  HintCatalog::builtin().verifyCoverage();
  validateConfig(options.finders);
  if (options.output) outputKind(*options.output);  // fail before any work
  if (options.dotPath && sources.size() != 1)
    throw UsageError("--dot needs exactly one input project");

  std::vector<Outcome> outcomes(sources.size());
  for (std::size_t i = 0; i < sources.size(); ++i)
    outcomes[i].source = sources[i];

  const int jobs = std::max(1, options.jobs);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= outcomes.size()) return;
      try {
        analyzeOne(options, outcomes[i]);
      } catch (const std::exception& e) {
        outcomes[i].ok = false;
        outcomes[i].error = e.what();
      }
    }
  };
  if (jobs == 1 || outcomes.size() <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }

  const HintCatalog& hints = HintCatalog::builtin();
  bool anyFailed = false;
  std::int64_t totalIssues = 0;
  for (const Outcome& outcome : outcomes) {
    if (!outcome.ok) {
      anyFailed = true;
      errors << "error: " << outcome.source.resolvedName << ": " << outcome.error
             << "\n";
      continue;
    }
    if (options.mode == RunMode::CHECK) {
      console << "== " << outcome.source.resolvedName << ": "
              << outcome.issues.size() << " issue(s)\n";
      for (const Issue& issue : outcome.issues)
        console << console_line(issue, hints, options.locale) << "\n";
      for (const std::string& diagnostic : outcome.diagnostics)
        errors << "warning: " << outcome.source.resolvedName << ": " << diagnostic
               << "\n";
      totalIssues += static_cast<std::int64_t>(outcome.issues.size());
    } else {
      console << "== " << outcome.source.resolvedName << "\n";
      const MetricsRecord& m = outcome.metrics;
      console << "blocks=" << m.blockCount << " scripts=" << m.scriptCount
              << " sprites=" << m.spriteCount << " procedures=" << m.procedureCount
              << " loose=" << m.looseScriptCount
              << " weightedMeanComplexity=" << m.weightedMeanComplexity << "\n";
    }
  }

  if (options.output) {
    std::string kind = outputKind(*options.output);
    if (kind == ".csv") {
      if (options.mode == RunMode::CHECK) {
        std::vector<ProjectRow> rows;
        for (const Outcome& outcome : outcomes) {
          if (!outcome.ok) continue;
          ProjectRow row;
          row.projectRef = outcome.source.resolvedName;
          row.metrics = outcome.metrics;
          for (const Issue& issue : outcome.issues) row.issueCounts[issue.finderId]++;
          rows.push_back(std::move(row));
        }
        writeFile(*options.output, write_csv(rows));
      } else {
        std::vector<std::pair<std::string, MetricsRecord>> rows;
        for (const Outcome& outcome : outcomes)
          if (outcome.ok) rows.emplace_back(outcome.source.resolvedName, outcome.metrics);
        writeFile(*options.output, write_stats_csv(rows));
      }
    } else {
      std::vector<const Outcome*> good;
      for (const Outcome& outcome : outcomes)
        if (outcome.ok) good.push_back(&outcome);
      if (good.size() == 1) {
        writeFile(*options.output,
                  write_json_report(good[0]->program, good[0]->issues,
                                    good[0]->metrics, options.locale));
      } else {
        std::vector<ReportEntry> entries;
        for (const Outcome* outcome : good)
          entries.push_back({&outcome->program, outcome->issues, outcome->metrics});
        writeFile(*options.output, write_json_reports(entries, options.locale));
      }
    }
  }

  if (options.annotate && options.mode == RunMode::CHECK) {
    for (const Outcome& outcome : outcomes)
      if (outcome.ok) writeAnnotated(options, outcome);
  }

  if (options.dotPath) {
    for (const Outcome& outcome : outcomes) {
      if (!outcome.ok) continue;
      ControlFlowGraph cfg = build_cfg(outcome.program);
      writeFile(*options.dotPath, cfg.toDot());
    }
  }

  if (anyFailed) return 1;
  if (options.failOnIssue && totalIssues > 0) return 1;
  return 0;
}

}  // namespace sb3lint

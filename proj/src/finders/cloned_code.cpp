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
// Code clone detection over normalized token sequences. Statement stacks
// flatten to tokens (substack structure kept as brackets); a pairwise
// suffix-comparison sweep finds common runs of at least six statements.
//   type 1: token-for-token identical including literals and names
//   type 2: identical opcode shape, literals/names renamed
//   type 3: type 2 with at most two substituted statements inside the run

#include <map>
#include <vector>

#include "finders/catalog.hpp"
#include "finders/finder_util.hpp"
#include "sb3lint/equality.hpp"

namespace sb3lint::catalog {

namespace {

using namespace finderutil;

constexpr std::size_t kMinCloneStatements = 6;
constexpr int kMaxGaps = 2;

struct Token {
  bool bracket = false;
  char bracketChar = 0;
  std::string exact;  // normalized incl. literals (type 1 identity)
  std::string shape;  // opcode only (type 2 identity)
  std::string blockId;
};

std::string flatExactForm(const Statement& s) {
  Statement copy = s;
  for (StatementList& sub : copy.subStacks) sub.statements.clear();
  return normalizedForm(copy);
}

void tokenize(const StatementList& list, std::vector<Token>& out) {
  for (const Statement& s : list.statements) {
    Token t;
    t.exact = flatExactForm(s);
    t.shape = s.opcode;
    t.blockId = s.blockId;
    out.push_back(std::move(t));
    for (const StatementList& sub : s.subStacks) {
      Token open;
      open.bracket = true;
      open.bracketChar = '[';
      out.push_back(open);
      tokenize(sub, out);
      Token close;
      close.bracket = true;
      close.bracketChar = ']';
      out.push_back(close);
    }
  }
}

bool shapeEqual(const Token& a, const Token& b) {
  if (a.bracket != b.bracket) return false;
  if (a.bracket) return a.bracketChar == b.bracketChar;
  return a.shape == b.shape;
}

bool exactEqual(const Token& a, const Token& b) {
  if (a.bracket != b.bracket) return false;
  if (a.bracket) return a.bracketChar == b.bracketChar;
  return a.exact == b.exact;
}

struct Match {
  std::size_t beginA = 0, beginB = 0;
  std::size_t length = 0;     // tokens
  std::size_t statements = 0; // non-bracket tokens
  int gaps = 0;
  bool exact = true;
};

// Extends a match from (i, j), allowing up to kMaxGaps substituted
// statements; the run must start and end on a shape match.
Match extend(const std::vector<Token>& a, const std::vector<Token>& b,
             std::size_t i, std::size_t j) {
  Match m;
  m.beginA = i;
  m.beginB = j;
  std::size_t len = 0, lastGoodLen = 0, statements = 0, lastGoodStatements = 0;
  int gaps = 0, lastGoodGaps = 0;
  bool exact = true, lastGoodExact = true;
  while (i + len < a.size() && j + len < b.size()) {
    const Token& ta = a[i + len];
    const Token& tb = b[j + len];
    if (shapeEqual(ta, tb)) {
      if (!ta.bracket) {
        ++statements;
        if (!exactEqual(ta, tb)) exact = false;
      }
      ++len;
      lastGoodLen = len;
      lastGoodStatements = statements;
      lastGoodGaps = gaps;
      lastGoodExact = exact;
    } else if (!ta.bracket && !tb.bracket && gaps < kMaxGaps && len > 0) {
      ++gaps;
      ++statements;
      exact = false;
      ++len;  // substitution gap; must be followed by a match to count
    } else {
      break;
    }
  }
  m.length = lastGoodLen;
  m.statements = lastGoodStatements;
  m.gaps = lastGoodGaps;
  m.exact = lastGoodExact;
  return m;
}

class ClonedCode final : public Finder {
 public:
  std::string_view id() const override { return "cloned_code"; }
  IssueCategory category() const override { return IssueCategory::CODE_SMELL; }

  void check(const AnalysisContext& ctx, std::vector<Issue>& out) const override {
    std::vector<Unit> all = units(ctx);
    std::vector<std::vector<Token>> sequences(all.size());
    for (std::size_t u = 0; u < all.size(); ++u)
      tokenize(all[u].body(), sequences[u]);

    for (std::size_t ua = 0; ua < all.size(); ++ua) {
      for (std::size_t ub = ua + 1; ub < all.size(); ++ub) {
        const auto& a = sequences[ua];
        const auto& b = sequences[ub];
        if (a.size() < kMinCloneStatements || b.size() < kMinCloneStatements)
          continue;

        // Diagonal -> end of the last candidate, to skip contained restarts.
        std::map<std::ptrdiff_t, std::size_t> coveredUntil;
        std::vector<Match> candidates;
        for (std::size_t i = 0; i < a.size(); ++i) {
          if (a[i].bracket) continue;
          for (std::size_t j = 0; j < b.size(); ++j) {
            if (!shapeEqual(a[i], b[j])) continue;
            std::ptrdiff_t diagonal =
                static_cast<std::ptrdiff_t>(i) - static_cast<std::ptrdiff_t>(j);
            auto covered = coveredUntil.find(diagonal);
            if (covered != coveredUntil.end() && i < covered->second) continue;

            Match m = extend(a, b, i, j);
            if (m.statements < kMinCloneStatements) continue;
            coveredUntil[diagonal] = i + m.length;
            candidates.push_back(m);
          }
        }

        // Longest first; drop candidates whose ranges on both sides overlap
        // an accepted clone (diagonal-shifted echoes of the same region).
        std::sort(candidates.begin(), candidates.end(),
                  [](const Match& x, const Match& y) {
                    if (x.statements != y.statements)
                      return x.statements > y.statements;
                    if (x.gaps != y.gaps) return x.gaps < y.gaps;
                    if (x.beginA != y.beginA) return x.beginA < y.beginA;
                    return x.beginB < y.beginB;
                  });
        std::vector<Match> accepted;
        for (const Match& m : candidates) {
          bool echoed = false;
          for (const Match& kept : accepted) {
            bool overlapA = m.beginA < kept.beginA + kept.length &&
                            kept.beginA < m.beginA + m.length;
            bool overlapB = m.beginB < kept.beginB + kept.length &&
                            kept.beginB < m.beginB + m.length;
            if (overlapA && overlapB) echoed = true;
          }
          if (!echoed) accepted.push_back(m);
        }
        for (const Match& m : accepted) report(ctx, out, all[ua], all[ub], a, b, m);
      }
    }
  }

 private:
  void report(const AnalysisContext&, std::vector<Issue>& out, const Unit& unitA,
              const Unit& unitB, const std::vector<Token>& a,
              const std::vector<Token>& b, const Match& m) const {
    int type = m.gaps > 0 ? 3 : (m.exact ? 1 : 2);
    std::vector<std::string> blockIds = {a[m.beginA].blockId};
    std::map<std::string, std::string> params = {
        {"length", std::to_string(m.statements)},
        {"type", std::to_string(type)}};
    if (unitA.actor == unitB.actor) {
      blockIds.push_back(b[m.beginB].blockId);
    } else {
      params["otherSprite"] = unitB.actor->name;
      params["otherBlock"] = b[m.beginB].blockId;
    }
    Issue issue = finderutil::makeIssue(*this, unitA, blockIds, params);
    out.push_back(std::move(issue));
  }
};

}  // namespace

std::unique_ptr<Finder> clonedCodeFinder() { return std::make_unique<ClonedCode>(); }

}  // namespace sb3lint::catalog

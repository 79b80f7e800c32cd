// Copyright 2026 The sumqg Authors.
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

#include "sumqg/stats_lint.h"

#include <cctype>
#include <unordered_set>

#include "sumqg/parallel_map.h"
#include "sumqg/text.h"
#include "sumqg/verb_morph.h"
#include "sumqg/wh_lexicon.h"

namespace sumqg {

namespace {

// Lowercase token with surrounding punctuation removed ("who?" -> "who").
std::string Bare(std::string_view token) {
  size_t b = 0;
  size_t e = token.size();
  auto alnum = [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) ||
           (static_cast<unsigned char>(c) & 0x80);
  };
  while (b < e && !alnum(token[b])) ++b;
  while (e > b && !alnum(token[e - 1])) --e;
  std::string out = ToLower(token.substr(b, e - b));
  auto apostrophe = out.find('\'');
  if (apostrophe != std::string::npos) out.resize(apostrophe);
  return out;
}

std::vector<std::string> BareTokens(std::string_view text) {
  std::vector<std::string> out;
  for (const auto& tok : SplitWhitespace(text)) {
    std::string bare = Bare(tok);
    if (!bare.empty()) out.push_back(std::move(bare));
  }
  return out;
}

}  // namespace

std::string_view QuestionTypeName(QuestionType type) {
  switch (type) {
    case QuestionType::kWhat:
      return "What";
    case QuestionType::kWhen:
      return "When";
    case QuestionType::kWhere:
      return "Where";
    case QuestionType::kWho:
      return "Who";
    case QuestionType::kWhy:
      return "Why";
    case QuestionType::kHow:
      return "How";
    case QuestionType::kOther:
      return "Other";
  }
  return "Other";
}

QuestionType ClassifyQuestion(std::string_view question) {
  for (const auto& w : BareTokens(question)) {
    if (w == "who" || w == "whom" || w == "whose") return QuestionType::kWho;
    if (w == "when") return QuestionType::kWhen;
    if (w == "where") return QuestionType::kWhere;
    if (w == "why") return QuestionType::kWhy;
    if (w == "how") return QuestionType::kHow;
    if (w == "what" || w == "which") return QuestionType::kWhat;
  }
  return QuestionType::kOther;
}

void TypeDistribution::Merge(const TypeDistribution& other) {
  for (size_t i = 0; i < counts.size(); ++i) counts[i] += other.counts[i];
  total += other.total;
}

nlohmann::ordered_json TypeDistribution::ToJson() const {
  nlohmann::ordered_json out;
  for (QuestionType t : kQuestionTypes) out[std::string(QuestionTypeName(t))] = count(t);
  return out;
}

TypeDistribution QuestionTypeDistribution(std::span<const std::string> questions) {
  TypeDistribution dist;
  for (const auto& q : questions) dist.Add(ClassifyQuestion(q));
  return dist;
}

double LexicalOverlap(std::string_view question, std::string_view passage) {
  std::unordered_set<std::string> content;
  for (const auto& tok : SplitWhitespace(question)) {
    std::string w = ToLower(tok);
    if (w == "?" || IsWhWord(w) || w == "do" || w == "does" || w == "did") continue;
    content.insert(BaseForm(w));
  }
  if (content.empty()) return 0.0;
  std::unordered_set<std::string> passage_set;
  for (const auto& tok : SplitWhitespace(passage)) {
    passage_set.insert(BaseForm(ToLower(tok)));
  }
  size_t shared = 0;
  for (const auto& w : content) shared += passage_set.contains(w);
  return static_cast<double>(shared) / content.size();
}

std::string_view LintCodeName(LintCode code) {
  switch (code) {
    case LintCode::kNoWhWord:
      return "NO_WH_WORD";
    case LintCode::kMissingAux:
      return "MISSING_AUX";
    case LintCode::kAnswerEchoed:
      return "ANSWER_ECHOED";
    case LintCode::kSepInText:
      return "SEP_IN_TEXT";
    case LintCode::kMismatchWhNer:
      return "MISMATCH_WH_NER";
  }
  return "UNKNOWN";
}

LintInput LintInputFromTriple(const QgTriple& t, const std::string& id) {
  return {id, t.question_text, t.answer_text, t.passage_text, t.answer_entities};
}

LintInput LintInputFromPair(const QaPair& p) {
  return {p.pair_id, p.question_text, p.answer_text, p.paragraph_text,
          p.answer_entities};
}

std::vector<LintIssue> LintQuestion(const LintInput& in) {
  std::vector<LintIssue> issues;
  const auto tokens = SplitWhitespace(ToLower(in.question));

  std::optional<std::string> first_wh;
  for (const auto& tok : tokens) {
    if (IsWhWord(tok)) {
      first_wh = tok;
      break;
    }
  }
  if (!first_wh) issues.push_back({LintCode::kNoWhWord, in.id});

  // Fronted single-word wh-phrase: the next token must be an auxiliary, or a
  // finite verb for subject questions.
  if (tokens.size() > 2 && IsWhWord(tokens[0]) && tokens[0] != "which" &&
      tokens[0] != "how" && tokens[0] != "whose") {
    const std::string& second = tokens[1];
    if (!IsAuxiliaryWord(second) && !LooksInflected(second)) {
      issues.push_back({LintCode::kMissingAux, in.id});
    }
  }

  const auto answer_tokens = SplitWhitespace(ToLower(in.answer));
  if (ContainsRun(tokens, answer_tokens)) {
    issues.push_back({LintCode::kAnswerEchoed, in.id});
  }

  if (first_wh && (*first_wh == "who" || *first_wh == "whom") &&
      in.answer_entities) {
    bool person = false;
    for (const auto& label : *in.answer_entities) {
      std::string l = ToLower(label);
      person |= l == "person" || l == "per";
    }
    if (!person) issues.push_back({LintCode::kMismatchWhNer, in.id});
  }

  if (in.passage.find("<SEP>") != std::string::npos ||
      in.answer.find("<SEP>") != std::string::npos) {
    issues.push_back({LintCode::kSepInText, in.id});
  }
  return issues;
}

nlohmann::ordered_json StatsReport::ToJson() const {
  nlohmann::ordered_json out;
  out["distribution"] = distribution.ToJson();
  out["total"] = distribution.total;
  out["mean_overlap"] = mean_overlap;
  auto issues = nlohmann::ordered_json::array();
  for (const auto& issue : lint) {
    issues.push_back({{"id", issue.ref}, {"code", LintCodeName(issue.code)}});
  }
  out["lint"] = std::move(issues);
  return out;
}

StatsReport ComputeStats(std::span<const LintInput> inputs, int workers) {
  struct PerQuestion {
    QuestionType type = QuestionType::kOther;
    double overlap = 0.0;
    std::vector<LintIssue> issues;
  };
  auto rows = OrderedMap(
      inputs,
      [](const LintInput& in) {
        return PerQuestion{ClassifyQuestion(in.question),
                           LexicalOverlap(in.question, in.passage),
                           LintQuestion(in)};
      },
      workers);
  StatsReport report;
  double sum = 0.0;
  for (auto& row : rows) {
    report.distribution.Add(row.type);
    sum += row.overlap;
    for (auto& issue : row.issues) report.lint.push_back(std::move(issue));
  }
  report.mean_overlap = rows.empty() ? 0.0 : sum / rows.size();
  return report;
}

}  // namespace sumqg

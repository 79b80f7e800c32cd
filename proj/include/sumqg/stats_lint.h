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

#ifndef SUMQG_STATS_LINT_H_
#define SUMQG_STATS_LINT_H_

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "sumqg/dataset_pipeline.h"

namespace sumqg {

enum class QuestionType { kWhat, kWhen, kWhere, kWho, kWhy, kHow, kOther };

inline constexpr std::array<QuestionType, 7> kQuestionTypes = {
    QuestionType::kWhat, QuestionType::kWhen, QuestionType::kWhere,
    QuestionType::kWho,  QuestionType::kWhy,  QuestionType::kHow,
    QuestionType::kOther,
};

std::string_view QuestionTypeName(QuestionType type);

// Classified by the first wh-token; "which" counts as What.
QuestionType ClassifyQuestion(std::string_view question);

struct TypeDistribution {
  std::array<size_t, 7> counts{};
  size_t total = 0;

  size_t count(QuestionType type) const {
    return counts[static_cast<size_t>(type)];
  }
  void Add(QuestionType type) {
    ++counts[static_cast<size_t>(type)];
    ++total;
  }
  void Merge(const TypeDistribution& other);
  nlohmann::ordered_json ToJson() const;
};

TypeDistribution QuestionTypeDistribution(std::span<const std::string> questions);

// Fraction of the question's content tokens (wh-words, do/does/did and "?"
// excluded) found in the passage. Tokens are compared lowercase in base form.
double LexicalOverlap(std::string_view question, std::string_view passage);

enum class LintCode {
  kNoWhWord,
  kMissingAux,
  kAnswerEchoed,
  kSepInText,
  kMismatchWhNer,
};

std::string_view LintCodeName(LintCode code);

struct LintIssue {
  LintCode code;
  std::string ref;  // triple or pair id

  bool operator==(const LintIssue&) const = default;
};

struct LintInput {
  std::string id;
  std::string question;
  std::string answer;
  std::string passage;
  // Entity labels over the answer, when NER is available.
  std::optional<std::vector<std::string>> answer_entities;
};

LintInput LintInputFromTriple(const QgTriple& triple, const std::string& id);
LintInput LintInputFromPair(const QaPair& pair);

std::vector<LintIssue> LintQuestion(const LintInput& input);

struct StatsReport {
  TypeDistribution distribution;
  double mean_overlap = 0.0;
  std::vector<LintIssue> lint;

  nlohmann::ordered_json ToJson() const;
};

StatsReport ComputeStats(std::span<const LintInput> inputs, int workers = 1);

}  // namespace sumqg

#endif  // SUMQG_STATS_LINT_H_

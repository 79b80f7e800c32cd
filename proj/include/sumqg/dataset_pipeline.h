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

#ifndef SUMQG_DATASET_PIPELINE_H_
#define SUMQG_DATASET_PIPELINE_H_

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <variant>
#include <vector>

#include "json.hpp"
#include "sumqg/annotation.h"
#include "sumqg/config.h"

namespace sumqg {

struct DocumentPair {
  std::string doc_id;
  std::vector<std::string> passage_tokens;  // the article
  AnnotatedSentence summary;
};

struct QgTriple {
  std::string passage_text;
  std::string answer_text;
  std::string question_text;
  std::string doc_id;
  std::string answer_role;
  std::string ladder_mode;
  std::vector<std::string> answer_entities;  // NER labels overlapping the answer
};

// Extractive QA example. answer_start counts Unicode code points.
struct QaPair {
  std::string paragraph_text;
  std::string answer_text;
  size_t answer_start = 0;
  std::string question_text;
  std::string pair_id;
  std::vector<std::string> answer_entities;
};

enum class RejectCode {
  kArticleTooLong,
  kLowAnswerOverlap,
  kQuestionTooShort,
  kParaTooShort,
  kParaTooLong,
  kAnswerNotInParagraph,
  kAnswerSinglePronoun,
  kNoAnswerExtracted,
};

std::string_view RejectCodeName(RejectCode code);

struct RejectReason {
  RejectCode code;
  std::string detail;
};

using QgOutcome = std::variant<QgTriple, RejectReason>;

// --- QG training triples ---------------------------------------------------

// Generates questions from the summary and pairs each with the article (or,
// in naive mode, the summary itself), then filters. One outcome per generated
// question, in generation order.
std::vector<QgOutcome> BuildQgTriples(const DocumentPair& pair,
                                      const HeuristicConfig& cfg);

// Article length, answer/passage overlap and question length, checked in that
// order. Boundaries are inclusive on the accept side.
std::optional<RejectReason> FilterQgTriple(const QgTriple& triple,
                                           const HeuristicConfig& cfg);

// --- Synthetic QA ----------------------------------------------------------

// NER spans deduplicated by (surface text, label), first occurrence kept.
std::vector<NerSpan> ExtractAnswerCandidates(const AnnotatedSentence& paragraph);

std::optional<RejectReason> FilterParagraphAnswer(
    std::span<const std::string> paragraph_tokens, std::string_view answer,
    const HeuristicConfig& cfg);

bool IsSinglePronoun(std::string_view answer);

// "{paragraph} <SEP> {answer} <SEP>"
std::string EmitSeq2SeqInput(std::string_view paragraph, std::string_view answer);

// Strips markup tags and reference markers, splits on blank lines and keeps
// paragraphs longer than |min_chars| code points.
std::vector<std::string> CleanWikiParagraphs(std::string_view raw_text,
                                             int min_chars = 500);

// A filter-passing answer candidate. |pair| is set when a question is known.
struct QaCandidate {
  std::string seq2seq_input;
  std::optional<QaPair> pair;
};

struct QaOutcome {
  std::string id;
  std::string answer_text;
  std::variant<QaCandidate, RejectReason> result;
};

// Runs answer extraction and the paragraph filters over one annotated
// paragraph. Questions come from |external_questions| (keyed by pair id) when
// given, else from the heuristics over the paragraph's own frames.
std::vector<QaOutcome> BuildQaCandidates(
    const AnnotatedSentence& paragraph, const HeuristicConfig& cfg,
    const std::unordered_map<std::string, std::string>* external_questions =
        nullptr);

// Code-point offset of token |index| in the single-space join of |sentence|.
size_t CharOffsetOfToken(const AnnotatedSentence& sentence, int index);

// True when answer_start points at answer_text inside paragraph_text.
bool HasValidOffset(const QaPair& pair);

// SQuAD 1.1 document; pairs sharing a paragraph share one context. Throws
// InvalidOffsetError.
std::string BuildSquadJson(std::span<const QaPair> pairs,
                           std::string_view dataset_name);

// --- Record formats ----------------------------------------------------------

// {"doc_id", "passage", "summary_annotation"}
DocumentPair DocumentPairFromJson(const nlohmann::json& object);

// {"passage", "answer", "question", "meta": {...}}
std::string TripleToJsonLine(const QgTriple& triple, const std::string& id);
QgTriple TripleFromJson(const nlohmann::json& object, std::string* id = nullptr);

// {"id", "code", "detail"}
std::string RejectToJsonLine(const std::string& id, const RejectReason& reason);

}  // namespace sumqg

#endif  // SUMQG_DATASET_PIPELINE_H_

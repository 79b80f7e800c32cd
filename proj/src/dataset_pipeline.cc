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

#include "sumqg/dataset_pipeline.h"

#include <algorithm>
#include <regex>
#include <set>
#include <sstream>
#include <unordered_set>

#include "sumqg/qg_engine.h"
#include "sumqg/text.h"

namespace sumqg {

namespace {

constexpr double kOverlapEpsilon = 1e-9;

const std::unordered_set<std::string_view> kPronouns = {
    "he",  "she",   "it",    "they",  "we",  "you", "i",   "him",   "her",
    "them", "us",   "me",    "this",  "that", "these", "those", "who", "whom",
};

std::vector<std::string> EntityLabelsOver(const AnnotatedSentence& s, int start,
                                          int end) {
  std::vector<std::string> labels;
  for (const auto& overlap : EntityLabelsInSpan(s, start, end)) {
    labels.push_back(overlap.span.label);
  }
  return labels;
}

}  // namespace

std::string_view RejectCodeName(RejectCode code) {
  switch (code) {
    case RejectCode::kArticleTooLong:
      return "ARTICLE_TOO_LONG";
    case RejectCode::kLowAnswerOverlap:
      return "LOW_ANSWER_OVERLAP";
    case RejectCode::kQuestionTooShort:
      return "QUESTION_TOO_SHORT";
    case RejectCode::kParaTooShort:
      return "PARA_TOO_SHORT";
    case RejectCode::kParaTooLong:
      return "PARA_TOO_LONG";
    case RejectCode::kAnswerNotInParagraph:
      return "ANSWER_NOT_IN_PARAGRAPH";
    case RejectCode::kAnswerSinglePronoun:
      return "ANSWER_SINGLE_PRONOUN";
    case RejectCode::kNoAnswerExtracted:
      return "NO_ANSWER_EXTRACTED";
  }
  return "UNKNOWN";
}

std::optional<RejectReason> FilterQgTriple(const QgTriple& t,
                                           const HeuristicConfig& cfg) {
  const auto passage = SplitWhitespace(t.passage_text);
  if (static_cast<int>(passage.size()) > cfg.max_article_tokens) {
    return RejectReason{RejectCode::kArticleTooLong,
                        std::to_string(passage.size()) + " > " +
                            std::to_string(cfg.max_article_tokens) + " tokens"};
  }
  const auto answer = SplitWhitespace(ToLower(t.answer_text));
  if (!answer.empty()) {
    std::unordered_set<std::string> passage_set;
    for (const auto& tok : passage) passage_set.insert(ToLower(tok));
    size_t present = std::count_if(answer.begin(), answer.end(), [&](const auto& tok) {
      return passage_set.contains(tok);
    });
    double fraction = static_cast<double>(present) / answer.size();
    if (fraction + kOverlapEpsilon < cfg.min_answer_overlap) {
      std::ostringstream detail;
      detail << present << "/" << answer.size() << " answer tokens in passage";
      return RejectReason{RejectCode::kLowAnswerOverlap, detail.str()};
    }
  }
  const auto question = SplitWhitespace(t.question_text);
  int length = static_cast<int>(
      std::count_if(question.begin(), question.end(),
                    [](const auto& tok) { return tok != "?"; }));
  if (length < cfg.min_question_tokens) {
    return RejectReason{RejectCode::kQuestionTooShort,
                        std::to_string(length) + " < " +
                            std::to_string(cfg.min_question_tokens) + " tokens"};
  }
  return std::nullopt;
}

std::vector<QgOutcome> BuildQgTriples(const DocumentPair& pair,
                                      const HeuristicConfig& cfg) {
  std::vector<QgOutcome> out;
  const std::string passage = cfg.mode == PassageMode::kNaive
                                  ? pair.summary.Text()
                                  : Join(pair.passage_tokens);
  for (const QgExample& ex : GenerateQuestions(pair.summary, cfg)) {
    QgTriple t;
    t.passage_text = passage;
    t.answer_text = ex.answer_text;
    t.question_text = ex.question.Text();
    t.doc_id = pair.doc_id;
    t.answer_role = ex.answer_role;
    t.ladder_mode = cfg.ladder_name;
    t.answer_entities = EntityLabelsOver(pair.summary, ex.answer_start, ex.answer_end);
    if (auto reject = FilterQgTriple(t, cfg)) {
      out.emplace_back(std::move(*reject));
    } else {
      out.emplace_back(std::move(t));
    }
  }
  return out;
}

std::vector<NerSpan> ExtractAnswerCandidates(const AnnotatedSentence& p) {
  std::vector<NerSpan> spans = p.ner_spans;
  std::stable_sort(spans.begin(), spans.end(),
                   [](const NerSpan& a, const NerSpan& b) { return a.start < b.start; });
  std::vector<NerSpan> out;
  std::set<std::pair<std::string, std::string>> seen;
  for (const auto& span : spans) {
    if (seen.insert({p.SpanText(span.start, span.end), span.label}).second) {
      out.push_back(span);
    }
  }
  return out;
}

bool IsSinglePronoun(std::string_view answer) {
  auto tokens = SplitWhitespace(ToLower(answer));
  return tokens.size() == 1 && kPronouns.contains(tokens[0]);
}

std::optional<RejectReason> FilterParagraphAnswer(
    std::span<const std::string> paragraph_tokens, std::string_view answer,
    const HeuristicConfig& cfg) {
  const int words = static_cast<int>(paragraph_tokens.size());
  if (words < cfg.min_paragraph_words) {
    return RejectReason{RejectCode::kParaTooShort,
                        std::to_string(words) + " < " +
                            std::to_string(cfg.min_paragraph_words) + " words"};
  }
  if (words > cfg.max_paragraph_words) {
    return RejectReason{RejectCode::kParaTooLong,
                        std::to_string(words) + " > " +
                            std::to_string(cfg.max_paragraph_words) + " words"};
  }
  const auto answer_tokens = SplitWhitespace(ToLower(answer));
  if (answer_tokens.empty() ||
      !ContainsRun(LowerAll(paragraph_tokens), answer_tokens)) {
    return RejectReason{RejectCode::kAnswerNotInParagraph,
                        "'" + std::string(answer) + "' not found"};
  }
  if (IsSinglePronoun(answer)) {
    return RejectReason{RejectCode::kAnswerSinglePronoun,
                        "'" + std::string(answer) + "' is a pronoun"};
  }
  return std::nullopt;
}

std::string EmitSeq2SeqInput(std::string_view paragraph, std::string_view answer) {
  std::string out;
  out.reserve(paragraph.size() + answer.size() + 14);
  out.append(paragraph).append(" <SEP> ").append(answer).append(" <SEP>");
  return out;
}

std::vector<std::string> CleanWikiParagraphs(std::string_view raw, int min_chars) {
  static const std::regex kTag("<[^<>]*>");
  static const std::regex kReference(
      R"(\[(\d+|[a-z]|[A-Za-z ]*needed|note \d+|nb \d+)\])");
  std::string text = std::regex_replace(std::string(raw), kTag, "");
  text = std::regex_replace(text, kReference, "");

  std::vector<std::string> out;
  std::string current;
  auto flush = [&]() {
    std::string para = Join(SplitWhitespace(current));
    if (static_cast<int>(Utf8Length(para)) > min_chars) out.push_back(para);
    current.clear();
  };
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    if (SplitWhitespace(line).empty()) {
      flush();
    } else {
      current.append(line).push_back(' ');
    }
  }
  flush();
  return out;
}

size_t CharOffsetOfToken(const AnnotatedSentence& s, int index) {
  size_t offset = 0;
  for (int i = 0; i < index && i < s.size(); ++i) {
    offset += Utf8Length(s.tokens[i].surface) + 1;
  }
  return offset;
}

bool HasValidOffset(const QaPair& pair) {
  size_t begin = Utf8ByteOffset(pair.paragraph_text, pair.answer_start);
  if (begin == std::string_view::npos) return false;
  return pair.paragraph_text.compare(begin, pair.answer_text.size(),
                                     pair.answer_text) == 0 &&
         !pair.answer_text.empty();
}

std::vector<QaOutcome> BuildQaCandidates(
    const AnnotatedSentence& paragraph, const HeuristicConfig& cfg,
    const std::unordered_map<std::string, std::string>* external_questions) {
  std::vector<QaOutcome> out;
  const std::string para_id = paragraph.sentence_id;
  const auto candidates = ExtractAnswerCandidates(paragraph);
  if (candidates.empty()) {
    out.push_back({para_id, "",
                   RejectReason{RejectCode::kNoAnswerExtracted,
                                "no entity mentions"}});
    return out;
  }
  const auto tokens = paragraph.Surfaces();
  const std::string text = paragraph.Text();

  // A paragraph has no single main verb, so every frame is eligible.
  std::vector<QgExample> generated;
  if (external_questions == nullptr) {
    HeuristicConfig para_cfg = cfg;
    para_cfg.frame_selection = FrameSelection::kAllFrames;
    generated = GenerateQuestions(paragraph, para_cfg);
  }

  for (size_t k = 0; k < candidates.size(); ++k) {
    const NerSpan& span = candidates[k];
    QaOutcome outcome;
    outcome.id = para_id + "-" + std::to_string(k);
    outcome.answer_text = paragraph.SpanText(span.start, span.end);
    if (auto reject = FilterParagraphAnswer(tokens, outcome.answer_text, cfg)) {
      outcome.result = std::move(*reject);
      out.push_back(std::move(outcome));
      continue;
    }
    QaCandidate cand;
    cand.seq2seq_input = EmitSeq2SeqInput(text, outcome.answer_text);

    std::optional<std::string> question;
    if (external_questions != nullptr) {
      auto it = external_questions->find(outcome.id);
      if (it != external_questions->end()) question = it->second;
    } else {
      const QgExample* best = nullptr;
      for (const auto& ex : generated) {
        if (ex.answer_start == span.start && ex.answer_end == span.end) {
          best = &ex;
          break;
        }
        bool contains = ex.answer_start <= span.start && ex.answer_end >= span.end;
        double coverage = static_cast<double>(span.size()) /
                          (ex.answer_end - ex.answer_start);
        if (best == nullptr && contains &&
            coverage + 1e-12 >= cfg.entity_coverage_min) {
          best = &ex;
        }
      }
      if (best != nullptr) question = best->question.Text();
    }
    if (question) {
      QaPair pair;
      pair.paragraph_text = text;
      pair.answer_text = outcome.answer_text;
      pair.answer_start = CharOffsetOfToken(paragraph, span.start);
      pair.question_text = *question;
      pair.pair_id = outcome.id;
      pair.answer_entities = {span.label};
      cand.pair = std::move(pair);
    }
    outcome.result = std::move(cand);
    out.push_back(std::move(outcome));
  }
  return out;
}

std::string BuildSquadJson(std::span<const QaPair> pairs,
                           std::string_view dataset_name) {
  using ojson = nlohmann::ordered_json;
  ojson paragraphs = ojson::array();
  std::unordered_map<std::string, size_t> context_index;
  for (const QaPair& p : pairs) {
    if (!HasValidOffset(p)) {
      throw InvalidOffsetError("pair " + p.pair_id + ": answer_start " +
                               std::to_string(p.answer_start) +
                               " does not point at '" + p.answer_text + "'");
    }
    auto [it, inserted] = context_index.try_emplace(p.paragraph_text, paragraphs.size());
    if (inserted) {
      ojson para;
      para["context"] = p.paragraph_text;
      para["qas"] = ojson::array();
      paragraphs.push_back(std::move(para));
    }
    ojson answer;
    answer["text"] = p.answer_text;
    answer["answer_start"] = p.answer_start;
    ojson qa;
    qa["id"] = p.pair_id;
    qa["question"] = p.question_text;
    qa["answers"] = ojson::array({answer});
    paragraphs[it->second]["qas"].push_back(std::move(qa));
  }
  ojson entry;
  entry["title"] = std::string(dataset_name);
  entry["paragraphs"] = std::move(paragraphs);
  ojson doc;
  doc["version"] = "1.1";
  doc["data"] = ojson::array({entry});
  return doc.dump();
}

DocumentPair DocumentPairFromJson(const nlohmann::json& object) {
  auto schema = [](const std::string& m) {
    throw AnnotationError(AnnotationError::Kind::kSchemaViolation, m);
  };
  if (!object.is_object()) schema("pair record: expected an object");
  for (const char* key : {"doc_id", "passage", "summary_annotation"}) {
    if (!object.contains(key)) schema(std::string("pair record: missing field '") + key + "'");
  }
  if (!object.at("doc_id").is_string() || !object.at("passage").is_string()) {
    schema("pair record: doc_id and passage must be strings");
  }
  DocumentPair pair;
  pair.doc_id = object.at("doc_id").get<std::string>();
  pair.passage_tokens = SplitWhitespace(object.at("passage").get<std::string>());
  if (pair.passage_tokens.empty()) {
    throw AnnotationError(AnnotationError::Kind::kInvariantViolation,
                          "pair " + pair.doc_id + ": empty passage");
  }
  pair.summary = AnnotationFromJson(object.at("summary_annotation"));
  return pair;
}

std::string TripleToJsonLine(const QgTriple& t, const std::string& id) {
  nlohmann::ordered_json line;
  line["passage"] = t.passage_text;
  line["answer"] = t.answer_text;
  line["question"] = t.question_text;
  nlohmann::ordered_json meta;
  meta["id"] = id;
  meta["doc_id"] = t.doc_id;
  meta["answer_role"] = t.answer_role;
  meta["ladder"] = t.ladder_mode;
  meta["answer_ner"] = t.answer_entities;
  line["meta"] = std::move(meta);
  return line.dump();
}

QgTriple TripleFromJson(const nlohmann::json& object, std::string* id) {
  QgTriple t;
  t.passage_text = object.value("passage", "");
  t.answer_text = object.value("answer", "");
  t.question_text = object.at("question").get<std::string>();
  if (object.contains("meta") && object.at("meta").is_object()) {
    const auto& meta = object.at("meta");
    t.doc_id = meta.value("doc_id", "");
    t.answer_role = meta.value("answer_role", "");
    t.ladder_mode = meta.value("ladder", "");
    if (meta.contains("answer_ner")) {
      t.answer_entities = meta.at("answer_ner").get<std::vector<std::string>>();
    }
    if (id != nullptr) *id = meta.value("id", "");
  }
  return t;
}

std::string RejectToJsonLine(const std::string& id, const RejectReason& reason) {
  nlohmann::ordered_json line;
  line["id"] = id;
  line["code"] = RejectCodeName(reason.code);
  line["detail"] = reason.detail;
  return line.dump();
}

}  // namespace sumqg

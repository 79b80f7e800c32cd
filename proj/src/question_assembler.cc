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

#include "sumqg/question_assembler.h"

#include <unordered_set>

#include "sumqg/text.h"

namespace sumqg {

namespace {

const std::unordered_set<std::string_view> kTrailingPunct = {
    ".", "!", ";", ",", ":", "?", "...", "--",
};

const std::unordered_set<std::string_view> kFunctionWords = {
    "the",  "a",    "an",  "of",  "in",   "on",   "at",   "to",   "for",
    "with", "by",   "from", "and", "or",  "but",  "did",  "does", "do",
    "has",  "have", "had", "is",  "was",  "are",  "were", "be",   "been",
    "that", "as",
};

// Prepositions and subordinators that cannot end a question.
const std::unordered_set<std::string_view> kDangling = {
    "in",     "on",     "at",      "after",  "before", "while", "because",
    "since",  "for",    "to",      "of",     "with",   "by",    "from",
    "during", "until",  "as",      "if",     "although", "though",
    "into",   "onto",   "about",   "over",   "under",  "than",  "despite",
    "and",    "or",     "but",     "the",    "a",      "an",
};

void StripTrailingPunct(std::vector<std::string>& t) {
  while (!t.empty() && kTrailingPunct.contains(t.back())) t.pop_back();
}

void CheckNoEcho(const AnnotatedSentence& s, const SrlArgument& answer,
                 const QuestionDraft& draft) {
  std::vector<std::string> answer_tokens;
  for (int i = answer.start; i < answer.end; ++i) {
    answer_tokens.push_back(ToLower(s.tokens[i].surface));
  }
  if (ContainsRun(draft.tokens, answer_tokens)) {
    throw QgError(QgError::Code::kAnswerEchoed,
                  "answer '" + Join(answer_tokens) + "' echoed in question");
  }
}

// Sentence tokens with [answer.start, answer.end) removed. A comma left at the
// seam of a fronted or clause-initial span goes with it.
std::vector<int> KeptIndices(const AnnotatedSentence& s,
                             const SrlArgument& answer) {
  std::vector<int> kept;
  for (int i = 0; i < s.size(); ++i) {
    if (answer.Contains(i)) continue;
    if (i == answer.end && s.tokens[i].surface == "," &&
        (answer.start == 0 || s.tokens[answer.start - 1].surface == ",")) {
      continue;
    }
    kept.push_back(i);
  }
  return kept;
}

}  // namespace

std::string QuestionDraft::Text() const { return Join(tokens); }

std::vector<std::string> PostEdit(std::vector<std::string> tokens) {
  std::vector<std::string> t;
  t.reserve(tokens.size() + 1);
  for (auto& tok : tokens) {
    std::string lower = ToLower(tok);
    std::erase(lower, '?');
    if (lower.empty()) continue;
    if (!t.empty() && t.back() == lower && kFunctionWords.contains(lower)) {
      continue;
    }
    t.push_back(std::move(lower));
  }
  StripTrailingPunct(t);
  if (!t.empty() && t.size() > 1 && kDangling.contains(t.back())) {
    t.pop_back();
    StripTrailingPunct(t);
  }
  if (t.empty()) {
    throw QgError(QgError::Code::kEmptyAfterEdit, "question empty after edit");
  }
  t.push_back("?");
  return t;
}

QuestionDraft AssembleInSitu(const AnnotatedSentence& s,
                             const SrlArgument& answer, const WhPhrase& wh) {
  std::vector<std::string> raw;
  for (int i = 0; i < answer.start; ++i) raw.push_back(s.tokens[i].surface);
  raw.insert(raw.end(), wh.tokens.begin(), wh.tokens.end());
  for (int i = answer.end; i < s.size(); ++i) raw.push_back(s.tokens[i].surface);
  QuestionDraft draft{PostEdit(std::move(raw)), answer.role, {"in_situ"}};
  CheckNoEcho(s, answer, draft);
  return draft;
}

bool IsSubjectArgument(const AnnotatedSentence& s, const SrlFrame& frame,
                       const SrlArgument& answer) {
  int clause_head = frame.verb_index;
  if (const DepEdge* e = s.EdgeOf(frame.verb_index)) {
    if (IsAuxiliaryLabel(e->label) && e->head >= 0) clause_head = e->head;
  }
  bool verb_has_subject = false;
  for (const auto& e : s.dep_edges) {
    if (e.head != frame.verb_index && e.head != clause_head) continue;
    std::string label = ToLower(e.label);
    if (label.rfind("nsubj", 0) == 0 || label.rfind("csubj", 0) == 0) {
      verb_has_subject = true;
      if (answer.Contains(e.dependent)) return true;
    }
  }
  if (verb_has_subject) return false;
  return NormalizeRole(answer.role) == "ARG0" && answer.end <= frame.verb_index;
}

QuestionDraft WhMove(const AnnotatedSentence& s, const SrlFrame& frame,
                     const SrlArgument& answer, const WhPhrase& wh,
                     const std::optional<VerbDecomposition>& decomp) {
  if (answer.Contains(frame.verb_index)) {
    throw QgError(QgError::Code::kAnswerIsVerb, "answer covers the predicate");
  }
  if (IsSubjectArgument(s, frame, answer)) {
    QuestionDraft draft = AssembleInSitu(s, answer, wh);
    draft.mode_trace = {"subject"};
    return draft;
  }

  std::vector<std::string> raw(wh.tokens.begin(), wh.tokens.end());
  QuestionDraft draft;
  draft.answer_role = answer.role;
  draft.mode_trace = {"wh_front"};
  if (!decomp) {
    for (int i : KeptIndices(s, answer)) raw.push_back(s.tokens[i].surface);
  } else {
    raw.insert(raw.end(), decomp->aux_tokens.begin(), decomp->aux_tokens.end());
    const bool synthesized = !decomp->fronted_aux_index.has_value();
    draft.mode_trace.push_back(synthesized ? "do_support" : "aux_front");
    for (int i : KeptIndices(s, answer)) {
      if (!synthesized && i == *decomp->fronted_aux_index) continue;
      if (synthesized && i == decomp->verb_index) {
        raw.insert(raw.end(), decomp->main_tokens.begin(),
                   decomp->main_tokens.end());
        continue;
      }
      raw.push_back(s.tokens[i].surface);
    }
  }
  draft.tokens = PostEdit(std::move(raw));
  CheckNoEcho(s, answer, draft);
  return draft;
}

}  // namespace sumqg

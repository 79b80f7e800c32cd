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

#ifndef SUMQG_QUESTION_ASSEMBLER_H_
#define SUMQG_QUESTION_ASSEMBLER_H_

#include <optional>
#include <string>
#include <vector>

#include "sumqg/annotation.h"
#include "sumqg/verb_morph.h"
#include "sumqg/wh_lexicon.h"

namespace sumqg {

// A lowercase question ending in a single "?" token.
struct QuestionDraft {
  std::vector<std::string> tokens;
  std::string answer_role;
  std::vector<std::string> mode_trace;  // heuristics that fired

  std::string Text() const;
};

// Lowercases, drops "?" and trailing punctuation, collapses doubled function
// words, removes one dangling preposition or subordinator before the end and
// appends "?". Throws QgError(kEmptyAfterEdit) when nothing is left.
std::vector<std::string> PostEdit(std::vector<std::string> tokens);

// Naive question: the answer span replaced by the wh-phrase in place.
QuestionDraft AssembleInSitu(const AnnotatedSentence& sentence,
                             const SrlArgument& answer, const WhPhrase& wh);

// True when |answer| is the grammatical subject of |frame|'s predicate.
bool IsSubjectArgument(const AnnotatedSentence& sentence, const SrlFrame& frame,
                       const SrlArgument& answer);

// Wh-fronted question. Subject answers are replaced in place; otherwise the
// wh-phrase is fronted and, when |decomp| is given, followed by the
// auxiliary with the verb reduced to its base form. Throws
// QgError(kAnswerIsVerb) when the answer covers the predicate.
QuestionDraft WhMove(const AnnotatedSentence& sentence, const SrlFrame& frame,
                     const SrlArgument& answer, const WhPhrase& wh,
                     const std::optional<VerbDecomposition>& decomp);

}  // namespace sumqg

#endif  // SUMQG_QUESTION_ASSEMBLER_H_

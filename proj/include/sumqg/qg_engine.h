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

#ifndef SUMQG_QG_ENGINE_H_
#define SUMQG_QG_ENGINE_H_

#include <span>
#include <string>
#include <vector>

#include "sumqg/annotation.h"
#include "sumqg/config.h"
#include "sumqg/question_assembler.h"
#include "sumqg/wh_lexicon.h"

namespace sumqg {

struct QgExample {
  QuestionDraft question;
  std::string answer_text;  // original-case surface of the argument span
  std::string answer_role;
  std::string source_sentence_id;
  int answer_start = 0;
  int answer_end = 0;
  WhKind wh_kind = WhKind::kWhat;
};

// Runs the question heuristics over one annotated sentence. Arguments that
// cannot yield a question are skipped; output follows frame order, then
// argument order.
std::vector<QgExample> GenerateQuestions(const AnnotatedSentence& sentence,
                                         const HeuristicConfig& cfg);

// Corpus drivers. Both return one result list per sentence, in input order.
std::vector<std::vector<QgExample>> GenerateCorpusSerial(
    std::span<const AnnotatedSentence> sentences, const HeuristicConfig& cfg);
std::vector<std::vector<QgExample>> GenerateCorpus(
    std::span<const AnnotatedSentence> sentences, const HeuristicConfig& cfg,
    int workers);

}  // namespace sumqg

#endif  // SUMQG_QG_ENGINE_H_

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

#include "sumqg/qg_engine.h"

#include "sumqg/parallel_map.h"
#include "sumqg/verb_morph.h"

namespace sumqg {

std::vector<QgExample> GenerateQuestions(const AnnotatedSentence& s,
                                         const HeuristicConfig& cfg) {
  std::vector<QgExample> out;
  int root = -1;
  if (cfg.frame_selection == FrameSelection::kRootOnly) {
    try {
      root = RootVerb(s);
    } catch (const QgError&) {
      return out;
    }
  }
  for (const SrlFrame& frame : s.srl_frames) {
    if (cfg.frame_selection == FrameSelection::kRootOnly &&
        frame.verb_index != root) {
      continue;
    }
    for (const SrlArgument& arg : frame.arguments) {
      try {
        WhPhrase wh = IdentifyWhWord(arg, s, cfg);
        QuestionDraft draft;
        if (!cfg.wh_movement) {
          draft = AssembleInSitu(s, arg, wh);
        } else {
          std::optional<VerbDecomposition> decomp;
          if (cfg.decomp_verb && !IsSubjectArgument(s, frame, arg)) {
            decomp = DecompVerb(s, frame.verb_index, cfg.verbs());
          }
          draft = WhMove(s, frame, arg, wh, decomp);
        }
        if (wh.kind == WhKind::kWhichX) draft.mode_trace.push_back("ner_wh");
        QgExample ex;
        ex.question = std::move(draft);
        ex.answer_text = s.SpanText(arg.start, arg.end);
        ex.answer_role = arg.role;
        ex.source_sentence_id = s.sentence_id;
        ex.answer_start = arg.start;
        ex.answer_end = arg.end;
        ex.wh_kind = wh.kind;
        out.push_back(std::move(ex));
      } catch (const QgError&) {
        // Argument yields no question.
      }
    }
  }
  return out;
}

std::vector<std::vector<QgExample>> GenerateCorpusSerial(
    std::span<const AnnotatedSentence> sentences, const HeuristicConfig& cfg) {
  return OrderedMapSerial(sentences, [&cfg](const AnnotatedSentence& s) {
    return GenerateQuestions(s, cfg);
  });
}

std::vector<std::vector<QgExample>> GenerateCorpus(
    std::span<const AnnotatedSentence> sentences, const HeuristicConfig& cfg,
    int workers) {
  return OrderedMap(
      sentences,
      [&cfg](const AnnotatedSentence& s) { return GenerateQuestions(s, cfg); },
      workers);
}

}  // namespace sumqg

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

#include <gtest/gtest.h>

#include <set>
#include <string>
#include <vector>

#include "sumqg/text.h"
#include "testing/fixtures.h"

namespace sumqg {
namespace {

using testing::SentenceBuilder;

std::vector<std::string> Texts(const std::vector<QgExample>& examples) {
  std::vector<std::string> out;
  for (const auto& ex : examples) out.push_back(ex.question.Text());
  return out;
}

std::vector<std::string> Answers(const std::vector<QgExample>& examples) {
  std::vector<std::string> out;
  for (const auto& ex : examples) out.push_back(ex.answer_text);
  return out;
}

TEST(QgEngineTest, S1Ladder) {
  const AnnotatedSentence s1 = testing::S1();
  EXPECT_EQ(Texts(GenerateQuestions(s1, LadderPreset("naive"))),
            (std::vector<std::string>{"who announced the party in the morning ?",
                                      "stephen hawking announced what in the morning ?",
                                      "stephen hawking announced the party when ?"}));
  EXPECT_EQ(Texts(GenerateQuestions(s1, LadderPreset("+wh-move")))[1],
            "what stephen hawking announced in the morning ?");
  EXPECT_EQ(Texts(GenerateQuestions(s1, LadderPreset("+decomp"))),
            (std::vector<std::string>{"who announced the party in the morning ?",
                                      "what did stephen hawking announce in the morning ?",
                                      "when did stephen hawking announce the party ?"}));
}

TEST(QgEngineTest, S2FullLadder) {
  const AnnotatedSentence s2 = testing::S2();
  auto examples = GenerateQuestions(s2, LadderPreset("full"));
  ASSERT_EQ(examples.size(), 3u);
  EXPECT_EQ(examples[0].wh_kind, WhKind::kWho);
  EXPECT_EQ(examples[1].wh_kind, WhKind::kWhat);
  EXPECT_EQ(examples[2].wh_kind, WhKind::kWhen);
  EXPECT_EQ(Answers(examples),
            (std::vector<std::string>{"U2 's lead singer Bono", "emergency spinal surgery",
                                      "after suffering an injury while preparing for tour dates"}));
  EXPECT_EQ(examples[0].answer_role, "ARG0");
  EXPECT_EQ(examples[2].answer_role, "ARGM-TMP");
  EXPECT_EQ(examples[1].source_sentence_id, "s2");
  EXPECT_EQ(examples[1].answer_start, 7);
  EXPECT_EQ(examples[1].answer_end, 10);
}

TEST(QgEngineTest, NerWhRung) {
  const AnnotatedSentence s = testing::NbaSentence();
  auto full = GenerateQuestions(s, LadderPreset("full"));
  ASSERT_FALSE(full.empty());
  EXPECT_EQ(full[0].question.Text(), "which nba player won the championship in 1998 ?");
  auto trace = full[0].question.mode_trace;
  EXPECT_NE(std::find(trace.begin(), trace.end(), "ner_wh"), trace.end());
  auto decomp = GenerateQuestions(s, LadderPreset("+decomp"));
  EXPECT_EQ(decomp[0].question.Text(), "who won the championship in 1998 ?");
}

TEST(QgEngineTest, RootOnlySkipsNonRootFrames) {
  AnnotatedSentence s = testing::S1();
  s.srl_frames[0].verb_index = 4;  // a frame over "party"
  s.srl_frames[0].arguments = {{"ARG0", 0, 2}};
  EXPECT_TRUE(GenerateQuestions(s, LadderPreset("full")).empty());
}

TEST(QgEngineTest, AllFramesVisitsEveryFrame) {
  AnnotatedSentence s = SentenceBuilder("two")
                            .Arg("ARG0", "Maria", "PROPN", "nsubj", {{0, 1, "PERSON"}})
                            .Verb("said")
                            .Arg("ARG1", "the team won the title", "DET NOUN VERB DET NOUN",
                                 "ccomp")
                            .Build();
  s.srl_frames.push_back({4, {{"ARG0", 2, 4}, {"ARG1", 5, 7}}});
  ValidateAnnotation(s);
  EXPECT_EQ(GenerateQuestions(s, LadderPreset("full")).size(), 2u);
  EXPECT_EQ(GenerateQuestions(s, LadderPreset("summary")).size(), 4u);
}

TEST(QgEngineTest, NoRootYieldsNothing) {
  AnnotatedSentence s = testing::S1();
  s.dep_edges.clear();
  EXPECT_TRUE(GenerateQuestions(s, LadderPreset("full")).empty());
  EXPECT_EQ(GenerateQuestions(s, LadderPreset("summary")).size(), 3u);
}

TEST(QgEngineTest, SkippedRolesAndBadPredicates) {
  AnnotatedSentence s = SentenceBuilder("skip")
                            .Arg("ARG0", "she", "PRON", "nsubj")
                            .Arg("ARGM-MOD", "will", "AUX", "aux")
                            .Arg("ARGM-NEG", "not", "PART", "advmod")
                            .Verb("sign")
                            .Arg("ARG1", "the deal", "DET NOUN", "obj")
                            .Build();
  auto examples = GenerateQuestions(s, LadderPreset("full"));
  ASSERT_EQ(examples.size(), 2u);
  EXPECT_EQ(examples[0].answer_role, "ARG0");
  EXPECT_EQ(examples[1].answer_role, "ARG1");

  AnnotatedSentence noun = testing::S1();
  noun.tokens[2].pos = "NOUN";
  // Only arguments needing do-support are lost when the predicate is not verbal.
  auto remaining = GenerateQuestions(noun, LadderPreset("full"));
  ASSERT_EQ(remaining.size(), 1u);
  EXPECT_EQ(remaining[0].answer_role, "ARG0");
}

TEST(QgEngineTest, EmptyFrameList) {
  AnnotatedSentence s = testing::S1();
  s.srl_frames.clear();
  EXPECT_TRUE(GenerateQuestions(s, LadderPreset("full")).empty());
}

TEST(QgEngineTest, OutputBoundedByArguments) {
  for (const auto& s : testing::RandomCorpus(200, 3)) {
    size_t args = 0;
    for (const auto& f : s.srl_frames) args += f.arguments.size();
    EXPECT_LE(GenerateQuestions(s, LadderPreset("summary")).size(), args);
  }
}

TEST(QgEngineTest, QuestionInvariantsOnRandomCorpus) {
  for (const auto& name : LadderNames()) {
    const HeuristicConfig cfg = LadderPreset(name);
    for (const auto& s : testing::RandomCorpus(300, 17)) {
      for (const auto& ex : GenerateQuestions(s, cfg)) {
        const auto& tokens = ex.question.tokens;
        ASSERT_FALSE(tokens.empty());
        EXPECT_EQ(tokens.back(), "?");
        EXPECT_EQ(std::count(tokens.begin(), tokens.end(), "?"), 1);
        EXPECT_FALSE(HasUppercase(ex.question.Text()));
        auto answer = SplitWhitespace(ToLower(ex.answer_text));
        EXPECT_FALSE(ContainsRun(tokens, answer)) << ex.question.Text();
        EXPECT_EQ(ex.answer_text, s.SpanText(ex.answer_start, ex.answer_end));
      }
    }
  }
}

// Enabling a rung never changes which answers are produced, provided every
// predicate is verbal. Answers whose text recurs elsewhere in the sentence are
// left out: the echo guard may drop them on one rung and not another.
TEST(QgEngineTest, LadderKeepsAnswerSet) {
  auto corpus = testing::RandomCorpus(300, 23);
  for (auto& s : corpus) {
    for (const auto& f : s.srl_frames) s.tokens[f.verb_index].pos = "VERB";
  }
  auto answers = [](const AnnotatedSentence& s, const char* ladder, bool ner_wh) {
    HeuristicConfig cfg = LadderPreset(ladder);
    cfg.ner_wh = ner_wh;
    const auto sentence = LowerAll(s.Surfaces());
    std::vector<std::pair<int, int>> out;
    for (const auto& ex : GenerateQuestions(s, cfg)) {
      std::vector<std::string> rest = sentence;
      rest.erase(rest.begin() + ex.answer_start, rest.begin() + ex.answer_end);
      if (ContainsRun(rest, SplitWhitespace(ToLower(ex.answer_text)))) continue;
      out.emplace_back(ex.answer_start, ex.answer_end);
    }
    return out;
  };
  for (const auto& s : corpus) {
    EXPECT_EQ(answers(s, "+wh-move", false), answers(s, "+decomp", false));
    EXPECT_EQ(answers(s, "+decomp", false), answers(s, "full", true));
  }
}

TEST(QgEngineTest, CorpusDriversAgree) {
  auto corpus = testing::RandomCorpus(400, 29);
  const HeuristicConfig cfg = LadderPreset("full");
  auto serial = GenerateCorpusSerial(corpus, cfg);
  ASSERT_EQ(serial.size(), corpus.size());
  for (int workers : {1, 2, 8}) {
    auto parallel = GenerateCorpus(corpus, cfg, workers);
    ASSERT_EQ(parallel.size(), serial.size());
    for (size_t i = 0; i < serial.size(); ++i) {
      EXPECT_EQ(Texts(parallel[i]), Texts(serial[i]));
      EXPECT_EQ(Answers(parallel[i]), Answers(serial[i]));
    }
  }
}

TEST(QgEngineTest, ValidateConfig) {
  HeuristicConfig cfg;
  cfg.wh_movement = false;
  cfg.decomp_verb = true;
  EXPECT_THROW(ValidateConfig(cfg), std::invalid_argument);
  EXPECT_THROW(LadderPreset("bogus"), std::invalid_argument);
  EXPECT_EQ(LadderNames().size(), 6u);
  for (const auto& name : LadderNames()) EXPECT_NO_THROW(ValidateConfig(LadderPreset(name)));
}

TEST(QgEngineTest, LadderPresetsAreCumulative) {
  const HeuristicConfig naive = LadderPreset("naive");
  EXPECT_EQ(naive.mode, PassageMode::kNaive);
  EXPECT_FALSE(naive.wh_movement || naive.decomp_verb || naive.ner_wh);
  const HeuristicConfig summary = LadderPreset("summary");
  EXPECT_EQ(summary.mode, PassageMode::kSummary);
  EXPECT_EQ(summary.frame_selection, FrameSelection::kAllFrames);
  const HeuristicConfig main_verb = LadderPreset("+main-verb");
  EXPECT_EQ(main_verb.frame_selection, FrameSelection::kRootOnly);
  EXPECT_FALSE(main_verb.wh_movement);
  EXPECT_TRUE(LadderPreset("+wh-move").wh_movement);
  EXPECT_FALSE(LadderPreset("+wh-move").decomp_verb);
  EXPECT_TRUE(LadderPreset("+decomp").decomp_verb);
  EXPECT_FALSE(LadderPreset("+decomp").ner_wh);
  const HeuristicConfig full = LadderPreset("full");
  EXPECT_TRUE(full.wh_movement && full.decomp_verb && full.ner_wh);
  EXPECT_EQ(full.max_article_tokens, 480);
  EXPECT_DOUBLE_EQ(full.min_answer_overlap, 0.55);
  EXPECT_EQ(full.min_question_tokens, 5);
}

TEST(QgEngineTest, ConfigJson) {
  HeuristicConfig cfg;
  ApplyConfigJson(nlohmann::json::parse(
                      R"({"ladder": "+wh-move", "max_article_tokens": 300,
                          "skip_roles": ["am-neg"], "min_answer_overlap": 0.7})"),
                  cfg);
  EXPECT_TRUE(cfg.wh_movement);
  EXPECT_FALSE(cfg.decomp_verb);
  EXPECT_EQ(cfg.max_article_tokens, 300);
  EXPECT_DOUBLE_EQ(cfg.min_answer_overlap, 0.7);
  EXPECT_EQ(cfg.skip_roles, (std::set<std::string>{"ARGM-NEG"}));
  EXPECT_EQ(cfg.ladder_name, "+wh-move");
  EXPECT_THROW(ApplyConfigJson(nlohmann::json::parse(R"({"mode": "other"})"), cfg),
               std::invalid_argument);
}

}  // namespace
}  // namespace sumqg

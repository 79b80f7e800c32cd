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

#ifndef SUMQG_TESTING_FIXTURES_H_
#define SUMQG_TESTING_FIXTURES_H_

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sumqg/annotation.h"
#include "sumqg/dataset_pipeline.h"

namespace sumqg::testing {

// Builds a sentence phrase by phrase. Tokens inside a phrase attach to the
// phrase's last token; phrase heads and auxiliaries attach to the verb.
class SentenceBuilder {
 public:
  explicit SentenceBuilder(std::string id);

  // Argument phrase. |entities| use phrase-relative offsets.
  SentenceBuilder& Arg(std::string role, std::string_view words,
                       std::string_view pos, std::string dep,
                       std::vector<NerSpan> entities = {});
  // Non-argument phrase.
  SentenceBuilder& Plain(std::string_view words, std::string_view pos,
                         std::string dep);
  SentenceBuilder& Aux(std::string_view word, std::string label = "aux");
  SentenceBuilder& Verb(std::string_view word, std::string pos = "VERB");
  SentenceBuilder& WithoutDeps();

  AnnotatedSentence Build() const;

 private:
  struct Phrase {
    int start = 0;
    int end = 0;
    std::string dep;
    std::string role;  // empty for non-arguments
    bool is_aux = false;
  };

  int Append(std::string_view words, std::string_view pos);

  AnnotatedSentence sentence_;
  std::vector<Phrase> phrases_;
  int verb_ = -1;
  bool deps_ = true;
};

// "Stephen Hawking announced the party in the morning"
AnnotatedSentence S1();
// "U2 's lead singer Bono has had emergency spinal surgery after suffering an
// injury while preparing for tour dates ."
AnnotatedSentence S2();
// "NBA player Michael Jordan won the championship in 1998"; only the name is
// an entity.
AnnotatedSentence NbaSentence();

// 100-token article that contains every S1 answer span but not "announced".
std::vector<std::string> S1Article();

// Random valid annotation: 5-40 tokens, 0-3 frames, 0-4 entities.
AnnotatedSentence RandomSentence(std::mt19937& rng, const std::string& id);
std::vector<AnnotatedSentence> RandomCorpus(size_t n, uint32_t seed);

// Template summary with its article.
struct SummaryCase {
  AnnotatedSentence summary;
  std::vector<std::string> article;
};
SummaryCase TemplateSummary(int i);

// Template paragraph annotation (NER and SRL, no dependency layer).
AnnotatedSentence TemplateParagraph(int i);

// JSON Lines corpora for the CLI.
std::string PairCorpus(size_t n);
std::string ParagraphCorpus(size_t n);

struct RegularVerb {
  std::string_view base;
  std::string_view past;
  std::string_view third;
};
std::span<const RegularVerb> RegularVerbs();

// Irregular verbs every table must cover, as (base, past, participle).
struct IrregularVerb {
  std::string_view base;
  std::string_view past;
  std::string_view participle;
};
std::span<const IrregularVerb> IrregularFixtureVerbs();

// Sentence "<subject> <verb> the report" with |verb| as root.
AnnotatedSentence VerbProbe(std::string_view subject, std::string_view verb,
                            std::string_view subject_pos = "PRON");

std::string ReadText(const std::string& path);
void WriteText(const std::string& path, std::string_view text);

}  // namespace sumqg::testing

#endif  // SUMQG_TESTING_FIXTURES_H_

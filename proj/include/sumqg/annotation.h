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

#ifndef SUMQG_ANNOTATION_H_
#define SUMQG_ANNOTATION_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "sumqg/errors.h"

namespace sumqg {

// Head value of the dependency edge attached to the root token.
inline constexpr int kRootHead = -1;

struct Token {
  int index = 0;
  std::string surface;
  std::optional<std::string> lemma;
  std::string pos;

  bool operator==(const Token&) const = default;
};

struct DepEdge {
  int dependent = 0;
  int head = kRootHead;
  std::string label;

  bool operator==(const DepEdge&) const = default;
};

// Half-open token span [start, end).
struct NerSpan {
  int start = 0;
  int end = 0;
  std::string label;

  int size() const { return end - start; }
  bool operator==(const NerSpan&) const = default;
};

struct SrlArgument {
  std::string role;
  int start = 0;
  int end = 0;

  int size() const { return end - start; }
  bool Contains(int index) const { return index >= start && index < end; }
  bool operator==(const SrlArgument&) const = default;
};

struct SrlFrame {
  int verb_index = 0;
  std::vector<SrlArgument> arguments;

  bool operator==(const SrlFrame&) const = default;
};

// One pre-tokenized sentence with its dependency, NER and SRL layers. The
// dependency layer may be empty (paragraph annotations often carry NER only);
// when present it has exactly one edge per token.
struct AnnotatedSentence {
  std::string sentence_id;
  std::vector<Token> tokens;
  std::vector<DepEdge> dep_edges;
  std::vector<NerSpan> ner_spans;
  std::vector<SrlFrame> srl_frames;

  int size() const { return static_cast<int>(tokens.size()); }

  // Surface tokens joined with single spaces.
  std::string Text() const;
  std::string SpanText(int start, int end) const;
  std::vector<std::string> Surfaces() const;

  // Edge whose dependent is |index|, or nullptr when the dependency layer is
  // absent.
  const DepEdge* EdgeOf(int index) const;

  bool operator==(const AnnotatedSentence&) const = default;
};

// Parses one interchange object and validates it.
AnnotatedSentence ParseAnnotation(std::string_view json_text);
AnnotatedSentence AnnotationFromJson(const nlohmann::json& object);

nlohmann::ordered_json AnnotationToJson(const AnnotatedSentence& sentence);
std::string SerializeAnnotation(const AnnotatedSentence& sentence);

// Throws AnnotationError(kInvariantViolation) naming the first broken
// invariant.
void ValidateAnnotation(const AnnotatedSentence& sentence);

// Index of the token whose dependency label is "root" (case-insensitive).
// Throws QgError(kNoRoot) when there is none.
int RootVerb(const AnnotatedSentence& sentence);

struct EntityOverlap {
  NerSpan span;
  double coverage = 0.0;  // |overlap| / (end - start) of the query span
};

// Every NER span overlapping [start, end), ordered by start.
std::vector<EntityOverlap> EntityLabelsInSpan(const AnnotatedSentence& sentence,
                                              int start, int end);

}  // namespace sumqg

#endif  // SUMQG_ANNOTATION_H_

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

#ifndef SUMQG_WH_LEXICON_H_
#define SUMQG_WH_LEXICON_H_

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "sumqg/annotation.h"
#include "sumqg/config.h"

namespace sumqg {

enum class WhKind {
  kWho,
  kWhat,
  kWhen,
  kWhere,
  kWhy,
  kHow,
  kHowMany,
  kHowMuch,
  kWhichX,
};

std::string_view WhKindName(WhKind kind);
std::optional<WhKind> ParseWhKind(std::string_view name);

struct WhPhrase {
  std::vector<std::string> tokens;  // lowercase
  WhKind kind = WhKind::kWhat;

  bool operator==(const WhPhrase&) const = default;
};

// The canonical phrase for a kind ("how many" for kHowMany). kWhichX has no
// canonical phrase and yields "which".
WhPhrase DefaultPhrase(WhKind kind);

bool IsWhWord(std::string_view lowercase_word);

// Uppercases a PropBank role and maps notational variants onto one form:
// "ARG-0" -> "ARG0", "ARG-TMP" / "AM-TMP" -> "ARGM-TMP"; C-/R- prefixes are
// removed.
std::string NormalizeRole(std::string_view role);

// Role and entity-label overrides on top of the compiled-in mapping.
class WhLexicon {
 public:
  static const WhLexicon& Default();

  // {"roles": {"ARGM-PRD": "HOW"}, "labels": {"EVENT": "WHAT"}}
  static WhLexicon FromJson(const nlohmann::json& object);
  static WhLexicon FromFile(const std::string& path);

  std::optional<WhKind> RoleOverride(std::string_view normalized_role) const;
  std::optional<WhKind> LabelOverride(std::string_view label) const;

 private:
  std::map<std::string, WhKind, std::less<>> roles_;
  std::map<std::string, WhKind, std::less<>> labels_;
};

// Syntactic head of [start, end): the token whose dependency head lies
// outside the span, preferring the rightmost. Falls back to end - 1 when the
// dependency layer is absent.
int SpanHead(const AnnotatedSentence& sentence, int start, int end);

// Chooses the wh-phrase for |arg|. Throws QgError(kNoWhWord) for roles in
// cfg.skip_roles.
WhPhrase IdentifyWhWord(const SrlArgument& arg, const AnnotatedSentence& sentence,
                        const HeuristicConfig& cfg);

}  // namespace sumqg

#endif  // SUMQG_WH_LEXICON_H_

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

#include "sumqg/wh_lexicon.h"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <stdexcept>

#include "sumqg/text.h"

namespace sumqg {

namespace {

std::string Upper(std::string_view s) {
  std::string out(s);
  for (auto& c : out) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return out;
}

bool IsNominalPos(std::string_view pos) {
  return pos == "NOUN" || pos == "PROPN" || pos == "ADJ" ||
         pos.substr(0, 2) == "NN" || pos.substr(0, 2) == "JJ";
}

bool InsideAnyEntity(const AnnotatedSentence& s, int index) {
  return std::any_of(s.ner_spans.begin(), s.ner_spans.end(),
                     [index](const NerSpan& e) {
                       return index >= e.start && index < e.end;
                     });
}

// Number of a core role (ARG0..ARG5), or -1.
int CoreRoleNumber(std::string_view role) {
  if (role.size() == 4 && role.substr(0, 3) == "ARG" &&
      std::isdigit(static_cast<unsigned char>(role[3]))) {
    return role[3] - '0';
  }
  return -1;
}

std::optional<WhKind> ModifierKind(std::string_view role) {
  if (role.substr(0, 5) != "ARGM-") return std::nullopt;
  std::string_view sub = role.substr(5);
  if (sub == "TMP") return WhKind::kWhen;
  if (sub == "LOC" || sub == "DIR" || sub == "GOL") return WhKind::kWhere;
  if (sub == "CAU" || sub == "PRP" || sub == "PNC") return WhKind::kWhy;
  if (sub == "MNR") return WhKind::kHow;
  if (sub == "EXT") return WhKind::kHowMany;
  return std::nullopt;
}

}  // namespace

std::string_view WhKindName(WhKind kind) {
  switch (kind) {
    case WhKind::kWho:
      return "WHO";
    case WhKind::kWhat:
      return "WHAT";
    case WhKind::kWhen:
      return "WHEN";
    case WhKind::kWhere:
      return "WHERE";
    case WhKind::kWhy:
      return "WHY";
    case WhKind::kHow:
      return "HOW";
    case WhKind::kHowMany:
      return "HOW_MANY";
    case WhKind::kHowMuch:
      return "HOW_MUCH";
    case WhKind::kWhichX:
      return "WHICH_X";
  }
  return "WHAT";
}

std::optional<WhKind> ParseWhKind(std::string_view name) {
  std::string upper = Upper(name);
  for (WhKind k : {WhKind::kWho, WhKind::kWhat, WhKind::kWhen, WhKind::kWhere,
                   WhKind::kWhy, WhKind::kHow, WhKind::kHowMany,
                   WhKind::kHowMuch, WhKind::kWhichX}) {
    if (WhKindName(k) == upper) return k;
  }
  return std::nullopt;
}

WhPhrase DefaultPhrase(WhKind kind) {
  switch (kind) {
    case WhKind::kWho:
      return {{"who"}, kind};
    case WhKind::kWhat:
      return {{"what"}, kind};
    case WhKind::kWhen:
      return {{"when"}, kind};
    case WhKind::kWhere:
      return {{"where"}, kind};
    case WhKind::kWhy:
      return {{"why"}, kind};
    case WhKind::kHow:
      return {{"how"}, kind};
    case WhKind::kHowMany:
      return {{"how", "many"}, kind};
    case WhKind::kHowMuch:
      return {{"how", "much"}, kind};
    case WhKind::kWhichX:
      return {{"which"}, kind};
  }
  return {{"what"}, WhKind::kWhat};
}

bool IsWhWord(std::string_view w) {
  return w == "who" || w == "what" || w == "when" || w == "where" ||
         w == "why" || w == "how" || w == "which" || w == "whose" ||
         w == "whom";
}

std::string NormalizeRole(std::string_view role) {
  std::string r = Upper(role);
  if (r.rfind("C-", 0) == 0 || r.rfind("R-", 0) == 0) r = r.substr(2);
  if (r.rfind("AM-", 0) == 0) r = "ARGM-" + r.substr(3);
  if (r.rfind("ARG-", 0) == 0 && r.size() > 4) {
    if (r.size() == 5 && std::isdigit(static_cast<unsigned char>(r[4]))) {
      r = "ARG" + r.substr(4);
    } else {
      r = "ARGM-" + r.substr(4);
    }
  }
  return r;
}

const WhLexicon& WhLexicon::Default() {
  static const WhLexicon lexicon;
  return lexicon;
}

WhLexicon WhLexicon::FromJson(const nlohmann::json& object) {
  if (!object.is_object()) {
    throw std::invalid_argument("wh override file must be a JSON object");
  }
  WhLexicon lex;
  auto read = [](const nlohmann::json& section, auto& target, bool roles) {
    for (const auto& [key, value] : section.items()) {
      auto kind = ParseWhKind(value.template get<std::string>());
      if (!kind || *kind == WhKind::kWhichX) {
        throw std::invalid_argument("wh override '" + key +
                                    "': unsupported kind " + value.dump());
      }
      target[roles ? NormalizeRole(key) : Upper(key)] = *kind;
    }
  };
  for (const auto& [key, value] : object.items()) {
    if (key == "roles") {
      read(value, lex.roles_, true);
    } else if (key == "labels") {
      read(value, lex.labels_, false);
    } else {
      throw std::invalid_argument("wh override file: unexpected key '" + key + "'");
    }
  }
  return lex;
}

WhLexicon WhLexicon::FromFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open wh override file " + path);
  return FromJson(nlohmann::json::parse(in));
}

std::optional<WhKind> WhLexicon::RoleOverride(std::string_view role) const {
  auto it = roles_.find(role);
  if (it == roles_.end()) return std::nullopt;
  return it->second;
}

std::optional<WhKind> WhLexicon::LabelOverride(std::string_view label) const {
  auto it = labels_.find(label);
  if (it == labels_.end()) return std::nullopt;
  return it->second;
}

int SpanHead(const AnnotatedSentence& s, int start, int end) {
  if (s.dep_edges.size() != s.tokens.size()) return end - 1;
  for (int i = end - 1; i >= start; --i) {
    const DepEdge* e = s.EdgeOf(i);
    if (e == nullptr) continue;
    if (e->head < start || e->head >= end) return i;
  }
  return end - 1;
}

WhPhrase IdentifyWhWord(const SrlArgument& arg, const AnnotatedSentence& s,
                        const HeuristicConfig& cfg) {
  const std::string role = NormalizeRole(arg.role);
  if (cfg.skip_roles.contains(role)) {
    throw QgError(QgError::Code::kNoWhWord, "role " + role + " is skipped");
  }
  const WhLexicon& lexicon = cfg.wh();
  if (auto kind = lexicon.RoleOverride(role)) return DefaultPhrase(*kind);
  if (auto kind = ModifierKind(role)) return DefaultPhrase(*kind);

  // An entity covers the argument when it spans enough of it or contains its
  // syntactic head ("u2 's lead singer bono").
  const int head = SpanHead(s, arg.start, arg.end);
  std::optional<EntityOverlap> chosen;
  for (const auto& overlap : EntityLabelsInSpan(s, arg.start, arg.end)) {
    bool holds_head = head >= overlap.span.start && head < overlap.span.end;
    if (holds_head) {
      chosen = overlap;
      break;
    }
    if (overlap.coverage + 1e-12 < cfg.entity_coverage_min) continue;
    if (!chosen || overlap.coverage > chosen->coverage) chosen = overlap;
  }
  if (!chosen) return DefaultPhrase(WhKind::kWhat);

  const NerSpan& entity = chosen->span;
  const std::string label = Upper(entity.label);
  if (auto kind = lexicon.LabelOverride(label)) return DefaultPhrase(*kind);

  WhKind kind = WhKind::kWhat;
  if (label == "PERSON" || label == "PER") {
    kind = WhKind::kWho;
  } else if (label == "DATE" || label == "TIME") {
    kind = WhKind::kWhen;
  } else if (label == "MONEY") {
    kind = WhKind::kHowMuch;
  } else if (label == "CARDINAL" || label == "QUANTITY" || label == "PERCENT") {
    if (entity.start == arg.start) {
      WhPhrase phrase = DefaultPhrase(WhKind::kHowMany);
      for (int i = entity.end; i < arg.end; ++i) {
        phrase.tokens.push_back(ToLower(s.tokens[i].surface));
      }
      return phrase;
    }
  } else if ((label == "GPE" || label == "LOC" || label == "FAC") &&
             CoreRoleNumber(role) >= 2) {
    kind = WhKind::kWhere;
  }

  const bool nameable = label == "PERSON" || label == "PER" || label == "ORG" ||
                        label == "GPE" || label == "NORP";
  if (cfg.ner_wh && nameable && kind != WhKind::kWhere &&
      entity.end == arg.end) {
    int j = entity.start - 1;
    while (j >= arg.start && !InsideAnyEntity(s, j) &&
           IsNominalPos(s.tokens[j].pos)) {
      --j;
    }
    // Only a determiner may precede the descriptor; anything else (a
    // possessor, a clause) would be lost from the question.
    bool clean_prefix = j < arg.start;
    if (j == arg.start) {
      std::string w = ToLower(s.tokens[j].surface);
      clean_prefix = w == "the" || w == "a" || w == "an";
    }
    if (j + 1 < entity.start && clean_prefix) {
      WhPhrase phrase{{"which"}, WhKind::kWhichX};
      for (int i = j + 1; i < entity.start; ++i) {
        phrase.tokens.push_back(ToLower(s.tokens[i].surface));
      }
      return phrase;
    }
  }
  return DefaultPhrase(kind);
}

}  // namespace sumqg

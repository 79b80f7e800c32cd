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

#include "sumqg/config.h"

#include <stdexcept>

#include "sumqg/verb_morph.h"
#include "sumqg/wh_lexicon.h"

namespace sumqg {

const WhLexicon& HeuristicConfig::wh() const {
  return wh_lexicon ? *wh_lexicon : WhLexicon::Default();
}

const VerbLexicon& HeuristicConfig::verbs() const {
  return verb_lexicon ? *verb_lexicon : VerbLexicon::Default();
}

std::set<std::string> HeuristicConfig::DefaultSkipRoles() {
  return {"ARGM-MOD", "ARGM-NEG", "ARGM-DIS",
          "ARGM-ADV", "ARGM-LVB", "ARGM-REC"};
}

void ValidateConfig(const HeuristicConfig& cfg) {
  if (cfg.decomp_verb && !cfg.wh_movement) {
    throw std::invalid_argument("decomp_verb requires wh_movement");
  }
  if (cfg.entity_coverage_min <= 0.0 || cfg.entity_coverage_min > 1.0) {
    throw std::invalid_argument("entity_coverage_min must be in (0, 1]");
  }
  if (cfg.min_answer_overlap < 0.0 || cfg.min_answer_overlap > 1.0) {
    throw std::invalid_argument("min_answer_overlap must be in [0, 1]");
  }
  if (cfg.max_article_tokens < 1 || cfg.min_question_tokens < 0 ||
      cfg.min_paragraph_words < 0 ||
      cfg.max_paragraph_words < cfg.min_paragraph_words ||
      cfg.min_paragraph_chars < 0) {
    throw std::invalid_argument("filter thresholds out of range");
  }
}

const std::vector<std::string>& LadderNames() {
  static const std::vector<std::string> names = {
      "naive", "summary", "+main-verb", "+wh-move", "+decomp", "full"};
  return names;
}

HeuristicConfig LadderPreset(std::string_view name) {
  HeuristicConfig cfg;
  cfg.frame_selection = FrameSelection::kAllFrames;
  cfg.wh_movement = false;
  cfg.decomp_verb = false;
  cfg.ner_wh = false;
  cfg.ladder_name = std::string(name);
  if (name == "naive") {
    cfg.mode = PassageMode::kNaive;
    return cfg;
  }
  cfg.mode = PassageMode::kSummary;
  if (name == "summary") return cfg;
  cfg.frame_selection = FrameSelection::kRootOnly;
  if (name == "+main-verb") return cfg;
  cfg.wh_movement = true;
  if (name == "+wh-move") return cfg;
  cfg.decomp_verb = true;
  if (name == "+decomp") return cfg;
  cfg.ner_wh = true;
  if (name == "full") return cfg;
  throw std::invalid_argument("unknown ladder preset '" + std::string(name) +
                              "'");
}

namespace {

template <typename T>
void Read(const nlohmann::json& object, const char* key, T& target) {
  if (object.contains(key)) target = object.at(key).get<T>();
}

}  // namespace

void ApplyConfigJson(const nlohmann::json& object, HeuristicConfig& cfg) {
  if (!object.is_object()) {
    throw std::invalid_argument("config must be a JSON object");
  }
  if (object.contains("ladder")) {
    HeuristicConfig preset = LadderPreset(object.at("ladder").get<std::string>());
    cfg.mode = preset.mode;
    cfg.frame_selection = preset.frame_selection;
    cfg.wh_movement = preset.wh_movement;
    cfg.decomp_verb = preset.decomp_verb;
    cfg.ner_wh = preset.ner_wh;
    cfg.ladder_name = preset.ladder_name;
  }
  if (object.contains("mode")) {
    auto mode = object.at("mode").get<std::string>();
    if (mode == "naive") {
      cfg.mode = PassageMode::kNaive;
    } else if (mode == "summary") {
      cfg.mode = PassageMode::kSummary;
    } else {
      throw std::invalid_argument("unknown mode '" + mode + "'");
    }
  }
  if (object.contains("frame_selection")) {
    auto sel = object.at("frame_selection").get<std::string>();
    if (sel == "root_only") {
      cfg.frame_selection = FrameSelection::kRootOnly;
    } else if (sel == "all_frames") {
      cfg.frame_selection = FrameSelection::kAllFrames;
    } else {
      throw std::invalid_argument("unknown frame_selection '" + sel + "'");
    }
  }
  Read(object, "wh_movement", cfg.wh_movement);
  Read(object, "decomp_verb", cfg.decomp_verb);
  Read(object, "ner_wh", cfg.ner_wh);
  Read(object, "entity_coverage_min", cfg.entity_coverage_min);
  Read(object, "max_article_tokens", cfg.max_article_tokens);
  Read(object, "min_answer_overlap", cfg.min_answer_overlap);
  Read(object, "min_question_tokens", cfg.min_question_tokens);
  Read(object, "min_paragraph_words", cfg.min_paragraph_words);
  Read(object, "max_paragraph_words", cfg.max_paragraph_words);
  Read(object, "min_paragraph_chars", cfg.min_paragraph_chars);
  if (object.contains("skip_roles")) {
    cfg.skip_roles.clear();
    for (const auto& role : object.at("skip_roles")) {
      cfg.skip_roles.insert(NormalizeRole(role.get<std::string>()));
    }
  }
  if (object.contains("wh_overrides")) {
    cfg.wh_lexicon = std::make_shared<const WhLexicon>(
        WhLexicon::FromFile(object.at("wh_overrides").get<std::string>()));
  }
  if (object.contains("irregular_overrides")) {
    cfg.verb_lexicon = std::make_shared<const VerbLexicon>(VerbLexicon::FromFile(
        object.at("irregular_overrides").get<std::string>()));
  }
}

}  // namespace sumqg

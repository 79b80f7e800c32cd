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

#ifndef SUMQG_CONFIG_H_
#define SUMQG_CONFIG_H_

#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace sumqg {

class WhLexicon;
class VerbLexicon;

// Which text serves as the passage of a QG triple: the summary sentence
// itself (naive) or the article it summarizes.
enum class PassageMode { kNaive, kSummary };

enum class FrameSelection { kRootOnly, kAllFrames };

// Active heuristics plus every filter threshold. The heuristic switches form a
// cumulative ladder: decomp_verb requires wh_movement.
struct HeuristicConfig {
  PassageMode mode = PassageMode::kSummary;
  FrameSelection frame_selection = FrameSelection::kRootOnly;
  bool wh_movement = true;
  bool decomp_verb = true;
  bool ner_wh = true;

  double entity_coverage_min = 0.5;
  std::set<std::string> skip_roles = DefaultSkipRoles();

  // QG triple filters.
  int max_article_tokens = 480;
  double min_answer_overlap = 0.55;
  int min_question_tokens = 5;

  // Synthetic QA filters.
  int min_paragraph_words = 20;
  int max_paragraph_words = 480;
  int min_paragraph_chars = 500;

  std::string ladder_name = "full";

  // Null means the compiled-in tables.
  std::shared_ptr<const WhLexicon> wh_lexicon;
  std::shared_ptr<const VerbLexicon> verb_lexicon;

  const WhLexicon& wh() const;
  const VerbLexicon& verbs() const;

  static std::set<std::string> DefaultSkipRoles();
};

// Throws std::invalid_argument on an inconsistent configuration.
void ValidateConfig(const HeuristicConfig& cfg);

// The six ladder presets: naive, summary, +main-verb, +wh-move, +decomp,
// full. Throws std::invalid_argument on an unknown name.
HeuristicConfig LadderPreset(std::string_view name);
const std::vector<std::string>& LadderNames();

// Applies the keys present in |object| on top of |cfg|. Lexicon override
// paths are loaded from disk.
void ApplyConfigJson(const nlohmann::json& object, HeuristicConfig& cfg);

}  // namespace sumqg

#endif  // SUMQG_CONFIG_H_

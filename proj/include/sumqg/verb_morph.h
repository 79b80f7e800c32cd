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

#ifndef SUMQG_VERB_MORPH_H_
#define SUMQG_VERB_MORPH_H_

#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "json.hpp"
#include "sumqg/annotation.h"

namespace sumqg {

// Irregular verb forms, keyed by lowercase surface.
class VerbLexicon {
 public:
  struct Entry {
    std::string base;
    bool past = false;            // simple past or past participle
    bool third_singular = false;  // has, does, goes, is
    bool is_base = false;         // surface is itself a base form
  };

  // ~200 common English irregular verbs plus be/have/do.
  static const VerbLexicon& Default();

  // Default table with surface -> base overrides from a JSON object. Override
  // surfaces that differ from their base are treated as past forms.
  static VerbLexicon WithOverrides(const nlohmann::json& overrides);
  static VerbLexicon FromFile(const std::string& path);

  const Entry* Find(std::string_view surface) const;
  // First listed simple-past form of an irregular base.
  const std::string* PastOf(std::string_view base) const;
  size_t size() const { return entries_.size(); }
  std::vector<std::string> Bases() const;

 private:
  std::unordered_map<std::string, Entry> entries_;
  std::unordered_map<std::string, std::string> past_of_;
};

enum class VerbTense { kPast, kPres3sg, kPresOther, kAlreadyDecomposed };

std::string_view VerbTenseName(VerbTense tense);

// Verb group split for question formation.
struct VerbDecomposition {
  std::vector<std::string> aux_tokens;   // fronted auxiliary, lowercase
  std::vector<std::string> main_tokens;  // verb-group tokens left in place
  VerbTense tense = VerbTense::kPresOther;
  // Sentence index of the auxiliary copied out of the sentence. Unset when
  // the auxiliary was synthesized (do-support).
  std::optional<int> fronted_aux_index;
  int verb_index = 0;
};

bool IsVerbalPos(std::string_view pos);
bool IsAuxiliaryPos(std::string_view pos);
bool IsAuxiliaryLabel(std::string_view label);

// Lowercase forms of be, have, do and the modals.
bool IsAuxiliaryWord(std::string_view word);

// Lemma when given; else irregular lookup; else suffix rules.
std::string BaseForm(std::string_view surface,
                     std::optional<std::string_view> lemma = std::nullopt,
                     const VerbLexicon& lexicon = VerbLexicon::Default());

// True when |word| looks like an inflected (past or -s) verb form.
bool LooksInflected(std::string_view word,
                    const VerbLexicon& lexicon = VerbLexicon::Default());

// Re-inflects a base form: simple past for kPast, -s form for kPres3sg,
// the base itself otherwise.
std::string Inflect(std::string_view base, VerbTense tense,
                    const VerbLexicon& lexicon = VerbLexicon::Default());

// Throws QgError(kNotAVerb) when the predicate token is not verbal.
VerbDecomposition DecompVerb(const AnnotatedSentence& sentence, int verb_index,
                             const VerbLexicon& lexicon = VerbLexicon::Default());

}  // namespace sumqg

#endif  // SUMQG_VERB_MORPH_H_

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

#include "sumqg/verb_morph.h"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include "sumqg/text.h"

namespace sumqg {

namespace {

// base past[/past] participle[/participle]
constexpr std::string_view kIrregularTable = R"(
arise arose arisen
awake awoke awoken
be was/were been
bear bore born/borne
beat beat beaten
become became become
begin began begun
bend bent bent
bet bet bet
bid bid bid
bind bound bound
bite bit bitten
bleed bled bled
blow blew blown
break broke broken
breed bred bred
bring brought brought
broadcast broadcast broadcast
build built built
burn burnt burnt
burst burst burst
buy bought bought
cast cast cast
catch caught caught
choose chose chosen
cling clung clung
come came come
cost cost cost
creep crept crept
cut cut cut
deal dealt dealt
dig dug dug
dive dove dived
do did done
draw drew drawn
dream dreamt dreamt
drink drank drunk
drive drove driven
dwell dwelt dwelt
eat ate eaten
fall fell fallen
feed fed fed
feel felt felt
fight fought fought
find found found
flee fled fled
fling flung flung
fly flew flown
forbid forbade forbidden
forecast forecast forecast
foresee foresaw foreseen
forget forgot forgotten
forgive forgave forgiven
freeze froze frozen
get got gotten/got
give gave given
go went gone
grind ground ground
grow grew grown
hang hung hung
have had had
hear heard heard
hide hid hidden
hit hit hit
hold held held
hurt hurt hurt
keep kept kept
kneel knelt knelt
know knew known
lay laid laid
lead led led
lean leant leant
leap leapt leapt
learn learnt learnt
leave left left
lend lent lent
let let let
light lit lit
lose lost lost
make made made
mean meant meant
meet met met
mislead misled misled
mistake mistook mistaken
overcome overcame overcome
overhear overheard overheard
override overrode overridden
overrun overran overrun
oversee oversaw overseen
overtake overtook overtaken
overthrow overthrew overthrown
pay paid paid
plead pled pled
prove proved proven
put put put
quit quit quit
read read read
rebuild rebuilt rebuilt
redo redid redone
rethink rethought rethought
rewrite rewrote rewritten
rid rid rid
ride rode ridden
ring rang rung
rise rose risen
run ran run
say said said
see saw seen
seek sought sought
sell sold sold
send sent sent
set set set
sew sewed sewn
shake shook shaken
shed shed shed
shine shone shone
shoot shot shot
show showed shown
shrink shrank shrunk
shut shut shut
sing sang sung
sink sank sunk
sit sat sat
slay slew slain
sleep slept slept
slide slid slid
sling slung slung
slit slit slit
smell smelt smelt
speak spoke spoken
speed sped sped
spell spelt spelt
spend spent spent
spill spilt spilt
spin spun spun
split split split
spoil spoilt spoilt
spread spread spread
spring sprang sprung
stand stood stood
steal stole stolen
stick stuck stuck
sting stung stung
stink stank stunk
stride strode stridden
strike struck struck
string strung strung
strive strove striven
swear swore sworn
sweep swept swept
swell swelled swollen
swim swam swum
swing swung swung
take took taken
teach taught taught
tear tore torn
tell told told
think thought thought
throw threw thrown
thrust thrust thrust
tread trod trodden
undergo underwent undergone
understand understood understood
undertake undertook undertaken
undo undid undone
upset upset upset
uphold upheld upheld
wake woke woken
wear wore worn
weave wove woven
wed wed wed
weep wept wept
win won won
withdraw withdrew withdrawn
withhold withheld withheld
withstand withstood withstood
wring wrung wrung
write wrote written
outdo outdid outdone
outgrow outgrew outgrown
outrun outran outrun
outsell outsold outsold
overdo overdid overdone
overeat overate overeaten
overpay overpaid overpaid
oversleep overslept overslept
partake partook partaken
proofread proofread proofread
repay repaid repaid
resell resold resold
reset reset reset
retake retook retaken
retell retold retold
sublet sublet sublet
unwind unwound unwound
mislay mislaid mislaid
misread misread misread
misunderstand misunderstood misunderstood
offset offset offset
input input input
forsake forsook forsaken
behold beheld beheld
beset beset beset
bust bust bust
clothe clad clad
hew hewed hewn
knit knit knit
shear sheared shorn
slink slunk slunk
sow sowed sown
spit spat spat
sunburn sunburnt sunburnt
telecast telecast telecast
thrive throve thriven
typeset typeset typeset
waylay waylaid waylaid
wet wet wet
abide abode abode
)";

// Stems (after removing -ed) whose base keeps a silent e that the suffix
// rules below cannot recover.
const std::unordered_set<std::string_view> kSilentEStems = {
    "creat", "invit",  "unit",   "excit",  "recit",   "ignit",  "incit",
    "expedit", "ignor", "explor", "restor", "ador",   "implor", "deplor",
    "persuad", "guid",  "tast",   "wast",   "past",   "bast",   "breath",
    "bath",  "sooth",  "loath",  "interfer", "adher", "exhal",  "inhal",
    "seeth", "coher",
};

// Stems that never take e and never undouble.
const std::unordered_set<std::string_view> kPlainStems = {
    "focus", "bias", "canvas", "alias", "add", "ebb", "err",
    "egg",   "purr", "odd",    "embed", "shred", "bed", "sled",
};

// Polysyllables stressed on the final syllable: the final consonant doubles.
const std::unordered_set<std::string_view> kStressFinal = {
    "admit",  "commit", "permit", "submit",   "omit",    "emit",  "regret",
    "control", "patrol", "occur",  "recur",    "incur",   "refer", "prefer",
    "confer", "defer",  "infer",  "transfer", "deter",   "equip", "compel",
    "expel",  "propel", "repel",  "rebel",    "upset",   "forbid", "begin",
};

// Bases ending in -ee whose past ends in -eed.
const std::unordered_set<std::string_view> kEeBases = {
    "agree", "disagree", "free", "guarantee", "referee", "decree",
};

const std::unordered_set<std::string_view> kModals = {
    "will", "would", "can", "could", "shall", "should", "may", "might", "must",
    "'ll",  "'d",    "ca",  "wo",
};

bool EndsWith(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() &&
         s.substr(s.size() - suffix.size()) == suffix;
}

bool IsVowelAt(std::string_view s, size_t i) {
  char c = s[i];
  if (c == 'a' || c == 'e' || c == 'i' || c == 'o') return true;
  if (c == 'u') return i == 0 || s[i - 1] != 'q';
  if (c == 'y') return i > 0 && !IsVowelAt(s, i - 1);
  return false;
}

bool IsConsonantAt(std::string_view s, size_t i) {
  return s[i] >= 'a' && s[i] <= 'z' && !IsVowelAt(s, i);
}

int Syllables(std::string_view s) {
  int groups = 0;
  bool in_vowel = false;
  for (size_t i = 0; i < s.size(); ++i) {
    bool v = IsVowelAt(s, i);
    if (v && !in_vowel) ++groups;
    in_vowel = v;
  }
  return groups;
}

bool HasVowel(std::string_view s) { return Syllables(s) > 0; }

// Recovers a base from the stem left after stripping -ed.
std::string RestoreStem(std::string stem) {
  if (kSilentEStems.contains(stem)) return stem + "e";
  if (kPlainStems.contains(stem)) return stem;
  const size_t n = stem.size();
  const char last = stem[n - 1];
  const char prev = n >= 2 ? stem[n - 2] : '\0';

  if (n >= 2 && last == prev && IsConsonantAt(stem, n - 1)) {
    if (last == 's' || last == 'f' || last == 'z') return stem;
    if (last == 'l') {
      if (Syllables(stem) >= 2 && (EndsWith(stem, "ell") || EndsWith(stem, "oll"))) {
        stem.pop_back();
      }
      return stem;
    }
    stem.pop_back();
    return stem;
  }
  switch (last) {
    case 'e':
    case 'c':
    case 'v':
    case 'u':
    case 'z':
    case 's':
      return stem + "e";
    case 'g':
      return EndsWith(stem, "ong") ? stem : stem + "e";
    case 'w':
    case 'x':
    case 'y':
      return stem;
    default:
      break;
  }
  if (last == 'l' && n >= 2 && IsConsonantAt(stem, n - 2) && prev != 'r' &&
      prev != 'w') {
    return stem + "e";  // handle, settle, struggle
  }
  bool single_vowel = n >= 2 && IsConsonantAt(stem, n - 1) &&
                      IsVowelAt(stem, n - 2) &&
                      (n < 3 || !IsVowelAt(stem, n - 3));
  // -iate / -uate verbs: negotiate, evaluate
  bool vowel_at = n >= 3 && last == 't' && prev == 'a' &&
                  (stem[n - 3] == 'i' || stem[n - 3] == 'u');
  if (!single_vowel && !vowel_at) return stem;
  if (Syllables(stem) == 1) return stem + "e";  // hope, like, state
  switch (last) {
    case 'd':
    case 'b':
    case 'm':
    case 'k':
      return stem + "e";
    case 'r':
      return (prev == 'a' || prev == 'i' || prev == 'u') ? stem + "e" : stem;
    case 't':
      if (prev == 'a' || prev == 'u' || prev == 'o') return stem + "e";
      if (prev == 'e' && n >= 3 && (stem[n - 3] == 'l' || stem[n - 3] == 'p')) {
        return stem + "e";
      }
      return stem;
    case 'n':
      return (prev == 'i' && n >= 3 && IsConsonantAt(stem, n - 3)) ? stem + "e"
                                                                    : stem;
    case 'p':
      return prev == 'a' ? stem + "e" : stem;
    case 'l':
      return (prev == 'i' || prev == 'u') ? stem + "e" : stem;
    default:
      return stem;
  }
}

std::string RegularBase(const std::string& w) {
  const size_t n = w.size();
  if (n <= 2 || kPlainStems.contains(w)) return w;
  if (EndsWith(w, "ies") || EndsWith(w, "ied")) {
    if (n <= 4) return w.substr(0, n - 1);  // dies, tied
    return w.substr(0, n - 3) + "y";
  }
  if (EndsWith(w, "eed")) {
    std::string shorter = w.substr(0, n - 1);
    return kEeBases.contains(shorter) ? shorter : w;
  }
  if (EndsWith(w, "ed")) {
    std::string stem = w.substr(0, n - 2);
    if (stem.size() < 2 || !HasVowel(stem)) return w;
    return RestoreStem(std::move(stem));
  }
  if (EndsWith(w, "s")) {
    if (EndsWith(w, "ss") || EndsWith(w, "us") || EndsWith(w, "is")) return w;
    if (n > 4 && kPlainStems.contains(w.substr(0, n - 2))) {
      return w.substr(0, n - 2);  // focuses, biases
    }
    if (EndsWith(w, "sses") || EndsWith(w, "shes") || EndsWith(w, "ches") ||
        EndsWith(w, "xes") || EndsWith(w, "zzes") || EndsWith(w, "oes")) {
      return w.substr(0, n - 2);
    }
    return w.substr(0, n - 1);
  }
  return w;
}

void AddForms(std::unordered_map<std::string, VerbLexicon::Entry>& entries,
              const std::string& base, std::string_view forms, bool past,
              bool third_singular) {
  std::stringstream ss{std::string(forms)};
  std::string form;
  while (std::getline(ss, form, '/')) {
    auto it = entries.find(form);
    if (it == entries.end()) {
      entries[form] = {base, past, third_singular, false};
    } else if (it->second.base == base) {
      it->second.past |= past;
      it->second.third_singular |= third_singular;
    }
    // A form that is another verb's base keeps its base reading.
  }
}

bool IsSibilantEnding(std::string_view w) {
  return EndsWith(w, "s") || EndsWith(w, "x") || EndsWith(w, "z") ||
         EndsWith(w, "ch") || EndsWith(w, "sh");
}

bool DoublesFinal(std::string_view w) {
  if (kStressFinal.contains(w)) return true;
  const size_t n = w.size();
  if (n < 3 || Syllables(w) != 1) return false;
  const char last = w[n - 1];
  if (last == 'w' || last == 'x' || last == 'y') return false;
  return IsConsonantAt(w, n - 1) && IsVowelAt(w, n - 2) && IsConsonantAt(w, n - 3);
}

}  // namespace

const VerbLexicon& VerbLexicon::Default() {
  static const VerbLexicon* lexicon = [] {
    auto* lex = new VerbLexicon();
    std::stringstream table{std::string(kIrregularTable)};
    std::string line;
    std::vector<std::vector<std::string>> rows;
    while (std::getline(table, line)) {
      auto fields = SplitWhitespace(line);
      if (fields.size() == 3) rows.push_back(std::move(fields));
    }
    // Bases first so that base readings win over colliding past forms.
    for (const auto& row : rows) {
      lex->entries_[row[0]] = {row[0], false, false, true};
    }
    for (const auto& row : rows) {
      lex->past_of_.emplace(row[0], row[1].substr(0, row[1].find('/')));
      AddForms(lex->entries_, row[0], row[1], true, false);
      AddForms(lex->entries_, row[0], row[2], true, false);
    }
    AddForms(lex->entries_, "have", "has", false, true);
    AddForms(lex->entries_, "do", "does", false, true);
    AddForms(lex->entries_, "go", "goes", false, true);
    AddForms(lex->entries_, "be", "is", false, true);
    AddForms(lex->entries_, "be", "am/are/'m/'re", false, false);
    AddForms(lex->entries_, "be", "'s", false, true);
    return lex;
  }();
  return *lexicon;
}

VerbLexicon VerbLexicon::WithOverrides(const nlohmann::json& overrides) {
  if (!overrides.is_object()) {
    throw std::invalid_argument("irregular override file must be a JSON object");
  }
  VerbLexicon lex = Default();
  for (const auto& [surface, base] : overrides.items()) {
    std::string s = ToLower(surface);
    std::string b = ToLower(base.get<std::string>());
    lex.entries_[s] = {b, s != b, false, s == b};
    if (s != b) lex.past_of_[b] = s;
  }
  return lex;
}

VerbLexicon VerbLexicon::FromFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open irregular override file " + path);
  return WithOverrides(nlohmann::json::parse(in));
}

const VerbLexicon::Entry* VerbLexicon::Find(std::string_view surface) const {
  auto it = entries_.find(std::string(surface));
  return it == entries_.end() ? nullptr : &it->second;
}

const std::string* VerbLexicon::PastOf(std::string_view base) const {
  auto it = past_of_.find(std::string(base));
  return it == past_of_.end() ? nullptr : &it->second;
}

std::vector<std::string> VerbLexicon::Bases() const {
  std::vector<std::string> out;
  for (const auto& [surface, entry] : entries_) {
    if (entry.is_base) out.push_back(surface);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string Inflect(std::string_view base_view, VerbTense tense,
                    const VerbLexicon& lexicon) {
  const std::string base = ToLower(base_view);
  const size_t n = base.size();
  if (n == 0) return base;
  const bool consonant_y = n >= 2 && base[n - 1] == 'y' && IsConsonantAt(base, n - 2);
  if (tense == VerbTense::kPast) {
    if (const std::string* past = lexicon.PastOf(base)) return *past;
    if (base == "be") return "was";
    if (base[n - 1] == 'e') return base + "d";
    if (consonant_y) return base.substr(0, n - 1) + "ied";
    if (DoublesFinal(base)) return base + base[n - 1] + "ed";
    return base + "ed";
  }
  if (tense == VerbTense::kPres3sg) {
    if (base == "be") return "is";
    if (base == "have") return "has";
    if (IsSibilantEnding(base)) return base + "es";
    if (consonant_y) return base.substr(0, n - 1) + "ies";
    if (base[n - 1] == 'o' && n >= 2 && IsConsonantAt(base, n - 2)) return base + "es";
    return base + "s";
  }
  return base;
}

std::string_view VerbTenseName(VerbTense tense) {
  switch (tense) {
    case VerbTense::kPast:
      return "PAST";
    case VerbTense::kPres3sg:
      return "PRES_3SG";
    case VerbTense::kPresOther:
      return "PRES_OTHER";
    case VerbTense::kAlreadyDecomposed:
      return "ALREADY_DECOMPOSED";
  }
  return "UNKNOWN";
}

bool IsVerbalPos(std::string_view pos) {
  return pos == "VERB" || pos == "AUX" || pos == "MD" ||
         pos.substr(0, 2) == "VB";
}

bool IsAuxiliaryPos(std::string_view pos) { return pos == "AUX" || pos == "MD"; }

bool IsAuxiliaryLabel(std::string_view label) {
  std::string l = ToLower(label);
  return l == "aux" || l == "auxpass" || l == "aux:pass" || l == "cop";
}

bool IsAuxiliaryWord(std::string_view word) {
  static const std::unordered_set<std::string_view> kAux = {
      "be",   "am",   "is",    "are",  "was",    "were", "been", "being",
      "'m",   "'re",  "'s",    "have", "has",    "had",  "having", "'ve",
      "do",   "does", "did",
  };
  std::string w = ToLower(word);
  return kAux.contains(w) || kModals.contains(w);
}

std::string BaseForm(std::string_view surface,
                     std::optional<std::string_view> lemma,
                     const VerbLexicon& lexicon) {
  if (lemma && !lemma->empty()) return ToLower(*lemma);
  std::string w = ToLower(surface);
  if (const auto* entry = lexicon.Find(w)) return entry->base;
  if (kModals.contains(w)) return w;
  return RegularBase(w);
}

bool LooksInflected(std::string_view word, const VerbLexicon& lexicon) {
  std::string w = ToLower(word);
  if (const auto* entry = lexicon.Find(w)) {
    return (entry->past || entry->third_singular) && !entry->is_base;
  }
  return RegularBase(w) != w;
}

namespace {

bool IsSubjectLabel(std::string_view label) {
  std::string l = ToLower(label);
  return l == "nsubj" || l == "nsubjpass" || l == "nsubj:pass" ||
         l == "csubj" || l == "csubjpass" || l == "expl";
}

// Whether the grammatical subject of |verb| is third-person singular.
std::optional<bool> SubjectIsThirdSingular(const AnnotatedSentence& s,
                                           int verb) {
  for (const auto& e : s.dep_edges) {
    if (e.head != verb || !IsSubjectLabel(e.label)) continue;
    const Token& t = s.tokens[e.dependent];
    std::string w = ToLower(t.surface);
    if (w == "he" || w == "she" || w == "it") return true;
    if (w == "i" || w == "you" || w == "we" || w == "they") return false;
    if (t.pos == "NNS" || t.pos == "NNPS") return false;
    if (t.pos == "NN" || t.pos == "NNP" || t.pos == "PROPN") return true;
    if (t.pos == "NOUN") return !EndsWith(w, "s");
    return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace

VerbDecomposition DecompVerb(const AnnotatedSentence& s, int verb_index,
                             const VerbLexicon& lexicon) {
  if (verb_index < 0 || verb_index >= s.size()) {
    throw QgError(QgError::Code::kNotAVerb, "verb index out of range");
  }
  const Token& verb = s.tokens[verb_index];
  if (!IsVerbalPos(verb.pos)) {
    throw QgError(QgError::Code::kNotAVerb,
                  "token '" + verb.surface + "' has non-verbal POS " + verb.pos);
  }
  VerbDecomposition d;
  d.verb_index = verb_index;

  std::vector<int> auxes;
  if (!s.dep_edges.empty()) {
    for (const auto& e : s.dep_edges) {
      if (e.head != verb_index || e.dependent >= verb_index) continue;
      const Token& t = s.tokens[e.dependent];
      if (IsAuxiliaryLabel(e.label) ||
          (IsAuxiliaryPos(t.pos) && IsAuxiliaryWord(t.surface))) {
        auxes.push_back(e.dependent);
      }
    }
  } else {
    for (int j = verb_index - 1; j >= 0; --j) {
      const Token& t = s.tokens[j];
      std::string w = ToLower(t.surface);
      if (IsAuxiliaryPos(t.pos) || (t.pos.substr(0, 2) == "VB" && IsAuxiliaryWord(w))) {
        auxes.push_back(j);
      } else if (w == "not" || w == "n't" || t.pos == "ADV" || t.pos == "PART" ||
                 t.pos == "RB") {
        continue;
      } else {
        break;
      }
    }
  }
  std::sort(auxes.begin(), auxes.end());

  if (!auxes.empty()) {
    d.tense = VerbTense::kAlreadyDecomposed;
    d.fronted_aux_index = auxes.front();
    d.aux_tokens = {ToLower(s.tokens[auxes.front()].surface)};
    for (size_t k = 1; k < auxes.size(); ++k) {
      d.main_tokens.push_back(ToLower(s.tokens[auxes[k]].surface));
    }
    d.main_tokens.push_back(ToLower(verb.surface));
    return d;
  }

  const std::string lower = ToLower(verb.surface);
  std::optional<std::string_view> lemma;
  if (verb.lemma) lemma = *verb.lemma;
  const std::string base = BaseForm(verb.surface, lemma, lexicon);

  // Copula or modal acting as the predicate: it fronts itself.
  if (base == "be" || kModals.contains(lower)) {
    d.tense = VerbTense::kAlreadyDecomposed;
    d.fronted_aux_index = verb_index;
    d.aux_tokens = {lower};
    return d;
  }

  const std::string& tag = verb.pos;
  if (tag == "VBD" || tag == "VBN") {
    d.tense = VerbTense::kPast;
  } else if (tag == "VBZ") {
    d.tense = VerbTense::kPres3sg;
  } else if (tag == "VBP" || tag == "VB") {
    d.tense = VerbTense::kPresOther;
  } else if (const auto* entry = lexicon.Find(lower)) {
    if (entry->third_singular) {
      d.tense = VerbTense::kPres3sg;
    } else if (entry->past && entry->is_base) {
      // put, cut, set: a singular subject without -s means past.
      d.tense = SubjectIsThirdSingular(s, verb_index).value_or(false)
                    ? VerbTense::kPast
                    : VerbTense::kPresOther;
    } else if (entry->past) {
      d.tense = VerbTense::kPast;
    } else {
      d.tense = VerbTense::kPresOther;
    }
  } else if (lower == base) {
    d.tense = VerbTense::kPresOther;
  } else if (EndsWith(lower, "ed")) {
    d.tense = VerbTense::kPast;
  } else if (EndsWith(lower, "s")) {
    d.tense = VerbTense::kPres3sg;
  } else {
    d.tense = VerbTense::kPresOther;
  }

  switch (d.tense) {
    case VerbTense::kPast:
      d.aux_tokens = {"did"};
      break;
    case VerbTense::kPres3sg:
      d.aux_tokens = {"does"};
      break;
    default:
      d.aux_tokens = {"do"};
      break;
  }
  d.main_tokens = {base};
  return d;
}

}  // namespace sumqg

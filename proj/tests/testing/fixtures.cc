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

#include "testing/fixtures.h"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "sumqg/text.h"

namespace sumqg::testing {

namespace {

std::string IntraLabel(std::string_view pos) {
  if (pos == "DET") return "det";
  if (pos == "ADP" || pos == "PART") return "case";
  if (pos == "ADJ") return "amod";
  if (pos == "NUM") return "nummod";
  if (pos == "SCONJ") return "mark";
  return "compound";
}

}  // namespace

SentenceBuilder::SentenceBuilder(std::string id) { sentence_.sentence_id = std::move(id); }

int SentenceBuilder::Append(std::string_view words, std::string_view pos) {
  auto w = SplitWhitespace(words);
  auto p = SplitWhitespace(pos);
  if (w.size() != p.size()) throw std::logic_error("word/pos count mismatch");
  const int start = sentence_.size();
  for (size_t i = 0; i < w.size(); ++i) {
    sentence_.tokens.push_back({start + static_cast<int>(i), w[i], std::nullopt, p[i]});
  }
  return start;
}

SentenceBuilder& SentenceBuilder::Arg(std::string role, std::string_view words,
                                      std::string_view pos, std::string dep,
                                      std::vector<NerSpan> entities) {
  const int start = Append(words, pos);
  for (auto& e : entities) {
    sentence_.ner_spans.push_back({start + e.start, start + e.end, e.label});
  }
  phrases_.push_back({start, sentence_.size(), std::move(dep), std::move(role)});
  return *this;
}

SentenceBuilder& SentenceBuilder::Plain(std::string_view words, std::string_view pos,
                                        std::string dep) {
  const int start = Append(words, pos);
  phrases_.push_back({start, sentence_.size(), std::move(dep), ""});
  return *this;
}

SentenceBuilder& SentenceBuilder::Aux(std::string_view word, std::string label) {
  const int start = Append(word, "AUX");
  phrases_.push_back({start, start + 1, std::move(label), "", true});
  return *this;
}

SentenceBuilder& SentenceBuilder::Verb(std::string_view word, std::string pos) {
  verb_ = Append(word, pos);
  return *this;
}

SentenceBuilder& SentenceBuilder::WithoutDeps() {
  deps_ = false;
  return *this;
}

AnnotatedSentence SentenceBuilder::Build() const {
  if (verb_ < 0) throw std::logic_error("sentence has no verb");
  AnnotatedSentence s = sentence_;
  std::sort(s.ner_spans.begin(), s.ner_spans.end(),
            [](const NerSpan& a, const NerSpan& b) { return a.start < b.start; });
  SrlFrame frame{verb_, {}};
  std::vector<DepEdge> edges(s.tokens.size());
  edges[verb_] = {verb_, kRootHead, "root"};
  for (const auto& ph : phrases_) {
    const int head = ph.end - 1;
    edges[head] = {head, verb_, ph.dep};
    for (int i = ph.start; i < head; ++i) {
      edges[i] = {i, head, IntraLabel(s.tokens[i].pos)};
    }
    if (!ph.role.empty()) frame.arguments.push_back({ph.role, ph.start, ph.end});
  }
  if (deps_) s.dep_edges = std::move(edges);
  s.srl_frames.push_back(std::move(frame));
  ValidateAnnotation(s);
  return s;
}

AnnotatedSentence S1() {
  return SentenceBuilder("s1")
      .Arg("ARG0", "Stephen Hawking", "PROPN PROPN", "nsubj", {{0, 2, "PERSON"}})
      .Verb("announced")
      .Arg("ARG1", "the party", "DET NOUN", "dobj")
      .Arg("ARGM-TMP", "in the morning", "ADP DET NOUN", "obl")
      .Build();
}

AnnotatedSentence S2() {
  return SentenceBuilder("s2")
      .Arg("ARG0", "U2 's lead singer Bono", "PROPN PART NOUN NOUN PROPN", "nsubj",
           {{0, 1, "ORG"}, {4, 5, "PERSON"}})
      .Aux("has")
      .Verb("had")
      .Arg("ARG1", "emergency spinal surgery", "NOUN ADJ NOUN", "dobj")
      .Arg("ARGM-TMP", "after suffering an injury while preparing for tour dates",
           "SCONJ VERB DET NOUN SCONJ VERB ADP NOUN NOUN", "advcl")
      .Plain(".", "PUNCT", "punct")
      .Build();
}

AnnotatedSentence NbaSentence() {
  return SentenceBuilder("nba")
      .Arg("ARG0", "NBA player Michael Jordan", "PROPN NOUN PROPN PROPN", "nsubj",
           {{2, 4, "PERSON"}})
      .Verb("won")
      .Arg("ARG1", "the championship", "DET NOUN", "dobj")
      .Arg("ARGM-TMP", "in 1998", "ADP NUM", "obl", {{1, 2, "DATE"}})
      .Build();
}

std::vector<std::string> S1Article() {
  std::vector<std::string> out = SplitWhitespace(
      "Physicist Stephen Hawking told reporters in the morning that the party "
      "would mark the launch of a new research centre at the university .");
  const auto filler = SplitWhitespace(
      "Guests from several countries were expected to attend and organisers "
      "said tickets had sold out within hours of going on sale last week .");
  size_t i = 0;
  while (out.size() < 100) out.push_back(filler[i++ % filler.size()]);
  return out;
}

// --- Random sentences ---------------------------------------------------

namespace {

struct Word {
  const char* surface;
  const char* pos;
};

constexpr Word kNouns[] = {
    {"company", "NOUN"}, {"report", "NOUN"},  {"city", "NOUN"},
    {"team", "NOUN"},    {"market", "NOUN"},  {"minister", "NOUN"},
    {"election", "NOUN"}, {"police", "NOUN"}, {"season", "NOUN"},
    {"deal", "NOUN"},    {"price", "NOUN"},   {"school", "NOUN"},
    {"cars", "NOUN"},    {"title", "NOUN"},   {"year", "NOUN"},
};
constexpr Word kProper[] = {
    {"London", "PROPN"}, {"Paris", "PROPN"}, {"Google", "PROPN"},
    {"Obama", "PROPN"},  {"Smith", "PROPN"}, {"Maria", "PROPN"},
    {"Chelsea", "PROPN"}, {"BBC", "PROPN"},  {"Émile", "PROPN"},
};
constexpr Word kVerbs[] = {
    {"announced", "VERB"}, {"said", "VERB"},   {"won", "VERB"},
    {"signed", "VERB"},    {"makes", "VERB"},  {"took", "VERB"},
    {"reported", "VERB"},  {"bought", "VERB"}, {"sold", "VERB"},
    {"plays", "VERB"},     {"opens", "VERB"},  {"closed", "VERB"},
    {"gave", "VERB"},      {"told", "VERB"},   {"visited", "VERB"},
    {"studied", "VERB"},   {"run", "VERB"},    {"hit", "VERB"},
};
constexpr Word kOther[] = {
    {"the", "DET"},   {"a", "DET"},      {"an", "DET"},     {"this", "DET"},
    {"in", "ADP"},    {"on", "ADP"},     {"at", "ADP"},     {"for", "ADP"},
    {"with", "ADP"},  {"after", "ADP"},  {"new", "ADJ"},    {"former", "ADJ"},
    {"local", "ADJ"}, {"British", "ADJ"}, {"5", "NUM"},     {"2019", "NUM"},
    {"three", "NUM"}, {"he", "PRON"},    {"she", "PRON"},   {"they", "PRON"},
    {"it", "PRON"},   {",", "PUNCT"},    {".", "PUNCT"},    {"has", "AUX"},
    {"was", "AUX"},   {"will", "AUX"},   {"not", "PART"},   {"'s", "PART"},
    {"--", "PUNCT"},  {"?", "PUNCT"},    {"what", "PRON"},  {"and", "CCONJ"},
};

constexpr const char* kRoles[] = {
    "ARG0",     "ARG1",     "ARG2",     "ARG3",     "ARGM-TMP", "ARGM-LOC",
    "ARGM-MNR", "ARGM-CAU", "ARGM-NEG", "ARGM-MOD", "ARGM-EXT", "ARGM-DIR",
    "ARGM-PRP", "ARGM-ADV", "C-ARG1",   "ARGM-PRD",
};
constexpr const char* kLabels[] = {
    "PERSON", "ORG", "GPE", "DATE", "CARDINAL", "LOC", "NORP", "MONEY", "EVENT",
};
constexpr const char* kDepLabels[] = {
    "nsubj", "dobj", "det", "amod", "prep", "pobj", "aux", "advmod",
    "compound", "punct", "nsubjpass", "obl", "cop", "case",
};

template <typename T, size_t N>
const T& Pick(std::mt19937& rng, const T (&items)[N]) {
  return items[std::uniform_int_distribution<size_t>(0, N - 1)(rng)];
}

int Uniform(std::mt19937& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

}  // namespace

AnnotatedSentence RandomSentence(std::mt19937& rng, const std::string& id) {
  AnnotatedSentence s;
  s.sentence_id = id;
  const int n = Uniform(rng, 5, 40);
  for (int i = 0; i < n; ++i) {
    const int bucket = Uniform(rng, 0, 9);
    const Word& w = bucket < 3   ? Pick(rng, kNouns)
                    : bucket < 5 ? Pick(rng, kProper)
                    : bucket < 6 ? Pick(rng, kVerbs)
                                 : Pick(rng, kOther);
    s.tokens.push_back({i, w.surface, std::nullopt, w.pos});
  }

  // Distinct predicate positions; the first one is the root.
  const int frames = std::min(Uniform(rng, 0, 3), n - 1);
  std::vector<int> positions(n);
  for (int i = 0; i < n; ++i) positions[i] = i;
  std::shuffle(positions.begin(), positions.end(), rng);
  const int root = positions[0];
  for (int f = 0; f < std::max(frames, 1); ++f) {
    const Word& v = Pick(rng, kVerbs);
    s.tokens[positions[f]].surface = v.surface;
    s.tokens[positions[f]].pos = v.pos;
  }

  // Dependency tree: attach tokens in random order to already-attached ones.
  std::vector<int> attached = {root};
  s.dep_edges.resize(n);
  s.dep_edges[root] = {root, kRootHead, "root"};
  for (int k = 1; k < n; ++k) {
    const int tok = positions[k];
    const int head = attached[Uniform(rng, 0, static_cast<int>(attached.size()) - 1)];
    std::string label = Pick(rng, kDepLabels);
    s.dep_edges[tok] = {tok, head, label};
    attached.push_back(tok);
  }

  for (int f = 0; f < frames; ++f) {
    SrlFrame frame{positions[f], {}};
    int pos = 0;
    while (pos < n) {
      if (pos == frame.verb_index || Uniform(rng, 0, 9) >= 3) {
        ++pos;
        continue;
      }
      int end = std::min(n, pos + Uniform(rng, 1, 5));
      if (pos < frame.verb_index) end = std::min(end, frame.verb_index);
      frame.arguments.push_back({Pick(rng, kRoles), pos, end});
      pos = end;
    }
    s.srl_frames.push_back(std::move(frame));
  }

  const int entities = Uniform(rng, 0, 4);
  for (int attempt = 0; attempt < 20 && static_cast<int>(s.ner_spans.size()) < entities;
       ++attempt) {
    const int start = Uniform(rng, 0, n - 1);
    const int end = std::min(n, start + Uniform(rng, 1, 3));
    bool overlaps = false;
    for (const auto& e : s.ner_spans) overlaps |= start < e.end && e.start < end;
    if (!overlaps) s.ner_spans.push_back({start, end, Pick(rng, kLabels)});
  }
  std::sort(s.ner_spans.begin(), s.ner_spans.end(),
            [](const NerSpan& a, const NerSpan& b) { return a.start < b.start; });
  ValidateAnnotation(s);
  return s;
}

std::vector<AnnotatedSentence> RandomCorpus(size_t n, uint32_t seed) {
  std::mt19937 rng(seed);
  std::vector<AnnotatedSentence> out;
  out.reserve(n);
  for (size_t i = 0; i < n; ++i) out.push_back(RandomSentence(rng, "r" + std::to_string(i)));
  return out;
}

// --- Template corpora ---------------------------------------------------

namespace {

constexpr const char* kFirst[] = {"Maria", "John", "Aisha", "Kenji", "Laura", "Pedro",
                                  "Nadia", "Tom",   "Elena", "Samuel", "Ines", "Omar"};
constexpr const char* kLast[] = {"Lopez", "Carter", "Bello", "Sato", "Weber", "Costa",
                                 "Haddad", "Reid",  "Petrova", "Mensah", "Silva"};
struct VerbForms {
  const char* past;
  const char* participle;
  const char* third;
};
constexpr VerbForms kTemplateVerbs[] = {
    {"announced", "announced", "announces"}, {"opened", "opened", "opens"},
    {"signed", "signed", "signs"},           {"sold", "sold", "sells"},
    {"won", "won", "wins"},                  {"launched", "launched", "launches"},
    {"visited", "visited", "visits"},        {"built", "built", "builds"},
    {"studied", "studied", "studies"},       {"planned", "planned", "plans"},
};
constexpr const char* kObjects[] = {"contract", "festival", "museum", "award", "report",
                                    "bridge",   "factory",  "album",  "campaign"};
constexpr const char* kPlaces[] = {"London", "Lagos", "Madrid", "Osaka", "Toronto",
                                   "Cairo",  "Lima"};
constexpr const char* kDays[] = {"Monday", "Tuesday", "Friday", "Sunday"};
constexpr const char* kMonths[] = {"March", "June", "October", "December"};
constexpr const char* kOrgs[] = {"Siemens", "Unilever", "Toyota", "Reuters"};
constexpr const char* kFiller =
    "officials said the decision followed weeks of talks between local groups "
    "and national leaders who met several times during the year to discuss "
    "funding plans for schools roads and hospitals across the region";

template <size_t N>
const char* At(const char* const (&items)[N], int i) {
  return items[static_cast<size_t>(i) % N];
}

std::string Cat(std::initializer_list<std::string_view> parts) {
  std::string out;
  for (auto p : parts) {
    if (!out.empty()) out += ' ';
    out += p;
  }
  return out;
}

}  // namespace

SummaryCase TemplateSummary(int i) {
  const std::string first = At(kFirst, i);
  const std::string last = At(kLast, i / 3);
  const VerbForms& verb = kTemplateVerbs[static_cast<size_t>(i / 2) % std::size(kTemplateVerbs)];
  const std::string object = At(kObjects, i / 5);
  const std::string place = At(kPlaces, i / 7);
  const std::string day = At(kDays, i);
  SentenceBuilder b("sum" + std::to_string(i));
  switch (i % 4) {
    case 0:
      b.Arg("ARG0", Cat({first, last}), "PROPN PROPN", "nsubj", {{0, 2, "PERSON"}})
          .Verb(verb.past)
          .Arg("ARG1", Cat({"the", object}), "DET NOUN", "dobj")
          .Arg("ARGM-LOC", Cat({"in", place}), "ADP PROPN", "obl", {{1, 2, "GPE"}})
          .Arg("ARGM-TMP", Cat({"on", day}), "ADP PROPN", "obl", {{1, 2, "DATE"}});
      break;
    case 1:
      b.Arg("ARG0", Cat({first, last}), "PROPN PROPN", "nsubj", {{0, 2, "PERSON"}})
          .Aux("has")
          .Verb(verb.participle)
          .Arg("ARG1", Cat({"a", "new", object}), "DET ADJ NOUN", "dobj")
          .Arg("ARGM-LOC", Cat({"in", place}), "ADP PROPN", "obl", {{1, 2, "GPE"}});
      break;
    case 2:
      b.Arg("ARG0", "the company", "DET NOUN", "nsubj")
          .Verb(verb.third)
          .Arg("ARG1", Cat({"five", object + "s"}), "NUM NOUN", "dobj",
               {{0, 1, "CARDINAL"}})
          .Arg("ARGM-LOC", Cat({"in", place}), "ADP PROPN", "obl", {{1, 2, "GPE"}});
      break;
    default:
      b.Arg("ARG0", At(kOrgs, i), "PROPN", "nsubj", {{0, 1, "ORG"}})
          .Verb(verb.past)
          .Arg("ARG1", Cat({"the", object}), "DET NOUN", "dobj")
          .Arg("ARGM-TMP", Cat({"in", At(kMonths, i), std::to_string(1990 + i % 30)}),
               "ADP PROPN NUM", "obl", {{1, 3, "DATE"}})
          .Plain(".", "PUNCT", "punct");
      break;
  }
  SummaryCase out{b.Build(), {}};
  out.article = SplitWhitespace(Cat({first, last, "spoke", "about", "the", object,
                                     "in", place, "."}));
  const auto filler = SplitWhitespace(kFiller);
  const size_t length = 40 + static_cast<size_t>(i) * 37 % 470;
  for (size_t k = 0; out.article.size() < length; ++k) {
    out.article.push_back(filler[k % filler.size()]);
  }
  return out;
}

AnnotatedSentence TemplateParagraph(int i) {
  AnnotatedSentence p;
  p.sentence_id = "p" + std::to_string(i);
  auto append = [&p](std::string_view words, std::string_view pos) {
    const int start = p.size();
    auto w = SplitWhitespace(words);
    auto t = SplitWhitespace(pos);
    for (size_t k = 0; k < w.size(); ++k) {
      p.tokens.push_back({start + static_cast<int>(k), w[k], std::nullopt, t[k]});
    }
    return start;
  };
  const int sentences = i % 5 == 0 ? 1 : 2 + i % 5;
  for (int k = 0; k < sentences; ++k) {
    const int j = i + k;
    const VerbForms& verb = kTemplateVerbs[static_cast<size_t>(j) % std::size(kTemplateVerbs)];
    if (k % 2 == 0) {
      // "<First> <Last> <verb> the <object> in <Month> <Year> ."
      const int s = append(Cat({At(kFirst, j), At(kLast, j / 2), verb.past, "the",
                                At(kObjects, j), "in", At(kMonths, j),
                                std::to_string(1950 + j % 60), "."}),
                           "PROPN PROPN VERB DET NOUN ADP PROPN NUM PUNCT");
      p.ner_spans.push_back({s, s + 2, "PERSON"});
      p.ner_spans.push_back({s + 6, s + 8, "DATE"});
      p.srl_frames.push_back({s + 2,
                              {{"ARG0", s, s + 2},
                               {"ARG1", s + 3, s + 5},
                               {"ARGM-TMP", s + 5, s + 8}}});
    } else {
      // "He also <verb> a <object> near <Place> ."
      const int s = append(Cat({"He", "also", verb.past, "a", At(kObjects, j + 3),
                                "near", At(kPlaces, j), "."}),
                           "PRON ADV VERB DET NOUN ADP PROPN PUNCT");
      p.ner_spans.push_back({s, s + 1, "PERSON"});
      p.ner_spans.push_back({s + 6, s + 7, "GPE"});
      p.srl_frames.push_back({s + 2,
                              {{"ARG0", s, s + 1},
                               {"ARG1", s + 3, s + 5},
                               {"ARGM-LOC", s + 5, s + 7}}});
    }
    append("The work drew attention from critics and the public .",
           "DET NOUN VERB NOUN ADP NOUN CCONJ DET NOUN PUNCT");
  }
  if (i % 17 == 0) {
    const auto filler = SplitWhitespace(kFiller);
    for (int k = 0; k < 500; ++k) {
      p.tokens.push_back({p.size(), filler[k % filler.size()], std::nullopt, "X"});
    }
  }
  ValidateAnnotation(p);
  return p;
}

std::string PairCorpus(size_t n) {
  std::string out;
  std::mt19937 rng(7);
  for (size_t i = 0; i < n; ++i) {
    SummaryCase c = TemplateSummary(static_cast<int>(i));
    if (i % 5 == 4) c.summary = RandomSentence(rng, "rand" + std::to_string(i));
    nlohmann::ordered_json row = {{"doc_id", "doc" + std::to_string(i)},
                                  {"passage", Join(c.article)},
                                  {"summary_annotation", AnnotationToJson(c.summary)}};
    out += row.dump() + "\n";
  }
  return out;
}

std::string ParagraphCorpus(size_t n) {
  std::string out;
  for (size_t i = 0; i < n; ++i) {
    AnnotatedSentence p = TemplateParagraph(static_cast<int>(i));
    nlohmann::ordered_json row = {{"para_id", p.sentence_id},
                                  {"annotation", AnnotationToJson(p)}};
    out += row.dump() + "\n";
  }
  return out;
}

AnnotatedSentence VerbProbe(std::string_view subject, std::string_view verb,
                            std::string_view subject_pos) {
  return SentenceBuilder("probe")
      .Arg("ARG0", subject, subject_pos, "nsubj")
      .Verb(verb)
      .Arg("ARG1", "the report", "DET NOUN", "dobj")
      .Build();
}

std::string ReadText(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void WriteText(const std::string& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << text;
  if (!out) throw std::runtime_error("cannot write " + path);
}

}  // namespace sumqg::testing

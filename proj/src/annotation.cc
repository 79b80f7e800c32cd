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

#include "sumqg/annotation.h"

#include <algorithm>
#include <initializer_list>
#include <set>

#include "sumqg/text.h"

namespace sumqg {

using nlohmann::json;

std::string_view AnnotationErrorKindName(AnnotationError::Kind kind) {
  switch (kind) {
    case AnnotationError::Kind::kMalformedJson:
      return "MalformedJson";
    case AnnotationError::Kind::kSchemaViolation:
      return "SchemaViolation";
    case AnnotationError::Kind::kInvariantViolation:
      return "InvariantViolation";
  }
  return "Unknown";
}

std::string AnnotatedSentence::Text() const { return SpanText(0, size()); }

std::string AnnotatedSentence::SpanText(int start, int end) const {
  std::string out;
  for (int i = std::max(start, 0); i < std::min(end, size()); ++i) {
    if (!out.empty()) out.push_back(' ');
    out.append(tokens[i].surface);
  }
  return out;
}

std::vector<std::string> AnnotatedSentence::Surfaces() const {
  std::vector<std::string> out;
  out.reserve(tokens.size());
  for (const auto& t : tokens) out.push_back(t.surface);
  return out;
}

const DepEdge* AnnotatedSentence::EdgeOf(int index) const {
  if (dep_edges.size() != tokens.size()) return nullptr;
  // Validated sentences have edges in any order; the common case is sorted.
  if (index >= 0 && index < static_cast<int>(dep_edges.size()) &&
      dep_edges[index].dependent == index) {
    return &dep_edges[index];
  }
  for (const auto& e : dep_edges) {
    if (e.dependent == index) return &e;
  }
  return nullptr;
}

namespace {

[[noreturn]] void Schema(const std::string& message) {
  throw AnnotationError(AnnotationError::Kind::kSchemaViolation, message);
}

[[noreturn]] void Invariant(const std::string& message) {
  throw AnnotationError(AnnotationError::Kind::kInvariantViolation, message);
}

void CheckKeys(const json& object, std::string_view where,
               std::initializer_list<std::string_view> required,
               std::initializer_list<std::string_view> optional = {}) {
  if (!object.is_object()) Schema(std::string(where) + ": expected an object");
  for (auto key : required) {
    if (!object.contains(key)) {
      Schema(std::string(where) + ": missing field '" + std::string(key) +
             "'");
    }
  }
  for (const auto& [key, value] : object.items()) {
    bool known =
        std::find(required.begin(), required.end(), key) != required.end() ||
        std::find(optional.begin(), optional.end(), key) != optional.end();
    if (!known) Schema(std::string(where) + ": unexpected field '" + key + "'");
  }
}

const std::string& GetString(const json& object, const char* key,
                             std::string_view where) {
  const json& v = object.at(key);
  if (!v.is_string()) {
    Schema(std::string(where) + "." + key + ": expected a string");
  }
  return v.get_ref<const std::string&>();
}

int GetInt(const json& object, const char* key, std::string_view where) {
  const json& v = object.at(key);
  if (!v.is_number_integer()) {
    Schema(std::string(where) + "." + key + ": expected an integer");
  }
  auto value = v.get<long long>();
  if (value < -1'000'000'000LL || value > 1'000'000'000LL) {
    Schema(std::string(where) + "." + key + ": integer out of range");
  }
  return static_cast<int>(value);
}

const json& GetArray(const json& object, const char* key,
                     std::string_view where) {
  const json& v = object.at(key);
  if (!v.is_array()) {
    Schema(std::string(where) + "." + key + ": expected an array");
  }
  return v;
}

}  // namespace

AnnotatedSentence AnnotationFromJson(const json& object) {
  CheckKeys(object, "annotation",
            {"sentence_id", "tokens", "dep_edges", "ner", "srl"});
  AnnotatedSentence s;
  s.sentence_id = GetString(object, "sentence_id", "annotation");

  const json& tokens = GetArray(object, "tokens", "annotation");
  for (size_t i = 0; i < tokens.size(); ++i) {
    const json& t = tokens[i];
    std::string where = "tokens[" + std::to_string(i) + "]";
    CheckKeys(t, where, {"surface", "pos"}, {"lemma"});
    Token token;
    token.index = static_cast<int>(i);
    token.surface = GetString(t, "surface", where);
    token.pos = GetString(t, "pos", where);
    if (t.contains("lemma") && !t.at("lemma").is_null()) {
      token.lemma = GetString(t, "lemma", where);
    }
    s.tokens.push_back(std::move(token));
  }

  const json& edges = GetArray(object, "dep_edges", "annotation");
  for (size_t i = 0; i < edges.size(); ++i) {
    std::string where = "dep_edges[" + std::to_string(i) + "]";
    CheckKeys(edges[i], where, {"dependent", "head", "label"});
    s.dep_edges.push_back({GetInt(edges[i], "dependent", where),
                           GetInt(edges[i], "head", where),
                           GetString(edges[i], "label", where)});
  }

  const json& ner = GetArray(object, "ner", "annotation");
  for (size_t i = 0; i < ner.size(); ++i) {
    std::string where = "ner[" + std::to_string(i) + "]";
    CheckKeys(ner[i], where, {"start", "end", "label"});
    s.ner_spans.push_back({GetInt(ner[i], "start", where),
                           GetInt(ner[i], "end", where),
                           GetString(ner[i], "label", where)});
  }

  const json& srl = GetArray(object, "srl", "annotation");
  for (size_t i = 0; i < srl.size(); ++i) {
    std::string where = "srl[" + std::to_string(i) + "]";
    CheckKeys(srl[i], where, {"verb_index", "args"});
    SrlFrame frame;
    frame.verb_index = GetInt(srl[i], "verb_index", where);
    const json& args = GetArray(srl[i], "args", where);
    for (size_t j = 0; j < args.size(); ++j) {
      std::string arg_where = where + ".args[" + std::to_string(j) + "]";
      CheckKeys(args[j], arg_where, {"role", "start", "end"});
      frame.arguments.push_back({GetString(args[j], "role", arg_where),
                                 GetInt(args[j], "start", arg_where),
                                 GetInt(args[j], "end", arg_where)});
    }
    s.srl_frames.push_back(std::move(frame));
  }

  ValidateAnnotation(s);
  return s;
}

AnnotatedSentence ParseAnnotation(std::string_view json_text) {
  json object;
  try {
    object = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw AnnotationError(AnnotationError::Kind::kMalformedJson, e.what());
  }
  return AnnotationFromJson(object);
}

void ValidateAnnotation(const AnnotatedSentence& s) {
  const int n = s.size();
  for (int i = 0; i < n; ++i) {
    const Token& t = s.tokens[i];
    if (t.index != i) {
      Invariant("token " + std::to_string(i) + ": index does not match position");
    }
    if (t.surface.empty()) {
      Invariant("token " + std::to_string(i) + ": empty surface");
    }
    if (ContainsWhitespace(t.surface)) {
      Invariant("token " + std::to_string(i) + ": surface contains whitespace");
    }
  }

  if (!s.dep_edges.empty()) {
    if (static_cast<int>(s.dep_edges.size()) != n) {
      Invariant("dep_edges: expected exactly one edge per token");
    }
    std::vector<bool> seen(n, false);
    int roots = 0;
    for (const auto& e : s.dep_edges) {
      if (e.dependent < 0 || e.dependent >= n) {
        Invariant("dep_edges: dependent " + std::to_string(e.dependent) +
                  " out of bounds");
      }
      if (seen[e.dependent]) {
        Invariant("dep_edges: token " + std::to_string(e.dependent) +
                  " has more than one edge");
      }
      seen[e.dependent] = true;
      if (e.head != kRootHead && (e.head < 0 || e.head >= n)) {
        Invariant("dep_edges: head " + std::to_string(e.head) +
                  " out of bounds");
      }
      if (ToLower(e.label) == "root") ++roots;
    }
    if (roots == 0) Invariant("dep_edges: no root edge");
    if (roots > 1) Invariant("dep_edges: more than one root edge");
  }

  std::vector<NerSpan> sorted = s.ner_spans;
  for (const auto& span : sorted) {
    if (span.start < 0 || span.start >= span.end || span.end > n) {
      Invariant("ner: span [" + std::to_string(span.start) + "," +
                std::to_string(span.end) + ") out of bounds");
    }
  }
  std::sort(sorted.begin(), sorted.end(),
            [](const NerSpan& a, const NerSpan& b) { return a.start < b.start; });
  for (size_t i = 1; i < sorted.size(); ++i) {
    if (sorted[i].start < sorted[i - 1].end) {
      Invariant("ner: overlapping spans at token " +
                std::to_string(sorted[i].start));
    }
  }

  for (size_t f = 0; f < s.srl_frames.size(); ++f) {
    const SrlFrame& frame = s.srl_frames[f];
    std::string where = "srl[" + std::to_string(f) + "]";
    if (frame.verb_index < 0 || frame.verb_index >= n) {
      Invariant(where + ": verb_index " + std::to_string(frame.verb_index) +
                " out of bounds");
    }
    int previous_end = 0;
    for (size_t a = 0; a < frame.arguments.size(); ++a) {
      const SrlArgument& arg = frame.arguments[a];
      std::string arg_where = where + ".args[" + std::to_string(a) + "]";
      if (arg.start < 0 || arg.start >= arg.end || arg.end > n) {
        Invariant(arg_where + ": span [" + std::to_string(arg.start) + "," +
                  std::to_string(arg.end) + ") out of bounds");
      }
      if (arg.role.empty()) Invariant(arg_where + ": empty role");
      if (a > 0 && arg.start < frame.arguments[a - 1].start) {
        Invariant(where + ": arguments not sorted by start");
      }
      if (a > 0 && arg.start < previous_end) {
        Invariant(arg_where + ": overlaps previous argument");
      }
      if (arg.Contains(frame.verb_index)) {
        Invariant(arg_where + ": overlaps the verb token");
      }
      previous_end = arg.end;
    }
  }
}

nlohmann::ordered_json AnnotationToJson(const AnnotatedSentence& s) {
  nlohmann::ordered_json out;
  out["sentence_id"] = s.sentence_id;
  auto tokens = nlohmann::ordered_json::array();
  for (const auto& t : s.tokens) {
    nlohmann::ordered_json tok;
    tok["surface"] = t.surface;
    tok["lemma"] = t.lemma ? nlohmann::ordered_json(*t.lemma)
                           : nlohmann::ordered_json(nullptr);
    tok["pos"] = t.pos;
    tokens.push_back(std::move(tok));
  }
  out["tokens"] = std::move(tokens);
  auto edges = nlohmann::ordered_json::array();
  for (const auto& e : s.dep_edges) {
    edges.push_back({{"dependent", e.dependent},
                     {"head", e.head},
                     {"label", e.label}});
  }
  out["dep_edges"] = std::move(edges);
  auto ner = nlohmann::ordered_json::array();
  for (const auto& span : s.ner_spans) {
    ner.push_back({{"start", span.start}, {"end", span.end}, {"label", span.label}});
  }
  out["ner"] = std::move(ner);
  auto srl = nlohmann::ordered_json::array();
  for (const auto& frame : s.srl_frames) {
    auto args = nlohmann::ordered_json::array();
    for (const auto& a : frame.arguments) {
      args.push_back({{"role", a.role}, {"start", a.start}, {"end", a.end}});
    }
    nlohmann::ordered_json f;
    f["verb_index"] = frame.verb_index;
    f["args"] = std::move(args);
    srl.push_back(std::move(f));
  }
  out["srl"] = std::move(srl);
  return out;
}

std::string SerializeAnnotation(const AnnotatedSentence& s) {
  return AnnotationToJson(s).dump();
}

int RootVerb(const AnnotatedSentence& s) {
  for (const auto& e : s.dep_edges) {
    if (ToLower(e.label) == "root") return e.dependent;
  }
  throw QgError(QgError::Code::kNoRoot,
                "sentence '" + s.sentence_id + "' has no root edge");
}

std::vector<EntityOverlap> EntityLabelsInSpan(const AnnotatedSentence& s,
                                              int start, int end) {
  std::vector<EntityOverlap> out;
  if (end <= start) return out;
  for (const auto& span : s.ner_spans) {
    int lo = std::max(start, span.start);
    int hi = std::min(end, span.end);
    if (hi > lo) {
      out.push_back({span, static_cast<double>(hi - lo) / (end - start)});
    }
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const EntityOverlap& a, const EntityOverlap& b) {
                     return a.span.start < b.span.start;
                   });
  return out;
}

}  // namespace sumqg

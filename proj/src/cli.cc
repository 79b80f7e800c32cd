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

#include "sumqg/cli.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string_view>
#include <unordered_map>

#include "CLI11.hpp"
#include "json.hpp"
#include "sumqg/annotation.h"
#include "sumqg/config.h"
#include "sumqg/dataset_pipeline.h"
#include "sumqg/errors.h"
#include "sumqg/parallel_map.h"
#include "sumqg/stats_lint.h"

namespace sumqg {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;
using nlohmann::ordered_json;

constexpr size_t kChunkLines = 1024;

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Writes to "<path>.tmp" and renames over |path| on Commit(). An uncommitted
// file is removed on destruction.
class AtomicFile {
 public:
  explicit AtomicFile(std::string path)
      : path_(std::move(path)), tmp_(path_ + ".tmp") {
    stream_.open(tmp_, std::ios::binary | std::ios::trunc);
    if (!stream_) throw IoError("cannot open '" + tmp_ + "' for writing");
  }
  AtomicFile(const AtomicFile&) = delete;
  AtomicFile& operator=(const AtomicFile&) = delete;
  ~AtomicFile() {
    if (!committed_) {
      stream_.close();
      std::error_code ec;
      fs::remove(tmp_, ec);
    }
  }

  std::ostream& stream() { return stream_; }

  void WriteLine(std::string_view line) {
    stream_ << line << '\n';
  }

  void Commit() {
    stream_.flush();
    if (!stream_) throw IoError("write failed on '" + tmp_ + "'");
    stream_.close();
    std::error_code ec;
    fs::rename(tmp_, path_, ec);
    if (ec) throw IoError("cannot rename '" + tmp_ + "': " + ec.message());
    committed_ = true;
  }

 private:
  std::string path_;
  std::string tmp_;
  std::ofstream stream_;
  bool committed_ = false;
};

std::ifstream OpenInput(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "'");
  return in;
}

std::string ReadFile(const std::string& path) {
  std::ifstream in = OpenInput(path);
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("read failed on '" + path + "'");
  return buf.str();
}

struct Line {
  size_t number = 0;  // 1-based
  std::string text;
};

// Reads up to |max| non-blank lines. Returns false at end of input.
bool ReadChunk(std::istream& in, std::vector<Line>& chunk, size_t& line_no,
               size_t max) {
  chunk.clear();
  std::string text;
  while (chunk.size() < max && std::getline(in, text)) {
    ++line_no;
    if (!text.empty() && text.back() == '\r') text.pop_back();
    if (text.find_first_not_of(" \t") == std::string::npos) continue;
    chunk.push_back({line_no, std::move(text)});
  }
  if (in.bad()) throw IoError("read failed");
  return !chunk.empty();
}

// Per-line result of a pipeline stage.
struct LineResult {
  std::vector<std::string> out_lines;
  std::vector<std::string> side_lines;
  std::vector<std::string> reject_lines;
  std::vector<QaPair> pairs;
  std::vector<LintInput> lint_inputs;
  std::optional<std::string> error;
};

struct Counts {
  size_t records = 0;
  size_t accepted = 0;
  size_t rejected = 0;
  size_t skipped = 0;
};

// Streams |path| through |fn| in fixed-size chunks; |sink| sees results in
// input order.
void StreamLines(const std::string& path, int workers,
                 const std::function<LineResult(const Line&)>& fn,
                 const std::function<void(LineResult&)>& sink,
                 std::ostream& err, Counts& counts) {
  std::ifstream in = OpenInput(path);
  std::vector<Line> chunk;
  size_t line_no = 0;
  while (ReadChunk(in, chunk, line_no, kChunkLines)) {
    auto results = OrderedMap(std::span<const Line>(chunk), fn, workers);
    for (size_t i = 0; i < results.size(); ++i) {
      ++counts.records;
      if (results[i].error) {
        ++counts.skipped;
        err << path << ":" << chunk[i].number << ": skipped: " << *results[i].error
            << '\n';
        continue;
      }
      sink(results[i]);
    }
  }
}

std::string DescribeError(const std::exception& e) {
  if (const auto* a = dynamic_cast<const AnnotationError*>(&e)) {
    return std::string(AnnotationErrorKindName(a->kind())) + ": " + a->what();
  }
  return e.what();
}

// Wraps |fn| so record-level failures become skipped lines.
std::function<LineResult(const Line&)> Guarded(
    std::function<LineResult(const Line&)> fn) {
  return [fn = std::move(fn)](const Line& line) {
    try {
      return fn(line);
    } catch (const json::exception& e) {
      LineResult r;
      r.error = std::string("MalformedJson: ") + e.what();
      return r;
    } catch (const std::exception& e) {
      LineResult r;
      r.error = DescribeError(e);
      return r;
    }
  };
}

// ---------------------------------------------------------------------------
// Configuration

struct ConfigFlags {
  std::string ladder;
  std::string config_path;
  std::string wh_overrides;
  std::string irregular_overrides;
  int max_article_tokens = 0;
  double min_answer_overlap = 0;
  int min_question_tokens = 0;
  int min_paragraph_words = 0;
  int max_paragraph_words = 0;
  int min_paragraph_chars = 0;
  double entity_coverage_min = 0;
  int workers = 1;
  std::vector<std::pair<std::string, CLI::Option*>> given;
};

void AddConfigFlags(CLI::App* cmd, ConfigFlags& f, bool qa) {
  auto add = [&](const char* flag, const char* key, auto& var, const char* help) {
    f.given.emplace_back(key, cmd->add_option(flag, var, help));
  };
  f.given.emplace_back(
      "ladder", cmd->add_option("--ladder", f.ladder, "Heuristic ladder preset")
                    ->check(CLI::IsMember(LadderNames())));
  cmd->add_option("--config", f.config_path, "JSON config file (default: $QG_CONFIG)");
  cmd->add_option("--workers", f.workers, "Worker threads")->check(CLI::PositiveNumber);
  add("--wh-overrides", "wh_overrides", f.wh_overrides, "Wh-word override table (JSON)");
  add("--irregular-overrides", "irregular_overrides", f.irregular_overrides,
      "Irregular verb override table (JSON)");
  add("--entity-coverage-min", "entity_coverage_min", f.entity_coverage_min,
      "Minimum entity coverage of an answer span");
  if (qa) {
    add("--min-paragraph-words", "min_paragraph_words", f.min_paragraph_words,
        "Shortest accepted paragraph, in words");
    add("--max-paragraph-words", "max_paragraph_words", f.max_paragraph_words,
        "Longest accepted paragraph, in words");
  } else {
    add("--max-article-tokens", "max_article_tokens", f.max_article_tokens,
        "Longest accepted article, in tokens");
    add("--min-answer-overlap", "min_answer_overlap", f.min_answer_overlap,
        "Minimum answer/passage token overlap");
    add("--min-question-tokens", "min_question_tokens", f.min_question_tokens,
        "Shortest accepted question, in tokens");
  }
}

// flags > config file > built-in defaults.
HeuristicConfig ResolveConfig(const ConfigFlags& f) {
  HeuristicConfig cfg;
  std::string path = f.config_path;
  if (path.empty()) {
    if (const char* env = std::getenv("QG_CONFIG"); env != nullptr) path = env;
  }
  try {
    if (!path.empty()) {
      json file;
      try {
        file = json::parse(ReadFile(path));
      } catch (const json::parse_error& e) {
        throw UsageError("config '" + path + "': " + e.what());
      }
      ApplyConfigJson(file, cfg);
    }
    json overrides = json::object();
    auto set = [&](const std::string& key, const CLI::Option* opt) {
      if (opt->count() == 0) return;
      if (key == "ladder") overrides[key] = f.ladder;
      if (key == "wh_overrides") overrides[key] = f.wh_overrides;
      if (key == "irregular_overrides") overrides[key] = f.irregular_overrides;
      if (key == "entity_coverage_min") overrides[key] = f.entity_coverage_min;
      if (key == "max_article_tokens") overrides[key] = f.max_article_tokens;
      if (key == "min_answer_overlap") overrides[key] = f.min_answer_overlap;
      if (key == "min_question_tokens") overrides[key] = f.min_question_tokens;
      if (key == "min_paragraph_words") overrides[key] = f.min_paragraph_words;
      if (key == "max_paragraph_words") overrides[key] = f.max_paragraph_words;
    };
    for (const auto& [key, opt] : f.given) set(key, opt);
    ApplyConfigJson(overrides, cfg);
    ValidateConfig(cfg);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  } catch (const json::exception& e) {
    throw UsageError(std::string("config: ") + e.what());
  }
  return cfg;
}

void RequireDistinct(std::initializer_list<std::string> paths) {
  std::vector<std::string> seen;
  for (const auto& p : paths) {
    if (p.empty()) continue;
    for (const auto& s : seen) {
      if (fs::weakly_canonical(s) == fs::weakly_canonical(p)) {
        throw UsageError("path '" + p + "' used more than once");
      }
    }
    seen.push_back(p);
  }
}

void ReportCounts(std::ostream& err, std::string_view cmd, const Counts& c) {
  err << cmd << ": " << c.records << " records, " << c.accepted << " accepted, "
      << c.rejected << " rejected, " << c.skipped << " skipped\n";
}

// ---------------------------------------------------------------------------
// Subcommands

struct QgArgs {
  std::string pairs;
  std::string out;
  std::string rejects;
  ConfigFlags flags;
};

int RunGenQg(const QgArgs& a, std::ostream& err) {
  const HeuristicConfig cfg = ResolveConfig(a.flags);
  const std::string rejects = a.rejects.empty() ? a.out + ".rejects.jsonl" : a.rejects;
  RequireDistinct({a.pairs, a.out, rejects});

  AtomicFile out(a.out);
  AtomicFile rej(rejects);
  Counts counts;
  auto fn = Guarded([&cfg](const Line& line) {
    DocumentPair pair = DocumentPairFromJson(json::parse(line.text));
    LineResult r;
    int k = 0;
    for (auto& outcome : BuildQgTriples(pair, cfg)) {
      std::string id = pair.doc_id + "-" + std::to_string(k++);
      if (auto* t = std::get_if<QgTriple>(&outcome)) {
        r.out_lines.push_back(TripleToJsonLine(*t, id));
      } else {
        r.reject_lines.push_back(RejectToJsonLine(id, std::get<RejectReason>(outcome)));
      }
    }
    return r;
  });
  StreamLines(
      a.pairs, a.flags.workers, fn,
      [&](LineResult& r) {
        for (const auto& l : r.out_lines) out.WriteLine(l);
        for (const auto& l : r.reject_lines) rej.WriteLine(l);
        counts.accepted += r.out_lines.size();
        counts.rejected += r.reject_lines.size();
      },
      err, counts);
  out.Commit();
  rej.Commit();
  ReportCounts(err, "gen-qg-data", counts);
  return kExitOk;
}

struct QaArgs {
  std::string paragraphs;
  std::string out;
  std::string seq2seq;
  std::string questions;
  std::string rejects;
  std::string name = "synthetic";
  ConfigFlags flags;
};

std::unordered_map<std::string, std::string> LoadQuestions(const std::string& path,
                                                           std::ostream& err) {
  std::unordered_map<std::string, std::string> out;
  std::ifstream in = OpenInput(path);
  std::string text;
  size_t line_no = 0;
  while (std::getline(in, text)) {
    ++line_no;
    if (text.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      json row = json::parse(text);
      out.emplace(row.at("id").get<std::string>(), row.at("question").get<std::string>());
    } catch (const json::exception& e) {
      err << path << ":" << line_no << ": skipped: " << e.what() << '\n';
    }
  }
  return out;
}

AnnotatedSentence ParagraphFromJson(const json& row) {
  if (!row.is_object() || !row.contains("annotation")) {
    throw AnnotationError(AnnotationError::Kind::kSchemaViolation,
                          "paragraph record: missing field 'annotation'");
  }
  AnnotatedSentence p = AnnotationFromJson(row.at("annotation"));
  if (row.contains("para_id")) p.sentence_id = row.at("para_id").get<std::string>();
  return p;
}

int RunGenQa(const QaArgs& a, std::ostream& err) {
  const HeuristicConfig cfg = ResolveConfig(a.flags);
  const std::string seq2seq = a.seq2seq.empty() ? a.out + ".seq2seq.jsonl" : a.seq2seq;
  const std::string rejects = a.rejects.empty() ? a.out + ".rejects.jsonl" : a.rejects;
  RequireDistinct({a.paragraphs, a.out, seq2seq, rejects, a.questions});

  std::optional<std::unordered_map<std::string, std::string>> questions;
  if (!a.questions.empty()) questions = LoadQuestions(a.questions, err);
  const auto* external = questions ? &*questions : nullptr;

  AtomicFile side(seq2seq);
  AtomicFile rej(rejects);
  std::vector<QaPair> pairs;
  Counts counts;
  auto fn = Guarded([&cfg, external](const Line& line) {
    AnnotatedSentence paragraph = ParagraphFromJson(json::parse(line.text));
    LineResult r;
    for (auto& outcome : BuildQaCandidates(paragraph, cfg, external)) {
      if (auto* c = std::get_if<QaCandidate>(&outcome.result)) {
        ordered_json row = {{"id", outcome.id},
                            {"input", c->seq2seq_input},
                            {"answer", outcome.answer_text}};
        r.side_lines.push_back(row.dump());
        if (c->pair) r.pairs.push_back(std::move(*c->pair));
      } else {
        r.reject_lines.push_back(
            RejectToJsonLine(outcome.id, std::get<RejectReason>(outcome.result)));
      }
    }
    return r;
  });
  StreamLines(
      a.paragraphs, a.flags.workers, fn,
      [&](LineResult& r) {
        for (const auto& l : r.side_lines) side.WriteLine(l);
        for (const auto& l : r.reject_lines) rej.WriteLine(l);
        counts.accepted += r.side_lines.size();
        counts.rejected += r.reject_lines.size();
        for (auto& p : r.pairs) pairs.push_back(std::move(p));
      },
      err, counts);

  std::string squad;
  try {
    squad = BuildSquadJson(pairs, a.name);
  } catch (const InvalidOffsetError& e) {
    throw IoError(e.what());
  }
  AtomicFile out(a.out);
  out.stream() << squad << '\n';
  out.Commit();
  side.Commit();
  rej.Commit();
  ReportCounts(err, "gen-qa-data", counts);
  err << "gen-qa-data: " << pairs.size() << " QA pairs\n";
  return kExitOk;
}

struct CleanArgs {
  std::vector<std::string> inputs;
  std::string out;
  int min_chars = 500;
};

int RunCleanWiki(const CleanArgs& a, std::ostream& err) {
  std::vector<std::string> all = a.inputs;
  for (const auto& in : a.inputs) {
    if (fs::weakly_canonical(in) == fs::weakly_canonical(a.out)) {
      throw UsageError("path '" + a.out + "' used more than once");
    }
  }
  AtomicFile out(a.out);
  size_t kept = 0;
  for (const auto& path : a.inputs) {
    const std::string stem = fs::path(path).stem().string();
    int k = 0;
    for (const auto& text : CleanWikiParagraphs(ReadFile(path), a.min_chars)) {
      ordered_json row = {{"para_id", stem + "-" + std::to_string(k++)}, {"text", text}};
      out.WriteLine(row.dump());
      ++kept;
    }
  }
  out.Commit();
  err << "clean-wiki: " << kept << " paragraphs\n";
  return kExitOk;
}

// Triple lines, or a SQuAD document.
std::vector<LintInput> LoadLintInputs(const std::string& path, int workers,
                                      std::ostream& err, Counts& counts) {
  std::vector<LintInput> inputs;
  const std::string text = ReadFile(path);
  const size_t first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    json doc = json::parse(text, nullptr, /*allow_exceptions=*/false);
    if (!doc.is_discarded() && doc.is_object() && doc.contains("data")) {
      for (const auto& article : doc.at("data")) {
        for (const auto& para : article.at("paragraphs")) {
          const std::string context = para.at("context").get<std::string>();
          for (const auto& qa : para.at("qas")) {
            LintInput in;
            in.id = qa.at("id").get<std::string>();
            in.question = qa.at("question").get<std::string>();
            in.passage = context;
            if (!qa.at("answers").empty()) {
              in.answer = qa.at("answers").at(0).at("text").get<std::string>();
            }
            inputs.push_back(std::move(in));
            ++counts.records;
          }
        }
      }
      return inputs;
    }
  }
  auto fn = Guarded([](const Line& line) {
    json row = json::parse(line.text);
    std::string id;
    QgTriple t = TripleFromJson(row, &id);
    LineResult r;
    LintInput in = LintInputFromTriple(t, id.empty() ? std::to_string(line.number) : id);
    const bool has_ner = row.contains("meta") && row.at("meta").is_object() &&
                         row.at("meta").contains("answer_ner");
    if (!has_ner) in.answer_entities.reset();
    r.lint_inputs.push_back(std::move(in));
    return r;
  });
  StreamLines(
      path, workers, fn,
      [&](LineResult& r) {
        for (auto& in : r.lint_inputs) inputs.push_back(std::move(in));
      },
      err, counts);
  return inputs;
}

struct ReportArgs {
  std::string input;
  std::string out;
  int workers = 1;
};

void Emit(const std::string& path, const std::string& body, std::ostream& out) {
  if (path.empty()) {
    out << body;
    return;
  }
  AtomicFile file(path);
  file.stream() << body;
  file.Commit();
}

int RunStats(const ReportArgs& a, std::ostream& out, std::ostream& err) {
  RequireDistinct({a.input, a.out});
  Counts counts;
  auto inputs = LoadLintInputs(a.input, a.workers, err, counts);
  StatsReport report = ComputeStats(inputs, a.workers);
  Emit(a.out, report.ToJson().dump(2) + "\n", out);
  err << "stats: " << report.distribution.total << " questions, " << counts.skipped
      << " skipped\n";
  return kExitOk;
}

int RunLint(const ReportArgs& a, std::ostream& out, std::ostream& err) {
  RequireDistinct({a.input, a.out});
  Counts counts;
  auto inputs = LoadLintInputs(a.input, a.workers, err, counts);
  auto issues = OrderedMap(std::span<const LintInput>(inputs), LintQuestion, a.workers);
  std::string body;
  size_t flagged = 0;
  for (const auto& list : issues) {
    for (const auto& issue : list) {
      ordered_json row = {{"id", issue.ref}, {"code", LintCodeName(issue.code)}};
      body += row.dump() + "\n";
      ++flagged;
    }
  }
  Emit(a.out, body, out);
  err << "lint: " << inputs.size() << " questions, " << flagged << " issues\n";
  return kExitOk;
}

struct ValidateArgs {
  std::string input;
  std::string format = "annotation";
  bool strict = false;
  int workers = 1;
};

int RunValidate(const ValidateArgs& a, std::ostream& out, std::ostream& err) {
  auto fn = Guarded([&a](const Line& line) {
    json row = json::parse(line.text);
    if (a.format == "annotation") {
      AnnotationFromJson(row);
    } else if (a.format == "pairs") {
      DocumentPairFromJson(row);
    } else {
      ParagraphFromJson(row);
    }
    return LineResult{};
  });
  Counts counts;
  StreamLines(a.input, a.workers, fn, [&](LineResult&) { ++counts.accepted; }, err,
              counts);
  out << "validate: " << counts.accepted << " valid, " << counts.skipped
      << " invalid\n";
  return a.strict && counts.skipped > 0 ? kExitIo : kExitOk;
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Question generation from annotated summaries", "sumqg"};
  app.require_subcommand(1);

  QgArgs qg;
  auto* gen_qg = app.add_subcommand("gen-qg-data", "Build QG training triples");
  gen_qg->add_option("--pairs", qg.pairs, "Passage-summary pairs (JSONL)")
      ->required();
  gen_qg->add_option("--out", qg.out, "Triples output (JSONL)")->required();
  gen_qg->add_option("--rejects", qg.rejects, "Reject log (default: <out>.rejects.jsonl)");
  AddConfigFlags(gen_qg, qg.flags, /*qa=*/false);

  QaArgs qa;
  auto* gen_qa = app.add_subcommand("gen-qa-data", "Build a synthetic QA dataset");
  gen_qa->add_option("--paragraphs", qa.paragraphs, "Annotated paragraphs (JSONL)")
      ->required();
  gen_qa->add_option("--out", qa.out, "SQuAD output (JSON)")->required();
  gen_qa->add_option("--seq2seq", qa.seq2seq,
                     "QG model inputs (default: <out>.seq2seq.jsonl)");
  gen_qa->add_option("--questions", qa.questions, "Questions keyed by id (JSONL)");
  gen_qa->add_option("--rejects", qa.rejects, "Reject log (default: <out>.rejects.jsonl)");
  gen_qa->add_option("--name", qa.name, "Dataset title");
  AddConfigFlags(gen_qa, qa.flags, /*qa=*/true);

  CleanArgs clean;
  auto* clean_wiki = app.add_subcommand("clean-wiki", "Extract clean paragraphs");
  clean_wiki->add_option("--input", clean.inputs, "Raw text files")
      ->required();
  clean_wiki->add_option("--out", clean.out, "Paragraphs output (JSONL)")->required();
  clean_wiki->add_option("--min-chars", clean.min_chars, "Shortest kept paragraph");

  ReportArgs stats_args;
  auto* stats = app.add_subcommand("stats", "Question type and overlap report");
  stats->add_option("--questions", stats_args.input, "Triples (JSONL) or SQuAD JSON")
      ->required();
  stats->add_option("--report", stats_args.out, "Report path (default: stdout)");
  stats->add_option("--workers", stats_args.workers)->check(CLI::PositiveNumber);

  ReportArgs lint_args;
  auto* lint = app.add_subcommand("lint", "Static question checks");
  lint->add_option("--input", lint_args.input, "Triples (JSONL) or SQuAD JSON")
      ->required();
  lint->add_option("--out", lint_args.out, "Issues output (default: stdout)");
  lint->add_option("--workers", lint_args.workers)->check(CLI::PositiveNumber);

  ValidateArgs val;
  auto* validate = app.add_subcommand("validate", "Check input records");
  validate->add_option("--input", val.input, "JSONL input")
      ->required();
  validate->add_option("--format", val.format, "Record format")
      ->check(CLI::IsMember({"annotation", "pairs", "paragraphs"}));
  validate->add_flag("--strict", val.strict, "Fail when any record is invalid");
  validate->add_option("--workers", val.workers)->check(CLI::PositiveNumber);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "sumqg: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (*gen_qg) return RunGenQg(qg, err);
    if (*gen_qa) return RunGenQa(qa, err);
    if (*clean_wiki) return RunCleanWiki(clean, err);
    if (*stats) return RunStats(stats_args, out, err);
    if (*lint) return RunLint(lint_args, out, err);
    if (*validate) return RunValidate(val, out, err);
  } catch (const UsageError& e) {
    err << "sumqg: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "sumqg: " << DescribeError(e) << '\n';
    return kExitIo;
  }
  return kExitUsage;
}

}  // namespace sumqg

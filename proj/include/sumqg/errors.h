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

#ifndef SUMQG_ERRORS_H_
#define SUMQG_ERRORS_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace sumqg {

// Raised while reading annotation interchange JSON.
class AnnotationError : public std::runtime_error {
 public:
  enum class Kind { kMalformedJson, kSchemaViolation, kInvariantViolation };

  AnnotationError(Kind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

std::string_view AnnotationErrorKindName(AnnotationError::Kind kind);

// Per-argument failures inside question generation. The engine treats all of
// these as "skip this argument".
class QgError : public std::runtime_error {
 public:
  enum class Code {
    kNoRoot,
    kNoWhWord,
    kNotAVerb,
    kAnswerIsVerb,
    kEmptyAfterEdit,
    kAnswerEchoed,
  };

  QgError(Code code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  Code code() const { return code_; }

 private:
  Code code_;
};

// SQuAD emission with a pair whose answer_start does not point at its answer.
class InvalidOffsetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace sumqg

#endif  // SUMQG_ERRORS_H_

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

#ifndef SUMQG_TEXT_H_
#define SUMQG_TEXT_H_

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace sumqg {

// Lowercases ASCII and the Latin-1 supplement block (U+00C0..U+00DE) of a
// UTF-8 string. Other code points pass through unchanged.
std::string ToLower(std::string_view text);

bool HasUppercase(std::string_view text);

bool ContainsWhitespace(std::string_view text);

std::vector<std::string> SplitWhitespace(std::string_view text);

std::string Join(std::span<const std::string> parts, std::string_view sep = " ");

// Number of Unicode code points in a UTF-8 string.
size_t Utf8Length(std::string_view text);

// Byte offset of the code point at |cp_offset|, or npos when out of range.
size_t Utf8ByteOffset(std::string_view text, size_t cp_offset);

// True when |needle| occurs as a contiguous run inside |haystack|.
bool ContainsRun(std::span<const std::string> haystack,
                 std::span<const std::string> needle);

// Index of the first contiguous occurrence, or -1.
int FindRun(std::span<const std::string> haystack,
            std::span<const std::string> needle);

std::vector<std::string> LowerAll(std::span<const std::string> tokens);

}  // namespace sumqg

#endif  // SUMQG_TEXT_H_

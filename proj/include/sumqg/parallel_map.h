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

#ifndef SUMQG_PARALLEL_MAP_H_
#define SUMQG_PARALLEL_MAP_H_

#include <exception>
#include <span>
#include <type_traits>
#include <vector>

#include <omp.h>

namespace sumqg {

// Reference implementation: applies |fn| to each item in order.
template <typename In, typename Fn>
auto OrderedMapSerial(std::span<const In> items, Fn&& fn)
    -> std::vector<std::invoke_result_t<Fn&, const In&>> {
  std::vector<std::invoke_result_t<Fn&, const In&>> out;
  out.reserve(items.size());
  for (const auto& item : items) out.push_back(fn(item));
  return out;
}

// Applies |fn| to each item on |workers| OpenMP threads. Results keep input
// order. The first exception (by item index) is rethrown after the loop.
template <typename In, typename Fn>
auto OrderedMap(std::span<const In> items, Fn&& fn, int workers)
    -> std::vector<std::invoke_result_t<Fn&, const In&>> {
  using Out = std::invoke_result_t<Fn&, const In&>;
  if (workers <= 1 || items.size() < 2) return OrderedMapSerial(items, fn);
  const long n = static_cast<long>(items.size());
  std::vector<Out> out(items.size());
  std::vector<std::exception_ptr> errors(items.size());
#pragma omp parallel for num_threads(workers) schedule(dynamic, 8)
  for (long i = 0; i < n; ++i) {
    try {
      out[i] = fn(items[i]);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

}  // namespace sumqg

#endif  // SUMQG_PARALLEL_MAP_H_

// Copyright 2026 The psigraph Authors
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

#ifndef PSIGRAPH_PARALLEL_HPP
#define PSIGRAPH_PARALLEL_HPP

#include <cstddef>
#include <cstdint>
#include <exception>

namespace psigraph {

/// PSIGRAPH_THREADS when set to a positive integer, otherwise the OpenMP default.
std::size_t default_thread_count();

/// Runs body(i) for i in [0, n) on up to `threads` OpenMP threads (0 means
/// default_thread_count()). The first exception thrown by any iteration is
/// rethrown after the loop.
template <typename Body>
void parallel_for(std::size_t n, std::size_t threads, Body&& body) {
  if (threads == 0) threads = default_thread_count();
  std::exception_ptr error;
  const auto count = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(dynamic) num_threads(static_cast<int>(threads))
  for (std::int64_t i = 0; i < count; ++i) {
    try {
      body(static_cast<std::size_t>(i));
    } catch (...) {
#pragma omp critical(psigraph_parallel_error)
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
}

}  // namespace psigraph

#endif  // PSIGRAPH_PARALLEL_HPP

// Copyright 2026 The nongauss Authors
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

#ifndef NONGAUSS_PARALLEL_H
#define NONGAUSS_PARALLEL_H

#include <cstddef>
#include <functional>

namespace nongauss {

/// Worker count: NONGAUSS_THREADS if set and positive, else hardware concurrency.
int thread_count();

/// Runs body(begin, end) over contiguous chunks of [0, n).
///
/// Chunk boundaries depend only on n and the chunk size, never on the thread count, so
/// a caller that writes per-chunk partial results and folds them in chunk order gets
/// bit-identical output for any number of workers.
void parallel_chunks(size_t n, size_t chunk, const std::function<void(size_t, size_t, size_t)> &body);

}  // namespace nongauss

#endif

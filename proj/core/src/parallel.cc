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

#include "nongauss/parallel.h"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace nongauss {

int thread_count() {
    if (const char *env = std::getenv("NONGAUSS_THREADS")) {
        char *end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && v > 0) {
            return static_cast<int>(std::min<long>(v, 256));
        }
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

void parallel_chunks(size_t n, size_t chunk, const std::function<void(size_t, size_t, size_t)> &body) {
    if (n == 0) {
        return;
    }
    chunk = std::max<size_t>(chunk, 1);
    const size_t num_chunks = (n + chunk - 1) / chunk;
    const size_t workers = std::min<size_t>(static_cast<size_t>(thread_count()), num_chunks);
    auto run = [&](size_t c) { body(c, c * chunk, std::min(n, (c + 1) * chunk)); };
    if (workers <= 1) {
        for (size_t c = 0; c < num_chunks; c++) {
            run(c);
        }
        return;
    }
    std::atomic<size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mu;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (size_t w = 0; w < workers; w++) {
        pool.emplace_back([&] {
            for (size_t c = next++; c < num_chunks; c = next++) {
                try {
                    run(c);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(failure_mu);
                    if (!failure) {
                        failure = std::current_exception();
                    }
                }
            }
        });
    }
    for (auto &t : pool) {
        t.join();
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
}

}  // namespace nongauss

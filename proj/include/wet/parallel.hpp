// SPDX-License-Identifier: Apache-2.0
//
// wetkit: planning and simulation toolkit for RF wireless energy transfer networks
// Copyright (C) 2026 The wetkit authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace wet
{
    // Runs body(i) for i in [0, n) on up to `workers` threads. Work is handed out in
    // index order; callers write results into slot i so the outcome does not depend on
    // scheduling. If any call throws, the exception of the lowest failing index is rethrown.
    template <typename Body>
    void parallel_for(std::size_t n, unsigned workers, Body &&body)
    {
        if (n == 0)
            return;
        workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(std::min<std::size_t>(n, 1024))));
        if (workers == 1)
        {
            for (std::size_t i = 0; i < n; ++i)
                body(i);
            return;
        }

        std::atomic<std::size_t> next{0};
        std::mutex err_mutex;
        std::exception_ptr first_error;
        std::size_t first_error_index = n;

        auto run = [&]()
        {
            for (std::size_t i = next.fetch_add(1); i < n; i = next.fetch_add(1))
            {
                try
                {
                    body(i);
                }
                catch (...)
                {
                    std::lock_guard<std::mutex> lock(err_mutex);
                    if (i < first_error_index)
                    {
                        first_error_index = i;
                        first_error = std::current_exception();
                    }
                }
            }
        };

        std::vector<std::thread> pool;
        pool.reserve(workers - 1);
        for (unsigned w = 1; w < workers; ++w)
            pool.emplace_back(run);
        run();
        for (auto &t : pool)
            t.join();

        if (first_error)
            std::rethrow_exception(first_error);
    }
}

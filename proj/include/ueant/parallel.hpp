// SPDX-License-Identifier: Apache-2.0
//
// ueant - handheld UE antenna pattern, polarization and blockage modelling
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

#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace ueant
{

    // Runs fn(i) for i in [0, n) on up to n_threads workers. Each index is
    // processed exactly once; callers write results into per-index slots, so
    // the outcome is independent of scheduling. The first exception thrown by
    // any worker is rethrown on the calling thread.
    template <typename Fn>
    void parallel_for(std::size_t n, int n_threads, Fn &&fn)
    {
        if (n_threads <= 1 || n < 2)
        {
            for (std::size_t i = 0; i < n; ++i)
                fn(i);
            return;
        }

        std::atomic<std::size_t> next{0};
        std::exception_ptr error;
        std::mutex error_mutex;

        auto worker = [&]() {
            for (;;)
            {
                const std::size_t i = next.fetch_add(1);
                if (i >= n)
                    return;
                try
                {
                    fn(i);
                }
                catch (...)
                {
                    std::lock_guard<std::mutex> lock(error_mutex);
                    if (!error)
                        error = std::current_exception();
                    next.store(n);
                    return;
                }
            }
        };

        std::vector<std::thread> pool;
        const std::size_t count = std::min<std::size_t>(static_cast<std::size_t>(n_threads), n);
        pool.reserve(count);
        for (std::size_t t = 0; t < count; ++t)
            pool.emplace_back(worker);
        for (auto &th : pool)
            th.join();
        if (error)
            std::rethrow_exception(error);
    }

} // namespace ueant

#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <optional>
#include <mutex>
#include <thread>
#include <vector>

namespace otsym {

// Evaluate fn(i) for i in [0, count) with up to `jobs` worker threads and
// return the results indexed by i. Work items must be pure; because results
// are collected by index and reduced by the caller in index order, the output
// is identical for every jobs value.
template <typename T, typename Fn>
std::vector<T> parallel_map(std::size_t count, int jobs, Fn&& fn) {
    std::vector<std::optional<T>> slots(count);
    std::size_t workers = count == 0 ? 0
                          : jobs > 1 ? std::min<std::size_t>(static_cast<std::size_t>(jobs), count)
                                     : 1;
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) slots[i].emplace(fn(i));
    } else {
        std::atomic<std::size_t> next{0};
        std::exception_ptr error;
        std::mutex error_mu;
        auto worker = [&]() {
            while (true) {
                std::size_t i = next.fetch_add(1);
                if (i >= count) return;
                try {
                    slots[i].emplace(fn(i));
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mu);
                    if (!error) error = std::current_exception();
                    return;
                }
            }
        };
        std::vector<std::thread> threads;
        threads.reserve(workers);
        for (std::size_t w = 0; w < workers; ++w) threads.emplace_back(worker);
        for (auto& t : threads) t.join();
        if (error) std::rethrow_exception(error);
    }
    std::vector<T> results;
    results.reserve(count);
    for (auto& slot : slots) results.push_back(std::move(*slot));
    return results;
}

}  // namespace otsym

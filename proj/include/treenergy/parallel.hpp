#pragma once

#include <atomic>
#include <exception>
#include <thread>
#include <vector>

namespace treenergy {

/// Run fn(i) for i in [0, count) across hardware threads. Work items write
/// results into caller-owned index-addressed slots, so the output order is
/// deterministic regardless of scheduling. The first exception thrown by any
/// item is rethrown on the calling thread.
template <class F>
void parallel_for(int count, F&& fn) {
    if (count <= 0) return;
    unsigned workers = std::thread::hardware_concurrency();
    if (workers == 0) workers = 1;
    if (workers <= 1 || count == 1) {
        for (int i = 0; i < count; ++i) fn(i);
        return;
    }
    workers = std::min<unsigned>(workers, static_cast<unsigned>(count));

    std::atomic<int> next{0};
    std::exception_ptr error;
    std::atomic<bool> failed{false};
    auto worker = [&] {
        for (;;) {
            const int i = next.fetch_add(1);
            if (i >= count || failed.load()) return;
            try {
                fn(i);
            } catch (...) {
                if (!failed.exchange(true)) error = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    if (failed.load() && error) std::rethrow_exception(error);
}

}  // namespace treenergy

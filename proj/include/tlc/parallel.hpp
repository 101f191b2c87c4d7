#pragma once

#include <algorithm>
#include <cstdlib>
#include <thread>
#include <vector>

namespace tlc {

/// Worker count: TLCHARGES_THREADS caps the hardware concurrency.
inline int thread_count() {
    int hw = static_cast<int>(std::thread::hardware_concurrency());
    if (hw <= 0) hw = 1;
    if (const char* env = std::getenv("TLCHARGES_THREADS")) {
        int cap = std::atoi(env);
        if (cap > 0) hw = std::min(hw, cap);
    }
    return hw;
}

/// Run fn(worker_id, begin, end) over [0, n) split into contiguous chunks.
template <typename Fn>
void parallel_chunks(size_t n, Fn&& fn) {
    int workers = std::min<size_t>(thread_count(), n ? n : 1);
    if (workers <= 1 || n < 256) {
        fn(0, size_t{0}, n);
        return;
    }
    std::vector<std::thread> pool;
    size_t chunk = (n + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
        size_t b = w * chunk, e = std::min(n, b + chunk);
        if (b >= e) break;
        pool.emplace_back([&, w, b, e] { fn(w, b, e); });
    }
    for (auto& t : pool) t.join();
}

}  // namespace tlc

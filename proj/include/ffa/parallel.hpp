#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace ffa {

// Resolution order: explicit flag > FFA_THREADS env var > hardware count.
inline unsigned thread_count(unsigned flag_value = 0) {
    if (flag_value > 0) return flag_value;
    if (const char* env = std::getenv("FFA_THREADS")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? hw : 1u;
}

// Splits [begin, end) into contiguous chunks, runs `body(chunk_begin,
// chunk_end, chunk_index)` on worker threads, then lets the caller merge
// per-chunk results in chunk order.  Determinism contract: chunk boundaries
// depend only on the range and the thread count, and merging is always
// performed in ascending chunk index, so output is invariant under the
// actual interleaving of workers.
template <typename Body>
inline unsigned parallel_chunks(uint64_t begin, uint64_t end, unsigned threads, Body&& body) {
    const uint64_t total = end > begin ? end - begin : 0;
    if (total == 0) return 0;
    unsigned nthreads = threads > 0 ? threads : 1;
    if (nthreads > total) nthreads = static_cast<unsigned>(total);
    const uint64_t chunk = (total + nthreads - 1) / nthreads;
    std::vector<std::thread> pool;
    pool.reserve(nthreads);
    unsigned chunks = 0;
    for (uint64_t lo = begin; lo < end; lo += chunk, ++chunks) {
        const uint64_t hi = std::min(lo + chunk, end);
        pool.emplace_back([&body, lo, hi, chunks] { body(lo, hi, chunks); });
    }
    for (auto& t : pool) t.join();
    return chunks;
}

}  // namespace ffa

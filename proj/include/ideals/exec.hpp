#pragma once

#include <atomic>
#include <cstdint>
#include <exception>
#include <functional>
#include <optional>
#include <mutex>
#include <span>
#include <thread>
#include <vector>

#include "ideals/arith.hpp"

namespace ideals {

// Chunked deterministic parallel sweep. Work is split into fixed chunks of
// first-factor indices (never a function of the thread count) and per-chunk
// accumulators merge in ascending chunk order, so floating-point results are
// byte-identical for any --threads value. The unit ideal is never visited.
template <class Acc>
Acc parallel_ideal_scan(std::span<const prime_ideal> primes, std::int64_t x, bool squarefree_only,
                        int threads, const std::function<Acc()>& make,
                        const std::function<void(Acc&, const ideal_view&)>& visit,
                        const std::function<void(Acc&, Acc&&)>& merge) {
    constexpr std::size_t chunk = 64;
    const std::size_t n_chunks = (primes.size() + chunk - 1) / chunk;
    std::vector<std::optional<Acc>> results(n_chunks);
    std::atomic<std::size_t> next{0};
    std::exception_ptr first_error;
    std::mutex error_mutex;
    auto worker = [&]() {
        try {
            for (;;) {
                std::size_t c = next.fetch_add(1);
                if (c >= n_chunks) return;
                Acc acc = make();
                std::size_t lo = c * chunk;
                std::size_t hi = std::min(primes.size(), lo + chunk);
                for (std::size_t i = lo; i < hi; ++i)
                    scan_ideals_from(primes, i, x, squarefree_only,
                                     [&](const ideal_view& v) { visit(acc, v); });
                results[c] = std::move(acc);
            }
        } catch (...) {
            std::scoped_lock lock(error_mutex);
            if (!first_error) first_error = std::current_exception();
            next.store(n_chunks);  // drain remaining work
        }
    };
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(threads));
        for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    if (first_error) std::rethrow_exception(first_error);
    Acc total = make();
    for (auto& r : results) merge(total, std::move(*r));
    return total;
}

}  // namespace ideals

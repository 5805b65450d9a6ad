#pragma once

#include <cstdint>
#include <functional>
#include <thread>
#include <vector>

namespace tww {

// Deterministic parallel reduction over an index space [0, count).
// Each thread folds a contiguous chunk; chunk results are then folded in
// chunk order, so the result is identical for any thread count provided
// `fold` is associative over the per-index values taken in index order
// (min with a deterministic tie-break qualifies).
template <typename R>
R parallel_index_reduce(std::uint64_t count, int threads, R init,
                        const std::function<R(std::uint64_t)>& per_index,
                        const std::function<R(const R&, const R&)>& fold) {
    if (threads < 1) threads = 1;
    if (count == 0) return init;
    if (threads == 1 || count < 64) {
        R acc = init;
        for (std::uint64_t i = 0; i < count; ++i) acc = fold(acc, per_index(i));
        return acc;
    }
    const std::uint64_t nchunks = static_cast<std::uint64_t>(threads);
    std::vector<R> partial(nchunks, init);
    std::vector<std::thread> pool;
    pool.reserve(nchunks);
    for (std::uint64_t c = 0; c < nchunks; ++c) {
        const std::uint64_t lo = count * c / nchunks;
        const std::uint64_t hi = count * (c + 1) / nchunks;
        pool.emplace_back([&, c, lo, hi] {
            R acc = init;
            for (std::uint64_t i = lo; i < hi; ++i) acc = fold(acc, per_index(i));
            partial[c] = acc;
        });
    }
    for (auto& t : pool) t.join();
    R acc = init;
    for (const R& p : partial) acc = fold(acc, p);
    return acc;
}

// Lexicographic unranking of permutations of {0..n-1}; used to split
// order-enumeration across threads without shared state.
inline std::vector<int> unrank_permutation(int n, std::uint64_t rank) {
    std::vector<std::uint64_t> fact(static_cast<std::size_t>(n) + 1, 1);
    for (int i = 1; i <= n; ++i) fact[static_cast<std::size_t>(i)] = fact[static_cast<std::size_t>(i - 1)] * static_cast<std::uint64_t>(i);
    std::vector<int> pool;
    pool.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) pool.push_back(i);
    std::vector<int> perm;
    perm.reserve(static_cast<std::size_t>(n));
    for (int i = n; i >= 1; --i) {
        const std::uint64_t f = fact[static_cast<std::size_t>(i - 1)];
        const std::uint64_t idx = rank / f;
        rank %= f;
        perm.push_back(pool[static_cast<std::size_t>(idx)]);
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(idx));
    }
    return perm;
}

inline std::uint64_t factorial(int n) {
    std::uint64_t f = 1;
    for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
    return f;
}

}  // namespace tww

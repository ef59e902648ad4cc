#pragma once

// Oracle-equivalence sweep: for every p-hook-free core up to a size cap
// and every weight that keeps n within bounds, compare enumerate_block
// against the brute-force oracle as sets of labels.

#include <atomic>
#include <mutex>
#include <set>
#include <thread>

#include "specht/block_enum.hpp"
#include "specht/oracle.hpp"

namespace specht {

struct SweepMismatch {
    long long p = 0;
    Partition core;
    long long weight = 0;
    std::vector<Partition> missing; // oracle has, enumeration lacks
    std::vector<Partition> extra;   // enumeration has, oracle lacks
};

struct SweepOptions {
    long long max_core_size = 6;
    long long max_n = 26;
    int jobs = 1;
    long long oracle_limit = oracle::kDefaultMaxN;
};

struct SweepResult {
    long long blocks_checked = 0;
    std::optional<SweepMismatch> mismatch; // first one in sweep order
};

namespace detail {

inline std::optional<SweepMismatch> check_block_against_oracle(const BlockId& block,
                                                               long long oracle_limit) {
    std::set<Partition> enumerated;
    for (const BlockItem& item : enumerate_block(block).items)
        enumerated.insert(item.lambda);
    std::set<Partition> expected;
    for (const Partition& lambda :
         oracle::brute_force_block(block.p, block.core, block.weight, oracle_limit))
        expected.insert(lambda);
    if (enumerated == expected)
        return std::nullopt;

    SweepMismatch mismatch{block.p, block.core, block.weight, {}, {}};
    for (const Partition& lambda : expected)
        if (!enumerated.count(lambda))
            mismatch.missing.push_back(lambda);
    for (const Partition& lambda : enumerated)
        if (!expected.count(lambda))
            mismatch.extra.push_back(lambda);
    return mismatch;
}

} // namespace detail

/// All blocks of the sweep for one prime, smallest n first.  The p = 2,
/// n = 4 block is skipped: the theorem path refuses it by design.
inline std::vector<BlockId> sweep_blocks(long long p, const SweepOptions& opts) {
    require_prime(p);
    std::vector<BlockId> blocks;
    for (long long core_size = 0; core_size <= opts.max_core_size; ++core_size)
        for (const Partition& core : oracle::all_partitions(core_size, opts.oracle_limit)) {
            if (!is_p_hook_free(core, p))
                continue;
            for (long long w = 0; core_size + p * w <= opts.max_n; ++w) {
                if (p == 2 && core_size + 2 * w == 4)
                    continue;
                blocks.push_back(BlockId{p, core, w});
            }
        }
    std::stable_sort(blocks.begin(), blocks.end(),
                     [](const BlockId& lhs, const BlockId& rhs) { return lhs.n() < rhs.n(); });
    return blocks;
}

inline SweepResult verify_blocks(long long p, const SweepOptions& opts) {
    const std::vector<BlockId> blocks = sweep_blocks(p, opts);
    std::vector<std::optional<SweepMismatch>> results(blocks.size());

    const int jobs = std::max(1, opts.jobs);
    if (jobs == 1) {
        for (std::size_t i = 0; i < blocks.size(); ++i)
            results[i] = detail::check_block_against_oracle(blocks[i], opts.oracle_limit);
    } else {
        std::atomic<std::size_t> next{0};
        std::exception_ptr failure;
        std::mutex failure_mutex;
        std::vector<std::thread> workers;
        for (int j = 0; j < jobs; ++j)
            workers.emplace_back([&] {
                try {
                    for (std::size_t i = next.fetch_add(1); i < blocks.size();
                         i = next.fetch_add(1))
                        results[i] =
                            detail::check_block_against_oracle(blocks[i], opts.oracle_limit);
                } catch (...) {
                    std::scoped_lock lock(failure_mutex);
                    if (!failure)
                        failure = std::current_exception();
                }
            });
        for (std::thread& worker : workers)
            worker.join();
        if (failure)
            std::rethrow_exception(failure);
    }

    SweepResult summary{static_cast<long long>(blocks.size()), std::nullopt};
    for (auto& result : results)
        if (result) {
            summary.mismatch = std::move(result);
            break;
        }
    return summary;
}

} // namespace specht

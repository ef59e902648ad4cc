#pragma once

// Brute-force verification routines.  Everything here recomputes hooks,
// cores, and the irreducibility criterion from scratch so that a bug in
// the fast paths cannot hide an equivalence failure.

#include <random>

#include "specht/partition.hpp"

namespace specht::oracle {

inline constexpr long long kDefaultMaxN = 60;

/// Every partition of n exactly once, lexicographically decreasing.
inline std::vector<Partition> all_partitions(long long n, long long limit = kDefaultMaxN) {
    if (n < 0)
        throw domain_error("all_partitions: n must be non-negative");
    if (n > limit)
        throw domain_error("all_partitions: n = " + std::to_string(n) +
                           " exceeds the safety limit " + std::to_string(limit));
    std::vector<Partition> out;
    std::vector<long long> current;
    auto recurse = [&](auto&& self, long long remaining, long long max_part) -> void {
        if (remaining == 0) {
            out.push_back(Partition(std::vector<long long>(current)));
            return;
        }
        for (long long part = std::min(remaining, max_part); part >= 1; --part) {
            current.push_back(part);
            self(self, remaining - part, part);
            current.pop_back();
        }
    };
    if (n == 0)
        out.push_back(Partition());
    else
        recurse(recurse, n, n);
    return out;
}

namespace detail {

// Hook length by direct box counting: arm along the row, leg down the column.
inline long long hook_by_counting(const std::vector<long long>& parts, long long i, long long j) {
    long long arm = parts[static_cast<std::size_t>(i - 1)] - j;
    long long leg = 0;
    for (std::size_t r = static_cast<std::size_t>(i); r < parts.size(); ++r)
        if (parts[r] >= j)
            ++leg;
    return arm + leg + 1;
}

inline long long vp(long long m, long long p) {
    long long e = 0;
    while (m % p == 0) {
        m /= p;
        ++e;
    }
    return e;
}

// Removes the rim hook of the node (i,j); assumes its hook length is known.
inline void remove_rim_hook(std::vector<long long>& parts, long long i, long long j) {
    long long col_height = 0;
    for (long long r = 1; r <= static_cast<long long>(parts.size()); ++r)
        if (parts[static_cast<std::size_t>(r - 1)] >= j)
            col_height = r;
    for (long long r = i; r < col_height; ++r)
        parts[static_cast<std::size_t>(r - 1)] = parts[static_cast<std::size_t>(r)] - 1;
    parts[static_cast<std::size_t>(col_height - 1)] = j - 1;
    while (!parts.empty() && parts.back() == 0)
        parts.pop_back();
}

// Literal triple scan of the Fayers condition, O(nodes^2) per witness node.
inline bool fayers_by_scan(const std::vector<long long>& parts, long long p) {
    for (long long i = 1; i <= static_cast<long long>(parts.size()); ++i)
        for (long long j = 1; j <= parts[static_cast<std::size_t>(i - 1)]; ++j) {
            long long v = vp(hook_by_counting(parts, i, j), p);
            if (v == 0)
                continue;
            bool row_deviates = false;
            for (long long y = 1; y <= parts[static_cast<std::size_t>(i - 1)]; ++y)
                if (vp(hook_by_counting(parts, i, y), p) != v)
                    row_deviates = true;
            bool col_deviates = false;
            for (long long x = 1; x <= static_cast<long long>(parts.size()); ++x)
                if (parts[static_cast<std::size_t>(x - 1)] >= j &&
                    vp(hook_by_counting(parts, x, j), p) != v)
                    col_deviates = true;
            if (row_deviates && col_deviates)
                return false;
        }
    return true;
}

inline bool regular_by_scan(const std::vector<long long>& parts, long long p) {
    for (std::size_t i = 0; i < parts.size(); ++i) {
        long long run = 1;
        while (i + 1 < parts.size() && parts[i + 1] == parts[i]) {
            ++i;
            ++run;
        }
        if (run >= p)
            return false;
    }
    return true;
}

} // namespace detail

/// p-core by literal rim-hook removal; when several hooks of length p
/// exist the choice is randomized by order_seed.  The result is
/// order-independent, which is exactly what this oracle checks.
inline Partition p_core_by_rim_removal(const Partition& lambda, long long p,
                                       unsigned order_seed = 0) {
    require_prime(p);
    std::mt19937 rng(order_seed);
    std::vector<long long> parts = lambda.parts();
    while (true) {
        std::vector<Node> candidates;
        for (long long i = 1; i <= static_cast<long long>(parts.size()); ++i)
            for (long long j = 1; j <= parts[static_cast<std::size_t>(i - 1)]; ++j)
                if (detail::hook_by_counting(parts, i, j) == p)
                    candidates.push_back(Node{i, j});
        if (candidates.empty())
            break;
        std::uniform_int_distribution<std::size_t> pick(0, candidates.size() - 1);
        Node chosen = candidates[pick(rng)];
        detail::remove_rim_hook(parts, chosen.row, chosen.col);
    }
    return Partition(std::move(parts));
}

/// Exhaustive block membership: all partitions of n = |core| + p*w with
/// the given p-core that pass the applicable irreducibility criterion
/// (Fayers for p > 2, the James-Mathas form for p = 2, n = 4 included).
inline std::vector<Partition> brute_force_block(long long p, const Partition& core, long long w,
                                                long long limit = kDefaultMaxN) {
    require_prime(p);
    if (w < 0)
        throw domain_error("brute_force_block: weight must be non-negative");
    {
        const std::vector<long long>& parts = core.parts();
        for (long long i = 1; i <= static_cast<long long>(parts.size()); ++i)
            for (long long j = 1; j <= parts[static_cast<std::size_t>(i - 1)]; ++j)
                if (detail::hook_by_counting(parts, i, j) % p == 0)
                    throw domain_error("brute_force_block: core is not p-hook free");
    }
    const long long n = core.size() + p * w;

    std::vector<Partition> out;
    for (const Partition& lambda : all_partitions(n, limit)) {
        if (p_core_by_rim_removal(lambda, p, 0) != core)
            continue;
        const std::vector<long long>& parts = lambda.parts();
        bool keep = false;
        if (p > 2) {
            keep = detail::fayers_by_scan(parts, p);
        } else if (n == 4 && lambda == Partition{2, 2}) {
            keep = true;
        } else {
            std::vector<long long> conj = lambda.conjugate().parts();
            keep = (detail::regular_by_scan(parts, 2) || detail::regular_by_scan(conj, 2)) &&
                   detail::fayers_by_scan(parts, 2);
        }
        if (keep)
            out.push_back(lambda);
    }
    return out;
}

} // namespace specht::oracle

#pragma once

// Constructive enumeration and counting of all p-irreducible Specht
// labels in a block: label pairs (alpha, gamma), the strip-addition
// construction, and the closed-form counts.

#include <cassert>
#include <functional>

#include "specht/core_analysis.hpp"
#include "specht/irreducibility.hpp"

namespace specht {

/// The p = 2, n = 4 block is excluded from the counting theorem; callers
/// are directed to the brute-force oracle for it.
class special_case_error : public domain_error {
public:
    using domain_error::domain_error;
};

/// Ordered pair of p-regular p-irreducible partitions recording how many
/// horizontal p-strips go on each row and vertical p-strips on each
/// column of the core.
struct LabelPair {
    Partition alpha;
    Partition gamma;

    friend bool operator==(const LabelPair&, const LabelPair&) = default;
};

struct BlockItem {
    LabelPair pair;
    Partition lambda;
};

struct BlockEnumeration {
    BlockId block;
    std::vector<BlockItem> items;
    long long count = 0;
};

namespace detail {

// Partitions of n with at most max_len parts, lexicographically decreasing.
inline void for_each_bounded_partition(long long n, long long max_len,
                                       const std::function<void(const Partition&)>& emit) {
    std::vector<long long> current;
    auto recurse = [&](auto&& self, long long remaining, long long max_part) -> void {
        if (remaining == 0) {
            emit(Partition(std::vector<long long>(current)));
            return;
        }
        if (static_cast<long long>(current.size()) == max_len)
            return;
        for (long long part = std::min(remaining, max_part); part >= 1; --part) {
            current.push_back(part);
            self(self, remaining - part, part);
            current.pop_back();
        }
    };
    if (n == 0)
        emit(Partition());
    else if (max_len > 0)
        recurse(recurse, n, n);
}

} // namespace detail

/// All p-regular p-irreducible partitions of w with at most max_len
/// parts, lexicographically decreasing.
inline std::vector<Partition> regular_irreducibles(long long w, long long max_len, long long p) {
    require_prime(p);
    if (w < 0)
        throw domain_error("regular_irreducibles: w must be non-negative");
    std::vector<Partition> out;
    detail::for_each_bounded_partition(w, max_len, [&](const Partition& q) {
        if (is_p_regular(q, p) && is_p_irreducible(q, p))
            out.push_back(q);
    });
    return out;
}

/// All label pairs of the block, p > 2: |alpha|+|gamma| = w, length caps
/// from the p-residual, plus the sum cap when t+b is maximal.  Ordered by
/// |alpha| descending, then lexicographically decreasing on alpha, then
/// on gamma.
inline std::vector<LabelPair> enumerate_label_pairs(const BlockId& block) {
    if (block.p == 2)
        throw domain_error("enumerate_label_pairs: p = 2 is handled by enumerate_block");
    const auto [t, b] = p_residual(block.core, block.p);
    const bool maximal = residual_bound(block.core, block.p).is_maximal;

    std::vector<LabelPair> pairs;
    for (long long k = block.weight; k >= 0; --k) {
        const auto alphas = regular_irreducibles(k, t, block.p);
        const auto gammas = regular_irreducibles(block.weight - k, b, block.p);
        for (const Partition& alpha : alphas)
            for (const Partition& gamma : gammas) {
                if (maximal && alpha.length() + gamma.length() > t + b - 1)
                    continue;
                pairs.push_back(LabelPair{alpha, gamma});
            }
    }
    return pairs;
}

namespace detail {

inline Partition add_row_strips(const Partition& base, const Partition& counts, long long p) {
    std::vector<long long> parts = base.parts();
    if (static_cast<std::size_t>(counts.length()) > parts.size())
        parts.resize(static_cast<std::size_t>(counts.length()), 0);
    for (long long i = 1; i <= counts.length(); ++i)
        parts[static_cast<std::size_t>(i - 1)] += p * counts.part(i);
    return Partition(std::move(parts));
}

inline Partition add_strips(const Partition& core, const LabelPair& pair, long long p,
                            bool columns_first) {
    if (columns_first) {
        Partition with_cols = add_row_strips(core.conjugate(), pair.gamma, p).conjugate();
        return add_row_strips(with_cols, pair.alpha, p);
    }
    Partition with_rows = add_row_strips(core, pair.alpha, p);
    return add_row_strips(with_rows.conjugate(), pair.gamma, p).conjugate();
}

} // namespace detail

/// Builds lambda from the core by lengthening column j by p*gamma_j and
/// row i by p*alpha_i (columns first; the two phases commute).
inline Partition construct_from_pair(const BlockId& block, const LabelPair& pair) {
    const long long p = block.p;
    if (pair.alpha.size() + pair.gamma.size() != block.weight)
        throw domain_error("label pair sizes must sum to the block weight");
    for (const Partition* q : {&pair.alpha, &pair.gamma})
        if (!is_p_regular(*q, p) || !is_p_irreducible(*q, p))
            throw domain_error("label pair components must be p-regular and p-irreducible");
    const auto [t, b] = p_residual(block.core, p);
    if (pair.alpha.length() > t || pair.gamma.length() > b)
        throw domain_error("label pair exceeds the residual length caps");
    if (p == 2) {
        if (!pair.alpha.empty() && !pair.gamma.empty())
            throw domain_error("for p = 2 one of alpha, gamma must be empty");
    } else if (residual_bound(block.core, p).is_maximal &&
               pair.alpha.length() + pair.gamma.length() > t + b - 1) {
        throw domain_error("label pair exceeds the maximal-residual sum cap");
    }

    Partition lambda = detail::add_strips(block.core, pair, p, /*columns_first=*/true);
    assert(lambda == detail::add_strips(block.core, pair, p, /*columns_first=*/false));

    // Theorem-backed guarantees; failure here is a defect, not bad input.
    if (lambda.size() != block.n() || p_core(lambda, p) != block.core ||
        !is_p_irreducible(lambda, p))
        throw std::logic_error("construct_from_pair postcondition failed for core " +
                               block.core.to_string());
    return lambda;
}

/// Every p-irreducible Specht label of the block, with its label pair.
/// For p = 2 each alpha yields one horizontal and one vertical label,
/// never merged even if they coincide.
inline BlockEnumeration enumerate_block(const BlockId& block) {
    BlockEnumeration result{block, {}, 0};
    if (block.p == 2) {
        if (block.n() == 4)
            throw special_case_error(
                "the p = 2, n = 4 block is outside the counting theorem; use the oracle");
        const auto alphas = regular_irreducibles(block.weight, block.core.length() + 1, 2);
        for (const Partition& alpha : alphas) {
            LabelPair pair{alpha, Partition()};
            result.items.push_back({pair, construct_from_pair(block, pair)});
        }
        for (const Partition& alpha : alphas) {
            LabelPair pair{Partition(), alpha};
            result.items.push_back({pair, construct_from_pair(block, pair)});
        }
    } else {
        for (const LabelPair& pair : enumerate_label_pairs(block))
            result.items.push_back({pair, construct_from_pair(block, pair)});
    }
    result.count = static_cast<long long>(result.items.size());
    return result;
}

/// Number of labels without materializing constructions.
inline long long count_block(const BlockId& block) {
    const long long p = block.p;
    const long long w = block.weight;
    if (p == 2) {
        if (block.n() == 4)
            throw special_case_error(
                "the p = 2, n = 4 block is outside the counting theorem; use the oracle");
        return 2 * static_cast<long long>(
                       regular_irreducibles(w, block.core.length() + 1, 2).size());
    }
    const auto [t, b] = p_residual(block.core, p);
    const bool maximal = residual_bound(block.core, p).is_maximal;

    long long total = 0;
    for (long long k = 0; k <= w; ++k) {
        if (!maximal) {
            total += static_cast<long long>(regular_irreducibles(k, t, p).size()) *
                     static_cast<long long>(regular_irreducibles(w - k, b, p).size());
            continue;
        }
        // Joint length distribution under the sum cap.
        std::vector<long long> by_len_a(static_cast<std::size_t>(t) + 1, 0);
        std::vector<long long> by_len_g(static_cast<std::size_t>(b) + 1, 0);
        for (const Partition& a : regular_irreducibles(k, t, p))
            ++by_len_a[static_cast<std::size_t>(a.length())];
        for (const Partition& g : regular_irreducibles(w - k, b, p))
            ++by_len_g[static_cast<std::size_t>(g.length())];
        for (long long la = 0; la <= t; ++la)
            for (long long lg = 0; lg <= b; ++lg)
                if (la + lg <= t + b - 1)
                    total += by_len_a[static_cast<std::size_t>(la)] *
                             by_len_g[static_cast<std::size_t>(lg)];
    }

    // Closed-form cross-check for the smallest residual.
    if (t == 1 && b == 1) {
        const long long expected =
            block.core.empty() ? (w >= 1 ? 2 : 1) : w + 1;
        if (total != expected)
            throw std::logic_error("count_block disagrees with the (1,1)-residual closed form");
    }
    return total;
}

struct RegularRestrictedCount {
    long long regular = 0;
    long long restricted = 0;
};

/// Counts of p-regular and p-restricted labels in the block, valid for
/// every prime including 2.
inline RegularRestrictedCount count_regular_and_restricted(const BlockId& block) {
    const auto [t, b] = p_residual(block.core, block.p);
    return RegularRestrictedCount{
        static_cast<long long>(regular_irreducibles(block.weight, t, block.p).size()),
        static_cast<long long>(regular_irreducibles(block.weight, b, block.p).size())};
}

} // namespace specht

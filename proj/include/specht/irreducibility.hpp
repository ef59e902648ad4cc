#pragma once

// The Fayers criterion, the p = 2 Specht criterion, p-tops and p-bottoms,
// the two gluings, the unique decomposition of a p-irreducible partition,
// and the shrinking bijection between p-tops and smaller partitions.

#include <cassert>
#include <optional>

#include "specht/core_analysis.hpp"
#include "specht/partition.hpp"

namespace specht {

namespace detail {

// Per-row and per-column flags: does every node in the line carry the
// same p-adic valuation of its hook length?
struct LineConstancy {
    std::vector<std::vector<long long>> vals;
    std::vector<bool> row_const;
    std::vector<bool> col_const;
};

inline LineConstancy hook_valuation_lines(const Partition& lambda, long long p) {
    LineConstancy lc;
    lc.vals = hook_table(lambda).valuations(p);
    const std::size_t rows = lc.vals.size();
    const std::size_t cols = rows ? lc.vals[0].size() : 0;
    lc.row_const.assign(rows, true);
    lc.col_const.assign(cols, true);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 1; j < lc.vals[i].size(); ++j)
            if (lc.vals[i][j] != lc.vals[i][0])
                lc.row_const[i] = false;
    for (std::size_t j = 0; j < cols; ++j)
        for (std::size_t i = 1; i < rows && j < lc.vals[i].size(); ++i)
            if (lc.vals[i][j] != lc.vals[0][j])
                lc.col_const[j] = false;
    return lc;
}

} // namespace detail

/// Fayers criterion: no triple (i,j), (i,y), (x,j) with a p-divisible hook
/// at (i,j) and deviating valuations in both its row and its column.
/// Equivalently, every node with a p-divisible hook lies in a row or a
/// column of constant valuation.
inline bool is_p_irreducible(const Partition& lambda, long long p) {
    require_prime(p);
    const auto lc = detail::hook_valuation_lines(lambda, p);
    for (std::size_t i = 0; i < lc.vals.size(); ++i)
        for (std::size_t j = 0; j < lc.vals[i].size(); ++j)
            if (lc.vals[i][j] > 0 && !lc.row_const[i] && !lc.col_const[j])
                return false;
    return true;
}

/// Whether the Specht module S^lambda stays irreducible mod p.  For p > 2
/// this is the Fayers criterion; for p = 2 the James-Mathas form applies,
/// with the exceptional (2,2) at n = 4.
inline bool is_specht_irreducible(const Partition& lambda, long long p) {
    require_prime(p);
    if (p > 2)
        return is_p_irreducible(lambda, p);
    if (lambda.size() == 4 && lambda == Partition{2, 2})
        return true;
    return (is_p_regular(lambda, 2) || is_p_restricted(lambda, 2)) &&
           is_p_irreducible(lambda, 2);
}

/// Every first-column hook length divisible by p; the empty partition is
/// not a p-top.
inline bool is_p_top(const Partition& lambda, long long p) {
    require_prime(p);
    if (lambda.empty())
        return false;
    const long long len = lambda.length();
    for (long long i = 1; i <= len; ++i)
        if ((lambda.part(i) - i + len) % p != 0)
            return false;
    return true;
}

inline bool is_p_bottom(const Partition& lambda, long long p) {
    return is_p_top(lambda.conjugate(), p);
}

/// Corner-overlapping gluing: mid's first row merges into top's block,
/// mid's first column merges into bottom's last column.
/// Degenerate cases: empty mid returns the single nonempty component;
/// empty bottom substitutes beta_1 := 1; empty top keeps mid's first row.
inline Partition glue_oplus(const Partition& top, const Partition& mid, const Partition& bottom) {
    if (mid.empty()) {
        if (!top.empty() && !bottom.empty())
            throw domain_error("oplus: mid may be empty only if top or bottom is empty");
        return top.empty() ? bottom : top;
    }
    const long long b1 = bottom.empty() ? 1 : bottom.part(1);
    std::vector<long long> parts;
    for (long long i = 1; i <= top.length(); ++i)
        parts.push_back(top.part(i) + mid.part(1) + b1 - 1);
    for (long long j = top.empty() ? 1 : 2; j <= mid.length(); ++j)
        parts.push_back(mid.part(j) + b1 - 1);
    for (long long r = 1; r <= bottom.length(); ++r)
        parts.push_back(bottom.part(r));
    return Partition(std::move(parts));
}

/// Corner-to-corner gluing used for p-cores; no shared row or column, so
/// mid's first row is kept and empty components contribute 0.
inline Partition glue_oplus_hat(const Partition& top, const Partition& mid,
                                const Partition& bottom) {
    if (mid.empty()) {
        if (!top.empty() && !bottom.empty())
            throw domain_error("oplus-hat: mid may be empty only if top or bottom is empty");
        return top.empty() ? bottom : top;
    }
    const long long b1 = bottom.part(1);
    std::vector<long long> parts;
    for (long long i = 1; i <= top.length(); ++i)
        parts.push_back(top.part(i) + mid.part(1) + b1);
    for (long long j = 1; j <= mid.length(); ++j)
        parts.push_back(mid.part(j) + b1);
    for (long long r = 1; r <= bottom.length(); ++r)
        parts.push_back(bottom.part(r));
    return Partition(std::move(parts));
}

/// The unique triple of the decomposition theorem, with the split indices
/// found along the way: split_row = first all-p-hook row, split_col =
/// first all-p-hook column.
struct Decomposition {
    Partition top;    // p-irreducible top, or empty
    Partition mid;    // p-hook free
    Partition bottom; // p-irreducible bottom, or empty
    std::optional<long long> split_row;
    std::optional<long long> split_col;
};

inline Decomposition decompose(const Partition& lambda, long long p) {
    require_prime(p);
    if (!is_p_irreducible(lambda, p))
        throw domain_error("decompose: partition is not p-irreducible");

    const Partition conj = lambda.conjugate();
    auto divisible = [&](long long i, long long j) {
        return (lambda.part(i) - i + conj.part(j) - j + 1) % p == 0;
    };

    std::optional<long long> a;
    for (long long i = 1; i <= lambda.length() && !a; ++i) {
        bool all = true;
        for (long long j = 1; j <= lambda.part(i) && all; ++j)
            all = divisible(i, j);
        if (all)
            a = i;
    }
    std::optional<long long> b;
    for (long long j = 1; j <= lambda.part(1) && !b; ++j) {
        bool all = true;
        for (long long i = 1; i <= conj.part(j) && all; ++i)
            all = divisible(i, j);
        if (all)
            b = j;
    }

    std::vector<long long> beta_parts;
    if (a)
        for (long long r = *a; r <= lambda.length(); ++r)
            beta_parts.push_back(lambda.part(r));
    std::vector<long long> top_conj;
    if (b)
        for (long long s = *b; s <= lambda.part(1); ++s)
            top_conj.push_back(conj.part(s));

    const long long row_lo = b ? conj.part(*b) : 1;
    const long long row_hi = a ? *a - 1 : lambda.length();
    const long long col_lo = a ? lambda.part(*a) : 1;
    std::vector<long long> mid_parts;
    for (long long x = row_lo; x <= row_hi; ++x) {
        long long hi = b ? std::min(lambda.part(x), *b - 1) : lambda.part(x);
        if (hi - col_lo + 1 > 0)
            mid_parts.push_back(hi - col_lo + 1);
    }

    Decomposition d{Partition(std::move(top_conj)).conjugate(), Partition(std::move(mid_parts)),
                    Partition(std::move(beta_parts)), a, b};
    if (glue_oplus(d.top, d.mid, d.bottom) != lambda)
        throw std::logic_error("decompose: gluing does not reconstruct " + lambda.to_string());
    return d;
}

/// tau_i = (k-i)(p-1) + p*sigma_i for i < k, tau_k = p*sigma_k; the
/// p-divisible hooks of tau are exactly p times the hooks of sigma.
inline Partition expand_top(const Partition& sigma, long long k, long long p) {
    require_prime(p);
    if (k < 1)
        throw domain_error("expand_top: k must be >= 1");
    if (sigma.length() > k)
        throw domain_error("expand_top: sigma has more than k parts");
    std::vector<long long> parts;
    for (long long i = 1; i <= k; ++i) {
        long long v = (k - i) * (p - 1) + p * sigma.part(i);
        if (v > 0)
            parts.push_back(v);
    }
    return Partition(std::move(parts));
}

/// Inverse of expand_top: sigma_i = (tau_i - (k-i)(p-1)) / p.
inline Partition shrink_top(const Partition& tau, long long k, long long p) {
    require_prime(p);
    if (k < 1)
        throw domain_error("shrink_top: k must be >= 1");
    if (tau.length() > k)
        throw domain_error("shrink_top: tau has more than k parts");
    std::vector<long long> parts;
    for (long long i = 1; i <= k; ++i) {
        long long d = tau.part(i) - (k - i) * (p - 1);
        if (d < 0 || d % p != 0)
            throw domain_error("shrink_top: " + tau.to_string() +
                               " is not an expanded top for k=" + std::to_string(k));
        if (d > 0)
            parts.push_back(d / p);
    }
    return Partition(std::move(parts));
}

} // namespace specht

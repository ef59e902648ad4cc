#pragma once

// p-core extraction via beta-numbers, block weight, the p-residual of a
// partition, and the residual bound with its exact maximality test.

#include <map>
#include <numeric>
#include <optional>

#include "specht/partition.hpp"

namespace specht {

/// Lengths (t,b) of the initial runs of consecutive-part differences
/// equal to p-1 in nu and its conjugate.
struct PResidual {
    long long t = 1;
    long long b = 1;

    friend bool operator==(const PResidual&, const PResidual&) = default;
};

/// Exact rational, reduced with positive denominator.
struct Rational {
    long long num = 0;
    long long den = 1;

    Rational() = default;
    Rational(long long n, long long d) : num(n), den(d) {
        if (den == 0)
            throw domain_error("zero denominator");
        long long g = std::gcd(num, den);
        if (g != 0) {
            num /= g;
            den /= g;
        }
        if (den < 0) {
            num = -num;
            den = -den;
        }
    }

    std::string to_string() const {
        return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
    }

    friend bool operator==(const Rational&, const Rational&) = default;
};

struct ResidualBound {
    long long t_plus_b = 2;
    Rational bound;
    bool is_maximal = false;
};

inline Partition p_core(const Partition& lambda, long long p);

/// A p-block: prime, p-hook-free core, and weight.  n = |core| + p*weight.
struct BlockId {
    long long p = 2;
    Partition core;
    long long weight = 0;

    long long n() const { return core.size() + p * weight; }
};

inline BlockId make_block(long long p, Partition core, long long weight) {
    require_prime(p);
    if (weight < 0)
        throw domain_error("block weight must be non-negative");
    if (!is_p_hook_free(core, p))
        throw domain_error("block core must be p-hook free");
    return BlockId{p, std::move(core), weight};
}

/// The unique p-hook-free partition reachable by removing rim p-hooks,
/// computed on first-column hook lengths: each residue class of beta
/// numbers mod p collapses to its minimal configuration.
inline Partition p_core(const Partition& lambda, long long p) {
    require_prime(p);
    const long long len = lambda.length();
    std::map<long long, long long> class_count; // residue -> #betas
    for (long long i = 1; i <= len; ++i)
        ++class_count[(lambda.part(i) + len - i) % p];

    std::vector<long long> betas;
    betas.reserve(static_cast<std::size_t>(len));
    for (auto [residue, count] : class_count)
        for (long long q = 0; q < count; ++q)
            betas.push_back(residue + q * p);
    std::sort(betas.rbegin(), betas.rend());

    std::vector<long long> parts;
    for (long long i = 1; i <= len; ++i) {
        long long part = betas[static_cast<std::size_t>(i - 1)] - (len - i);
        if (part > 0)
            parts.push_back(part);
    }
    return Partition(std::move(parts));
}

inline long long p_weight(const Partition& lambda, long long p) {
    return (lambda.size() - p_core(lambda, p).size()) / p;
}

inline PResidual p_residual(const Partition& nu, long long p) {
    require_prime(p);
    auto run = [p](const Partition& q) {
        long long i = 1;
        while (q.part(i) - q.part(i + 1) == p - 1)
            ++i;
        return i;
    };
    return PResidual{run(nu), run(nu.conjugate())};
}

/// t + b against the exact bound (l(nu)+l(nu'))/p + 2, for p > 2.
/// Maximality is cross-checked against the three-case characterization:
/// (t,b) = (1, l(nu')+1), or (l(nu)+1, 1), or t,b > 1 with (t-1,b-1) a
/// node of nu and (t,b) not.
inline ResidualBound residual_bound(const Partition& nu, long long p) {
    require_prime(p);
    if (p == 2)
        throw domain_error("residual bound is defined for p > 2");
    const auto [t, b] = p_residual(nu, p);
    const long long rows = nu.length();
    const long long cols = nu.part(1); // l(nu')
    const Rational bound(rows + cols + 2 * p, p);
    const bool is_maximal = (t + b) * p == rows + cols + 2 * p;

    const bool by_cases = (t == 1 && b == cols + 1) || (b == 1 && t == rows + 1) ||
                          (t > 1 && b > 1 && nu.contains({t - 1, b - 1}) &&
                           !nu.contains({t, b}));
    if (is_maximal != by_cases)
        throw std::logic_error("residual bound characterization mismatch for " +
                               nu.to_string());
    return ResidualBound{t + b, bound, is_maximal};
}

} // namespace specht

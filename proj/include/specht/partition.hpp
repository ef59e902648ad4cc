#pragma once

// Exact arithmetic on integer partitions: construction and validation,
// the partition-expression grammar, conjugation, hook lengths, p-adic
// valuations, and the regularity predicates.

#include <algorithm>
#include <charconv>
#include <compare>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace specht {

/// Malformed partition expression (bad token, stray character).
class parse_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Structurally invalid value (non-monotone parts, composite p, bad node, ...).
class domain_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// 1-based box coordinates in a Young diagram; row grows downward.
struct Node {
    long long row = 1;
    long long col = 1;

    friend bool operator==(const Node&, const Node&) = default;
};

/// A weakly decreasing sequence of positive integers, conceptually
/// extended by zeros beyond its length.  Immutable after construction.
class Partition {
public:
    Partition() = default;

    explicit Partition(std::vector<long long> parts) : parts_(std::move(parts)) {
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] < 1)
                throw domain_error("partition parts must be positive");
            if (i > 0 && parts_[i] > parts_[i - 1])
                throw domain_error("partition parts must be weakly decreasing");
        }
    }

    Partition(std::initializer_list<long long> parts)
        : Partition(std::vector<long long>(parts)) {}

    /// Grammar: `"-" | part ("," part)*`, part = `INT | INT "^" INT`,
    /// whitespace around commas ignored.  Empty input is the empty partition.
    static Partition parse(std::string_view text);

    /// Zero-extended part accessor, 1-based: part(i) = 0 for i > length().
    long long part(long long i) const {
        if (i < 1)
            throw domain_error("part index must be >= 1");
        return i <= static_cast<long long>(parts_.size()) ? parts_[static_cast<std::size_t>(i - 1)]
                                                          : 0;
    }

    const std::vector<long long>& parts() const { return parts_; }
    long long length() const { return static_cast<long long>(parts_.size()); }
    bool empty() const { return parts_.empty(); }

    long long size() const {
        long long total = 0;
        for (long long p : parts_) {
            if (total > (1LL << 62) - p)
                throw domain_error("partition size overflow");
            total += p;
        }
        return total;
    }

    Partition conjugate() const {
        std::vector<long long> conj;
        if (!parts_.empty()) {
            conj.reserve(static_cast<std::size_t>(parts_[0]));
            for (long long col = 1; col <= parts_[0]; ++col) {
                auto count = std::count_if(parts_.begin(), parts_.end(),
                                           [col](long long p) { return p >= col; });
                conj.push_back(static_cast<long long>(count));
            }
        }
        return Partition(std::move(conj));
    }

    bool contains(Node n) const { return n.row >= 1 && n.col >= 1 && n.col <= part(n.row); }

    /// Canonical form: runs of equal parts collapse to `INT^INT` for
    /// multiplicity >= 2; the empty partition prints as "-".
    std::string to_string() const {
        if (parts_.empty())
            return "-";
        std::string out;
        std::size_t i = 0;
        while (i < parts_.size()) {
            std::size_t j = i;
            while (j < parts_.size() && parts_[j] == parts_[i])
                ++j;
            if (!out.empty())
                out += ',';
            out += std::to_string(parts_[i]);
            if (j - i >= 2) {
                out += '^';
                out += std::to_string(j - i);
            }
            i = j;
        }
        return out;
    }

    // Vector comparison coincides with zero-extended lexicographic order.
    friend auto operator<=>(const Partition&, const Partition&) = default;

    friend std::ostream& operator<<(std::ostream& os, const Partition& p) {
        return os << p.to_string();
    }

private:
    std::vector<long long> parts_;
};

namespace detail {

inline std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t'))
        s.remove_suffix(1);
    return s;
}

inline long long parse_int(std::string_view tok) {
    long long value = 0;
    const char* first = tok.data();
    const char* last = tok.data() + tok.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last)
        throw parse_error("malformed integer in partition expression: '" + std::string(tok) +
                          "'");
    return value;
}

} // namespace detail

inline Partition Partition::parse(std::string_view text) {
    std::string_view s = detail::trim(text);
    if (s.empty() || s == "-")
        return Partition();

    constexpr long long kMaxParts = 1'000'000;
    std::vector<long long> parts;
    while (true) {
        auto comma = s.find(',');
        std::string_view tok = detail::trim(s.substr(0, comma));
        if (tok.empty())
            throw parse_error("empty part in partition expression");

        long long value = 0;
        long long repeat = 1;
        if (auto caret = tok.find('^'); caret != std::string_view::npos) {
            value = detail::parse_int(detail::trim(tok.substr(0, caret)));
            repeat = detail::parse_int(detail::trim(tok.substr(caret + 1)));
            if (repeat < 1)
                throw domain_error("exponent must be >= 1");
        } else {
            value = detail::parse_int(tok);
        }
        if (value < 1)
            throw domain_error("partition parts must be positive");
        if (static_cast<long long>(parts.size()) + repeat > kMaxParts)
            throw domain_error("partition expression too large");
        parts.insert(parts.end(), static_cast<std::size_t>(repeat), value);

        if (comma == std::string_view::npos)
            break;
        s = s.substr(comma + 1);
        if (detail::trim(s).empty())
            throw parse_error("trailing comma in partition expression");
    }
    return Partition(std::move(parts)); // rejects non-monotone sequences
}

inline bool is_prime(long long p) {
    if (p < 2)
        return false;
    for (long long d = 2; d * d <= p; ++d)
        if (p % d == 0)
            return false;
    return true;
}

inline void require_prime(long long p) {
    if (!is_prime(p))
        throw domain_error("p must be prime, got " + std::to_string(p));
}

/// Largest e with p^e dividing m.
inline long long valuation(long long m, long long p) {
    if (m < 1)
        throw domain_error("valuation requires m >= 1");
    require_prime(p);
    long long e = 0;
    while (m % p == 0) {
        m /= p;
        ++e;
    }
    return e;
}

/// h(i,j) = lambda_i - i + lambda'_j - j + 1.
inline long long hook_length(const Partition& lambda, Node n) {
    if (!lambda.contains(n))
        throw domain_error("invalid node (" + std::to_string(n.row) + "," +
                           std::to_string(n.col) + ")");
    long long conj_col = 0;
    for (long long i = 1; i <= lambda.length(); ++i)
        if (lambda.part(i) >= n.col)
            ++conj_col;
    return lambda.part(n.row) - n.row + conj_col - n.col + 1;
}

/// Per-node hook lengths of a partition.
class HookTable {
public:
    explicit HookTable(Partition owner) : owner_(std::move(owner)) {
        const Partition conj = owner_.conjugate();
        rows_.reserve(static_cast<std::size_t>(owner_.length()));
        for (long long i = 1; i <= owner_.length(); ++i) {
            std::vector<long long> row;
            row.reserve(static_cast<std::size_t>(owner_.part(i)));
            for (long long j = 1; j <= owner_.part(i); ++j)
                row.push_back(owner_.part(i) - i + conj.part(j) - j + 1);
            rows_.push_back(std::move(row));
        }
    }

    const Partition& owner() const { return owner_; }
    const std::vector<std::vector<long long>>& rows() const { return rows_; }

    long long entry(Node n) const {
        if (!owner_.contains(n))
            throw domain_error("invalid node");
        return rows_[static_cast<std::size_t>(n.row - 1)][static_cast<std::size_t>(n.col - 1)];
    }

    /// Per-node p-adic valuations of the hook lengths.
    std::vector<std::vector<long long>> valuations(long long p) const {
        require_prime(p);
        std::vector<std::vector<long long>> vals(rows_.size());
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            vals[i].reserve(rows_[i].size());
            for (long long h : rows_[i])
                vals[i].push_back(valuation(h, p));
        }
        return vals;
    }

private:
    Partition owner_;
    std::vector<std::vector<long long>> rows_;
};

inline HookTable hook_table(const Partition& lambda) { return HookTable(lambda); }

/// No nonzero part occurs p or more times.
inline bool is_p_regular(const Partition& lambda, long long p) {
    require_prime(p);
    long long run = 1;
    for (long long i = 2; i <= lambda.length() + 1; ++i) {
        if (lambda.part(i) == lambda.part(i - 1) && lambda.part(i) > 0) {
            if (++run >= p)
                return false;
        } else {
            run = 1;
        }
    }
    return true;
}

inline bool is_p_restricted(const Partition& lambda, long long p) {
    return is_p_regular(lambda.conjugate(), p);
}

/// No hook length divisible by p; equivalently, lambda is its own p-core.
inline bool is_p_hook_free(const Partition& lambda, long long p) {
    require_prime(p);
    const Partition conj = lambda.conjugate();
    for (long long i = 1; i <= lambda.length(); ++i)
        for (long long j = 1; j <= lambda.part(i); ++j)
            if ((lambda.part(i) - i + conj.part(j) - j + 1) % p == 0)
                return false;
    return true;
}

} // namespace specht

#pragma once

// ASCII Young diagrams and hook-table overlays for the CLI.

#include <sstream>

#include "specht/partition.hpp"

namespace specht {

inline constexpr long long kDiagramColumnCap = 40;

/// Row-by-row diagram of `[ ]` cells, truncated at kDiagramColumnCap
/// columns with an explicit marker.
inline std::string diagram(const Partition& lambda) {
    std::ostringstream out;
    for (long long i = 1; i <= lambda.length(); ++i) {
        const long long cells = std::min(lambda.part(i), kDiagramColumnCap);
        for (long long j = 0; j < cells; ++j)
            out << "[ ]";
        if (lambda.part(i) > kDiagramColumnCap)
            out << " ...(+" << lambda.part(i) - kDiagramColumnCap << ")";
        out << '\n';
    }
    return out.str();
}

/// Diagram with the hook length printed inside each cell; when p > 0,
/// p-divisible entries are flagged with '*'.
inline std::string hook_diagram(const Partition& lambda, long long p = 0) {
    const HookTable table = hook_table(lambda);
    long long max_hook = 1;
    for (const auto& row : table.rows())
        for (long long h : row)
            max_hook = std::max(max_hook, h);
    const int width = static_cast<int>(std::to_string(max_hook).size());

    std::ostringstream out;
    for (const auto& row : table.rows()) {
        const long long cells = std::min<long long>(static_cast<long long>(row.size()),
                                                    kDiagramColumnCap);
        for (long long j = 0; j < cells; ++j) {
            std::string text = std::to_string(row[static_cast<std::size_t>(j)]);
            out << '[' << std::string(static_cast<std::size_t>(width) - text.size(), ' ')
                << text << (p > 0 && row[static_cast<std::size_t>(j)] % p == 0 ? '*' : ' ')
                << ']';
        }
        if (static_cast<long long>(row.size()) > kDiagramColumnCap)
            out << " ...(+" << static_cast<long long>(row.size()) - kDiagramColumnCap << ")";
        out << '\n';
    }
    return out.str();
}

} // namespace specht

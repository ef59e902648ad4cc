#pragma once

// Command-line front end.  Exit codes: 0 success, 1 usage error,
// 2 domain error (bad partition, composite p, theorem-path n = 4),
// 3 verification failure.

#include <cstdlib>
#include <ostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "specht/block_enum.hpp"
#include "specht/core_analysis.hpp"
#include "specht/irreducibility.hpp"
#include "specht/oracle.hpp"
#include "specht/render.hpp"
#include "specht/verify.hpp"

namespace specht::cli {

using nlohmann::json;

namespace detail {

inline json to_json(const Partition& lambda) { return json(lambda.parts()); }

inline long long oracle_limit_from_env() {
    if (const char* env = std::getenv("SPECHT_MAX_N"))
        return std::strtoll(env, nullptr, 10);
    return oracle::kDefaultMaxN;
}

inline json enumeration_json(const BlockEnumeration& result) {
    json items = json::array();
    for (const BlockItem& item : result.items)
        items.push_back({{"alpha", to_json(item.pair.alpha)},
                         {"gamma", to_json(item.pair.gamma)},
                         {"lambda", to_json(item.lambda)}});
    return json{{"p", result.block.p},
                {"core", to_json(result.block.core)},
                {"weight", result.block.weight},
                {"n", result.block.n()},
                {"count", result.count},
                {"items", std::move(items)}};
}

struct FormatOption {
    std::string value = "text";

    void attach(CLI::App* cmd) {
        cmd->add_option("--format", value, "Output format")
            ->check(CLI::IsMember({"text", "json", "diagram"}))
            ->capture_default_str();
    }
    bool text() const { return value == "text"; }
    bool as_json() const { return value == "json"; }
    bool diag() const { return value == "diagram"; }
};

} // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"p-irreducible Specht labels in blocks of symmetric groups", "specht"};
    app.require_subcommand(1);

    std::string lambda_text;
    std::string top_text = "-";
    std::string mid_text = "-";
    std::string bottom_text = "-";
    std::string core_text;
    long long p = 0;
    long long w = 0;
    bool specht_flag = false;
    bool hat_flag = false;
    bool regular_flag = false;
    bool restricted_flag = false;
    long long max_core = 6;
    long long max_n = 26;
    int jobs = 1;
    detail::FormatOption format;

    auto* hooks_cmd = app.add_subcommand("hooks", "Hook table, p-divisible cells marked");
    hooks_cmd->add_option("partition", lambda_text, "Partition expression")->required();
    hooks_cmd->add_option("-p", p, "Prime for marking p-divisible hooks");
    format.attach(hooks_cmd);

    auto* conj_cmd = app.add_subcommand("conjugate", "Conjugate partition");
    conj_cmd->add_option("partition", lambda_text)->required();
    format.attach(conj_cmd);

    auto* core_cmd = app.add_subcommand("core", "p-core and weight");
    core_cmd->add_option("partition", lambda_text)->required();
    core_cmd->add_option("-p", p)->required();
    format.attach(core_cmd);

    auto* residual_cmd = app.add_subcommand("residual", "p-residual (t,b), bound, maximality");
    residual_cmd->add_option("partition", lambda_text)->required();
    residual_cmd->add_option("-p", p)->required();
    format.attach(residual_cmd);

    auto* check_cmd = app.add_subcommand("check", "Irreducibility predicate");
    check_cmd->add_option("partition", lambda_text)->required();
    check_cmd->add_option("-p", p)->required();
    check_cmd->add_flag("--specht", specht_flag, "Use the Specht-module predicate");
    format.attach(check_cmd);

    auto* decompose_cmd = app.add_subcommand("decompose", "Top/mid/bottom decomposition");
    decompose_cmd->add_option("partition", lambda_text)->required();
    decompose_cmd->add_option("-p", p)->required();
    format.attach(decompose_cmd);

    auto* glue_cmd = app.add_subcommand("glue", "Glue top, mid, bottom");
    glue_cmd->add_option("--top", top_text, "Top component")->capture_default_str();
    glue_cmd->add_option("--mid", mid_text, "Middle component")->capture_default_str();
    glue_cmd->add_option("--bottom", bottom_text, "Bottom component")->capture_default_str();
    glue_cmd->add_option("-p", p)->required();
    glue_cmd->add_flag("--hat", hat_flag, "Corner-to-corner gluing (for cores)");
    format.attach(glue_cmd);

    auto* enum_cmd = app.add_subcommand("enumerate", "All labels of a block");
    enum_cmd->add_option("--core", core_text, "Block core")->required();
    enum_cmd->add_option("-p", p)->required();
    enum_cmd->add_option("-w", w, "Block weight")->required();
    format.attach(enum_cmd);

    auto* count_cmd = app.add_subcommand("count", "Number of labels in a block");
    count_cmd->add_option("--core", core_text)->required();
    count_cmd->add_option("-p", p)->required();
    count_cmd->add_option("-w", w)->required();
    count_cmd->add_flag("--regular", regular_flag, "Count only p-regular labels");
    count_cmd->add_flag("--restricted", restricted_flag, "Count only p-restricted labels");
    format.attach(count_cmd);

    auto* verify_cmd = app.add_subcommand("verify", "Oracle-equivalence sweep");
    verify_cmd->add_option("-p", p)->required();
    verify_cmd->add_option("--max-core", max_core, "Largest core size")->capture_default_str();
    verify_cmd->add_option("--max-n", max_n, "Largest n")->capture_default_str();
    verify_cmd->add_option("--jobs", jobs, "Worker threads")->capture_default_str();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;
    }

    try {
        if (*hooks_cmd) {
            if (p != 0)
                require_prime(p);
            const Partition lambda = Partition::parse(lambda_text);
            if (format.as_json()) {
                json rows = json::array();
                const HookTable table = hook_table(lambda);
                for (const auto& row : table.rows())
                    rows.push_back(row);
                out << json{{"partition", detail::to_json(lambda)},
                            {"p", p != 0 ? json(p) : json(nullptr)},
                            {"hooks", std::move(rows)}}
                           .dump()
                    << '\n';
            } else {
                out << hook_diagram(lambda, p);
            }
        } else if (*conj_cmd) {
            const Partition conj = Partition::parse(lambda_text).conjugate();
            if (format.as_json())
                out << json{{"conjugate", detail::to_json(conj)}}.dump() << '\n';
            else if (format.diag())
                out << diagram(conj);
            else
                out << conj << '\n';
        } else if (*core_cmd) {
            const Partition lambda = Partition::parse(lambda_text);
            const Partition core = p_core(lambda, p);
            const long long weight = p_weight(lambda, p);
            if (format.as_json())
                out << json{{"p", p},
                            {"core", detail::to_json(core)},
                            {"weight", weight}}
                           .dump()
                    << '\n';
            else if (format.diag())
                out << diagram(core) << "weight: " << weight << '\n';
            else
                out << "core: " << core << '\n' << "weight: " << weight << '\n';
        } else if (*residual_cmd) {
            const Partition nu = Partition::parse(lambda_text);
            const PResidual residual = p_residual(nu, p);
            std::optional<ResidualBound> bound;
            if (p > 2)
                bound = residual_bound(nu, p);
            if (format.as_json()) {
                json doc{{"p", p}, {"t", residual.t}, {"b", residual.b}};
                if (bound) {
                    doc["bound"] = {{"num", bound->bound.num}, {"den", bound->bound.den}};
                    doc["maximal"] = bound->is_maximal;
                }
                out << doc.dump() << '\n';
            } else {
                out << '(' << residual.t << ',' << residual.b << ")\n";
                if (bound)
                    out << "bound: " << bound->bound.to_string() << '\n'
                        << "maximal: " << (bound->is_maximal ? "true" : "false") << '\n';
            }
        } else if (*check_cmd) {
            const Partition lambda = Partition::parse(lambda_text);
            const bool result = specht_flag ? is_specht_irreducible(lambda, p)
                                            : is_p_irreducible(lambda, p);
            if (format.as_json())
                out << json{{"p", p},
                            {"specht", specht_flag},
                            {"irreducible", result}}
                           .dump()
                    << '\n';
            else
                out << (result ? "true" : "false") << '\n';
        } else if (*decompose_cmd) {
            const Partition lambda = Partition::parse(lambda_text);
            const Decomposition d = decompose(lambda, p);
            if (format.as_json()) {
                out << json{{"top", detail::to_json(d.top)},
                            {"mid", detail::to_json(d.mid)},
                            {"bottom", detail::to_json(d.bottom)},
                            {"split_row", d.split_row ? json(*d.split_row) : json(nullptr)},
                            {"split_col", d.split_col ? json(*d.split_col) : json(nullptr)}}
                           .dump()
                    << '\n';
            } else {
                out << "top: " << d.top << '\n'
                    << "mid: " << d.mid << '\n'
                    << "bottom: " << d.bottom << '\n';
                out << "split_row: ";
                d.split_row ? out << *d.split_row : out << "-";
                out << "\nsplit_col: ";
                d.split_col ? out << *d.split_col : out << "-";
                out << '\n';
            }
        } else if (*glue_cmd) {
            const Partition top = Partition::parse(top_text);
            const Partition mid = Partition::parse(mid_text);
            const Partition bottom = Partition::parse(bottom_text);
            if (!top.empty() && !(is_p_top(top, p) && is_p_irreducible(top, p)))
                err << "warning: top is not a p-irreducible top\n";
            if (!is_p_hook_free(mid, p))
                err << "warning: mid is not p-hook free\n";
            if (!bottom.empty() && !(is_p_bottom(bottom, p) && is_p_irreducible(bottom, p)))
                err << "warning: bottom is not a p-irreducible bottom\n";
            const Partition glued =
                hat_flag ? glue_oplus_hat(top, mid, bottom) : glue_oplus(top, mid, bottom);
            if (format.as_json())
                out << json{{"result", detail::to_json(glued)}}.dump() << '\n';
            else if (format.diag())
                out << diagram(glued);
            else
                out << glued << '\n';
        } else if (*enum_cmd) {
            const BlockId block = make_block(p, Partition::parse(core_text), w);
            const BlockEnumeration result = enumerate_block(block);
            if (format.as_json()) {
                out << detail::enumeration_json(result).dump() << '\n';
            } else {
                for (const BlockItem& item : result.items)
                    out << item.pair.alpha << " | " << item.pair.gamma << " | " << item.lambda
                        << '\n';
                out << "count: " << result.count << '\n';
            }
        } else if (*count_cmd) {
            const BlockId block = make_block(p, Partition::parse(core_text), w);
            long long value = 0;
            if (regular_flag)
                value = count_regular_and_restricted(block).regular;
            else if (restricted_flag)
                value = count_regular_and_restricted(block).restricted;
            else
                value = count_block(block);
            if (format.as_json())
                out << json{{"count", value}}.dump() << '\n';
            else
                out << value << '\n';
        } else if (*verify_cmd) {
            SweepOptions opts;
            opts.max_core_size = max_core;
            opts.max_n = max_n;
            opts.jobs = jobs;
            opts.oracle_limit = detail::oracle_limit_from_env();
            const SweepResult result = verify_blocks(p, opts);
            if (result.mismatch) {
                const SweepMismatch& m = *result.mismatch;
                err << "mismatch: p=" << m.p << " core=" << m.core << " w=" << m.weight
                    << '\n';
                for (const Partition& lambda : m.missing)
                    err << "  missing: " << lambda << '\n';
                for (const Partition& lambda : m.extra)
                    err << "  extra:   " << lambda << '\n';
                return 3;
            }
            out << "verified " << result.blocks_checked << " blocks, OK\n";
        }
    } catch (const parse_error& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const domain_error& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}

} // namespace specht::cli

#pragma once

// Command-line adapter: each subcommand wraps exactly one library operation.
//
//   subgroup-canonicalize  canonicalize_subgroup
//   cotoral-test           is_cotoral
//   isotropy               isotropy_of
//   ideal-compare          ideal_contains (both directions)
//   spectrum-slice         enumerate_slice
//   semifree-check         is_k_twisted
//   semifree-decompose     decompose_twisted
//   weyl-quotient          toral_quotient_slice
//   o2-support-check       o2_is_realizable_support
//
// Success: exit 0 and a JSON document (or DOT). Failure: exit 2 and
// {"schema":1,"error":{"kind":...,"message":...}}.

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cotoral/balmer.hpp"
#include "cotoral/beyond_tori.hpp"
#include "cotoral/dot.hpp"
#include "cotoral/errors.hpp"
#include "cotoral/expr_parser.hpp"
#include "cotoral/isotropy.hpp"
#include "cotoral/json_io.hpp"
#include "cotoral/semifree.hpp"

namespace cotoral {

struct CliResult {
    int exit_code = 0;
    std::string output;
};

namespace detail {

inline Json error_document(const std::string& kind, const std::string& message) {
    Json out = document();
    out["error"] = Json{{"kind", kind}, {"message", message}};
    return out;
}

inline Json read_json_file(const std::string& path) {
    std::ostringstream buf;
    if (path == "-") {
        buf << std::cin.rdbuf();
    } else {
        std::ifstream in(path);
        if (!in) throw ValidationError("cannot open '" + path + "'");
        buf << in.rdbuf();
    }
    try {
        return Json::parse(buf.str());
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError("'" + path + "' is not valid JSON: " + e.what());
    }
}

inline Integer parse_positive(const std::string& text, const char* what) {
    Scanner s(text);
    Integer n = s.integer();
    if (!s.at_end() || n < 1) throw ValidationError(std::string(what) + " must be a positive integer");
    return n;
}

inline std::set<std::size_t> parse_dims(const std::string& text, std::size_t rank) {
    std::set<std::size_t> dims;
    if (text.empty()) {
        for (std::size_t d = 0; d <= rank; ++d) dims.insert(d);
        return dims;
    }
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        Scanner s(item);
        Integer d = s.integer();
        if (!s.at_end() || d < 0 || d > rank) throw ValidationError("--dims entries must lie in 0.." + std::to_string(rank));
        dims.insert(static_cast<std::size_t>(d));
    }
    return dims;
}

inline DotStyle style_from_env() {
    const char* c = std::getenv("COTORAL_COLOR");
    return DotStyle{c != nullptr && *c != '\0' && std::string(c) != "0"};
}

}  // namespace detail

/// `args` excludes the program name.
inline CliResult run_cli(std::vector<std::string> args) {
    CLI::App app{"Decision procedures for rational torus-equivariant spectra", "cotoral"};
    app.require_subcommand(1);

    struct Options {
        std::size_t ambient = 0;
        std::string format = "json";
        std::string sub, super, expr, x, y, in;
        std::string max_index, max_entry, dims;
        int k = 0;
        unsigned threads = 1;
    } o;

    auto add_format = [&](CLI::App* c) {
        c->add_option("--format", o.format, "json or dot")->check(CLI::IsMember({"json", "dot"}));
    };
    auto add_ambient = [&](CLI::App* c) { c->add_option("--ambient", o.ambient, "rank r of the torus T^r")->required(); };
    auto add_slice = [&](CLI::App* c) {
        c->add_option("--max-index", o.max_index, "bound on |pi_0(K)|")->required();
        c->add_option("--max-entry", o.max_entry, "bound on Hermite entries (default: max-index)");
        c->add_option("--dims", o.dims, "comma separated dimensions to keep (default: all)");
        c->add_option("--threads", o.threads, "worker threads for the order matrix")->check(CLI::PositiveNumber);
    };

    auto* canon = app.add_subcommand("subgroup-canonicalize", "Hermite normal form of a subgroup literal");
    add_ambient(canon);
    canon->add_option("--sub", o.sub, "subgroup literal")->required();
    add_format(canon);

    auto* cotoral = app.add_subcommand("cotoral-test", "is SUB cotoral in SUPER");
    add_ambient(cotoral);
    cotoral->add_option("--sub", o.sub)->required();
    cotoral->add_option("--super", o.super)->required();
    add_format(cotoral);

    auto* iso = app.add_subcommand("isotropy", "geometric isotropy of a wedge expression");
    add_ambient(iso);
    iso->add_option("--expr", o.expr)->required();
    add_format(iso);

    auto* ideal = app.add_subcommand("ideal-compare", "thick tensor ideal containment in both directions");
    add_ambient(ideal);
    ideal->add_option("--x", o.x)->required();
    ideal->add_option("--y", o.y)->required();
    add_format(ideal);

    auto* slice = app.add_subcommand("spectrum-slice", "bounded slice of the Balmer spectrum with Hasse edges");
    add_ambient(slice);
    add_slice(slice);
    add_format(slice);

    auto* check = app.add_subcommand("semifree-check", "membership of a wide sphere in thick(S^{kz})");
    check->add_option("--in", o.in, "wide sphere JSON file, - for stdin")->required();
    check->add_option("--k", o.k, "twist");
    add_format(check);

    auto* decomp = app.add_subcommand("semifree-decompose", "build certificate from S^{kz}");
    decomp->add_option("--in", o.in)->required();
    decomp->add_option("--k", o.k);
    add_format(decomp);

    auto* weyl = app.add_subcommand("weyl-quotient", "bounded slice of Sub_a(T)/W");
    weyl->add_option("--in", o.in, "Weyl action JSON file")->required();
    add_slice(weyl);
    add_format(weyl);

    auto* o2 = app.add_subcommand("o2-support-check", "realizability of an O(2) support");
    o2->add_option("--in", o.in)->required();
    add_format(o2);

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp& e) {
        std::ostringstream out;
        out << app.help();
        return {0, out.str()};
    } catch (const CLI::CallForAllHelp& e) {
        std::ostringstream out;
        out << app.help("", CLI::AppFormatMode::All);
        return {0, out.str()};
    } catch (const CLI::ParseError& e) {
        return {2, detail::error_document("usage", e.what()).dump() + "\n"};
    }

    auto json_only = [&](const char* name) {
        if (o.format != "json") throw ValidationError(std::string(name) + " emits JSON only");
    };
    auto bounds = [&](std::size_t rank) {
        SliceBounds b;
        b.max_index = detail::parse_positive(o.max_index, "--max-index");
        if (!o.max_entry.empty()) b.max_entry = detail::parse_positive(o.max_entry, "--max-entry");
        b.include_dims = detail::parse_dims(o.dims, rank);
        return b;
    };

    try {
        Json out = document();
        if (canon->parsed()) {
            json_only("subgroup-canonicalize");
            ClosedSubgroup k = parse_subgroup(o.sub, o.ambient);
            out["subgroup"] = to_json(k);
            out["dimension"] = k.dimension();
            out["component_group"] = to_json(k.component_group());
            out["connected"] = k.is_connected();
        } else if (cotoral->parsed()) {
            json_only("cotoral-test");
            out["cotoral"] = is_cotoral(parse_subgroup(o.sub, o.ambient), parse_subgroup(o.super, o.ambient));
        } else if (iso->parsed()) {
            json_only("isotropy");
            out["ambient_rank"] = o.ambient;
            out["maximal"] = to_json(isotropy_of(parse_wedge(o.expr, o.ambient)));
        } else if (ideal->parsed()) {
            json_only("ideal-compare");
            auto x = parse_wedge(o.x, o.ambient);
            auto y = parse_wedge(o.y, o.ambient);
            out["x_contains_y"] = ideal_contains(x, y);
            out["y_contains_x"] = ideal_contains(y, x);
        } else if (slice->parsed()) {
            auto s = enumerate_slice(AmbientTorus{o.ambient}, bounds(o.ambient), o.threads);
            if (o.format == "dot") return {0, to_dot(s, detail::style_from_env())};
            out = to_json(s);
        } else if (check->parsed()) {
            json_only("semifree-check");
            auto x = wide_sphere_from_json(detail::read_json_file(o.in));
            auto r = is_k_twisted(x, o.k);
            out["member"] = r.holds;
            if (!r.holds) {
                out["failed"] = condition_name(*r.failure);
                out["degree"] = r.failure->degree;
            }
        } else if (decomp->parsed()) {
            json_only("semifree-decompose");
            out = to_json(decompose_twisted(wide_sphere_from_json(detail::read_json_file(o.in)), o.k));
        } else if (weyl->parsed()) {
            auto w = weyl_action_from_json(detail::read_json_file(o.in));
            auto q = toral_quotient_slice(AmbientTorus{w.rank()}, w, bounds(w.rank()), o.threads);
            if (o.format == "dot") return {0, to_dot(q, detail::style_from_env())};
            out = to_json(q);
        } else if (o2->parsed()) {
            json_only("o2-support-check");
            out["realizable"] = o2_is_realizable_support(o2_support_from_json(detail::read_json_file(o.in)));
        }
        return {0, out.dump() + "\n"};
    } catch (const Error& e) {
        return {2, detail::error_document(e.kind(), e.what()).dump() + "\n"};
    } catch (const nlohmann::json::exception& e) {
        return {2, detail::error_document("validation", e.what()).dump() + "\n"};
    }
}

inline int parse_and_dispatch(int argc, const char* const* argv, std::ostream& out) {
    std::vector<std::string> args(argv + 1, argv + argc);
    CliResult r = run_cli(std::move(args));
    out << r.output;
    return r.exit_code;
}

}  // namespace cotoral

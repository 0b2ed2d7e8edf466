#pragma once

// Graphviz emission for spectrum slices and Weyl quotients. Edges point from
// the smaller prime to the larger one; rankdir=BT puts small primes at the bottom.

#include <sstream>
#include <string>
#include <vector>

#include "cotoral/balmer.hpp"
#include "cotoral/beyond_tori.hpp"
#include "cotoral/expr_parser.hpp"

namespace cotoral {

struct DotStyle {
    bool color = false;
};

namespace detail {

inline std::string superscript(std::size_t n) {
    static const char* digits[] = {"⁰", "¹", "²", "³", "⁴", "⁵", "⁶", "⁷", "⁸", "⁹"};
    std::string s = std::to_string(n), out;
    for (char c : s) out += digits[c - '0'];
    return out;
}

inline std::string dot_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '\n') {
            out += "\\n";
            continue;
        }
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out;
}

inline const char* dimension_color(std::size_t d) {
    static const char* palette[] = {"#fde0dd", "#c6dbef", "#c7e9c0", "#fdd0a2", "#dadaeb"};
    return palette[d % 5];
}

}  // namespace detail

/// Isomorphism type with its ambient, e.g. "C2×C4 ⊂ T², dim 0".
inline std::string subgroup_label(const ClosedSubgroup& k) {
    std::vector<std::string> factors;
    if (k.dimension() > 0) factors.push_back("T" + (k.dimension() > 1 ? detail::superscript(k.dimension()) : ""));
    for (const auto& d : k.component_group().invariant_factors) factors.push_back("C" + d.str());
    std::string group;
    for (std::size_t i = 0; i < factors.size(); ++i) group += (i ? "×" : "") + factors[i];
    if (group.empty()) group = "1";
    return group + " ⊂ T" + detail::superscript(k.ambient_rank()) + ", dim " + std::to_string(k.dimension());
}

inline std::string to_dot(const std::string& name, const std::vector<std::string>& labels,
                          const std::vector<std::size_t>& dims, const std::vector<Edge>& edges, DotStyle style) {
    std::ostringstream out;
    out << "digraph " << name << " {\n  rankdir=BT;\n  node [shape=box";
    if (style.color) out << ", style=filled";
    out << "];\n";
    for (std::size_t i = 0; i < labels.size(); ++i) {
        out << "  n" << i << " [label=\"" << detail::dot_escape(labels[i]) << "\"";
        if (style.color) out << ", fillcolor=\"" << detail::dimension_color(dims[i]) << "\"";
        out << "];\n";
    }
    for (const auto& [a, b] : edges) out << "  n" << a << " -> n" << b << ";\n";
    out << "}\n";
    return out.str();
}

inline std::string to_dot(const SpectrumSlice& s, DotStyle style = {}) {
    std::vector<std::string> labels;
    std::vector<std::size_t> dims;
    for (const auto& p : s.primes) {
        labels.push_back(subgroup_label(p.subgroup) + "\n" + format_subgroup(p.subgroup));
        dims.push_back(p.subgroup.dimension());
    }
    return to_dot("spectrum", labels, dims, s.hasse_edges, style);
}

inline std::string to_dot(const QuotientSlice& q, DotStyle style = {}) {
    std::vector<std::string> labels;
    std::vector<std::size_t> dims;
    for (const auto& o : q.orbits) {
        labels.push_back("(" + subgroup_label(o.canonical) + ")\n" + format_subgroup(o.canonical) + ", orbit " +
                         std::to_string(o.size));
        dims.push_back(o.canonical.dimension());
    }
    return to_dot("weyl_quotient", labels, dims, q.hasse_edges, style);
}

}  // namespace cotoral

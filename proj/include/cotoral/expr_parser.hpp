#pragma once

// Text syntax for subgroups and wedge expressions.
//
//   subgroup := '[' [ row { ',' row } ] ']'    annihilator generator rows
//             | 'C(' n ')'                      cyclic subgroup of T^1
//             | 'T'                             the full torus
//   row      := '[' int { ',' int } ']'
//
//   expr     := term { 'v' term }
//   term     := 'sigma(' subgroup ')' | 'S^' int '^' term | '(' expr ')' | '0'
//
// Whitespace is ignored. Suspensions are recorded on the cells but do not
// affect isotropy.

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>

#include "cotoral/errors.hpp"
#include "cotoral/isotropy.hpp"
#include "cotoral/lattice.hpp"

namespace cotoral {

namespace detail {

class Scanner {
public:
    explicit Scanner(std::string_view text) : text_(text) {}

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool at_end() {
        skip_space();
        return pos_ == text_.size();
    }

    char peek() {
        skip_space();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    bool accept(std::string_view token) {
        skip_space();
        if (text_.substr(pos_, token.size()) != token) return false;
        pos_ += token.size();
        return true;
    }

    void expect(std::string_view token) {
        if (!accept(token)) fail("expected '" + std::string(token) + "'");
    }

    Integer integer() {
        skip_space();
        std::size_t start = pos_;
        if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
        std::size_t digits = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == digits) fail("expected an integer");
        std::string s(text_.substr(start, pos_ - start));
        if (s[0] == '+') s.erase(0, 1);
        return Integer(s);
    }

    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError(what + " at offset " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
};

inline ClosedSubgroup parse_subgroup_at(Scanner& s, std::size_t ambient_rank) {
    if (s.accept("C(")) {
        Integer n = s.integer();
        s.expect(")");
        if (ambient_rank != 1) throw AmbientMismatch("C(n) denotes a subgroup of T^1, ambient rank is " + std::to_string(ambient_rank));
        if (n < 1) s.fail("C(n) needs n >= 1");
        return ClosedSubgroup::cyclic(n);
    }
    if (s.accept("T")) return ClosedSubgroup::full_torus(ambient_rank);
    s.expect("[");
    IntMatrix rows;
    if (!s.accept("]")) {
        do {
            s.expect("[");
            IntVector row;
            if (!s.accept("]")) {
                do row.push_back(s.integer());
                while (s.accept(","));
                s.expect("]");
            }
            rows.push_back(std::move(row));
        } while (s.accept(","));
        s.expect("]");
    }
    return canonicalize_subgroup(AmbientTorus{ambient_rank}, rows);
}

inline FiniteObjectExpr parse_expr_at(Scanner& s, std::size_t ambient_rank);

inline FiniteObjectExpr parse_term_at(Scanner& s, std::size_t ambient_rank) {
    if (s.accept("sigma(")) {
        ClosedSubgroup k = parse_subgroup_at(s, ambient_rank);
        s.expect(")");
        return {ambient_rank, {BasicCell{std::move(k), 0}}};
    }
    if (s.accept("S^")) {
        Integer n = s.integer();
        s.expect("^");
        FiniteObjectExpr inner = parse_term_at(s, ambient_rank);
        for (auto& cell : inner.cells) cell.degree += static_cast<int>(n);
        return inner;
    }
    if (s.accept("(")) {
        FiniteObjectExpr inner = parse_expr_at(s, ambient_rank);
        s.expect(")");
        return inner;
    }
    if (s.accept("0")) return {ambient_rank, {}};
    s.fail("expected sigma(...), S^n ^ ..., '(' or 0");
}

inline FiniteObjectExpr parse_expr_at(Scanner& s, std::size_t ambient_rank) {
    FiniteObjectExpr out = parse_term_at(s, ambient_rank);
    while (s.peek() == 'v') {
        s.expect("v");
        out = wedge(std::move(out), parse_term_at(s, ambient_rank));
    }
    return out;
}

}  // namespace detail

inline ClosedSubgroup parse_subgroup(std::string_view text, std::size_t ambient_rank) {
    detail::Scanner s(text);
    ClosedSubgroup k = detail::parse_subgroup_at(s, ambient_rank);
    if (!s.at_end()) s.fail("trailing input");
    return k;
}

inline FiniteObjectExpr parse_wedge(std::string_view text, std::size_t ambient_rank) {
    detail::Scanner s(text);
    FiniteObjectExpr e = detail::parse_expr_at(s, ambient_rank);
    if (!s.at_end()) s.fail("trailing input");
    return e;
}

/// Inverse of parse_subgroup: the Hermite basis as a row literal.
inline std::string format_subgroup(const ClosedSubgroup& k) {
    std::string out = "[";
    const auto& rows = k.annihilator().basis();
    for (std::size_t i = 0; i < rows.size(); ++i) {
        out += i ? ",[" : "[";
        for (std::size_t j = 0; j < rows[i].size(); ++j) out += (j ? "," : "") + rows[i][j].str();
        out += "]";
    }
    return out + "]";
}

}  // namespace cotoral

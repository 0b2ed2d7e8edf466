#pragma once

// JSON encodings. Every top-level document carries "schema": 1.

#include <cstdint>
#include <limits>
#include <string>

#include <nlohmann/json.hpp>

#include "cotoral/balmer.hpp"
#include "cotoral/beyond_tori.hpp"
#include "cotoral/errors.hpp"
#include "cotoral/expr_parser.hpp"
#include "cotoral/isotropy.hpp"
#include "cotoral/lattice.hpp"
#include "cotoral/semifree.hpp"

namespace cotoral {

using Json = nlohmann::ordered_json;

inline constexpr int schema_version = 1;

inline Json document() { return Json{{"schema", schema_version}}; }

inline void require_schema(const Json& j) {
    if (!j.is_object()) throw ValidationError("document must be a JSON object");
    if (!j.contains("schema") || j["schema"] != schema_version)
        throw ValidationError("document must declare \"schema\": 1");
}

namespace detail {

inline const Json& field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw ValidationError(std::string("missing field '") + key + "'");
    return j.at(key);
}

inline std::size_t to_size(const Json& j, const char* what) {
    if (!j.is_number_integer() || j.get<std::int64_t>() < 0)
        throw ValidationError(std::string(what) + " must be a non-negative integer");
    return j.get<std::size_t>();
}

inline int to_degree(const std::string& key) {
    try {
        std::size_t used = 0;
        int d = std::stoi(key, &used);
        if (used != key.size()) throw ValidationError("bad degree key '" + key + "'");
        return d;
    } catch (const std::logic_error&) {
        throw ValidationError("bad degree key '" + key + "'");
    }
}

}  // namespace detail

// integers -------------------------------------------------------------------

inline Json to_json(const Integer& n) {
    if (n >= std::numeric_limits<std::int64_t>::min() && n <= std::numeric_limits<std::int64_t>::max())
        return static_cast<std::int64_t>(n);
    return n.str();
}

inline Integer integer_from_json(const Json& j) {
    if (j.is_number_integer()) return Integer(j.get<std::int64_t>());
    if (j.is_string()) {
        detail::Scanner s(j.get<std::string>());
        Integer n = s.integer();
        if (!s.at_end()) throw ValidationError("malformed integer string");
        return n;
    }
    throw ValidationError("expected an integer");
}

// subgroups ------------------------------------------------------------------

inline Json to_json(const ClosedSubgroup& k) {
    Json rows = Json::array();
    for (const auto& row : k.annihilator().basis()) {
        Json r = Json::array();
        for (const auto& x : row) r.push_back(to_json(x));
        rows.push_back(std::move(r));
    }
    return Json{{"ambient_rank", k.ambient_rank()}, {"annihilator_rows", std::move(rows)}};
}

/// Object form, or a subgroup literal string (which needs `ambient_rank`).
inline ClosedSubgroup subgroup_from_json(const Json& j, std::optional<std::size_t> ambient_rank = std::nullopt) {
    if (j.is_string()) {
        if (!ambient_rank) throw ValidationError("subgroup literal needs an ambient rank");
        return parse_subgroup(j.get<std::string>(), *ambient_rank);
    }
    std::size_t r = detail::to_size(detail::field(j, "ambient_rank"), "ambient_rank");
    if (ambient_rank && *ambient_rank != r)
        throw AmbientMismatch("subgroup of T^" + std::to_string(r) + " where T^" + std::to_string(*ambient_rank) +
                              " was expected");
    const Json& rows = detail::field(j, "annihilator_rows");
    if (!rows.is_array()) throw ValidationError("annihilator_rows must be an array");
    IntMatrix m;
    for (const auto& row : rows) {
        if (!row.is_array()) throw ValidationError("annihilator row must be an array");
        IntVector v;
        for (const auto& x : row) v.push_back(integer_from_json(x));
        m.push_back(std::move(v));
    }
    return canonicalize_subgroup(AmbientTorus{r}, m);
}

inline Json to_json(const ComponentGroup& g) {
    Json out = Json::array();
    for (const auto& d : g.invariant_factors) out.push_back(to_json(d));
    return out;
}

inline Json to_json(const IsotropySet& a) {
    Json out = Json::array();
    for (const auto& k : a.maximal()) out.push_back(to_json(k));
    return out;
}

inline IsotropySet isotropy_from_json(const Json& j, std::size_t ambient_rank) {
    if (!j.is_array()) throw ValidationError("isotropy family must be an array of subgroups");
    std::vector<ClosedSubgroup> gens;
    for (const auto& k : j) gens.push_back(subgroup_from_json(k, ambient_rank));
    return IsotropySet::closure_of(ambient_rank, std::move(gens));
}

inline Json edges_to_json(const std::vector<Edge>& edges) {
    Json out = Json::array();
    for (const auto& [a, b] : edges) out.push_back(Json::array({a, b}));
    return out;
}

inline Json to_json(const SpectrumSlice& s) {
    Json out = document();
    out["ambient_rank"] = s.ambient_rank;
    out["max_index"] = to_json(s.bounds.max_index);
    out["max_entry"] = to_json(s.bounds.entry_bound());
    Json dims = Json::array();
    for (auto d : s.bounds.include_dims) dims.push_back(d);
    out["dims"] = std::move(dims);
    Json primes = Json::array();
    for (const auto& p : s.primes) primes.push_back(to_json(p.subgroup));
    out["primes"] = std::move(primes);
    out["hasse_edges"] = edges_to_json(s.hasse_edges);
    return out;
}

// wide spheres ----------------------------------------------------------------

inline Json to_json(const RatVector& v) {
    Json out = Json::array();
    for (const auto& q : v) out.push_back(to_string(q));
    return out;
}

inline RatVector rat_vector_from_json(const Json& j) {
    if (!j.is_array()) throw ValidationError("rational vector must be an array");
    RatVector v;
    for (const auto& x : j) {
        if (x.is_string()) v.push_back(parse_rational(x.get<std::string>()));
        else if (x.is_number_integer()) v.push_back(Rational(x.get<std::int64_t>()));
        else throw ValidationError("rational entries must be \"p/q\" strings or integers");
    }
    return v;
}

inline Json to_json(const ParityPart& p) {
    Json dims = Json::object();
    for (const auto& [d, n] : p.v_dims()) dims[std::to_string(d)] = n;
    Json filt = Json::object();
    for (const auto& [i, s] : p.jumps()) {
        Json basis = Json::array();
        for (const auto& v : s.basis()) basis.push_back(to_json(v));
        filt[std::to_string(i)] = std::move(basis);
    }
    return Json{{"v_dims", std::move(dims)}, {"filtration", std::move(filt)}};
}

/// Filtration entries are bases (lists of vectors); each entry holds from its
/// degree up to the next listed degree.
inline ParityPart parity_part_from_json(const Json& j, int parity) {
    if (!j.is_object()) throw ValidationError("parity part must be an object");
    std::map<int, std::size_t> dims;
    if (j.contains("v_dims")) {
        if (!j["v_dims"].is_object()) throw ValidationError("v_dims must be an object");
        for (const auto& [k, v] : j["v_dims"].items()) dims[detail::to_degree(k)] = detail::to_size(v, "v_dims entry");
    }
    std::size_t total = 0;
    for (const auto& kv : dims) total += kv.second;
    std::map<int, Subspace> filt;
    if (j.contains("filtration")) {
        if (!j["filtration"].is_object()) throw ValidationError("filtration must be an object");
        for (const auto& [k, v] : j["filtration"].items()) {
            if (!v.is_array()) throw ValidationError("filtration entry must be a list of vectors");
            RatMatrix rows;
            for (const auto& row : v) rows.push_back(rat_vector_from_json(row));
            filt[detail::to_degree(k)] = Subspace::span(total, std::move(rows));
        }
    }
    return ParityPart::make(parity, dims, filt);
}

inline Json to_json(const WideSphere& x) {
    Json out = document();
    out["even"] = to_json(x.even());
    out["odd"] = to_json(x.odd());
    return out;
}

inline WideSphere wide_sphere_from_json(const Json& j) {
    require_schema(j);
    ParityPart even = j.contains("even") ? parity_part_from_json(j["even"], 0) : ParityPart(0);
    ParityPart odd = j.contains("odd") ? parity_part_from_json(j["odd"], 1) : ParityPart(1);
    return {std::move(even), std::move(odd)};
}

inline Json to_json(const LaurentPoly& p) {
    Json out = Json::object();
    for (const auto& [e, c] : p) out[std::to_string(e)] = c;
    return out;
}

inline std::string condition_name(const ConditionFailure& f) { return "condition_" + std::to_string(f.condition); }

inline Json to_json(const Decomposition& d) {
    Json out = document();
    out["member"] = d.succeeded();
    if (!d.succeeded()) {
        out["failed"] = condition_name(*d.failure);
        out["degree"] = d.failure->degree;
        return out;
    }
    Json layout = Json::object();
    for (int par : {0, 1}) {
        Json dims = Json::object();
        for (const auto& [deg, n] : d.layout[static_cast<std::size_t>(par)]) dims[std::to_string(deg)] = n;
        layout[par == 0 ? "even" : "odd"] = std::move(dims);
    }
    out["layout"] = std::move(layout);
    Json steps = Json::array();
    for (const auto& s : d.steps)
        steps.push_back(Json{{"degree", s.degree}, {"twist", s.twist}, {"vector", to_json(s.vector)}});
    out["steps"] = std::move(steps);
    return out;
}

inline Decomposition decomposition_from_json(const Json& j) {
    require_schema(j);
    Decomposition d;
    if (!detail::field(j, "member").get<bool>()) {
        d.failure = ConditionFailure{detail::field(j, "failed") == "condition_1" ? 1 : 2,
                                     detail::field(j, "degree").get<int>()};
        return d;
    }
    const Json& layout = detail::field(j, "layout");
    for (int par : {0, 1}) {
        const char* key = par == 0 ? "even" : "odd";
        if (!layout.contains(key)) continue;
        for (const auto& [k, v] : layout[key].items())
            d.layout[static_cast<std::size_t>(par)][detail::to_degree(k)] = detail::to_size(v, "layout entry");
    }
    for (const auto& s : detail::field(j, "steps"))
        d.steps.push_back({detail::field(s, "degree").get<int>(), detail::field(s, "twist").get<int>(),
                           rat_vector_from_json(detail::field(s, "vector"))});
    return d;
}

// Weyl actions ------------------------------------------------------------------

inline Json to_json(const WeylAction& w) {
    Json gens = Json::array();
    for (const auto& g : w.generators()) {
        Json m = Json::array();
        for (const auto& row : g) {
            Json r = Json::array();
            for (const auto& x : row) r.push_back(to_json(x));
            m.push_back(std::move(r));
        }
        gens.push_back(std::move(m));
    }
    Json out = document();
    out["rank"] = w.rank();
    out["generators"] = std::move(gens);
    return out;
}

inline WeylAction weyl_action_from_json(const Json& j) {
    require_schema(j);
    std::size_t r = detail::to_size(detail::field(j, "rank"), "rank");
    std::vector<IntMatrix> gens;
    const Json& gj = detail::field(j, "generators");
    if (!gj.is_array()) throw ValidationError("generators must be an array of matrices");
    for (const auto& g : gj) {
        if (!g.is_array()) throw ValidationError("generator must be a matrix");
        IntMatrix m;
        for (const auto& row : g) {
            if (!row.is_array()) throw ValidationError("generator row must be an array");
            IntVector v;
            for (const auto& x : row) v.push_back(integer_from_json(x));
            m.push_back(std::move(v));
        }
        gens.push_back(std::move(m));
    }
    return WeylAction::generated_by(r, std::move(gens));
}

inline Json to_json(const QuotientSlice& q) {
    Json out = document();
    out["ambient_rank"] = q.ambient_rank;
    Json orbits = Json::array();
    for (const auto& o : q.orbits) orbits.push_back(Json{{"canonical", to_json(o.canonical)}, {"size", o.size}});
    out["orbits"] = std::move(orbits);
    out["hasse_edges"] = edges_to_json(q.hasse_edges);
    return out;
}

// O(2) supports -------------------------------------------------------------------

/// {"schema":1, "cyclic":[subgroups of T^1], "dihedral":{"finite":[n...]} or
/// {"all_but":[n...]}, "top": bool}
inline O2Support o2_support_from_json(const Json& j) {
    require_schema(j);
    O2Support s;
    if (j.contains("cyclic")) s.cyclic = isotropy_from_json(j["cyclic"], 1);
    const Json& d = detail::field(j, "dihedral");
    auto read = [](const Json& list) {
        if (!list.is_array()) throw ValidationError("dihedral index list must be an array");
        std::set<std::uint64_t> out;
        for (const auto& n : list) {
            if (!n.is_number_integer() || n.get<std::int64_t>() < 1)
                throw ValidationError("dihedral indices are integers n >= 1");
            out.insert(n.get<std::uint64_t>());
        }
        return out;
    };
    if (d.contains("finite") == d.contains("all_but"))
        throw ValidationError("dihedral must give exactly one of 'finite' or 'all_but'");
    s.dihedral = d.contains("finite") ? DihedralSet::finite(read(d["finite"])) : DihedralSet::all_but(read(d["all_but"]));
    const Json& top = detail::field(j, "top");
    if (!top.is_boolean()) throw ValidationError("top must be a boolean");
    s.top = top.get<bool>();
    return s;
}

}  // namespace cotoral

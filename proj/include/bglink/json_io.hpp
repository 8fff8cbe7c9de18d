#pragma once

// JSON forms of graphs, fingerprints and certificates, plus the small text
// formats used on the command line. Key order is fixed, so output is
// byte-stable.

#include <cstdint>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "bglink/adjacency.hpp"
#include "bglink/graph.hpp"
#include "bglink/invariants.hpp"

namespace bglink {

using Json = nlohmann::ordered_json;

/// Malformed input: bad JSON, wrong schema, invalid values.
class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace detail {

inline const Json& field(const Json& j, const char* name) {
    if (!j.is_object())
        throw FormatError(std::string("expected an object holding '") + name + "'");
    const auto it = j.find(name);
    if (it == j.end())
        throw FormatError(std::string("missing field '") + name + "'");
    return *it;
}

inline std::int64_t int_field(const Json& j, const char* name) {
    const Json& v = field(j, name);
    if (!v.is_number_integer())
        throw FormatError(std::string("field '") + name + "' must be an integer");
    return v.get<std::int64_t>();
}

inline int small_int(std::int64_t x, const char* what) {
    if (x < INT32_MIN || x > INT32_MAX)
        throw FormatError(std::string(what) + " out of range");
    return static_cast<int>(x);
}

inline bool bool_field(const Json& j, const char* name) {
    const Json& v = field(j, name);
    if (!v.is_boolean())
        throw FormatError(std::string("field '") + name + "' must be a boolean");
    return v.get<bool>();
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Graphs

inline Json to_json(const BipartiteGraph& g) {
    Json edges = Json::array();
    for (const Edge& e : g.edges())
        edges.push_back({e.u, e.l});
    return Json{{"p", g.p()}, {"q", g.q()}, {"edges", std::move(edges)}};
}

inline BipartiteGraph graph_from_json(const Json& j) {
    const int p = detail::small_int(detail::int_field(j, "p"), "p");
    const int q = detail::small_int(detail::int_field(j, "q"), "q");
    const Json& list = detail::field(j, "edges");
    if (!list.is_array())
        throw FormatError("'edges' must be an array");
    std::vector<Edge> edges;
    for (const Json& e : list) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
            throw FormatError("each edge must be a pair [u, l] of integers");
        edges.push_back({detail::small_int(e[0].get<std::int64_t>(), "u"),
                         detail::small_int(e[1].get<std::int64_t>(), "l")});
    }
    try {
        return BipartiteGraph(p, q, std::move(edges));
    } catch (const std::invalid_argument& err) {
        throw FormatError(err.what());
    }
}

// ---------------------------------------------------------------------------
// Fingerprints

inline Json to_json(const Fingerprint& f) {
    Json alexander = Json::array();
    for (std::size_t k = 0; k < f.alexander.coefficients.size(); ++k)
        if (f.alexander.coefficients[k] != 0)
            alexander.push_back({f.alexander.low + static_cast<int>(k), f.alexander.coefficients[k]});
    Json per = Json::array();
    for (const Fingerprint& piece : f.per_component)
        per.push_back(to_json(piece));
    return Json{{"components", f.components},
                {"chi_max", f.chi_max},
                {"signature", f.signature},
                {"nullity", f.nullity},
                {"determinant", f.determinant},
                {"alexander", std::move(alexander)},
                {"split", f.split},
                {"per_component", std::move(per)}};
}

inline Fingerprint fingerprint_from_json(const Json& j) {
    Fingerprint f;
    f.components = detail::small_int(detail::int_field(j, "components"), "components");
    f.chi_max = detail::small_int(detail::int_field(j, "chi_max"), "chi_max");
    f.signature = detail::small_int(detail::int_field(j, "signature"), "signature");
    f.nullity = detail::small_int(detail::int_field(j, "nullity"), "nullity");
    f.determinant = detail::int_field(j, "determinant");
    f.split = detail::bool_field(j, "split");
    if (f.components < 0 || f.nullity < 0 || f.determinant < 0)
        throw FormatError("components, nullity and determinant must be non-negative");

    const Json& terms = detail::field(j, "alexander");
    if (!terms.is_array())
        throw FormatError("'alexander' must be an array of [exponent, coefficient] pairs");
    std::vector<std::pair<int, std::int64_t>> pairs;
    for (const Json& t : terms) {
        if (!t.is_array() || t.size() != 2 || !t[0].is_number_integer() || !t[1].is_number_integer())
            throw FormatError("alexander terms must be [exponent, coefficient] integer pairs");
        pairs.emplace_back(detail::small_int(t[0].get<std::int64_t>(), "exponent"), t[1].get<std::int64_t>());
    }
    for (std::size_t k = 1; k < pairs.size(); ++k)
        if (pairs[k].first <= pairs[k - 1].first)
            throw FormatError("alexander exponents must be strictly ascending");
    if (!pairs.empty()) {
        LaurentPolynomial poly;
        poly.low = pairs.front().first;
        poly.coefficients.assign(static_cast<std::size_t>(pairs.back().first - poly.low + 1), 0);
        for (const auto& [e, c] : pairs)
            poly.coefficients[static_cast<std::size_t>(e - poly.low)] = c;
        f.alexander = trimmed(std::move(poly));
    }

    const Json& per = detail::field(j, "per_component");
    if (!per.is_array())
        throw FormatError("'per_component' must be an array");
    for (const Json& piece : per)
        f.per_component.push_back(fingerprint_from_json(piece));
    if (f.split != !f.per_component.empty())
        throw FormatError("'per_component' must be nonempty exactly when 'split' is true");
    return f;
}

// ---------------------------------------------------------------------------
// Certificates

inline const char* to_string(Side s) { return s == Side::upper ? "upper" : "lower"; }
inline const char* to_string(ChildOrder o) { return o == ChildOrder::before ? "before" : "after"; }

inline Json to_json(const SplitMove& m) {
    return Json{{"side", to_string(m.side)}, {"vertex", m.vertex}, {"position", m.position}, {"order", to_string(m.order)}};
}

inline Json to_json(const AdjacencyCertificate& c) {
    Json moves = Json::array();
    for (const SplitMove& m : c.moves)
        moves.push_back(to_json(m));
    return Json{{"source", {c.source_p, c.source_q}},
                {"moves", std::move(moves)},
                {"result", to_json(c.result)},
                {"fingerprint", to_json(c.matched)},
                {"identification", "fingerprint-only"}};
}

inline SplitMove split_move_from_json(const Json& j) {
    SplitMove m;
    const Json& side = detail::field(j, "side");
    const Json& order = detail::field(j, "order");
    if (side == "upper")
        m.side = Side::upper;
    else if (side == "lower")
        m.side = Side::lower;
    else
        throw FormatError("'side' must be \"upper\" or \"lower\"");
    if (order == "before")
        m.order = ChildOrder::before;
    else if (order == "after")
        m.order = ChildOrder::after;
    else
        throw FormatError("'order' must be \"before\" or \"after\"");
    m.vertex = detail::small_int(detail::int_field(j, "vertex"), "vertex");
    m.position = detail::small_int(detail::int_field(j, "position"), "position");
    return m;
}

inline AdjacencyCertificate certificate_from_json(const Json& j) {
    AdjacencyCertificate c;
    const Json& source = detail::field(j, "source");
    if (!source.is_array() || source.size() != 2 || !source[0].is_number_integer() || !source[1].is_number_integer())
        throw FormatError("'source' must be [p, q]");
    c.source_p = detail::small_int(source[0].get<std::int64_t>(), "p");
    c.source_q = detail::small_int(source[1].get<std::int64_t>(), "q");
    const Json& moves = detail::field(j, "moves");
    if (!moves.is_array())
        throw FormatError("'moves' must be an array");
    for (const Json& m : moves)
        c.moves.push_back(split_move_from_json(m));
    c.result = graph_from_json(detail::field(j, "result"));
    c.matched = fingerprint_from_json(detail::field(j, "fingerprint"));
    if (detail::field(j, "identification") != "fingerprint-only")
        throw FormatError("'identification' must be \"fingerprint-only\"");
    return c;
}

// ---------------------------------------------------------------------------
// Files and command-line text

inline Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw FormatError("cannot open '" + path + "'");
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::parse_error& err) {
        throw FormatError("'" + path + "' is not valid JSON: " + err.what());
    }
}

/// "4,4,3,2,2" as a list of positive integers.
inline std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (item.empty() || used != item.size())
            throw FormatError("bad integer '" + item + "' in '" + text + "'");
        out.push_back(v);
    }
    if (out.empty() || (!text.empty() && text.back() == ','))
        throw FormatError("expected comma-separated integers, got '" + text + "'");
    return out;
}

inline Partition parse_partition(const std::string& text) {
    try {
        return Partition(parse_int_list(text));
    } catch (const std::invalid_argument& err) {
        throw FormatError(err.what());
    }
}

/// "3,4" as a pair of positive integers.
inline std::pair<int, int> parse_pair(const std::string& text) {
    const std::vector<int> v = parse_int_list(text);
    if (v.size() != 2 || v[0] < 1 || v[1] < 1)
        throw FormatError("expected P,Q with positive integers, got '" + text + "'");
    return {v[0], v[1]};
}

}  // namespace bglink

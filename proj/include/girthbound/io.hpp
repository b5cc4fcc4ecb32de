#pragma once

// JSON interchange: graphs {"v", "w", "edges": [[i, j], ...]}, uncoloured
// graphs {"n", "edges": [[a, b], ...]}, matrices {"rows": [[x, ...], ...]}
// with entries as integers or "p/q" strings, and the report types.

#include "bounds.hpp"
#include "graph.hpp"
#include "meanineq.hpp"
#include "search.hpp"

#include <nlohmann/json.hpp>

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace girthbound {

using Json = nlohmann::ordered_json;

/// Raised for malformed documents; the message names the offending field.
class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace detail {
inline int json_int(const Json& doc, const char* key)
{
    if (!doc.is_object() || !doc.contains(key)) throw FormatError(std::string("missing field \"") + key + "\"");
    const Json& x = doc.at(key);
    if (!x.is_number_integer()) throw FormatError(std::string("field \"") + key + "\" must be an integer");
    return x.get<int>();
}

inline const Json& json_array(const Json& doc, const char* key)
{
    if (!doc.is_object() || !doc.contains(key)) throw FormatError(std::string("missing field \"") + key + "\"");
    const Json& x = doc.at(key);
    if (!x.is_array()) throw FormatError(std::string("field \"") + key + "\" must be an array");
    return x;
}

inline std::pair<int, int> json_pair(const Json& item)
{
    if (!item.is_array() || item.size() != 2 || !item[0].is_number_integer() || !item[1].is_number_integer())
        throw FormatError("edge entries must be 2-element integer arrays, got " + item.dump());
    return {item[0].get<int>(), item[1].get<int>()};
}
} // namespace detail

inline Json to_json(const BipartiteGraph& g)
{
    Json edges = Json::array();
    for (const Edge& e : g.edges()) edges.push_back({e.v, e.w});
    return Json{{"v", g.v_count()}, {"w", g.w_count()}, {"edges", std::move(edges)}};
}

inline BipartiteGraph graph_from_json(const Json& doc)
{
    int v = detail::json_int(doc, "v"), w = detail::json_int(doc, "w");
    std::vector<Edge> edges;
    for (const Json& item : detail::json_array(doc, "edges")) {
        auto [i, j] = detail::json_pair(item);
        edges.push_back({i, j});
    }
    try {
        return BipartiteGraph::from_edges(v, w, edges);
    } catch (const std::invalid_argument& e) {
        throw FormatError(e.what());
    }
}

inline Json to_json(const SimpleGraph& g)
{
    Json edges = Json::array();
    for (auto [a, b] : g.edges()) edges.push_back({a, b});
    return Json{{"n", g.vertex_count()}, {"edges", std::move(edges)}};
}

inline SimpleGraph simple_graph_from_json(const Json& doc)
{
    int n = detail::json_int(doc, "n");
    std::vector<SimpleGraph::Pair> pairs;
    for (const Json& item : detail::json_array(doc, "edges")) pairs.push_back(detail::json_pair(item));
    try {
        return SimpleGraph::from_edges(n, pairs);
    } catch (const std::invalid_argument& e) {
        throw FormatError(e.what());
    }
}

inline NonnegMatrix matrix_from_json(const Json& doc)
{
    std::vector<std::vector<Rational>> rows;
    for (const Json& row : detail::json_array(doc, "rows")) {
        if (!row.is_array()) throw FormatError("each row must be an array");
        rows.emplace_back();
        for (const Json& x : row) {
            if (x.is_number_integer()) rows.back().emplace_back(x.get<long long>());
            else if (x.is_string()) {
                try {
                    rows.back().push_back(parse_rational(x.get<std::string>()));
                } catch (const std::invalid_argument& e) {
                    throw FormatError(e.what());
                }
            } else
                throw FormatError("matrix entries must be integers or \"p/q\" strings, got " + x.dump());
        }
    }
    try {
        return NonnegMatrix(std::move(rows));
    } catch (const std::invalid_argument& e) {
        throw FormatError(e.what());
    }
}

inline Json to_json(const NonnegMatrix& m)
{
    Json rows = Json::array();
    for (const auto& row : m.entries()) {
        Json r = Json::array();
        for (const auto& x : row) {
            if (boost::multiprecision::denominator(x) == 1 && abs(x) < Rational(1LL << 53))
                r.push_back(static_cast<long long>(boost::multiprecision::numerator(x)));
            else
                r.push_back(to_string(x));
        }
        rows.push_back(std::move(r));
    }
    return Json{{"rows", std::move(rows)}};
}

inline Json to_json(const IneqVerdict& v)
{
    return Json{{"phi", to_string(v.phi)},
                {"rhs", to_string(v.rhs)},
                {"hypotheses_hold", v.hypotheses_hold},
                {"satisfied", v.satisfied},
                {"equality", v.equality}};
}

/// Bound values are decimal strings.
inline Json to_json(const BoundReport& r)
{
    Json values = Json::object();
    for (const auto& [m, x] : r.values) values[method_name(m)] = std::to_string(x);
    return Json{{"v", r.v},
                {"w", r.w},
                {"girth_target", r.girth_target},
                {"values", std::move(values)},
                {"binding", method_name(r.binding)}};
}

inline Json to_json(const SearchCertificate& c)
{
    return Json{{"v", c.v},
                {"w", c.w},
                {"min_girth", c.min_girth},
                {"e_max", c.e_max},
                {"exhaustive", c.exhaustive},
                {"nodes_explored", c.nodes_explored},
                {"elapsed_ms", c.elapsed.count()},
                {"witness", to_json(c.witness)}};
}

inline Json read_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw FormatError(path + ": " + e.what());
    }
}

inline void write_json_file(const std::string& path, const Json& doc)
{
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << doc.dump() << '\n';
}

} // namespace girthbound

#ifndef PLANE21_IO_HPP
#define PLANE21_IO_HPP

#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "plane21/adjacency.hpp"
#include "plane21/certificate.hpp"
#include "plane21/certify.hpp"
#include "plane21/plane_graph.hpp"

namespace plane21 {

namespace detail {

inline nlohmann::json parse_json(const std::string& text, const std::string& what) {
    try {
        return nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw validation_error(what + ": byte " + std::to_string(e.byte) + ": " +
                               e.what());
    }
}

inline std::vector<vertex> int_list(const nlohmann::json& j, const std::string& what) {
    if (!j.is_array()) throw validation_error(what + " must be an array");
    std::vector<vertex> out;
    for (const auto& x : j) {
        if (!x.is_number_integer()) throw validation_error(what + " must hold integers");
        out.push_back(x.get<int>());
    }
    return out;
}

inline std::vector<vertex> rotate_to_least(std::vector<vertex> r) {
    if (r.empty()) return r;
    auto it = std::min_element(r.begin(), r.end());
    std::rotate(r.begin(), it, r.end());
    return r;
}

} // namespace detail

// ---------------------------------------------------------------------------
// Embedded-graph document:
//   {"vertices":[...], "rotations":{"v":[neighbors in cyclic order]},
//    "outer_face":[walk] (optional), "boundary_edge":[x,y] (optional)}
// ---------------------------------------------------------------------------

inline PlaneGraph parse_graph(const std::string& text,
                              const std::string& what = "graph") {
    auto j = detail::parse_json(text, what);
    if (!j.is_object()) throw validation_error(what + ": top level must be an object");
    if (!j.contains("vertices") || !j.contains("rotations"))
        throw validation_error(what + ": needs 'vertices' and 'rotations'");
    auto vs = detail::int_list(j["vertices"], what + ".vertices");
    std::map<vertex, std::vector<vertex>> rot;
    for (vertex v : vs) rot[v];
    if (!j["rotations"].is_object())
        throw validation_error(what + ".rotations must be an object");
    for (auto& [key, val] : j["rotations"].items()) {
        vertex v;
        try {
            v = std::stoi(key);
        } catch (...) {
            throw validation_error(what + ".rotations: bad vertex key '" + key + "'");
        }
        if (!rot.count(v))
            throw validation_error(what + ".rotations mentions unknown vertex " + key);
        rot[v] = detail::int_list(val, what + ".rotations[" + key + "]");
    }
    std::optional<std::vector<vertex>> outer;
    if (j.contains("outer_face"))
        outer = detail::int_list(j["outer_face"], what + ".outer_face");
    std::optional<vpair> boundary;
    if (j.contains("boundary_edge")) {
        auto b = detail::int_list(j["boundary_edge"], what + ".boundary_edge");
        if (b.size() != 2)
            throw validation_error(what + ".boundary_edge must hold two vertices");
        boundary = vpair{b[0], b[1]};
    }
    return PlaneGraph::build(rot, outer, boundary);
}

// Canonical form: sorted vertex list, each rotation rotated to start at its
// least neighbor, the outer walk rotated to its least starting point.
inline std::string emit_graph(const PlaneGraph& g) {
    nlohmann::json j;
    j["vertices"] = g.vertices();
    nlohmann::json rot = nlohmann::json::object();
    for (vertex v : g.vertices())
        rot[std::to_string(v)] = detail::rotate_to_least(g.rotation(v));
    j["rotations"] = rot;
    if (g.has_outer() && !g.faces()[g.outer_face()].walk.empty())
        j["outer_face"] = detail::rotate_min(g.faces()[g.outer_face()].walk);
    if (auto b = g.boundary_edge()) j["boundary_edge"] = {b->first, b->second};
    return j.dump() + "\n";
}

// Plain edge-list text: one "u v" pair per line.  Serves the non-embedded
// class checks only.
inline AdjGraph parse_edge_list(const std::string& text,
                                const std::string& what = "edge list") {
    std::vector<vpair> edges;
    std::istringstream is(text);
    std::string line;
    int lineno = 0;
    while (std::getline(is, line)) {
        lineno++;
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        long long u, v;
        if (!(ls >> u >> v))
            throw validation_error(what + ": line " + std::to_string(lineno) +
                                   ": expected 'u v'");
        std::string junk;
        if (ls >> junk)
            throw validation_error(what + ": line " + std::to_string(lineno) +
                                   ": trailing content");
        edges.push_back({static_cast<vertex>(u), static_cast<vertex>(v)});
    }
    return AdjGraph::from_edges(edges);
}

// ---------------------------------------------------------------------------
// Certificate document:
//   {"matching":[[u,v]...], "arcs":[[tail,head]...], "order":[v...],
//    "boundary_edge":[x,y] (when nice)}
// ---------------------------------------------------------------------------

inline NiceDecomposition parse_cert(const std::string& text,
                                    const std::string& what = "certificate") {
    auto j = detail::parse_json(text, what);
    if (!j.is_object() || !j.contains("matching") || !j.contains("arcs") ||
        !j.contains("order"))
        throw validation_error(what + ": needs 'matching', 'arcs' and 'order'");
    NiceDecomposition c;
    for (const auto& m : j["matching"]) {
        auto p = detail::int_list(m, what + ".matching entry");
        if (p.size() != 2) throw validation_error(what + ".matching entries are pairs");
        c.matching.push_back({p[0], p[1]});
    }
    for (const auto& a : j["arcs"]) {
        auto p = detail::int_list(a, what + ".arcs entry");
        if (p.size() != 2) throw validation_error(what + ".arcs entries are pairs");
        c.arcs.push_back({p[0], p[1]});
    }
    c.order = detail::int_list(j["order"], what + ".order");
    if (j.contains("boundary_edge")) {
        auto b = detail::int_list(j["boundary_edge"], what + ".boundary_edge");
        if (b.size() != 2)
            throw validation_error(what + ".boundary_edge must hold two vertices");
        c.boundary = vpair{b[0], b[1]};
    }
    return c;
}

inline std::string emit_cert(const NiceDecomposition& cert) {
    NiceDecomposition c = cert;
    c.canonicalize();
    nlohmann::json j;
    j["matching"] = nlohmann::json::array();
    for (auto [a, b] : c.matching) j["matching"].push_back({a, b});
    j["arcs"] = nlohmann::json::array();
    for (auto [a, b] : c.arcs) j["arcs"].push_back({a, b});
    j["order"] = c.order;
    if (c.boundary) j["boundary_edge"] = {c.boundary->first, c.boundary->second};
    return j.dump() + "\n";
}

// Lists document: {"v":[c1,c2,c3], ...}
inline ListAssignment parse_lists(const std::string& text,
                                  const std::string& what = "lists") {
    auto j = detail::parse_json(text, what);
    if (!j.is_object()) throw validation_error(what + ": top level must be an object");
    ListAssignment out;
    for (auto& [key, val] : j.items()) {
        vertex v;
        try {
            v = std::stoi(key);
        } catch (...) {
            throw validation_error(what + ": bad vertex key '" + key + "'");
        }
        out[v] = detail::int_list(val, what + "[" + key + "]");
    }
    return out;
}

} // namespace plane21

#endif

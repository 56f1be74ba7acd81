#ifndef PLANE21_CERTIFY_HPP
#define PLANE21_CERTIFY_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "plane21/certificate.hpp"
#include "plane21/plane_graph.hpp"

namespace plane21 {

// ---------------------------------------------------------------------------
// Verifier.  Written against the certificate contents only; shares no state
// with the decomposer.  Every violated clause is reported with a witness.
// ---------------------------------------------------------------------------

struct Verdict {
    bool ok = true;
    std::vector<std::string> violations;

    void fail(const std::string& msg) {
        ok = false;
        violations.push_back(msg);
    }
    std::string text() const {
        std::string s;
        for (const auto& v : violations) s += v + "\n";
        return s;
    }
};

namespace detail {

inline std::string edge_str(vpair e) {
    return "(" + std::to_string(e.first) + "," + std::to_string(e.second) + ")";
}

// Kahn-style acyclicity check on the arc set, independent of the order
// witness.  Returns a directed cycle when one exists.
inline std::optional<std::vector<vertex>> find_directed_cycle(
    const std::vector<vertex>& verts, const std::vector<vpair>& arcs) {
    std::map<vertex, std::vector<vertex>> out;
    std::map<vertex, int> indeg;
    for (vertex v : verts) indeg[v] = 0;
    for (auto [t, h] : arcs) {
        out[t].push_back(h);
        indeg[h]++;
    }
    std::set<vertex> ready;
    for (auto& [v, d] : indeg)
        if (d == 0) ready.insert(v);
    size_t emitted = 0;
    std::set<vertex> gone;
    while (!ready.empty()) {
        vertex v = *ready.begin();
        ready.erase(ready.begin());
        gone.insert(v);
        emitted++;
        for (vertex h : out[v])
            if (--indeg[h] == 0) ready.insert(h);
    }
    if (emitted == verts.size()) return std::nullopt;
    // Every leftover vertex keeps an in-arc from the leftover set, so walking
    // backwards along in-arcs must revisit a vertex; the revisited segment,
    // reversed, is a directed cycle.
    std::map<vertex, std::vector<vertex>> in;
    for (auto [t, h] : arcs)
        if (!gone.count(t) && !gone.count(h)) in[h].push_back(t);
    vertex s = -1;
    for (vertex v : verts)
        if (!gone.count(v)) { s = v; break; }
    std::vector<vertex> walk{s};
    std::map<vertex, int> seen{{s, 0}};
    for (;;) {
        vertex prev = in.at(walk.back()).front();
        auto it = seen.find(prev);
        if (it != seen.end()) {
            std::vector<vertex> cyc(walk.begin() + it->second, walk.end());
            std::reverse(cyc.begin(), cyc.end());
            return cyc;
        }
        seen[prev] = static_cast<int>(walk.size());
        walk.push_back(prev);
    }
}

} // namespace detail

// Full check of a decomposition against g.  When require_boundary is set the
// nice-decomposition clauses (xy in M, x and y sinks) are enforced as well.
inline Verdict verify_decomposition(const PlaneGraph& g, const NiceDecomposition& c,
                                    bool require_boundary) {
    Verdict v;

    auto known = [&](vertex x) { return g.has_vertex(x); };
    for (auto e : c.matching)
        if (!known(e.first) || !known(e.second) || !g.adjacent(e.first, e.second))
            v.fail("matching entry " + detail::edge_str(e) + " is not an edge of the graph");
    for (auto a : c.arcs)
        if (!known(a.first) || !known(a.second) || !g.adjacent(a.first, a.second))
            v.fail("arc " + detail::edge_str(a) + " is not an edge of the graph");
    if (!v.ok) return v;

    // M is a matching.
    std::map<vertex, int> msat;
    for (auto [a, b] : c.matching) {
        msat[a]++;
        msat[b]++;
    }
    for (auto& [x, k] : msat)
        if (k > 1) v.fail("vertex " + std::to_string(x) + " lies in " +
                          std::to_string(k) + " matching edges");

    // M and the arcs partition E(g), each edge exactly once.
    std::map<vpair, int> cover;
    auto norm = [](vpair e) {
        if (e.first > e.second) std::swap(e.first, e.second);
        return e;
    };
    for (auto e : c.matching) cover[norm(e)]++;
    for (auto a : c.arcs) cover[norm(a)]++;
    for (auto e : g.edges()) {
        auto it = cover.find(e);
        if (it == cover.end())
            v.fail("edge " + detail::edge_str(e) + " is neither matched nor oriented");
        else if (it->second != 1)
            v.fail("edge " + detail::edge_str(e) + " is covered " +
                   std::to_string(it->second) + " times");
    }
    for (auto& [e, k] : cover)
        if (!g.adjacent(e.first, e.second))
            v.fail("covered pair " + detail::edge_str(e) + " is not an edge");

    // Out-degree bound.
    std::map<vertex, int> outdeg;
    for (auto [t, h] : c.arcs) outdeg[t]++;
    for (auto& [x, d] : outdeg)
        if (d > 2) v.fail("vertex " + std::to_string(x) + " has out-degree " +
                          std::to_string(d));

    // Acyclicity via the order witness...
    std::map<vertex, int> pos;
    for (size_t i = 0; i < c.order.size(); ++i) {
        if (!known(c.order[i]) || pos.count(c.order[i])) {
            v.fail("order witness is not a permutation of V");
            break;
        }
        pos[c.order[i]] = static_cast<int>(i);
    }
    if (pos.size() != g.vertices().size())
        v.fail("order witness does not cover every vertex");
    else
        for (auto [t, h] : c.arcs)
            if (pos[h] >= pos[t])
                v.fail("arc " + detail::edge_str({t, h}) +
                       " does not point backwards in the order witness");

    // ...and independently by cycle search.
    if (auto cyc = detail::find_directed_cycle(g.vertices(), c.arcs)) {
        std::string s = "orientation contains a directed cycle:";
        for (vertex x : *cyc) s += " " + std::to_string(x);
        v.fail(s);
    }

    if (require_boundary) {
        if (!c.boundary) {
            v.fail("certificate carries no boundary edge");
        } else {
            auto [x, y] = *c.boundary;
            bool in_m = false;
            for (auto e : c.matching)
                if (norm(e) == norm({x, y})) in_m = true;
            if (!in_m) v.fail("boundary edge " + detail::edge_str({x, y}) + " is not in M");
            for (vertex s : {x, y})
                if (outdeg.count(s) && outdeg[s] > 0)
                    v.fail("boundary vertex " + std::to_string(s) + " has out-degree " +
                           std::to_string(outdeg[s]));
        }
    }
    return v;
}

inline Verdict verify_nice(const PlaneGraph& g, const NiceDecomposition& c) {
    return verify_decomposition(g, c, true);
}
inline Verdict verify_plain(const PlaneGraph& g, const NiceDecomposition& c) {
    return verify_decomposition(g, c, false);
}

// ---------------------------------------------------------------------------
// Peeling order: every vertex's out-neighbors appear earlier, so in G - M
// each vertex sees at most two earlier neighbors.  Least available id first.
// ---------------------------------------------------------------------------

struct PeelResult {
    std::optional<std::vector<vertex>> order;
    std::vector<vertex> cycle; // witness when the orientation is cyclic
};

inline PeelResult peel_order(const std::vector<vertex>& verts,
                             const std::vector<vpair>& arcs) {
    std::map<vertex, std::vector<vertex>> in; // head -> tails
    std::map<vertex, int> out_remaining;
    for (vertex v : verts) out_remaining[v] = 0;
    for (auto [t, h] : arcs) {
        out_remaining.at(t)++;
        in[h].push_back(t);
    }
    std::set<vertex> ready;
    for (auto& [v, d] : out_remaining)
        if (d == 0) ready.insert(v);
    std::vector<vertex> order;
    while (!ready.empty()) {
        vertex v = *ready.begin();
        ready.erase(ready.begin());
        order.push_back(v);
        for (vertex t : in[v])
            if (--out_remaining[t] == 0) ready.insert(t);
    }
    if (order.size() == verts.size()) return {order, {}};
    auto cyc = detail::find_directed_cycle(verts, arcs);
    return {std::nullopt, cyc ? *cyc : std::vector<vertex>{}};
}

inline PeelResult peel_order(const PlaneGraph& g, const NiceDecomposition& c) {
    return peel_order(g.vertices(), c.arcs);
}

// ---------------------------------------------------------------------------
// Greedy 1-defective coloring from the certificate.
// ---------------------------------------------------------------------------

struct DefectiveColoring {
    std::map<vertex, int> color;
    std::vector<vpair> defects; // monochromatic edges; always a subset of M
};

using ListAssignment = std::map<vertex, std::vector<int>>;

// Colors the vertices along the peeling order; each vertex avoids the colors
// of its at most two earlier G - M neighbors and takes the least remaining
// list color.  Lists default to {1,2,3}.
inline DefectiveColoring greedy_color(const PlaneGraph& g, const NiceDecomposition& c,
                                      const std::optional<ListAssignment>& lists = std::nullopt) {
    if (lists) {
        for (vertex v : g.vertices()) {
            auto it = lists->find(v);
            if (it == lists->end())
                throw argument_error("list assignment misses vertex " + std::to_string(v));
            if (it->second.size() != 3)
                throw argument_error("list of vertex " + std::to_string(v) +
                                     " has size " + std::to_string(it->second.size()));
        }
    }
    Verdict v = verify_decomposition(g, c, c.boundary.has_value());
    if (!v.ok) throw argument_error("certificate does not verify:\n" + v.text());

    auto peel = peel_order(g, c);
    if (!peel.order) throw argument_error("orientation is cyclic");

    std::map<vertex, std::vector<vertex>> outn;
    for (auto [t, h] : c.arcs) outn[t].push_back(h);

    DefectiveColoring out;
    for (vertex x : *peel.order) {
        std::vector<int> list = lists ? lists->at(x) : std::vector<int>{1, 2, 3};
        std::sort(list.begin(), list.end());
        std::set<int> banned;
        for (vertex h : outn[x]) banned.insert(out.color.at(h));
        int chosen = 0;
        bool found = false;
        for (int col : list)
            if (!banned.count(col)) { chosen = col; found = true; break; }
        if (!found)
            throw contract_error("greedy coloring blocked at vertex " + std::to_string(x));
        out.color[x] = chosen;
    }
    for (auto e : g.edges())
        if (out.color.at(e.first) == out.color.at(e.second)) out.defects.push_back(e);
    return out;
}

// Independent validator: proper on G - M, every monochromatic edge in M, and
// each vertex in at most one defect edge.
inline Verdict validate_coloring(const PlaneGraph& g, const NiceDecomposition& c,
                                 const DefectiveColoring& col) {
    Verdict v;
    std::set<vpair> m;
    for (auto e : c.matching)
        m.insert({std::min(e.first, e.second), std::max(e.first, e.second)});
    std::map<vertex, int> defect_count;
    for (auto e : g.edges()) {
        auto cu = col.color.find(e.first), cv = col.color.find(e.second);
        if (cu == col.color.end() || cv == col.color.end()) {
            v.fail("edge " + detail::edge_str(e) + " has an uncolored endpoint");
            continue;
        }
        if (cu->second == cv->second) {
            if (!m.count(e))
                v.fail("monochromatic edge " + detail::edge_str(e) + " outside M");
            defect_count[e.first]++;
            defect_count[e.second]++;
        }
    }
    for (auto& [x, k] : defect_count)
        if (k > 1) v.fail("vertex " + std::to_string(x) + " meets " +
                          std::to_string(k) + " defect edges");
    return v;
}

// ---------------------------------------------------------------------------
// Brute-force oracle: enumerate the matchings containing e, smallest first,
// and greedily peel degree <= 2 vertices of G - M.  Greedy peeling is
// complete for this test: removing a removable vertex never blocks another
// one, so if any elimination order empties V \ {x, y} the greedy one does.
// ---------------------------------------------------------------------------

inline std::optional<NiceDecomposition> oracle_nice(const PlaneGraph& g, vpair e) {
    if (g.vertex_count() > 14)
        throw argument_error("oracle_nice: graph has more than 14 vertices");
    if (!g.has_vertex(e.first) || !g.has_vertex(e.second) || !g.adjacent(e.first, e.second))
        throw argument_error("oracle_nice: boundary pair is not an edge");
    vertex x = e.first, y = e.second;

    std::vector<vpair> all = g.edges();
    vpair en{std::min(x, y), std::max(x, y)};
    std::vector<vpair> rest;
    for (auto ed : all)
        if (ed != en) rest.push_back(ed);

    std::vector<vpair> matching{en};
    std::set<vertex> covered{x, y};

    auto try_peel = [&]() -> std::optional<NiceDecomposition> {
        std::set<vpair> m(matching.begin(), matching.end());
        std::map<vertex, std::set<vertex>> adj;
        for (vertex v : g.vertices()) adj[v];
        for (auto ed : all) {
            if (m.count(ed)) continue;
            adj[ed.first].insert(ed.second);
            adj[ed.second].insert(ed.first);
        }
        std::vector<vertex> peeled;
        std::vector<vpair> arcs;
        std::set<vertex> alive(g.vertices().begin(), g.vertices().end());
        for (;;) {
            vertex pick = -1;
            for (vertex v : alive) {
                if (v == x || v == y) continue;
                if (adj[v].size() <= 2) { pick = v; break; }
            }
            if (pick < 0) break;
            for (vertex w : adj[pick]) {
                arcs.push_back({pick, w});
                adj[w].erase(pick);
            }
            adj[pick].clear();
            alive.erase(pick);
            peeled.push_back(pick);
        }
        if (alive.size() != 2) return std::nullopt;
        NiceDecomposition c;
        c.matching = matching;
        c.arcs = arcs;
        c.order = {std::min(x, y), std::max(x, y)};
        for (auto it = peeled.rbegin(); it != peeled.rend(); ++it) c.order.push_back(*it);
        c.boundary = vpair{x, y};
        c.canonicalize();
        return c;
    };

    // Depth-first over the remaining edges, skip before take, so the first
    // matching tried is {e} itself.
    auto rec = [&](auto&& self, size_t i) -> std::optional<NiceDecomposition> {
        if (i == rest.size()) return try_peel();
        if (auto r = self(self, i + 1)) return r;
        auto [a, b] = rest[i];
        if (!covered.count(a) && !covered.count(b)) {
            matching.push_back(rest[i]);
            covered.insert(a);
            covered.insert(b);
            auto r = self(self, i + 1);
            matching.pop_back();
            covered.erase(a);
            covered.erase(b);
            if (r) return r;
        }
        return std::nullopt;
    };
    return rec(rec, 0);
}

} // namespace plane21

#endif

#ifndef PLANE21_ADJACENCY_HPP
#define PLANE21_ADJACENCY_HPP

#include <algorithm>
#include <map>
#include <vector>

#include "plane21/errors.hpp"
#include "plane21/plane_graph.hpp"

namespace plane21 {

// Abstract simple graph: sorted vertex ids, sorted adjacency lists.  The
// class hypotheses are subgraph conditions, so everything in class_gate works
// on this view and ignores the embedding.
struct AdjGraph {
    std::vector<vertex> verts;
    std::vector<std::vector<vertex>> adj; // parallel to verts, each sorted

    static AdjGraph from_edges(const std::vector<vpair>& edges,
                               const std::vector<vertex>& isolated = {}) {
        std::map<vertex, std::vector<vertex>> m;
        for (vertex v : isolated) m[v];
        for (auto [u, v] : edges) {
            if (u == v) throw validation_error("loop edge in edge list");
            m[u].push_back(v);
            m[v].push_back(u);
        }
        AdjGraph g;
        for (auto& [v, nb] : m) {
            std::sort(nb.begin(), nb.end());
            if (std::adjacent_find(nb.begin(), nb.end()) != nb.end())
                throw validation_error("duplicate edge in edge list at vertex " +
                                       std::to_string(v));
            g.verts.push_back(v);
            g.adj.push_back(std::move(nb));
        }
        return g;
    }

    static AdjGraph from_plane(const PlaneGraph& g) {
        AdjGraph a;
        a.verts = g.vertices();
        a.adj.reserve(a.verts.size());
        for (vertex v : a.verts) {
            auto nb = g.rotation(v);
            std::sort(nb.begin(), nb.end());
            a.adj.push_back(std::move(nb));
        }
        return a;
    }

    int n() const { return static_cast<int>(verts.size()); }

    int index_of(vertex v) const {
        auto it = std::lower_bound(verts.begin(), verts.end(), v);
        if (it == verts.end() || *it != v)
            throw argument_error("no such vertex: " + std::to_string(v));
        return static_cast<int>(it - verts.begin());
    }

    const std::vector<vertex>& neighbors(vertex v) const { return adj[index_of(v)]; }
    int degree(vertex v) const { return static_cast<int>(neighbors(v).size()); }

    bool has_edge(vertex u, vertex v) const {
        const auto& nb = adj[index_of(u)];
        return std::binary_search(nb.begin(), nb.end(), v);
    }

    std::vector<vpair> edges() const {
        std::vector<vpair> es;
        for (size_t i = 0; i < verts.size(); ++i)
            for (vertex w : adj[i])
                if (verts[i] < w) es.emplace_back(verts[i], w);
        return es;
    }
};

} // namespace plane21

#endif

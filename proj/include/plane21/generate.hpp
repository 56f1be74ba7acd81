#ifndef PLANE21_GENERATE_HPP
#define PLANE21_GENERATE_HPP

#include <map>
#include <random>
#include <vector>

#include "plane21/class_gate.hpp"
#include "plane21/plane_graph.hpp"

namespace plane21 {

struct GenResult {
    PlaneGraph graph;
    bool budget_exhausted = false;
};

// Best-effort random member of the requested class: start from a short cycle
// whose length avoids the forbidden cycle lengths, then repeatedly split a
// face with a path of 0..2 fresh vertices, rejecting any step that would
// leave the class.  Each accepted state is in class, so on budget exhaustion
// the largest graph found so far is returned with a warning flag.  The seed
// fully determines the output.
inline GenResult generate(unsigned long long seed, int n, CaseTag cas,
                          int budget_factor = 80) {
    if (n < 1) throw argument_error("generate: n must be at least 1");
    std::mt19937_64 rng(seed);
    auto draw = [&](int bound) { return static_cast<int>(rng() % bound); };

    if (n == 1) {
        std::map<vertex, std::vector<vertex>> rot = {{0, {}}};
        return {PlaneGraph::build(rot), false};
    }
    if (n == 2) {
        std::map<vertex, std::vector<vertex>> rot = {{0, {1}}, {1, {0}}};
        return {PlaneGraph::build(rot), false};
    }

    const int starts[] = {3, 5, 6, 7, 8, 10};
    int len = 3;
    for (int t = 0; t < 16; ++t) {
        len = starts[draw(6)];
        if (len <= n) break;
        len = 3;
    }
    std::map<vertex, std::vector<vertex>> rot;
    for (int i = 0; i < len; ++i)
        rot[i] = {(i + len - 1) % len, (i + 1) % len};
    PlaneGraph g = PlaneGraph::build(rot);
    int next_id = len;

    auto in_class_after = [&](const PlaneGraph& cand,
                              const std::vector<vpair>& new_edges) {
        AdjGraph a = AdjGraph::from_plane(cand);
        if (cas == CaseTag::Case3) {
            for (auto e : new_edges)
                if (has_cycle_of_length_through(a, 4, e) ||
                    has_cycle_of_length_through(a, 9, e))
                    return false;
            return true;
        }
        auto ids = (cas == CaseTag::Case1) ? case1_configs() : case2_configs();
        for (ConfigId id : ids)
            for (auto e : new_edges)
                if (contains_config_anchored(a, id, e)) return false;
        return true;
    };

    int budget = budget_factor * n;
    bool exhausted = true;
    while (budget-- > 0) {
        if (g.vertex_count() >= n) {
            exhausted = false;
            break;
        }
        // pick a face and two distinct corners on it
        int f = draw(g.face_count());
        const auto& w = g.faces()[f].walk;
        const int d = static_cast<int>(w.size());
        if (d < 3) continue;
        int i = draw(d), j = draw(d);
        if (i == j || w[i] == w[j]) continue;
        int t = draw(100) < 35 ? 0 : (draw(100) < 60 ? 1 : 2);
        if (g.vertex_count() + t > n) t = n - g.vertex_count();
        vertex a = w[i], b = w[j];
        if (t == 0 && g.adjacent(a, b)) continue;

        // splice the new path into the two corners of face f
        std::map<vertex, std::vector<vertex>> nr;
        for (vertex v : g.vertices()) nr[v] = g.rotation(v);
        std::vector<vertex> path{a};
        for (int q = 0; q < t; ++q) path.push_back(next_id + q);
        path.push_back(b);
        auto insert_after = [&](vertex at, vertex prev_nbr, vertex fresh) {
            auto& r = nr[at];
            auto it = std::find(r.begin(), r.end(), prev_nbr);
            r.insert(it + 1, fresh);
        };
        vertex pa = w[(i + d - 1) % d], pb = w[(j + d - 1) % d];
        insert_after(a, pa, path[1]);
        insert_after(b, pb, path[path.size() - 2]);
        for (int q = 0; q < t; ++q) {
            vertex p = next_id + q;
            nr[p] = {path[q], path[q + 2]};
        }
        std::vector<vpair> new_edges;
        for (size_t q = 0; q + 1 < path.size(); ++q)
            new_edges.push_back({path[q], path[q + 1]});

        PlaneGraph cand = PlaneGraph::build(nr);
        if (!in_class_after(cand, new_edges)) continue;
        g = std::move(cand);
        next_id += t;
    }
    if (g.vertex_count() >= n) exhausted = false;
    return {g, exhausted};
}

} // namespace plane21

#endif

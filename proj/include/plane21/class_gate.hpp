#ifndef PLANE21_CLASS_GATE_HPP
#define PLANE21_CLASS_GATE_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "plane21/adjacency.hpp"
#include "plane21/config_atlas.hpp"

namespace plane21 {

enum class CaseTag { Case1 = 1, Case2 = 2, Case3 = 3 };

inline std::string to_string(CaseTag t) {
    switch (t) {
        case CaseTag::Case1: return "case1";
        case CaseTag::Case2: return "case2";
        case CaseTag::Case3: return "case3";
    }
    return "?";
}

// ---------------------------------------------------------------------------
// Fixed-length cycle search: depth-bounded DFS from each start vertex with
// canonical-start pruning (only vertices larger than the start may appear).
// Returns a simple cycle of exactly k distinct vertices, validated against
// the edge set, or nothing.
// ---------------------------------------------------------------------------
inline std::optional<std::vector<vertex>> find_cycle_of_length(const AdjGraph& g, int k) {
    if (k < 3 || k > 9)
        throw argument_error("find_cycle_of_length: k must be in [3,9], got " +
                             std::to_string(k));
    std::vector<vertex> path;
    std::set<vertex> on_path;

    // Depth-first extension; second vertex kept below the last one to skip the
    // mirror traversal of each cycle.
    auto dfs = [&](auto&& self, vertex start) -> bool {
        vertex v = path.back();
        if (static_cast<int>(path.size()) == k)
            return g.has_edge(v, start) && path[1] < path.back();
        for (vertex w : g.neighbors(v)) {
            if (w <= start || on_path.count(w)) continue;
            path.push_back(w);
            on_path.insert(w);
            if (self(self, start)) return true;
            on_path.erase(w);
            path.pop_back();
        }
        return false;
    };

    for (vertex s : g.verts) {
        path = {s};
        on_path = {s};
        if (dfs(dfs, s)) return path;
    }
    return std::nullopt;
}

inline bool has_cycle_of_length(const AdjGraph& g, int k) {
    return find_cycle_of_length(g, k).has_value();
}

// ---------------------------------------------------------------------------
// Subgraph matcher: backtracking over pattern vertices in id order with
// degree-based candidate filtering and lex-leader pruning on the pattern's
// automorphism group.  Plain subgraph semantics (extra host edges are fine).
// ---------------------------------------------------------------------------
namespace detail {

struct PatternData {
    int n = 0;
    std::vector<std::vector<int>> earlier;   // pattern neighbors with smaller id
    std::vector<int> deg;
    std::vector<std::vector<int>> autos;     // automorphisms as permutations
};

inline std::vector<std::vector<int>> pattern_automorphisms(
    int n, const std::vector<std::vector<bool>>& adj, const std::vector<int>& deg) {
    std::vector<std::vector<int>> out;
    std::vector<int> perm(n, -1);
    std::vector<bool> used(n, false);
    auto rec = [&](auto&& self, int i) -> void {
        if (i == n) {
            out.push_back(perm);
            return;
        }
        for (int c = 0; c < n; ++c) {
            if (used[c] || deg[c] != deg[i]) continue;
            bool ok = true;
            for (int j = 0; j < i && ok; ++j)
                if (adj[i][j] != adj[c][perm[j]]) ok = false;
            if (ok) {
                perm[i] = c;
                used[c] = true;
                self(self, i + 1);
                used[c] = false;
                perm[i] = -1;
            }
        }
    };
    rec(rec, 0);
    return out;
}

inline const PatternData& pattern_data(ConfigId id) {
    static std::map<ConfigId, PatternData> cache;
    auto it = cache.find(id);
    if (it != cache.end()) return it->second;
    const PatternGraph& p = pattern(id);
    PatternData d;
    d.n = p.nverts;
    d.earlier.resize(d.n);
    d.deg.assign(d.n, 0);
    std::vector<std::vector<bool>> adj(d.n, std::vector<bool>(d.n, false));
    for (auto [a, b] : p.edges) {
        adj[a][b] = adj[b][a] = true;
        d.deg[a]++;
        d.deg[b]++;
        d.earlier[std::max(a, b)].push_back(std::min(a, b));
    }
    d.autos = pattern_automorphisms(d.n, adj, d.deg);
    cache[id] = std::move(d);
    return cache[id];
}

// Prune partial maps that are lexicographically above an automorphic image.
inline bool lex_leader_ok(const std::vector<vertex>& m, int filled,
                          const std::vector<std::vector<int>>& autos) {
    for (const auto& sigma : autos) {
        for (int i = 0; i < filled; ++i) {
            if (sigma[i] >= filled) break;
            if (m[i] < m[sigma[i]]) break;
            if (m[i] > m[sigma[i]]) return false;
        }
    }
    return true;
}

} // namespace detail

// Injective, edge-preserving map pattern -> g (subgraph, not induced), or
// nothing.  When an embedding exists the lexicographically least one (as the
// tuple m[0..n-1] of host ids) is returned.
inline std::optional<std::vector<vertex>> contains_config(const AdjGraph& g, ConfigId id) {
    const auto& pd = detail::pattern_data(id);
    if (g.n() < pd.n) return std::nullopt;

    std::vector<vertex> m(pd.n, -1);
    std::set<vertex> used;

    auto rec = [&](auto&& self, int i) -> bool {
        if (i == pd.n) return true;
        // Candidates: neighbors of the image of the first earlier pattern
        // neighbor (every i > 0 has one), or every vertex for i == 0.
        const std::vector<vertex>* pool =
            pd.earlier[i].empty() ? &g.verts : &g.neighbors(m[pd.earlier[i][0]]);
        for (vertex c : *pool) {
            if (used.count(c) || g.degree(c) < pd.deg[i]) continue;
            bool ok = true;
            for (int j : pd.earlier[i])
                if (!g.has_edge(m[j], c)) { ok = false; break; }
            if (!ok) continue;
            m[i] = c;
            if (!detail::lex_leader_ok(m, i + 1, pd.autos)) { m[i] = -1; continue; }
            used.insert(c);
            if (self(self, i + 1)) return true;
            used.erase(c);
            m[i] = -1;
        }
        return false;
    };
    if (rec(rec, 0)) return m;
    return std::nullopt;
}

// Embedding whose image uses the given host edge, or nothing.  The search is
// seeded at the anchor, so on a graph known clean before an insertion only
// the new edges need checking.
inline std::optional<std::vector<vertex>> contains_config_anchored(
    const AdjGraph& g, ConfigId id, vpair anchor) {
    const PatternGraph& p = pattern(id);
    const auto& pd = detail::pattern_data(id);
    if (g.n() < pd.n) return std::nullopt;

    for (auto [pa, pb] : p.edges) {
        for (int flip = 0; flip < 2; ++flip) {
            int a = flip ? pb : pa, b = flip ? pa : pb;
            // Assignment order seeded with {a, b}; every later vertex has an
            // already-ordered pattern neighbor (patterns are connected).
            std::vector<int> order = {a, b};
            std::vector<bool> placed(pd.n, false);
            placed[a] = placed[b] = true;
            while (static_cast<int>(order.size()) < pd.n) {
                for (int v = 0; v < pd.n; ++v) {
                    if (placed[v]) continue;
                    bool has_nb = false;
                    for (auto [x, y] : p.edges) {
                        if (x == v && placed[y]) has_nb = true;
                        if (y == v && placed[x]) has_nb = true;
                    }
                    if (has_nb) {
                        order.push_back(v);
                        placed[v] = true;
                        break;
                    }
                }
            }
            std::vector<vertex> m(pd.n, -1);
            std::set<vertex> used;
            m[a] = anchor.first;
            m[b] = anchor.second;
            if (g.degree(anchor.first) < pd.deg[a] || g.degree(anchor.second) < pd.deg[b])
                continue;
            used.insert(anchor.first);
            used.insert(anchor.second);
            auto rec = [&](auto&& self, size_t slot) -> bool {
                if (slot == order.size()) return true;
                int pv = order[slot];
                std::vector<int> prev_nbrs;
                for (auto [x, y] : p.edges) {
                    if (x == pv && m[y] >= 0) prev_nbrs.push_back(y);
                    if (y == pv && m[x] >= 0) prev_nbrs.push_back(x);
                }
                for (vertex c : g.neighbors(m[prev_nbrs[0]])) {
                    if (used.count(c) || g.degree(c) < pd.deg[pv]) continue;
                    bool ok = true;
                    for (int j : prev_nbrs)
                        if (!g.has_edge(m[j], c)) { ok = false; break; }
                    if (!ok) continue;
                    m[pv] = c;
                    used.insert(c);
                    if (self(self, slot + 1)) return true;
                    used.erase(c);
                    m[pv] = -1;
                }
                return false;
            };
            if (rec(rec, 2)) return m;
        }
    }
    return std::nullopt;
}

// Simple k-cycle through the given edge, for incremental cycle checks.
inline bool has_cycle_of_length_through(const AdjGraph& g, int k, vpair e) {
    if (k < 3 || k > 9) throw argument_error("cycle length out of range");
    if (!g.has_edge(e.first, e.second)) return false;
    std::vector<vertex> path = {e.first, e.second};
    std::set<vertex> on_path = {e.first, e.second};
    auto dfs = [&](auto&& self) -> bool {
        vertex v = path.back();
        if (static_cast<int>(path.size()) == k) return g.has_edge(v, e.first);
        for (vertex w : g.neighbors(v)) {
            if (on_path.count(w)) continue;
            path.push_back(w);
            on_path.insert(w);
            if (self(self)) return true;
            on_path.erase(w);
            path.pop_back();
        }
        return false;
    };
    return dfs(dfs);
}

// ---------------------------------------------------------------------------
// classify: every hypothesis of the main theorem the graph satisfies.
// ---------------------------------------------------------------------------

struct CaseViolation {
    std::string what;                       // config name or "4-cycle"/"9-cycle"
    std::vector<vertex> witness;            // embedding image or cycle
};

struct Classification {
    std::set<CaseTag> cases;
    std::map<CaseTag, CaseViolation> violations; // for cases not satisfied

    bool satisfies(CaseTag t) const { return cases.count(t) > 0; }
    std::string witness_text() const {
        std::string s;
        for (const auto& [t, v] : violations) {
            s += to_string(t) + " fails: contains " + v.what + " on {";
            for (size_t i = 0; i < v.witness.size(); ++i)
                s += (i ? "," : "") + std::to_string(v.witness[i]);
            s += "}\n";
        }
        return s;
    }
};

inline Classification classify_with_witness(const AdjGraph& g) {
    Classification r;
    auto check_configs = [&](CaseTag tag, const std::vector<ConfigId>& ids) {
        for (ConfigId id : ids) {
            if (auto m = contains_config(g, id)) {
                r.violations[tag] = {pattern(id).name, *m};
                return;
            }
        }
        r.cases.insert(tag);
    };
    check_configs(CaseTag::Case1, case1_configs());
    check_configs(CaseTag::Case2, case2_configs());
    if (auto c4 = find_cycle_of_length(g, 4)) {
        r.violations[CaseTag::Case3] = {"4-cycle", *c4};
    } else if (auto c9 = find_cycle_of_length(g, 9)) {
        r.violations[CaseTag::Case3] = {"9-cycle", *c9};
    } else {
        r.cases.insert(CaseTag::Case3);
    }
    return r;
}

inline std::set<CaseTag> classify(const AdjGraph& g) {
    return classify_with_witness(g).cases;
}

inline std::set<CaseTag> classify(const PlaneGraph& g) {
    return classify(AdjGraph::from_plane(g));
}

// Cross-check of the remark that cycle-freeness implies the configuration
// hypotheses: if G has no 4-cycle and no l-cycle for some l in {5,6,7} it must
// satisfy case 1, and for l = 8 it must satisfy case 2.  Returns false only on
// an atlas transcription bug.
inline bool g4l_remark_consistent(const AdjGraph& g) {
    if (has_cycle_of_length(g, 4)) return true;
    auto cls = classify(g);
    bool no567 = !has_cycle_of_length(g, 5) || !has_cycle_of_length(g, 6) ||
                 !has_cycle_of_length(g, 7);
    if (no567 && !cls.count(CaseTag::Case1)) return false;
    if (!has_cycle_of_length(g, 8) && !cls.count(CaseTag::Case2)) return false;
    return true;
}

} // namespace plane21

#endif

#ifndef PLANE21_DECOMPOSE_HPP
#define PLANE21_DECOMPOSE_HPP

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <set>
#include <variant>
#include <vector>

#include "plane21/certify.hpp"
#include "plane21/class_gate.hpp"
#include "plane21/discharge.hpp"
#include "plane21/plane_graph.hpp"

namespace plane21 {

// ---------------------------------------------------------------------------
// Reducible configurations.  Each deletion kind carries its vertex bindings;
// the cut-vertex kind splits the graph instead of deleting.
// ---------------------------------------------------------------------------

struct CfgLowDegree {
    vertex v;
};
struct CfgAdjacentThrees {
    vertex u, v;
};
struct CfgCutVertex {
    vertex v;
};
struct CfgBadFiveCycle {
    std::array<vertex, 6> u; // u[0..4] the 5-cycle, u[5] the triangle apex
};
// Minor triangle [w0 w1 u0] plus a chain of (4,4,4)-triangles [w_i w_{i+1} u_i]
// grown from w1, plus a 3-vertex z adjacent to the last chain vertex.
struct CfgTriangleChain {
    std::vector<vertex> w; // w0 .. w_{k+1}
    std::vector<vertex> u; // u0 .. u_k
    vertex z;
    int k() const { return static_cast<int>(u.size()) - 1; }
};
// As CfgTriangleChain but z is the 4-vertex of a second minor triangle
// [z z1 z2] joined to the chain by the (4,4)-edge w_{k+1} z.
struct CfgTwoChains {
    std::vector<vertex> w;
    std::vector<vertex> u;
    vertex z, z1, z2;
    int k() const { return static_cast<int>(u.size()) - 1; }
};
// Internal 6-face [v1..v6] with d(v1)=3 carrying internal 3-faces
// [v_i v_{i+1} u_i] on its first five edges, all vertices normal 4-vertices
// apart from v1.
struct CfgSixFaceFan {
    std::array<vertex, 6> v;
    std::array<vertex, 5> u;
};

using ReducibleConfig = std::variant<CfgLowDegree, CfgAdjacentThrees, CfgCutVertex,
                                     CfgBadFiveCycle, CfgTwoChains, CfgTriangleChain,
                                     CfgSixFaceFan>;

inline std::string config_name(const ReducibleConfig& c) {
    struct V {
        std::string operator()(const CfgLowDegree&) { return "LowDegree"; }
        std::string operator()(const CfgAdjacentThrees&) { return "AdjacentThrees"; }
        std::string operator()(const CfgCutVertex&) { return "CutVertex"; }
        std::string operator()(const CfgBadFiveCycle&) { return "BadFiveCycle"; }
        std::string operator()(const CfgTwoChains&) { return "TwoChains"; }
        std::string operator()(const CfgTriangleChain&) { return "TriangleChain"; }
        std::string operator()(const CfgSixFaceFan&) { return "SixFaceFan"; }
    };
    return std::visit(V{}, c);
}

// ---------------------------------------------------------------------------
// Extension patterns: for each deletion kind, the matching edges and the
// internal arcs on the deleted set.  Every other edge at a deleted vertex is
// oriented out of it.
// ---------------------------------------------------------------------------

struct ExtensionPattern {
    std::vector<vertex> deleted;
    std::vector<vpair> matching;
    std::vector<vpair> arcs; // (tail, head) within deleted
};

inline ExtensionPattern extension_pattern(const CfgLowDegree& c) {
    return {{c.v}, {}, {}};
}
inline ExtensionPattern extension_pattern(const CfgAdjacentThrees& c) {
    return {{c.u, c.v}, {{c.u, c.v}}, {}};
}
inline ExtensionPattern extension_pattern(const CfgBadFiveCycle& c) {
    auto [u1, u2, u3, u4, u5, u6] = c.u;
    return {{u1, u2, u3, u4, u5, u6},
            {{u1, u2}, {u3, u4}, {u5, u6}},
            {{u1, u5}, {u1, u6}, {u5, u4}, {u3, u2}}};
}
inline ExtensionPattern extension_pattern(const CfgTriangleChain& c) {
    ExtensionPattern p;
    p.deleted = c.w;
    p.deleted.insert(p.deleted.end(), c.u.begin(), c.u.end());
    p.deleted.push_back(c.z);
    for (size_t i = 0; i < c.u.size(); ++i) p.matching.push_back({c.w[i], c.u[i]});
    p.matching.push_back({c.w.back(), c.z});
    for (size_t i = 0; i + 1 < c.w.size(); ++i) {
        p.arcs.push_back({c.w[i], c.w[i + 1]});
        p.arcs.push_back({c.w[i + 1], c.u[i]});
    }
    return p;
}
inline ExtensionPattern extension_pattern(const CfgTwoChains& c) {
    CfgTriangleChain base{c.w, c.u, c.z};
    ExtensionPattern p = extension_pattern(base);
    p.deleted.push_back(c.z1);
    p.deleted.push_back(c.z2);
    p.matching.push_back({c.z1, c.z2});
    p.arcs.push_back({c.z1, c.z});
    p.arcs.push_back({c.z, c.z2});
    return p;
}
inline ExtensionPattern extension_pattern(const CfgSixFaceFan& c) {
    ExtensionPattern p;
    p.deleted.assign(c.v.begin(), c.v.end());
    p.deleted.insert(p.deleted.end(), c.u.begin(), c.u.end());
    for (int i = 0; i < 5; ++i) p.matching.push_back({c.v[i], c.u[i]});
    for (int i = 0; i < 5; ++i) p.arcs.push_back({c.v[i], c.v[i + 1]});
    p.arcs.push_back({c.v[0], c.v[5]});
    for (int i = 0; i < 5; ++i) p.arcs.push_back({c.v[i + 1], c.u[i]});
    return p;
}

// ---------------------------------------------------------------------------
// Configuration search.  Fixed priority order: LowDegree, AdjacentThrees,
// CutVertex, BadFiveCycle, TwoChains, TriangleChain, SixFaceFan; within a
// kind, bindings are enumerated in ascending vertex order so identical
// inputs give identical findings.  Deletion bindings are exact: the edges of
// g inside the bound
// vertex set must be precisely the configuration's edges, otherwise the
// candidate is skipped (the extension tables account for every incident
// edge, so a chord would break them; in-class graphs never produce one).
// ---------------------------------------------------------------------------

namespace detail {

inline bool exact_edges(const PlaneGraph& g, const std::vector<vertex>& verts,
                        const std::vector<vpair>& want) {
    std::set<vpair> expect;
    for (auto [a, b] : want) expect.insert({std::min(a, b), std::max(a, b)});
    std::set<vertex> vs(verts.begin(), verts.end());
    if (vs.size() != verts.size()) return false;
    size_t found = 0;
    for (vertex v : verts)
        for (vertex w : g.rotation(v)) {
            if (!vs.count(w)) continue;
            vpair e{std::min(v, w), std::max(v, w)};
            if (!expect.count(e)) return false;
            found++;
        }
    return found == 2 * expect.size();
}

inline std::vector<vpair> config_edges(const ExtensionPattern& p) {
    std::vector<vpair> es = p.matching;
    es.insert(es.end(), p.arcs.begin(), p.arcs.end());
    return es;
}

struct Finder {
    const PlaneGraph& g;
    vertex x, y;

    bool normal(vertex v) const { return v != x && v != y; }
    bool n4(vertex v) const { return normal(v) && g.degree(v) == 4; }
    bool n3(vertex v) const { return normal(v) && g.degree(v) == 3; }
    std::vector<vertex> sorted_nbrs(vertex v) const {
        auto nb = g.rotation(v);
        std::sort(nb.begin(), nb.end());
        return nb;
    }

    std::optional<CfgLowDegree> low_degree() const {
        for (vertex v : g.vertices())
            if (normal(v) && g.degree(v) <= 2) return CfgLowDegree{v};
        return std::nullopt;
    }

    std::optional<CfgAdjacentThrees> adjacent_threes() const {
        for (vertex u : g.vertices()) {
            if (!n3(u)) continue;
            for (vertex v : sorted_nbrs(u))
                if (n3(v) && v > u) return CfgAdjacentThrees{u, v};
        }
        // first pair always appears with u < v; nothing found means none
        return std::nullopt;
    }

    std::optional<CfgCutVertex> cut_vertex() const {
        auto cuts = g.cut_vertices();
        if (cuts.empty()) return std::nullopt;
        return CfgCutVertex{*cuts.begin()};
    }

    std::optional<CfgBadFiveCycle> bad_five_cycle() const {
        std::optional<CfgBadFiveCycle> best;
        auto consider = [&](const CfgBadFiveCycle& c) {
            if (!best || c.u < best->u) best = c;
        };
        for (vertex u1 : g.vertices()) {
            if (!n3(u1)) continue;
            auto nb1 = sorted_nbrs(u1);
            for (vertex u2 : nb1) {
                if (!n4(u2)) continue;
                for (vertex u5 : nb1) {
                    if (u5 == u2 || !n4(u5)) continue;
                    for (vertex u6 : nb1) {
                        if (u6 == u2 || u6 == u5 || !n4(u6)) continue;
                        if (!g.adjacent(u5, u6)) continue;
                        for (vertex u3 : sorted_nbrs(u2)) {
                            if (!n3(u3) || u3 == u1 || u3 == u2 || u3 == u5 || u3 == u6)
                                continue;
                            for (vertex u4 : sorted_nbrs(u3)) {
                                if (!n4(u4) || u4 == u1 || u4 == u2 || u4 == u5 ||
                                    u4 == u6 || u4 == u3)
                                    continue;
                                if (!g.adjacent(u4, u5)) continue;
                                CfgBadFiveCycle c{{u1, u2, u3, u4, u5, u6}};
                                auto p = extension_pattern(c);
                                if (exact_edges(g, p.deleted, config_edges(p)))
                                    consider(c);
                            }
                        }
                    }
                }
            }
            if (best) return best; // least u1 wins; within it, least tuple
        }
        return std::nullopt;
    }

    // Shared chain walk for the triangle-chain kinds.  At each chain node, `leaf` gets a shot
    // before any deeper extension; chains grow only through fresh normal
    // 4-vertices, so a repeated triangle can never occur.
    template <typename Leaf>
    bool walk_chains(std::vector<vertex>& w, std::vector<vertex>& u,
                     std::set<vertex>& used, Leaf&& leaf) const {
        if (leaf(w, u)) return true;
        if (static_cast<int>(w.size()) > g.vertex_count()) return false;
        vertex last = w.back();
        for (vertex a : sorted_nbrs(last)) {
            if (!n4(a) || used.count(a)) continue;
            for (vertex b : sorted_nbrs(last)) {
                if (b == a || !n4(b) || used.count(b)) continue;
                if (!g.adjacent(a, b)) continue;
                w.push_back(a);
                u.push_back(b);
                used.insert(a);
                used.insert(b);
                if (walk_chains(w, u, used, leaf)) return true;
                used.erase(a);
                used.erase(b);
                w.pop_back();
                u.pop_back();
            }
        }
        return false;
    }

    // Enumerates minor triangles [w0 w1 u0] in ascending (w0, w1, u0) order
    // and walks chains from w1.
    template <typename Leaf>
    std::optional<std::pair<std::vector<vertex>, std::vector<vertex>>> scan_chains(
        Leaf&& leaf) const {
        for (vertex w0 : g.vertices()) {
            if (!n3(w0)) continue;
            for (vertex w1 : sorted_nbrs(w0)) {
                if (!n4(w1)) continue;
                for (vertex u0 : sorted_nbrs(w0)) {
                    if (u0 == w1 || !n4(u0) || !g.adjacent(w1, u0)) continue;
                    std::vector<vertex> w{w0, w1}, u{u0};
                    std::set<vertex> used{w0, w1, u0};
                    if (walk_chains(w, u, used, leaf)) return std::make_pair(w, u);
                }
            }
        }
        return std::nullopt;
    }

    std::optional<CfgTriangleChain> tc1() const {
        CfgTriangleChain out;
        auto leaf = [&](const std::vector<vertex>& w, const std::vector<vertex>& u) {
            std::set<vertex> used(w.begin(), w.end());
            used.insert(u.begin(), u.end());
            for (vertex z : sorted_nbrs(w.back())) {
                if (!n3(z) || used.count(z)) continue;
                CfgTriangleChain c{w, u, z};
                auto p = extension_pattern(c);
                if (exact_edges(g, p.deleted, config_edges(p))) {
                    out = c;
                    return true;
                }
            }
            return false;
        };
        if (scan_chains(leaf)) return out;
        return std::nullopt;
    }

    std::optional<CfgTwoChains> tc2() const {
        CfgTwoChains out;
        auto leaf = [&](const std::vector<vertex>& w, const std::vector<vertex>& u) {
            std::set<vertex> used(w.begin(), w.end());
            used.insert(u.begin(), u.end());
            for (vertex z : sorted_nbrs(w.back())) {
                if (!n4(z) || used.count(z)) continue;
                for (vertex z1 : sorted_nbrs(z)) {
                    if (!n3(z1) || used.count(z1) || z1 == z) continue;
                    for (vertex z2 : sorted_nbrs(z)) {
                        if (!n4(z2) || used.count(z2) || z2 == z1) continue;
                        if (!g.adjacent(z1, z2)) continue;
                        CfgTwoChains c{w, u, z, z1, z2};
                        auto p = extension_pattern(c);
                        if (exact_edges(g, p.deleted, config_edges(p))) {
                            out = c;
                            return true;
                        }
                    }
                }
            }
            return false;
        };
        if (scan_chains(leaf)) return out;
        return std::nullopt;
    }

    std::optional<CfgSixFaceFan> six_face_fan() const {
        if (!g.has_outer()) return std::nullopt;
        std::optional<CfgSixFaceFan> best;
        auto tuple_of = [](const CfgSixFaceFan& c) {
            std::vector<vertex> t(c.v.begin(), c.v.end());
            t.insert(t.end(), c.u.begin(), c.u.end());
            return t;
        };
        for (int f = 0; f < g.face_count(); ++f) {
            if (!g.is_internal(f) || g.face_degree(f) != 6) continue;
            const auto& walk = g.faces()[f].walk;
            if (std::set<vertex>(walk.begin(), walk.end()).size() != 6) continue;
            for (int r = 0; r < 6; ++r) {
                for (int dir : {+1, -1}) {
                    CfgSixFaceFan c{};
                    for (int i = 0; i < 6; ++i)
                        c.v[i] = walk[((r + dir * i) % 6 + 6) % 6];
                    if (!n3(c.v[0])) continue;
                    bool ok = true;
                    for (int i = 1; i < 6 && ok; ++i) ok = n4(c.v[i]);
                    for (int i = 0; i < 5 && ok; ++i) {
                        vertex a = c.v[i], b = c.v[i + 1];
                        // the face across {a,b} from f
                        int across = (g.face_at(a, b) == f) ? g.face_at(b, a)
                                                            : g.face_at(a, b);
                        if (across == f || !g.is_internal(across) ||
                            g.face_degree(across) != 3) {
                            ok = false;
                            break;
                        }
                        const auto& tw = g.faces()[across].walk;
                        vertex third = -1;
                        for (vertex t : tw)
                            if (t != a && t != b) third = t;
                        if (third < 0 || !n4(third)) {
                            ok = false;
                            break;
                        }
                        c.u[i] = third;
                    }
                    if (!ok) continue;
                    auto p = extension_pattern(c);
                    if (!exact_edges(g, p.deleted, config_edges(p))) continue;
                    if (!best || tuple_of(c) < tuple_of(*best)) best = c;
                }
            }
        }
        return best;
    }
};

} // namespace detail

inline std::optional<ReducibleConfig> find_reducible(const PlaneGraph& g, vpair e) {
    detail::Finder fd{g, e.first, e.second};
    if (auto c = fd.low_degree()) return ReducibleConfig{*c};
    if (auto c = fd.adjacent_threes()) return ReducibleConfig{*c};
    if (auto c = fd.cut_vertex()) return ReducibleConfig{*c};
    if (auto c = fd.bad_five_cycle()) return ReducibleConfig{*c};
    if (auto c = fd.tc2()) return ReducibleConfig{*c};
    if (auto c = fd.tc1()) return ReducibleConfig{*c};
    if (auto c = fd.six_face_fan()) return ReducibleConfig{*c};
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Applying a deletion pattern: remove the bound vertices, then extend the
// sub-certificate by the pattern's matching and arcs plus one outgoing arc
// per edge leaving the configuration.
// ---------------------------------------------------------------------------

inline NiceDecomposition extend_certificate(const PlaneGraph& g,
                                            const ExtensionPattern& p,
                                            NiceDecomposition sub) {
    std::set<vertex> del(p.deleted.begin(), p.deleted.end());
    for (vertex v : p.deleted)
        if (!g.has_vertex(v))
            throw contract_error("stale configuration: vertex " + std::to_string(v) +
                                 " missing");
    if (!detail::exact_edges(g, p.deleted, detail::config_edges(p)))
        throw contract_error("configuration binding does not match the graph");

    NiceDecomposition out = std::move(sub);
    out.matching.insert(out.matching.end(), p.matching.begin(), p.matching.end());
    out.arcs.insert(out.arcs.end(), p.arcs.begin(), p.arcs.end());

    std::map<vertex, int> outdeg;
    for (auto [t, h] : p.arcs) outdeg[t]++;
    for (vertex v : p.deleted)
        for (vertex wv : g.rotation(v))
            if (!del.count(wv)) {
                out.arcs.push_back({v, wv});
                outdeg[v]++;
            }
    for (auto& [v, d] : outdeg)
        if (d > 2)
            throw contract_error("extension gives out-degree " + std::to_string(d) +
                                 " at vertex " + std::to_string(v));

    // Order the deleted vertices so arc heads precede tails.
    auto peel = peel_order(p.deleted, p.arcs);
    if (!peel.order) throw contract_error("extension pattern arcs are cyclic");
    out.order.insert(out.order.end(), peel.order->begin(), peel.order->end());
    return out;
}

// ---------------------------------------------------------------------------
// decompose_nice: the induction behind the decomposer.
// ---------------------------------------------------------------------------

struct DecomposeOptions {
    bool verify_steps = false;  // re-verify the certificate after every step
    int oracle_threshold = 12;  // fall back to the oracle at or below this size
};

struct DecomposeStats {
    std::map<std::string, int> reductions;
    bool oracle_fallback = false;
};

namespace detail {

inline vpair first_boundary_edge(const PlaneGraph& g) {
    const auto& w = g.faces()[g.outer_face()].walk;
    vpair best{-1, -1};
    for (size_t i = 0; i < w.size(); ++i) {
        vpair cand{w[i], w[(i + 1) % w.size()]};
        if (best.first < 0 || cand < best) best = cand;
    }
    return best;
}

struct NiceDecomposer {
    DecomposeOptions opts;
    DecomposeStats* stats;

    void note(const std::string& kind) {
        if (stats) stats->reductions[kind]++;
    }

    void check_step(const PlaneGraph& g, const NiceDecomposition& c) const {
        if (!opts.verify_steps) return;
        auto v = verify_nice(g, c);
        if (!v.ok)
            throw contract_error("intermediate certificate failed verification:\n" +
                                 v.text());
    }

    NiceDecomposition run(const PlaneGraph& g, vpair e) {
        vertex x = e.first, y = e.second;

        if (g.vertex_count() <= 2) {
            NiceDecomposition c;
            c.matching.push_back({std::min(x, y), std::max(x, y)});
            c.order = {std::min(x, y), std::max(x, y)};
            c.boundary = e;
            check_step(g, c);
            return c;
        }

        if (!g.is_connected()) return run_components(g, e);

        auto cfg = find_reducible(g, e);
        if (!cfg) {
            if (g.vertex_count() <= opts.oracle_threshold) {
                if (auto c = oracle_nice(g, e)) {
                    if (stats) stats->oracle_fallback = true;
                    check_step(g, *c);
                    return *c;
                }
            }
            CaseTag cas = CaseTag::Case1;
            auto cls = classify(g);
            if (!cls.empty()) cas = *cls.begin();
            throw theorem_violation(
                "no reducible configuration in an in-class graph on " +
                    std::to_string(g.vertex_count()) + " vertices",
                discharge_audit_text(g, e, cas));
        }

        note(config_name(*cfg));

        if (auto* cut = std::get_if<CfgCutVertex>(&*cfg)) return run_cut(g, e, cut->v);

        ExtensionPattern p = std::visit(
            [](const auto& c) -> ExtensionPattern {
                if constexpr (std::is_same_v<std::decay_t<decltype(c)>, CfgCutVertex>)
                    throw contract_error("unreachable");
                else
                    return extension_pattern(c);
            },
            *cfg);
        std::set<vertex> del(p.deleted.begin(), p.deleted.end());
        PlaneGraph rest = g.delete_vertices(del);
        NiceDecomposition sub = run(rest, e);
        NiceDecomposition c = extend_certificate(g, p, std::move(sub));
        check_step(g, c);
        return c;
    }

    NiceDecomposition run_components(const PlaneGraph& g, vpair e) {
        NiceDecomposition merged;
        merged.boundary = e;
        for (const auto& comp : g.components()) {
            std::set<vertex> keep(comp.begin(), comp.end());
            if (comp.size() == 1) {
                merged.order.push_back(comp[0]);
                continue;
            }
            bool has_e = keep.count(e.first) > 0;
            PlaneGraph cg = g.component_graph(comp[0], std::nullopt);
            vpair ce = has_e ? e : first_boundary_edge(cg);
            cg = g.component_graph(comp[0], ce);
            NiceDecomposition c = run(cg, ce);
            merged.matching.insert(merged.matching.end(), c.matching.begin(),
                                   c.matching.end());
            merged.arcs.insert(merged.arcs.end(), c.arcs.begin(), c.arcs.end());
            merged.order.insert(merged.order.end(), c.order.begin(), c.order.end());
        }
        check_step(g, merged);
        return merged;
    }

    // Split at cut vertex v: H1 keeps the boundary edge, H2 takes everything
    // else plus v, with a fresh boundary edge at v chosen from the rotation
    // just past the H1 side.  Merging removes that edge from M2 and orients
    // it back into v.
    NiceDecomposition run_cut(const PlaneGraph& g, vpair e, vertex v) {
        // component of the boundary edge in g - v
        vertex probe = (v == e.first) ? e.second : e.first;
        std::set<vertex> cxy{probe};
        {
            std::vector<vertex> stack{probe};
            while (!stack.empty()) {
                vertex a = stack.back();
                stack.pop_back();
                for (vertex w : g.rotation(a)) {
                    if (w == v || cxy.count(w)) continue;
                    cxy.insert(w);
                    stack.push_back(w);
                }
            }
        }
        std::set<vertex> h1 = cxy;
        h1.insert(v);
        std::set<vertex> h2;
        for (vertex w : g.vertices())
            if (!cxy.count(w)) h2.insert(w);

        // outer anchor for H1: the directed boundary edge on g's outer face
        std::optional<vpair> h1_anchor;
        {
            int f0 = g.outer_face();
            const auto& w = g.faces()[f0].walk;
            for (size_t i = 0; i < w.size(); ++i) {
                vpair d{w[i], w[(i + 1) % w.size()]};
                if ((d == e || d == vpair{e.second, e.first}) && !h1_anchor) h1_anchor = d;
            }
        }
        PlaneGraph g1 = g.induced(h1, h1_anchor, e);

        // H2's boundary edge: the first H2 neighbor of v after the H1 block
        // in v's rotation; its corner face holds the region where H1 lived.
        const auto& rot = g.rotation(v);
        const size_t d = rot.size();
        vertex s = -1, pprev = -1;
        for (size_t i = 0; i < d; ++i) {
            bool cur_h1 = cxy.count(rot[i]) > 0;
            bool nxt_h1 = cxy.count(rot[(i + 1) % d]) > 0;
            if (cur_h1 && !nxt_h1) s = rot[(i + 1) % d];
            if (!cur_h1 && nxt_h1) pprev = rot[i];
        }
        if (s < 0)
            throw contract_error("cut vertex split: no H2 edge at " + std::to_string(v));
        vpair e2{v, s};
        PlaneGraph g2 = g.induced(h2, vpair{pprev, v}, e2);

        NiceDecomposition c1 = run(g1, e);
        NiceDecomposition c2 = run(g2, e2);

        NiceDecomposition out = std::move(c1);
        vpair drop{std::min(v, s), std::max(v, s)};
        for (auto m : c2.matching) {
            vpair n{std::min(m.first, m.second), std::max(m.first, m.second)};
            if (n != drop) out.matching.push_back(m);
        }
        out.arcs.insert(out.arcs.end(), c2.arcs.begin(), c2.arcs.end());
        out.arcs.push_back({s, v});
        for (vertex w : c2.order)
            if (w != v) out.order.push_back(w);
        out.boundary = e;
        check_step(g, out);
        return out;
    }
};

} // namespace detail

// Constructive nice decomposition of (g, e).  Requires a connected in-class
// plane graph with e on the outer face.
inline NiceDecomposition decompose_nice(const PlaneGraph& g, vpair e,
                                        const DecomposeOptions& opts = {},
                                        DecomposeStats* stats = nullptr) {
    if (!g.has_vertex(e.first) || !g.has_vertex(e.second) || !g.adjacent(e.first, e.second))
        throw argument_error("decompose_nice: boundary pair is not an edge");
    if (!g.is_connected())
        throw argument_error("decompose_nice: graph must be connected");
    bool on_outer = false;
    {
        const auto& w = g.faces()[g.outer_face()].walk;
        for (size_t i = 0; i < w.size(); ++i) {
            vpair dd{w[i], w[(i + 1) % w.size()]};
            if (dd == e || dd == vpair{e.second, e.first}) on_outer = true;
        }
    }
    if (!on_outer)
        throw argument_error("decompose_nice: edge is not on the outer face");
    auto cw = classify_with_witness(AdjGraph::from_plane(g));
    if (cw.cases.empty())
        throw class_error("graph satisfies none of the class hypotheses",
                          cw.witness_text());

    detail::NiceDecomposer d{opts, stats};
    // carry the boundary edge on the graph value so deletions protect it
    std::map<vertex, std::vector<vertex>> rot;
    for (vertex v : g.vertices()) rot[v] = g.rotation(v);
    PlaneGraph gb = PlaneGraph::build(rot, g.faces()[g.outer_face()].walk, e);
    NiceDecomposition c = d.run(gb, e);
    c.boundary = e;
    c.canonicalize();
    auto verdict = verify_nice(g, c);
    if (!verdict.ok)
        throw contract_error("decomposer produced an invalid certificate:\n" +
                             verdict.text());
    return c;
}

// (2,1)-decomposition of a plane graph: per component, a deterministic
// boundary edge on its outer face (the input's own boundary edge when it
// applies), then the nice decomposition; certificates are unioned.
inline NiceDecomposition decompose_21(const PlaneGraph& g,
                                      const DecomposeOptions& opts = {},
                                      DecomposeStats* stats = nullptr) {
    auto cw = classify_with_witness(AdjGraph::from_plane(g));
    if (cw.cases.empty())
        throw class_error("graph satisfies none of the class hypotheses",
                          cw.witness_text());
    NiceDecomposition merged;
    for (const auto& comp : g.components()) {
        if (comp.size() == 1) {
            merged.order.push_back(comp[0]);
            continue;
        }
        std::set<vertex> keep(comp.begin(), comp.end());
        PlaneGraph cg = g.component_graph(comp[0], std::nullopt);
        vpair ce{-1, -1};
        if (auto be = g.boundary_edge()) {
            if (keep.count(be->first) && keep.count(be->second)) {
                const auto& w = cg.faces()[cg.outer_face()].walk;
                for (size_t i = 0; i < w.size(); ++i) {
                    vpair dd{w[i], w[(i + 1) % w.size()]};
                    if (dd == *be || dd == vpair{be->second, be->first}) ce = *be;
                }
            }
        }
        if (ce.first < 0) ce = detail::first_boundary_edge(cg);
        NiceDecomposition c = decompose_nice(cg, ce, opts, stats);
        merged.matching.insert(merged.matching.end(), c.matching.begin(),
                               c.matching.end());
        merged.arcs.insert(merged.arcs.end(), c.arcs.begin(), c.arcs.end());
        merged.order.insert(merged.order.end(), c.order.begin(), c.order.end());
    }
    merged.canonicalize();
    auto verdict = verify_plain(g, merged);
    if (!verdict.ok)
        throw contract_error("decomposer produced an invalid certificate:\n" +
                             verdict.text());
    return merged;
}

} // namespace plane21

#endif

#ifndef PLANE21_PLANE_GRAPH_HPP
#define PLANE21_PLANE_GRAPH_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "plane21/errors.hpp"

namespace plane21 {

using vertex = int;
using vpair = std::pair<vertex, vertex>;

// A face of the embedding.  walk[i] -> walk[(i+1) % d] are the directed edge
// sides belonging to this face; the degree is the walk length.  In a
// 2-connected graph every walk is a simple cycle, but nothing here assumes it.
struct Face {
    std::vector<vertex> walk;
    int degree() const { return static_cast<int>(walk.size()); }
    bool contains_vertex(vertex v) const {
        return std::find(walk.begin(), walk.end(), v) != walk.end();
    }
};

namespace detail {

inline std::vector<vertex> rotate_min(const std::vector<vertex>& w) {
    if (w.empty()) return w;
    std::vector<vertex> best = w;
    std::vector<vertex> cur = w;
    for (size_t i = 1; i < w.size(); ++i) {
        std::rotate(cur.begin(), cur.begin() + 1, cur.end());
        if (cur < best) best = cur;
    }
    return best;
}

inline bool cyclic_equal_any_direction(const std::vector<vertex>& a,
                                       const std::vector<vertex>& b) {
    if (a.size() != b.size()) return false;
    if (rotate_min(a) == rotate_min(b)) return true;
    std::vector<vertex> r(b.rbegin(), b.rend());
    return rotate_min(a) == rotate_min(r);
}

} // namespace detail

// Plane graph given by a rotation system: for each vertex the cyclic sequence
// of its neighbors in embedding order.  Faces are traced on construction with
// next(u->v) = (v, successor of u in the rotation at v).  Vertex ids are
// arbitrary non-negative ints and are preserved across deletions.
class PlaneGraph {
public:
    PlaneGraph() = default;

    // rot: vertex -> neighbors in cyclic order.  outer_walk: optional vertex
    // sequence identifying the outer face (either orientation).  boundary:
    // optional edge that must lie on the outer face.
    static PlaneGraph build(const std::map<vertex, std::vector<vertex>>& rot,
                            std::optional<std::vector<vertex>> outer_walk = std::nullopt,
                            std::optional<vpair> boundary = std::nullopt) {
        PlaneGraph g;
        g.init(rot);
        g.choose_outer(outer_walk, std::nullopt);
        g.set_boundary(boundary);
        return g;
    }

    // ---- basic queries -------------------------------------------------

    const std::vector<vertex>& vertices() const { return verts_; }
    int vertex_count() const { return static_cast<int>(verts_.size()); }
    bool has_vertex(vertex v) const {
        return std::binary_search(verts_.begin(), verts_.end(), v);
    }
    int degree(vertex v) const { return static_cast<int>(rotation(v).size()); }
    const std::vector<vertex>& rotation(vertex v) const { return rot_[index_of(v)]; }
    bool adjacent(vertex u, vertex v) const {
        const auto& r = rotation(u);
        return std::find(r.begin(), r.end(), v) != r.end();
    }
    int edge_count() const { return edge_count_; }

    // Undirected edges, (min,max) pairs in ascending order.
    std::vector<vpair> edges() const {
        std::vector<vpair> es;
        for (size_t i = 0; i < verts_.size(); ++i)
            for (vertex w : rot_[i])
                if (verts_[i] < w) es.emplace_back(verts_[i], w);
        std::sort(es.begin(), es.end());
        return es;
    }

    // ---- faces ---------------------------------------------------------

    const std::vector<Face>& faces() const { return faces_; }
    int face_count() const { return static_cast<int>(faces_.size()); }
    int face_degree(int f) const { return faces_[f].degree(); }

    // Face on the left of directed edge u->v (the face whose walk contains
    // u followed by v).
    int face_at(vertex u, vertex v) const {
        auto it = face_of_.find({u, v});
        if (it == face_of_.end())
            throw argument_error("face_at: no such directed edge " +
                                 std::to_string(u) + "->" + std::to_string(v));
        return it->second;
    }

    bool has_outer() const { return outer_ >= 0; }
    int outer_face() const {
        if (outer_ < 0) throw argument_error("graph has no designated outer face");
        return outer_;
    }
    bool is_internal(int f) const { return f != outer_; }

    std::optional<vpair> boundary_edge() const { return boundary_; }

    // Corner i of v sits between rotation neighbors prev = rot[i] and
    // next = rot[i+1]; its face is the one containing directed edge prev->v.
    struct Corner {
        vertex prev, next;
        int face;
    };
    std::vector<Corner> corners(vertex v) const {
        const auto& r = rotation(v);
        std::vector<Corner> cs;
        const size_t d = r.size();
        for (size_t i = 0; i < d; ++i)
            cs.push_back({r[i], r[(i + 1) % d], face_at(r[i], v)});
        return cs;
    }

    // ---- connectivity --------------------------------------------------

    bool is_connected() const {
        return verts_.empty() || component_of_vertex(verts_[0]).size() == verts_.size();
    }

    std::vector<std::vector<vertex>> components() const {
        std::vector<std::vector<vertex>> comps;
        std::set<vertex> seen;
        for (vertex v : verts_) {
            if (seen.count(v)) continue;
            auto comp = component_of_vertex(v);
            seen.insert(comp.begin(), comp.end());
            comps.push_back(std::move(comp));
        }
        return comps;
    }

    // Cut vertices by the standard low-point computation (iterative DFS).
    std::set<vertex> cut_vertices() const {
        std::set<vertex> cuts;
        std::map<vertex, int> disc, low;
        std::map<vertex, vertex> parent;
        int timer = 0;
        for (vertex root : verts_) {
            if (disc.count(root)) continue;
            // stack of (vertex, index into rotation)
            std::vector<std::pair<vertex, size_t>> stack;
            disc[root] = low[root] = timer++;
            stack.push_back({root, 0});
            int root_children = 0;
            while (!stack.empty()) {
                auto& [v, i] = stack.back();
                const auto& nbrs = rotation(v);
                if (i < nbrs.size()) {
                    vertex w = nbrs[i++];
                    if (!disc.count(w)) {
                        parent[w] = v;
                        if (v == root) root_children++;
                        disc[w] = low[w] = timer++;
                        stack.push_back({w, 0});
                    } else if (!parent.count(v) || parent[v] != w) {
                        low[v] = std::min(low[v], disc[w]);
                    }
                } else {
                    stack.pop_back();
                    if (!stack.empty()) {
                        vertex p = stack.back().first;
                        low[p] = std::min(low[p], low[v]);
                        if (p != root && low[v] >= disc[p]) cuts.insert(p);
                    }
                }
            }
            if (root_children >= 2) cuts.insert(root);
        }
        return cuts;
    }

    // ---- mutation-by-value ----------------------------------------------

    // New graph with s removed; rotations of survivors have the deleted
    // neighbors spliced out preserving cyclic order.  The outer face is
    // re-anchored so that the region of the old outer face stays outer.
    PlaneGraph delete_vertices(const std::set<vertex>& s) const {
        for (vertex v : s)
            if (!has_vertex(v))
                throw argument_error("delete_vertices: " + std::to_string(v) +
                                     " is not a vertex");
        if (boundary_) {
            if (s.count(boundary_->first) || s.count(boundary_->second))
                throw contract_error("delete_vertices: would delete a boundary-edge endpoint");
        }
        std::map<vertex, std::vector<vertex>> rot;
        for (size_t i = 0; i < verts_.size(); ++i) {
            vertex v = verts_[i];
            if (s.count(v)) continue;
            std::vector<vertex> r;
            for (vertex w : rot_[i])
                if (!s.count(w)) r.push_back(w);
            rot[v] = std::move(r);
        }
        PlaneGraph g;
        g.init(rot);
        g.choose_outer(std::nullopt, outer_anchor_surviving(s));
        g.set_boundary(boundary_);
        return g;
    }

    // Subgraph induced on keep (rotations restricted, cyclic order kept).
    // Outer face chosen by the given directed-edge anchor when provided.
    PlaneGraph induced(const std::set<vertex>& keep,
                       std::optional<vpair> outer_anchor,
                       std::optional<vpair> boundary) const {
        std::map<vertex, std::vector<vertex>> rot;
        for (size_t i = 0; i < verts_.size(); ++i) {
            vertex v = verts_[i];
            if (!keep.count(v)) continue;
            std::vector<vertex> r;
            for (vertex w : rot_[i])
                if (keep.count(w)) r.push_back(w);
            rot[v] = std::move(r);
        }
        PlaneGraph g;
        g.init(rot);
        g.choose_outer(std::nullopt, outer_anchor);
        g.set_boundary(boundary);
        return g;
    }

    // Component containing v, extracted as its own PlaneGraph.  The outer
    // face follows the global designation when it lies in this component,
    // otherwise it is re-picked deterministically.
    PlaneGraph component_graph(vertex v, std::optional<vpair> boundary) const {
        auto comp = component_of_vertex(v);
        std::set<vertex> keep(comp.begin(), comp.end());
        std::optional<vpair> anchor;
        if (outer_ >= 0 && !faces_[outer_].walk.empty()) {
            const auto& w = faces_[outer_].walk;
            if (keep.count(w[0])) anchor = vpair{w[0], w[1 % w.size()]};
        }
        return induced(keep, anchor, boundary);
    }

private:
    std::vector<vertex> verts_;
    std::vector<std::vector<vertex>> rot_;
    std::vector<Face> faces_;
    std::map<vpair, int> face_of_;
    int outer_ = -1;
    std::optional<vpair> boundary_;
    int edge_count_ = 0;

    size_t index_of(vertex v) const {
        auto it = std::lower_bound(verts_.begin(), verts_.end(), v);
        if (it == verts_.end() || *it != v)
            throw argument_error("no such vertex: " + std::to_string(v));
        return static_cast<size_t>(it - verts_.begin());
    }

    void init(const std::map<vertex, std::vector<vertex>>& rot) {
        for (const auto& [v, r] : rot) {
            if (v < 0) throw validation_error("vertex ids must be non-negative");
            verts_.push_back(v);
        }
        rot_.resize(verts_.size());
        for (size_t i = 0; i < verts_.size(); ++i) rot_[i] = rot.at(verts_[i]);
        validate_rotations();
        trace();
        check_euler();
    }

    void validate_rotations() {
        edge_count_ = 0;
        for (size_t i = 0; i < verts_.size(); ++i) {
            vertex v = verts_[i];
            std::set<vertex> seen;
            for (vertex w : rot_[i]) {
                if (w == v) throw validation_error("loop at vertex " + std::to_string(v));
                if (!has_vertex(w))
                    throw validation_error("rotation of " + std::to_string(v) +
                                           " mentions unknown vertex " + std::to_string(w));
                if (!seen.insert(w).second)
                    throw validation_error("parallel edge or repeated neighbor " +
                                           std::to_string(w) + " at vertex " +
                                           std::to_string(v));
            }
            edge_count_ += static_cast<int>(rot_[i].size());
        }
        if (edge_count_ % 2 != 0)
            throw validation_error("rotation system is asymmetric");
        edge_count_ /= 2;
        for (size_t i = 0; i < verts_.size(); ++i)
            for (vertex w : rot_[i])
                if (!adjacent(w, verts_[i]))
                    throw validation_error("rotation inconsistency: " + std::to_string(verts_[i]) +
                                           " lists " + std::to_string(w) +
                                           " but not vice versa");
    }

    void trace() {
        faces_.clear();
        face_of_.clear();
        for (vertex u : verts_) {
            for (vertex v : rotation(u)) {
                if (face_of_.count({u, v})) continue;
                Face f;
                vertex a = u, b = v;
                do {
                    face_of_[{a, b}] = static_cast<int>(faces_.size());
                    f.walk.push_back(a);
                    const auto& rb = rotation(b);
                    size_t pos = static_cast<size_t>(
                        std::find(rb.begin(), rb.end(), a) - rb.begin());
                    vertex c = rb[(pos + 1) % rb.size()];
                    a = b;
                    b = c;
                } while (!(a == u && b == v));
                faces_.push_back(std::move(f));
            }
        }
    }

    // V - E + F = 2 per connected component on its own sphere.  Components
    // without edges carry the one untraced sphere face.
    void check_euler() const {
        for (const auto& comp : components()) {
            std::set<vertex> cs(comp.begin(), comp.end());
            int e = 0;
            for (vertex v : comp) e += degree(v);
            e /= 2;
            std::set<int> fs;
            for (vertex v : comp)
                for (vertex w : rotation(v)) fs.insert(face_of_.at({v, w}));
            int f = static_cast<int>(fs.size());
            if (e == 0) f = 1;
            if (static_cast<int>(comp.size()) - e + f != 2) {
                std::ostringstream os;
                os << "rotation system is not a sphere embedding: component of "
                   << comp[0] << " has V=" << comp.size() << " E=" << e << " F=" << f;
                throw validation_error(os.str());
            }
        }
    }

    void choose_outer(const std::optional<std::vector<vertex>>& outer_walk,
                      std::optional<vpair> anchor) {
        outer_ = -1;
        if (outer_walk) {
            for (size_t i = 0; i < faces_.size(); ++i)
                if (detail::cyclic_equal_any_direction(faces_[i].walk, *outer_walk)) {
                    outer_ = static_cast<int>(i);
                    return;
                }
            throw validation_error("outer_face walk does not match any traced face");
        }
        if (anchor) {
            auto it = face_of_.find(*anchor);
            if (it != face_of_.end()) {
                outer_ = it->second;
                return;
            }
        }
        // Deterministic default: lexicographically least face of maximum degree.
        int best = -1;
        std::vector<vertex> best_key;
        for (size_t i = 0; i < faces_.size(); ++i) {
            auto key = detail::rotate_min(faces_[i].walk);
            if (best < 0 || faces_[i].degree() > faces_[best].degree() ||
                (faces_[i].degree() == faces_[best].degree() && key < best_key)) {
                best = static_cast<int>(i);
                best_key = key;
            }
        }
        outer_ = best;
    }

    void set_boundary(std::optional<vpair> b) {
        boundary_ = b;
        if (!boundary_) return;
        auto [x, y] = *boundary_;
        if (!has_vertex(x) || !has_vertex(y) || !adjacent(x, y))
            throw validation_error("boundary_edge is not an edge of the graph");
        if (outer_ >= 0) {
            if (!face_side_on(outer_, x, y) && !face_side_on(outer_, y, x))
                throw validation_error("boundary_edge does not lie on the outer face");
        }
    }

    bool face_side_on(int f, vertex a, vertex b) const {
        auto it = face_of_.find({a, b});
        return it != face_of_.end() && it->second == f;
    }

    // First directed edge of the old outer walk that survives deletion of s;
    // its face in the new graph is the merged outer region.
    std::optional<vpair> outer_anchor_surviving(const std::set<vertex>& s) const {
        if (outer_ < 0) return std::nullopt;
        const auto& w = faces_[outer_].walk;
        const size_t d = w.size();
        if (boundary_) {
            auto [x, y] = *boundary_;
            if (face_side_on(outer_, x, y)) return vpair{x, y};
            if (face_side_on(outer_, y, x)) return vpair{y, x};
        }
        for (size_t i = 0; i < d; ++i) {
            vertex a = w[i], b = w[(i + 1) % d];
            if (!s.count(a) && !s.count(b)) return vpair{a, b};
        }
        return std::nullopt;
    }

    std::vector<vertex> component_of_vertex(vertex v) const {
        std::vector<vertex> out, stack{v};
        std::set<vertex> seen{v};
        while (!stack.empty()) {
            vertex u = stack.back();
            stack.pop_back();
            out.push_back(u);
            for (vertex w : rotation(u))
                if (seen.insert(w).second) stack.push_back(w);
        }
        std::sort(out.begin(), out.end());
        return out;
    }
};

// Free-function spellings used throughout.
inline std::vector<Face> trace_faces(const PlaneGraph& g) { return g.faces(); }
inline int degree(const PlaneGraph& g, vertex v) { return g.degree(v); }
inline int face_degree(const PlaneGraph& g, int f) { return g.face_degree(f); }
inline bool is_connected(const PlaneGraph& g) { return g.is_connected(); }
inline std::set<vertex> cut_vertices(const PlaneGraph& g) { return g.cut_vertices(); }
inline PlaneGraph delete_vertices(const PlaneGraph& g, const std::set<vertex>& s) {
    return g.delete_vertices(s);
}

} // namespace plane21

#endif

#ifndef PLANE21_DISCHARGE_HPP
#define PLANE21_DISCHARGE_HPP

#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "plane21/class_gate.hpp"
#include "plane21/plane_graph.hpp"

namespace plane21 {

// ---------------------------------------------------------------------------
// Exact charge bookkeeping.  Every amount the rules move is a multiple of
// 1/6, so charges are stored as integers scaled by 6 and no rounding can
// occur anywhere.
// ---------------------------------------------------------------------------

struct ElementRef {
    enum Kind { Vertex, Face } kind;
    int id;
    auto operator<=>(const ElementRef&) const = default;
    std::string str() const {
        return (kind == Vertex ? "v" : "f") + std::to_string(id);
    }
};

struct Transfer {
    ElementRef from, to;
    int sixths;
    std::string rule;
};

struct ChargeLedger {
    std::map<ElementRef, long long> charge; // in sixths
    std::vector<Transfer> transfers;

    long long total() const {
        long long t = 0;
        for (auto& [e, c] : charge) t += c;
        return t;
    }
    void move(ElementRef from, ElementRef to, int sixths, const char* rule) {
        charge.at(from) -= sixths;
        charge.at(to) += sixths;
        transfers.push_back({from, to, sixths, rule});
    }
};

// Predicates of the final-paragraph definitions, bound to (g, boundary edge).
struct ElementClass {
    const PlaneGraph& g;
    vertex x, y;

    bool normal(vertex v) const { return v != x && v != y; }
    bool special_vertex(vertex v) const { return g.degree(v) >= 5 || !normal(v); }
    bool internal(int f) const { return g.has_outer() ? f != g.outer_face() : true; }
    bool special_face(int f) const {
        return !internal(f) || g.face_degree(f) >= 7;
    }
    // normal 3-vertex incident with an internal face of degree <= 4
    bool minor3(vertex v) const {
        if (!normal(v) || g.degree(v) != 3) return false;
        for (auto c : g.corners(v))
            if (internal(c.face) && g.face_degree(c.face) <= 4) return true;
        return false;
    }
    // internal 5-face adjacent to at least one internal 3-face
    bool good5(int f) const {
        if (!internal(f) || g.face_degree(f) != 5) return false;
        const auto& w = g.faces()[f].walk;
        for (size_t i = 0; i < w.size(); ++i) {
            int other = g.face_at(w[(i + 1) % w.size()], w[i]);
            if (other != f && internal(other) && g.face_degree(other) == 3) return true;
        }
        return false;
    }
    bool triangular_edge(vpair e) const {
        for (vertex t : g.rotation(e.first))
            if (t != e.second && g.adjacent(t, e.second)) return true;
        return false;
    }
    bool normally_adjacent(int f1, int f2) const {
        std::set<vertex> a(g.faces()[f1].walk.begin(), g.faces()[f1].walk.end());
        int common = 0;
        std::set<vertex> seen;
        for (vertex v : g.faces()[f2].walk)
            if (a.count(v) && seen.insert(v).second) common++;
        return common == 2;
    }
};

// Per internal face: t_f = incident normal 3-vertices, s_f = adjacent
// internal 3-faces counted via each common edge.
struct FaceStats {
    int t = 0, s = 0;
};

inline std::map<int, FaceStats> face_stats(const PlaneGraph& g, vpair e) {
    ElementClass cls{g, e.first, e.second};
    std::map<int, FaceStats> out;
    for (int f = 0; f < g.face_count(); ++f) {
        if (!cls.internal(f)) continue;
        FaceStats st;
        const auto& w = g.faces()[f].walk;
        std::set<vertex> distinct(w.begin(), w.end());
        for (vertex v : distinct)
            if (cls.normal(v) && g.degree(v) == 3) st.t++;
        for (size_t i = 0; i < w.size(); ++i) {
            int other = g.face_at(w[(i + 1) % w.size()], w[i]);
            if (other != f && cls.internal(other) && g.face_degree(other) == 3) st.s++;
        }
        out[f] = st;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Initial charges: mu(v) = d(v) - 4 for every vertex including x and y,
// mu(f) = d(f) - 4 for internal faces, mu(f0) = d(f0) + 4.  The total is zero
// exactly when the embedding satisfies Euler's formula.
// ---------------------------------------------------------------------------
inline ChargeLedger initial_charges(const PlaneGraph& g, vpair e) {
    if (!g.is_connected())
        throw argument_error("initial_charges: graph must be connected");
    if (!g.has_vertex(e.first) || !g.has_vertex(e.second) || !g.adjacent(e.first, e.second))
        throw argument_error("initial_charges: boundary pair is not an edge");
    int f0 = g.outer_face();
    bool on_outer = false;
    const auto& w = g.faces()[f0].walk;
    for (size_t i = 0; i < w.size(); ++i) {
        vertex a = w[i], b = w[(i + 1) % w.size()];
        if ((a == e.first && b == e.second) || (a == e.second && b == e.first))
            on_outer = true;
    }
    if (!on_outer)
        throw argument_error("initial_charges: boundary edge is not on the outer face");

    ChargeLedger led;
    for (vertex v : g.vertices())
        led.charge[{ElementRef::Vertex, v}] = 6LL * (g.degree(v) - 4);
    for (int f = 0; f < g.face_count(); ++f)
        led.charge[{ElementRef::Face, f}] =
            (f == f0) ? 6LL * (g.face_degree(f) + 4) : 6LL * (g.face_degree(f) - 4);
    return led;
}

// ---------------------------------------------------------------------------
// The eight rules, applied once each in order.  Face adjacency counts
// multiplicity per common edge throughout.  R7 fires only in case 2 and R8
// only in case 3.
// ---------------------------------------------------------------------------
inline ChargeLedger apply_rules(const PlaneGraph& g, vpair e, ChargeLedger led,
                                CaseTag cas) {
    ElementClass cls{g, e.first, e.second};
    const int f0 = g.outer_face();
    auto F = [](int f) { return ElementRef{ElementRef::Face, f}; };
    auto V = [](vertex v) { return ElementRef{ElementRef::Vertex, v}; };
    // face across edge {a,b}, where the paying/receiving face holds the
    // directed side a->b
    auto other_side = [&](vertex a, vertex b) { return g.face_at(b, a); };

    // R1: every internal 3-face receives 1/3 from each adjacent face.
    for (int f = 0; f < g.face_count(); ++f) {
        if (!cls.internal(f) || g.face_degree(f) != 3) continue;
        const auto& w = g.faces()[f].walk;
        for (size_t i = 0; i < 3; ++i) {
            int from = other_side(w[i], w[(i + 1) % 3]);
            if (from != f) led.move(F(from), F(f), 2, "R1");
        }
    }

    // R2: a normal 3-vertex with an internal 4--face takes 1/2 from each of
    // the other two incident faces; otherwise 1/3 from every incident face.
    for (vertex v : g.vertices()) {
        if (!cls.normal(v) || g.degree(v) != 3) continue;
        auto cs = g.corners(v);
        int small = 0;
        for (auto& c : cs)
            if (cls.internal(c.face) && g.face_degree(c.face) <= 4) small++;
        if (small >= 1) {
            for (auto& c : cs)
                if (!(cls.internal(c.face) && g.face_degree(c.face) <= 4))
                    led.move(F(c.face), V(v), 3, "R2");
        } else {
            for (auto& c : cs) led.move(F(c.face), V(v), 2, "R2");
        }
    }

    // R3/R4/R5 share the per-corner shape: a corner holding a 4+-face is paid
    // directly; a corner holding a 3-face [uvw] pays the face across uw.
    auto send_per_corner = [&](vertex v, int sixths, bool internal_only, const char* rule) {
        for (auto& c : g.corners(v)) {
            if (g.face_degree(c.face) == 3) {
                int gp = g.face_at(c.prev, c.next); // across edge (prev,next) from the 3-face
                led.move(V(v), F(gp), sixths, rule);
            } else if (g.face_degree(c.face) >= 4) {
                if (internal_only && !cls.internal(c.face)) continue;
                led.move(V(v), F(c.face), sixths, rule);
            }
        }
    };

    for (vertex v : g.vertices()) {
        if (!cls.normal(v)) continue;
        if (g.degree(v) == 5) {
            send_per_corner(v, 1, false, "R3");
            // extra 1/6 to the middle of three consecutive faces whose outer
            // two are 3-faces
            auto cs = g.corners(v);
            const size_t d = cs.size();
            for (size_t i = 0; i < d; ++i) {
                int f1 = cs[(i + d - 1) % d].face, f3 = cs[(i + 1) % d].face;
                if (g.face_degree(f1) == 3 && g.face_degree(f3) == 3)
                    led.move(V(v), F(cs[i].face), 1, "R3");
            }
        } else if (g.degree(v) >= 6) {
            send_per_corner(v, 2, false, "R4");
        }
    }
    for (vertex v : {e.first, e.second}) send_per_corner(v, 2, true, "R5");

    // R6: the outer face pays each adjacent internal 4+-face via each common
    // edge.
    {
        const auto& w = g.faces()[f0].walk;
        for (size_t i = 0; i < w.size(); ++i) {
            int to = other_side(w[i], w[(i + 1) % w.size()]);
            if (to != f0 && cls.internal(to) && g.face_degree(to) >= 4)
                led.move(F(f0), F(to), 2, "R6");
        }
    }

    // R7 (case 2): every internal 5-face receives 1/6 from adjacent internal
    // 6+-faces via each common edge.
    if (cas == CaseTag::Case2) {
        for (int f = 0; f < g.face_count(); ++f) {
            if (!cls.internal(f) || g.face_degree(f) != 5) continue;
            const auto& w = g.faces()[f].walk;
            for (size_t i = 0; i < 5; ++i) {
                int from = other_side(w[i], w[(i + 1) % 5]);
                if (from != f && cls.internal(from) && g.face_degree(from) >= 6)
                    led.move(F(from), F(f), 1, "R7");
            }
        }
    }

    // R8 (case 3): every good 5-face receives 1/3 from adjacent internal
    // 7+-faces via each common edge.
    if (cas == CaseTag::Case3) {
        for (int f = 0; f < g.face_count(); ++f) {
            if (!cls.good5(f)) continue;
            const auto& w = g.faces()[f].walk;
            for (size_t i = 0; i < 5; ++i) {
                int from = other_side(w[i], w[(i + 1) % 5]);
                if (from != f && cls.internal(from) && g.face_degree(from) >= 7)
                    led.move(F(from), F(f), 2, "R8");
            }
        }
    }
    return led;
}

// ---------------------------------------------------------------------------
// Report: negative elements, exact total, and the transfer log.  Used both
// standalone and as the theorem_violation payload.
// ---------------------------------------------------------------------------

struct AuditReport {
    std::vector<std::pair<ElementRef, long long>> negatives;
    long long total = 0;
    const ChargeLedger* ledger = nullptr;
};

inline AuditReport audit_report(const ChargeLedger& led) {
    AuditReport r;
    r.ledger = &led;
    r.total = led.total();
    for (auto& [el, c] : led.charge)
        if (c < 0) r.negatives.push_back({el, c});
    return r;
}

inline std::string sixths_str(long long s) {
    std::ostringstream os;
    if (s % 6 == 0) os << (s / 6);
    else if (s % 3 == 0) os << (s / 3) << "/2";
    else if (s % 2 == 0) os << (s / 2) << "/3";
    else os << s << "/6";
    return os.str();
}

inline std::string audit_text(const PlaneGraph& g, const AuditReport& r,
                              bool with_log = false) {
    std::ostringstream os;
    os << "total charge: " << sixths_str(r.total) << "\n";
    os << "negative elements: " << r.negatives.size() << "\n";
    for (auto& [el, c] : r.negatives) {
        os << "  " << el.str();
        if (el.kind == ElementRef::Face) {
            os << " [walk";
            for (vertex v : g.faces()[el.id].walk) os << " " << v;
            os << "]";
        }
        os << " = " << sixths_str(c) << "\n";
    }
    if (with_log && r.ledger) {
        os << "transfers: " << r.ledger->transfers.size() << "\n";
        for (auto& t : r.ledger->transfers)
            os << "  " << t.rule << ": " << t.from.str() << " -> " << t.to.str()
               << " " << sixths_str(t.sixths) << "\n";
    }
    return os.str();
}

// Re-validates each transfer against the element-class predicates of its
// rule; an invariant check used by the tests.
inline bool transfers_local(const PlaneGraph& g, vpair e, CaseTag cas,
                            const ChargeLedger& led) {
    ElementClass cls{g, e.first, e.second};
    auto fdeg = [&](ElementRef r) { return g.face_degree(r.id); };
    for (const auto& t : led.transfers) {
        if (t.rule == "R1") {
            if (t.to.kind != ElementRef::Face || !cls.internal(t.to.id) ||
                fdeg(t.to) != 3 || t.sixths != 2)
                return false;
        } else if (t.rule == "R2") {
            if (t.to.kind != ElementRef::Vertex || !cls.normal(t.to.id) ||
                g.degree(t.to.id) != 3)
                return false;
            if (t.sixths != (cls.minor3(t.to.id) ? 3 : 2)) return false;
        } else if (t.rule == "R3") {
            if (t.from.kind != ElementRef::Vertex || g.degree(t.from.id) != 5 ||
                !cls.normal(t.from.id) || t.sixths != 1)
                return false;
        } else if (t.rule == "R4") {
            if (t.from.kind != ElementRef::Vertex || g.degree(t.from.id) < 6 ||
                !cls.normal(t.from.id) || t.sixths != 2)
                return false;
        } else if (t.rule == "R5") {
            if (t.from.kind != ElementRef::Vertex || cls.normal(t.from.id) ||
                t.sixths != 2)
                return false;
        } else if (t.rule == "R6") {
            if (t.from.kind != ElementRef::Face || cls.internal(t.from.id) ||
                t.to.kind != ElementRef::Face || !cls.internal(t.to.id) ||
                fdeg(t.to) < 4 || t.sixths != 2)
                return false;
        } else if (t.rule == "R7") {
            if (cas != CaseTag::Case2 || fdeg(t.to) != 5 || !cls.internal(t.to.id) ||
                fdeg(t.from) < 6 || !cls.internal(t.from.id) || t.sixths != 1)
                return false;
        } else if (t.rule == "R8") {
            if (cas != CaseTag::Case3 || !cls.good5(t.to.id) ||
                fdeg(t.from) < 7 || !cls.internal(t.from.id) || t.sixths != 2)
                return false;
        } else {
            return false;
        }
    }
    return true;
}

// Convenience: the full pipeline as text, for theorem_violation payloads.
inline std::string discharge_audit_text(const PlaneGraph& g, vpair e, CaseTag cas) {
    auto led = apply_rules(g, e, initial_charges(g, e), cas);
    return "discharging audit (" + to_string(cas) + "):\n" +
           audit_text(g, audit_report(led));
}

} // namespace plane21

#endif

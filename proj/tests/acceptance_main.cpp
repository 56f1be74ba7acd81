// Acceptance suite: runs every acceptance criterion at its stated tolerance
// and prints one PASS/FAIL line per criterion.  Exit status is nonzero when
// any criterion fails.

#include <chrono>
#include <iostream>
#include <sstream>
#include <vector>

#include "plane21/certify.hpp"
#include "plane21/class_gate.hpp"
#include "plane21/decompose.hpp"
#include "plane21/discharge.hpp"
#include "plane21/generate.hpp"
#include "builders.hpp"
#include "oracles.hpp"

using namespace plane21;
using namespace plane21::testing;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Corpus {
    std::vector<PlaneGraph> graphs;
    std::vector<CaseTag> cases;
};

// At least three boundary edges sampled from the outer face.
std::vector<vpair> boundary_samples(const PlaneGraph& g) {
    const auto& w = g.faces()[g.outer_face()].walk;
    std::vector<vpair> edges;
    std::set<vpair> seen;
    for (size_t i = 0; i < w.size(); ++i) {
        vpair d{w[i], w[(i + 1) % w.size()]};
        vpair n{std::min(d.first, d.second), std::max(d.first, d.second)};
        if (seen.insert(n).second) edges.push_back(d);
    }
    if (edges.size() <= 3) return edges;
    return {edges[0], edges[edges.size() / 2], edges[edges.size() - 1]};
}

bool criterion1(const Corpus& corpus, std::string& detail) {
    auto t0 = Clock::now();
    int runs = 0;
    for (size_t i = 0; i < corpus.graphs.size(); ++i) {
        const auto& g = corpus.graphs[i];
        for (vpair e : boundary_samples(g)) {
            NiceDecomposition c;
            try {
                c = decompose_nice(g, e);
            } catch (const std::exception& ex) {
                detail = "decompose failed on corpus graph " + std::to_string(i) +
                         ": " + ex.what();
                return false;
            }
            auto v = verify_nice(g, c);
            if (!v.ok) {
                detail = "verification failed on corpus graph " + std::to_string(i) +
                         ":\n" + v.text();
                return false;
            }
            runs++;
        }
    }
    double dt = seconds_since(t0);
    std::ostringstream os;
    os << runs << " decompose+verify runs over " << corpus.graphs.size()
       << " graphs in " << dt << "s";
    detail = os.str();
    return dt < 120.0;
}

bool criterion2(std::string& detail) {
    auto t0 = Clock::now();
    int count = 0;
    for (int cas = 1; cas <= 3; ++cas) {
        for (int k = 0; k < 70; ++k) {
            unsigned long long seed = 5000ULL + cas * 1000 + k;
            int n = 4 + static_cast<int>(seed * 2654435761ULL % 9); // 4..12
            auto r = generate(seed, n, static_cast<CaseTag>(cas));
            const auto& g = r.graph;
            if (g.vertex_count() < 2) continue;
            vpair e = boundary_samples(g)[0];
            auto oc = oracle_nice(g, e);
            if (!oc) {
                detail = "oracle found no decomposition (case " + std::to_string(cas) +
                         ", seed " + std::to_string(seed) + ")";
                return false;
            }
            if (!verify_nice(g, *oc).ok) {
                detail = "oracle certificate failed verification";
                return false;
            }
            auto dc = decompose_nice(g, e);
            if (!verify_nice(g, dc).ok) {
                detail = "decomposer certificate failed verification";
                return false;
            }
            count++;
        }
    }
    double dt = seconds_since(t0);
    std::ostringstream os;
    os << count << " graphs with n <= 12 checked against the oracle in " << dt << "s";
    detail = os.str();
    return count >= 200 && dt < 60.0;
}

bool criterion3(const Corpus& corpus, std::string& detail) {
    auto t0 = Clock::now();
    DecomposeOptions opts;
    opts.verify_steps = true;
    int runs = 0;
    for (size_t i = 0; i < corpus.graphs.size(); ++i) {
        const auto& g = corpus.graphs[i];
        for (vpair e : boundary_samples(g)) {
            try {
                auto c = decompose_nice(g, e, opts);
                (void)c;
            } catch (const std::exception& ex) {
                detail = "step verification failed on corpus graph " +
                         std::to_string(i) + ": " + ex.what();
                return false;
            }
            runs++;
        }
    }
    std::ostringstream os;
    os << runs << " step-verified runs in " << seconds_since(t0) << "s";
    detail = os.str();
    return true;
}

bool criterion4(const Corpus& corpus, std::string& detail) {
    auto t0 = Clock::now();
    int checked = 0;
    for (size_t i = 0; i < corpus.graphs.size(); ++i) {
        const auto& g = corpus.graphs[i];
        if (g.edge_count() == 0) continue;
        vpair e = boundary_samples(g)[0];
        for (CaseTag cas : classify(AdjGraph::from_plane(g))) {
            auto led = apply_rules(g, e, initial_charges(g, e), cas);
            if (led.total() != 0) {
                detail = "nonzero total on corpus graph " + std::to_string(i);
                return false;
            }
            checked++;
        }
    }
    // the three worked per-element values
    {
        auto g = bad5_gadget();
        auto led = apply_rules(g, {1, 2}, initial_charges(g, {1, 2}), CaseTag::Case1);
        int tri = -1;
        for (int f = 0; f < g.face_count(); ++f) {
            const auto& w = g.faces()[f].walk;
            if (g.face_degree(f) == 3 &&
                std::set<vertex>(w.begin(), w.end()) == std::set<vertex>{1, 5, 6})
                tri = f;
        }
        if (tri < 0 || led.charge.at({ElementRef::Face, tri}) != 0) {
            detail = "internal 3-face witness is not exactly zero";
            return false;
        }
    }
    {
        auto g = wheel_mixed();
        auto led = apply_rules(g, {14, 15}, initial_charges(g, {14, 15}), CaseTag::Case1);
        if (led.charge.at({ElementRef::Vertex, 1}) != 0) {
            detail = "minor 3-vertex witness is not exactly zero";
            return false;
        }
        if (led.charge.at({ElementRef::Vertex, 0}) != 0) {
            detail = "6-vertex witness is not exactly zero";
            return false;
        }
    }
    std::ostringstream os;
    os << checked << " (graph, case) ledgers conserved exactly; worked values "
       << "reproduced, in " << seconds_since(t0) << "s";
    detail = os.str();
    return true;
}

bool criterion5(const Corpus& corpus, std::string& detail) {
    auto t0 = Clock::now();
    TestRng rng(0xC0105EEDULL);
    int graphs_used = 0, colorings = 0;
    for (size_t i = 0; i < corpus.graphs.size() && graphs_used < 50; i += 29) {
        const auto& g = corpus.graphs[i];
        if (g.edge_count() == 0) continue;
        vpair e = boundary_samples(g)[0];
        auto cert = decompose_nice(g, e);
        graphs_used++;
        for (int trial = 0; trial < 1000; ++trial) {
            ListAssignment lists;
            for (vertex v : g.vertices()) {
                std::set<int> ls;
                while (ls.size() < 3) ls.insert(rng.below(9));
                lists[v] = std::vector<int>(ls.begin(), ls.end());
            }
            DefectiveColoring col;
            try {
                col = greedy_color(g, cert, lists);
            } catch (const std::exception& ex) {
                detail = std::string("greedy coloring failed: ") + ex.what();
                return false;
            }
            auto verdict = validate_coloring(g, cert, col);
            if (!verdict.ok) {
                detail = "coloring invalid on corpus graph " + std::to_string(i) +
                         ":\n" + verdict.text();
                return false;
            }
            colorings++;
        }
    }
    double dt = seconds_since(t0);
    std::ostringstream os;
    os << colorings << " colorings over " << graphs_used << " graphs in " << dt << "s";
    detail = os.str();
    return graphs_used >= 50 && dt < 60.0;
}

bool criterion6(std::string& detail) {
    auto t0 = Clock::now();
    // self-containment
    for (const auto& p : config_atlas()) {
        auto host = AdjGraph::from_edges(p.edges);
        auto m = contains_config(host, p.id);
        if (!m || !embedding_valid(p, host, *m)) {
            detail = "pattern " + p.name + " not detected in itself";
            return false;
        }
    }
    TestRng rng(0xACCE97);
    int pairs = 0;
    for (int host_i = 0; host_i < 100; ++host_i) {
        int n = 6 + rng.below(7); // 6..12
        int m = n + rng.below(n + 4);
        auto g = random_adj(rng, n, m);
        for (const auto& p : config_atlas()) {
            auto fast = contains_config(g, p.id);
            bool naive = naive_contains(p, g);
            if (fast.has_value() != naive ||
                (fast && !embedding_valid(p, g, *fast))) {
                detail = "matcher disagrees with the naive oracle on " + p.name;
                return false;
            }
            pairs++;
        }
        for (int k = 3; k <= 9; ++k) {
            auto fast = find_cycle_of_length(g, k);
            bool naive = naive_has_cycle(g, k);
            if (fast.has_value() != naive || (fast && !cycle_valid(g, *fast, k))) {
                detail = "cycle finder disagrees with the naive oracle at k=" +
                         std::to_string(k);
                return false;
            }
            pairs++;
        }
    }
    std::ostringstream os;
    os << pairs << " (pattern|k, host) agreements in " << seconds_since(t0) << "s";
    detail = os.str();
    return true;
}

bool criterion7(std::string& detail) {
    std::vector<std::pair<std::string, ExtensionPattern>> pats;
    pats.push_back({"bad-five-cycle", extension_pattern(CfgBadFiveCycle{{1, 2, 3, 4, 5, 6}})});
    for (int k = 0; k <= 3; ++k) {
        CfgTriangleChain c;
        for (int i = 0; i <= k + 1; ++i) c.w.push_back(i);
        for (int i = 0; i <= k; ++i) c.u.push_back(50 + i);
        c.z = 99;
        pats.push_back({"triangle-chain k=" + std::to_string(k), extension_pattern(c)});
    }
    for (int k = 0; k <= 2; ++k) {
        CfgTwoChains c;
        for (int i = 0; i <= k + 1; ++i) c.w.push_back(i);
        for (int i = 0; i <= k; ++i) c.u.push_back(50 + i);
        c.z = 99;
        c.z1 = 100;
        c.z2 = 101;
        pats.push_back({"two-chains k=" + std::to_string(k), extension_pattern(c)});
    }
    pats.push_back({"six-face-fan", extension_pattern(CfgSixFaceFan{{1, 2, 3, 4, 5, 6},
                                                             {11, 12, 13, 14, 15}})});
    for (auto& [name, p] : pats) {
        std::set<vertex> del(p.deleted.begin(), p.deleted.end());
        std::set<vertex> matched;
        for (auto [a, b] : p.matching) {
            if (!del.count(a) || !del.count(b) || !matched.insert(a).second ||
                !matched.insert(b).second) {
                detail = name + ": matching is not a matching on the configuration";
                return false;
            }
        }
        std::map<vertex, int> outdeg;
        for (auto [t, h] : p.arcs) {
            if (!del.count(t) || !del.count(h)) {
                detail = name + ": arc leaves the configuration";
                return false;
            }
            outdeg[t]++;
        }
        for (auto& [v, d] : outdeg)
            if (d > 2) {
                detail = name + ": internal out-degree " + std::to_string(d);
                return false;
            }
        if (!peel_order(p.deleted, p.arcs).order) {
            detail = name + ": internal arcs are cyclic";
            return false;
        }
    }
    detail = std::to_string(pats.size()) + " patterns satisfy the local contract";
    return true;
}

} // namespace

int main() {
    auto t0 = Clock::now();
    std::cout << "building corpus (500 graphs per case, n <= 60)..." << std::endl;
    Corpus corpus;
    for (int cas = 1; cas <= 3; ++cas) {
        for (int k = 0; k < 500; ++k) {
            unsigned long long seed = 100000ULL * cas + k;
            int n = 8 + static_cast<int>((seed * 1103515245ULL + 12345) % 53); // 8..60
            auto r = generate(seed, n, static_cast<CaseTag>(cas));
            corpus.graphs.push_back(std::move(r.graph));
            corpus.cases.push_back(static_cast<CaseTag>(cas));
        }
    }
    std::cout << "corpus ready: " << corpus.graphs.size() << " graphs in "
              << seconds_since(t0) << "s" << std::endl;

    bool all_ok = true;
    auto report = [&](int idx, bool ok, const std::string& detail) {
        std::cout << "CRITERION " << idx << ": " << (ok ? "PASS" : "FAIL") << " — "
                  << detail << std::endl;
        all_ok = all_ok && ok;
    };

    std::string d;
    bool ok;

    ok = criterion1(corpus, d);
    report(1, ok, d);
    ok = criterion2(d);
    report(2, ok, d);
    ok = criterion3(corpus, d);
    report(3, ok, d);
    ok = criterion4(corpus, d);
    report(4, ok, d);
    ok = criterion5(corpus, d);
    report(5, ok, d);
    ok = criterion6(d);
    report(6, ok, d);
    ok = criterion7(d);
    report(7, ok, d);

    std::cout << (all_ok ? "ALL CRITERIA PASS" : "SOME CRITERIA FAILED")
              << " (total " << seconds_since(t0) << "s)" << std::endl;
    return all_ok ? 0 : 1;
}

#ifndef PLANE21_CERTIFICATE_HPP
#define PLANE21_CERTIFICATE_HPP

#include <algorithm>
#include <optional>
#include <vector>

#include "plane21/plane_graph.hpp"

namespace plane21 {

// The certificate: a matching M, an orientation of G - M given as (tail,
// head) arcs, and an elimination witness in which every arc's head appears
// earlier than its tail.  boundary is set for nice decompositions, where the
// boundary edge xy must be in M and x, y must be sinks.
struct NiceDecomposition {
    std::vector<vpair> matching;
    std::vector<vpair> arcs;
    std::vector<vertex> order;
    std::optional<vpair> boundary;

    void canonicalize() {
        for (auto& [u, v] : matching)
            if (u > v) std::swap(u, v);
        std::sort(matching.begin(), matching.end());
        std::sort(arcs.begin(), arcs.end());
    }
};

} // namespace plane21

#endif

#ifndef PLANE21_CONFIG_ATLAS_HPP
#define PLANE21_CONFIG_ATLAS_HPP

#include <array>
#include <string>
#include <vector>

#include "plane21/plane_graph.hpp"

namespace plane21 {

// The twelve forbidden configurations as checked-in edge lists.  Pattern
// vertex ids are chosen so that every vertex i > 0 has some neighbor j < i
// (the matcher relies on this).
enum class ConfigId {
    CommonA, // 4-cycle plus a chord: two triangles sharing an edge
    CommonB, // 5-cycle plus a chord: triangle and 4-cycle sharing an edge
    CommonC, // 6-cycle plus a long chord: two 4-cycles sharing an edge
    AT345A,  // 5-cycle with triangles across two adjacent edges
    AT345B,  // 5-cycle with triangles across two non-adjacent edges
    AT345C,  // 5-cycle with a 4-cycle across one edge and a triangle across an adjacent edge
    AT345D,  // 5-cycle with a 4-cycle across one edge and a triangle across a non-adjacent edge
    AT48A,   // two 5-cycles sharing an edge
    AT48B,   // two vertices joined by paths of lengths 2, 2 and 3
    AT48C,   // 7-cycle with a triangle across one edge
    AT48D,   // 6-cycle, triangle across one edge, 4-cycle across an edge one step away
    AT48E,   // 6-cycle, triangle across one edge, 4-cycle across the opposite-side edge
};

struct PatternGraph {
    ConfigId id;
    std::string name;
    int nverts;
    std::vector<vpair> edges;
};

inline const std::vector<PatternGraph>& config_atlas() {
    static const std::vector<PatternGraph> atlas = {
        {ConfigId::CommonA, "CommonA", 4,
         {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {1, 3}}},
        {ConfigId::CommonB, "CommonB", 5,
         {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 2}}},
        {ConfigId::CommonC, "CommonC", 6,
         {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}, {1, 4}}},
        {ConfigId::AT345A, "AT345A", 7,
         {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 5}, {5, 1}, {1, 6}, {6, 2}}},
        {ConfigId::AT345B, "AT345B", 7,
         {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 5}, {5, 1}, {2, 6}, {6, 3}}},
        {ConfigId::AT345C, "AT345C", 8,
         {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 5}, {5, 6}, {6, 1}, {1, 7}, {7, 2}}},
        {ConfigId::AT345D, "AT345D", 8,
         {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 5}, {5, 6}, {6, 1}, {2, 7}, {7, 3}}},
        {ConfigId::AT48A, "AT48A", 8,
         {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 0}, {2, 6}}},
        {ConfigId::AT48B, "AT48B", 6,
         {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 5}, {5, 2}}},
        {ConfigId::AT48C, "AT48C", 8,
         {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 0}, {2, 7}, {7, 3}}},
        {ConfigId::AT48D, "AT48D", 9,
         {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}, {0, 6}, {6, 1}, {2, 7}, {7, 8}, {8, 3}}},
        {ConfigId::AT48E, "AT48E", 9,
         {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}, {0, 6}, {6, 1}, {3, 7}, {7, 8}, {8, 4}}},
    };
    return atlas;
}

inline const PatternGraph& pattern(ConfigId id) {
    return config_atlas()[static_cast<size_t>(id)];
}

// Hypothesis (1) forbids these...
inline std::vector<ConfigId> case1_configs() {
    return {ConfigId::CommonA, ConfigId::CommonB, ConfigId::CommonC,
            ConfigId::AT345A, ConfigId::AT345B, ConfigId::AT345C, ConfigId::AT345D};
}

// ...and hypothesis (2) these.
inline std::vector<ConfigId> case2_configs() {
    return {ConfigId::CommonA, ConfigId::CommonB, ConfigId::CommonC,
            ConfigId::AT48A, ConfigId::AT48B, ConfigId::AT48C,
            ConfigId::AT48D, ConfigId::AT48E};
}

} // namespace plane21

#endif

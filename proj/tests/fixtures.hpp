#pragma once

#include <vector>

#include "bowtie/graph.hpp"

namespace bowtie::testing {

inline Graph complete(int n, Vertex first = 0) {
    std::vector<Vertex> vs;
    std::vector<VertexPair> es;
    for (int i = 0; i < n; ++i) vs.push_back(first + i);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) es.push_back({first + i, first + j});
    return Graph(vs, es);
}

inline Graph cycle(int n) {
    std::vector<Vertex> vs;
    std::vector<VertexPair> es;
    for (int i = 0; i < n; ++i) vs.push_back(i);
    for (int i = 0; i < n; ++i) es.push_back(ordered(i, (i + 1) % n));
    return Graph(vs, es);
}

// Base vertices `first`, `first`+1, then `height` tips.
inline Graph chimney_graph(int height, Vertex first = 0) {
    std::vector<Vertex> vs{first, first + 1};
    std::vector<VertexPair> es{{first, first + 1}};
    for (int i = 0; i < height; ++i) {
        Vertex tip = first + 2 + i;
        vs.push_back(tip);
        es.push_back({first, tip});
        es.push_back({first + 1, tip});
    }
    return Graph(vs, es);
}

// Triangles 012 and 234 glued at vertex 2.
inline Graph bowtie_graph() {
    return Graph({0, 1, 2, 3, 4}, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}});
}

// Two K4 blocks {0..3}, {4..7} joined by the cross edge 0-4.
inline Graph two_k4_cross() {
    std::vector<VertexPair> es;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) {
            es.push_back({i, j});
            es.push_back({i + 4, j + 4});
        }
    es.push_back({0, 4});
    return Graph({0, 1, 2, 3, 4, 5, 6, 7}, es);
}

// All labeled graphs on vertices 0..n-1, one per edge-subset bitmask.
inline Graph labeled_graph(int n, unsigned long long mask) {
    std::vector<Vertex> vs;
    std::vector<VertexPair> es;
    for (int i = 0; i < n; ++i) vs.push_back(i);
    int bit = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++bit)
            if (mask & (1ULL << bit)) es.push_back({i, j});
    return Graph(vs, es);
}

inline unsigned long long labeled_graph_count(int n) {
    return 1ULL << (n * (n - 1) / 2);
}

}  // namespace bowtie::testing

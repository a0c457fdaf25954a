#include "bowtie/structure.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "bowtie/errors.hpp"
#include "bowtie/io.hpp"

namespace bowtie {

namespace {

enum class ComponentKind { Bare, Triangle, K4, Chimney, Other };

struct TriangleComponent {
    ComponentKind kind = ComponentKind::Other;
    std::set<Vertex> vertices;
    VertexPair base{-1, -1};   // chimney only
    std::set<Vertex> tips;     // chimney only
};

std::set<VertexPair> triangle_edges(const Graph& g) {
    std::set<VertexPair> out;
    for (const auto& t : triangles_of(g)) {
        out.insert(ordered(t.v[0], t.v[1]));
        out.insert(ordered(t.v[0], t.v[2]));
        out.insert(ordered(t.v[1], t.v[2]));
    }
    return out;
}

// Components of the subgraph kept after deleting every edge lying in no
// triangle.  For a bowtie-free graph each component is a K4, a chimney, a
// triangle, or a lone vertex.
std::vector<TriangleComponent> triangle_components(const Graph& g) {
    auto kept = triangle_edges(g);
    std::map<Vertex, std::set<Vertex>> adj;
    for (Vertex v : g.vertices()) adj[v];
    for (const auto& [u, v] : kept) {
        adj[u].insert(v);
        adj[v].insert(u);
    }

    std::vector<TriangleComponent> out;
    std::set<Vertex> seen;
    for (Vertex start : g.vertices()) {
        if (seen.count(start)) continue;
        TriangleComponent comp;
        std::vector<Vertex> stack{start};
        seen.insert(start);
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            comp.vertices.insert(v);
            for (Vertex w : adj[v])
                if (seen.insert(w).second) stack.push_back(w);
        }

        std::size_t n = comp.vertices.size();
        std::size_t m = 0;
        for (const auto& e : kept)
            if (comp.vertices.count(e.first)) ++m;

        if (n == 1) {
            comp.kind = ComponentKind::Bare;
        } else if (n == 3 && m == 3) {
            comp.kind = ComponentKind::Triangle;
        } else if (n == 4 && m == 6) {
            comp.kind = ComponentKind::K4;
        } else if (n >= 4 && m == 2 * (n - 2) + 1) {
            // candidate chimney: two base vertices adjacent to everything,
            // tips of degree 2, tips pairwise non-adjacent
            std::vector<Vertex> bases, tips;
            for (Vertex v : comp.vertices) {
                if (adj[v].size() == n - 1)
                    bases.push_back(v);
                else if (adj[v].size() == 2)
                    tips.push_back(v);
            }
            bool ok = bases.size() == 2 && tips.size() == n - 2 &&
                      kept.count(ordered(bases[0], bases[1])) != 0;
            for (std::size_t i = 0; ok && i < tips.size(); ++i)
                for (std::size_t j = i + 1; ok && j < tips.size(); ++j)
                    if (g.has_edge(tips[i], tips[j])) ok = false;
            if (ok) {
                comp.kind = ComponentKind::Chimney;
                comp.base = ordered(bases[0], bases[1]);
                comp.tips.insert(tips.begin(), tips.end());
            }
        }
        out.push_back(std::move(comp));
    }
    return out;
}

}  // namespace

std::set<Vertex> block_vertices(const Block& b) {
    if (const auto* k4 = std::get_if<K4Block>(&b))
        return std::set<Vertex>(k4->vertices.begin(), k4->vertices.end());
    const auto& c = std::get<Chimney>(b);
    std::set<Vertex> out(c.tips.begin(), c.tips.end());
    out.insert(c.base.first);
    out.insert(c.base.second);
    return out;
}

bool is_special(const Graph& g) {
    if (contains_bowtie(g)) return false;
    for (const auto& comp : triangle_components(g))
        if (comp.kind != ComponentKind::K4 && comp.kind != ComponentKind::Chimney)
            return false;
    return true;
}

Decomposition decompose(const Graph& g) {
    if (auto w = find_bowtie(g))
        throw ContainsBowtieError("graph contains a bowtie", *w);

    Decomposition d;
    std::set<Vertex> covered;
    for (const auto& comp : triangle_components(g)) {
        switch (comp.kind) {
            case ComponentKind::K4: {
                K4Block b{};
                std::copy(comp.vertices.begin(), comp.vertices.end(),
                          b.vertices.begin());
                d.blocks.emplace_back(b);
                break;
            }
            case ComponentKind::Chimney:
                d.blocks.emplace_back(Chimney{comp.base, comp.tips});
                break;
            default:
                throw NotSpecialError("graph is not special", *comp.vertices.begin());
        }
        covered.insert(comp.vertices.begin(), comp.vertices.end());
    }
    auto kept = triangle_edges(g);
    for (const auto& e : g.edges())
        if (!kept.count(e)) d.cross_edges.push_back(e);
    return d;
}

VertexRole classify_vertex(const Graph& g, Vertex v) {
    if (!g.has_vertex(v)) throw std::invalid_argument("no such vertex");
    auto d = decompose(g);
    for (const auto& b : d.blocks) {
        if (const auto* k4 = std::get_if<K4Block>(&b)) {
            if (std::count(k4->vertices.begin(), k4->vertices.end(), v))
                return VertexRole::InK4;
        } else {
            const auto& c = std::get<Chimney>(b);
            if (c.base.first == v || c.base.second == v) return VertexRole::Base;
            if (c.tips.count(v)) return VertexRole::Tip;
        }
    }
    throw InternalClaimError("vertex of a special graph not covered by any block");
}

SpecializeResult specialize(const Graph& g) {
    if (auto w = find_bowtie(g))
        throw ContainsBowtieError("graph contains a bowtie", *w);

    std::vector<Vertex> vertices = g.vertices();
    std::vector<VertexPair> edges(g.edges().begin(), g.edges().end());

    for (;;) {
        Graph current(vertices, edges);
        Vertex bad = -1;
        for (const auto& comp : triangle_components(current)) {
            if (comp.kind == ComponentKind::K4 || comp.kind == ComponentKind::Chimney)
                continue;
            if (comp.kind == ComponentKind::Other)
                throw InternalClaimError("unexpected component in a bowtie-free graph");
            Vertex v = *comp.vertices.begin();
            if (bad < 0 || v < bad) bad = v;
        }
        if (bad < 0) {
            Embedding inclusion;
            for (Vertex v : g.vertices()) inclusion[v] = v;
            return {std::move(current), std::move(inclusion)};
        }

        auto tris = triangles_of(current);
        std::optional<Triangle> least;
        for (const auto& t : tris) {
            if (!std::count(t.v.begin(), t.v.end(), bad)) continue;
            if (!least || t < *least) least = t;
        }
        Vertex fresh = current.max_vertex_id() + 1;
        if (least) {
            // complete the least triangle through `bad` to a K4
            vertices.push_back(fresh);
            for (Vertex v : least->v) edges.push_back(ordered(v, fresh));
        } else {
            // vertex in no triangle: attach a fresh K4 at it
            std::array<Vertex, 4> quad{bad, fresh, fresh + 1, fresh + 2};
            vertices.insert(vertices.end(), {fresh, fresh + 1, fresh + 2});
            for (std::size_t i = 0; i < 4; ++i)
                for (std::size_t j = i + 1; j < 4; ++j)
                    edges.push_back(ordered(quad[i], quad[j]));
        }
    }
}

namespace {

// Partitions of n into parts >= 4, parts non-increasing.
void partitions_into_blocks(std::size_t n, std::size_t max_part,
                            std::vector<std::size_t>& current,
                            std::vector<std::vector<std::size_t>>& out) {
    if (n == 0) {
        out.push_back(current);
        return;
    }
    for (std::size_t part = std::min(n, max_part); part >= 4; --part) {
        if (n - part != 0 && n - part < 4) continue;
        current.push_back(part);
        partitions_into_blocks(n - part, part, current, out);
        current.pop_back();
    }
}

struct BlockLayout {
    std::vector<Vertex> vertices;
    std::vector<VertexPair> edges;
    std::vector<std::set<Vertex>> block_sets;
};

// Lay blocks out on consecutive ids starting at 0.  Parts of size 4 become
// K4 for the first `k4_count` of them and height-2 chimneys after that;
// larger parts are chimneys.
BlockLayout lay_out_blocks(const std::vector<std::size_t>& parts,
                           std::size_t k4_count) {
    BlockLayout layout;
    Vertex next = 0;
    std::size_t seen4 = 0;
    for (std::size_t part : parts) {
        std::vector<Vertex> ids(part);
        std::iota(ids.begin(), ids.end(), next);
        next += static_cast<Vertex>(part);
        bool as_k4 = part == 4 && seen4 < k4_count;
        if (part == 4) ++seen4;
        if (as_k4) {
            for (std::size_t i = 0; i < 4; ++i)
                for (std::size_t j = i + 1; j < 4; ++j)
                    layout.edges.push_back({ids[i], ids[j]});
        } else {
            // chimney: first two ids are the base
            layout.edges.push_back({ids[0], ids[1]});
            for (std::size_t i = 2; i < part; ++i) {
                layout.edges.push_back({ids[0], ids[i]});
                layout.edges.push_back({ids[1], ids[i]});
            }
        }
        layout.vertices.insert(layout.vertices.end(), ids.begin(), ids.end());
        layout.block_sets.emplace_back(ids.begin(), ids.end());
    }
    return layout;
}

// Enumerate cross-edge subsets by backtracking over candidates in lex
// order.  An edge is addable iff its endpoints currently have no common
// neighbor, so no triangle ever contains a cross edge; validity is
// hereditary, which makes plain include/exclude search complete.
void cross_edge_sets(const BlockLayout& layout,
                     const std::vector<VertexPair>& candidates,
                     std::size_t index,
                     std::map<Vertex, std::set<Vertex>>& adj,
                     std::vector<VertexPair>& chosen,
                     std::vector<Graph>& out) {
    if (index == candidates.size()) {
        std::vector<VertexPair> edges = layout.edges;
        edges.insert(edges.end(), chosen.begin(), chosen.end());
        out.emplace_back(layout.vertices, edges);
        return;
    }
    cross_edge_sets(layout, candidates, index + 1, adj, chosen, out);
    auto [u, v] = candidates[index];
    for (Vertex w : adj[u])
        if (adj[v].count(w)) return;  // would create a triangle
    adj[u].insert(v);
    adj[v].insert(u);
    chosen.push_back({u, v});
    cross_edge_sets(layout, candidates, index + 1, adj, chosen, out);
    chosen.pop_back();
    adj[u].erase(v);
    adj[v].erase(u);
}

}  // namespace

std::vector<Graph> enumerate_special(std::size_t n) {
    if (n == 0) return {Graph()};

    std::vector<std::vector<std::size_t>> parts_list;
    std::vector<std::size_t> current;
    partitions_into_blocks(n, n, current, parts_list);

    std::vector<Graph> result;
    for (const auto& parts : parts_list) {
        std::size_t quads = std::count(parts.begin(), parts.end(), std::size_t{4});
        for (std::size_t k4s = 0; k4s <= quads; ++k4s) {
            auto layout = lay_out_blocks(parts, k4s);
            std::vector<VertexPair> candidates;
            for (std::size_t i = 0; i < layout.block_sets.size(); ++i)
                for (std::size_t j = i + 1; j < layout.block_sets.size(); ++j)
                    for (Vertex u : layout.block_sets[i])
                        for (Vertex v : layout.block_sets[j])
                            candidates.push_back(ordered(u, v));
            std::sort(candidates.begin(), candidates.end());

            std::map<Vertex, std::set<Vertex>> adj;
            for (const auto& [u, v] : layout.edges) {
                adj[u].insert(v);
                adj[v].insert(u);
            }
            std::vector<Graph> labeled;
            std::vector<VertexPair> chosen;
            cross_edge_sets(layout, candidates, 0, adj, chosen, labeled);

            // isomorph rejection within this block-kind choice; distinct
            // block multisets can never collide (decomposition is unique)
            std::vector<Graph> kept;
            for (const auto& g : labeled) {
                bool dup = false;
                for (const auto& h : kept)
                    if (are_isomorphic(g, h)) {
                        dup = true;
                        break;
                    }
                if (!dup) kept.push_back(g);
            }
            result.insert(result.end(), kept.begin(), kept.end());
        }
    }
    return result;
}

nlohmann::json decomposition_to_json(const Decomposition& d) {
    nlohmann::json j;
    j["blocks"] = nlohmann::json::array();
    for (const auto& b : d.blocks) {
        nlohmann::json jb;
        if (const auto* k4 = std::get_if<K4Block>(&b)) {
            jb["kind"] = "k4";
            jb["vertices"] = k4->vertices;
        } else {
            const auto& c = std::get<Chimney>(b);
            jb["kind"] = "chimney";
            jb["base"] = {c.base.first, c.base.second};
            jb["tips"] = c.tips;
        }
        j["blocks"].push_back(jb);
    }
    j["cross_edges"] = nlohmann::json::array();
    for (const auto& [u, v] : d.cross_edges) j["cross_edges"].push_back({u, v});
    return j;
}

std::string decomposition_dot(const Graph& g) {
    auto d = decompose(g);
    std::set<VertexPair> dashed(d.cross_edges.begin(), d.cross_edges.end());
    return graph_to_dot(g, dashed);
}

}  // namespace bowtie

#include "bowtie/eppa.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <tuple>

#include "bowtie/amalgam.hpp"
#include "bowtie/errors.hpp"
#include "bowtie/structure.hpp"

namespace bowtie {

PartialAutomorphism::PartialAutomorphism(Graph host, Embedding map)
    : host_(std::move(host)), map_(std::move(map)) {
    for (const auto& [u, v] : map_)
        if (!host_.has_vertex(u) || !host_.has_vertex(v))
            throw std::invalid_argument("map vertex not in host");
    if (!is_induced_embedding(host_, host_, map_))
        throw std::invalid_argument("map is not an induced partial isomorphism");
}

std::set<Vertex> PartialAutomorphism::domain() const {
    std::set<Vertex> out;
    for (const auto& [u, v] : map_) out.insert(u);
    return out;
}

std::set<Vertex> PartialAutomorphism::range() const {
    std::set<Vertex> out;
    for (const auto& [u, v] : map_) out.insert(v);
    return out;
}

CycleProfile cycle_profile(const PartialAutomorphism& p) {
    const Embedding& map = p.map();
    auto dom = p.domain();
    auto ran = p.range();

    CycleProfile profile;
    std::set<Vertex> visited;

    // complete cycles: forward iteration stays in the domain and returns
    for (const auto& [start, first] : map) {
        if (visited.count(start)) continue;
        std::vector<Vertex> seq{start};
        Vertex w = first;
        bool complete = false;
        while (dom.count(w)) {
            if (w == start) {
                complete = true;
                break;
            }
            seq.push_back(w);
            w = map.at(w);
        }
        if (complete) {
            visited.insert(seq.begin(), seq.end());
            profile.complete_cycles.push_back(std::move(seq));
        }
    }

    // chains start at vertices with no preimage
    std::set<Vertex> all(dom.begin(), dom.end());
    all.insert(ran.begin(), ran.end());
    for (Vertex s : all) {
        if (visited.count(s) || ran.count(s)) continue;
        std::vector<Vertex> seq{s};
        Vertex w = s;
        while (dom.count(w)) {
            w = map.at(w);
            seq.push_back(w);
        }
        visited.insert(seq.begin(), seq.end());
        profile.partial_chains.push_back(std::move(seq));
    }
    return profile;
}

int necklace_order(const CycleProfile& profile) {
    long long l = 1;
    for (const auto& cycle : profile.complete_cycles)
        l = std::lcm(l, static_cast<long long>(cycle.size()));
    std::size_t longest_chain = 0;
    for (const auto& chain : profile.partial_chains)
        longest_chain = std::max(longest_chain, chain.size());
    long long n = l * (static_cast<long long>(longest_chain) / l + 1);
    return static_cast<int>(n);
}

namespace {

// For each block of g meeting s, the minimal special sub-block: a full K4,
// or a chimney cut down to its base plus at least two tips (keeping every
// tip of s).
std::set<Vertex> specialized_superset(const Graph& g, const std::set<Vertex>& s) {
    std::set<Vertex> out;
    auto d = decompose(g);
    for (const auto& b : d.blocks) {
        auto vs = block_vertices(b);
        bool touched = false;
        for (Vertex v : vs)
            if (s.count(v)) touched = true;
        if (!touched) continue;
        if (std::holds_alternative<K4Block>(b)) {
            out.insert(vs.begin(), vs.end());
        } else {
            const auto& c = std::get<Chimney>(b);
            out.insert(c.base.first);
            out.insert(c.base.second);
            std::size_t kept = 0;
            for (Vertex t : c.tips)
                if (s.count(t)) {
                    out.insert(t);
                    ++kept;
                }
            for (Vertex t : c.tips) {
                if (kept >= 2) break;
                if (!s.count(t)) {
                    out.insert(t);
                    ++kept;
                }
            }
        }
    }
    return out;
}

struct CloseSearch {
    const Graph& g;
    const std::map<Vertex, VertexRole>& roles;
    std::vector<Vertex> order;  // vertices still needing images
    Embedding current;
    std::set<Vertex> used;
    std::size_t deepest = 0;

    bool run(std::size_t depth) {
        deepest = std::max(deepest, depth);
        if (depth == order.size()) {
            std::set<Vertex> image;
            for (const auto& [u, v] : current) image.insert(v);
            return is_special(g.induced(image));
        }
        Vertex x = order[depth];
        for (Vertex c : g.vertices()) {
            if (used.count(c) || roles.at(c) != roles.at(x)) continue;
            bool ok = true;
            for (const auto& [u, fu] : current)
                if (g.has_edge(u, x) != g.has_edge(fu, c)) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            current[x] = c;
            used.insert(c);
            if (run(depth + 1)) return true;
            used.erase(c);
            current.erase(x);
        }
        return false;
    }
};

}  // namespace

PartialAutomorphism close_system(const PartialAutomorphism& p) {
    const Graph& g = p.host();
    if (!is_special(g)) throw PreconditionError("host graph is not special");

    auto dom = p.domain();
    auto ran = p.range();
    if (is_special(g.induced(dom)) && is_special(g.induced(ran))) return p;

    std::map<Vertex, VertexRole> roles;
    for (Vertex v : g.vertices()) roles[v] = classify_vertex(g, v);
    for (const auto& [u, v] : p.map())
        if (roles.at(u) != roles.at(v))
            throw NotExtendableError("map sends a vertex to one of a different role", u);

    auto target = specialized_superset(g, dom);
    if (!is_special(g.induced(target)))
        throw InternalClaimError("specialized domain superset is not special");

    CloseSearch search{g, roles, {}, p.map(), {}, 0};
    for (const auto& [u, v] : p.map()) search.used.insert(v);
    for (Vertex v : target)
        if (!dom.count(v)) search.order.push_back(v);

    if (!search.run(0)) {
        Vertex blocking =
            search.order.empty() ? -1 : search.order[std::min(search.deepest,
                                                              search.order.size() - 1)];
        throw NotExtendableError("no block-respecting extension exists", blocking);
    }
    return PartialAutomorphism(g, search.current);
}

namespace {

using Tagged = std::tuple<int, int, Vertex>;  // (side, bead, vertex id)

struct UnionFind {
    std::map<Tagged, Tagged> parent;

    Tagged find(Tagged x) {
        auto it = parent.find(x);
        if (it == parent.end() || it->second == x) return x;
        Tagged root = find(it->second);
        parent[x] = root;
        return root;
    }

    void unite(Tagged a, Tagged b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (b < a) std::swap(a, b);
        parent[b] = a;  // lower tuple wins: canonical rep = min (side, bead, id)
    }
};

}  // namespace

NecklaceResult necklace(const PartialAutomorphism& p) {
    const Graph& g = p.host();
    if (!is_special(g)) throw PreconditionError("host graph is not special");
    auto dom = p.domain();
    auto ran = p.range();
    if (!is_special(g.induced(dom)) || !is_special(g.induced(ran)))
        throw PreconditionError(
            "domain or range is not special; apply close_system first");

    Embedding identity;
    for (Vertex v : g.vertices()) identity[v] = v;
    if (p.map().empty()) return {g, identity, identity, 1};
    if (p.is_total()) return {g, p.map(), identity, 1};

    auto profile = cycle_profile(p);
    int n = necklace_order(profile);

    std::set<Vertex> cycle_vertices;
    for (const auto& cycle : profile.complete_cycles)
        cycle_vertices.insert(cycle.begin(), cycle.end());

    // --- first half: beads G_0..G_n with range glued to next domain ---
    UnionFind half;
    for (const auto& [u, pu] : p.map())
        for (int i = 0; i < n; ++i)
            half.unite({0, i, pu}, {0, i + 1, u});

    auto class_members = [&](UnionFind& uf, int sides) {
        std::map<Tagged, std::vector<Tagged>> members;
        for (int s = 0; s < sides; ++s)
            for (int i = 0; i <= n; ++i)
                for (Vertex v : g.vertices())
                    members[uf.find({s, i, v})].push_back({s, i, v});
        return members;
    };
    auto members_g = class_members(half, 1);

    // shift map on classes of the first half (defined wherever a rep with
    // bead < n exists)
    auto shift_of = [&](UnionFind& uf,
                        const std::vector<Tagged>& cls) -> std::optional<Tagged> {
        std::optional<Tagged> image;
        for (const auto& [s, i, v] : cls) {
            if (i >= n) continue;
            Tagged next = uf.find({s, i + 1, v});
            if (image && *image != next)
                throw InternalClaimError("necklace shift map is not well defined");
            image = next;
        }
        return image;
    };

    // claim (ii): G_0 ∩ G_n holds exactly the complete-cycle vertices
    std::set<Vertex> overlap;  // bead-0 vertex ids of overlap classes
    for (const auto& [root, cls] : members_g) {
        bool bead0 = false, beadn = false;
        Vertex at0 = -1;
        for (const auto& [s, i, v] : cls) {
            if (i == 0) {
                bead0 = true;
                at0 = v;
            }
            if (i == n) beadn = true;
        }
        if (bead0 && beadn) overlap.insert(at0);
    }
    if (overlap != cycle_vertices)
        throw InternalClaimError(
            "half-necklace overlap differs from the complete-cycle vertices");

    // claim (i): the n-fold shift fixes every overlap class
    for (Vertex v : overlap) {
        Tagged x = half.find({0, 0, v});
        for (int step = 0; step < n; ++step) {
            auto next = shift_of(half, members_g.at(x));
            if (!next)
                throw InternalClaimError("shift undefined while iterating overlap");
            x = *next;
        }
        if (x != half.find({0, 0, v}))
            throw InternalClaimError("n-fold shift does not fix the overlap");
    }

    // the Claim: the induced subgraph on G_0 ∪ G_n is special
    {
        std::map<Tagged, Vertex> ids;
        Vertex next_id = 0;
        for (const auto& [root, cls] : members_g) ids[root] = next_id++;
        std::vector<VertexPair> half_edges;
        std::vector<Vertex> half_vertices;
        for (const auto& [root, cls] : members_g) half_vertices.push_back(ids.at(root));
        for (int i = 0; i <= n; ++i)
            for (const auto& [u, v] : g.edges())
                half_edges.push_back(ordered(ids.at(half.find({0, i, u})),
                                             ids.at(half.find({0, i, v}))));
        std::sort(half_edges.begin(), half_edges.end());
        half_edges.erase(std::unique(half_edges.begin(), half_edges.end()),
                         half_edges.end());
        Graph half_graph(half_vertices, half_edges);

        std::set<Vertex> ends;
        for (const auto& [root, cls] : members_g)
            for (const auto& [s, i, v] : cls)
                if (i == 0 || i == n) ends.insert(ids.at(root));
        if (!is_special(half_graph.induced(ends)))
            throw InternalClaimError("induced subgraph on G_0 ∪ G_n is not special");
        if (!is_special(half_graph))
            throw InternalClaimError("half necklace is not special");
    }

    // --- full necklace: mirror half H_0..H_n, glue G_0 to H_n and G_n to
    // H_0 through the n-fold shift ---
    UnionFind ring;
    for (int s = 0; s < 2; ++s)
        for (const auto& [u, pu] : p.map())
            for (int i = 0; i < n; ++i)
                ring.unite({s, i, pu}, {s, i + 1, u});
    for (Vertex v : g.vertices()) {
        ring.unite({0, 0, v}, {1, n, v});
        ring.unite({0, n, v}, {1, 0, v});
    }

    auto members_k = class_members(ring, 2);

    // classes must stay injective per bead, or the quotient collapsed
    for (const auto& [root, cls] : members_k) {
        std::set<std::pair<int, int>> beads;
        for (const auto& [s, i, v] : cls)
            if (!beads.insert({s, i}).second)
                throw InternalClaimError("two vertices of one bead were identified");
    }

    // vertex naming: classes rooted at (G, 0, v) keep id v; the rest get
    // fresh ids above the host maximum, in canonical-representative order
    std::map<Tagged, Vertex> name;
    Vertex fresh = g.max_vertex_id() + 1;
    for (const auto& [root, cls] : members_k) {
        auto [s, i, v] = root;
        if (s == 0 && i == 0)
            name[root] = v;
        else
            name[root] = fresh++;
    }

    std::vector<Vertex> k_vertices;
    for (const auto& [root, id] : name) k_vertices.push_back(id);
    std::vector<VertexPair> k_edges;
    for (int s = 0; s < 2; ++s)
        for (int i = 0; i <= n; ++i)
            for (const auto& [u, v] : g.edges())
                k_edges.push_back(ordered(name.at(ring.find({s, i, u})),
                                          name.at(ring.find({s, i, v}))));
    std::sort(k_edges.begin(), k_edges.end());
    k_edges.erase(std::unique(k_edges.begin(), k_edges.end()), k_edges.end());
    Graph k(k_vertices, k_edges);

    // f = g ∪ h: shift inside whichever side provides a bead below n
    std::map<Vertex, Vertex> f;
    for (const auto& [root, cls] : members_k) {
        std::optional<Tagged> image;
        for (const auto& [s, i, v] : cls) {
            if (i >= n) continue;
            Tagged next = ring.find({s, i + 1, v});
            if (image && *image != next)
                throw InternalClaimError("necklace automorphism is not well defined");
            image = next;
        }
        if (!image)
            throw InternalClaimError("necklace automorphism misses a class");
        f[name.at(root)] = name.at(*image);
    }

    // runtime verification of the construction
    std::set<Vertex> f_image;
    for (const auto& [u, v] : f) f_image.insert(v);
    if (f.size() != k.vertex_count() || f_image.size() != k.vertex_count())
        throw InternalClaimError("necklace automorphism is not a permutation");
    std::set<VertexPair> mapped;
    for (const auto& [u, v] : k.edges()) mapped.insert(ordered(f.at(u), f.at(v)));
    if (mapped != k.edges())
        throw InternalClaimError("necklace map is not an automorphism");

    Embedding inclusion;
    for (Vertex v : g.vertices()) inclusion[v] = name.at(ring.find({0, 0, v}));
    if (!is_induced_embedding(g, k, inclusion))
        throw InternalClaimError("host is not induced in the necklace");
    for (const auto& [u, pu] : p.map())
        if (f.at(inclusion.at(u)) != inclusion.at(pu))
            throw InternalClaimError("necklace automorphism does not extend p");
    if (!is_special(k))
        throw InternalClaimError("necklace graph is not special");

    return {std::move(k), std::move(f), std::move(inclusion), n};
}

void validate(const OneSystem& s) {
    std::set<Vertex> image;
    if (s.automorphism.size() != s.structure.vertex_count())
        throw std::invalid_argument("automorphism must be total");
    for (const auto& [u, v] : s.automorphism) {
        if (!s.structure.has_vertex(u) || !s.structure.has_vertex(v))
            throw std::invalid_argument("automorphism uses unknown vertices");
        if (!image.insert(v).second)
            throw std::invalid_argument("automorphism is not injective");
    }
    std::set<VertexPair> mapped;
    for (const auto& [u, v] : s.structure.edges())
        mapped.insert(ordered(s.automorphism.at(u), s.automorphism.at(v)));
    if (mapped != s.structure.edges())
        throw std::invalid_argument("map does not preserve the edge set");
}

OneSystem amalgamate_1systems(const OneSystem& base, const OneSystem& left,
                              const OneSystem& right,
                              const Embedding& into_left,
                              const Embedding& into_right) {
    validate(base);
    validate(left);
    validate(right);
    if (!is_special(base.structure) || !is_special(left.structure) ||
        !is_special(right.structure))
        throw PreconditionError("all three structures must be special");

    AmalgamSpec spec{base.structure, left.structure, right.structure, into_left,
                     into_right};
    validate(spec);
    for (Vertex v : base.structure.vertices()) {
        if (into_left.at(base.automorphism.at(v)) !=
            left.automorphism.at(into_left.at(v)))
            throw PreconditionError("left embedding does not commute");
        if (into_right.at(base.automorphism.at(v)) !=
            right.automorphism.at(into_right.at(v)))
            throw PreconditionError("right embedding does not commute");
    }

    auto res = free_amalgam(spec);
    std::map<Vertex, Vertex> h;
    for (Vertex x : left.structure.vertices())
        h[res.from_left.at(x)] = res.from_left.at(left.automorphism.at(x));
    for (Vertex y : right.structure.vertices()) {
        Vertex t = res.from_right.at(y);
        Vertex img = res.from_right.at(right.automorphism.at(y));
        auto it = h.find(t);
        if (it != h.end() && it->second != img)
            throw InternalClaimError("side automorphisms disagree on the base");
        h[t] = img;
    }

    OneSystem out{res.graph, std::move(h)};
    validate(out);
    if (!is_special(out.structure))
        throw InternalClaimError("amalgamated 1-system is not special");
    return out;
}

}  // namespace bowtie

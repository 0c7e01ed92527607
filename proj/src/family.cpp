#include "indpoly/family.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

namespace indpoly {

namespace {

// Vertices 0..n-1 along the path.
Graph make_path(const PathSpec& s) {
    if (s.n < 1) throw std::invalid_argument("path: need n >= 1");
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < s.n; ++i) edges.emplace_back(i, i + 1);
    return Graph::build(s.n, edges);
}

// Vertices 0..n-1 around the cycle.
Graph make_cycle(const CycleSpec& s) {
    if (s.n < 3) throw std::invalid_argument("cycle: need n >= 3");
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < s.n; ++i) edges.emplace_back(i, i + 1);
    edges.emplace_back(s.n - 1, 0);
    return Graph::build(s.n, edges);
}

// Center 0, leaves 1..n.
Graph make_star(const StarSpec& s) {
    if (s.leaves < 1) throw std::invalid_argument("star: need at least one leaf");
    std::vector<Edge> edges;
    for (int i = 1; i <= s.leaves; ++i) edges.emplace_back(0, i);
    return Graph::build(s.leaves + 1, edges);
}

// Center 0; triangle i uses vertices 2i+1 and 2i+2.
Graph make_star_triangle(const StarTriangleSpec& s) {
    if (s.triangles < 1) throw std::invalid_argument("star triangle: need m >= 1");
    std::vector<Edge> edges;
    for (int i = 0; i < s.triangles; ++i) {
        int a = 2 * i + 1, b = 2 * i + 2;
        edges.emplace_back(0, a);
        edges.emplace_back(0, b);
        edges.emplace_back(a, b);
    }
    return Graph::build(2 * s.triangles + 1, edges);
}

// Parts occupy consecutive index blocks in the given (non-increasing) order.
Graph make_multipartite(const CompleteMultipartiteSpec& s) {
    if (s.parts.empty()) throw std::invalid_argument("multipartite: need at least one part");
    for (size_t i = 0; i < s.parts.size(); ++i) {
        if (s.parts[i] < 1) throw std::invalid_argument("multipartite: part sizes must be >= 1");
        if (i > 0 && s.parts[i] > s.parts[i - 1])
            throw std::invalid_argument("multipartite: part sizes must be non-increasing");
    }
    std::vector<int> start{0};
    for (int p : s.parts) start.push_back(start.back() + p);
    std::vector<Edge> edges;
    for (size_t a = 0; a < s.parts.size(); ++a)
        for (size_t b = a + 1; b < s.parts.size(); ++b)
            for (int u = start[a]; u < start[a + 1]; ++u)
                for (int v = start[b]; v < start[b + 1]; ++v) edges.emplace_back(u, v);
    return Graph::build(start.back(), edges);
}

// BFS labeling: root 0, then level by level, children in creation order.
// Perfect shape gives every internal vertex exactly m children; the seeded
// shape draws 1..m children per internal vertex (leaves stay at the last
// level). Child counts use rng() % m directly so runs reproduce anywhere.
Graph make_mary_tree(const MAryTreeSpec& s) {
    if (s.arity < 1) throw std::invalid_argument("m-ary tree: need arity >= 1");
    if (s.depth < 0) throw std::invalid_argument("m-ary tree: need depth >= 0");
    constexpr long long kMaxVertices = 1 << 20;
    std::mt19937_64 rng(s.seed);
    std::vector<Edge> edges;
    std::vector<int> level{0};  // current level's vertex ids
    long long next = 1;
    for (int d = 0; d < s.depth; ++d) {
        std::vector<int> below;
        for (int v : level) {
            int children = s.arity;
            if (s.shape == MAryTreeSpec::Shape::SeededRandom)
                children = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(s.arity));
            for (int c = 0; c < children; ++c) {
                if (next >= kMaxVertices)
                    throw std::invalid_argument("m-ary tree: too many vertices");
                edges.emplace_back(v, static_cast<int>(next));
                below.push_back(static_cast<int>(next));
                ++next;
            }
        }
        level = std::move(below);
    }
    return Graph::build(static_cast<int>(next), edges);
}

// A_1 = K_1, A_2 = K_2, A_n = K_1 + (K_1 u A_{n-2}): dominating vertex 0,
// isolated summand 1, the recursive copy shifted to 2... The disconnected
// graph is K_1 u A_{n-1} with the isolated vertex labeled 0.
Graph make_antiregular(const AntiregularSpec& s) {
    if (s.connected) {
        if (s.n < 1) throw std::invalid_argument("antiregular: need n >= 1");
        if (s.n == 1) return Graph::build(1, {});
        if (s.n == 2) return Graph::build(2, {{0, 1}});
        Graph inner = make_antiregular({s.n - 2, true});
        return zykov_sum(Graph::build(1, {}), disjoint_union(Graph::build(1, {}), inner));
    }
    if (s.n < 2) throw std::invalid_argument("antiregular: disconnected form needs n >= 2");
    return disjoint_union(Graph::build(1, {}), make_antiregular({s.n - 1, true}));
}

// U side 0..u-1, V side u..u+v-1, then leaves grouped by U-vertex, then
// triangle vertex pairs grouped by V-vertex.
Graph make_cameron_walker(const CameronWalkerSpec& s) {
    if (s.u_count < 1) throw std::invalid_argument("cameron-walker: need at least one U vertex");
    if (s.v_count < 0) throw std::invalid_argument("cameron-walker: negative V side");
    if (static_cast<int>(s.leaves_per_u.size()) != s.u_count)
        throw std::invalid_argument("cameron-walker: one leaf count per U vertex required");
    if (static_cast<int>(s.triangles_per_v.size()) != s.v_count)
        throw std::invalid_argument("cameron-walker: one triangle count per V vertex required");
    for (int c : s.leaves_per_u)
        if (c < 1) throw std::invalid_argument("cameron-walker: every U vertex needs a leaf");
    for (int c : s.triangles_per_v)
        if (c < 0) throw std::invalid_argument("cameron-walker: negative triangle count");

    std::vector<Edge> edges;
    for (const auto& [u, v] : s.base_edges) {
        if (u < 0 || u >= s.u_count || v < 0 || v >= s.v_count)
            throw std::invalid_argument("cameron-walker: base edge out of range");
        edges.emplace_back(u, s.u_count + v);
    }
    Graph base = Graph::build(s.u_count + s.v_count, edges);
    if (!is_connected(base))
        throw std::invalid_argument("cameron-walker: base bipartite graph must be connected");

    int next = s.u_count + s.v_count;
    for (int u = 0; u < s.u_count; ++u)
        for (int i = 0; i < s.leaves_per_u[static_cast<size_t>(u)]; ++i)
            edges.emplace_back(u, next++);
    for (int v = 0; v < s.v_count; ++v)
        for (int i = 0; i < s.triangles_per_v[static_cast<size_t>(v)]; ++i) {
            int a = next++, b = next++;
            edges.emplace_back(s.u_count + v, a);
            edges.emplace_back(s.u_count + v, b);
            edges.emplace_back(a, b);
        }
    return Graph::build(next, edges);
}

// U side 0..m-1, V side m..m+n-1.
Graph make_bipartite_minus(const CompleteBipartiteMinusSpec& s) {
    if (s.m < 1 || s.n < 1) throw std::invalid_argument("bipartite-minus: need m, n >= 1");
    std::set<Edge> removed;
    for (const auto& [u, v] : s.removed) {
        if (u < 0 || u >= s.m || v < 0 || v >= s.n)
            throw std::invalid_argument("bipartite-minus: removed edge out of range");
        if (!removed.insert({u, v}).second)
            throw std::invalid_argument("bipartite-minus: removed edges must be distinct");
    }
    std::vector<Edge> edges;
    for (int u = 0; u < s.m; ++u)
        for (int v = 0; v < s.n; ++v)
            if (!removed.count({u, v})) edges.emplace_back(u, s.m + v);
    return Graph::build(s.m + s.n, edges);
}

}  // namespace

Graph generate(const FamilySpec& spec) {
    return std::visit(
        [](const auto& s) -> Graph {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, PathSpec>) return make_path(s);
            else if constexpr (std::is_same_v<T, CycleSpec>) return make_cycle(s);
            else if constexpr (std::is_same_v<T, StarSpec>) return make_star(s);
            else if constexpr (std::is_same_v<T, StarTriangleSpec>) return make_star_triangle(s);
            else if constexpr (std::is_same_v<T, CompleteMultipartiteSpec>) return make_multipartite(s);
            else if constexpr (std::is_same_v<T, MAryTreeSpec>) return make_mary_tree(s);
            else if constexpr (std::is_same_v<T, AntiregularSpec>) return make_antiregular(s);
            else if constexpr (std::is_same_v<T, CameronWalkerSpec>) return make_cameron_walker(s);
            else return make_bipartite_minus(s);
        },
        spec);
}

std::string family_name(const FamilySpec& spec) {
    return std::visit(
        [](const auto& s) -> std::string {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, PathSpec>) return "path";
            else if constexpr (std::is_same_v<T, CycleSpec>) return "cycle";
            else if constexpr (std::is_same_v<T, StarSpec>) return "star";
            else if constexpr (std::is_same_v<T, StarTriangleSpec>) return "star-triangle";
            else if constexpr (std::is_same_v<T, CompleteMultipartiteSpec>) return "multipartite";
            else if constexpr (std::is_same_v<T, MAryTreeSpec>) return "mary-tree";
            else if constexpr (std::is_same_v<T, AntiregularSpec>) return "antiregular";
            else if constexpr (std::is_same_v<T, CameronWalkerSpec>) return "cameron-walker";
            else return "bipartite-minus";
        },
        spec);
}

std::string describe(const FamilySpec& spec) {
    std::ostringstream out;
    out << family_name(spec) << "(";
    std::visit(
        [&](const auto& s) {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, PathSpec> || std::is_same_v<T, CycleSpec>) {
                out << "n=" << s.n;
            } else if constexpr (std::is_same_v<T, StarSpec>) {
                out << "leaves=" << s.leaves;
            } else if constexpr (std::is_same_v<T, StarTriangleSpec>) {
                out << "m=" << s.triangles;
            } else if constexpr (std::is_same_v<T, CompleteMultipartiteSpec>) {
                out << "parts=";
                for (size_t i = 0; i < s.parts.size(); ++i) out << (i ? "," : "") << s.parts[i];
            } else if constexpr (std::is_same_v<T, MAryTreeSpec>) {
                out << "m=" << s.arity << ",depth=" << s.depth << ",shape="
                    << (s.shape == MAryTreeSpec::Shape::Perfect ? "perfect" : "random");
                if (s.shape == MAryTreeSpec::Shape::SeededRandom) out << ",seed=" << s.seed;
            } else if constexpr (std::is_same_v<T, AntiregularSpec>) {
                out << "n=" << s.n << "," << (s.connected ? "connected" : "disconnected");
            } else if constexpr (std::is_same_v<T, CameronWalkerSpec>) {
                out << "u=" << s.u_count << ",v=" << s.v_count
                    << ",base_edges=" << s.base_edges.size();
            } else {
                out << "m=" << s.m << ",n=" << s.n << ",removed=" << s.removed.size();
            }
        },
        spec);
    out << ")";
    return out.str();
}

CameronWalkerSpec random_cameron_walker(std::uint64_t seed, int max_u, int max_v, int max_leaves,
                                        int max_triangles) {
    if (max_u < 1 || max_v < 1 || max_leaves < 1 || max_triangles < 0)
        throw std::invalid_argument("random_cameron_walker: bad bounds");
    std::mt19937_64 rng(seed);
    auto pick = [&](int lo, int hi) {  // inclusive, reproducible everywhere
        return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
    };
    CameronWalkerSpec spec;
    spec.u_count = pick(1, max_u);
    spec.v_count = pick(1, max_v);
    // Spanning connectivity first: bring vertices in alternating side order,
    // attaching each one to a random earlier vertex of the opposite side.
    std::set<Edge> base;
    int placed_u = 1, placed_v = 0;
    while (placed_u < spec.u_count || placed_v < spec.v_count) {
        bool add_v = placed_v < spec.v_count && (placed_v <= placed_u || placed_u == spec.u_count);
        if (add_v) {
            base.insert({pick(0, placed_u - 1), placed_v});
            ++placed_v;
        } else {
            base.insert({placed_u, pick(0, placed_v - 1)});
            ++placed_u;
        }
    }
    int extras = pick(0, spec.u_count * spec.v_count / 2);
    for (int i = 0; i < extras; ++i)
        base.insert({pick(0, spec.u_count - 1), pick(0, spec.v_count - 1)});
    spec.base_edges.assign(base.begin(), base.end());
    for (int u = 0; u < spec.u_count; ++u) spec.leaves_per_u.push_back(pick(1, max_leaves));
    for (int v = 0; v < spec.v_count; ++v) spec.triangles_per_v.push_back(pick(0, max_triangles));
    return spec;
}

}  // namespace indpoly

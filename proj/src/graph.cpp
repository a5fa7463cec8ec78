#include "gvm/graph.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "gvm/errors.hpp"

namespace gvm {

Graph Graph::build(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n < 1) throw domain_error("graph needs at least one vertex");
    Graph g;
    g.n_ = n;
    g.adj_.assign(n, {});
    std::set<std::pair<int, int>> seen;
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw domain_error("edge endpoint out of range: (" + std::to_string(u) +
                               "," + std::to_string(v) + ")");
        if (u == v)
            throw domain_error("self-loop rejected: (" + std::to_string(u) + "," +
                               std::to_string(v) + ")");
        if (u > v) std::swap(u, v);
        if (!seen.insert({u, v}).second) continue;
        g.adj_[u].push_back(v);
        g.adj_[v].push_back(u);
    }
    for (auto& nbrs : g.adj_) std::sort(nbrs.begin(), nbrs.end());
    return g;
}

long long Graph::edge_count() const {
    long long twice = 0;
    for (const auto& nbrs : adj_) twice += static_cast<long long>(nbrs.size());
    return twice / 2;
}

bool Graph::adjacent(int u, int v) const {
    const auto& nbrs = adj_[u];
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u)
        for (int v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

Graph path(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return Graph::build(n, e);
}

Graph cycle(int n) {
    if (n < 3) throw domain_error("cycle needs at least 3 vertices");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return Graph::build(n, e);
}

Graph complete(int n) {
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
    return Graph::build(n, e);
}

Graph empty_graph(int n) { return Graph::build(n, {}); }

Graph complete_multipartite(const std::vector<int>& sizes) {
    if (sizes.empty()) throw domain_error("complete_multipartite needs at least one part");
    std::vector<Graph> parts;
    parts.reserve(sizes.size());
    for (int s : sizes) {
        if (s < 1) throw domain_error("partite set size must be >= 1");
        parts.push_back(empty_graph(s));
    }
    return h_join(complete(static_cast<int>(sizes.size())), parts);
}

Graph h_join(const Graph& h, const std::vector<Graph>& parts) {
    if (static_cast<int>(parts.size()) != h.vertex_count())
        throw domain_error("h_join needs one part per vertex of H: got " +
                           std::to_string(parts.size()) + " parts for " +
                           std::to_string(h.vertex_count()) + " vertices");
    std::vector<int> offset(parts.size() + 1, 0);
    for (std::size_t i = 0; i < parts.size(); ++i)
        offset[i + 1] = offset[i] + parts[i].vertex_count();

    std::vector<std::pair<int, int>> e;
    for (std::size_t i = 0; i < parts.size(); ++i)
        for (auto [u, v] : parts[i].edges())
            e.emplace_back(offset[i] + u, offset[i] + v);
    for (auto [i, j] : h.edges())
        for (int u = 0; u < parts[i].vertex_count(); ++u)
            for (int v = 0; v < parts[j].vertex_count(); ++v)
                e.emplace_back(offset[i] + u, offset[j] + v);
    return Graph::build(offset.back(), e);
}

Graph lexicographic(const Graph& h, const Graph& g) {
    return h_join(h, std::vector<Graph>(h.vertex_count(), g));
}

Graph tensor(const Graph& g1, const Graph& g2) {
    const int n2 = g2.vertex_count();
    std::vector<std::pair<int, int>> e;
    for (auto [a, b] : g1.edges())
        for (auto [c, d] : g2.edges()) {
            e.emplace_back(a * n2 + c, b * n2 + d);
            e.emplace_back(a * n2 + d, b * n2 + c);
        }
    return Graph::build(g1.vertex_count() * n2, e);
}

Graph tensor_all(const Graph& first, const std::vector<Graph>& factors) {
    Graph acc = first;
    for (const Graph& f : factors) acc = tensor(acc, f);
    return acc;
}

Graph generalized_corona(const Graph& h, const std::vector<Graph>& parts) {
    if (static_cast<int>(parts.size()) != h.vertex_count())
        throw domain_error("generalized_corona needs one part per vertex of H");
    const int k = h.vertex_count();
    std::vector<int> offset(parts.size() + 1, 0);
    offset[0] = k;
    for (std::size_t i = 0; i < parts.size(); ++i)
        offset[i + 1] = offset[i] + parts[i].vertex_count();

    std::vector<std::pair<int, int>> e = h.edges();
    for (std::size_t i = 0; i < parts.size(); ++i) {
        for (auto [u, v] : parts[i].edges())
            e.emplace_back(offset[i] + u, offset[i] + v);
        for (int u = 0; u < parts[i].vertex_count(); ++u)
            e.emplace_back(static_cast<int>(i), offset[i] + u);
    }
    return Graph::build(offset.back(), e);
}

ReducedGraph twin_classes(const Graph& g) {
    const int n = g.vertex_count();
    std::map<std::vector<int>, int> by_neighborhood;
    std::vector<std::vector<int>> classes;
    std::vector<int> class_of(n);
    for (int v = 0; v < n; ++v) {
        auto [it, fresh] =
            by_neighborhood.try_emplace(g.neighbors(v), static_cast<int>(classes.size()));
        if (fresh) classes.push_back({});
        class_of[v] = it->second;
        classes[it->second].push_back(v);
    }

    const int t = static_cast<int>(classes.size());
    std::vector<std::pair<int, int>> qe;
    for (int i = 0; i < t; ++i)
        for (int j = i + 1; j < t; ++j)
            if (g.adjacent(classes[i][0], classes[j][0])) qe.emplace_back(i, j);

    ReducedGraph rg{Graph::build(t, qe), std::move(classes), {}};
    rg.multiplicities.reserve(t);
    for (const auto& block : rg.classes)
        rg.multiplicities.push_back(static_cast<int>(block.size()));
    return rg;
}

Graph inflate(const Graph& g, const std::vector<int>& extra) {
    ReducedGraph rg = twin_classes(g);
    const int t = static_cast<int>(rg.classes.size());
    if (static_cast<int>(extra.size()) != t)
        throw domain_error("inflate needs one count per twin class: got " +
                           std::to_string(extra.size()) + " for " + std::to_string(t) +
                           " classes");
    for (int r : extra)
        if (r < 0) throw domain_error("inflate counts must be non-negative");

    int next = g.vertex_count();
    std::vector<std::vector<int>> members = rg.classes;
    for (int i = 0; i < t; ++i)
        for (int r = 0; r < extra[i]; ++r) members[i].push_back(next++);

    std::vector<std::pair<int, int>> e = g.edges();
    for (auto [i, j] : rg.quotient.edges()) {
        // Only pairs touching a new vertex are missing from g's edges.
        for (int u : members[i])
            for (int v : members[j])
                if (u >= g.vertex_count() || v >= g.vertex_count()) e.emplace_back(u, v);
    }
    return Graph::build(next, e);
}

Graph embed_in_gvm(const Graph& g) {
    ReducedGraph rg = twin_classes(g);
    std::vector<int> extra;
    extra.reserve(rg.multiplicities.size());
    for (int m : rg.multiplicities) extra.push_back(m % 2);
    return inflate(g, extra);
}

bool has_pendant(const Graph& g) {
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) == 1) return true;
    return false;
}

bool has_isolated_vertex(const Graph& g) {
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) == 0) return true;
    return false;
}

bool all_degrees_even(const Graph& g) {
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) % 2 != 0) return false;
    return true;
}

bool all_degrees_same_parity(const Graph& g) {
    for (int v = 1; v < g.vertex_count(); ++v)
        if (g.degree(v) % 2 != g.degree(0) % 2) return false;
    return true;
}

bool is_connected(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<char> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int visited = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int u : g.neighbors(v))
            if (!seen[u]) {
                seen[u] = 1;
                ++visited;
                stack.push_back(u);
            }
    }
    return visited == n;
}

bool is_eulerian(const Graph& g) { return is_connected(g) && all_degrees_even(g); }

}  // namespace gvm

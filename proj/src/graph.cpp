#include "adjalg/graph.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

#include "adjalg/errors.hpp"

namespace adjalg {

Graph from_edge_list(std::size_t n,
                     const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
    std::set<std::pair<std::size_t, std::size_t>> dedup;
    for (auto [u, v] : edges) {
        if (u >= n || v >= n)
            throw ParseError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                             ") out of range for n=" + std::to_string(n));
        if (u == v) throw ParseError("loop at vertex " + std::to_string(u));
        dedup.emplace(std::min(u, v), std::max(u, v));
    }
    Graph g;
    g.n = n;
    g.edges.assign(dedup.begin(), dedup.end());
    g.neighbors.assign(n, {});
    g.adjacency = RationalMatrix(n, n);
    for (auto [u, v] : g.edges) {
        g.neighbors[u].push_back(v);
        g.neighbors[v].push_back(u);
        g.adjacency(u, v) = 1;
        g.adjacency(v, u) = 1;
    }
    for (auto& nb : g.neighbors) std::sort(nb.begin(), nb.end());
    return g;
}

Graph complete(std::size_t n) {
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return from_edge_list(n, edges);
}

Graph cycle(std::size_t n) {
    if (n < 3) throw ParseError("cycle: need n >= 3, got " + std::to_string(n));
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t u = 0; u < n; ++u) edges.emplace_back(u, (u + 1) % n);
    return from_edge_list(n, edges);
}

Graph triangular(std::size_t m) {
    if (m < 2) throw ParseError("triangular: need m >= 2, got " + std::to_string(m));
    std::vector<std::pair<std::size_t, std::size_t>> subsets;
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = a + 1; b < m; ++b) subsets.emplace_back(a, b);
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t i = 0; i < subsets.size(); ++i)
        for (std::size_t j = i + 1; j < subsets.size(); ++j) {
            auto [a, b] = subsets[i];
            auto [c, d] = subsets[j];
            if (a == c || a == d || b == c || b == d) edges.emplace_back(i, j);
        }
    return from_edge_list(subsets.size(), edges);
}

Graph kronecker(const Graph& g, const Graph& h) {
    const std::size_t n = g.n * h.n;
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (auto [a, b] : g.edges)
        for (auto [c, d] : h.edges) {
            // (a,c)~(b,d) and (a,d)~(b,c): both orientations of the
            // tensor rule i1~j1 and i2~j2.
            edges.emplace_back(a * h.n + c, b * h.n + d);
            edges.emplace_back(a * h.n + d, b * h.n + c);
        }
    return from_edge_list(n, edges);
}

Graph circulant(std::size_t n, const std::vector<long long>& connection, bool* symmetrized) {
    if (n == 0) throw ParseError("circulant: n must be positive");
    std::set<std::size_t> conn;
    for (long long s : connection) {
        long long r = s % static_cast<long long>(n);
        if (r < 0) r += static_cast<long long>(n);
        if (r == 0) throw ParseError("circulant: residue " + std::to_string(s) +
                                     " reduces to 0 mod " + std::to_string(n));
        conn.insert(static_cast<std::size_t>(r));
    }
    bool had_to_symmetrize = false;
    for (std::size_t s : std::set<std::size_t>(conn)) {
        if (!conn.count(n - s)) {
            conn.insert(n - s);
            had_to_symmetrize = true;
        }
    }
    if (symmetrized) *symmetrized = had_to_symmetrize;
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t s : conn) edges.emplace_back(i, (i + s) % n);
    return from_edge_list(n, edges);
}

Graph petersen() {
    std::vector<std::pair<std::size_t, std::size_t>> subsets;
    for (std::size_t a = 0; a < 5; ++a)
        for (std::size_t b = a + 1; b < 5; ++b) subsets.emplace_back(a, b);
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t i = 0; i < subsets.size(); ++i)
        for (std::size_t j = i + 1; j < subsets.size(); ++j) {
            auto [a, b] = subsets[i];
            auto [c, d] = subsets[j];
            if (a != c && a != d && b != c && b != d) edges.emplace_back(i, j);
        }
    return from_edge_list(10, edges);
}

Graph chordal_ring_12_4() {
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t i = 0; i < 12; ++i) edges.emplace_back(i, (i + 1) % 12);
    for (std::size_t k = 0; k < 6; ++k) edges.emplace_back(2 * k, (2 * k + 3) % 12);
    return from_edge_list(12, edges);
}

Graph complement(const Graph& g) {
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t u = 0; u < g.n; ++u)
        for (std::size_t v = u + 1; v < g.n; ++v)
            if (g.adjacency(u, v) == 0) edges.emplace_back(u, v);
    return from_edge_list(g.n, edges);
}

std::optional<std::size_t> is_regular(const Graph& g) {
    if (g.n == 0) return std::nullopt;
    std::size_t k = g.degree(0);
    for (std::size_t v = 1; v < g.n; ++v)
        if (g.degree(v) != k) return std::nullopt;
    return k;
}

std::vector<std::vector<std::size_t>> components(const Graph& g) {
    std::vector<std::vector<std::size_t>> comps;
    std::vector<bool> seen(g.n, false);
    for (std::size_t s = 0; s < g.n; ++s) {
        if (seen[s]) continue;
        std::vector<std::size_t> comp;
        std::deque<std::size_t> queue{s};
        seen[s] = true;
        while (!queue.empty()) {
            std::size_t u = queue.front();
            queue.pop_front();
            comp.push_back(u);
            for (std::size_t v : g.neighbors[u])
                if (!seen[v]) {
                    seen[v] = true;
                    queue.push_back(v);
                }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

bool is_connected(const Graph& g) {
    return components(g).size() <= 1;
}

DistanceData distance_data(const Graph& g) {
    auto comps = components(g);
    if (comps.size() > 1)
        throw DisconnectedError("distance_data: graph has " + std::to_string(comps.size()) +
                                " components", comps);
    DistanceData dd;
    dd.dist.assign(g.n, std::vector<int>(g.n, -1));
    int diameter = 0;
    for (std::size_t s = 0; s < g.n; ++s) {
        dd.dist[s][s] = 0;
        std::deque<std::size_t> queue{s};
        while (!queue.empty()) {
            std::size_t u = queue.front();
            queue.pop_front();
            for (std::size_t v : g.neighbors[u])
                if (dd.dist[s][v] < 0) {
                    dd.dist[s][v] = dd.dist[s][u] + 1;
                    diameter = std::max(diameter, dd.dist[s][v]);
                    queue.push_back(v);
                }
        }
    }
    dd.diameter = static_cast<std::size_t>(diameter);
    dd.distance_matrices.assign(dd.diameter + 1, RationalMatrix(g.n, g.n));
    for (std::size_t x = 0; x < g.n; ++x)
        for (std::size_t y = 0; y < g.n; ++y)
            dd.distance_matrices[static_cast<std::size_t>(dd.dist[x][y])](x, y) = 1;
    return dd;
}

namespace {

// Strips '#' comments, then tokenizes.
std::vector<std::string> tokenize_edge_list(std::istream& in) {
    std::vector<std::string> tokens;
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string tok;
        while (ls >> tok) tokens.push_back(tok);
    }
    return tokens;
}

std::size_t parse_count(const std::string& tok, const char* what) {
    try {
        std::size_t pos = 0;
        long long v = std::stoll(tok, &pos);
        if (pos != tok.size() || v < 0) throw std::invalid_argument(tok);
        return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
        throw ParseError(std::string("edge list: bad ") + what + " '" + tok + "'");
    }
}

}  // namespace

Graph read_edge_list(std::istream& in) {
    auto tokens = tokenize_edge_list(in);
    if (tokens.size() < 2) throw ParseError("edge list: missing 'n m' header");
    std::size_t n = parse_count(tokens[0], "vertex count");
    std::size_t m = parse_count(tokens[1], "edge count");
    if (tokens.size() != 2 + 2 * m)
        throw ParseError("edge list: header promises " + std::to_string(m) + " edges, found " +
                         std::to_string((tokens.size() - 2) / 2) +
                         ((tokens.size() - 2) % 2 ? " and a half" : ""));
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t i = 0; i < m; ++i) {
        std::size_t u = parse_count(tokens[2 + 2 * i], "vertex");
        std::size_t v = parse_count(tokens[3 + 2 * i], "vertex");
        edges.emplace_back(u, v);
    }
    return from_edge_list(n, edges);
}

Graph read_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    return read_edge_list(in);
}

void write_edge_list(const Graph& g, std::ostream& out, const std::string& comment) {
    if (!comment.empty()) out << "# " << comment << "\n";
    out << g.n << " " << g.edge_count() << "\n";
    for (auto [u, v] : g.edges) out << u << " " << v << "\n";
}

}  // namespace adjalg

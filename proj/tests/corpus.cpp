#include "corpus.hpp"

#include <random>
#include <utility>

namespace corpus {

using adjalg::Graph;

Graph kronecker_complete2_triangular4() {
    return adjalg::kronecker(adjalg::complete(2), adjalg::triangular(4));
}

Graph chordal_ring() { return adjalg::chordal_ring_12_4(); }

Graph circulant_7_12() { return adjalg::circulant(7, {1, 2}); }

namespace {

Graph random_connected_graph(std::mt19937& rng) {
    for (;;) {
        const std::size_t n = 4 + rng() % 7;  // 4..10
        std::vector<std::pair<std::size_t, std::size_t>> edges;
        for (std::size_t u = 0; u < n; ++u) {
            for (std::size_t v = u + 1; v < n; ++v) {
                if (rng() % 100 < 40) edges.emplace_back(u, v);
            }
        }
        Graph g = adjalg::from_edge_list(n, edges);
        if (adjalg::is_connected(g)) return g;
    }
}

Graph random_connected_circulant(std::mt19937& rng) {
    for (;;) {
        const std::size_t n = 5 + rng() % 12;  // 5..16
        std::vector<long long> connection;
        for (std::size_t s = 1; s <= n / 2; ++s) {
            if (rng() % 2 == 0) connection.push_back(static_cast<long long>(s));
        }
        if (connection.empty()) continue;
        Graph g = adjalg::circulant(n, connection);
        if (adjalg::is_connected(g)) return g;
    }
}

std::vector<Entry> build() {
    std::vector<Entry> entries;
    entries.push_back({"kronecker(complete(2),triangular(4))", kronecker_complete2_triangular4()});
    entries.push_back({"chordal-ring-12-4", chordal_ring()});
    entries.push_back({"circulant(7,{1,2})", circulant_7_12()});
    for (std::size_t n = 1; n <= 12; ++n) {
        entries.push_back({"complete(" + std::to_string(n) + ")", adjalg::complete(n)});
    }
    for (std::size_t n = 3; n <= 12; ++n) {
        entries.push_back({"cycle(" + std::to_string(n) + ")", adjalg::cycle(n)});
    }
    entries.push_back({"petersen", adjalg::petersen()});

    std::mt19937 rng(20240817);
    for (int i = 0; i < 50; ++i) {
        entries.push_back({"random-" + std::to_string(i), random_connected_graph(rng)});
    }
    for (int i = 0; i < 20; ++i) {
        entries.push_back({"random-circulant-" + std::to_string(i), random_connected_circulant(rng)});
    }
    return entries;
}

}  // namespace

const std::vector<Entry>& all() {
    static const std::vector<Entry> entries = build();
    return entries;
}

}  // namespace corpus

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "adjalg/matrix.hpp"

namespace adjalg {

// Simple undirected graph on vertices 0..n-1. The adjacency matrix is
// kept alongside the edge and neighbor lists because every algorithm in
// this library works on it directly.
struct Graph {
    std::size_t n = 0;
    std::vector<std::pair<std::size_t, std::size_t>> edges;  // u < v, sorted
    std::vector<std::vector<std::size_t>> neighbors;         // sorted per vertex
    RationalMatrix adjacency;                                // symmetric 0-1, zero diagonal

    std::size_t edge_count() const { return edges.size(); }
    std::size_t degree(std::size_t v) const { return neighbors[v].size(); }
};

// Builds a graph from an edge list, deduplicating repeated edges.
// Throws ParseError on a loop or an out-of-range endpoint.
Graph from_edge_list(std::size_t n,
                     const std::vector<std::pair<std::size_t, std::size_t>>& edges);

Graph complete(std::size_t n);

// Cycle C_n, n >= 3.
Graph cycle(std::size_t n);

// Line graph of K_m, m >= 2: vertices are the 2-subsets of {0..m-1} in
// lexicographic order, adjacent iff they share an element.
Graph triangular(std::size_t m);

// Tensor (Kronecker) product: adjacency A (x) A'. Vertex (i,j) of
// g (x) h maps to index i*h.n + j. The result may be disconnected;
// callers check.
Graph kronecker(const Graph& g, const Graph& h);

// Circulant graph: i ~ j iff (i - j mod n) lies in the connection set.
// Residues are reduced mod n; a set that is not closed under negation
// is symmetrized silently (reported through `symmetrized` when given).
// Throws ParseError if any residue reduces to 0.
Graph circulant(std::size_t n, const std::vector<long long>& connection,
                bool* symmetrized = nullptr);

// Kneser graph K(5,2): 2-subsets of {0..4}, adjacent iff disjoint.
Graph petersen();

// 12-cycle 0..11 plus the six chords {2k, (2k+3) mod 12}. 3-regular,
// diameter 4.
Graph chordal_ring_12_4();

Graph complement(const Graph& g);

// Valency if all degrees are equal, absent otherwise.
std::optional<std::size_t> is_regular(const Graph& g);

bool is_connected(const Graph& g);

// Vertex sets of the connected components, each sorted, ordered by
// smallest member.
std::vector<std::vector<std::size_t>> components(const Graph& g);

struct DistanceData {
    std::vector<std::vector<int>> dist;            // hop counts
    std::size_t diameter = 0;
    std::vector<RationalMatrix> distance_matrices;  // A_0..A_D, (A_i)_xy = 1 iff dist(x,y) = i
};

// BFS from every vertex. Throws DisconnectedError (with the component
// list) when the graph is not connected.
DistanceData distance_data(const Graph& g);

/*
 * Edge-list file format, the only ingestion format:
 *
 *   line 1: "n m"
 *   then m lines "u v" (0-based)
 *
 * Tokens are whitespace-separated; '#' starts a comment running to the
 * end of the line.
 */
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);
void write_edge_list(const Graph& g, std::ostream& out, const std::string& comment = "");

}  // namespace adjalg

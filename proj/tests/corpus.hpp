#pragma once

#include <string>
#include <vector>

#include "adjalg/graph.hpp"

// Shared graph corpus for the test and acceptance suites: the three
// worked examples, the complete and cycle families, Petersen, and two
// seeded random families. Everything is deterministic.
namespace corpus {

struct Entry {
    std::string name;
    adjalg::Graph graph;
};

// All corpus graphs: the three worked examples, K_1..K_12, C_3..C_12,
// Petersen, 50 random connected graphs on at most 10 vertices, and 20
// random connected circulants on at most 16.
const std::vector<Entry>& all();

// The three worked examples.
adjalg::Graph kronecker_complete2_triangular4();
adjalg::Graph chordal_ring();
adjalg::Graph circulant_7_12();  // circulant(7, {1,2})

}  // namespace corpus

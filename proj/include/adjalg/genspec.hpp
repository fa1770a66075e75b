#pragma once

#include <string>
#include <vector>

#include "adjalg/graph.hpp"

namespace adjalg {

/*
 * Generator expressions:
 *
 *   complete(7)  cycle(6)  triangular(4)  petersen
 *   circulant(12, {2,3,4})
 *   kronecker(complete(2), triangular(4))
 *   chordal-ring-12-4
 *
 * Family names are case-insensitive and accept '-' and '_'
 * interchangeably. Notes about silent normalization (for example a
 * symmetrized circulant connection set) are appended to *notes when a
 * list is supplied. Throws ParseError on malformed expressions.
 */
Graph parse_graph_spec(const std::string& text, std::vector<std::string>* notes = nullptr);

// Resolves a command-line graph argument: "gen:<expression>" runs the
// generator grammar, anything else is read as an edge-list file.
Graph load_graph_argument(const std::string& argument, std::vector<std::string>* notes = nullptr);

}  // namespace adjalg

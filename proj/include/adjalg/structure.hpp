#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "adjalg/graph.hpp"
#include "adjalg/matrix.hpp"
#include "adjalg/rational.hpp"

namespace adjalg {

struct EquitablePartition {
    std::vector<std::vector<std::size_t>> cells;
    RationalMatrix quotient;  // quotient(i, j) = neighbours in cell j of any vertex of cell i
};

struct EquitableCheck {
    std::optional<EquitablePartition> partition;       // set iff equitable
    std::optional<std::size_t> counterexample_vertex;  // a vertex whose counts differ from its cell mate
};

// Decides whether the given cells form an equitable partition and
// builds the quotient matrix when they do. The cells must partition
// the vertex set exactly (error otherwise).
EquitableCheck verify_equitable(const Graph& g, const std::vector<std::vector<std::size_t>>& cells);

// Closed-walk style counts read off the quotient: for an equitable
// partition whose cell 0 is a single base vertex x, entry j of the
// result is the number of length-ell walks from any vertex of cell j
// to x, i.e. row j, column 0 of the ell-th power of the quotient.
std::vector<Rational> quotient_walk_counts(const RationalMatrix& quotient,
                                           const std::vector<std::vector<std::size_t>>& cells,
                                           std::size_t ell);

struct DiagramSignature {
    std::vector<std::size_t> cell_sizes;
    RationalMatrix quotient;

    bool operator==(const DiagramSignature&) const = default;
};

struct DiagramAnalysis {
    bool common = false;                    // every base vertex produces the same signature
    std::vector<std::vector<std::size_t>> cells;  // cells for base vertex 0
    DiagramSignature signature;             // signature for base vertex 0
    std::size_t r_plus_1 = 0;               // number of cells for base vertex 0
    RationalMatrix walk_count_matrix;       // P(i, j) = length-i walk count from cell j to the base
    std::size_t rank = 0;                   // rank of the walk count matrix (0 when not common)
    std::optional<bool> concluded_qp;       // set to true when the rank certifies it; unset otherwise
};

/*
 * Partitions the vertex set around each base vertex x by the walk
 * vectors ((A^0)_xz, ..., (A^d)_xz), checks each partition for
 * equitability, and compares the signatures (cell sizes plus quotient
 * matrix, cells in a canonical order) across base vertices. When all
 * bases agree, the (r+1) x (r+1) matrix of walk counts P is formed
 * from powers of the common quotient; full rank r+1 certifies the
 * quotient-polynomial property because the rank never exceeds the
 * number of distinct eigenvalues.
 */
DiagramAnalysis faithful_diagram_analysis(const Graph& g);

enum class Diameter2Class {
    CaseI,          // constant mu, exactly two common-neighbour counts over edges
    CaseII,         // constant lambda, exactly two counts over non-adjacent pairs
    Both,
    Neither,
    NotApplicable,  // not regular, not connected, diameter != 2, or eigenvalue count != 4
};

struct Diameter2Report {
    Diameter2Class verdict = Diameter2Class::NotApplicable;
    std::vector<Rational> lambda_values;  // distinct common-neighbour counts over adjacent pairs
    std::vector<Rational> mu_values;      // distinct counts over distinct non-adjacent pairs
};

// Classifies a regular connected diameter-2 graph with four distinct
// eigenvalues by the spread of its common-neighbour counts.
Diameter2Report diameter2_four_ev_check(const Graph& g);

}  // namespace adjalg

#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "adjalg/graph.hpp"
#include "adjalg/matrix.hpp"
#include "adjalg/polynomial.hpp"

namespace adjalg {

// The unique basis of the adjacency algebra consisting of disjoint
// symmetric 0-1 matrices summing to the all-ones matrix. Exists
// exactly when the algebra is closed under entrywise products.
struct StandardBasis {
    std::vector<RationalMatrix> F;       // d+1 matrices, canonical RREF order
    std::size_t identity_index = 0;      // m with F_m = I
    // intersection_numbers[h][i][j] is the coefficient of F_h in
    // F_i * F_j.
    std::vector<std::vector<std::vector<Rational>>> intersection_numbers;
    std::vector<Polynomial> basis_polynomials;  // F_i = p_i(A)
};

struct ClosureFailure {
    enum class Kind { NonBinaryEntry, ProductOutsideSpan };
    Kind kind = Kind::NonBinaryEntry;
    // NonBinaryEntry: basis row index i plus the (row, col, value) of
    // the first non-0-1 entry. ProductOutsideSpan: indices (i, j) of
    // the first candidate pair whose entrywise product leaves the
    // span.
    std::size_t i = 0;
    std::size_t j = 0;
    std::size_t row = 0;
    std::size_t col = 0;
    Rational value;
};

/*
 * Standard-basis construction. Computes d+1 distinct eigenvalues
 * first, stacks the row-vectorized powers I, A, ..., A^d into a
 * (d+1) x n^2 matrix, and reads the candidate basis off its reduced
 * row echelon form. The construction succeeds iff every candidate is
 * 0-1 and the candidates are pairwise entrywise-disjoint, which is
 * equivalent to Hadamard closure of the algebra; otherwise a concrete
 * witness is returned. On success the intersection numbers and the
 * polynomials p_i with F_i = p_i(A) (from the RREF transform) are
 * filled in.
 *
 * Throws PreconditionError (or DisconnectedError) unless the graph is
 * regular and connected.
 */
std::variant<StandardBasis, ClosureFailure> standard_basis(const Graph& g);

// True iff standard_basis succeeds. Same preconditions.
bool is_hadamard_closed(const Graph& g);

// Quick non-closure certificate: the least i in {2..d} such that A^i
// has more than d+1 distinct entries, absent when no power does.
// Present implies the algebra is not Hadamard-closed; the converse
// does not hold. Requires a connected graph (regularity not needed).
std::optional<std::size_t> distinct_entries_reject(const Graph& g);

// Whether F_i generates the whole algebra, decided by counting the
// distinct eigenvalues of F_i (it generates iff that count is d+1).
// The equivalent Krylov-rank criterion is asserted in the tests.
bool idempotent_generates(const StandardBasis& basis, std::size_t i, std::size_t d);

// The vertex partitions induced by the basis rows, with their
// diagram parameters.
struct VertexPartitions {
    // cells[x][i] = sorted {z : (F_i)_{xz} = 1}.
    std::vector<std::vector<std::vector<std::size_t>>> cells;
    // c(i,h): expansion A*F_i = sum_h c(i,h) F_h. Nonnegative
    // integers; around every vertex, a vertex in cell h has exactly
    // c(i,h) neighbors in cell i.
    RationalMatrix c;
    std::vector<std::size_t> cell_sizes;  // |cells[x][i]|, vertex-independent
};

// Computes the per-vertex cells and c parameters, and verifies that
// every vertex partition is equitable with those same parameters and
// vertex-independent cell sizes. A verification failure would be an
// implementation bug and throws Error.
VertexPartitions vertex_partitions(const Graph& g, const StandardBasis& basis);

}  // namespace adjalg

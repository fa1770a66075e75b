#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "adjalg/graph.hpp"
#include "adjalg/matrix.hpp"
#include "adjalg/polynomial.hpp"
#include "adjalg/rational.hpp"

namespace adjalg {

// Walk counts ((A^0)_yz, (A^1)_yz, ..., (A^d)_yz) for one ordered pair.
using WalkVector = std::vector<Integer>;

struct WalkClass {
    WalkVector vector;     // shared by every member pair
    int distance = 0;      // shared as well
    std::vector<std::pair<std::size_t, std::size_t>> pairs;  // ordered pairs, sorted
};

// Partition of X x X by exact walk-vector equality, in canonical order
// (distance ascending, then lexicographic walk vector). R_0 is the
// diagonal class of the base... the class containing the pairs (x,x)
// with the lexicographically least vector among distance-0 classes.
struct WalkPartition {
    std::vector<WalkClass> classes;               // r+1 classes
    std::vector<RationalMatrix> class_matrices;   // M_i, 0-1 indicator per class
    RationalMatrix W;                             // (d+1) x (r+1), column j = vector of class j
    RationalMatrix Z;                             // reduced row echelon form of W
    RationalMatrix transform;                     // T with Z = T * W
    std::vector<std::size_t> pivots;              // pivot columns of Z
    std::vector<Polynomial> polys;                // pivot-row polynomials, p_i = (T row i) * (1,t,...,t^d)
    std::size_t d = 0;
    std::size_t r = 0;
};

// Builds the partition. Walk vectors are grouped through a hash over
// the exact integer sequences with full-comparison collision
// resolution, so grouping is exact. Throws DisconnectedError on
// disconnected input.
WalkPartition walk_partition(const Graph& g);

struct QpDiagnostics {
    bool value = false;          // the common verdict
    std::size_t d = 0;
    std::size_t r = 0;
    bool z_is_identity = false;
    std::size_t walk_vector_count = 0;  // number of distinct walk vectors, r+1
};

// Evaluates the equivalent characterizations (d = r, Z = I, number of
// distinct walk vectors = d+1) and asserts they agree before returning
// the shared verdict.
QpDiagnostics is_quotient_polynomial(const Graph& g);

/*
 * For each distance i, decides whether the distance-i matrix is a
 * polynomial in A and returns that polynomial when it is.
 *
 * The candidate is forced: with T the set of classes at distance i,
 * the 0-1 vector chi(T) lies in the row space of Z iff the pivot rows
 * whose pivot column is in T sum exactly to chi(T) (expansion
 * coefficients off an RREF are read at pivot positions, and chi(T) is
 * 0-1 there). When the sum matches, A_i = sum of the corresponding
 * p_j; the result is verified against A_i by evaluation before being
 * returned.
 */
std::vector<std::optional<Polynomial>> distance_matrix_polynomials(const Graph& g);

struct OrthogonalityReport {
    std::size_t pairs_checked = 0;
    bool all_orthogonal = false;  // <p_i(A), p_j(A)> = 0 for all i < j
    bool sum_is_all_ones = false; // sum_i p_i(A) = J
};

// Verifies the orthogonality relations of the pivot polynomials for a
// quotient-polynomial graph. Throws PreconditionError when the graph
// is not quotient-polynomial.
OrthogonalityReport quotient_polynomial_orthogonality(const Graph& g);

}  // namespace adjalg

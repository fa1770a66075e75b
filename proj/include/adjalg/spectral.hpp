#pragma once

#include <optional>
#include <vector>

#include "adjalg/graph.hpp"
#include "adjalg/matrix.hpp"
#include "adjalg/polynomial.hpp"

namespace adjalg {

/*
 * Number of distinct eigenvalues of a symmetric rational matrix,
 * without computing any eigenvalue.
 *
 * Runs Gram-Schmidt on I, A, A^2, ... under the normalized trace inner
 * product. Because multiplication by A is self-adjoint there, the
 * recurrence needs only three terms:
 *
 *   A_{k+1} = A_k A - <A_k A, A_k>/|A_k|^2 A_k - <A_k A, A_{k-1}>/|A_{k-1}|^2 A_{k-1}
 *
 * The count of nonzero matrices produced before the first exact zero is
 * dim span{A^0, A^1, ...} = d+1. The first step orthogonalizes A
 * against I (A_1 = A - (tr A / n) I), which changes nothing for
 * trace-free adjacency matrices but keeps the recurrence valid for
 * arbitrary symmetric inputs such as basis idempotents.
 *
 * Throws Error if the input is not symmetric (the three-term shortcut
 * would be invalid).
 */
std::size_t count_distinct_eigenvalues(const RationalMatrix& a);

// Same count computed entirely in integers: the sequence is kept as
// primitive integer matrices (entry gcd 1) and the projections use the
// un-normalized inner product trace(AB), scaling rather than dividing.
// Precondition: integer entries. Cross-checked against the rational
// path in the tests.
std::size_t count_distinct_eigenvalues_integer(const RationalMatrix& a);

struct OrthogonalSequence {
    std::vector<RationalMatrix> matrices;  // A_0 = I, A_1 = A, ...
    bool normalized = true;
    std::size_t d_plus_1 = 0;              // = matrices.size()
};

// The orthogonal sequence for a regular connected graph. With
// normalization (the default), each A_i is rescaled by
// <A_i,J>/|A_i|^2, after which |A_i|^2 = <A_i,J> and the sequence sums
// to J. The raw Gram-Schmidt sequence is returned when normalized is
// false. Throws PreconditionError (or DisconnectedError) on invalid
// input.
OrthogonalSequence predistance_sequence(const Graph& g, bool normalized = true);

// The unique polynomial H with H(A) = J, found by expressing the
// all-ones vector in the row space of the vectorized powers of A.
// Absent exactly when the graph is not both regular and connected.
std::optional<Polynomial> hoffman_polynomial(const Graph& g);

enum class DrgReason { NotRegular, NonBinaryMatrix, ZeroBeforeDiameter, Success };

struct IntersectionArray {
    std::vector<std::size_t> b;  // b_0 .. b_{D-1}
    std::vector<std::size_t> c;  // c_1 .. c_D
    bool operator==(const IntersectionArray&) const = default;
};

struct DrgVerdict {
    bool is_drg = false;
    DrgReason reason = DrgReason::NotRegular;
    // For NonBinaryMatrix: the subscript of the offending sequence
    // matrix. For ZeroBeforeDiameter: the subscript where the sequence
    // length went wrong; a value of D+1 means the sequence was still
    // nonzero past the diameter (the run produced more than D+1
    // matrices), smaller values mean it died early.
    std::optional<std::size_t> failure_index;
    std::optional<IntersectionArray> intersection_array;  // present iff is_drg
};

/*
 * Distance-regularity decision by orthogonal-sequence iteration: build
 * the sequence as in count_distinct_eigenvalues, rescale each new
 * matrix by <A,J>/|A|^2, and demand that every rescaled matrix be 0-1
 * and that the first zero arrive exactly at index D+1. On success the
 * sequence is the list of distance matrices and the intersection array
 * is extracted definitionally (counted at one pair, verified over all
 * pairs).
 *
 * With normalized = false the rescale step is skipped and each matrix
 * is instead required to have a single common nonzero value; verdicts
 * are identical (asserted in the tests).
 *
 * Non-regular input yields the NotRegular verdict per the input
 * contract; disconnected input throws DisconnectedError.
 */
DrgVerdict is_distance_regular(const Graph& g, bool normalized = true);

}  // namespace adjalg

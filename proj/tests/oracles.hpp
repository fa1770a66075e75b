#pragma once

#include <cstddef>
#include <vector>

#include "adjalg/graph.hpp"
#include "adjalg/matrix.hpp"
#include "adjalg/polynomial.hpp"
#include "adjalg/rational.hpp"

// Independent reference implementations used to cross-check the
// library. Everything here deliberately takes a different route than
// the code under test.
namespace oracle {

// Characteristic polynomial det(tI - A) by the Faddeev-LeVerrier
// recurrence, exact over the rationals.
adjalg::Polynomial characteristic_polynomial(const adjalg::RationalMatrix& a);

// Number of distinct roots of p: deg p - deg gcd(p, p').
std::size_t distinct_root_count(const adjalg::Polynomial& p);

// Distinct eigenvalues of a square matrix via the characteristic
// polynomial.
std::size_t distinct_eigenvalue_count(const adjalg::RationalMatrix& a);

// Definitional distance-regularity check: for every ordered pair at
// distance i, the neighbour counts one step further out (b_i) and one
// step back (c_i) must depend on i alone. Fills the arrays through the
// out-parameters on success.
bool definitional_drg(const adjalg::Graph& g, std::vector<std::size_t>* b_out = nullptr,
                      std::vector<std::size_t>* c_out = nullptr);

// dim span{I, A, A^2, ...} as the rank of the vectorized power stack.
std::size_t krylov_dimension(const adjalg::RationalMatrix& a);

// Number of from->to walks of the given length, by dynamic programming
// on the neighbour lists rather than matrix powers.
adjalg::Integer brute_walk_count(const adjalg::Graph& g, std::size_t from, std::size_t to,
                                 std::size_t length);

}  // namespace oracle

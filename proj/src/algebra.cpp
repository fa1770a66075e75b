#include "adjalg/algebra.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "adjalg/errors.hpp"
#include "adjalg/spectral.hpp"

namespace adjalg {

namespace {

void require_regular_connected(const Graph& g, const char* who) {
    if (!is_regular(g))
        throw PreconditionError(std::string(who) + ": graph is not regular");
    auto comps = components(g);
    if (comps.size() > 1)
        throw DisconnectedError(std::string(who) + ": graph is not connected", comps);
}

RationalMatrix unvectorize(const RationalMatrix& rref_rows, std::size_t row, std::size_t n) {
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = rref_rows(row, i * n + j);
    return m;
}

}  // namespace

std::variant<StandardBasis, ClosureFailure> standard_basis(const Graph& g) {
    require_regular_connected(g, "standard_basis");
    const std::size_t n = g.n;
    const std::size_t d_plus_1 = count_distinct_eigenvalues(g.adjacency);
    auto powers = matrix_powers(g.adjacency, d_plus_1 - 1);
    RrefResult rref = rref_with_transform(stack_vectorized(powers));
    if (rref.rank != d_plus_1)
        throw Error("standard_basis: power matrices are not independent; this is a bug");

    std::vector<RationalMatrix> F;
    F.reserve(d_plus_1);
    for (std::size_t i = 0; i < d_plus_1; ++i) F.push_back(unvectorize(rref.R, i, n));

    // Closure test part 1: every candidate must be 0-1.
    for (std::size_t i = 0; i < d_plus_1; ++i)
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c)
                if (!is_binary_value(F[i](r, c))) {
                    ClosureFailure fail;
                    fail.kind = ClosureFailure::Kind::NonBinaryEntry;
                    fail.i = i;
                    fail.row = r;
                    fail.col = c;
                    fail.value = F[i](r, c);
                    return fail;
                }

    // Closure test part 2: pairwise disjointness. If two 0-1 rows
    // overlap, some pair of candidates must have an entrywise product
    // outside the span (otherwise the span would be Hadamard-closed
    // and its canonical basis disjoint, a contradiction); report the
    // first such pair.
    bool disjoint = true;
    for (std::size_t i = 0; i < d_plus_1 && disjoint; ++i)
        for (std::size_t j = i + 1; j < d_plus_1 && disjoint; ++j)
            if (!hadamard(F[i], F[j]).is_zero()) disjoint = false;
    if (!disjoint) {
        for (std::size_t i = 0; i < d_plus_1; ++i)
            for (std::size_t j = i; j < d_plus_1; ++j) {
                bool inside = false;
                rowspace_coefficients(rref, hadamard(F[i], F[j]).vectorize_row_major(),
                                      &inside);
                if (!inside) {
                    ClosureFailure fail;
                    fail.kind = ClosureFailure::Kind::ProductOutsideSpan;
                    fail.i = i;
                    fail.j = j;
                    return fail;
                }
            }
        throw Error("standard_basis: overlapping 0-1 candidates with all entrywise "
                    "products inside the span; this is a bug");
    }

    StandardBasis basis;
    basis.F = std::move(F);

    bool found_identity = false;
    RationalMatrix I = RationalMatrix::identity(n);
    for (std::size_t i = 0; i < d_plus_1; ++i)
        if (basis.F[i] == I) {
            basis.identity_index = i;
            found_identity = true;
            break;
        }
    if (!found_identity)
        throw Error("standard_basis: no basis element equals the identity; this is a bug");

    // Structure constants: F_i F_j expanded in the basis. Expansion
    // coefficients are read off at pivot positions and the residual is
    // checked, so a failure here cannot pass silently.
    basis.intersection_numbers.assign(
        d_plus_1, std::vector<std::vector<Rational>>(d_plus_1, std::vector<Rational>(d_plus_1)));
    for (std::size_t i = 0; i < d_plus_1; ++i)
        for (std::size_t j = 0; j < d_plus_1; ++j) {
            bool inside = false;
            auto coeffs = rowspace_coefficients(
                rref, mat_mul(basis.F[i], basis.F[j]).vectorize_row_major(), &inside);
            if (!inside)
                throw Error("standard_basis: basis product left the span; this is a bug");
            for (std::size_t h = 0; h < d_plus_1; ++h)
                basis.intersection_numbers[h][i][j] = coeffs[h];
        }

    basis.basis_polynomials.reserve(d_plus_1);
    for (std::size_t i = 0; i < d_plus_1; ++i) {
        std::vector<Rational> coeffs(d_plus_1);
        for (std::size_t j = 0; j < d_plus_1; ++j) coeffs[j] = rref.T(i, j);
        basis.basis_polynomials.emplace_back(std::move(coeffs));
    }
    return basis;
}

bool is_hadamard_closed(const Graph& g) {
    return std::holds_alternative<StandardBasis>(standard_basis(g));
}

std::optional<std::size_t> distinct_entries_reject(const Graph& g) {
    auto comps = components(g);
    if (comps.size() > 1)
        throw DisconnectedError("distinct_entries_reject: graph is not connected", comps);
    const std::size_t d_plus_1 = count_distinct_eigenvalues(g.adjacency);
    if (d_plus_1 < 3) return std::nullopt;
    RationalMatrix power = mat_mul(g.adjacency, g.adjacency);
    for (std::size_t i = 2; i < d_plus_1; ++i) {
        std::set<Rational> values(power.data().begin(), power.data().end());
        if (values.size() > d_plus_1) return i;
        if (i + 1 < d_plus_1) power = mat_mul(power, g.adjacency);
    }
    return std::nullopt;
}

bool idempotent_generates(const StandardBasis& basis, std::size_t i, std::size_t d) {
    if (basis.F.size() != d + 1)
        throw Error("idempotent_generates: d does not match the basis size");
    if (i > d) throw Error("idempotent_generates: index out of range");
    return count_distinct_eigenvalues(basis.F[i]) == d + 1;
}

VertexPartitions vertex_partitions(const Graph& g, const StandardBasis& basis) {
    const std::size_t n = g.n;
    const std::size_t d_plus_1 = basis.F.size();

    VertexPartitions vp;
    vp.cells.assign(n, std::vector<std::vector<std::size_t>>(d_plus_1));
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t i = 0; i < d_plus_1; ++i)
            for (std::size_t z = 0; z < n; ++z)
                if (basis.F[i](x, z) == 1) vp.cells[x][i].push_back(z);

    vp.cell_sizes.assign(d_plus_1, 0);
    for (std::size_t i = 0; i < d_plus_1; ++i) {
        vp.cell_sizes[i] = vp.cells[0][i].size();
        for (std::size_t x = 1; x < n; ++x)
            if (vp.cells[x][i].size() != vp.cell_sizes[i])
                throw Error("vertex_partitions: cell sizes differ between vertices; "
                            "this is a bug");
    }

    // Expand A*F_i over the basis. Distinct 0-1 basis elements with
    // disjoint supports read their own coefficients off directly: the
    // coefficient of F_h is the value of A*F_i at any support position
    // of F_h.
    vp.c = RationalMatrix(d_plus_1, d_plus_1);
    for (std::size_t i = 0; i < d_plus_1; ++i) {
        RationalMatrix AFi = mat_mul(g.adjacency, basis.F[i]);
        RationalMatrix rebuilt(n, n);
        for (std::size_t h = 0; h < d_plus_1; ++h) {
            // First support position of F_h.
            Rational coeff;
            bool found = false;
            for (std::size_t r = 0; r < n && !found; ++r)
                for (std::size_t s = 0; s < n && !found; ++s)
                    if (basis.F[h](r, s) == 1) {
                        coeff = AFi(r, s);
                        found = true;
                    }
            vp.c(i, h) = coeff;
            rebuilt = rebuilt + coeff * basis.F[h];
        }
        if (!(rebuilt == AFi))
            throw Error("vertex_partitions: A*F expansion failed; this is a bug");
        for (std::size_t h = 0; h < d_plus_1; ++h)
            if (!is_integer_value(vp.c(i, h)) || vp.c(i, h) < 0)
                throw Error("vertex_partitions: c parameters are not nonnegative "
                            "integers; this is a bug");
    }

    // Equitability of every vertex partition with those parameters:
    // a vertex in cell h sees exactly c(i,h) neighbors in cell i.
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t h = 0; h < d_plus_1; ++h)
            for (std::size_t v : vp.cells[x][h])
                for (std::size_t i = 0; i < d_plus_1; ++i) {
                    std::size_t count = 0;
                    for (std::size_t w : g.neighbors[v])
                        if (basis.F[i](x, w) == 1) ++count;
                    if (Rational(count) != vp.c(i, h))
                        throw Error("vertex_partitions: partition is not equitable with "
                                    "the expansion parameters; this is a bug");
                }

    return vp;
}

}  // namespace adjalg

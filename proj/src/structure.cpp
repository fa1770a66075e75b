#include "adjalg/structure.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <unordered_map>
#include <utility>

#include "adjalg/errors.hpp"
#include "adjalg/spectral.hpp"

namespace adjalg {

namespace {

using IntegerVector = std::vector<Integer>;

struct IntegerVectorHash {
    std::size_t operator()(const IntegerVector& v) const {
        std::size_t h = 1469598103934665603ULL;
        for (const auto& x : v) {
            h ^= std::hash<Integer>{}(x);
            h *= 1099511628211ULL;
        }
        return h;
    }
};

struct BaseCell {
    IntegerVector vector;
    int distance = 0;
    std::vector<std::size_t> members;
};

// Cells of the walk-vector partition around one base vertex, in
// canonical order: distance from the base, then cell size, then the
// walk vector lexicographically.
std::vector<BaseCell> base_cells(const std::vector<RationalMatrix>& powers,
                                 const std::vector<std::vector<int>>& dist, std::size_t x,
                                 std::size_t n) {
    std::unordered_map<IntegerVector, std::size_t, IntegerVectorHash> index;
    std::vector<BaseCell> cells;
    IntegerVector v(powers.size());
    for (std::size_t z = 0; z < n; ++z) {
        for (std::size_t k = 0; k < powers.size(); ++k) v[k] = to_integer(powers[k](x, z));
        auto [it, inserted] = index.try_emplace(v, cells.size());
        if (inserted) cells.push_back(BaseCell{v, dist[x][z], {}});
        cells[it->second].members.push_back(z);
    }
    std::sort(cells.begin(), cells.end(), [](const BaseCell& a, const BaseCell& b) {
        if (a.distance != b.distance) return a.distance < b.distance;
        if (a.members.size() != b.members.size()) return a.members.size() < b.members.size();
        return std::lexicographical_compare(a.vector.begin(), a.vector.end(), b.vector.begin(),
                                            b.vector.end());
    });
    return cells;
}

std::vector<std::vector<std::size_t>> member_lists(const std::vector<BaseCell>& cells) {
    std::vector<std::vector<std::size_t>> out;
    out.reserve(cells.size());
    for (const BaseCell& c : cells) out.push_back(c.members);
    return out;
}

}  // namespace

EquitableCheck verify_equitable(const Graph& g,
                                const std::vector<std::vector<std::size_t>>& cells) {
    std::vector<std::size_t> cell_of(g.n, cells.size());
    std::size_t covered = 0;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (cells[i].empty()) throw PreconditionError("verify_equitable: empty cell");
        for (std::size_t v : cells[i]) {
            if (v >= g.n || cell_of[v] != cells.size()) {
                throw PreconditionError("verify_equitable: cells do not partition the vertex set");
            }
            cell_of[v] = i;
            ++covered;
        }
    }
    if (covered != g.n) {
        throw PreconditionError("verify_equitable: cells do not partition the vertex set");
    }

    const auto counts_for = [&](std::size_t v) {
        std::vector<std::size_t> counts(cells.size(), 0);
        for (std::size_t w : g.neighbors[v]) ++counts[cell_of[w]];
        return counts;
    };

    RationalMatrix quotient(cells.size(), cells.size());
    for (std::size_t i = 0; i < cells.size(); ++i) {
        const std::vector<std::size_t> reference = counts_for(cells[i][0]);
        for (std::size_t k = 1; k < cells[i].size(); ++k) {
            if (counts_for(cells[i][k]) != reference) {
                return EquitableCheck{std::nullopt, cells[i][k]};
            }
        }
        for (std::size_t j = 0; j < cells.size(); ++j) {
            quotient(i, j) = Rational(static_cast<long>(reference[j]));
        }
    }
    return EquitableCheck{EquitablePartition{cells, std::move(quotient)}, std::nullopt};
}

std::vector<Rational> quotient_walk_counts(const RationalMatrix& quotient,
                                           const std::vector<std::vector<std::size_t>>& cells,
                                           std::size_t ell) {
    if (quotient.rows() != quotient.cols() || quotient.rows() != cells.size()) {
        throw DimensionError("quotient_walk_counts: quotient shape does not match the cells");
    }
    if (cells.empty() || cells[0].size() != 1) {
        throw PreconditionError("quotient_walk_counts: cell 0 must be a single base vertex");
    }
    RationalMatrix power = RationalMatrix::identity(quotient.rows());
    for (std::size_t k = 0; k < ell; ++k) power = mat_mul(power, quotient);
    std::vector<Rational> out(cells.size());
    for (std::size_t j = 0; j < cells.size(); ++j) out[j] = power(j, 0);
    return out;
}

DiagramAnalysis faithful_diagram_analysis(const Graph& g) {
    const DistanceData dd = distance_data(g);
    const std::size_t d_plus_1 = count_distinct_eigenvalues(g.adjacency);
    const std::vector<RationalMatrix> powers = matrix_powers(g.adjacency, d_plus_1 - 1);

    DiagramAnalysis out;
    bool common = true;
    std::optional<DiagramSignature> reference;
    for (std::size_t x = 0; x < g.n && common; ++x) {
        const std::vector<BaseCell> cells = base_cells(powers, dd.dist, x, g.n);
        EquitableCheck check = verify_equitable(g, member_lists(cells));
        if (x == 0) {
            out.cells = member_lists(cells);
            out.r_plus_1 = cells.size();
            out.signature.cell_sizes.reserve(cells.size());
            for (const BaseCell& c : cells) out.signature.cell_sizes.push_back(c.members.size());
            if (check.partition) out.signature.quotient = check.partition->quotient;
        }
        if (!check.partition) {
            common = false;
            break;
        }
        DiagramSignature sig;
        for (const BaseCell& c : cells) sig.cell_sizes.push_back(c.members.size());
        sig.quotient = check.partition->quotient;
        if (!reference) {
            reference = std::move(sig);
        } else if (!(sig == *reference)) {
            common = false;
        }
    }

    out.common = common;
    if (!common) return out;

    const RationalMatrix& b = reference->quotient;
    const std::size_t size = out.r_plus_1;
    RationalMatrix p(size, size);
    RationalMatrix power = RationalMatrix::identity(size);
    for (std::size_t i = 0; i < size; ++i) {
        for (std::size_t j = 0; j < size; ++j) p(i, j) = power(j, 0);
        power = mat_mul(power, b);
    }
    out.walk_count_matrix = p;
    out.rank = rref_with_transform(p).rank;
    if (out.rank == size) out.concluded_qp = true;
    return out;
}

Diameter2Report diameter2_four_ev_check(const Graph& g) {
    Diameter2Report report;
    if (!is_regular(g) || !is_connected(g)) return report;
    const DistanceData dd = distance_data(g);
    if (dd.diameter != 2) return report;
    if (count_distinct_eigenvalues(g.adjacency) != 4) return report;

    const auto common_neighbours = [&](std::size_t u, std::size_t v) {
        std::vector<std::size_t> shared;
        std::set_intersection(g.neighbors[u].begin(), g.neighbors[u].end(),
                              g.neighbors[v].begin(), g.neighbors[v].end(),
                              std::back_inserter(shared));
        return shared.size();
    };

    std::set<Rational> lambda;
    std::set<Rational> mu;
    for (std::size_t u = 0; u < g.n; ++u) {
        for (std::size_t v = u + 1; v < g.n; ++v) {
            const Rational count(static_cast<long>(common_neighbours(u, v)));
            if (g.adjacency(u, v) == 1) {
                lambda.insert(count);
            } else {
                mu.insert(count);
            }
        }
    }
    report.lambda_values.assign(lambda.begin(), lambda.end());
    report.mu_values.assign(mu.begin(), mu.end());

    const bool case_i = mu.size() == 1 && lambda.size() == 2;
    const bool case_ii = lambda.size() == 1 && mu.size() == 2;
    if (case_i && case_ii) {
        report.verdict = Diameter2Class::Both;
    } else if (case_i) {
        report.verdict = Diameter2Class::CaseI;
    } else if (case_ii) {
        report.verdict = Diameter2Class::CaseII;
    } else {
        report.verdict = Diameter2Class::Neither;
    }
    return report;
}

}  // namespace adjalg

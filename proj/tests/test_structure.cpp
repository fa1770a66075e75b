#include <doctest.h>

#include "adjalg/algebra.hpp"
#include "adjalg/errors.hpp"
#include "adjalg/spectral.hpp"
#include "adjalg/structure.hpp"
#include "corpus.hpp"
#include "oracles.hpp"

using adjalg::Graph;
using adjalg::Rational;
using adjalg::RationalMatrix;

namespace {

Graph path4() { return adjalg::from_edge_list(4, {{0, 1}, {1, 2}, {2, 3}}); }

RationalMatrix from_rows(const std::vector<std::vector<long>>& rows) {
    RationalMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = Rational(rows[i][j]);
    }
    return m;
}

}  // namespace

TEST_CASE("equitable partition verification") {
    const Graph g = adjalg::cycle(6);
    const std::vector<std::vector<std::size_t>> distance_cells = {{0}, {1, 5}, {2, 4}, {3}};
    const adjalg::EquitableCheck check = adjalg::verify_equitable(g, distance_cells);
    REQUIRE(check.partition.has_value());
    CHECK_FALSE(check.counterexample_vertex.has_value());
    CHECK(check.partition->quotient == from_rows({{0, 2, 0, 0},
                                                  {1, 0, 1, 0},
                                                  {0, 1, 0, 1},
                                                  {0, 0, 2, 0}}));

    const adjalg::EquitableCheck bad =
        adjalg::verify_equitable(path4(), {{0}, {1}, {2, 3}});
    CHECK_FALSE(bad.partition.has_value());
    CHECK(bad.counterexample_vertex == std::size_t{3});
}

TEST_CASE("equitable verification rejects non-partitions") {
    const Graph g = adjalg::cycle(4);
    CHECK_THROWS_AS(adjalg::verify_equitable(g, {{0, 1}, {1, 2, 3}}),
                    adjalg::PreconditionError);
    CHECK_THROWS_AS(adjalg::verify_equitable(g, {{0, 1}, {2}}), adjalg::PreconditionError);
    CHECK_THROWS_AS(adjalg::verify_equitable(g, {{0, 1, 2, 3}, {}}),
                    adjalg::PreconditionError);
}

TEST_CASE("quotient walk counts match adjacency powers") {
    const Graph g = adjalg::cycle(6);
    const std::vector<std::vector<std::size_t>> cells = {{0}, {1, 5}, {2, 4}, {3}};
    const auto check = adjalg::verify_equitable(g, cells);
    REQUIRE(check.partition.has_value());
    const RationalMatrix& b = check.partition->quotient;

    const std::size_t d = adjalg::count_distinct_eigenvalues(g.adjacency) - 1;
    for (std::size_t ell = 0; ell <= d + 2; ++ell) {
        const std::vector<Rational> counts = adjalg::quotient_walk_counts(b, cells, ell);
        for (std::size_t j = 0; j < cells.size(); ++j) {
            for (std::size_t z : cells[j]) {
                CHECK(counts[j] == Rational(oracle::brute_walk_count(g, z, 0, ell)));
            }
        }
    }

    CHECK_THROWS_AS(adjalg::quotient_walk_counts(b, {{0, 3}, {1, 5}, {2, 4}}, 2),
                    adjalg::DimensionError);
    const std::vector<std::vector<std::size_t>> wide_base = {{0, 3}, {1, 2, 4, 5}};
    const auto wide = adjalg::verify_equitable(g, wide_base);
    REQUIRE(wide.partition.has_value());
    CHECK_THROWS_AS(adjalg::quotient_walk_counts(wide.partition->quotient, wide_base, 2),
                    adjalg::PreconditionError);
}

TEST_CASE("faithful diagram of petersen") {
    const adjalg::DiagramAnalysis analysis =
        adjalg::faithful_diagram_analysis(adjalg::petersen());
    CHECK(analysis.common);
    CHECK(analysis.r_plus_1 == 3);
    CHECK(analysis.signature.cell_sizes == std::vector<std::size_t>{1, 3, 6});
    CHECK(analysis.signature.quotient == from_rows({{0, 3, 0}, {1, 0, 2}, {0, 1, 2}}));
    CHECK(analysis.rank == 3);
    CHECK(analysis.concluded_qp == true);
    // The walk-count matrix rank never exceeds the eigenvalue count.
    CHECK(analysis.rank ==
          adjalg::count_distinct_eigenvalues(adjalg::petersen().adjacency));
}

TEST_CASE("faithful diagram differs across bases of a path") {
    const adjalg::DiagramAnalysis analysis = adjalg::faithful_diagram_analysis(path4());
    CHECK_FALSE(analysis.common);
    CHECK(analysis.rank == 0);
    CHECK_FALSE(analysis.concluded_qp.has_value());
    CHECK(analysis.r_plus_1 == 4);  // every vertex separates around base 0
}

TEST_CASE("diameter-2 classification witnesses") {
    // Two shared-neighbour counts on edges, one off edges.
    const adjalg::Diameter2Report case_i =
        adjalg::diameter2_four_ev_check(adjalg::circulant(6, {2, 3}));
    CHECK(case_i.verdict == adjalg::Diameter2Class::CaseI);
    CHECK(case_i.lambda_values == std::vector<Rational>{Rational(0), Rational(1)});
    CHECK(case_i.mu_values == std::vector<Rational>{Rational(2)});
    CHECK(adjalg::is_hadamard_closed(adjalg::circulant(6, {2, 3})));

    // One count on edges, two off edges.
    const adjalg::Diameter2Report case_ii =
        adjalg::diameter2_four_ev_check(adjalg::circulant(10, {1, 4}));
    CHECK(case_ii.verdict == adjalg::Diameter2Class::CaseII);
    CHECK(case_ii.lambda_values == std::vector<Rational>{Rational(0)});
    CHECK(case_ii.mu_values == std::vector<Rational>{Rational(2), Rational(4)});
    CHECK(adjalg::is_hadamard_closed(adjalg::circulant(10, {1, 4})));

    // Two counts on both sides: the spread test fails, and so does
    // closure.
    const adjalg::Diameter2Report neither =
        adjalg::diameter2_four_ev_check(adjalg::circulant(12, {2, 3, 4}));
    CHECK(neither.verdict == adjalg::Diameter2Class::Neither);
    CHECK(neither.lambda_values == std::vector<Rational>{Rational(0), Rational(2)});
    CHECK(neither.mu_values == std::vector<Rational>{Rational(4), Rational(6)});
    CHECK_FALSE(adjalg::is_hadamard_closed(adjalg::circulant(12, {2, 3, 4})));
}

TEST_CASE("diameter-2 classification applicability") {
    using adjalg::Diameter2Class;
    // Wrong diameter.
    CHECK(adjalg::diameter2_four_ev_check(adjalg::cycle(6)).verdict ==
          Diameter2Class::NotApplicable);
    // Wrong eigenvalue count (petersen has three).
    CHECK(adjalg::diameter2_four_ev_check(adjalg::petersen()).verdict ==
          Diameter2Class::NotApplicable);
    // Not regular.
    CHECK(adjalg::diameter2_four_ev_check(path4()).verdict == Diameter2Class::NotApplicable);
    // Not connected.
    const Graph split = adjalg::kronecker(adjalg::complete(2), adjalg::cycle(4));
    CHECK(adjalg::diameter2_four_ev_check(split).verdict == Diameter2Class::NotApplicable);
}

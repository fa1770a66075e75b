#include <doctest.h>

#include "adjalg/errors.hpp"
#include "adjalg/spectral.hpp"
#include "adjalg/walkpart.hpp"
#include "corpus.hpp"
#include "oracles.hpp"

using adjalg::Graph;
using adjalg::Rational;
using adjalg::RationalMatrix;
using adjalg::WalkPartition;

namespace {

Graph path4() { return adjalg::from_edge_list(4, {{0, 1}, {1, 2}, {2, 3}}); }

}  // namespace

TEST_CASE("walk partition of the 6-cycle") {
    const Graph g = adjalg::cycle(6);
    const WalkPartition part = adjalg::walk_partition(g);
    CHECK(part.d == 3);
    CHECK(part.r == 3);
    REQUIRE(part.classes.size() == 4);
    CHECK(part.Z == RationalMatrix::identity(4));

    const adjalg::DistanceData dd = adjalg::distance_data(g);
    for (std::size_t i = 0; i < 4; ++i) {
        CHECK(part.classes[i].distance == static_cast<int>(i));
        CHECK(part.class_matrices[i] == dd.distance_matrices[i]);
        CHECK(poly_eval_matrix(part.polys[i], g.adjacency) == dd.distance_matrices[i]);
    }
}

TEST_CASE("walk vectors agree with brute-force walk counts") {
    const Graph g = corpus::circulant_7_12();
    const WalkPartition part = adjalg::walk_partition(g);
    for (const adjalg::WalkClass& cls : part.classes) {
        for (const auto& [y, z] : cls.pairs) {
            for (std::size_t k = 0; k < cls.vector.size(); ++k) {
                CHECK(cls.vector[k] == oracle::brute_walk_count(g, y, z, k));
            }
        }
    }
    // Classes partition all ordered pairs.
    std::size_t total = 0;
    for (const adjalg::WalkClass& cls : part.classes) total += cls.pairs.size();
    CHECK(total == g.n * g.n);
}

TEST_CASE("walk partition of the chordal ring") {
    const WalkPartition part = adjalg::walk_partition(corpus::chordal_ring());
    CHECK(part.d == 6);
    CHECK(part.r == 7);
    CHECK(part.W.rows() == 7);
    CHECK(part.W.cols() == 8);
    CHECK(part.Z.rows() == 7);
    CHECK(mat_mul(part.transform, part.W) == part.Z);
    CHECK(part.polys.size() == 7);
}

TEST_CASE("quotient polynomial diagnostics") {
    const adjalg::QpDiagnostics yes = adjalg::is_quotient_polynomial(adjalg::cycle(6));
    CHECK(yes.value);
    CHECK(yes.d == 3);
    CHECK(yes.r == 3);
    CHECK(yes.z_is_identity);
    CHECK(yes.walk_vector_count == 4);

    const adjalg::QpDiagnostics no = adjalg::is_quotient_polynomial(corpus::chordal_ring());
    CHECK_FALSE(no.value);
    CHECK(no.d == 6);
    CHECK(no.r == 7);
    CHECK_FALSE(no.z_is_identity);
    CHECK(no.walk_vector_count == 8);

    // A connected non-regular graph always has r > d.
    const adjalg::QpDiagnostics p4 = adjalg::is_quotient_polynomial(path4());
    CHECK_FALSE(p4.value);
    CHECK(p4.r > p4.d);
}

TEST_CASE("distance polynomials of distance-regular graphs") {
    const Graph g = adjalg::petersen();
    const auto polys = adjalg::distance_matrix_polynomials(g);
    const adjalg::DistanceData dd = adjalg::distance_data(g);
    REQUIRE(polys.size() == dd.diameter + 1);
    for (std::size_t i = 0; i < polys.size(); ++i) {
        REQUIRE(polys[i].has_value());
        CHECK(poly_eval_matrix(*polys[i], g.adjacency) == dd.distance_matrices[i]);
    }
}

TEST_CASE("distance polynomials on a non-regular path") {
    const auto polys = adjalg::distance_matrix_polynomials(path4());
    REQUIRE(polys.size() == 4);
    REQUIRE(polys[0].has_value());
    CHECK(*polys[0] == adjalg::Polynomial::constant(Rational(1)));
    REQUIRE(polys[1].has_value());
    CHECK(*polys[1] == adjalg::Polynomial::monomial(1));
}

TEST_CASE("orthogonality report for quotient-polynomial graphs") {
    const adjalg::OrthogonalityReport report =
        adjalg::quotient_polynomial_orthogonality(adjalg::cycle(6));
    CHECK(report.pairs_checked == 6);
    CHECK(report.all_orthogonal);
    CHECK(report.sum_is_all_ones);

    CHECK_THROWS_AS(adjalg::quotient_polynomial_orthogonality(corpus::chordal_ring()),
                    adjalg::PreconditionError);
}

TEST_CASE("walk partition requires a connected graph") {
    const Graph split = adjalg::kronecker(adjalg::complete(2), adjalg::cycle(4));
    CHECK_THROWS_AS(adjalg::walk_partition(split), adjalg::DisconnectedError);
}

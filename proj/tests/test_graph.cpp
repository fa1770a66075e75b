#include <doctest.h>

#include <sstream>

#include "adjalg/errors.hpp"
#include "adjalg/genspec.hpp"
#include "adjalg/graph.hpp"

using adjalg::Graph;

TEST_CASE("edge list construction deduplicates and validates") {
    const Graph g = adjalg::from_edge_list(3, {{0, 1}, {1, 0}, {1, 2}});
    CHECK(g.edge_count() == 2);
    CHECK(g.degree(1) == 2);
    CHECK(g.adjacency(0, 1) == 1);
    CHECK(g.adjacency(1, 0) == 1);
    CHECK(g.adjacency(0, 2) == 0);

    CHECK_THROWS_AS(adjalg::from_edge_list(3, {{0, 0}}), adjalg::ParseError);
    CHECK_THROWS_AS(adjalg::from_edge_list(3, {{0, 3}}), adjalg::ParseError);
}

TEST_CASE("named families") {
    CHECK(adjalg::complete(4).edge_count() == 6);
    CHECK(adjalg::cycle(6).edge_count() == 6);
    CHECK_THROWS_AS(adjalg::cycle(2), adjalg::ParseError);

    const Graph t4 = adjalg::triangular(4);
    CHECK(t4.n == 6);
    CHECK(adjalg::is_regular(t4) == std::size_t{4});

    const Graph pet = adjalg::petersen();
    CHECK(pet.n == 10);
    CHECK(pet.edge_count() == 15);
    CHECK(adjalg::is_regular(pet) == std::size_t{3});
    CHECK(adjalg::distance_data(pet).diameter == 2);

    const Graph ring = adjalg::chordal_ring_12_4();
    CHECK(ring.n == 12);
    CHECK(adjalg::is_regular(ring) == std::size_t{3});
    CHECK(adjalg::distance_data(ring).diameter == 4);
}

TEST_CASE("kronecker product of complete(2) with triangular(4)") {
    const Graph g = adjalg::kronecker(adjalg::complete(2), adjalg::triangular(4));
    CHECK(g.n == 12);
    CHECK(g.edge_count() == 24);
    CHECK(adjalg::is_regular(g) == std::size_t{4});
    CHECK(adjalg::is_connected(g));
    // Vertex (i,u) is adjacent to (j,v) iff i != j and u ~ v in T(4).
    CHECK(g.adjacency(0, 6) == 0);   // same T(4) vertex
    CHECK(g.adjacency(0, 1) == 0);   // same complete(2) side
}

TEST_CASE("circulant graphs") {
    const Graph c = adjalg::circulant(7, {1, 2});
    CHECK(adjalg::is_regular(c) == std::size_t{4});
    CHECK(c.adjacency(0, 1) == 1);
    CHECK(c.adjacency(0, 2) == 1);
    CHECK(c.adjacency(0, 3) == 0);
    CHECK(c.adjacency(0, 5) == 1);  // -2 mod 7

    bool symmetrized = false;
    const Graph s = adjalg::circulant(5, {1}, &symmetrized);
    CHECK(symmetrized);
    CHECK(s.edges == adjalg::cycle(5).edges);

    symmetrized = true;
    adjalg::circulant(5, {1, 4}, &symmetrized);
    CHECK_FALSE(symmetrized);

    CHECK_THROWS_AS(adjalg::circulant(4, {4}), adjalg::ParseError);
    CHECK_THROWS_AS(adjalg::circulant(4, {0}), adjalg::ParseError);

    // Negative residues reduce mod n.
    const Graph neg = adjalg::circulant(7, {-1, -2});
    CHECK(neg.edges == c.edges);
}

TEST_CASE("complement") {
    CHECK(adjalg::complement(adjalg::complete(5)).edge_count() == 0);
    const Graph pet = adjalg::petersen();
    CHECK(adjalg::is_regular(adjalg::complement(pet)) == std::size_t{6});
    CHECK(adjalg::complement(adjalg::complement(pet)).edges == pet.edges);
}

TEST_CASE("connectivity and components") {
    CHECK(adjalg::is_connected(adjalg::petersen()));
    const Graph two_triangles = adjalg::from_edge_list(6, {{0, 1}, {0, 2}, {1, 2},
                                                           {3, 4}, {3, 5}, {4, 5}});
    CHECK_FALSE(adjalg::is_connected(two_triangles));
    const auto comps = adjalg::components(two_triangles);
    REQUIRE(comps.size() == 2);
    CHECK(comps[0] == std::vector<std::size_t>{0, 1, 2});
    CHECK(comps[1] == std::vector<std::size_t>{3, 4, 5});

    try {
        adjalg::distance_data(two_triangles);
        FAIL("expected DisconnectedError");
    } catch (const adjalg::DisconnectedError& e) {
        CHECK(e.components.size() == 2);
    }

    // The tensor product of complete(2) with a 4-cycle splits in two.
    const Graph split = adjalg::kronecker(adjalg::complete(2), adjalg::cycle(4));
    CHECK_FALSE(adjalg::is_connected(split));
}

TEST_CASE("distance data on the 6-cycle") {
    const adjalg::DistanceData dd = adjalg::distance_data(adjalg::cycle(6));
    CHECK(dd.diameter == 3);
    CHECK(dd.dist[0][3] == 3);
    CHECK(dd.dist[2][4] == 2);
    REQUIRE(dd.distance_matrices.size() == 4);
    adjalg::RationalMatrix total(6, 6);
    for (const auto& m : dd.distance_matrices) total = total + m;
    CHECK(total == adjalg::RationalMatrix::ones(6, 6));
}

TEST_CASE("edge list io round trip") {
    const Graph g = adjalg::petersen();
    std::ostringstream out;
    adjalg::write_edge_list(g, out, "petersen");
    std::istringstream in(out.str());
    const Graph back = adjalg::read_edge_list(in);
    CHECK(back.n == g.n);
    CHECK(back.edges == g.edges);
}

TEST_CASE("edge list parse errors") {
    std::istringstream missing_edge("3 2\n0 1\n");
    CHECK_THROWS_AS(adjalg::read_edge_list(missing_edge), adjalg::ParseError);
    std::istringstream loop("2 1\n1 1\n");
    CHECK_THROWS_AS(adjalg::read_edge_list(loop), adjalg::ParseError);
    std::istringstream junk("2 1\n0 x\n");
    CHECK_THROWS_AS(adjalg::read_edge_list(junk), adjalg::ParseError);
    std::istringstream trailing("2 1\n0 1\n0\n");
    CHECK_THROWS_AS(adjalg::read_edge_list(trailing), adjalg::ParseError);
    std::istringstream commented("# a graph\n3 1 # header\n0 1\n");
    CHECK(adjalg::read_edge_list(commented).edge_count() == 1);
}

TEST_CASE("generator expressions") {
    CHECK(adjalg::parse_graph_spec("complete(4)").edge_count() == 6);
    CHECK(adjalg::parse_graph_spec(" cycle( 6 ) ").n == 6);
    CHECK(adjalg::parse_graph_spec("petersen").edges == adjalg::petersen().edges);
    CHECK(adjalg::parse_graph_spec("petersen()").edges == adjalg::petersen().edges);
    CHECK(adjalg::parse_graph_spec("chordal_ring_12_4").edges ==
          adjalg::chordal_ring_12_4().edges);
    CHECK(adjalg::parse_graph_spec("Chordal-Ring-12-4").edges ==
          adjalg::chordal_ring_12_4().edges);
    CHECK(adjalg::parse_graph_spec("circulant(12,{2,3,4})").n == 12);
    CHECK(adjalg::parse_graph_spec("kronecker(complete(2), triangular(4))").n == 12);

    std::vector<std::string> notes;
    adjalg::parse_graph_spec("circulant(5,{1})", &notes);
    REQUIRE(notes.size() == 1);

    CHECK_THROWS_AS(adjalg::parse_graph_spec("banana(3)"), adjalg::ParseError);
    CHECK_THROWS_AS(adjalg::parse_graph_spec("complete(4) extra"), adjalg::ParseError);
    CHECK_THROWS_AS(adjalg::parse_graph_spec("complete(-1)"), adjalg::ParseError);
    CHECK_THROWS_AS(adjalg::parse_graph_spec("complete("), adjalg::ParseError);
    CHECK_THROWS_AS(adjalg::parse_graph_spec("circulant(6,{})"), adjalg::ParseError);
    CHECK_THROWS_AS(adjalg::parse_graph_spec("kronecker(complete(2))"), adjalg::ParseError);
}

#include "doctest.h"

#include "mckay/errors.hpp"
#include "mckay/mckay_graph.hpp"

using namespace mckay;

TEST_CASE("order-2 cyclic gives the double edge") {
    GroupModel m = build_model(GroupSpec::cyclic(2));
    CHECK(m.datum.graph.mult[0][1] == 2);
    CHECK(m.datum.graph.mult[1][0] == 2);
    CHECK(m.datum.graph.mult[0][0] == 0);
    CHECK(m.datum.type_label() == "A~1");
    CHECK(m.datum.delta == DimVec{1, 1});
}

TEST_CASE("cyclic groups give cycles") {
    for (long long ell : {3LL, 5LL, 8LL}) {
        GroupModel m = build_model(GroupSpec::cyclic(ell));
        CHECK(m.datum.type_label() == "A~" + std::to_string(ell - 1));
        for (int i = 0; i < m.datum.num_vertices(); ++i) {
            long long deg = 0;
            for (int j = 0; j < m.datum.num_vertices(); ++j) {
                CHECK(m.datum.graph.mult[i][j] >= 0);
                CHECK(m.datum.graph.mult[i][j] <= 1);
                deg += m.datum.graph.mult[i][j];
            }
            CHECK(deg == 2); // cycle
        }
        CHECK(m.datum.delta == DimVec((size_t)ell, 1));
    }
}

TEST_CASE("trivial group is the loop vertex") {
    GroupModel m = build_model(GroupSpec::cyclic(1));
    CHECK(m.datum.num_vertices() == 1);
    CHECK(m.datum.graph.mult[0][0] == 2);
    CHECK(m.datum.cartan[0][0] == 0);
    CHECK(m.datum.delta == DimVec{1});
    CHECK(m.datum.type_label() == "A~0");
}

TEST_CASE("quaternion group gives the 4-star") {
    GroupModel m = build_model(GroupSpec::binary_dihedral(2));
    CHECK(m.datum.type_label() == "D~4");
    CHECK(m.datum.delta == DimVec{1, 1, 1, 1, 2});
    // center is the degree-2 vertex, adjacent to all four leaves
    for (int leaf = 0; leaf < 4; ++leaf) CHECK(m.datum.graph.mult[leaf][4] == 1);
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) CHECK(m.datum.graph.mult[a][b] == 0);
}

TEST_CASE("type map over all families") {
    CHECK(build_model(GroupSpec::binary_dihedral(3)).datum.type_label() == "D~5");
    CHECK(build_model(GroupSpec::binary_dihedral(6)).datum.type_label() == "D~8");
    CHECK(build_model(GroupSpec::parse("2T")).datum.type_label() == "E~6");
    CHECK(build_model(GroupSpec::parse("2O")).datum.type_label() == "E~7");
    CHECK(build_model(GroupSpec::parse("2I")).datum.type_label() == "E~8");
}

TEST_CASE("cartan kernel and size statistic") {
    for (const char* s : {"cyclic:4", "bd:4", "2T", "2O", "2I"}) {
        GroupModel m = build_model(GroupSpec::parse(s));
        const auto& r = m.datum;
        for (int i = 0; i < r.num_vertices(); ++i) {
            long long acc = 0;
            for (int j = 0; j < r.num_vertices(); ++j) acc += r.cartan[i][j] * r.delta[j];
            CHECK(acc == 0);
            CHECK(r.delta[i] == m.group.degrees[(size_t)i]);
        }
        CHECK(r.delta[0] == 1);
        CHECK(size_of(r.delta, r) == m.group.order); // sum of squared degrees
        CHECK(size_of(DimVec((size_t)r.num_vertices(), 0), r) == 0);
    }
}

TEST_CASE("cyclic 3 cartan is the triangle") {
    GroupModel m = build_model(GroupSpec::cyclic(3));
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) CHECK(m.datum.cartan[i][j] == (i == j ? 2 : -1));
    DimVec d{1, 1, 0};
    CHECK(size_of(d, m.datum) == 2);
}

TEST_CASE("corrupted tables and non-affine graphs are rejected") {
    GroupData g = build_group(GroupSpec::cyclic(3));
    g.table[2][1] += CycNum(Rational(1, 2));
    CHECK_THROWS_AS(mckay_graph(g), NonIntegralMultiplicity);

    McKayGraph isolated;
    isolated.degrees = {1, 1};
    isolated.mult = {{0, 0}, {0, 0}}; // kernel of 2*Id is trivial
    CHECK_THROWS_AS(affine_cartan(isolated), NotAffineADE);

    GroupModel m = build_model(GroupSpec::cyclic(2));
    CHECK_THROWS_AS(size_of(DimVec{1, 2, 3}, m.datum), DimensionMismatch);
}

TEST_CASE("dot output is deterministic and labels multi-edges") {
    GroupModel m2 = build_model(GroupSpec::cyclic(2));
    std::string dot = to_dot(m2.datum.graph);
    CHECK(dot == to_dot(m2.datum.graph));
    CHECK(dot.find("label=\"2\"") != std::string::npos);
    CHECK(dot.find("doublecircle") != std::string::npos);

    GroupModel m8 = build_model(GroupSpec::parse("2I"));
    std::string dot8 = to_dot(m8.datum.graph);
    // 9 vertices, 8 edges of the E~8 diagram
    CHECK(dot8.find("v8") != std::string::npos);
}

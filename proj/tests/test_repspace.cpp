#include "doctest.h"

#include "mckay/errors.hpp"
#include "mckay/lab_suite.hpp"
#include "mckay/repspace.hpp"

using namespace mckay;

TEST_CASE("matrix models satisfy relations and characters") {
    for (const char* s : {"cyclic:2", "cyclic:3", "cyclic:5", "bd:2", "bd:3"}) {
        MatrixModel mm = irrep_matrices(build_model(GroupSpec::parse(s)));
        INFO(s);
        CHECK(model_relation_residual(mm) <= kGeneratorRelTol);
        CHECK(model_character_residual(mm) <= kCharacterTol);
    }
    CHECK_THROWS_AS(irrep_matrices(build_model(GroupSpec::parse("2T"))), UnsupportedFamily);
}

TEST_CASE("hom dimensions equal edge multiplicities") {
    MatrixModel m2 = irrep_matrices(build_model(GroupSpec::cyclic(2)));
    CHECK(hom_basis(0, 1, m2).size() == 2);
    MatrixModel m3 = irrep_matrices(build_model(GroupSpec::cyclic(3)));
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
            CHECK((long long)hom_basis(a, b, m3).size() ==
                  m3.model.datum.graph.mult[(size_t)a][(size_t)b]);
    MatrixModel mb = irrep_matrices(build_model(GroupSpec::binary_dihedral(3)));
    for (int a = 0; a < mb.model.datum.num_vertices(); ++a)
        for (int b = 0; b < mb.model.datum.num_vertices(); ++b)
            CHECK((long long)hom_basis(a, b, mb).size() ==
                  mb.model.datum.graph.mult[(size_t)a][(size_t)b]);
}

TEST_CASE("order-2 edge maps are the explicit coordinate family") {
    MatrixModel mm = irrep_matrices(build_model(GroupSpec::cyclic(2)));
    EdgeMaps maps = choose_y0(mm);
    REQUIRE(maps.arrows.size() == 4);
    auto is_proj = [](const CMat& y, int k) {
        return std::abs(y(0, k) - Complex(1, 0)) < 1e-15 && std::abs(y(0, 1 - k)) < 1e-15;
    };
    int seen_dir[2][2] = {{0, 0}, {0, 0}}; // [src][projection]
    for (size_t h = 0; h < 4; ++h) {
        const CMat& y = maps.y[h];
        REQUIRE(y.rows() == 1);
        REQUIRE(y.cols() == 2);
        int proj = is_proj(y, 0) ? 0 : (is_proj(y, 1) ? 1 : -1);
        REQUIRE(proj >= 0); // each map is a coordinate projection
        seen_dir[maps.arrows[h].src][proj] += 1;
        // reversed arrow carries the other projection (the cross pairing of
        // the explicit order-2 family)
        const CMat& yp = maps.y[(size_t)maps.arrows[h].pair];
        CHECK(is_proj(yp, 1 - proj));
    }
    // both projections appear in both directions
    CHECK(seen_dir[0][0] == 1);
    CHECK(seen_dir[0][1] == 1);
    CHECK(seen_dir[1][0] == 1);
    CHECK(seen_dir[1][1] == 1);
    CHECK(sum_rule_residual(mm, maps) <= 1e-12);
}

TEST_CASE("sum rule holds across models") {
    for (const char* s : {"cyclic:2", "cyclic:3", "cyclic:4", "bd:2", "bd:3"}) {
        MatrixModel mm = irrep_matrices(build_model(GroupSpec::parse(s)));
        EdgeMaps maps = choose_y0(mm);
        INFO(s);
        CHECK(sum_rule_residual(mm, maps) <= kEqualityTol);
        EdgeMaps cal = calibrate_scalars(mm, maps);
        CHECK(sum_rule_residual(mm, cal) <= kEqualityTol);
    }
}

TEST_CASE("calibration fixes the bracket normalization in both orientations") {
    MatrixModel mm = irrep_matrices(build_model(GroupSpec::cyclic(3)));
    for (EdgeMaps maps : {choose_y0(mm), flip_orientation(choose_y0(mm))}) {
        EdgeMaps cal = calibrate_scalars(mm, maps);
        for (size_t h = 0; h < cal.arrows.size(); ++h) {
            size_t hb = (size_t)cal.arrows[h].pair;
            long long ds = mm.irreps[(size_t)cal.arrows[h].src].degree;
            Complex lhs = cal.scale[h] * cal.scale[hb] * cal.bracket0[h] * double(ds);
            double eps = cal.arrows[hb].positive ? 1.0 : -1.0;
            CHECK(std::abs(lhs - Complex(eps, 0)) <= 1e-12);
        }
    }
}

TEST_CASE("calibrated pairs are unique up to a scalar") {
    MatrixModel mm = irrep_matrices(build_model(GroupSpec::cyclic(3)));
    EdgeMaps base = choose_y0(mm);
    EdgeMaps scaled = base;
    // rescale the raw choices arrow by arrow
    for (size_t h = 0; h < scaled.arrows.size(); ++h) {
        Complex c(1.0 + 0.25 * double(h % 3), 0.5 - 0.125 * double(h % 4));
        scaled.y[h] *= c;
        scaled.ytilde[h] /= c;
    }
    EdgeMaps cal1 = calibrate_scalars(mm, base);
    EdgeMaps cal2 = calibrate_scalars(mm, scaled);
    for (size_t h = 0; h < cal1.arrows.size(); ++h) {
        size_t hb = (size_t)cal1.arrows[h].pair;
        // ratio of the calibrated maps is a nonzero scalar c_h with c_h c_hbar = 1
        Complex r_h = cal2.y[h](0, 0) != Complex(0, 0) ? cal2.y[h](0, 0) / cal1.y[h](0, 0)
                                                       : cal2.y[h](0, 1) / cal1.y[h](0, 1);
        Complex r_hb = cal2.y[hb](0, 0) != Complex(0, 0) ? cal2.y[hb](0, 0) / cal1.y[hb](0, 0)
                                                         : cal2.y[hb](0, 1) / cal1.y[hb](0, 1);
        CHECK(std::abs(r_h * r_hb - Complex(1, 0)) < 1e-12);
        CHECK((cal2.y[h] - r_h * cal1.y[h]).norm() < 1e-12);
    }
}

TEST_CASE("a vanishing bracket is rejected") {
    MatrixModel mm = irrep_matrices(build_model(GroupSpec::cyclic(2)));
    EdgeMaps maps = choose_y0(mm);
    // force both members of a pair onto the same projection
    maps.y[(size_t)maps.arrows[0].pair] = maps.y[0];
    CHECK_THROWS_AS(calibrate_scalars(mm, maps), DegenerateBracket);
}

TEST_CASE("zero representation maps to zero") {
    MatrixModel mm = irrep_matrices(build_model(GroupSpec::cyclic(3)));
    EdgeMaps maps = calibrate_scalars(mm, choose_y0(mm));
    QuiverRep q;
    q.dim = {1, 1, 1};
    q.fdim = {1, 0, 0};
    for (const auto& a : maps.arrows)
        q.x.push_back(CMat::Zero(q.dim[(size_t)a.dst], q.dim[(size_t)a.src]));
    for (size_t v = 0; v < 3; ++v) {
        q.v1.push_back(CMat::Zero(q.dim[v], q.fdim[v]));
        q.v2.push_back(CMat::Zero(q.fdim[v], q.dim[v]));
    }
    FResult fm = functor_F(q, mm, maps);
    CHECK(fm.module.delta.norm() == 0.0);
    CHECK(fm.module.z1.norm() == 0.0);
    CHECK(fm.module.z2.norm() == 0.0);
    CHECK(moment_map_module(fm.module).norm() == 0.0);
}

TEST_CASE("lab suite passes for the small cyclic groups") {
    for (long long ell : {2LL, 3LL}) {
        LabReport rep = repspace_suite(ell, 0, 10);
        INFO("ell = " << ell);
        for (const auto& c : rep.checks) {
            INFO(c.name << " residual " << c.residual << " tol " << c.tolerance);
            CHECK(c.passed);
        }
    }
}

TEST_CASE("lab suite passes for binary dihedral models") {
    // exercises 2-dimensional irreducibles and solver-derived edge maps
    for (long long m : {2LL, 3LL}) {
        LabReport rep = repspace_suite_for(GroupSpec::binary_dihedral(m), 5, 6);
        INFO("m = " << m);
        for (const auto& c : rep.checks) {
            INFO(c.name << " residual " << c.residual << " tol " << c.tolerance);
            CHECK(c.passed);
        }
    }
}

TEST_CASE("stability of explicit Jordan points") {
    JordanPoint p;
    p.alpha = CMat::Zero(1, 1);
    p.beta = CMat::Zero(1, 1);
    p.v1 = CVec::Zero(1);
    p.v1(0) = 1.0;
    p.v2 = CRow::Zero(1);
    CHECK(is_stable_jordan(p));

    JordanPoint q;
    q.alpha = CMat::Zero(2, 2);
    q.beta = CMat::Zero(2, 2);
    q.v1 = CVec::Zero(2);
    q.v1(0) = 1.0;
    q.v2 = CRow::Zero(2);
    CHECK(!is_stable_jordan(q)); // span stops at dimension 1
}

TEST_CASE("hilbert points") {
    JordanPoint p1 = hilbert_point({1});
    CHECK(p1.n() == 1);
    CHECK(p1.alpha.norm() == 0.0);
    CHECK(p1.beta.norm() == 0.0);
    CHECK(std::abs(p1.v1(0) - Complex(1, 0)) < 1e-15);

    JordanPoint p2 = hilbert_point({2});
    CHECK(p2.beta.norm() == 0.0);
    CHECK(std::abs(p2.alpha(1, 0) - Complex(1, 0)) < 1e-15);
    CHECK(p2.alpha(0, 1) == Complex(0, 0));

    for (long long n = 0; n <= 8; ++n)
        for (const auto& lam : partitions(n)) {
            JordanPoint p = hilbert_point(lam);
            CHECK((p.alpha * p.beta - p.beta * p.alpha).norm() == 0.0);
            CHECK(is_stable_jordan(p));
        }
}

TEST_CASE("fixed point deconstruction on the smallest example") {
    MatrixModel mm = irrep_matrices(build_model(GroupSpec::cyclic(2)));
    FixedPointData fp = fixed_point_decompose(hilbert_point({1}), mm);
    CHECK(fp.d_rows == DimVec{1, 0});
    CHECK(fp.sigma_gen.rows() == 1);
    CHECK(std::abs(fp.sigma_gen(0, 0) - Complex(1, 0)) < 1e-12);
}

TEST_CASE("fixed point suite for small partitions") {
    for (long long ell : {1LL, 2LL, 3LL}) {
        LabReport rep = fixed_point_suite(ell, 4);
        INFO("ell = " << ell);
        for (const auto& c : rep.checks) {
            INFO(c.name << " residual " << c.residual);
            CHECK(c.passed);
        }
    }
}

TEST_CASE("non-fixed and non-stable points are rejected") {
    MatrixModel mm = irrep_matrices(build_model(GroupSpec::cyclic(2)));
    JordanPoint p;
    p.alpha = CMat::Identity(1, 1); // zeta*alpha is not conjugate to alpha
    p.beta = CMat::Zero(1, 1);
    p.v1 = CVec::Zero(1);
    p.v1(0) = 1.0;
    p.v2 = CRow::Zero(1);
    CHECK_THROWS_AS(fixed_point_decompose(p, mm), NotFixed);

    JordanPoint q;
    q.alpha = CMat::Zero(2, 2);
    q.beta = CMat::Zero(2, 2);
    q.v1 = CVec::Zero(2);
    q.v1(0) = 1.0;
    q.v2 = CRow::Zero(2);
    CHECK_THROWS_AS(fixed_point_decompose(q, mm), NotStable);
}

TEST_CASE("deformed points with nonzero coframing decompose") {
    // one point of the deformed family: alpha = beta = 0, v1 = 1, v2 = lambda
    MatrixModel mm = irrep_matrices(build_model(GroupSpec::cyclic(3)));
    JordanPoint p;
    p.alpha = CMat::Zero(1, 1);
    p.beta = CMat::Zero(1, 1);
    p.v1 = CVec::Zero(1);
    p.v1(0) = 1.0;
    p.v2 = CRow::Zero(1);
    p.v2(0) = Complex(2.5, -0.5); // the moment value lambda
    FixedPointData fp = fixed_point_decompose(p, mm);
    CHECK(fp.d_rows == DimVec{1, 0, 0});
    CHECK((moment_map_module(fp.module) - p.v1 * p.v2).norm() < 1e-14);
    CHECK(gamma_equivariance_residual(fp.module, mm) <= kEqualityTol);
    JordanPoint back = reconstruct_jordan(fp.module);
    CHECK((back.v2 - p.v2).norm() == 0.0);
}

TEST_CASE("semistability needs a framing image") {
    ModuleRep m;
    m.delta = CMat::Zero(2, 4);
    m.z1 = CMat::Zero(2, 1);
    m.z2 = CMat::Zero(1, 2);
    m.action = {CMat::Identity(2, 2)};
    m.faction = {CMat::Identity(1, 1)};
    CHECK(!is_semistable_module(m));
}

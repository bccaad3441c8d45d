#include "doctest.h"

#include "mckay/errors.hpp"
#include "mckay/weyl.hpp"

using namespace mckay;

namespace {

struct TestRng {
    unsigned long long s;
    explicit TestRng(unsigned long long seed) : s(seed * 88172645463325252ULL + 7) {}
    long long pick(long long lo, long long hi) {
        s ^= s << 13;
        s ^= s >> 7;
        s ^= s << 17;
        return lo + (long long)(s % (unsigned long long)(hi - lo + 1));
    }
};

DimVec random_dim(TestRng& rng, int n, long long lo, long long hi) {
    DimVec d((size_t)n);
    for (auto& x : d) x = rng.pick(lo, hi);
    return d;
}

} // namespace

TEST_CASE("affine reflection at the origin") {
    GroupModel m = build_model(GroupSpec::cyclic(3));
    DimVec zero(3, 0);
    DimVec e0 = reflect_dim(0, zero, m.datum);
    CHECK(e0 == DimVec{1, 0, 0});
}

TEST_CASE("order-2 cyclic reflections with the double edge") {
    GroupModel m = build_model(GroupSpec::cyclic(2));
    CHECK(reflect_dim(0, DimVec{1, 1}, m.datum) == DimVec{2, 1});
    CHECK(weight(DimVec{2, 1}, m.datum) == 1);
    CHECK(weight(DimVec{1, 1}, m.datum) == 1);

    StabilityVector theta{Rational(3, 4), Rational(1, 4)};
    StabilityVector refl = reflect_theta(0, theta, m.datum);
    CHECK(refl[0] == Rational(-3, 4));
    CHECK(refl[1] == Rational(1, 4) + Rational(2) * Rational(3, 4));
}

TEST_CASE("reflections are involutions") {
    for (const char* s : {"cyclic:2", "cyclic:3", "bd:2"}) {
        GroupModel m = build_model(GroupSpec::parse(s));
        TestRng rng(42);
        for (int trial = 0; trial < 1000; ++trial) {
            DimVec d = random_dim(rng, m.datum.num_vertices(), -5, 5);
            int v = (int)rng.pick(0, m.datum.num_vertices() - 1);
            CHECK(reflect_dim(v, reflect_dim(v, d, m.datum), m.datum) == d);
        }
        StabilityVector theta;
        DeformationVector lambda;
        for (int i = 0; i < m.datum.num_vertices(); ++i) {
            theta.push_back(Rational(rng.pick(-9, 9), 7));
            lambda.push_back({Rational(rng.pick(-9, 9), 5), Rational(rng.pick(-9, 9), 3)});
        }
        for (int v = 0; v < m.datum.num_vertices(); ++v) {
            CHECK(reflect_theta(v, reflect_theta(v, theta, m.datum), m.datum) == theta);
            CHECK(reflect_lambda(v, reflect_lambda(v, lambda, m.datum), m.datum) == lambda);
            CHECK(reflect_theta(v, theta, m.datum)[(size_t)v] == -theta[(size_t)v]);
        }
    }
}

TEST_CASE("braid relations for disconnected and simply joined pairs") {
    for (const char* s : {"cyclic:4", "bd:2", "2T"}) {
        GroupModel m = build_model(GroupSpec::parse(s));
        TestRng rng(7);
        for (int a = 0; a < m.datum.num_vertices(); ++a)
            for (int b = 0; b < m.datum.num_vertices(); ++b) {
                if (a == b) continue;
                long long entry = m.datum.cartan[a][b];
                int order = entry == 0 ? 2 : (entry == -1 ? 3 : 0);
                if (order == 0) continue;
                WeylWord w;
                for (int k = 0; k < order; ++k) {
                    w.push_back(a);
                    w.push_back(b);
                }
                for (int trial = 0; trial < 20; ++trial) {
                    DimVec d = random_dim(rng, m.datum.num_vertices(), -4, 4);
                    CHECK(apply_word(w, d, m.datum) == d);
                }
                StabilityVector theta;
                DeformationVector lambda;
                for (int i = 0; i < m.datum.num_vertices(); ++i) {
                    theta.push_back(Rational(rng.pick(-9, 9), 4));
                    lambda.push_back({Rational(rng.pick(-9, 9), 2), Rational(rng.pick(-9, 9), 6)});
                }
                CHECK(apply_word(w, theta, m.datum) == theta);
                CHECK(apply_word(w, lambda, m.datum) == lambda);
            }
    }
}

TEST_CASE("delta multiples are fixed by finite reflections") {
    for (const char* s : {"cyclic:3", "bd:3", "2O"}) {
        GroupModel m = build_model(GroupSpec::parse(s));
        for (long long r = 0; r <= 3; ++r) {
            DimVec d = m.datum.delta;
            for (auto& x : d) x *= r;
            for (int v = 1; v < m.datum.num_vertices(); ++v)
                CHECK(reflect_dim(v, d, m.datum) == d);
        }
    }
}

TEST_CASE("weight closed form") {
    GroupModel m2 = build_model(GroupSpec::cyclic(2));
    CHECK(weight(DimVec{1, 0}, m2.datum) == 0);
    CHECK(weight(DimVec{0, 1}, m2.datum) == -1);
    for (long long r = 0; r <= 5; ++r) {
        for (const char* s : {"cyclic:2", "cyclic:3", "bd:2", "2T"}) {
            GroupModel m = build_model(GroupSpec::parse(s));
            DimVec d = m.datum.delta;
            for (auto& x : d) x *= r;
            CHECK(weight(d, m.datum) == r);
        }
    }
}

TEST_CASE("weight is reflection invariant") {
    for (const char* s : {"cyclic:3", "bd:2", "2T"}) { // types A~2, D~4, E~6
        GroupModel m = build_model(GroupSpec::parse(s));
        TestRng rng(11);
        for (int trial = 0; trial < 1000; ++trial) {
            DimVec d = random_dim(rng, m.datum.num_vertices(), -4, 6);
            long long w = weight(d, m.datum);
            int v = (int)rng.pick(0, m.datum.num_vertices() - 1);
            CHECK(weight(reflect_dim(v, d, m.datum), m.datum) == w);
        }
    }
}

TEST_CASE("apply_word round trips") {
    GroupModel m = build_model(GroupSpec::binary_dihedral(2));
    TestRng rng(3);
    for (int trial = 0; trial < 100; ++trial) {
        DimVec d = random_dim(rng, m.datum.num_vertices(), -3, 3);
        WeylWord w;
        for (int k = 0; k < 6; ++k) w.push_back((int)rng.pick(0, m.datum.num_vertices() - 1));
        WeylWord rev(w.rbegin(), w.rend());
        CHECK(apply_word(rev, apply_word(w, d, m.datum), m.datum) == d);
    }
}

TEST_CASE("orbit witness basics") {
    GroupModel m = build_model(GroupSpec::cyclic(2));
    // n*delta needs no word
    CHECK(orbit_witness(DimVec{3, 3}, m.datum).empty());
    // d = (1,0) reaches 0*delta
    DimVec d{1, 0};
    WeylWord w = orbit_witness(d, m.datum);
    CHECK(apply_word(w, d, m.datum) == DimVec{0, 0});
}

TEST_CASE("orbit witness respects the coefficient bound") {
    GroupModel m = build_model(GroupSpec::cyclic(2));
    CHECK_THROWS_AS(orbit_witness(DimVec{5, 0}, m.datum, 1), BoundExceeded);
}

TEST_CASE("orbit witness handles negative weights") {
    for (const char* s : {"cyclic:2", "cyclic:3", "bd:2"}) {
        GroupModel m = build_model(GroupSpec::parse(s));
        TestRng rng(19);
        for (int trial = 0; trial < 25; ++trial) {
            DimVec d = random_dim(rng, m.datum.num_vertices(), 0, 2);
            long long wt = weight(d, m.datum);
            WeylWord w = orbit_witness(d, m.datum);
            DimVec target = m.datum.delta;
            for (auto& x : target) x *= wt;
            CHECK(apply_word(w, d, m.datum) == target);
        }
    }
}

TEST_CASE("finite root systems") {
    CHECK(finite_root_system(build_model(GroupSpec::cyclic(2)).datum).count() == 2);
    auto a2 = finite_root_system(build_model(GroupSpec::cyclic(3)).datum);
    CHECK(a2.count() == 6);
    CHECK(a2.positive.size() == 3);
    CHECK(a2.highest == std::vector<long long>{1, 1});
    auto d4 = finite_root_system(build_model(GroupSpec::binary_dihedral(2)).datum);
    CHECK(d4.count() == 24);
    auto d6 = finite_root_system(build_model(GroupSpec::binary_dihedral(4)).datum);
    CHECK(d6.count() == 60); // D_6: 2*6*5
    auto e6 = finite_root_system(build_model(GroupSpec::parse("2T")).datum);
    CHECK(e6.count() == 72);
    auto e7 = finite_root_system(build_model(GroupSpec::parse("2O")).datum);
    CHECK(e7.count() == 126);
    auto e8 = finite_root_system(build_model(GroupSpec::parse("2I")).datum);
    CHECK(e8.count() == 240);
    for (const auto& r : a2.roots) {
        std::vector<long long> neg(r.size());
        for (size_t i = 0; i < r.size(); ++i) neg[i] = -r[i];
        bool found = false;
        for (const auto& other : a2.roots) found = found || other == neg;
        CHECK(found);
    }
}

TEST_CASE("translation by the highest root shifts modulo delta") {
    // t_tau = s_0 s_tau; on the triangle s_tau = s_1 s_2 s_1.
    GroupModel m = build_model(GroupSpec::cyclic(3));
    WeylWord t_tau{1, 2, 1, 0}; // apply s_tau first, then s_0
    TestRng rng(5);
    for (int trial = 0; trial < 50; ++trial) {
        DimVec d = random_dim(rng, 3, -3, 3);
        DimVec img = apply_word(t_tau, d, m.datum);
        // img - (d - tau) must be an integer multiple of delta
        DimVec diff(3);
        DimVec tau_embedded{0, 1, 1};
        for (int i = 0; i < 3; ++i) diff[(size_t)i] = img[(size_t)i] - d[(size_t)i] + tau_embedded[(size_t)i];
        CHECK(diff[0] == diff[1]);
        CHECK(diff[1] == diff[2]);
    }
}

TEST_CASE("reflections preserve theta(delta)") {
    GroupModel m = build_model(GroupSpec::binary_dihedral(3));
    StabilityVector theta;
    for (int i = 0; i < m.datum.num_vertices(); ++i) theta.push_back(Rational(i + 1, 11));
    Rational level = theta_of_delta(theta, m.datum);
    for (int v = 0; v < m.datum.num_vertices(); ++v)
        CHECK(theta_of_delta(reflect_theta(v, theta, m.datum), m.datum) == level);
}

TEST_CASE("no reflections on the loop vertex") {
    GroupModel m = build_model(GroupSpec::cyclic(1));
    CHECK_THROWS_AS(reflect_dim(0, DimVec{1}, m.datum), InvalidParameter);
    CHECK(weight(DimVec{5}, m.datum) == 5);
    CHECK(orbit_witness(DimVec{5}, m.datum).empty());
}

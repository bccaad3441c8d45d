#include "mckay/lab_suite.hpp"

#include <algorithm>

#include "mckay/errors.hpp"

namespace mckay {

namespace {

CMat kron2(const CMat& a, const CMat& b) {
    CMat out(a.rows() * b.rows(), a.cols() * b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

std::vector<long long> framing_at_zero(int nv) {
    std::vector<long long> f(nv, 0);
    f[0] = 1;
    return f;
}

} // namespace

LabReport repspace_suite_for(const GroupSpec& spec, unsigned long long seed, int samples) {
    LabReport rep;
    MatrixModel mm = irrep_matrices(build_model(spec));
    rep.add("generator_relations", model_relation_residual(mm), kGeneratorRelTol);
    rep.add("character_match", model_character_residual(mm), kCharacterTol);

    EdgeMaps maps = calibrate_scalars(mm, choose_y0(mm));
    rep.add("sum_rule", sum_rule_residual(mm, maps), kEqualityTol);

    // Calibration identity: l_h l_hbar Tr(bracket0_h) = eps(hbar), both
    // orientations.
    {
        double worst = 0;
        for (const EdgeMaps& cal :
             {maps, calibrate_scalars(mm, flip_orientation(choose_y0(mm)))}) {
            for (size_t h = 0; h < cal.arrows.size(); ++h) {
                size_t hb = (size_t)cal.arrows[h].pair;
                long long ds = mm.irreps[(size_t)cal.arrows[h].src].degree;
                Complex lhs = cal.scale[h] * cal.scale[hb] * cal.bracket0[h] * double(ds);
                double eps = cal.arrows[hb].positive ? 1.0 : -1.0;
                worst = std::max(worst, std::abs(lhs - Complex(eps, 0)));
            }
        }
        rep.add("bracket_calibration", worst, kEqualityTol);
    }

    const int nv = mm.model.datum.num_vertices();
    SampleRng rng(seed);
    double worst_gf = 0, worst_fg = 0, worst_mu = 0, worst_omega = 0, worst_equiv = 0;
    bool dims_recovered = true;
    for (int s = 0; s < samples; ++s) {
        std::vector<long long> dim(nv);
        for (int v = 0; v < nv; ++v) dim[(size_t)v] = 1 + (long long)((rng.real() + 1.0) * 1.49);
        auto fdim = framing_at_zero(nv);
        QuiverRep q = random_quiver_rep(mm, maps, dim, fdim, rng);

        FResult fm = functor_F(q, mm, maps);
        worst_equiv = std::max(worst_equiv, gamma_equivariance_residual(fm.module, mm));

        // G o F: the canonical embedding eta intertwines x with G(F(x)).
        GResult gm = functor_G(fm.module, mm, maps);
        if (gm.rep.dim != dim || gm.rep.fdim != fdim) dims_recovered = false;
        {
            auto off = [&](int v) {
                long long o = 0;
                for (int u = 0; u < v; ++u) o += dim[(size_t)u] * mm.irreps[(size_t)u].degree;
                return o;
            };
            const long long n = fm.module.delta.rows();
            std::vector<CMat> eta(nv), etaf(nv);
            for (int v = 0; v < nv; ++v) {
                const long long deg = mm.irreps[(size_t)v].degree;
                eta[(size_t)v] = CMat::Zero((long long)gm.hom_M[(size_t)v].size(), dim[(size_t)v]);
                for (long long i = 0; i < dim[(size_t)v]; ++i) {
                    CMat fi = CMat::Zero(n, deg);
                    for (long long j = 0; j < deg; ++j) fi(off(v) + i * deg + j, j) = 1.0;
                    for (size_t k = 0; k < gm.hom_M[(size_t)v].size(); ++k)
                        eta[(size_t)v]((long long)k, i) =
                            (gm.hom_M[(size_t)v][k].adjoint() * fi).trace();
                }
                long long foffv = 0;
                for (int u = 0; u < v; ++u) foffv += fdim[(size_t)u] * mm.irreps[(size_t)u].degree;
                const long long fn = fm.module.z2.rows();
                etaf[(size_t)v] =
                    CMat::Zero((long long)gm.hom_Mf[(size_t)v].size(), fdim[(size_t)v]);
                for (long long i = 0; i < fdim[(size_t)v]; ++i) {
                    CMat fi = CMat::Zero(fn, deg);
                    for (long long j = 0; j < deg; ++j) fi(foffv + i * deg + j, j) = 1.0;
                    for (size_t k = 0; k < gm.hom_Mf[(size_t)v].size(); ++k)
                        etaf[(size_t)v]((long long)k, i) =
                            (gm.hom_Mf[(size_t)v][k].adjoint() * fi).trace();
                }
            }
            for (size_t h = 0; h < maps.arrows.size(); ++h) {
                const auto& a = maps.arrows[h];
                worst_gf = std::max(worst_gf, (gm.rep.x[h] * eta[(size_t)a.src] -
                                               eta[(size_t)a.dst] * q.x[h])
                                                  .norm());
            }
            for (int v = 0; v < nv; ++v) {
                worst_gf = std::max(worst_gf, (gm.rep.v1[(size_t)v] * etaf[(size_t)v] -
                                               eta[(size_t)v] * q.v1[(size_t)v])
                                                  .norm());
                worst_gf = std::max(worst_gf, (gm.rep.v2[(size_t)v] * eta[(size_t)v] -
                                               etaf[(size_t)v] * q.v2[(size_t)v])
                                                  .norm());
            }
        }

        // F o G: the evaluation map eps intertwines the module data.
        {
            FResult ffg = functor_F(gm.rep, mm, maps);
            CMat eps = epsilon_matrix(mm, gm.hom_M);
            CMat epsf = epsilon_matrix(mm, gm.hom_Mf);
            worst_fg = std::max(worst_fg, (eps * ffg.module.delta -
                                           fm.module.delta * kron2(CMat::Identity(2, 2), eps))
                                              .norm());
            worst_fg = std::max(worst_fg, (eps * ffg.module.z1 - fm.module.z1 * epsf).norm());
            worst_fg = std::max(worst_fg, (epsf * ffg.module.z2 - fm.module.z2 * eps).norm());
        }

        // Moment-map diagram: mu_module(F(q)) is the delta-scaled embedding.
        {
            CMat mu_m = moment_map_module(fm.module);
            for (const auto& g : fm.module.action)
                worst_equiv = std::max(worst_equiv, (mu_m * g - g * mu_m).norm());
            auto mu_q = moment_map_quiver(q, maps);
            long long o = 0;
            CMat expected = CMat::Zero(mu_m.rows(), mu_m.cols());
            for (int v = 0; v < nv; ++v) {
                const long long deg = mm.irreps[(size_t)v].degree;
                for (long long i = 0; i < dim[(size_t)v]; ++i)
                    for (long long ip = 0; ip < dim[(size_t)v]; ++ip)
                        for (long long j = 0; j < deg; ++j)
                            expected(o + i * deg + j, o + ip * deg + j) =
                                mu_q[(size_t)v](i, ip) / double(deg);
                o += dim[(size_t)v] * deg;
            }
            worst_mu = std::max(worst_mu, (mu_m - expected).norm());
        }

        // Symplectic match on a second sample with the same dimensions.
        {
            QuiverRep q2 = random_quiver_rep(mm, maps, dim, fdim, rng);
            FResult fm2 = functor_F(q2, mm, maps);
            Complex lhs = symplectic_quiver(q, q2, maps);
            Complex rhs = symplectic_module(fm.module, fm2.module);
            worst_omega = std::max(worst_omega, std::abs(lhs - rhs));
        }
    }
    rep.add_flag("isotype_dimensions_recovered", dims_recovered);
    rep.add("gamma_equivariance", worst_equiv, kEqualityTol);
    rep.add("round_trip_G_of_F", worst_gf, kRoundTripTol);
    rep.add("round_trip_F_of_G", worst_fg, kRoundTripTol);
    rep.add("moment_map_diagram", worst_mu, kRoundTripTol);
    rep.add("symplectic_match", worst_omega, kRoundTripTol);

    // Submodule semistability agrees with the cyclic-vector test across
    // random equivariant data, including degenerate framings.
    {
        bool agree = true;
        SampleRng rng2(seed ^ 0x9e3779b97f4a7c15ULL);
        for (int s = 0; s < samples; ++s) {
            std::vector<long long> dim(nv);
            for (int v = 0; v < nv; ++v)
                dim[(size_t)v] = 1 + (long long)((rng2.real() + 1.0) * 1.49);
            QuiverRep q = random_quiver_rep(mm, maps, dim, framing_at_zero(nv), rng2);
            switch (s % 4) {
                case 1: q.v1[0].setZero(); break;                  // kills the framing
                case 2: q.x[0].setZero(); break;                   // prunes one arrow
                case 3: q.x[0].setZero(); q.x[1].setZero(); break; // prunes a pair
                default: break;
            }
            ModuleRep m = functor_F(q, mm, maps).module;
            if (is_semistable_module(m) != is_stable_jordan(reconstruct_jordan(m)))
                agree = false;
        }
        rep.add_flag("semistability_equivalence_random", agree);
    }
    return rep;
}

LabReport fixed_point_suite(long long ell, long long max_n) {
    LabReport rep;
    MatrixModel mm = irrep_matrices(build_model(GroupSpec::cyclic(ell)));

    double worst_commutator = 0, worst_rebuild = 0, worst_mu = 0, worst_equiv = 0;
    bool residues_ok = true, stable_ok = true, semistable_ok = true, agree_ok = true;
    for (long long n = 0; n <= max_n; ++n) {
        for (const auto& lam : partitions(n)) {
            JordanPoint p = hilbert_point(lam);
            worst_commutator =
                std::max(worst_commutator, (p.alpha * p.beta - p.beta * p.alpha).norm());
            if (!is_stable_jordan(p)) stable_ok = false;

            FixedPointData fp = fixed_point_decompose(p, mm);
            if (fp.d_rows != residue_character(lam, mm.model.group)) residues_ok = false;
            worst_equiv = std::max(worst_equiv, gamma_equivariance_residual(fp.module, mm));

            JordanPoint back = reconstruct_jordan(fp.module);
            worst_rebuild = std::max({worst_rebuild, (back.alpha - p.alpha).norm(),
                                      (back.beta - p.beta).norm(), (back.v1 - p.v1).norm(),
                                      (back.v2 - p.v2).norm()});

            // mu_Gamma after deconstruction equals the Jordan moment value.
            CMat jordan_mu = p.alpha * p.beta - p.beta * p.alpha + p.v1 * p.v2;
            worst_mu = std::max(worst_mu, (moment_map_module(fp.module) - jordan_mu).norm());

            bool ss = is_semistable_module(fp.module);
            if (!ss) semistable_ok = false;
            if (ss != is_stable_jordan(back)) agree_ok = false;
        }
    }
    rep.add("hilbert_commutators_vanish", worst_commutator, 1e-12);
    rep.add_flag("hilbert_points_stable", stable_ok);
    rep.add_flag("deconstruction_recovers_residue_character", residues_ok);
    rep.add("deconstructed_module_equivariance", worst_equiv, kEqualityTol);
    rep.add("reconstruction_round_trip", worst_rebuild, kEqualityTol);
    rep.add("moment_map_after_deconstruction", worst_mu, kEqualityTol);
    rep.add_flag("decomposed_points_semistable", semistable_ok);
    rep.add_flag("semistability_matches_cyclic_vector_criterion", agree_ok);
    return rep;
}

} // namespace mckay

#include "mckay/chambers.hpp"

#include <algorithm>
#include <map>

#include "mckay/errors.hpp"

namespace mckay {

std::vector<Wall> walls(const RootDatum& r, long long n) {
    if (n < 1) throw InvalidParameter("wall family needs n >= 1");
    std::vector<Wall> out;
    Wall dw;
    dw.form = r.delta;
    dw.is_delta = true;
    dw.level = 0;
    dw.alpha_index = -1;
    out.push_back(dw);

    FiniteRoots phi = finite_root_system(r);
    for (long long m = -(n - 1); m <= n - 1; ++m) {
        for (int ai = 0; ai < phi.count(); ++ai) {
            Wall w;
            w.is_delta = false;
            w.level = m;
            w.alpha_index = ai;
            w.form.assign(r.num_vertices(), 0);
            for (int i = 0; i < r.num_vertices(); ++i) w.form[i] = m * r.delta[i];
            for (int i = 1; i < r.num_vertices(); ++i) w.form[i] += phi.roots[ai][i - 1];
            out.push_back(std::move(w));
        }
    }
    return out;
}

StabilityVector theta0(const RootDatum& r) {
    long long sum_delta = 0;
    for (long long d : r.delta) sum_delta += d;
    const Rational unit(1, 2 * sum_delta);
    StabilityVector t(r.num_vertices(), unit);
    Rational rest(0);
    for (int i = 1; i < r.num_vertices(); ++i) rest += Rational(r.delta[i]) * unit;
    t[0] = Rational(1) - rest;
    return t;
}

ChamberSignature chamber_sign(const StabilityVector& theta, const std::vector<Wall>& ws,
                              long long n) {
    ChamberSignature sig;
    sig.n = n;
    sig.signs.reserve(ws.size());
    for (const auto& w : ws) {
        Rational v = eval_theta(theta, w.form);
        if (v.is_zero())
            throw OnWall("stability parameter lies on a wall (level " +
                         std::to_string(w.level) + ")");
        sig.signs.push_back(v.sign());
    }
    return sig;
}

namespace {

// Unique dominant representative of the finite-Weyl orbit: reflect at any
// non-affine vertex with a negative value until all are positive. Each step
// lowers the number of positive roots taking a negative value, so the loop
// ends after at most |Phi+| steps.
WeylWord make_dominant(StabilityVector& theta, const RootDatum& r) {
    WeylWord word;
    const size_t cap = 4 * (size_t)finite_root_system(r).count() + 8;
    for (size_t step = 0; step <= cap; ++step) {
        int neg = -1;
        for (int v = 1; v < r.num_vertices(); ++v) {
            if (theta[v].is_zero())
                throw OnWall("parameter hit a simple-root wall during dominance");
            if (theta[v].sign() < 0) { neg = v; break; }
        }
        if (neg < 0) return word;
        theta = reflect_theta(neg, theta, r);
        word.push_back(neg);
    }
    throw std::logic_error("dominance loop failed to terminate");
}

} // namespace

BCImage bc_map(const DimVec& d, const RootDatum& r) {
    long long wt = weight(d, r);
    if (wt < 0) throw InvalidParameter("bc_map needs wt(d) >= 0");

    BCImage img;
    img.r = wt;
    img.degenerate = (wt == 0);
    img.word = orbit_witness(d, r);

    StabilityVector theta = apply_word(img.word, theta0(r), r);
    // Witness words are unique only up to the finite Weyl stabilizer of
    // wt*delta; normalizing to the dominant representative lands in F and
    // makes the chamber independent of the witness.
    WeylWord fin = make_dominant(theta, r);
    img.word.insert(img.word.end(), fin.begin(), fin.end());

    long long wall_n = std::max<long long>(wt, 1);
    img.signature = chamber_sign(theta, walls(r, wall_n), wall_n);
    return img;
}

ChamberEnumeration enumerate_chambers_in_F(const RootDatum& r, long long n, long long bound) {
    if (n < 1) throw InvalidParameter("chamber enumeration needs n >= 1");
    if (bound < 0) throw InvalidParameter("word length bound must be nonnegative");

    auto ws = walls(r, n);
    std::vector<int> gens;
    for (int v = 0; v < r.num_vertices(); ++v)
        if (r.cartan[v][v] == 2) gens.push_back(v);

    std::map<ChamberSignature, WeylWord> found;
    std::map<StabilityVector, char> visited;

    StabilityVector start = theta0(r);
    std::vector<std::pair<StabilityVector, WeylWord>> frontier{{start, {}}};
    visited[start] = 1;

    long long count_prev = 0;
    auto in_F = [&](const StabilityVector& t) {
        for (int v = 1; v < r.num_vertices(); ++v)
            if (t[v].sign() <= 0) return false;
        return true;
    };
    auto record = [&](const StabilityVector& t, const WeylWord& w) {
        if (!in_F(t)) return;
        ChamberSignature sig = chamber_sign(t, ws, n);
        auto it = found.find(sig);
        if (it == found.end()) found.emplace(sig, w);
    };
    record(start, {});

    for (long long depth = 1; depth <= bound; ++depth) {
        count_prev = (long long)found.size();
        std::vector<std::pair<StabilityVector, WeylWord>> next;
        for (const auto& [t, w] : frontier) {
            for (int v : gens) {
                StabilityVector img = reflect_theta(v, t, r);
                if (visited.count(img)) continue;
                visited[img] = 1;
                WeylWord nw = w;
                nw.push_back(v);
                record(img, nw);
                next.emplace_back(std::move(img), std::move(nw));
            }
        }
        frontier = std::move(next);
        if (frontier.empty()) break;
    }

    ChamberEnumeration out;
    out.n = n;
    out.bound = bound;
    out.count_at_prev_depth = count_prev;
    out.stabilized = ((long long)found.size() == count_prev);
    for (auto& [sig, w] : found) {
        out.signatures.push_back(sig);
        out.witness_words.push_back(w);
    }
    return out;
}

SurjectivityReport surjectivity_report(const RootDatum& r, long long n, long long bound) {
    SurjectivityReport rep;
    auto chambers = enumerate_chambers_in_F(r, n, bound);
    rep.checks.add("enumeration_stabilized", chambers.stabilized,
                   "chambers " + std::to_string(chambers.signatures.size()) +
                       ", at previous depth " + std::to_string(chambers.count_at_prev_depth));

    DimVec ndelta(r.num_vertices());
    for (int i = 0; i < r.num_vertices(); ++i) ndelta[i] = n * r.delta[i];

    bool all_nonneg = true, all_weight = true, all_match = true;
    for (size_t i = 0; i < chambers.signatures.size(); ++i) {
        WeylWord rev = chambers.witness_words[i];
        std::reverse(rev.begin(), rev.end());
        DimVec d = apply_word(rev, ndelta, r);
        for (long long c : d)
            if (c < 0) all_nonneg = false;
        if (weight(d, r) != n) all_weight = false;
        BCImage img = bc_map(d, r);
        if (!(img.signature == chambers.signatures[i])) all_match = false;
        rep.signatures.push_back(chambers.signatures[i]);
        rep.witnesses.push_back(std::move(d));
    }
    rep.checks.add("witness_dimensions_nonnegative", all_nonneg);
    rep.checks.add("witness_weight_equals_n", all_weight);
    rep.checks.add("every_chamber_witnessed", all_match);
    return rep;
}

CheckReport wall_pullback_check(const RootDatum& r, long long n) {
    CheckReport rep;
    auto ws = walls(r, n);
    FiniteRoots phi = finite_root_system(r);

    // Sample exact points on the slice theta(delta) = 1.
    std::vector<StabilityVector> samples;
    samples.push_back(theta0(r));
    for (int j = 1; j < r.num_vertices(); ++j) {
        StabilityVector t = theta0(r);
        t[j] += Rational(j, 7);
        t[0] -= Rational(j * r.delta[j], 7); // keep theta(delta) = 1
        samples.push_back(t);
    }

    bool slice_ok = true, affine_ok = true, delta_ok = true;
    for (const auto& t : samples) {
        if (!(theta_of_delta(t, r) == Rational(1))) slice_ok = false;
        for (const auto& w : ws) {
            if (w.is_delta) {
                if (eval_theta(t, w.form).is_zero()) delta_ok = false;
                continue;
            }
            // theta(m delta + alpha) = 0 on the slice iff theta(alpha) = -m.
            Rational lhs = eval_theta(t, w.form);
            DimVec alpha_embedded(r.num_vertices(), 0);
            for (int i = 1; i < r.num_vertices(); ++i)
                alpha_embedded[i] = phi.roots[w.alpha_index][i - 1];
            Rational rhs = eval_theta(t, alpha_embedded) + Rational(w.level);
            if (!(lhs == rhs)) affine_ok = false;
        }
    }
    rep.add("samples_on_slice", slice_ok);
    rep.add("delta_wall_misses_slice", delta_ok);
    rep.add("wall_restricts_to_affine_condition", affine_ok);
    rep.add("wall_count_formula",
            (long long)ws.size() == 1 + (2 * n - 1) * (long long)phi.count(),
            std::to_string(ws.size()) + " walls");
    return rep;
}

} // namespace mckay

#pragma once

#include <string>
#include <vector>

#include "mckay/components.hpp"
#include "mckay/report.hpp"
#include "mckay/weyl.hpp"

namespace mckay {

struct Wall {
    DimVec form;     // integer linear form over the vertex set
    bool is_delta;   // the delta^perp wall
    long long level; // m, 0 for the delta wall
    int alpha_index; // index into the finite root list, -1 for the delta wall
};

// Signed evaluation of a regular stability parameter on the wall family W_n;
// +1/-1 per wall in canonical wall order.
struct ChamberSignature {
    long long n = 0;
    std::vector<int> signs;

    friend bool operator==(const ChamberSignature& a, const ChamberSignature& b) {
        return a.n == b.n && a.signs == b.signs;
    }
    friend bool operator<(const ChamberSignature& a, const ChamberSignature& b) {
        if (a.n != b.n) return a.n < b.n;
        return a.signs < b.signs;
    }
};

struct BCImage {
    long long r = 0; // wt(d)
    WeylWord word;   // witness word composed with the finite dominance word
    ChamberSignature signature;
    bool degenerate = false; // r == 0: the image is a point
};

// Canonical wall list: delta first, then (m, alpha) lexicographic with the
// root order of finite_root_system. Size 1 + (2n-1)|Phi|.
std::vector<Wall> walls(const RootDatum& r, long long n);

// Rational stability parameter strictly inside the fundamental alcove with
// theta0(delta) = 1: theta0(chi) = 1/N off the affine vertex, N = 2*sum(delta).
StabilityVector theta0(const RootDatum& r);

ChamberSignature chamber_sign(const StabilityVector& theta, const std::vector<Wall>& ws,
                              long long n);

// Witness word for d composed with the unique finite-Weyl dominance word, so
// the image parameter lies in the cone F; the resulting chamber is the
// canonical one attached to d.
BCImage bc_map(const DimVec& d, const RootDatum& r);

struct ChamberEnumeration {
    long long n = 0;
    long long bound = 0;
    std::vector<ChamberSignature> signatures; // sorted
    std::vector<WeylWord> witness_words;      // parallel to signatures
    bool stabilized = false;                  // count unchanged at depth bound-1 vs bound
    long long count_at_prev_depth = 0;
};

// Word-bounded alcove sampling: orbit of theta0 under words of length <= bound,
// filtered to the open cone F, grouped by W_n signature.
ChamberEnumeration enumerate_chambers_in_F(const RootDatum& r, long long n, long long bound);

struct SurjectivityReport {
    CheckReport checks;
    // One witness d per discovered chamber, parallel to `signatures`.
    std::vector<ChamberSignature> signatures;
    std::vector<DimVec> witnesses;
};

SurjectivityReport surjectivity_report(const RootDatum& r, long long n, long long bound);

// Slice identity: on theta(delta) = 1, the wall (m delta + alpha) is the
// affine condition theta(alpha) = -m, and delta^perp misses the slice.
CheckReport wall_pullback_check(const RootDatum& r, long long n);

} // namespace mckay

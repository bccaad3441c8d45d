#pragma once

#include <vector>

#include "mckay/mckay_graph.hpp"
#include "mckay/rational.hpp"

namespace mckay {

using StabilityVector = std::vector<Rational>;

// Deformation parameters live in Q + Qi so that every Weyl image stays exact.
struct QComplex {
    Rational re, im;
    friend QComplex operator+(const QComplex& a, const QComplex& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend QComplex operator-(const QComplex& a, const QComplex& b) {
        return {a.re - b.re, a.im - b.im};
    }
    QComplex operator-() const { return {-re, -im}; }
    friend QComplex operator*(const Rational& c, const QComplex& a) {
        return {c * a.re, c * a.im};
    }
    friend bool operator==(const QComplex& a, const QComplex& b) {
        return a.re == b.re && a.im == b.im;
    }
};
using DeformationVector = std::vector<QComplex>;

// A word in the simple reflections; entry values are vertex indices.
// apply_word applies entries left to right.
using WeylWord = std::vector<int>;

struct FiniteRoots {
    // Vectors over the non-affine vertices (index 0 of the root datum removed),
    // in simple-root coordinates.
    std::vector<std::vector<long long>> roots;
    std::vector<std::vector<long long>> positive; // the positive subset
    std::vector<long long> highest;               // the highest root tau

    int count() const { return (int)roots.size(); }
};

// The three cases of the reflection action at a vertex; the affine vertex
// carries the extra +1 on dimension vectors. Edge multiplicities enter with
// their multiplicity (this matters only for the order-2 cyclic group).
DimVec reflect_dim(int vertex, const DimVec& d, const RootDatum& r);
StabilityVector reflect_theta(int vertex, const StabilityVector& theta, const RootDatum& r);
DeformationVector reflect_lambda(int vertex, const DeformationVector& lambda, const RootDatum& r);

DimVec apply_word(const WeylWord& w, DimVec d, const RootDatum& r);
StabilityVector apply_word(const WeylWord& w, StabilityVector theta, const RootDatum& r);
DeformationVector apply_word(const WeylWord& w, DeformationVector lambda, const RootDatum& r);

// wt(d) = d_0 - (1/2) a^T C a with a = (d_chi - d_0 delta_chi)_{chi != 0};
// always an integer on the simply-laced root lattice.
long long weight(const DimVec& d, const RootDatum& r);

long long default_witness_bound(const DimVec& d, const RootDatum& r);

// A word sending d to wt(d)*delta, found by bounded bidirectional
// breadth-first search over the reflection orbit. Throws BoundExceeded when
// the coefficient bound cuts off the search.
WeylWord orbit_witness(const DimVec& d, const RootDatum& r, long long bound = -1);

FiniteRoots finite_root_system(const RootDatum& r);

Rational eval_theta(const StabilityVector& theta, const DimVec& d);
Rational theta_of_delta(const StabilityVector& theta, const RootDatum& r);

} // namespace mckay

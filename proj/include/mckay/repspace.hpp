#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "mckay/mckay_graph.hpp"
#include "mckay/partitions.hpp"

namespace mckay {

using CMat = Eigen::MatrixXcd;
using CVec = Eigen::VectorXcd;
using CRow = Eigen::RowVectorXcd;
using Complex = std::complex<double>;

// Numerical tolerances for the floating-point lab. The combinatorial side
// of the library is exact; everything here is verification at fixed cutoffs.
inline constexpr double kGeneratorRelTol = 1e-10; // group relations of matrix models
inline constexpr double kCharacterTol = 1e-9;     // trace-vs-table agreement
inline constexpr double kEqualityTol = 1e-9;      // identity residuals (sum rule, equivariance)
inline constexpr double kRoundTripTol = 1e-8;     // functor round trips, diagrams
inline constexpr double kRankTol = 1e-8;          // relative singular-value cutoff

// Deterministic uniform(-1,1) complex entries; reproducible from the seed.
class SampleRng {
public:
    explicit SampleRng(unsigned long long seed) : state_(seed * 2685821657736338717ULL + 1) {}
    double real();
    Complex entry();
    CMat matrix(int rows, int cols);

private:
    unsigned long long state_;
    unsigned long long next();
};

struct Irrep {
    long long degree = 0;
    std::vector<CMat> gens; // one matrix per group generator
};

// Explicit unitary models of all irreducibles, for the cyclic and binary
// dihedral families. Exceptional groups stay character-level only.
struct MatrixModel {
    GroupModel model;
    int num_generators = 0;
    std::vector<Irrep> irreps;  // indexed by row
    std::vector<CMat> std_gens; // 2x2 defining representation
    // For cyclic groups: natural exponent -> row permutation.
    std::vector<int> natural_row;
};

MatrixModel irrep_matrices(const GroupModel& gm);

// Residual of the generator relations and of trace-vs-table agreement.
double model_relation_residual(const MatrixModel& mm);
double model_character_residual(const MatrixModel& mm);

struct Arrow {
    int src = 0, dst = 0;
    int pair = 0;         // index of the reversed arrow
    bool positive = true; // orientation sign
};

struct EdgeMaps {
    std::vector<Arrow> arrows;
    std::vector<CMat> y;      // deg(dst) x 2*deg(src)
    std::vector<CMat> ytilde; // 2*deg(src) x deg(dst), block of the stacked inverse
    std::vector<Complex> scale; // calibration scalars l_h (1 before calibration)
    std::vector<Complex> bracket0; // Schur scalar of the uncalibrated bracket, per arrow
};

// Basis of Hom_Gamma(X_std (x) X_src, X_dst); dimension equals mult[src][dst].
std::vector<CMat> hom_basis(int src, int dst, const MatrixModel& mm);

// One nonzero y per arrow plus the canonical section family; the order-2
// cyclic group reproduces the four explicit coordinate maps.
EdgeMaps choose_y0(const MatrixModel& mm);

// Scales the pairs so that l_h l_hbar Tr([y_hbar]_1 [y_h]_2 - [y_hbar]_2 [y_h]_1)
// equals the orientation sign of the reversed arrow.
EdgeMaps calibrate_scalars(const MatrixModel& mm, EdgeMaps maps);

// Same quiver with every orientation flag flipped.
EdgeMaps flip_orientation(EdgeMaps maps);

double sum_rule_residual(const MatrixModel& mm, const EdgeMaps& maps); // Sum ytilde o y = id

struct QuiverRep {
    std::vector<long long> dim, fdim; // per vertex
    std::vector<CMat> x;              // per arrow
    std::vector<CMat> v1, v2;         // per vertex
};

QuiverRep random_quiver_rep(const MatrixModel& mm, const EdgeMaps& maps,
                            const std::vector<long long>& dim,
                            const std::vector<long long>& fdim, SampleRng& rng);

struct ModuleRep {
    CMat delta;                 // n x 2n, X_std (x) M -> M (std-major column blocks)
    CMat z1, z2;                // n x f and f x n
    std::vector<CMat> action;   // Gamma-generators on M
    std::vector<CMat> faction;  // Gamma-generators on M^f
};

CMat delta_component(const ModuleRep& m, int k); // Delta_{e_k}, k = 0 or 1

struct FResult {
    ModuleRep module;
    std::vector<long long> dim, fdim; // block data of M = sum V_chi (x) X_chi
};

FResult functor_F(const QuiverRep& q, const MatrixModel& mm, const EdgeMaps& maps);

struct GResult {
    QuiverRep rep;
    std::vector<std::vector<CMat>> hom_M;  // per vertex, basis of Hom(X_chi, M)
    std::vector<std::vector<CMat>> hom_Mf; // per vertex, basis of Hom(X_chi, M^f)
};

GResult functor_G(const ModuleRep& m, const MatrixModel& mm, const EdgeMaps& maps);

// Evaluation map sum H_chi (x) X_chi -> M assembled from a hom basis family.
CMat epsilon_matrix(const MatrixModel& mm, const std::vector<std::vector<CMat>>& hom);

CMat moment_map_module(const ModuleRep& m);
std::vector<CMat> moment_map_quiver(const QuiverRep& q, const EdgeMaps& maps);

Complex symplectic_quiver(const QuiverRep& a, const QuiverRep& b, const EdgeMaps& maps);
Complex symplectic_module(const ModuleRep& a, const ModuleRep& b);

double gamma_equivariance_residual(const ModuleRep& m, const MatrixModel& mm);

struct JordanPoint {
    CMat alpha, beta;
    CVec v1;
    CRow v2;
    long long n() const { return alpha.rows(); }
};

// theta = 1 stability: C[alpha,beta] v1 spans everything.
bool is_stable_jordan(const JordanPoint& p);

JordanPoint hilbert_point(const Partition& lambda);

struct FixedPointData {
    CMat g;          // the conjugating matrix of the generator equation
    CMat sigma_gen;  // sigma(generator) = g^{-1}
    DimVec d_natural;
    DimVec d_rows;
    ModuleRep module; // Delta_{e1} = beta, Delta_{e2} = -alpha, Z1 = v1, Z2 = v2
};

// Solves the generator fixed-point equation for the order-l diagonal cyclic
// group and deconstructs the point into a Gamma-module datum.
FixedPointData fixed_point_decompose(const JordanPoint& p, const MatrixModel& cyclic_mm);

// iota: rebuild the Jordan point (-Delta_{e2}, Delta_{e1}, Z1, Z2).
JordanPoint reconstruct_jordan(const ModuleRep& m);

// Submodule criterion: the smallest Delta-stable Gamma-submodule containing
// Im(Z1) is everything.
bool is_semistable_module(const ModuleRep& m);

} // namespace mckay

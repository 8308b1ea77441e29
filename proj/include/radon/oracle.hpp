#pragma once

// Desk-scale matrix oracle: explicit models of su(2), su(3), so(5) and
// su(2)+su(2), small irreducible representations built inside tensor powers
// of the defining representation(s), k-invariant vectors by a joint
// null-space solve, and the Reynolds projection R_A evaluated by torus
// quadrature. Everything here is floating point except the weight labels,
// which stay exact rationals aligned with the root-system realization.

#include "radon/root_system.hpp"

#include <Eigen/Dense>

#include <complex>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace radon {

using Cplx = std::complex<double>;
using CMat = Eigen::MatrixXcd;
using CVec = Eigen::VectorXcd;

struct Seed {
    int dim = 0;
    std::vector<RatVec> weights;  // exact weights, one per basis index after diagonalization
    RatVec highest;
    std::function<CMat(const CMat&)> act;  // algebra element -> operator on the seed space
    CMat to_weight_basis;                  // unitary T; columns ordered like `weights`
};

struct MatrixAlgebra {
    std::string name;
    RootSystem rs;
    int mat_dim = 0;

    std::vector<CMat> basis;    // complex basis of g
    std::vector<CMat> anchors;  // H^(k) with lambda(H^(k)) = k-th realization coordinate
    std::function<CMat(const CMat&)> theta;
    std::vector<CMat> k_basis;     // fixed points of theta
    std::vector<CMat> torus_gens;  // unit-lattice generators of A = exp(a_0): exp(U_j) = 1
    std::vector<CMat> simple_raise, simple_lower;

    std::vector<Seed> seeds;
    IntegerLattice model_lattice;  // analytically integral weights of the matrix group

    // weight-basis matrix of an algebra element on seed s
    CMat seed_weight_action(int s, const CMat& x) const;
};

MatrixAlgebra build_algebra(const std::string& name);
bool has_algebra(const std::string& name);

struct Irrep {
    RatVec omega;           // requested highest weight
    RatVec omega_standard;  // its dominant conjugate for the standard positivity
    int dim = 0;
    std::vector<RatVec> weights;        // per basis vector (weight-pure basis)
    std::vector<CVec> basis;            // orthonormal, in carrier coordinates
    std::vector<CMat> k_action;         // k_basis restricted to the irrep, dim x dim
    std::vector<std::vector<long>> torus_freq;  // integer frequencies per torus generator
    std::vector<int> carrier_slots;     // seed index per tensor slot
};

// constructs V(omega) inside tensor powers of the seeds; total degree <= 6
Irrep build_irrep(const MatrixAlgebra& alg, const RatVec& omega);

// orthonormal basis of the joint null space of the k-action (tolerance per
// singular value); its size is the oracle's sphericality dimension
std::vector<CVec> k_invariants(const Irrep& irrep, double tol = 1e-9);

// weights whose component of v exceeds tol in norm; v in irrep coordinates
WeightSet support_of(const Irrep& irrep, const CVec& v, double tol = 1e-9);

// <R_A v, u> by equal-weight torus sampling; `samples` points per torus
// dimension. Exact once samples > 2*max|frequency|; below that a warning is
// recorded in *warning if given.
Cplx reynolds_RA(const Irrep& irrep, const CVec& v, const CVec& u, int samples,
                 std::string* warning = nullptr);

// minimum sample count for exactness, 2*max|freq| + 1
int reynolds_exactness_threshold(const Irrep& irrep);

// the same projection evaluated exactly from the weight decomposition
Cplx reynolds_exact(const Irrep& irrep, const CVec& v, const CVec& u);

// diagonal phases of exp(pi*i*x) on the irrep, where x is the metric dual of
// the realization vector xdual; used for F-invariance checks
CVec half_turn_phases(const MatrixAlgebra& alg, const Irrep& irrep, const RatVec& xdual);

// exact-rational gold standard for su2: the k-invariant of V(m w1) inside
// (C^2)^{tensor m}, solved over Q. Returns its support, or nullopt when no
// invariant exists.
std::optional<WeightSet> su2_exact_invariant_support(int m);

}  // namespace radon

#pragma once

// Decision procedures for the maximal flat Radon transform: sphericality,
// invariant-vector support, descent to the adjoint form, kernel membership,
// and an exact bound-free injectivity test. Every verdict carries a
// certificate that re-verifies under plain lattice membership.

#include "radon/space.hpp"

#include <string>
#include <vector>

namespace radon {

enum class VerdictKind { NotSpherical, DescendsToAdjoint, InKernel };

std::string to_string(VerdictKind k);

struct KernelVerdict {
    VerdictKind kind = VerdictKind::NotSpherical;
    RatVec omega;
    RatVec omega_dual;

    // DescendsToAdjoint: coordinates of omega* in the generators of Lambda
    IntVec lambda_coords;
    // InKernel: nonzero leftover of omega* after reduction against Lambda
    RatVec residue;
    // NotSpherical: which condition failed
    std::string reason;

    // re-derive the certificate from scratch; false means corrupted data
    bool reverify(const SpaceSpec& spec) const;
};

struct SupportQuery {
    RatVec omega;
    RatVec lambda;
};

// Cartan-Helgason sphericality: theta(omega) = -omega and
// (omega, beta)/(beta, beta) a non-negative integer for every beta in Sigma+.
// The K0 form ignores the flavor; the flavored form additionally demands
// omega in Lambda when the spec models the adjoint form.
bool is_spherical_k0(const SpaceSpec& spec, const RatVec& omega);
bool is_spherical(const SpaceSpec& spec, const RatVec& omega);

// human-readable reason why omega fails is_spherical, empty when spherical
std::string spherical_failure(const SpaceSpec& spec, const RatVec& omega);

// lambda in supp(omega)  <=>  theta(lambda) = -lambda and omega - lambda in Lambda
bool support_contains(const SpaceSpec& spec, const SupportQuery& q);

// full predicted support of the k-invariant of V(omega)
WeightSet predicted_support(const SpaceSpec& spec, const RatVec& omega);

// lambda annihilates F  <=>  lambda(x_i) in 2Z for all i  <=>  lambda in Lambda.
// Both routes are computed; disagreement raises std::logic_error.
bool annihilates_F(const SpaceSpec& spec, const RatVec& lambda);

bool descends_to_adjoint(const SpaceSpec& spec, const RatVec& omega);

KernelVerdict in_kernel(const SpaceSpec& spec, const RatVec& omega);

// independent route through weights_of_rep + support_contains
VerdictKind in_kernel_support_route(const SpaceSpec& spec, const RatVec& omega);

// all spherical omega with fundamental-coordinate sum <= bound, with verdicts,
// in lexicographic coordinate order
std::vector<std::pair<IntVec, KernelVerdict>> enumerate_spherical(const SpaceSpec& spec, int bound);

// the lattice of weights satisfying theta(omega) = -omega, analytic
// integrality, and the Cartan-Helgason integrality conditions (intersected
// with Lambda for the KZ flavor); its dominant members are exactly the
// spherical highest weights
IntegerLattice spherical_lattice(const SpaceSpec& spec);

struct InjectivityCertificate {
    bool injective = false;
    // injective: coordinates of each spherical-lattice generator in Lambda
    std::vector<RatVec> generators;
    std::vector<IntVec> generator_coords;
    // not injective: a dominant spherical weight outside Lambda, plus residue
    RatVec witness;
    RatVec witness_residue;

    bool reverify(const SpaceSpec& spec) const;
};

InjectivityCertificate is_transform_injective(const SpaceSpec& spec);

}  // namespace radon

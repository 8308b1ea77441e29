#include "radon/kernel.hpp"

#include <algorithm>

namespace radon {

std::string to_string(VerdictKind k) {
    switch (k) {
        case VerdictKind::NotSpherical: return "NotSpherical";
        case VerdictKind::DescendsToAdjoint: return "DescendsToAdjoint";
        case VerdictKind::InKernel: return "InKernel";
    }
    return "?";
}

namespace {

void require_dominant_analytic(const SpaceSpec& spec, const RatVec& omega, const char* who) {
    if (!spec.is_dominant(omega))
        throw std::invalid_argument(std::string(who) + ": weight " + format_vec(omega) + " is not dominant");
    if (!spec.is_analytic(omega))
        throw std::invalid_argument(std::string(who) + ": weight " + format_vec(omega) +
                                    " is not in the analytic lattice of " + spec.name);
}

}  // namespace

std::string spherical_failure(const SpaceSpec& spec, const RatVec& omega) {
    if (!spec.theta_negates(omega)) return "theta(omega) != -omega";
    for (const auto& beta : spec.restricted().sigma_plus) {
        Rational c = spec.rs.inner(omega, beta) / spec.rs.inner(beta, beta);
        if (!is_integer(c))
            return "(omega, beta)/(beta, beta) = " + to_string(c) + " not an integer for beta = " +
                   format_vec(beta);
        if (c < 0) return "(omega, beta)/(beta, beta) negative for beta = " + format_vec(beta);
    }
    if (spec.flavor == Flavor::KZ && !spec.restricted().lambda.contains(omega))
        return "omega not in Lambda (KZ flavor)";
    return "";
}

bool is_spherical_k0(const SpaceSpec& spec, const RatVec& omega) {
    require_dominant_analytic(spec, omega, "is_spherical");
    if (!spec.theta_negates(omega)) return false;
    for (const auto& beta : spec.restricted().sigma_plus) {
        Rational c = spec.rs.inner(omega, beta) / spec.rs.inner(beta, beta);
        if (!is_integer(c) || c < 0) return false;
    }
    return true;
}

bool is_spherical(const SpaceSpec& spec, const RatVec& omega) {
    if (!is_spherical_k0(spec, omega)) return false;
    if (spec.flavor == Flavor::KZ) return spec.restricted().lambda.contains(omega);
    return true;
}

bool support_contains(const SpaceSpec& spec, const SupportQuery& q) {
    if (!is_spherical_k0(spec, q.omega))
        throw std::invalid_argument("support_contains: V(omega) has no k-invariant, omega = " +
                                    format_vec(q.omega));
    WeightSet weights = spec.rs.weights_of_rep(q.omega, spec.simple());
    if (!weights.count(q.lambda))
        throw std::invalid_argument("support_contains: lambda " + format_vec(q.lambda) +
                                    " is not a weight of V(omega)");
    return spec.theta_negates(q.lambda) && spec.restricted().lambda.contains(vec_sub(q.omega, q.lambda));
}

WeightSet predicted_support(const SpaceSpec& spec, const RatVec& omega) {
    if (!is_spherical_k0(spec, omega))
        throw std::invalid_argument("predicted_support: V(omega) has no k-invariant");
    WeightSet out;
    for (const auto& lam : spec.rs.weights_of_rep(omega, spec.simple())) {
        if (spec.theta_negates(lam) && spec.restricted().lambda.contains(vec_sub(omega, lam)))
            out.insert(lam);
    }
    return out;
}

bool annihilates_F(const SpaceSpec& spec, const RatVec& lambda) {
    if (!spec.is_analytic(lambda))
        throw std::invalid_argument("annihilates_F: lambda is not analytically integral");
    if (!spec.theta_negates(lambda))
        throw std::invalid_argument("annihilates_F: theta(lambda) != -lambda");
    bool parity = true;
    for (const auto& x : spec.restricted().dual_basis) {
        if (!is_even_integer(spec.rs.inner(lambda, x))) {
            parity = false;
            break;
        }
    }
    bool member = spec.restricted().lambda.contains(lambda);
    if (parity != member)
        throw std::logic_error("annihilates_F: parity test and lattice membership disagree on " +
                               format_vec(lambda) + " in " + spec.name +
                               " (mis-encoded theta or an internal bug)");
    return member;
}

bool descends_to_adjoint(const SpaceSpec& spec, const RatVec& omega) {
    if (!is_spherical(spec, omega))
        throw std::invalid_argument("descends_to_adjoint: omega is not spherical for " + spec.name);
    RatVec dual = spec.rs.dual_highest_weight(omega, spec.simple());
    return spec.restricted().lambda.contains(dual);
}

KernelVerdict in_kernel(const SpaceSpec& spec, const RatVec& omega) {
    require_dominant_analytic(spec, omega, "in_kernel");
    KernelVerdict v;
    v.omega = omega;
    std::string fail = spherical_failure(spec, omega);
    if (!fail.empty()) {
        v.kind = VerdictKind::NotSpherical;
        v.reason = fail;
        return v;
    }
    v.omega_dual = spec.rs.dual_highest_weight(omega, spec.simple());
    const IntegerLattice& lambda = spec.restricted().lambda;
    auto coords = lambda.coordinates(v.omega_dual);
    if (coords) {
        v.kind = VerdictKind::DescendsToAdjoint;
        v.lambda_coords = *coords;
    } else {
        v.kind = VerdictKind::InKernel;
        v.residue = lambda.residue(v.omega_dual);
        if (vec_is_zero(v.residue)) throw std::logic_error("in_kernel: zero residue for a non-member");
    }
    return v;
}

bool KernelVerdict::reverify(const SpaceSpec& spec) const {
    const IntegerLattice& lambda = spec.restricted().lambda;
    switch (kind) {
        case VerdictKind::NotSpherical: return !spherical_failure(spec, omega).empty();
        case VerdictKind::DescendsToAdjoint: {
            if (!lambda.contains(omega_dual)) return false;
            // coordinates recombine to omega*
            RatVec acc(spec.rs.ambient(), Rational(0));
            const auto& gens = lambda.generators();
            if (lambda_coords.size() != gens.size()) return false;
            for (size_t i = 0; i < gens.size(); ++i)
                acc = vec_add(acc, vec_scale(Rational(lambda_coords[i]), gens[i]));
            return acc == omega_dual;
        }
        case VerdictKind::InKernel:
            return !lambda.contains(omega_dual) && !vec_is_zero(residue);
    }
    return false;
}

VerdictKind in_kernel_support_route(const SpaceSpec& spec, const RatVec& omega) {
    require_dominant_analytic(spec, omega, "in_kernel_support_route");
    if (!is_spherical(spec, omega)) return VerdictKind::NotSpherical;
    RatVec dual = spec.rs.dual_highest_weight(omega, spec.simple());
    for (const auto& lam : spec.rs.weights_of_rep(dual, spec.simple())) {
        if (!spec.theta_negates(lam)) continue;
        if (!vec_is_zero(spec.restrict_weight(lam))) continue;
        // the support criterion, inlined over the precomputed weight set
        if (spec.restricted().lambda.contains(vec_sub(dual, lam))) return VerdictKind::DescendsToAdjoint;
    }
    return VerdictKind::InKernel;
}

std::vector<std::pair<IntVec, KernelVerdict>> enumerate_spherical(const SpaceSpec& spec, int bound) {
    if (bound < 0) throw std::invalid_argument("enumerate_spherical: bound must be >= 0");
    int r = static_cast<int>(spec.simple().size());
    std::vector<std::pair<IntVec, KernelVerdict>> out;
    IntVec coords(r, BigInt(0));
    // lexicographic enumeration of all coordinate vectors with sum <= bound
    auto rec = [&](auto&& self, int pos, int remaining) -> void {
        if (pos == r) {
            RatVec omega = spec.weight_from_coordinates(coords);
            if (!spec.is_analytic(omega)) return;
            if (spherical_failure(spec, omega).empty()) out.emplace_back(coords, in_kernel(spec, omega));
            return;
        }
        for (int c = 0; c <= remaining; ++c) {
            coords[pos] = c;
            self(self, pos + 1, remaining - c);
        }
        coords[pos] = 0;
    };
    rec(rec, 0, bound);
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

IntegerLattice spherical_lattice(const SpaceSpec& spec) {
    int n = spec.rs.ambient();
    const auto& gens = spec.analytic.generators();
    int m = static_cast<int>(gens.size());

    // step 1: sublattice of the analytic lattice negated by theta, i.e. the
    // integer kernel of (theta + 1) applied to the generators
    RatMat tp1 = spec.theta;
    for (int i = 0; i < n; ++i) tp1(i, i) += 1;
    RatMat img(n, m);
    BigInt scale = 1;
    for (int j = 0; j < m; ++j) {
        RatVec c = mat_apply(tp1, gens[j]);
        for (int i = 0; i < n; ++i) {
            img(i, j) = c[i];
            scale = lcm(scale, den(c[i]));
        }
    }
    IntMat imat(n, m);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < m; ++j) imat(i, j) = to_bigint(img(i, j) * Rational(scale));
    std::vector<RatVec> minus_gens;
    for (const auto& k : integer_kernel(imat)) {
        RatVec g(n, Rational(0));
        for (int j = 0; j < m; ++j) g = vec_add(g, vec_scale(Rational(k[j]), gens[j]));
        minus_gens.push_back(std::move(g));
    }

    // step 2: impose (lambda, beta)/(beta, beta) in Z for every beta in Sigma+
    const auto& sigma = spec.restricted().sigma_plus;
    int mm = static_cast<int>(minus_gens.size());
    int k = static_cast<int>(sigma.size());
    RatMat f(k, mm);
    BigInt d = 1;
    for (int i = 0; i < k; ++i) {
        Rational bb = spec.rs.inner(sigma[i], sigma[i]);
        for (int j = 0; j < mm; ++j) {
            f(i, j) = spec.rs.inner(minus_gens[j], sigma[i]) / bb;
            d = lcm(d, den(f(i, j)));
        }
    }
    // solutions of F x in Z^k: project the kernel of [dF | dI] to the x block
    IntMat block(k, mm + k);
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < mm; ++j) block(i, j) = to_bigint(f(i, j) * Rational(d));
        block(i, mm + i) = d;
    }
    std::vector<RatVec> sph_gens;
    for (const auto& ker : integer_kernel(block)) {
        RatVec g(n, Rational(0));
        for (int j = 0; j < mm; ++j) g = vec_add(g, vec_scale(Rational(ker[j]), minus_gens[j]));
        if (!vec_is_zero(g)) sph_gens.push_back(std::move(g));
    }
    IntegerLattice sph(n, sph_gens);
    if (spec.flavor == Flavor::KZ) sph = lattice_intersection(sph, spec.restricted().lambda);
    return sph;
}

InjectivityCertificate is_transform_injective(const SpaceSpec& spec) {
    InjectivityCertificate cert;
    IntegerLattice sph = spherical_lattice(spec);
    const IntegerLattice& lambda = spec.restricted().lambda;

    cert.generators = sph.basis();
    cert.injective = true;
    for (const auto& g : cert.generators) {
        auto coords = lambda.coordinates(g);
        if (coords) {
            cert.generator_coords.push_back(*coords);
            continue;
        }
        // witness: the dominant restricted-Weyl conjugate of g is an honest
        // spherical highest weight, and stays outside Lambda
        cert.injective = false;
        cert.generator_coords.clear();
        RatVec w = spec.rs.dominant_representative(g, spec.restricted().sigma_simple).first;
        if (!is_spherical(spec, w) || lambda.contains(w))
            throw std::logic_error("is_transform_injective: witness construction failed for " + spec.name);
        cert.witness = w;
        cert.witness_residue = lambda.residue(w);
        break;
    }
    return cert;
}

bool InjectivityCertificate::reverify(const SpaceSpec& spec) const {
    const IntegerLattice& lambda = spec.restricted().lambda;
    if (injective) {
        if (generator_coords.size() != generators.size()) return false;
        const auto& lgens = lambda.generators();
        for (size_t i = 0; i < generators.size(); ++i) {
            RatVec acc(spec.rs.ambient(), Rational(0));
            if (generator_coords[i].size() != lgens.size()) return false;
            for (size_t j = 0; j < lgens.size(); ++j)
                acc = vec_add(acc, vec_scale(Rational(generator_coords[i][j]), lgens[j]));
            if (acc != generators[i]) return false;
        }
        return true;
    }
    return is_spherical(spec, witness) && !lambda.contains(witness);
}

}  // namespace radon

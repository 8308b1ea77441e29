#include "radon/oracle.hpp"

#include <Eigen/SVD>

#include <cmath>
#include <map>
#include <numbers>
#include <stdexcept>

namespace radon {

namespace {

constexpr double kLooseTol = 1e-8;

CVec flatten(const CMat& m) { return Eigen::Map<const CVec>(m.data(), m.size()); }

CMat unit_matrix(int n, int i, int j) {
    CMat m = CMat::Zero(n, n);
    m(i, j) = 1.0;
    return m;
}

double rat_to_double(const Rational& q) {
    return static_cast<double>(num(q).convert_to<double>() / den(q).convert_to<double>());
}

// coordinates of y in the span of `basis` (flattened matrices), with residual check
struct SpanSolver {
    Eigen::ColPivHouseholderQR<CMat> qr;
    CMat bmat;

    explicit SpanSolver(const std::vector<CMat>& basis) {
        bmat = CMat(basis[0].size(), basis.size());
        for (size_t i = 0; i < basis.size(); ++i) bmat.col(static_cast<int>(i)) = flatten(basis[i]);
        qr.compute(bmat);
    }
    CVec coords(const CMat& y, const char* what) const {
        CVec c = qr.solve(flatten(y));
        if ((bmat * c - flatten(y)).norm() > kLooseTol * (1.0 + y.norm()))
            throw std::logic_error(std::string("oracle: ") + what + " is not in the algebra span");
        return c;
    }
};

std::vector<CVec> svd_null_space(const CMat& m, double tol) {
    Eigen::JacobiSVD<CMat> svd(m, Eigen::ComputeFullV);
    std::vector<CVec> out;
    const auto& sv = svd.singularValues();
    for (int i = 0; i < m.cols(); ++i) {
        double s = i < sv.size() ? sv(i) : 0.0;
        if (s <= tol) out.push_back(svd.matrixV().col(i));
    }
    return out;
}

CMat assemble(const std::vector<CMat>& basis, const CVec& coords) {
    CMat x = CMat::Zero(basis[0].rows(), basis[0].cols());
    for (size_t i = 0; i < basis.size(); ++i) x += coords(static_cast<int>(i)) * basis[i];
    return x;
}

// joint eigenvector of the anchor actions on a seed for an exact weight
CVec weight_eigenvector(const std::vector<CMat>& anchor_actions, const RatVec& w) {
    int d = static_cast<int>(anchor_actions[0].rows());
    int k = static_cast<int>(anchor_actions.size());
    CMat stacked(k * d, d);
    for (int a = 0; a < k; ++a)
        stacked.middleRows(a * d, d) = anchor_actions[a] - rat_to_double(w[a]) * CMat::Identity(d, d);
    auto null = svd_null_space(stacked, 1e-10);
    if (null.size() != 1)
        throw std::logic_error("oracle: seed weight space has dimension " + std::to_string(null.size()));
    return null[0].normalized();
}

struct AlgebraTable {
    int k_dim;
};

}  // namespace

CMat MatrixAlgebra::seed_weight_action(int s, const CMat& x) const {
    const Seed& seed = seeds[s];
    return seed.to_weight_basis.adjoint() * seed.act(x) * seed.to_weight_basis;
}

bool has_algebra(const std::string& name) {
    return name == "su2" || name == "su3" || name == "so5" || name == "su2xsu2";
}

MatrixAlgebra build_algebra(const std::string& name) {
    MatrixAlgebra alg;
    alg.name = name;
    AlgebraTable expect{};

    if (name == "su2" || name == "su3") {
        int n = name == "su2" ? 2 : 3;
        alg.rs = build_root_system(Series::A, n - 1);
        alg.mat_dim = n;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (i != j) alg.basis.push_back(unit_matrix(n, i, j));
        for (int i = 0; i + 1 < n; ++i)
            alg.basis.push_back(unit_matrix(n, i, i) - unit_matrix(n, i + 1, i + 1));
        for (int k = 0; k < n; ++k)
            alg.anchors.push_back(unit_matrix(n, k, k) - CMat::Identity(n, n) / static_cast<double>(n));
        alg.theta = [](const CMat& x) { return CMat(-x.transpose()); };
        for (int j = 0; j + 1 < n; ++j) {
            CMat u = unit_matrix(n, j, j) - unit_matrix(n, j + 1, j + 1);
            alg.torus_gens.push_back(Cplx(0, 2 * std::numbers::pi) * u);
        }
        // defining representation and its dual
        auto eps = [&](int i) {
            RatVec w(n, Rational(-1, n));
            w[i] += 1;
            return w;
        };
        Seed std_seed;
        std_seed.dim = n;
        for (int i = 0; i < n; ++i) std_seed.weights.push_back(eps(i));
        std_seed.highest = eps(0);
        std_seed.act = [](const CMat& x) { return x; };
        alg.seeds.push_back(std_seed);
        Seed dual_seed;
        dual_seed.dim = n;
        for (int i = 0; i < n; ++i) dual_seed.weights.push_back(vec_neg(eps(i)));
        dual_seed.highest = vec_neg(eps(n - 1));
        dual_seed.act = [](const CMat& x) { return CMat(-x.transpose()); };
        alg.seeds.push_back(dual_seed);
        alg.model_lattice = alg.rs.weight_lattice();
        expect.k_dim = n == 2 ? 1 : 3;
    } else if (name == "so5") {
        int n = 5;
        alg.rs = build_root_system(Series::B, 2);
        alg.mat_dim = n;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) alg.basis.push_back(unit_matrix(n, i, j) - unit_matrix(n, j, i));
        // a-direction e1 is the (4,5)-rotation plane, t-direction e2 the (1,2) plane
        CMat l34 = unit_matrix(n, 3, 4) - unit_matrix(n, 4, 3);
        CMat l01 = unit_matrix(n, 0, 1) - unit_matrix(n, 1, 0);
        alg.anchors.push_back(Cplx(0, -1) * l34);
        alg.anchors.push_back(Cplx(0, -1) * l01);
        CMat d = CMat::Identity(n, n);
        d(4, 4) = -1;
        alg.theta = [d](const CMat& x) { return CMat(d * x * d); };
        alg.torus_gens.push_back(2 * std::numbers::pi * l34);
        Seed vec_seed;
        vec_seed.dim = n;
        vec_seed.weights = {RatVec{1, 0}, RatVec{-1, 0}, RatVec{0, 1}, RatVec{0, -1}, RatVec{0, 0}};
        vec_seed.highest = RatVec{1, 0};
        vec_seed.act = [](const CMat& x) { return x; };
        alg.seeds.push_back(vec_seed);
        alg.model_lattice = alg.rs.root_lattice();
        expect.k_dim = 6;
    } else if (name == "su2xsu2") {
        int n = 4;
        alg.rs = build_root_system({{Series::A, 1}, {Series::A, 1}});
        alg.mat_dim = n;
        for (int b = 0; b < 2; ++b) {
            int o = 2 * b;
            alg.basis.push_back(unit_matrix(n, o, o + 1));
            alg.basis.push_back(unit_matrix(n, o + 1, o));
            alg.basis.push_back(unit_matrix(n, o, o) - unit_matrix(n, o + 1, o + 1));
        }
        for (int b = 0; b < 2; ++b) {
            int o = 2 * b;
            CMat half = CMat::Zero(n, n);
            half(o, o) = 0.5;
            half(o + 1, o + 1) = 0.5;
            alg.anchors.push_back(unit_matrix(n, o, o) - half);
            alg.anchors.push_back(unit_matrix(n, o + 1, o + 1) - half);
        }
        CMat s = CMat::Zero(n, n);
        s(0, 2) = s(1, 3) = s(2, 0) = s(3, 1) = 1;
        alg.theta = [s](const CMat& x) { return CMat(s * x * s); };
        // the torus of A = exp(a_0) sits antidiagonally across the two factors
        CMat u = CMat::Zero(n, n);
        u(0, 0) = 1;
        u(1, 1) = -1;
        u(2, 2) = -1;
        u(3, 3) = 1;
        alg.torus_gens.push_back(Cplx(0, 2 * std::numbers::pi) * u);
        for (int b = 0; b < 2; ++b) {
            Seed seed;
            seed.dim = 2;
            RatVec w(4, Rational(0));
            w[2 * b] = Rational(1, 2);
            w[2 * b + 1] = Rational(-1, 2);
            seed.weights = {w, vec_neg(w)};
            seed.highest = w;
            int o = 2 * b;
            seed.act = [o](const CMat& x) { return CMat(x.block(o, o, 2, 2)); };
            alg.seeds.push_back(seed);
        }
        alg.model_lattice = alg.rs.weight_lattice();
        expect.k_dim = 3;
    } else {
        throw std::invalid_argument("build_algebra: unsupported algebra '" + name + "'");
    }

    SpanSolver span(alg.basis);
    int dg = static_cast<int>(alg.basis.size());

    // theta as an operator on basis coordinates; fixed points give k
    CMat theta_op(dg, dg);
    for (int i = 0; i < dg; ++i) theta_op.col(i) = span.coords(alg.theta(alg.basis[i]), "theta image");
    if ((theta_op * theta_op - CMat::Identity(dg, dg)).norm() > kLooseTol)
        throw std::logic_error("build_algebra: involution does not square to the identity");
    for (const auto& v : svd_null_space(theta_op - CMat::Identity(dg, dg), 1e-10))
        alg.k_basis.push_back(assemble(alg.basis, v));
    if (static_cast<int>(alg.k_basis.size()) != expect.k_dim)
        throw std::logic_error("build_algebra: fixed-point space of theta has unexpected dimension " +
                               std::to_string(alg.k_basis.size()));
    for (const auto& k : alg.k_basis)
        if ((alg.theta(k) - k).norm() > kLooseTol * (1.0 + k.norm()))
            throw std::logic_error("build_algebra: k basis element not theta-fixed");

    // adjoint action of the anchors on basis coordinates
    std::vector<CMat> ad_anchor;
    for (const auto& h : alg.anchors) {
        CMat m(dg, dg);
        for (int i = 0; i < dg; ++i) m.col(i) = span.coords(h * alg.basis[i] - alg.basis[i] * h, "[H, X]");
        ad_anchor.push_back(std::move(m));
    }

    // root vectors: joint ad-eigenvectors; validates the Cartan alignment
    auto root_vector = [&](const RatVec& alpha) {
        int na = static_cast<int>(ad_anchor.size());
        CMat stacked(na * dg, dg);
        for (int a = 0; a < na; ++a)
            stacked.middleRows(a * dg, dg) =
                ad_anchor[a] - rat_to_double(alpha[a]) * CMat::Identity(dg, dg);
        auto null = svd_null_space(stacked, 1e-10);
        if (null.size() != 1)
            throw std::logic_error("build_algebra: root space of " + format_vec(alpha) +
                                   " has dimension " + std::to_string(null.size()));
        CMat x = assemble(alg.basis, null[0]);
        for (size_t a = 0; a < alg.anchors.size(); ++a) {
            CMat comm = alg.anchors[a] * x - x * alg.anchors[a];
            if ((comm - rat_to_double(alpha[a]) * x).norm() > kLooseTol)
                throw std::logic_error("build_algebra: [H, X_alpha] mismatch for " + format_vec(alpha));
        }
        return x;
    };
    for (const auto& a : alg.rs.positive_roots()) (void)root_vector(a);  // every root space must exist
    for (const auto& a : alg.rs.simple_roots()) {
        alg.simple_raise.push_back(root_vector(a));
        alg.simple_lower.push_back(root_vector(vec_neg(a)));
    }

    // seed weight bases: one joint anchor eigenvector per exact weight
    for (auto& seed : alg.seeds) {
        std::vector<CMat> anchor_actions;
        for (const auto& h : alg.anchors) anchor_actions.push_back(seed.act(h));
        seed.to_weight_basis = CMat(seed.dim, seed.dim);
        for (int i = 0; i < seed.dim; ++i)
            seed.to_weight_basis.col(i) = weight_eigenvector(anchor_actions, seed.weights[i]);
        if ((seed.to_weight_basis.adjoint() * seed.to_weight_basis - CMat::Identity(seed.dim, seed.dim))
                .norm() > kLooseTol)
            throw std::logic_error("build_algebra: seed weight basis is not unitary");
    }
    return alg;
}

// ---- carrier ------------------------------------------------------------

namespace {

struct Carrier {
    const MatrixAlgebra* alg;
    std::vector<int> slots;  // seed index per slot
    std::vector<long> strides;
    std::vector<int> dims;
    long total = 1;

    Carrier(const MatrixAlgebra& a, std::vector<int> slot_list) : alg(&a), slots(std::move(slot_list)) {
        for (int s : slots) dims.push_back(a.seeds[s].dim);
        strides.assign(slots.size(), 1);
        for (int i = static_cast<int>(slots.size()) - 1; i >= 0; --i) {
            strides[i] = total;
            total *= dims[i];
        }
    }

    RatVec weight_of_index(long idx, int ambient) const {
        RatVec w(ambient, Rational(0));
        for (size_t i = 0; i < slots.size(); ++i) {
            long digit = (idx / strides[i]) % dims[i];
            w = vec_add(w, alg->seeds[slots[i]].weights[static_cast<size_t>(digit)]);
        }
        return w;
    }

    // apply sum_i (1 x .. op_i .. x 1) with per-seed weight-basis operators
    CVec apply(const std::vector<CMat>& per_seed_ops, const CVec& v) const {
        CVec out = CVec::Zero(total);
        for (size_t i = 0; i < slots.size(); ++i) {
            const CMat& m = per_seed_ops[slots[i]];
            int d = dims[i];
            long st = strides[i];
            long outer = total / (d * st);
            for (long a = 0; a < outer; ++a) {
                for (long b = 0; b < st; ++b) {
                    long base = a * d * st + b;
                    for (int jj = 0; jj < d; ++jj) {
                        Cplx acc = 0;
                        for (int j = 0; j < d; ++j) acc += m(jj, j) * v(base + j * st);
                        out(base + jj * st) += acc;
                    }
                }
            }
        }
        return out;
    }
};

std::vector<CMat> per_seed_ops(const MatrixAlgebra& alg, const CMat& x) {
    std::vector<CMat> ops;
    for (size_t s = 0; s < alg.seeds.size(); ++s) ops.push_back(alg.seed_weight_action(static_cast<int>(s), x));
    return ops;
}

// coordinates of w in the orthonormal set `basis`, with invariance check
CVec restrict_coords(const std::vector<CVec>& basis, const CVec& w, const char* what) {
    CVec c(basis.size());
    CVec rem = w;
    for (size_t a = 0; a < basis.size(); ++a) {
        c(static_cast<int>(a)) = basis[a].dot(w);
        rem -= c(static_cast<int>(a)) * basis[a];
    }
    if (rem.norm() > kLooseTol * (1.0 + w.norm()))
        throw std::logic_error(std::string("oracle: ") + what + " leaks out of the irreducible subspace");
    return c;
}

// sparse action of an algebra element on a single carrier basis vector
std::vector<std::pair<long, Cplx>> apply_to_index(const Carrier& car,
                                                  const std::vector<CMat>& per_seed, long idx) {
    std::vector<std::pair<long, Cplx>> out;
    for (size_t i = 0; i < car.slots.size(); ++i) {
        const CMat& m = per_seed[car.slots[i]];
        int d = car.dims[i];
        long st = car.strides[i];
        long digit = (idx / st) % d;
        long base = idx - digit * st;
        for (int j = 0; j < d; ++j) {
            Cplx c = m(j, static_cast<int>(digit));
            if (std::abs(c) > 0) out.emplace_back(base + j * st, c);
        }
    }
    return out;
}

// highest vector of weight mu inside the cheapest tensor power that holds one:
// the joint null space of the raising operators on the weight-mu subspace
struct HighestVector {
    std::vector<int> slots;
    CVec v0;  // carrier coordinates
};

std::optional<HighestVector> find_highest_vector(const MatrixAlgebra& alg, const RatVec& mu, int cap) {
    int ns = static_cast<int>(alg.seeds.size());
    RatMat pi_cols = mat_from_cols(alg.rs.simple_roots(), alg.rs.ambient());
    std::vector<int> counts(ns, 0);

    auto try_composition = [&]() -> std::optional<HighestVector> {
        RatVec top(static_cast<size_t>(alg.rs.ambient()), Rational(0));
        std::vector<int> slots;
        for (int s = 0; s < ns; ++s) {
            for (int c = 0; c < counts[s]; ++c) slots.push_back(s);
            top = vec_add(top, vec_scale(Rational(counts[s]), alg.seeds[s].highest));
        }
        // mu must sit below the carrier's top weight in the root order
        auto gap = rat_solve_any(pi_cols, vec_sub(top, mu));
        if (!gap) return std::nullopt;
        for (const auto& c : *gap)
            if (!is_integer(c) || c < 0) return std::nullopt;

        Carrier car(alg, slots);
        std::vector<long> indices;
        for (long idx = 0; idx < car.total; ++idx)
            if (car.weight_of_index(idx, alg.rs.ambient()) == mu) indices.push_back(idx);
        if (indices.empty()) return std::nullopt;

        // stack the raising actions, restricted to the rows they can reach
        std::map<long, int> row_of;
        std::vector<std::vector<std::pair<int, Cplx>>> cols(indices.size());
        for (const auto& r : alg.simple_raise) {
            auto ops = per_seed_ops(alg, r);
            for (size_t j = 0; j < indices.size(); ++j)
                for (auto [tgt, c] : apply_to_index(car, ops, indices[j])) {
                    auto [it, fresh] = row_of.try_emplace(tgt, static_cast<int>(row_of.size()));
                    (void)fresh;
                    cols[j].emplace_back(it->second, c);
                }
        }
        CMat m = CMat::Zero(std::max<size_t>(row_of.size(), 1), indices.size());
        for (size_t j = 0; j < indices.size(); ++j)
            for (auto [row, c] : cols[j]) m(row, static_cast<int>(j)) += c;
        auto null = svd_null_space(m, 1e-10);
        if (null.empty()) return std::nullopt;

        HighestVector hv;
        hv.slots = slots;
        hv.v0 = CVec::Zero(car.total);
        for (size_t j = 0; j < indices.size(); ++j) hv.v0(indices[j]) = null[0](static_cast<int>(j));
        hv.v0.normalize();
        return hv;
    };

    for (int total = 0; total <= cap; ++total) {
        // first seeds take the largest counts; deterministic order
        std::optional<HighestVector> found;
        auto rec = [&](auto&& self, int s, int remaining) -> bool {
            if (s == ns) {
                if (remaining != 0) return false;
                found = try_composition();
                return found.has_value();
            }
            for (int c = remaining; c >= 0; --c) {
                counts[s] = c;
                if (self(self, s + 1, remaining - c)) return true;
            }
            counts[s] = 0;
            return false;
        };
        if (rec(rec, 0, total)) return found;
    }
    return std::nullopt;
}

}  // namespace

Irrep build_irrep(const MatrixAlgebra& alg, const RatVec& omega) {
    Irrep rep;
    rep.omega = omega;
    rep.omega_standard = alg.rs.dominant_representative(omega).first;
    const RatVec& mu = rep.omega_standard;
    if (!alg.model_lattice.contains(mu))
        throw std::invalid_argument("build_irrep: " + format_vec(omega) +
                                    " is not analytically integral for the " + alg.name + " model group");

    auto hv = find_highest_vector(alg, mu, 6);
    if (!hv)
        throw std::invalid_argument("build_irrep: " + format_vec(omega) +
                                    " unreachable inside tensor powers of degree <= 6");
    rep.carrier_slots = hv->slots;
    Carrier car(alg, hv->slots);
    CVec v0 = hv->v0;
    for (const auto& r : alg.simple_raise) {
        if (car.apply(per_seed_ops(alg, r), v0).norm() > kLooseTol)
            throw std::logic_error("build_irrep: highest vector not annihilated by raising operators");
    }

    std::vector<std::vector<CMat>> lower_ops;
    for (const auto& l : alg.simple_lower) lower_ops.push_back(per_seed_ops(alg, l));

    rep.basis.push_back(v0);
    rep.weights.push_back(mu);
    // generate by repeated lowering; vectors stay weight-pure, so
    // orthogonalization only ever touches the same weight space
    std::map<RatVec, std::vector<int>, VecLess> by_weight;
    by_weight[mu] = {0};
    for (size_t head = 0; head < rep.basis.size(); ++head) {
        CVec current = rep.basis[head];  // copy: push_back may reallocate
        for (size_t li = 0; li < lower_ops.size(); ++li) {
            CVec w = car.apply(lower_ops[li], current);
            double before = w.norm();
            if (before < 1e-12) continue;
            RatVec wt = vec_sub(rep.weights[head], alg.rs.simple_roots()[li]);
            auto& bucket = by_weight[wt];
            for (int pass = 0; pass < 2; ++pass)
                for (int b : bucket) w -= rep.basis[b].dot(w) * rep.basis[b];
            if (w.norm() > 1e-9 * (1.0 + before)) {
                w.normalize();
                bucket.push_back(static_cast<int>(rep.basis.size()));
                rep.basis.push_back(w);
                rep.weights.push_back(wt);
            }
        }
    }
    rep.dim = static_cast<int>(rep.basis.size());

    BigInt expect = alg.rs.weyl_dimension(mu);
    if (BigInt(rep.dim) != expect)
        throw std::logic_error("build_irrep: dimension " + std::to_string(rep.dim) +
                               " does not match the Weyl formula value " + expect.str());

    for (const auto& k : alg.k_basis) {
        auto ops = per_seed_ops(alg, k);
        CMat kr(rep.dim, rep.dim);
        for (int b = 0; b < rep.dim; ++b)
            kr.col(b) = restrict_coords(rep.basis, car.apply(ops, rep.basis[b]), "k action");
        rep.k_action.push_back(std::move(kr));
    }

    for (const auto& u : alg.torus_gens) {
        auto ops = per_seed_ops(alg, u);
        std::vector<long> freqs;
        for (int b = 0; b < rep.dim; ++b) {
            CVec img = car.apply(ops, rep.basis[b]);
            Cplx nu = rep.basis[b].dot(img);
            if ((img - nu * rep.basis[b]).norm() > kLooseTol * (1.0 + img.norm()))
                throw std::logic_error("build_irrep: torus generator not diagonal on the weight basis");
            double f = nu.imag() / (2 * std::numbers::pi);
            long fi = std::lround(f);
            if (std::abs(f - static_cast<double>(fi)) > 1e-6 || std::abs(nu.real()) > kLooseTol)
                throw std::logic_error("build_irrep: non-integral torus frequency");
            freqs.push_back(fi);
        }
        rep.torus_freq.push_back(std::move(freqs));
    }
    return rep;
}

std::vector<CVec> k_invariants(const Irrep& irrep, double tol) {
    if (irrep.k_action.empty()) return {};
    int d = irrep.dim;
    int kd = static_cast<int>(irrep.k_action.size());
    CMat stacked(kd * d, d);
    for (int e = 0; e < kd; ++e) stacked.middleRows(e * d, d) = irrep.k_action[e];
    return svd_null_space(stacked, tol);
}

WeightSet support_of(const Irrep& irrep, const CVec& v, double tol) {
    if (v.size() != irrep.dim) throw std::invalid_argument("support_of: coordinate length mismatch");
    if (v.norm() < tol) throw std::invalid_argument("support_of: zero vector");
    std::map<RatVec, double, VecLess> norms;
    for (int b = 0; b < irrep.dim; ++b) norms[irrep.weights[b]] += std::norm(v(b));
    WeightSet out;
    for (const auto& [w, n2] : norms)
        if (std::sqrt(n2) > tol) out.insert(w);
    return out;
}

int reynolds_exactness_threshold(const Irrep& irrep) {
    long maxf = 0;
    for (const auto& fv : irrep.torus_freq)
        for (long f : fv) maxf = std::max(maxf, std::abs(f));
    return static_cast<int>(2 * maxf + 1);
}

Cplx reynolds_RA(const Irrep& irrep, const CVec& v, const CVec& u, int samples, std::string* warning) {
    if (v.size() != irrep.dim || u.size() != irrep.dim)
        throw std::invalid_argument("reynolds_RA: coordinate length mismatch");
    if (samples < 1) throw std::invalid_argument("reynolds_RA: samples must be positive");
    int need = reynolds_exactness_threshold(irrep);
    if (samples < need && warning)
        *warning = "samples " + std::to_string(samples) + " below the exactness threshold " +
                   std::to_string(need);
    int q = static_cast<int>(irrep.torus_freq.size());
    long grid = 1;
    for (int j = 0; j < q; ++j) grid *= samples;
    Cplx total = 0;
    std::vector<int> k(q, 0);
    for (long step = 0; step < grid; ++step) {
        Cplx point = 0;
        for (int b = 0; b < irrep.dim; ++b) {
            double phase = 0;
            for (int j = 0; j < q; ++j)
                phase += 2 * std::numbers::pi * irrep.torus_freq[j][b] * k[j] / static_cast<double>(samples);
            point += v(b) * std::conj(u(b)) * std::polar(1.0, phase);
        }
        total += point;
        for (int j = q - 1; j >= 0; --j) {
            if (++k[j] < samples) break;
            k[j] = 0;
        }
    }
    return total / static_cast<double>(grid);
}

Cplx reynolds_exact(const Irrep& irrep, const CVec& v, const CVec& u) {
    Cplx total = 0;
    for (int b = 0; b < irrep.dim; ++b) {
        bool zero = true;
        for (const auto& fv : irrep.torus_freq)
            if (fv[b] != 0) zero = false;
        if (zero) total += v(b) * std::conj(u(b));
    }
    return total;
}

CVec half_turn_phases(const MatrixAlgebra& alg, const Irrep& irrep, const RatVec& xdual) {
    // the Cartan element x dual to xdual: lambda(x) = (lambda, xdual)
    RatVec coeffs = mat_apply(alg.rs.gram(), xdual);
    CMat x = CMat::Zero(alg.mat_dim, alg.mat_dim);
    for (size_t k = 0; k < alg.anchors.size(); ++k) x += rat_to_double(coeffs[k]) * alg.anchors[k];

    Carrier car(alg, irrep.carrier_slots);
    auto ops = per_seed_ops(alg, x);
    CVec phases(irrep.dim);
    for (int b = 0; b < irrep.dim; ++b) {
        CVec img = car.apply(ops, irrep.basis[b]);
        Cplx ev = irrep.basis[b].dot(img);
        Rational exact = alg.rs.inner(irrep.weights[b], xdual);
        if (std::abs(ev - Cplx(rat_to_double(exact), 0)) > kLooseTol * (1.0 + std::abs(ev)))
            throw std::logic_error("half_turn_phases: matrix evaluation disagrees with the weight label");
        phases(b) = std::polar(1.0, std::numbers::pi * ev.real());
    }
    return phases;
}

// ---- exact su2 path ------------------------------------------------------

namespace {

// action of a 2x2 matrix pattern on slot `slot` of a rational tensor vector
void su2_slot_apply(std::vector<Rational>& out, const std::vector<Rational>& v, int m, int slot,
                    int to, int from, const Rational& coeff) {
    long st = 1;
    for (int i = m - 1; i > slot; --i) st *= 2;
    long total = static_cast<long>(v.size());
    long block = st * 2;
    for (long a = 0; a < total / block; ++a)
        for (long b = 0; b < st; ++b) out[a * block + to * st + b] += coeff * v[a * block + from * st + b];
}

}  // namespace

std::optional<WeightSet> su2_exact_invariant_support(int m) {
    if (m < 0 || m > 12) throw std::invalid_argument("su2_exact_invariant_support: m out of range");
    long total = 1L << m;
    std::vector<Rational> hw(total, Rational(0));
    hw[0] = 1;

    // lowering chain F^k (hw); F = E10 acting on each slot
    std::vector<std::vector<Rational>> chain{hw};
    for (int k = 1; k <= m; ++k) {
        std::vector<Rational> next(total, Rational(0));
        for (int slot = 0; slot < m; ++slot) su2_slot_apply(next, chain.back(), m, slot, 1, 0, Rational(1));
        chain.push_back(std::move(next));
    }

    // k = so(2) is spanned by X - Y = E01 - E10
    RatMat sys(static_cast<int>(total), m + 1);
    for (int k = 0; k <= m; ++k) {
        std::vector<Rational> img(total, Rational(0));
        for (int slot = 0; slot < m; ++slot) {
            su2_slot_apply(img, chain[k], m, slot, 0, 1, Rational(1));
            su2_slot_apply(img, chain[k], m, slot, 1, 0, Rational(-1));
        }
        for (long r = 0; r < total; ++r) sys(static_cast<int>(r), k) = img[r];
    }
    auto kernel = rat_kernel(sys);
    if (kernel.size() > 1) throw std::logic_error("su2_exact_invariant_support: invariant space too large");
    if (kernel.empty()) return std::nullopt;

    WeightSet supp;
    for (int k = 0; k <= m; ++k) {
        if (kernel[0][k] == 0) continue;
        supp.insert(RatVec{Rational(m - 2 * k, 2), Rational(-(m - 2 * k), 2)});
    }
    return supp;
}

}  // namespace radon

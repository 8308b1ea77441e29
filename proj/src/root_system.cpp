#include "radon/root_system.hpp"

#include <algorithm>
#include <stdexcept>

namespace radon {

Series series_from_char(char c) {
    switch (c) {
        case 'A': return Series::A;
        case 'B': return Series::B;
        case 'C': return Series::C;
        case 'D': return Series::D;
        case 'E': return Series::E;
        case 'F': return Series::F;
        case 'G': return Series::G;
        default: throw std::invalid_argument(std::string("unknown series '") + c + "'");
    }
}

long positive_count_formula(Series s, int n) {
    switch (s) {
        case Series::A: return static_cast<long>(n) * (n + 1) / 2;
        case Series::B:
        case Series::C: return static_cast<long>(n) * n;
        case Series::D: return static_cast<long>(n) * (n - 1);
        case Series::E: return n == 6 ? 36 : (n == 7 ? 63 : 120);
        case Series::F: return 24;
        case Series::G: return 6;
    }
    throw std::logic_error("positive_count_formula");
}

namespace {

struct FactorData {
    int ambient;
    std::vector<RatVec> simple;  // in local coordinates
    RatMat gram;                 // local Gram
};

void require(bool ok, const std::string& msg) {
    if (!ok) throw std::invalid_argument(msg);
}

RatVec unit(int dim, int i) {
    RatVec e(dim, Rational(0));
    e[i] = 1;
    return e;
}

// exceptional series: realization in the simple-root basis, Gram from the
// Cartan matrix and the length vector (long roots squared length 2)
FactorData exceptional(const std::vector<std::pair<int, int>>& edges,  // (i, j, bond multiplicity)
                       const std::vector<Rational>& sq_len, int rank,
                       const std::vector<int>& multiplicities) {
    FactorData f;
    f.ambient = rank;
    f.gram = RatMat(rank, rank);
    for (int i = 0; i < rank; ++i) {
        f.simple.push_back(unit(rank, i));
        f.gram(i, i) = sq_len[i];
    }
    for (size_t k = 0; k < edges.size(); ++k) {
        auto [i, j] = edges[k];
        // (a_i, a_j) = -sqrt(len_i len_j m)/2; for crystallographic bonds this
        // is rational: single bond equal lengths -> -len/2, multiple bonds
        // pair long with short so the product is len_short * m = len_long
        Rational prod = sq_len[i] * sq_len[j] * multiplicities[k];
        // prod must be the square of a rational; all cases here give 1 or 4
        Rational val = prod == 1 ? Rational(1) : prod == 4 ? Rational(2) : Rational(0);
        if (val == 0) throw std::logic_error("exceptional: unexpected bond data");
        f.gram(i, j) = f.gram(j, i) = -val / 2;
    }
    return f;
}

FactorData make_factor(Series s, int n) {
    FactorData f;
    switch (s) {
        case Series::A: {
            require(n >= 1, "A series needs rank >= 1");
            f.ambient = n + 1;
            f.gram = RatMat::identity(n + 1);
            for (int i = 0; i < n; ++i) {
                RatVec a(n + 1, Rational(0));
                a[i] = 1;
                a[i + 1] = -1;
                f.simple.push_back(a);
            }
            return f;
        }
        case Series::B: {
            require(n >= 2, "B series needs rank >= 2");
            f.ambient = n;
            f.gram = RatMat::identity(n);
            for (int i = 0; i + 1 < n; ++i) {
                RatVec a(n, Rational(0));
                a[i] = 1;
                a[i + 1] = -1;
                f.simple.push_back(a);
            }
            f.simple.push_back(unit(n, n - 1));
            return f;
        }
        case Series::C: {
            require(n >= 2, "C series needs rank >= 2");
            f.ambient = n;
            // halve the metric so the long roots 2 e_i keep squared length 2
            f.gram = RatMat(n, n);
            for (int i = 0; i < n; ++i) f.gram(i, i) = Rational(1, 2);
            for (int i = 0; i + 1 < n; ++i) {
                RatVec a(n, Rational(0));
                a[i] = 1;
                a[i + 1] = -1;
                f.simple.push_back(a);
            }
            RatVec last(n, Rational(0));
            last[n - 1] = 2;
            f.simple.push_back(last);
            return f;
        }
        case Series::D: {
            require(n >= 3, "D series needs rank >= 3");
            f.ambient = n;
            f.gram = RatMat::identity(n);
            for (int i = 0; i + 1 < n; ++i) {
                RatVec a(n, Rational(0));
                a[i] = 1;
                a[i + 1] = -1;
                f.simple.push_back(a);
            }
            RatVec a(n, Rational(0));
            a[n - 2] = 1;
            a[n - 1] = 1;
            f.simple.push_back(a);
            return f;
        }
        case Series::E: {
            require(n == 6 || n == 7 || n == 8, "E series needs rank 6, 7 or 8");
            std::vector<std::pair<int, int>> edges = {{0, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 3}};
            if (n >= 7) edges.push_back({5, 6});
            if (n == 8) edges.push_back({6, 7});
            std::vector<Rational> len(n, Rational(2));
            std::vector<int> mult(edges.size(), 1);
            return exceptional(edges, len, n, mult);
        }
        case Series::F: {
            require(n == 4, "F series needs rank 4");
            std::vector<std::pair<int, int>> edges = {{0, 1}, {1, 2}, {2, 3}};
            std::vector<Rational> len = {2, 2, 1, 1};
            std::vector<int> mult = {1, 2, 1};
            return exceptional(edges, len, 4, mult);
        }
        case Series::G: {
            require(n == 2, "G series needs rank 2");
            std::vector<std::pair<int, int>> edges = {{0, 1}};
            std::vector<Rational> len = {Rational(2, 3), 2};
            std::vector<int> mult = {3};
            return exceptional(edges, len, 2, mult);
        }
    }
    throw std::logic_error("make_factor");
}

}  // namespace

std::string RootSystem::label() const {
    std::string s;
    for (size_t i = 0; i < factors_.size(); ++i) {
        if (i) s += "x";
        s += static_cast<char>(factors_[i].series);
        s += std::to_string(factors_[i].rank);
    }
    return s;
}

Rational RootSystem::pairing(const RatVec& lambda, const RatVec& beta) const {
    Rational bb = inner(beta, beta);
    if (bb == 0) throw std::invalid_argument("pairing: beta must be nonzero");
    return 2 * inner(lambda, beta) / bb;
}

RatVec RootSystem::reflect(const RatVec& lambda, const RatVec& beta) const {
    return vec_sub(lambda, vec_scale(pairing(lambda, beta), beta));
}

bool RootSystem::is_root(const RatVec& v) const { return root_set_.count(v) > 0; }

bool RootSystem::is_positive_root(const RatVec& v) const {
    return std::find(positive_.begin(), positive_.end(), v) != positive_.end();
}

bool RootSystem::is_dominant(const RatVec& lambda, const std::vector<RatVec>& simple_set) const {
    for (const auto& a : simple_set)
        if (inner(lambda, a) < 0) return false;
    return true;
}

std::pair<RatVec, std::vector<int>> RootSystem::dominant_representative(
    const RatVec& lambda, const std::vector<RatVec>& reflections) const {
    RatVec cur = lambda;
    std::vector<int> word;
    for (int guard = 0; guard < 100000; ++guard) {
        int bad = -1;
        for (size_t i = 0; i < reflections.size(); ++i) {
            if (inner(cur, reflections[i]) < 0) {
                bad = static_cast<int>(i);
                break;
            }
        }
        if (bad < 0) return {cur, word};
        cur = reflect(cur, reflections[bad]);
        word.push_back(bad);
    }
    throw std::logic_error("dominant_representative: did not terminate");
}

bool RootSystem::is_algebraically_integral(const RatVec& lambda) const {
    for (const auto& a : simple_)
        if (!is_integer(pairing(lambda, a))) return false;
    return true;
}

std::vector<Rational> RootSystem::fundamental_coordinates(const RatVec& lambda,
                                                          const std::vector<RatVec>& simple_set) const {
    std::vector<Rational> c;
    for (const auto& a : simple_set) c.push_back(pairing(lambda, a));
    return c;
}

namespace {

// non-negative integer coordinates of v in the basis `cols`, or nullopt
std::optional<std::vector<BigInt>> nonneg_int_coords(const RatMat& cols, const RatVec& v) {
    auto x = rat_solve_any(cols, v);
    if (!x) return std::nullopt;
    std::vector<BigInt> out;
    for (const auto& c : *x) {
        if (!is_integer(c) || c < 0) return std::nullopt;
        out.push_back(to_bigint(c));
    }
    return out;
}

}  // namespace

WeightSet RootSystem::weights_of_rep(const RatVec& omega, const std::vector<RatVec>& simple_set) const {
    if (!is_dominant(omega, simple_set)) throw std::invalid_argument("weights_of_rep: omega not dominant");
    if (!is_algebraically_integral(omega))
        throw std::invalid_argument("weights_of_rep: omega not algebraically integral");
    RatMat cols = mat_from_cols(simple_set, ambient_);
    auto is_weight = [&](const RatVec& lam) {
        if (!nonneg_int_coords(cols, vec_sub(omega, lam))) return false;
        RatVec mu = dominant_representative(lam, simple_set).first;
        return nonneg_int_coords(cols, vec_sub(omega, mu)).has_value();
    };
    WeightSet seen;
    seen.insert(omega);
    std::vector<RatVec> queue{omega};
    while (!queue.empty()) {
        RatVec lam = queue.back();
        queue.pop_back();
        for (const auto& a : simple_set) {
            RatVec nxt = vec_sub(lam, a);
            if (seen.count(nxt)) continue;
            if (is_weight(nxt)) {
                seen.insert(nxt);
                queue.push_back(nxt);
            }
        }
    }
    return seen;
}

RatVec RootSystem::dual_highest_weight(const RatVec& omega, const std::vector<RatVec>& simple_set) const {
    if (!is_dominant(omega, simple_set)) throw std::invalid_argument("dual_highest_weight: omega not dominant");
    return dominant_representative(vec_neg(omega), simple_set).first;
}

BigInt RootSystem::weyl_dimension(const RatVec& omega) const {
    RatVec mu = dominant_representative(omega).first;
    RatVec delta(ambient_, Rational(0));
    for (const auto& a : positive_) delta = vec_add(delta, a);
    delta = vec_scale(Rational(1, 2), delta);
    Rational dim = 1;
    for (const auto& a : positive_) dim *= inner(vec_add(mu, delta), a) / inner(delta, a);
    if (!is_integer(dim)) throw std::logic_error("weyl_dimension: non-integer result");
    return to_bigint(dim);
}

std::vector<RatVec> RootSystem::dual_fundamental_for(const std::vector<RatVec>& simple_set) const {
    int r = static_cast<int>(simple_set.size());
    RatMat m(r, r);  // m(k, j) = <s_k, s_j>
    for (int k = 0; k < r; ++k)
        for (int j = 0; j < r; ++j) m(k, j) = pairing(simple_set[k], simple_set[j]);
    RatMat mt = mat_transpose(m);
    std::vector<RatVec> fund;
    for (int i = 0; i < r; ++i) {
        RatVec e(r, Rational(0));
        e[i] = 1;
        auto c = rat_solve(mt, e);
        if (!c) throw std::invalid_argument("dual_fundamental_for: simple set is degenerate");
        RatVec w(ambient_, Rational(0));
        for (int k = 0; k < r; ++k) w = vec_add(w, vec_scale((*c)[k], simple_set[k]));
        fund.push_back(std::move(w));
    }
    return fund;
}

RootSystem build_root_system(Series s, int rank) {
    return build_root_system(std::vector<SimpleFactor>{{s, rank}});
}

RootSystem build_root_system(const std::vector<SimpleFactor>& factors) {
    require(!factors.empty(), "build_root_system: no factors");
    RootSystem rs;
    rs.factors_ = factors;

    std::vector<FactorData> data;
    int total = 0;
    for (const auto& f : factors) {
        data.push_back(make_factor(f.series, f.rank));
        total += data.back().ambient;
    }
    rs.ambient_ = total;
    rs.gram_ = RatMat(total, total);
    int off = 0;
    for (const auto& d : data) {
        for (int i = 0; i < d.ambient; ++i)
            for (int j = 0; j < d.ambient; ++j) rs.gram_(off + i, off + j) = d.gram(i, j);
        for (const auto& a : d.simple) {
            RatVec v(total, Rational(0));
            for (int i = 0; i < d.ambient; ++i) v[off + i] = a[i];
            rs.simple_.push_back(std::move(v));
        }
        off += d.ambient;
    }

    int r = rs.rank();
    rs.cartan_ = RatMat(r, r);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) rs.cartan_(i, j) = rs.pairing(rs.simple_[i], rs.simple_[j]);

    // Cartan matrix sanity: 2 on the diagonal, non-positive integers off it
    for (int i = 0; i < r; ++i) {
        if (rs.cartan_(i, i) != 2) throw std::logic_error("Cartan diagonal != 2");
        for (int j = 0; j < r; ++j) {
            if (i == j) continue;
            if (!is_integer(rs.cartan_(i, j)) || rs.cartan_(i, j) > 0)
                throw std::logic_error("Cartan off-diagonal must be a non-positive integer");
        }
    }
    // positive definiteness of the Gram restricted to the simple-root span
    {
        RatMat sg(r, r);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j) sg(i, j) = rs.inner(rs.simple_[i], rs.simple_[j]);
        for (int k = 1; k <= r; ++k) {
            // leading principal minor via fraction-free elimination is
            // overkill here: do a rational determinant by elimination
            RatMat sub(k, k);
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < k; ++j) sub(i, j) = sg(i, j);
            Rational det = 1;
            for (int c = 0; c < k; ++c) {
                int p = -1;
                for (int i = c; i < k; ++i)
                    if (sub(i, c) != 0) {
                        p = i;
                        break;
                    }
                if (p < 0) {
                    det = 0;
                    break;
                }
                if (p != c) {
                    for (int j = 0; j < k; ++j) std::swap(sub(p, j), sub(c, j));
                    det = -det;
                }
                det *= sub(c, c);
                for (int i = c + 1; i < k; ++i) {
                    Rational f = sub(i, c) / sub(c, c);
                    for (int j = c; j < k; ++j) sub(i, j) -= f * sub(c, j);
                }
            }
            if (det <= 0) throw std::logic_error("Gram matrix not positive definite on root span");
        }
    }

    // positive roots by height: candidate beta + alpha_i is a root iff the
    // alpha_i-string through beta extends upward (q = p - <beta, alpha_i> >= 1)
    WeightSet pos_set;
    std::vector<RatVec> frontier = rs.simple_;
    for (const auto& a : rs.simple_) {
        if (pos_set.count(a)) throw std::invalid_argument("build_root_system: repeated simple root");
        pos_set.insert(a);
        rs.positive_.push_back(a);
    }
    while (!frontier.empty()) {
        std::vector<RatVec> next;
        for (const auto& beta : frontier) {
            for (const auto& alpha : rs.simple_) {
                RatVec cand = vec_add(beta, alpha);
                if (pos_set.count(cand)) continue;
                int p = 0;
                RatVec walk = vec_sub(beta, alpha);
                while (pos_set.count(walk)) {
                    ++p;
                    walk = vec_sub(walk, alpha);
                }
                Rational q = p - rs.pairing(beta, alpha);
                if (q >= 1) {
                    pos_set.insert(cand);
                    rs.positive_.push_back(cand);
                    next.push_back(cand);
                }
            }
        }
        frontier = std::move(next);
    }

    long expect = 0;
    for (const auto& f : factors) expect += positive_count_formula(f.series, f.rank);
    if (static_cast<long>(rs.positive_.size()) != expect)
        throw std::logic_error("positive-root closure does not match the classical count for " + rs.label());

    for (const auto& a : rs.positive_) {
        rs.root_set_.insert(a);
        rs.root_set_.insert(vec_neg(a));
    }

    rs.fundamental_ = rs.dual_fundamental_for(rs.simple_);
    return rs;
}

}  // namespace radon

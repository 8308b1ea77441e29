#include "radon/lattice.hpp"

#include <algorithm>
#include <stdexcept>

namespace radon {

namespace {

void col_axpy(IntMat& m, int dst, int src, const BigInt& f) {
    for (int r = 0; r < m.rows; ++r) m(r, dst) += f * m(r, src);
}

void col_swap(IntMat& m, int i, int j) {
    for (int r = 0; r < m.rows; ++r) std::swap(m(r, i), m(r, j));
}

void col_negate(IntMat& m, int i) {
    for (int r = 0; r < m.rows; ++r) m(r, i) = -m(r, i);
}

// floor division for big integers
BigInt fdiv(const BigInt& a, const BigInt& b) {
    BigInt q = a / b, r = a % b;
    if (r != 0 && ((r < 0) != (b < 0))) --q;
    return q;
}

}  // namespace

HnfResult hermite_form(const IntMat& a) {
    HnfResult res;
    res.h = a;
    res.u = IntMat(a.cols, a.cols);
    for (int i = 0; i < a.cols; ++i) res.u(i, i) = 1;
    IntMat& h = res.h;
    IntMat& u = res.u;

    int c = 0;
    for (int r = 0; r < a.rows && c < a.cols; ++r) {
        // gcd-reduce row r across columns >= c until one nonzero entry remains
        while (true) {
            int best = -1;
            for (int j = c; j < a.cols; ++j) {
                if (h(r, j) != 0 && (best < 0 || abs(h(r, j)) < abs(h(r, best)))) best = j;
            }
            if (best < 0) break;  // row is zero from column c on
            bool others = false;
            for (int j = c; j < a.cols; ++j) {
                if (j == best || h(r, j) == 0) continue;
                BigInt q = fdiv(h(r, j), h(r, best));
                col_axpy(h, j, best, -q);
                col_axpy(u, j, best, -q);
                if (h(r, j) != 0) others = true;
            }
            if (!others) {
                if (best != c) {
                    col_swap(h, best, c);
                    col_swap(u, best, c);
                }
                if (h(r, c) < 0) {
                    col_negate(h, c);
                    col_negate(u, c);
                }
                // reduce earlier pivot columns against this pivot row
                for (int j = 0; j < c; ++j) {
                    BigInt q = fdiv(h(r, j), h(r, c));
                    if (q != 0) {
                        col_axpy(h, j, c, -q);
                        col_axpy(u, j, c, -q);
                    }
                }
                res.pivot_rows.push_back(r);
                ++c;
                break;
            }
        }
    }
    res.rank = c;
    return res;
}

std::optional<IntVec> solve_in_span(const HnfResult& hnf, const IntVec& v) {
    const IntMat& h = hnf.h;
    if (static_cast<int>(v.size()) != h.rows) throw std::invalid_argument("solve_in_span: dimension mismatch");
    IntVec rem = v;
    IntVec y(hnf.rank, BigInt(0));
    for (int k = 0; k < hnf.rank; ++k) {
        int r = hnf.pivot_rows[k];
        const BigInt& p = h(r, k);
        if (rem[r] % p != 0) return std::nullopt;
        BigInt q = rem[r] / p;
        y[k] = q;
        if (q != 0)
            for (int i = 0; i < h.rows; ++i) rem[i] -= q * h(i, k);
    }
    for (const BigInt& x : rem)
        if (x != 0) return std::nullopt;
    return y;
}

std::vector<IntVec> integer_kernel(const IntMat& a) {
    HnfResult hnf = hermite_form(a);
    std::vector<IntVec> basis;
    for (int j = hnf.rank; j < a.cols; ++j) {
        bool zero = true;
        for (int r = 0; r < a.rows; ++r)
            if (hnf.h(r, j) != 0) zero = false;
        if (!zero) throw std::logic_error("integer_kernel: non-echelon tail column");
        IntVec v(a.cols);
        for (int i = 0; i < a.cols; ++i) v[i] = hnf.u(i, j);
        basis.push_back(std::move(v));
    }
    return basis;
}

IntegerLattice::IntegerLattice(int ambient, std::vector<RatVec> generators)
    : ambient_(ambient), gens_(std::move(generators)) {
    for (const auto& g : gens_) {
        if (static_cast<int>(g.size()) != ambient_)
            throw std::invalid_argument("IntegerLattice: generator dimension mismatch");
        for (const auto& c : g) denom_ = lcm(denom_, den(c));
    }
    igens_ = IntMat(ambient_, static_cast<int>(gens_.size()));
    for (size_t j = 0; j < gens_.size(); ++j)
        for (int i = 0; i < ambient_; ++i) igens_(i, static_cast<int>(j)) = to_bigint(denom_ * gens_[j][i]);
    hnf_ = hermite_form(igens_);
}

std::optional<IntVec> IntegerLattice::hnf_coordinates(const RatVec& v) const {
    if (static_cast<int>(v.size()) != ambient_) throw std::invalid_argument("lattice: dimension mismatch");
    IntVec t(ambient_);
    for (int i = 0; i < ambient_; ++i) {
        Rational scaled = denom_ * v[i];
        if (!is_integer(scaled)) return std::nullopt;
        t[i] = to_bigint(scaled);
    }
    return solve_in_span(hnf_, t);
}

bool IntegerLattice::contains(const RatVec& v) const { return hnf_coordinates(v).has_value(); }

std::optional<IntVec> IntegerLattice::coordinates(const RatVec& v) const {
    auto y = hnf_coordinates(v);
    if (!y) return std::nullopt;
    // map HNF-basis coordinates back through U: x = U * [y; 0]
    IntVec x(gens_.size(), BigInt(0));
    for (size_t i = 0; i < gens_.size(); ++i)
        for (int k = 0; k < hnf_.rank; ++k) x[i] += hnf_.u(static_cast<int>(i), k) * (*y)[k];
    return x;
}

RatVec IntegerLattice::residue(const RatVec& v) const {
    if (static_cast<int>(v.size()) != ambient_) throw std::invalid_argument("lattice: dimension mismatch");
    RatVec rem(ambient_);
    for (int i = 0; i < ambient_; ++i) rem[i] = denom_ * v[i];
    for (int k = 0; k < hnf_.rank; ++k) {
        int r = hnf_.pivot_rows[k];
        const BigInt& p = hnf_.h(r, k);
        // largest integer multiple of the pivot column we can subtract
        Rational q = rem[r] / Rational(p);
        BigInt qi = fdiv(num(q), den(q));
        if (qi != 0)
            for (int i = 0; i < ambient_; ++i) rem[i] -= Rational(qi * hnf_.h(i, k));
    }
    for (auto& c : rem) c /= Rational(denom_);
    return rem;
}

std::vector<RatVec> IntegerLattice::basis() const {
    std::vector<RatVec> b;
    for (int k = 0; k < hnf_.rank; ++k) {
        RatVec v(ambient_);
        for (int i = 0; i < ambient_; ++i) v[i] = Rational(hnf_.h(i, k)) / Rational(denom_);
        b.push_back(std::move(v));
    }
    return b;
}

bool lattice_subset(const IntegerLattice& sub, const IntegerLattice& sup) {
    for (const auto& g : sub.generators())
        if (!sup.contains(g)) return false;
    return true;
}

BigInt lattice_index(const IntegerLattice& sub, const IntegerLattice& sup) {
    if (sub.rank() != sup.rank()) throw std::invalid_argument("lattice_index: ranks differ (infinite index)");
    int r = sup.rank();
    IntMat x(r, r);
    auto sub_basis = sub.basis();
    for (int j = 0; j < r; ++j) {
        auto y = sup.hnf_coordinates(sub_basis[j]);
        if (!y) throw std::invalid_argument("lattice_index: not a sublattice");
        for (int i = 0; i < r; ++i) x(i, j) = (*y)[i];
    }
    HnfResult h = hermite_form(x);
    if (h.rank != r) throw std::invalid_argument("lattice_index: sublattice has lower rank");
    BigInt det = 1;
    for (int k = 0; k < r; ++k) det *= h.h(h.pivot_rows[k], k);
    return abs(det);
}

IntegerLattice lattice_intersection(const IntegerLattice& x, const IntegerLattice& y) {
    if (x.ambient() != y.ambient()) throw std::invalid_argument("lattice_intersection: ambient mismatch");
    int n = x.ambient();
    BigInt d = lcm(x.denom_, y.denom_);
    BigInt fx = d / x.denom_, fy = d / y.denom_;
    int mx = x.igens_.cols, my = y.igens_.cols;
    IntMat stacked(n, mx + my);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < mx; ++j) stacked(i, j) = fx * x.igens_(i, j);
        for (int j = 0; j < my; ++j) stacked(i, mx + j) = -fy * y.igens_(i, j);
    }
    std::vector<RatVec> gens;
    for (const auto& k : integer_kernel(stacked)) {
        RatVec g(n, Rational(0));
        for (int j = 0; j < mx; ++j)
            for (int i = 0; i < n; ++i) g[i] += Rational(fx * x.igens_(i, j) * k[j], d);
        gens.push_back(std::move(g));
    }
    return IntegerLattice(n, gens);
}

}  // namespace radon

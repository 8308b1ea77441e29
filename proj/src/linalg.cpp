#include "radon/linalg.hpp"

#include <cassert>
#include <stdexcept>

namespace radon {

RatMat RatMat::identity(int n) {
    RatMat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

RatVec RatMat::col(int c) const {
    RatVec v(rows);
    for (int r = 0; r < rows; ++r) v[r] = (*this)(r, c);
    return v;
}

RatVec RatMat::row(int r) const {
    RatVec v(cols);
    for (int c = 0; c < cols; ++c) v[c] = (*this)(r, c);
    return v;
}

bool operator==(const RatMat& x, const RatMat& y) {
    return x.rows == y.rows && x.cols == y.cols && x.a == y.a;
}

RatVec vec_add(const RatVec& x, const RatVec& y) {
    assert(x.size() == y.size());
    RatVec z(x.size());
    for (size_t i = 0; i < x.size(); ++i) z[i] = x[i] + y[i];
    return z;
}

RatVec vec_sub(const RatVec& x, const RatVec& y) {
    assert(x.size() == y.size());
    RatVec z(x.size());
    for (size_t i = 0; i < x.size(); ++i) z[i] = x[i] - y[i];
    return z;
}

RatVec vec_scale(const Rational& c, const RatVec& x) {
    RatVec z(x.size());
    for (size_t i = 0; i < x.size(); ++i) z[i] = c * x[i];
    return z;
}

RatVec vec_neg(const RatVec& x) { return vec_scale(Rational(-1), x); }

bool vec_is_zero(const RatVec& x) {
    for (const auto& c : x)
        if (c != 0) return false;
    return true;
}

bool vec_less(const RatVec& x, const RatVec& y) {
    if (x.size() != y.size()) return x.size() < y.size();
    for (size_t i = 0; i < x.size(); ++i) {
        if (x[i] != y[i]) return x[i] < y[i];
    }
    return false;
}

std::string format_vec(const RatVec& v) {
    std::string s = "[";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ", ";
        s += to_string(v[i]);
    }
    return s + "]";
}

RatVec mat_apply(const RatMat& m, const RatVec& x) {
    if (static_cast<int>(x.size()) != m.cols) throw std::invalid_argument("mat_apply: dimension mismatch");
    RatVec y(m.rows);
    for (int r = 0; r < m.rows; ++r) {
        Rational s = 0;
        for (int c = 0; c < m.cols; ++c) s += m(r, c) * x[c];
        y[r] = s;
    }
    return y;
}

RatMat mat_mul(const RatMat& x, const RatMat& y) {
    if (x.cols != y.rows) throw std::invalid_argument("mat_mul: dimension mismatch");
    RatMat z(x.rows, y.cols);
    for (int r = 0; r < x.rows; ++r)
        for (int k = 0; k < x.cols; ++k) {
            if (x(r, k) == 0) continue;
            for (int c = 0; c < y.cols; ++c) z(r, c) += x(r, k) * y(k, c);
        }
    return z;
}

RatMat mat_transpose(const RatMat& m) {
    RatMat t(m.cols, m.rows);
    for (int r = 0; r < m.rows; ++r)
        for (int c = 0; c < m.cols; ++c) t(c, r) = m(r, c);
    return t;
}

RatMat mat_from_cols(const std::vector<RatVec>& cols, int dim) {
    RatMat m(dim, static_cast<int>(cols.size()));
    for (size_t c = 0; c < cols.size(); ++c) {
        if (static_cast<int>(cols[c].size()) != dim)
            throw std::invalid_argument("mat_from_cols: column dimension mismatch");
        for (int r = 0; r < dim; ++r) m(r, static_cast<int>(c)) = cols[c][r];
    }
    return m;
}

Rational bilinear(const RatMat& g, const RatVec& x, const RatVec& y) {
    RatVec gy = mat_apply(g, y);
    Rational s = 0;
    for (size_t i = 0; i < x.size(); ++i) s += x[i] * gy[i];
    return s;
}

namespace {

// row echelon with full pivoting bookkeeping; returns pivot columns
std::vector<int> echelonize(RatMat& m, std::vector<RatVec>* rhs) {
    std::vector<int> pivot_cols;
    int r = 0;
    for (int c = 0; c < m.cols && r < m.rows; ++c) {
        int p = -1;
        for (int i = r; i < m.rows; ++i) {
            if (m(i, c) != 0) {
                p = i;
                break;
            }
        }
        if (p < 0) continue;
        if (p != r) {
            for (int j = 0; j < m.cols; ++j) std::swap(m(p, j), m(r, j));
            if (rhs)
                for (auto& b : *rhs) std::swap(b[p], b[r]);
        }
        Rational inv = Rational(1) / m(r, c);
        for (int j = c; j < m.cols; ++j) m(r, j) *= inv;
        if (rhs)
            for (auto& b : *rhs) b[r] *= inv;
        for (int i = 0; i < m.rows; ++i) {
            if (i == r || m(i, c) == 0) continue;
            Rational f = m(i, c);
            for (int j = c; j < m.cols; ++j) m(i, j) -= f * m(r, j);
            if (rhs)
                for (auto& b : *rhs) b[i] -= f * b[r];
        }
        pivot_cols.push_back(c);
        ++r;
    }
    return pivot_cols;
}

}  // namespace

std::optional<RatVec> rat_solve(const RatMat& a, const RatVec& b) {
    if (a.rows != a.cols) return std::nullopt;
    return rat_solve_any(a, b);
}

std::optional<RatVec> rat_solve_any(const RatMat& a, const RatVec& b) {
    if (static_cast<int>(b.size()) != a.rows) throw std::invalid_argument("rat_solve_any: rhs size");
    RatMat m = a;
    std::vector<RatVec> rhs{b};
    std::vector<int> pivots = echelonize(m, &rhs);
    const RatVec& rb = rhs[0];
    // consistency: zero rows must have zero rhs
    for (int i = static_cast<int>(pivots.size()); i < m.rows; ++i)
        if (rb[i] != 0) return std::nullopt;
    RatVec x(a.cols, Rational(0));
    for (size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = rb[k];
    return x;
}

std::vector<RatVec> rat_kernel(const RatMat& a) {
    RatMat m = a;
    std::vector<int> pivots = echelonize(m, nullptr);
    std::vector<bool> is_pivot(a.cols, false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<RatVec> basis;
    for (int c = 0; c < a.cols; ++c) {
        if (is_pivot[c]) continue;
        RatVec v(a.cols, Rational(0));
        v[c] = 1;
        for (size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -m(static_cast<int>(k), c);
        basis.push_back(std::move(v));
    }
    return basis;
}

int rat_rank(RatMat a) { return static_cast<int>(echelonize(a, nullptr).size()); }

}  // namespace radon

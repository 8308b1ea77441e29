#pragma once

// Small dense exact-rational vectors and matrices. Sizes here are root-system
// sized (ambient dimension <= 8ish), so simple Gaussian elimination is plenty.

#include "radon/rational.hpp"

#include <optional>
#include <vector>

namespace radon {

using RatVec = std::vector<Rational>;

struct RatMat {
    int rows = 0, cols = 0;
    std::vector<Rational> a;

    RatMat() = default;
    RatMat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}

    Rational& operator()(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
    const Rational& operator()(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }

    static RatMat identity(int n);
    RatVec col(int c) const;
    RatVec row(int r) const;
};

bool operator==(const RatMat& x, const RatMat& y);

RatVec vec_add(const RatVec& x, const RatVec& y);
RatVec vec_sub(const RatVec& x, const RatVec& y);
RatVec vec_scale(const Rational& c, const RatVec& x);
RatVec vec_neg(const RatVec& x);
bool vec_is_zero(const RatVec& x);

// strict lexicographic order, usable as a set comparator
bool vec_less(const RatVec& x, const RatVec& y);

// "[a, b, c]" with rationals as p/q
std::string format_vec(const RatVec& v);

RatVec mat_apply(const RatMat& m, const RatVec& x);
RatMat mat_mul(const RatMat& x, const RatMat& y);
RatMat mat_transpose(const RatMat& m);
RatMat mat_from_cols(const std::vector<RatVec>& cols, int dim);

// x^T g y
Rational bilinear(const RatMat& g, const RatVec& x, const RatVec& y);

// unique solution of a square nonsingular system; nullopt when singular or
// inconsistent is not distinguished -- callers that care use rat_solve_any
std::optional<RatVec> rat_solve(const RatMat& a, const RatVec& b);

// any solution of a (possibly non-square) consistent system, nullopt if none
std::optional<RatVec> rat_solve_any(const RatMat& a, const RatVec& b);

// basis of the rational null space of a
std::vector<RatVec> rat_kernel(const RatMat& a);

int rat_rank(RatMat a);

}  // namespace radon

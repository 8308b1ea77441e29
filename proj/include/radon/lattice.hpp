#pragma once

// Exact integer-lattice arithmetic on top of a column-style Hermite normal
// form. Lattices are given by rational generator vectors; denominators are
// cleared once at construction so every query is integer arithmetic.

#include "radon/linalg.hpp"

#include <optional>
#include <vector>

namespace radon {

using IntVec = std::vector<BigInt>;

struct IntMat {
    int rows = 0, cols = 0;
    std::vector<BigInt> a;

    IntMat() = default;
    IntMat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}

    BigInt& operator()(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
    const BigInt& operator()(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }
};

// Column-style Hermite normal form H = A * U with U unimodular. Pivot columns
// come first, pivots are positive, pivot rows strictly increase, and entries
// of a pivot row in earlier columns are reduced modulo the pivot.
struct HnfResult {
    IntMat h;
    IntMat u;
    std::vector<int> pivot_rows;  // pivot_rows[k] = row of the pivot in column k
    int rank = 0;
};

HnfResult hermite_form(const IntMat& a);

// integer x with A x = v, if one exists
std::optional<IntVec> solve_in_span(const HnfResult& hnf, const IntVec& v);

// basis of { x in Z^cols : A x = 0 }
std::vector<IntVec> integer_kernel(const IntMat& a);

class IntegerLattice {
  public:
    IntegerLattice() = default;
    // generators are rational vectors of length `ambient`
    IntegerLattice(int ambient, std::vector<RatVec> generators);

    int ambient() const { return ambient_; }
    int rank() const { return hnf_.rank; }
    const std::vector<RatVec>& generators() const { return gens_; }

    bool contains(const RatVec& v) const;

    // coordinates of v with respect to the original generator list
    std::optional<IntVec> coordinates(const RatVec& v) const;

    // canonical leftover of v after greedy reduction against the HNF basis;
    // zero exactly when v is a member
    RatVec residue(const RatVec& v) const;

    // a basis of the lattice (the nonzero HNF columns, rescaled)
    std::vector<RatVec> basis() const;

  private:
    friend BigInt lattice_index(const IntegerLattice& sub, const IntegerLattice& sup);
    friend IntegerLattice lattice_intersection(const IntegerLattice& x, const IntegerLattice& y);

    // coordinates of v in the HNF basis columns (integer), if a member
    std::optional<IntVec> hnf_coordinates(const RatVec& v) const;

    int ambient_ = 0;
    std::vector<RatVec> gens_;
    BigInt denom_ = 1;  // denom_ * gens are integer vectors
    IntMat igens_;
    HnfResult hnf_;
};

bool lattice_subset(const IntegerLattice& sub, const IntegerLattice& sup);

// index [sup : sub]; throws if sub does not span sup rationally
BigInt lattice_index(const IntegerLattice& sub, const IntegerLattice& sup);

IntegerLattice lattice_intersection(const IntegerLattice& x, const IntegerLattice& y);

}  // namespace radon

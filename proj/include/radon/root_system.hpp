#pragma once

// Exact rational root systems: Cartan data, positive-root closure, Weyl
// reflections, dominance, representation weight sets. All realizations keep
// rational coordinates; length normalization lives in the Gram matrix, so
// "long roots have squared length 2" holds without irrational scaling.

#include "radon/lattice.hpp"
#include "radon/linalg.hpp"

#include <set>
#include <string>
#include <vector>

namespace radon {

enum class Series : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

Series series_from_char(char c);

struct SimpleFactor {
    Series series;
    int rank;
};

// Weights are plain rational vectors in the realization space; integer
// fundamental-weight coordinates are derived views (fundamental_coordinates,
// SpaceSpec::weight_coordinates), recomputable and never stored out of sync.
struct VecLess {
    bool operator()(const RatVec& a, const RatVec& b) const { return vec_less(a, b); }
};

using WeightSet = std::set<RatVec, VecLess>;

class RootSystem {
  public:
    RootSystem() = default;  // empty placeholder; build_root_system makes real ones

    const std::vector<SimpleFactor>& factors() const { return factors_; }
    std::string label() const;
    int ambient() const { return ambient_; }
    int rank() const { return static_cast<int>(simple_.size()); }

    const RatMat& gram() const { return gram_; }
    const std::vector<RatVec>& simple_roots() const { return simple_; }
    const std::vector<RatVec>& positive_roots() const { return positive_; }
    const std::vector<RatVec>& fundamental_weights() const { return fundamental_; }
    const RatMat& cartan_matrix() const { return cartan_; }

    Rational inner(const RatVec& x, const RatVec& y) const { return bilinear(gram_, x, y); }

    // <lambda, beta> = 2 (lambda, beta) / (beta, beta); beta must be nonzero
    Rational pairing(const RatVec& lambda, const RatVec& beta) const;

    RatVec reflect(const RatVec& lambda, const RatVec& beta) const;

    bool is_root(const RatVec& v) const;
    bool is_positive_root(const RatVec& v) const;

    bool is_dominant(const RatVec& lambda) const { return is_dominant(lambda, simple_); }
    bool is_dominant(const RatVec& lambda, const std::vector<RatVec>& simple_set) const;

    // unique dominant element of the reflection-group orbit, plus the indices
    // (into `reflections`) of the reflections applied, in application order
    std::pair<RatVec, std::vector<int>> dominant_representative(const RatVec& lambda,
                                                                const std::vector<RatVec>& reflections) const;
    std::pair<RatVec, std::vector<int>> dominant_representative(const RatVec& lambda) const {
        return dominant_representative(lambda, simple_);
    }

    bool is_algebraically_integral(const RatVec& lambda) const;

    // coordinates <lambda, alpha_i> in the fundamental-weight basis
    std::vector<Rational> fundamental_coordinates(const RatVec& lambda,
                                                  const std::vector<RatVec>& simple_set) const;

    // full weight set of the irreducible representation with highest weight
    // omega (dominant for `simple_set`), without multiplicities
    WeightSet weights_of_rep(const RatVec& omega, const std::vector<RatVec>& simple_set) const;
    WeightSet weights_of_rep(const RatVec& omega) const { return weights_of_rep(omega, simple_); }

    // omega* = -w0(omega), computed as the dominant representative of -omega
    RatVec dual_highest_weight(const RatVec& omega, const std::vector<RatVec>& simple_set) const;
    RatVec dual_highest_weight(const RatVec& omega) const { return dual_highest_weight(omega, simple_); }

    IntegerLattice root_lattice() const { return IntegerLattice(ambient_, simple_); }
    IntegerLattice weight_lattice() const { return IntegerLattice(ambient_, fundamental_); }

    BigInt weyl_dimension(const RatVec& omega) const;

    // dual basis to a linearly independent simple set: <w_i, s_j> = delta_ij
    std::vector<RatVec> dual_fundamental_for(const std::vector<RatVec>& simple_set) const;

    friend RootSystem build_root_system(const std::vector<SimpleFactor>& factors);

  private:
    std::vector<SimpleFactor> factors_;
    int ambient_ = 0;
    RatMat gram_;
    std::vector<RatVec> simple_;
    RatMat cartan_;
    std::vector<RatVec> positive_;
    std::vector<RatVec> fundamental_;
    WeightSet root_set_;  // all of Delta
};

RootSystem build_root_system(Series s, int rank);
RootSystem build_root_system(const std::vector<SimpleFactor>& factors);

// classical |Delta+| count, used as an independent cross-check on the closure
long positive_count_formula(Series s, int rank);

}  // namespace radon

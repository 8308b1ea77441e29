#include "radon/lattice.hpp"

#include <doctest.h>

#include <cstdint>

using namespace radon;

namespace {

RatVec rv(std::initializer_list<int> xs) {
    RatVec v;
    for (int x : xs) v.push_back(Rational(x));
    return v;
}

// small deterministic generator for the property checks
struct Lcg {
    uint64_t s;
    int next(int lo, int hi) {
        s = s * 6364136223846793005ull + 1442695040888963407ull;
        return lo + static_cast<int>((s >> 33) % static_cast<uint64_t>(hi - lo + 1));
    }
};

// brute-force membership: integer combinations with coefficients in [-5, 5]
bool brute_member(const std::vector<RatVec>& gens, const RatVec& v) {
    size_t n = gens.size();
    std::vector<int> c(n, -5);
    while (true) {
        RatVec acc(v.size(), Rational(0));
        for (size_t i = 0; i < n; ++i) acc = vec_add(acc, vec_scale(Rational(c[i]), gens[i]));
        if (acc == v) return true;
        size_t i = 0;
        while (i < n && c[i] == 5) c[i++] = -5;
        if (i == n) return false;
        ++c[i];
    }
}

}  // namespace

TEST_CASE("hermite form solves integer membership") {
    IntMat a(2, 2);
    a(0, 0) = 2;
    a(1, 1) = 3;
    HnfResult h = hermite_form(a);
    CHECK(h.rank == 2);
    CHECK(solve_in_span(h, {BigInt(4), BigInt(-3)}).has_value());
    CHECK_FALSE(solve_in_span(h, {BigInt(1), BigInt(0)}).has_value());
}

TEST_CASE("integer kernel") {
    IntMat a(1, 3);
    a(0, 0) = 2;
    a(0, 1) = -4;
    a(0, 2) = 6;
    auto k = integer_kernel(a);
    REQUIRE(k.size() == 2);
    for (const auto& v : k) CHECK(2 * v[0] - 4 * v[1] + 6 * v[2] == 0);
    // the kernel basis must generate (1, 2, 1) - 2*... check a known member
    IntMat m(3, 2);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 2; ++j) m(i, j) = k[j][i];
    CHECK(solve_in_span(hermite_form(m), {BigInt(2), BigInt(1), BigInt(0)}).has_value());
}

TEST_CASE("hermite form properties on random integer matrices") {
    Lcg rng{424242};
    for (int trial = 0; trial < 40; ++trial) {
        int rows = rng.next(1, 4), cols = rng.next(1, 4);
        IntMat a(rows, cols);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) a(i, j) = rng.next(-6, 6);
        HnfResult h = hermite_form(a);

        // H = A U exactly
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) {
                BigInt acc = 0;
                for (int k = 0; k < cols; ++k) acc += a(i, k) * h.u(k, j);
                CHECK(acc == h.h(i, j));
            }
        // U unimodular: rational determinant is +-1
        RatMat u(cols, cols);
        for (int i = 0; i < cols; ++i)
            for (int j = 0; j < cols; ++j) u(i, j) = Rational(h.u(i, j));
        Rational det = 1;
        for (int c = 0; c < cols; ++c) {
            int p = -1;
            for (int i = c; i < cols; ++i)
                if (u(i, c) != 0) {
                    p = i;
                    break;
                }
            REQUIRE(p >= 0);
            if (p != c) {
                for (int j = 0; j < cols; ++j) std::swap(u(p, j), u(c, j));
                det = -det;
            }
            det *= u(c, c);
            for (int i = c + 1; i < cols; ++i) {
                Rational f = u(i, c) / u(c, c);
                for (int j = c; j < cols; ++j) u(i, j) -= f * u(c, j);
            }
        }
        CHECK((det == 1 || det == -1));
        // echelon shape: pivot rows strictly increase, pivots positive
        for (int k = 0; k < h.rank; ++k) {
            if (k > 0) CHECK(h.pivot_rows[k] > h.pivot_rows[k - 1]);
            CHECK(h.h(h.pivot_rows[k], k) > 0);
        }
        // spans agree: every original column is in the span of H and back
        for (int j = 0; j < cols; ++j) {
            IntVec col(rows);
            for (int i = 0; i < rows; ++i) col[i] = a(i, j);
            CHECK(solve_in_span(h, col).has_value());
        }
        HnfResult ha = hermite_form(a);
        for (int j = 0; j < h.rank; ++j) {
            IntVec col(rows);
            for (int i = 0; i < rows; ++i) col[i] = h.h(i, j);
            CHECK(solve_in_span(ha, col).has_value());
        }
    }
}

TEST_CASE("membership basics") {
    IntegerLattice l(2, {rv({2, 0}), rv({0, 3})});
    CHECK(l.contains(rv({0, 0})));
    CHECK(l.contains(rv({2, 3})));
    CHECK_FALSE(l.contains(rv({1, 0})));
    CHECK_FALSE(l.contains(RatVec{Rational(1, 2), Rational(0)}));
    CHECK_THROWS_AS(l.contains(rv({1, 2, 3})), std::invalid_argument);

    // every generator is a member
    for (const auto& g : l.generators()) CHECK(l.contains(g));
}

TEST_CASE("index-2 sublattice of the A1 root lattice") {
    RatVec alpha = rv({1, -1});
    IntegerLattice twice(2, {vec_scale(Rational(2), alpha)});
    CHECK_FALSE(twice.contains(alpha));
    CHECK(twice.contains(vec_scale(Rational(2), alpha)));
}

TEST_CASE("membership is generating-set independent") {
    // same span, messy generators
    IntegerLattice a(3, {rv({1, 0, 2}), rv({0, 3, 1})});
    IntegerLattice b(3, {rv({1, 3, 3}), rv({0, 3, 1}), rv({1, -3, 1}), rv({2, 3, 5})});
    for (int x = -4; x <= 4; ++x)
        for (int y = -4; y <= 4; ++y) {
            RatVec v = vec_add(vec_scale(Rational(x), rv({1, 0, 2})), vec_scale(Rational(y), rv({0, 3, 1})));
            CHECK(a.contains(v));
            CHECK(b.contains(v));
        }
    CHECK_FALSE(b.contains(rv({0, 1, 0})));
}

TEST_CASE("membership agrees with brute force on random small lattices") {
    Lcg rng{20240817};
    for (int trial = 0; trial < 25; ++trial) {
        int dim = rng.next(1, 3);
        int ngen = rng.next(1, 3);
        std::vector<RatVec> gens;
        for (int g = 0; g < ngen; ++g) {
            RatVec v(dim);
            for (int i = 0; i < dim; ++i) v[i] = Rational(rng.next(-3, 3));
            gens.push_back(v);
        }
        IntegerLattice lat(dim, gens);
        for (int probe = 0; probe < 20; ++probe) {
            RatVec v(dim);
            for (int i = 0; i < dim; ++i) v[i] = Rational(rng.next(-6, 6));
            bool fast = lat.contains(v);
            bool slow = brute_member(gens, v);
            // brute force only explores |c| <= 5; it can miss members that
            // need bigger coefficients, never the other way round
            if (slow) CHECK(fast);
            if (!fast) CHECK_FALSE(slow);
            if (fast && !slow) {
                auto coords = lat.coordinates(v);
                REQUIRE(coords.has_value());
                bool large = false;
                for (const auto& c : *coords)
                    if (abs(c) > 5) large = true;
                CHECK(large);
            }
        }
    }
}

TEST_CASE("coordinates recombine to the query vector") {
    IntegerLattice l(2, {RatVec{Rational(1, 2), Rational(-1, 2)}, rv({1, 1})});
    RatVec v = vec_add(vec_scale(Rational(3), l.generators()[0]), vec_scale(Rational(-2), l.generators()[1]));
    auto c = l.coordinates(v);
    REQUIRE(c.has_value());
    RatVec acc(2, Rational(0));
    for (size_t i = 0; i < c->size(); ++i)
        acc = vec_add(acc, vec_scale(Rational((*c)[i]), l.generators()[i]));
    CHECK(acc == v);
}

TEST_CASE("residue is zero exactly on members") {
    IntegerLattice l(2, {rv({2, 0}), rv({1, 3})});
    CHECK(vec_is_zero(l.residue(rv({3, 3}))));
    CHECK(vec_is_zero(l.residue(rv({0, 0}))));
    CHECK_FALSE(vec_is_zero(l.residue(rv({1, 0}))));
    CHECK_FALSE(vec_is_zero(l.residue(RatVec{Rational(1, 3), Rational(0)})));
}

TEST_CASE("lattice index") {
    IntegerLattice sup(2, {rv({1, 0}), rv({0, 1})});
    IntegerLattice sub(2, {rv({2, 0}), rv({0, 3})});
    CHECK(lattice_index(sub, sup) == BigInt(6));
    CHECK(lattice_index(sup, sup) == BigInt(1));
    CHECK(lattice_subset(sub, sup));
    CHECK_FALSE(lattice_subset(sup, sub));

    IntegerLattice skew(2, {rv({1, 1}), rv({0, 2})});
    CHECK(lattice_index(skew, sup) == BigInt(2));
}

TEST_CASE("lattice intersection") {
    IntegerLattice a(2, {rv({2, 0}), rv({0, 1})});
    IntegerLattice b(2, {rv({3, 0}), rv({0, 1})});
    IntegerLattice c = lattice_intersection(a, b);
    CHECK(c.contains(rv({6, 0})));
    CHECK_FALSE(c.contains(rv({2, 0})));
    CHECK_FALSE(c.contains(rv({3, 0})));
    CHECK(c.contains(rv({0, 1})));

    // intersection with fractional lattices
    IntegerLattice h(1, {RatVec{Rational(1, 2)}});
    IntegerLattice z(1, {RatVec{Rational(1, 3)}});
    IntegerLattice hz = lattice_intersection(h, z);
    CHECK(hz.contains(RatVec{Rational(1)}));
    CHECK_FALSE(hz.contains(RatVec{Rational(1, 2)}));
    CHECK_FALSE(hz.contains(RatVec{Rational(1, 3)}));
}

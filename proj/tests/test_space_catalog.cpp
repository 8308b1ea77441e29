#include "radon/space.hpp"

#include <doctest.h>

#include <algorithm>
#include <map>

using namespace radon;

namespace {

RatVec rv(std::initializer_list<int> xs) {
    RatVec v;
    for (int x : xs) v.push_back(Rational(x));
    return v;
}

SpaceSpec make_spec(RootSystem rs, RatMat theta, IntegerLattice lat, Flavor f = Flavor::K0) {
    SpaceSpec s;
    s.name = "test";
    s.rs = std::move(rs);
    s.theta = std::move(theta);
    s.analytic = std::move(lat);
    s.flavor = f;
    return s;
}

RatMat neg_identity(int n) {
    RatMat m = RatMat::identity(n);
    for (int i = 0; i < n; ++i) m(i, i) = -1;
    return m;
}

RatMat diag(std::initializer_list<int> xs) {
    RatMat m(static_cast<int>(xs.size()), static_cast<int>(xs.size()));
    int i = 0;
    for (int x : xs) {
        m(i, i) = x;
        ++i;
    }
    return m;
}

SpaceSpec sphere2_spec() {
    RootSystem rs = build_root_system(Series::A, 1);
    return make_spec(rs, neg_identity(2), rs.root_lattice());
}

SpaceSpec b2_spec() {
    RootSystem rs = build_root_system(Series::B, 2);
    return make_spec(rs, diag({-1, 1}), rs.weight_lattice());
}

SpaceSpec group_spec() {
    RootSystem rs = build_root_system({{Series::A, 1}, {Series::A, 1}});
    RatMat swap(4, 4);
    swap(0, 2) = swap(1, 3) = swap(2, 0) = swap(3, 1) = 1;
    return make_spec(rs, swap, rs.weight_lattice());
}

}  // namespace

TEST_CASE("A1 with theta = -id validates") {
    SpaceSpec s = sphere2_spec();
    CHECK_FALSE(validate_spec(s).has_value());
    CHECK_FALSE(s.positivity_adapted());
}

TEST_CASE("theta = id is rejected as an empty restricted system") {
    RootSystem rs = build_root_system(Series::A, 2);
    SpaceSpec s = make_spec(rs, RatMat::identity(3), rs.weight_lattice());
    auto issue = validate_spec(s);
    REQUIRE(issue.has_value());
    CHECK(issue->check == "empty restricted system");
}

TEST_CASE("non-involution and non-isometry are rejected with witnesses") {
    RootSystem rs = build_root_system(Series::A, 1);
    RatMat m(2, 2);
    m(0, 1) = 1;  // nilpotent-ish, not an involution
    SpaceSpec s = make_spec(rs, m, rs.root_lattice());
    auto issue = validate_spec(s);
    REQUIRE(issue.has_value());
    CHECK(issue->check == "theta is not an involution");

    // a reflection through a non-root hyperplane permutes no roots
    RootSystem b2 = build_root_system(Series::B, 2);
    RatMat odd(2, 2);
    odd(0, 1) = 1;
    odd(1, 0) = 1;
    odd = mat_mul(odd, diag({1, -1}));  // rotation by 90 degrees: e1 -> -e2, e2 -> e1
    SpaceSpec s2 = make_spec(b2, odd, b2.weight_lattice());
    auto issue2 = validate_spec(s2);
    REQUIRE(issue2.has_value());  // not an involution (it is order 4)
}

TEST_CASE("B2 with theta = diag(-1, 1) validates; restricted data matches the hand computation") {
    SpaceSpec s = b2_spec();
    REQUIRE_FALSE(validate_spec(s).has_value());
    // theta fixes exactly +-e2
    int fixed = 0;
    for (const auto& a : s.rs.positive_roots())
        if (s.theta_apply(a) == a) ++fixed;
    CHECK(fixed == 1);

    CHECK(s.restricted().sigma_plus == std::vector<RatVec>{rv({1, 0})});
    CHECK(s.restricted().sigma_simple == std::vector<RatVec>{rv({1, 0})});
    // Lambda = 2Z e1, LambdaHat = Z e1
    CHECK(s.restricted().lambda.contains(rv({2, 0})));
    CHECK_FALSE(s.restricted().lambda.contains(rv({1, 0})));
    CHECK(s.restricted().lambda_hat.contains(rv({1, 0})));
    CHECK(lattice_index(s.restricted().lambda, s.restricted().lambda_hat) == BigInt(2));
    // dual basis: x1 = e1, so k e1 evaluates to k
    REQUIRE(s.restricted().dual_basis.size() == 1);
    CHECK(s.rs.inner(rv({3, 0}), s.restricted().dual_basis[0]) == Rational(3));
}

TEST_CASE("sphere-2 restricted data") {
    SpaceSpec s = sphere2_spec();
    REQUIRE_FALSE(validate_spec(s).has_value());
    RatVec alpha = s.rs.simple_roots()[0];
    CHECK(s.restricted().sigma_plus == std::vector<RatVec>{alpha});
    // Lambda = 2Z alpha, LambdaHat = Z alpha
    CHECK(s.restricted().lambda.contains(vec_scale(Rational(2), alpha)));
    CHECK_FALSE(s.restricted().lambda.contains(alpha));
    CHECK(s.restricted().lambda_hat.contains(alpha));
    CHECK(lattice_index(s.restricted().lambda, s.restricted().lambda_hat) == BigInt(2));
    // x1 = alpha/2; m w1 evaluates to m/2
    REQUIRE(s.restricted().dual_basis.size() == 1);
    CHECK(s.restricted().dual_basis[0] == vec_scale(Rational(1, 2), alpha));
    RatVec w1 = s.rs.fundamental_weights()[0];
    CHECK(s.rs.inner(vec_scale(Rational(3), w1), s.restricted().dual_basis[0]) == Rational(3, 2));
}

TEST_CASE("group manifold: swap involution forces an adapted positive system") {
    SpaceSpec s = group_spec();
    REQUIRE_FALSE(validate_spec(s).has_value());
    CHECK(s.positivity_adapted());
    // adapted simple roots: alpha(+) 0 and 0(+)(-alpha)
    WeightSet simple(s.simple().begin(), s.simple().end());
    CHECK(simple.count(rv({1, -1, 0, 0})));
    CHECK(simple.count(rv({0, 0, -1, 1})));
    // Sigma+ is the single restriction (alpha(+)(-alpha))/2
    REQUIRE(s.restricted().sigma_plus.size() == 1);
    RatVec half{Rational(1, 2), Rational(-1, 2), Rational(-1, 2), Rational(1, 2)};
    CHECK(s.restricted().sigma_plus[0] == half);
    // Lambda = Z (alpha(+)(-alpha)), LambdaHat = Z (w(+)(-w)), index 2
    CHECK(s.restricted().lambda.contains(rv({1, -1, -1, 1})));
    CHECK_FALSE(s.restricted().lambda.contains(vec_scale(Rational(1, 2), rv({1, -1, -1, 1}))));
    CHECK(s.restricted().lambda_hat.contains(vec_scale(Rational(1, 2), rv({1, -1, -1, 1}))));
    CHECK(lattice_index(s.restricted().lambda, s.restricted().lambda_hat) == BigInt(2));
    CHECK(s.restricted().lambda.rank() == 1);
}

TEST_CASE("restriction map is the orthogonal projector onto the (-1)-eigenspace") {
    for (SpaceSpec s : {sphere2_spec(), b2_spec(), group_spec()}) {
        REQUIRE_FALSE(validate_spec(s).has_value());
        for (const auto& a : s.rs.positive_roots()) {
            RatVec r1 = s.restrict_weight(a);
            CHECK(s.restrict_weight(r1) == r1);                       // r^2 = r
            CHECK(s.restrict_weight(s.theta_apply(a)) == vec_neg(r1));  // r theta = -r
            // orthogonality of the split: (r(a), a - r(a)) = 0
            CHECK(s.rs.inner(r1, vec_sub(a, r1)) == Rational(0));
        }
    }
}

TEST_CASE("restricted Weyl group stabilizes Lambda and LambdaHat") {
    for (SpaceSpec s : {sphere2_spec(), b2_spec(), group_spec()}) {
        REQUIRE_FALSE(validate_spec(s).has_value());
        auto group = s.restricted_weyl_group();
        CHECK(group.size() >= 2);
        for (const auto& w : group) {
            for (const auto& g : s.restricted().lambda.generators())
                CHECK(s.restricted().lambda.contains(mat_apply(w, g)));
            for (const auto& g : s.restricted().lambda_hat.generators()) {
                RatVec img = mat_apply(w, g);
                CHECK(s.restricted().lambda_hat.contains(img));
                // lambda - w(lambda) lands in Lambda
                CHECK(s.restricted().lambda.contains(vec_sub(g, img)));
            }
        }
    }
}

TEST_CASE("Sigma is negation stable and Pi' has no proportional pairs beyond alpha, 2 alpha") {
    for (SpaceSpec s : {sphere2_spec(), b2_spec(), group_spec()}) {
        REQUIRE_FALSE(validate_spec(s).has_value());
        WeightSet sigma;
        for (const auto& a : s.rs.positive_roots()) {
            RatVec r = s.restrict_weight(a);
            if (!vec_is_zero(r)) {
                sigma.insert(r);
                sigma.insert(vec_neg(r));
            }
        }
        for (const auto& b : sigma) CHECK(sigma.count(vec_neg(b)));
        const auto& pi = s.restricted().sigma_simple;
        for (size_t i = 0; i < pi.size(); ++i)
            for (size_t j = i + 1; j < pi.size(); ++j) {
                // proportional only if one is twice the other
                Rational c = s.rs.inner(pi[i], pi[j]) * s.rs.inner(pi[i], pi[j]);
                Rational n = s.rs.inner(pi[i], pi[i]) * s.rs.inner(pi[j], pi[j]);
                if (c == n)  // Cauchy-Schwarz equality = proportional
                    CHECK((pi[i] == vec_scale(Rational(2), pi[j]) ||
                           pi[j] == vec_scale(Rational(2), pi[i])));
            }
    }
}

TEST_CASE("restricted Weyl group orders match the classical values") {
    auto catalog = bundled_catalog();
    std::map<std::string, size_t> expect = {{"sphere-2", 2}, {"rp-2", 2},  {"sphere-4", 2},
                                            {"su3-mod-so3", 6}, {"group-su2", 2}, {"sphere-6", 2},
                                            {"cp-2", 2}};
    for (const auto& s : catalog) {
        REQUIRE(expect.count(s.name));
        CHECK(s.restricted_weyl_group().size() == expect[s.name]);
    }
}

TEST_CASE("bundled catalog loads, validates, and has the required entries") {
    auto catalog = bundled_catalog();
    for (const char* name : {"sphere-2", "rp-2", "sphere-4", "su3-mod-so3", "group-su2"})
        CHECK_NOTHROW(find_space(catalog, name));
    CHECK_THROWS_AS(find_space(catalog, "nope"), CatalogError);

    const SpaceSpec& s2 = find_space(catalog, "sphere-2");
    const SpaceSpec& rp = find_space(catalog, "rp-2");
    CHECK(s2.flavor == Flavor::K0);
    CHECK(rp.flavor == Flavor::KZ);
    // identical derived data, only the flavor differs
    CHECK(s2.restricted().sigma_plus == rp.restricted().sigma_plus);
    CHECK(s2.restricted().lambda.basis() == rp.restricted().lambda.basis());

    const SpaceSpec& s4 = find_space(catalog, "sphere-4");
    CHECK(s4.restricted().sigma_plus.size() == 1);
    const SpaceSpec& wu = find_space(catalog, "su3-mod-so3");
    CHECK(lattice_index(wu.restricted().lambda, wu.restricted().lambda_hat) == BigInt(3));
}

TEST_CASE("catalog parser reports line numbers") {
    CHECK_THROWS_WITH_AS(parse_catalog("name = x\n"), doctest::Contains("line 1"), CatalogError);
    CHECK_THROWS_WITH_AS(parse_catalog("[space]\nname = x\njunk line\n"), doctest::Contains("line 3"),
                         CatalogError);
    CHECK_THROWS_WITH_AS(parse_catalog("[space]\nname = x\n"), doctest::Contains("missing field"),
                         CatalogError);

    // theta that is not an involution is rejected at validation
    std::string bad = R"(
[space]
name = broken
series = A
rank = 1
theta = [[1, 1], [0, 1]]
analytic_lattice = root
flavor = K0
)";
    CHECK_THROWS_WITH_AS(parse_catalog(bad), doctest::Contains("involution"), CatalogError);
}

TEST_CASE("analytic lattice constraints are enforced") {
    // theta (factor swap) does not stabilize an asymmetric intermediate lattice
    RootSystem rs = build_root_system({{Series::A, 1}, {Series::A, 1}});
    RatMat swap(4, 4);
    swap(0, 2) = swap(1, 3) = swap(2, 0) = swap(3, 1) = 1;
    RatVec alpha1 = rs.simple_roots()[0];
    RatVec w2 = rs.fundamental_weights()[1];
    SpaceSpec s = make_spec(rs, swap, IntegerLattice(4, {alpha1, w2}));
    auto issue = validate_spec(s);
    REQUIRE(issue.has_value());
    CHECK(issue->check == "theta does not stabilize the analytic lattice");

    // a lattice of non-integral weights is rejected
    RootSystem a1 = build_root_system(Series::A, 1);
    SpaceSpec s2 = make_spec(a1, neg_identity(2),
                             IntegerLattice(2, {RatVec{Rational(1, 3), Rational(-1, 3)}}));
    auto issue2 = validate_spec(s2);
    REQUIRE(issue2.has_value());
    CHECK(issue2->check == "analytic lattice is not algebraically integral");

    // a lattice missing the root lattice is rejected
    SpaceSpec s3 = make_spec(a1, neg_identity(2), IntegerLattice(2, {vec_scale(Rational(2), a1.simple_roots()[0])}));
    auto issue3 = validate_spec(s3);
    REQUIRE(issue3.has_value());
    CHECK(issue3->check == "analytic lattice does not contain the root lattice");
}

TEST_CASE("catalog accepts explicit generators and rational entries") {
    std::string text = R"(
[space]
name = half
series = A
rank = 1
theta = [[-1, 0], [0, -1]]
analytic_lattice = explicit
generators = [[1/2, -1/2]]
flavor = K0
)";
    auto catalog = parse_catalog(text);
    REQUIRE(catalog.size() == 1);
    CHECK(catalog[0].analytic.contains(RatVec{Rational(1, 2), Rational(-1, 2)}));
}

TEST_CASE("cp-2 has the non-reduced restricted system BC1") {
    auto catalog = bundled_catalog();
    const SpaceSpec& cp = find_space(catalog, "cp-2");
    CHECK(cp.positivity_adapted());
    const auto& sp = cp.restricted().sigma_plus;
    REQUIRE(sp.size() == 2);
    // both beta and 2 beta are kept in Sigma+
    CHECK(sp[1] == vec_scale(Rational(2), sp[0]));
    CHECK(cp.restricted().sigma_simple == std::vector<RatVec>{sp[0]});
    // Lambda = LambdaHat here
    CHECK(lattice_index(cp.restricted().lambda, cp.restricted().lambda_hat) == BigInt(1));
}

TEST_CASE("fundamental coordinates round-trip through the realization") {
    for (const auto& s : bundled_catalog()) {
        int r = static_cast<int>(s.simple().size());
        for (int trial = 0; trial < 8; ++trial) {
            IntVec coords;
            for (int i = 0; i < r; ++i) coords.push_back(BigInt((trial * 7 + i * 3) % 5));
            RatVec w = s.weight_from_coordinates(coords);
            auto back = s.weight_coordinates(w);
            REQUIRE(back.has_value());
            CHECK(*back == coords);
        }
        // non-integral weights have no fundamental coordinates
        if (!s.restricted().dual_basis.empty()) {
            RatVec fractional = vec_scale(Rational(1, 3), s.rs.fundamental_weights()[0]);
            CHECK_FALSE(s.weight_coordinates(fractional).has_value());
        }
    }
}

TEST_CASE("annihilates-F parity data: Lambda generators evaluate evenly on the dual basis") {
    for (const auto& s : bundled_catalog()) {
        for (const auto& g : s.restricted().lambda.generators())
            for (const auto& x : s.restricted().dual_basis) CHECK(is_even_integer(s.rs.inner(g, x)));
    }
}

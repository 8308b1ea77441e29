#include "radon/space.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

namespace radon {

RatVec SpaceSpec::restrict_weight(const RatVec& v) const {
    return vec_scale(Rational(1, 2), vec_sub(v, theta_apply(v)));
}

bool SpaceSpec::theta_negates(const RatVec& v) const { return theta_apply(v) == vec_neg(v); }

std::optional<IntVec> SpaceSpec::weight_coordinates(const RatVec& v) const {
    IntVec out;
    for (const auto& a : simple_) {
        Rational c = rs.pairing(v, a);
        if (!is_integer(c)) return std::nullopt;
        out.push_back(to_bigint(c));
    }
    return out;
}

RatVec SpaceSpec::weight_from_coordinates(const IntVec& coords) const {
    if (coords.size() != fundamental_.size())
        throw std::invalid_argument("weight_from_coordinates: expected " +
                                    std::to_string(fundamental_.size()) + " coordinates");
    RatVec v(rs.ambient(), Rational(0));
    for (size_t i = 0; i < coords.size(); ++i) v = vec_add(v, vec_scale(Rational(coords[i]), fundamental_[i]));
    return v;
}

namespace {

RatMat reflection_matrix(const RootSystem& rs, const RatVec& beta) {
    int n = rs.ambient();
    Rational bb = rs.inner(beta, beta);
    RatVec gb = mat_apply(rs.gram(), beta);
    RatMat m = RatMat::identity(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) -= 2 * beta[i] * gb[j] / bb;
    return m;
}

}  // namespace

std::vector<RatMat> SpaceSpec::restricted_weyl_group(size_t cap) const {
    std::vector<RatMat> gens;
    for (const auto& b : restricted_.sigma_simple) gens.push_back(reflection_matrix(rs, b));
    std::vector<RatMat> group{RatMat::identity(rs.ambient())};
    std::vector<RatMat> frontier = group;
    while (!frontier.empty()) {
        std::vector<RatMat> next;
        for (const auto& w : frontier) {
            for (const auto& g : gens) {
                RatMat wg = mat_mul(g, w);
                if (std::find(group.begin(), group.end(), wg) == group.end()) {
                    group.push_back(wg);
                    next.push_back(wg);
                    if (group.size() > cap) throw std::logic_error("restricted_weyl_group: cap exceeded");
                }
            }
        }
        frontier = std::move(next);
    }
    return group;
}

void SpaceSpec::derive() {
    const auto& all_pos = rs.positive_roots();

    auto compatible = [&](const std::vector<RatVec>& pos) {
        WeightSet ps(pos.begin(), pos.end());
        for (const auto& a : pos) {
            RatVec ta = theta_apply(a);
            if (ta != a && !ps.count(vec_neg(ta))) return false;
        }
        return true;
    };

    if (compatible(all_pos)) {
        positive_ = all_pos;
        simple_ = rs.simple_roots();
        fundamental_ = rs.fundamental_weights();
        adapted_ = false;
    } else {
        // choose a positive system whose nonzero restrictions form a positive
        // system for Sigma: order roots by (r(alpha), xi) with a generic xi in
        // the (-1)-eigenspace, breaking ties (the theta-fixed roots) by a
        // generic eta in the (+1)-eigenspace
        std::vector<RatVec> minus_span, plus_span;
        for (const auto& a : all_pos) {
            RatVec rm = restrict_weight(a);
            RatVec rp = vec_sub(a, rm);
            for (auto [vecp, spanp] : {std::pair{&rm, &minus_span}, std::pair{&rp, &plus_span}}) {
                if (vec_is_zero(*vecp)) continue;
                auto trial = *spanp;
                trial.push_back(*vecp);
                if (rat_rank(mat_from_cols(trial, rs.ambient())) > static_cast<int>(spanp->size()))
                    *spanp = trial;
            }
        }
        RatVec xi, eta;
        bool found = false;
        for (int m = 1; m <= 1000 && !found; ++m) {
            auto combine = [&](const std::vector<RatVec>& basis) {
                RatVec v(rs.ambient(), Rational(0));
                Rational f = 1;
                for (const auto& b : basis) {
                    v = vec_add(v, vec_scale(f, b));
                    f *= m;
                }
                return v;
            };
            xi = combine(minus_span);
            eta = combine(plus_span);
            found = true;
            for (const auto& a : all_pos) {
                RatVec ra = restrict_weight(a);
                if (!vec_is_zero(ra) && rs.inner(ra, xi) == 0) found = false;
                if (vec_is_zero(ra) && rs.inner(a, eta) == 0) found = false;
            }
        }
        if (!found) throw std::logic_error("derive: no generic ordering vector found");

        positive_.clear();
        for (const auto& a : all_pos) {
            for (const RatVec& root : {a, vec_neg(a)}) {
                RatVec rr = restrict_weight(root);
                Rational key = vec_is_zero(rr) ? rs.inner(root, eta) : rs.inner(rr, xi);
                if (key > 0) positive_.push_back(root);
            }
        }
        if (positive_.size() != all_pos.size()) throw std::logic_error("derive: adapted system has wrong size");

        // simple roots: indecomposable positives
        WeightSet ps(positive_.begin(), positive_.end());
        simple_.clear();
        for (const auto& b : positive_) {
            bool decomposable = false;
            for (const auto& g : positive_) {
                RatVec d = vec_sub(b, g);
                if (!vec_is_zero(d) && ps.count(d)) {
                    decomposable = true;
                    break;
                }
            }
            if (!decomposable) simple_.push_back(b);
        }
        if (simple_.size() != rs.simple_roots().size())
            throw std::logic_error("derive: adapted simple system has wrong rank");
        fundamental_ = rs.dual_fundamental_for(simple_);
        adapted_ = true;
    }

    // Sigma+ and Pi'
    WeightSet sig;
    for (const auto& a : positive_) {
        RatVec ra = restrict_weight(a);
        if (!vec_is_zero(ra)) sig.insert(ra);
    }
    restricted_.sigma_plus.assign(sig.begin(), sig.end());
    restricted_.sigma_simple.clear();
    for (const auto& b : restricted_.sigma_plus) {
        bool decomposable = false;
        for (const auto& g : restricted_.sigma_plus) {
            for (const auto& h : restricted_.sigma_plus) {
                if (vec_add(g, h) == b) {
                    decomposable = true;
                    break;
                }
            }
            if (decomposable) break;
        }
        if (!decomposable) restricted_.sigma_simple.push_back(b);
    }

    // dual basis x_i in the span of Sigma with (alpha'_j, x_i) = delta_ij
    const auto& pi = restricted_.sigma_simple;
    int k = static_cast<int>(pi.size());
    restricted_.dual_basis.clear();
    if (k > 0 && rat_rank(mat_from_cols(pi, rs.ambient())) == k) {
        RatMat m(k, k);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) m(i, j) = rs.inner(pi[i], pi[j]);
        for (int i = 0; i < k; ++i) {
            RatVec e(k, Rational(0));
            e[i] = 1;
            auto c = rat_solve(m, e);
            if (!c) break;
            RatVec x(rs.ambient(), Rational(0));
            for (int j = 0; j < k; ++j) x = vec_add(x, vec_scale((*c)[j], pi[j]));
            restricted_.dual_basis.push_back(std::move(x));
        }
    }

    // Lambda and LambdaHat
    std::vector<RatVec> lgens, lhgens;
    for (const auto& a : simple_) {
        RatVec g = vec_sub(a, theta_apply(a));
        if (!vec_is_zero(g)) lgens.push_back(g);
    }
    for (const auto& w : fundamental_) {
        RatVec g = vec_sub(w, theta_apply(w));
        if (!vec_is_zero(g)) lhgens.push_back(g);
    }
    restricted_.lambda = IntegerLattice(rs.ambient(), lgens);
    restricted_.lambda_hat = IntegerLattice(rs.ambient(), lhgens);
}

std::optional<ValidationIssue> validate_spec(SpaceSpec& spec) {
    const RootSystem& rs = spec.rs;
    int n = rs.ambient();
    if (spec.theta.rows != n || spec.theta.cols != n)
        return ValidationIssue{"theta has wrong dimensions", ""};

    if (mat_mul(spec.theta, spec.theta) != RatMat::identity(n))
        return ValidationIssue{"theta is not an involution", ""};

    // isometry of the realization inner product: theta^T G theta = G
    if (mat_mul(mat_transpose(spec.theta), mat_mul(rs.gram(), spec.theta)) != rs.gram())
        return ValidationIssue{"theta is not an isometry of (.,.)", ""};

    for (const auto& a : rs.positive_roots()) {
        if (!rs.is_root(spec.theta_apply(a)))
            return ValidationIssue{"theta does not permute Delta", format_vec(a)};
    }

    for (const auto& g : spec.analytic.generators()) {
        if (!spec.analytic.contains(spec.theta_apply(g)))
            return ValidationIssue{"theta does not stabilize the analytic lattice", format_vec(g)};
        if (!rs.is_algebraically_integral(g))
            return ValidationIssue{"analytic lattice is not algebraically integral", format_vec(g)};
    }
    for (const auto& a : rs.simple_roots()) {
        if (!spec.analytic.contains(a))
            return ValidationIssue{"analytic lattice does not contain the root lattice", format_vec(a)};
    }

    try {
        spec.derive();
    } catch (const std::exception& e) {
        return ValidationIssue{std::string("derivation failed: ") + e.what(), ""};
    }

    if (spec.restricted().sigma_plus.empty()) return ValidationIssue{"empty restricted system", ""};

    // alpha positive and theta(alpha) != alpha must force -theta(alpha) positive
    {
        WeightSet ps(spec.positive().begin(), spec.positive().end());
        for (const auto& a : spec.positive()) {
            RatVec ta = spec.theta_apply(a);
            if (ta != a && !ps.count(vec_neg(ta)))
                return ValidationIssue{"positive system incompatible with theta", format_vec(a)};
        }
    }

    const auto& rest = spec.restricted();
    int sigma_rank = rat_rank(mat_from_cols(rest.sigma_plus, n));
    if (static_cast<int>(rest.sigma_simple.size()) != sigma_rank ||
        rest.dual_basis.size() != rest.sigma_simple.size())
        return ValidationIssue{"Pi' is not a basis of the (-1)-eigenspace", ""};

    // every restricted positive root is a non-negative combination of Pi'
    {
        RatMat cols = mat_from_cols(rest.sigma_simple, n);
        for (const auto& b : rest.sigma_plus) {
            auto c = rat_solve_any(cols, b);
            bool ok = c.has_value();
            if (ok)
                for (const auto& x : *c)
                    if (x < 0) ok = false;
            if (!ok) return ValidationIssue{"Sigma+ not spanned non-negatively by Pi'", format_vec(b)};
        }
    }

    if (!lattice_subset(rest.lambda, rest.lambda_hat))
        return ValidationIssue{"Lambda not contained in LambdaHat", ""};
    if (rest.lambda.rank() != sigma_rank || rest.lambda_hat.rank() != sigma_rank)
        return ValidationIssue{"lattice rank does not match the restricted rank", ""};

    // stability under restricted reflections, and LambdaHat - w(LambdaHat) in Lambda
    for (const auto& b : rest.sigma_simple) {
        for (const auto& g : rest.lambda.generators()) {
            if (!rest.lambda.contains(spec.restricted_reflect(g, b)))
                return ValidationIssue{"Lambda not reflection stable", format_vec(g)};
        }
        for (const auto& g : rest.lambda_hat.generators()) {
            RatVec img = spec.restricted_reflect(g, b);
            if (!rest.lambda_hat.contains(img))
                return ValidationIssue{"LambdaHat not reflection stable", format_vec(g)};
            if (!rest.lambda.contains(vec_sub(g, img)))
                return ValidationIssue{"lambda - w(lambda) escapes Lambda", format_vec(g)};
        }
    }

    // generators of Lambda evaluate to even integers on the dual basis
    for (const auto& g : rest.lambda.generators()) {
        for (const auto& x : rest.dual_basis) {
            if (!is_even_integer(rs.inner(g, x)))
                return ValidationIssue{"Lambda generator with odd dual-basis value", format_vec(g)};
        }
    }

    return std::nullopt;
}

// ---- catalog parsing ---------------------------------------------------

namespace {

struct Cursor {
    const std::string& s;
    size_t i = 0;
    int line;

    void skip_space() {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    }
    [[noreturn]] void fail(const std::string& msg) const {
        throw CatalogError("line " + std::to_string(line) + ": " + msg);
    }
};

RatVec parse_vector(Cursor& c);

std::vector<RatVec> parse_matrix(Cursor& c) {
    c.skip_space();
    if (c.i >= c.s.size() || c.s[c.i] != '[') c.fail("expected '['");
    ++c.i;
    std::vector<RatVec> rows;
    while (true) {
        c.skip_space();
        if (c.i < c.s.size() && c.s[c.i] == ']') {
            ++c.i;
            break;
        }
        rows.push_back(parse_vector(c));
        c.skip_space();
        if (c.i < c.s.size() && c.s[c.i] == ',') ++c.i;
    }
    return rows;
}

RatVec parse_vector(Cursor& c) {
    c.skip_space();
    if (c.i >= c.s.size() || c.s[c.i] != '[') c.fail("expected '[' starting a vector");
    ++c.i;
    RatVec v;
    while (true) {
        c.skip_space();
        if (c.i >= c.s.size()) c.fail("unterminated vector");
        if (c.s[c.i] == ']') {
            ++c.i;
            break;
        }
        size_t start = c.i;
        while (c.i < c.s.size() && c.s[c.i] != ',' && c.s[c.i] != ']') ++c.i;
        std::string tok = c.s.substr(start, c.i - start);
        while (!tok.empty() && (tok.back() == ' ' || tok.back() == '\t')) tok.pop_back();
        try {
            v.push_back(parse_rational(tok));
        } catch (const std::exception& e) {
            c.fail(e.what());
        }
        if (c.i < c.s.size() && c.s[c.i] == ',') ++c.i;
    }
    return v;
}

struct RawEntry {
    int line = 0;
    std::map<std::string, std::pair<std::string, int>> fields;  // key -> (value, line)
};

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

std::vector<SimpleFactor> parse_series(const std::string& series, const std::string& rank, int line) {
    auto split = [](const std::string& s) {
        std::vector<std::string> parts;
        std::string cur;
        for (char ch : s) {
            if (ch == 'x' || ch == 'X') {
                parts.push_back(cur);
                cur.clear();
            } else
                cur += ch;
        }
        parts.push_back(cur);
        return parts;
    };
    auto ss = split(series), rr = split(rank);
    if (ss.size() != rr.size())
        throw CatalogError("line " + std::to_string(line) + ": series/rank factor counts differ");
    std::vector<SimpleFactor> factors;
    for (size_t i = 0; i < ss.size(); ++i) {
        std::string sv = trim(ss[i]), rv = trim(rr[i]);
        if (sv.size() != 1)
            throw CatalogError("line " + std::to_string(line) + ": bad series '" + sv + "'");
        int r;
        try {
            r = std::stoi(rv);
        } catch (const std::exception&) {
            throw CatalogError("line " + std::to_string(line) + ": bad rank '" + rv + "'");
        }
        factors.push_back({series_from_char(sv[0]), r});
    }
    return factors;
}

SpaceSpec build_entry(const RawEntry& e) {
    auto get = [&](const std::string& key, bool required) -> std::pair<std::string, int> {
        auto it = e.fields.find(key);
        if (it == e.fields.end()) {
            if (required)
                throw CatalogError("line " + std::to_string(e.line) + ": entry is missing field '" + key + "'");
            return {"", e.line};
        }
        return it->second;
    };

    SpaceSpec spec;
    spec.name = get("name", true).first;
    spec.comment = get("comment", false).first;
    spec.oracle_model = get("oracle", false).first;

    auto [series, sline] = get("series", true);
    auto [rank, rline] = get("rank", true);
    try {
        spec.rs = build_root_system(parse_series(series, rank, sline));
    } catch (const CatalogError&) {
        throw;
    } catch (const std::exception& ex) {
        throw CatalogError("line " + std::to_string(rline) + ": " + ex.what());
    }
    int n = spec.rs.ambient();

    auto [theta_text, tline] = get("theta", true);
    {
        Cursor c{theta_text, 0, tline};
        auto rows = parse_matrix(c);
        if (static_cast<int>(rows.size()) != n)
            throw CatalogError("line " + std::to_string(tline) + ": theta needs " + std::to_string(n) + " rows");
        spec.theta = RatMat(n, n);
        for (int i = 0; i < n; ++i) {
            if (static_cast<int>(rows[i].size()) != n)
                throw CatalogError("line " + std::to_string(tline) + ": theta row has wrong length");
            for (int j = 0; j < n; ++j) spec.theta(i, j) = rows[i][j];
        }
    }

    auto [lat, lline] = get("analytic_lattice", true);
    if (lat == "root")
        spec.analytic = spec.rs.root_lattice();
    else if (lat == "weight")
        spec.analytic = spec.rs.weight_lattice();
    else if (lat == "explicit") {
        auto [gens_text, gline] = get("generators", true);
        Cursor c{gens_text, 0, gline};
        auto rows = parse_matrix(c);
        for (const auto& row : rows)
            if (static_cast<int>(row.size()) != n)
                throw CatalogError("line " + std::to_string(gline) + ": generator has wrong length");
        spec.analytic = IntegerLattice(n, rows);
    } else
        throw CatalogError("line " + std::to_string(lline) + ": analytic_lattice must be root|weight|explicit");

    auto [flavor, fline] = get("flavor", true);
    if (flavor == "K0")
        spec.flavor = Flavor::K0;
    else if (flavor == "KZ")
        spec.flavor = Flavor::KZ;
    else
        throw CatalogError("line " + std::to_string(fline) + ": flavor must be K0 or KZ");

    return spec;
}

}  // namespace

std::vector<SpaceSpec> parse_catalog(const std::string& text) {
    std::vector<RawEntry> raw;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        if (t == "[space]") {
            raw.push_back(RawEntry{lineno, {}});
            continue;
        }
        auto eq = t.find('=');
        if (eq == std::string::npos)
            throw CatalogError("line " + std::to_string(lineno) + ": expected 'key = value' or '[space]'");
        if (raw.empty())
            throw CatalogError("line " + std::to_string(lineno) + ": field outside of any [space] entry");
        std::string key = trim(t.substr(0, eq)), val = trim(t.substr(eq + 1));
        if (raw.back().fields.count(key))
            throw CatalogError("line " + std::to_string(lineno) + ": duplicate field '" + key + "'");
        raw.back().fields[key] = {val, lineno};
    }

    std::vector<SpaceSpec> out;
    for (const auto& e : raw) {
        SpaceSpec spec = build_entry(e);
        for (const auto& prev : out)
            if (prev.name == spec.name)
                throw CatalogError("line " + std::to_string(e.line) + ": duplicate space name '" + spec.name + "'");
        auto issue = validate_spec(spec);
        if (issue)
            throw CatalogError("entry '" + spec.name + "' (line " + std::to_string(e.line) +
                               ") rejected: " + issue->to_string());
        out.push_back(std::move(spec));
    }
    return out;
}

std::vector<SpaceSpec> load_catalog(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw CatalogError("cannot open catalog file '" + path + "'");
    std::stringstream buf;
    buf << f.rdbuf();
    return parse_catalog(buf.str());
}

std::vector<SpaceSpec> bundled_catalog() { return parse_catalog(bundled_catalog_text()); }

const SpaceSpec& find_space(const std::vector<SpaceSpec>& catalog, const std::string& name) {
    for (const auto& s : catalog)
        if (s.name == name) return s;
    throw CatalogError("unknown space '" + name + "'");
}

}  // namespace radon

// Batch CLI over the symbolic engine and the two numerical oracles.
// Exit codes: 0 success, 1 oracle mismatch, 2 configuration/load error,
// 3 bad user input.

#include "radon/funk.hpp"
#include "radon/kernel.hpp"
#include "radon/oracle.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <iostream>
#include <optional>

using nlohmann::json;
using namespace radon;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitConfig = 2;
constexpr int kExitBadInput = 3;

struct Options {
    std::string catalog_path;
    uint64_t seed = 42;
    double tolerance = 1e-10;
};

std::vector<SpaceSpec> load(const Options& opt) {
    if (opt.catalog_path.empty()) return bundled_catalog();
    return load_catalog(opt.catalog_path);
}

json rat_json(const Rational& q) { return to_string(q); }

json vec_json(const RatVec& v) {
    json a = json::array();
    for (const auto& c : v) a.push_back(rat_json(c));
    return a;
}

json coords_json(const IntVec& v) {
    json a = json::array();
    for (const auto& c : v) a.push_back(c.str());
    return a;
}

std::string coords_text(const IntVec& v) {
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += " ";
        s += v[i].str();
    }
    return s;
}

json certificate_json(const KernelVerdict& v) {
    json c;
    switch (v.kind) {
        case VerdictKind::NotSpherical:
            c["type"] = "not-spherical";
            c["reason"] = v.reason;
            break;
        case VerdictKind::DescendsToAdjoint:
            c["type"] = "lambda-coords";
            c["omega_dual"] = vec_json(v.omega_dual);
            c["coords"] = coords_json(v.lambda_coords);
            break;
        case VerdictKind::InKernel:
            c["type"] = "residue";
            c["omega_dual"] = vec_json(v.omega_dual);
            c["residue"] = vec_json(v.residue);
            break;
    }
    return c;
}

std::string certificate_text(const KernelVerdict& v) {
    switch (v.kind) {
        case VerdictKind::NotSpherical: return "not spherical: " + v.reason;
        case VerdictKind::DescendsToAdjoint:
            return "omega* = " + format_vec(v.omega_dual) + " = Lambda-combination [" +
                   coords_text(v.lambda_coords) + "]";
        case VerdictKind::InKernel:
            return "omega* = " + format_vec(v.omega_dual) + " not in Lambda, residue " +
                   format_vec(v.residue);
    }
    return "";
}

std::string csv_field(std::string s) {
    for (char& c : s)
        if (c == ',') c = ';';
    return s;
}

int cmd_catalog(const Options& opt) {
    auto catalog = load(opt);
    std::cout << "name              label     |Sigma+|  flavor  oracle\n";
    for (const auto& s : catalog) {
        std::string name = s.name;
        name.resize(18, ' ');
        std::string label = s.rs.label();
        label.resize(10, ' ');
        std::string np = std::to_string(s.restricted().sigma_plus.size());
        np.resize(9, ' ');
        std::string fl = s.flavor == Flavor::K0 ? "K0" : "KZ";
        fl.resize(8, ' ');
        std::cout << name << label << np << fl << (s.oracle_model.empty() ? "-" : s.oracle_model)
                  << "\n";
    }
    return kExitOk;
}

int cmd_analyze(const Options& opt, const std::string& name) {
    auto catalog = load(opt);
    const SpaceSpec& s = find_space(catalog, name);
    const auto& r = s.restricted();
    std::cout << "space: " << s.name << "  (" << s.rs.label() << ", flavor "
              << (s.flavor == Flavor::K0 ? "K0" : "KZ") << ")\n";
    if (!s.comment.empty()) std::cout << "comment: " << s.comment << "\n";
    if (s.positivity_adapted()) std::cout << "positive system: re-chosen to be theta-compatible\n";
    std::cout << "Sigma+:";
    for (const auto& b : r.sigma_plus) std::cout << " " << format_vec(b);
    std::cout << "\nPi':";
    for (const auto& b : r.sigma_simple) std::cout << " " << format_vec(b);
    std::cout << "\ndual basis x_i:";
    for (const auto& x : r.dual_basis) std::cout << " " << format_vec(x);
    std::cout << "\nLambda generators:";
    for (const auto& g : r.lambda.basis()) std::cout << " " << format_vec(g);
    std::cout << "\nLambdaHat generators:";
    for (const auto& g : r.lambda_hat.basis()) std::cout << " " << format_vec(g);
    std::cout << "\nindex [LambdaHat : Lambda] = " << lattice_index(r.lambda, r.lambda_hat).str() << "\n";

    InjectivityCertificate cert = is_transform_injective(s);
    if (!cert.reverify(s)) {
        std::cerr << "internal error: injectivity certificate failed re-verification\n";
        return kExitConfig;
    }
    std::cout << "spherical lattice generators:";
    for (const auto& g : cert.generators) std::cout << " " << format_vec(g);
    std::cout << "\ninjective (M coincides with its adjoint form): " << (cert.injective ? "yes" : "no")
              << "\n";
    if (cert.injective) {
        for (size_t i = 0; i < cert.generators.size(); ++i)
            std::cout << "  generator " << format_vec(cert.generators[i]) << " = Lambda-combination ["
                      << coords_text(cert.generator_coords[i]) << "]\n";
    } else {
        std::cout << "  witness omega = " << format_vec(cert.witness)
                  << "  (spherical highest weight outside Lambda)\n";
        std::cout << "  residue against Lambda = " << format_vec(cert.witness_residue) << "\n";
    }
    return kExitOk;
}

IntVec parse_coords(const std::vector<std::string>& words) {
    IntVec coords;
    for (const auto& w : words) {
        try {
            coords.push_back(BigInt(w));
        } catch (const std::exception&) {
            throw std::invalid_argument("coordinate '" + w + "' is not an integer");
        }
    }
    return coords;
}

int cmd_test_weight(const Options& opt, const std::string& name, const std::vector<std::string>& words) {
    auto catalog = load(opt);
    const SpaceSpec& s = find_space(catalog, name);
    RatVec omega = s.weight_from_coordinates(parse_coords(words));
    KernelVerdict v = in_kernel(s, omega);
    if (!v.reverify(s)) {
        std::cerr << "internal error: verdict certificate failed re-verification\n";
        return kExitConfig;
    }
    std::cout << "space: " << s.name << "\n";
    std::cout << "omega = " << format_vec(omega) << "\n";
    std::cout << "verdict: " << to_string(v.kind) << "\n";
    std::cout << "certificate: " << certificate_text(v) << "\n";
    return kExitOk;
}

int cmd_enumerate(const Options& opt, const std::string& name, int bound, const std::string& format) {
    auto catalog = load(opt);
    const SpaceSpec& s = find_space(catalog, name);
    auto rows = enumerate_spherical(s, bound);
    if (format == "json") {
        json out;
        out["schema"] = 1;
        out["space"] = s.name;
        out["bound"] = bound;
        json jrows = json::array();
        for (const auto& [coords, verdict] : rows) {
            json r;
            r["space"] = s.name;
            r["omega"] = coords_json(coords);
            r["verdict"] = to_string(verdict.kind);
            r["certificate"] = certificate_json(verdict);
            r["oracle"] = "unchecked";
            jrows.push_back(r);
        }
        out["rows"] = jrows;
        std::cout << out.dump(2) << "\n";
    } else if (format == "csv") {
        std::cout << "space,omega,verdict,certificate,oracle\n";
        for (const auto& [coords, verdict] : rows)
            std::cout << s.name << "," << coords_text(coords) << "," << to_string(verdict.kind) << ","
                      << csv_field(certificate_text(verdict)) << ",unchecked\n";
    } else {
        throw std::invalid_argument("format must be json or csv");
    }
    return kExitOk;
}

// one verify row
struct VerifyRow {
    std::string omega;
    std::string verdict;
    std::string status;  // confirmed | unchecked | mismatch
    std::string note;
};

int cmd_verify(const Options& opt, const std::string& name, int bound, int samples) {
    auto catalog = load(opt);
    const SpaceSpec& s = find_space(catalog, name);
    std::vector<VerifyRow> rows;
    bool any_mismatch = false;

    bool have_model = !s.oracle_model.empty() && has_algebra(s.oracle_model);
    std::optional<MatrixAlgebra> alg;
    if (have_model) alg = build_algebra(s.oracle_model);
    if (!have_model)
        std::cout << "warning: no matrix model paired with " << s.name << "; rows are unchecked\n";

    // every dominant analytic weight with coordinate sum <= bound
    int r = static_cast<int>(s.simple().size());
    std::vector<IntVec> all;
    IntVec cur(r, BigInt(0));
    auto rec = [&](auto&& self, int pos, int rem) -> void {
        if (pos == r) {
            if (s.is_analytic(s.weight_from_coordinates(cur))) all.push_back(cur);
            return;
        }
        for (int c = 0; c <= rem; ++c) {
            cur[pos] = c;
            self(self, pos + 1, rem - c);
        }
        cur[pos] = 0;
    };
    rec(rec, 0, bound);

    RatVec zero(s.rs.ambient(), Rational(0));
    for (const auto& coords : all) {
        RatVec omega = s.weight_from_coordinates(coords);
        bool k0 = is_spherical_k0(s, omega);
        bool flavored = is_spherical(s, omega);
        VerifyRow row;
        row.omega = coords_text(coords);
        row.verdict = flavored ? to_string(in_kernel(s, omega).kind) : "NotSpherical";
        if (!have_model) {
            row.status = "unchecked";
            rows.push_back(row);
            continue;
        }
        try {
            Irrep rep = build_irrep(*alg, omega);
            auto invs = k_invariants(rep);
            if (invs.size() > 1) {
                row.status = "mismatch";
                row.note = "k-invariant space has dimension " + std::to_string(invs.size());
            } else if ((invs.size() == 1) != k0) {
                row.status = "mismatch";
                row.note = "oracle sphericality dim " + std::to_string(invs.size()) +
                           " vs Cartan-Helgason " + (k0 ? "true" : "false");
            } else if (k0) {
                const CVec& v = invs[0];
                WeightSet got = support_of(rep, v, 1e-9);
                WeightSet want = predicted_support(s, omega);
                if (!(got == want)) {
                    row.status = "mismatch";
                    row.note = "support differs from the lattice prediction";
                } else {
                    // the invariant vector is F-invariant exactly when omega
                    // lies in Lambda (this is what the KZ flavor filters on)
                    bool f_inv = true;
                    for (const auto& x : s.restricted().dual_basis) {
                        CVec ph = half_turn_phases(*alg, rep, x);
                        double dev = 0;
                        for (int b = 0; b < rep.dim; ++b) dev = std::max(dev, std::abs(ph(b) * v(b) - v(b)));
                        if (dev > opt.tolerance) f_inv = false;
                    }
                    bool lambda_member = s.restricted().lambda.contains(omega);
                    if (f_inv != lambda_member) {
                        row.status = "mismatch";
                        row.note = "F-invariance disagrees with Lambda membership";
                    } else {
                        // Reynolds projection against the support prediction
                        int n = std::max(samples, reynolds_exactness_threshold(rep));
                        Cplx ra = reynolds_RA(rep, v, v, n);
                        bool zero_in_supp = want.count(zero) > 0;
                        bool vanishes = std::abs(ra) <= opt.tolerance;
                        if (vanishes == zero_in_supp) {
                            row.status = "mismatch";
                            row.note = "Reynolds value " + std::to_string(std::abs(ra)) +
                                       " contradicts the support prediction";
                        } else {
                            row.status = "confirmed";
                        }
                    }
                }
            } else {
                row.status = "confirmed";  // dim 0 matches not-spherical
            }
        } catch (const std::invalid_argument& e) {
            row.status = "unchecked";
            row.note = e.what();
        }
        if (row.status == "mismatch") any_mismatch = true;
        rows.push_back(row);
    }

    std::cout << "space: " << s.name << "  model: " << (have_model ? s.oracle_model : "-") << "\n";
    std::cout << "omega        verdict              status     note\n";
    for (const auto& row : rows) {
        std::string o = row.omega;
        o.resize(std::max<size_t>(13, o.size() + 1), ' ');
        std::string v = row.verdict;
        v.resize(21, ' ');
        std::string st = row.status;
        st.resize(11, ' ');
        std::cout << o << v << st << row.note << "\n";
    }

    // Funk cross-check on the rank-one sphere entries
    if (name == "sphere-2" || name == "rp-2") {
        for (int l = 0; l <= 5; ++l) {
            auto rr = funk::funk_hecke_ratio(l, 10, opt.seed, 64);
            bool ok = l % 2 == 1 ? rr.max_abs_transform <= opt.tolerance
                                 : std::abs(rr.ratio - funk::legendre_P0(l)) <= 1e-8;
            if (!ok) any_mismatch = true;
            std::cout << "funk l=" << l << "  " << (ok ? "confirmed" : "mismatch")
                      << (l % 2 ? "  (odd degree annihilated)" : "  (ratio vs P_l(0))") << "\n";
        }
    }

    if (any_mismatch) {
        std::cout << "verify: MISMATCH\n";
        return kExitMismatch;
    }
    std::cout << "verify: all " << (have_model ? "confirmed" : "unchecked (no model)") << "\n";
    return kExitOk;
}

int cmd_funk(const Options& opt, int l, int samples, int trials, const std::string& format) {
    if (l < 0 || l > 12) throw std::invalid_argument("funk: need 0 <= l <= 12");
    if (samples < 4) throw std::invalid_argument("funk: need samples >= 4");
    if (trials < 1) throw std::invalid_argument("funk: need trials >= 1");
    struct Row {
        int m;
        funk::RatioResult r;
    };
    std::vector<Row> rows;
    for (int m = -l; m <= l; ++m)
        rows.push_back({m, funk::funk_hecke_ratio_m(l, m, trials, opt.seed, samples)});
    if (format == "json") {
        json out;
        out["schema"] = 1;
        out["l"] = l;
        out["samples"] = samples;
        out["trials"] = trials;
        out["legendre_P0"] = funk::legendre_P0(l);
        json jr = json::array();
        for (const auto& row : rows) {
            json j;
            j["l"] = l;
            j["m"] = row.m;
            j["ratio"] = row.r.ratio;
            j["residual"] = row.r.residual;
            j["max_abs_transform"] = row.r.max_abs_transform;
            jr.push_back(j);
        }
        out["rows"] = jr;
        std::cout << out.dump(2) << "\n";
    } else if (format == "csv") {
        std::cout << "l,m,ratio,residual,max_abs_transform\n";
        char buf[160];
        for (const auto& row : rows) {
            std::snprintf(buf, sizeof buf, "%d,%d,%.17g,%.17g,%.17g", l, row.m, row.r.ratio,
                          row.r.residual, row.r.max_abs_transform);
            std::cout << buf << "\n";
        }
    } else {
        throw std::invalid_argument("format must be json or csv");
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"maximal flat Radon transform toolkit"};
    app.require_subcommand(1);
    app.fallthrough();

    Options opt;
    app.add_option("--catalog", opt.catalog_path, "catalog file (default: bundled)");
    app.add_option("--seed", opt.seed, "random seed for the numeric checks");
    app.add_option("--tolerance", opt.tolerance, "numeric zero threshold");

    auto* c_catalog = app.add_subcommand("catalog", "list the validated catalog entries");

    auto* c_analyze = app.add_subcommand("analyze", "derived data and injectivity for one space");
    std::string space;
    c_analyze->add_option("space", space, "space name")->required();

    auto* c_test = app.add_subcommand("test-weight", "classify one highest weight");
    std::string tw_space;
    std::vector<std::string> tw_coords;
    c_test->add_option("space", tw_space)->required();
    c_test->add_option("coords", tw_coords, "fundamental-weight coordinates")->required();

    auto* c_enum = app.add_subcommand("enumerate", "table of spherical weights with verdicts");
    std::string en_space, en_format = "json";
    int en_bound = 0;
    c_enum->add_option("space", en_space)->required();
    c_enum->add_option("--bound", en_bound, "coordinate-sum bound")->required();
    c_enum->add_option("--format", en_format, "json|csv");

    auto* c_verify = app.add_subcommand("verify", "cross-check verdicts against the matrix oracle");
    std::string vf_space;
    int vf_bound = 0, vf_samples = 16;
    c_verify->add_option("space", vf_space)->required();
    c_verify->add_option("--bound", vf_bound)->required();
    c_verify->add_option("--samples", vf_samples, "torus samples per dimension");

    auto* c_funk = app.add_subcommand("funk", "Funk-Hecke ratio table on S^2");
    int fk_l = 0, fk_samples = 64, fk_trials = 20;
    std::string fk_format = "json";
    c_funk->add_option("--l", fk_l, "harmonic degree")->required();
    c_funk->add_option("--samples", fk_samples, "circle samples");
    c_funk->add_option("--trials", fk_trials, "random circles");
    c_funk->add_option("--format", fk_format, "json|csv");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitBadInput;
    }

    try {
        if (*c_catalog) return cmd_catalog(opt);
        if (*c_analyze) return cmd_analyze(opt, space);
        if (*c_test) return cmd_test_weight(opt, tw_space, tw_coords);
        if (*c_enum) return cmd_enumerate(opt, en_space, en_bound, en_format);
        if (*c_verify) return cmd_verify(opt, vf_space, vf_bound, vf_samples);
        if (*c_funk) return cmd_funk(opt, fk_l, fk_samples, fk_trials, fk_format);
    } catch (const CatalogError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitConfig;
    }
    return kExitOk;
}

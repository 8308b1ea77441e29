#pragma once

// Symmetric spaces as (root system, involution theta, analytic lattice,
// invariance flavor), with the derived restricted-root data: Sigma, Pi',
// the restricted Weyl generators, the dual basis {x_i}, and the lattices
// Lambda = (1 - theta)(root lattice) and LambdaHat = (1 - theta)(weight
// lattice). Validation checks every structural requirement exhaustively
// over Delta and reports the first violation with a witness.

#include "radon/root_system.hpp"

#include <optional>
#include <string>
#include <vector>

namespace radon {

enum class Flavor { K0, KZ };

struct RestrictedData {
    std::vector<RatVec> sigma_plus;    // distinct nonzero restrictions of Delta+
    std::vector<RatVec> sigma_simple;  // Pi': indecomposable members of Sigma+
    std::vector<RatVec> dual_basis;    // x_i with (alpha'_j, x_i) = delta_ij
    IntegerLattice lambda;             // (1 - theta) of the root lattice
    IntegerLattice lambda_hat;         // (1 - theta) of the weight lattice
};

class SpaceSpec {
  public:
    std::string name;
    std::string comment;
    std::string oracle_model;  // empty when no matrix model is paired
    RootSystem rs;
    RatMat theta;
    IntegerLattice analytic;
    Flavor flavor = Flavor::K0;

    // positive system adapted to theta (equals the standard one whenever that
    // is already compatible), and the matching simple roots / dual basis
    const std::vector<RatVec>& positive() const { return positive_; }
    const std::vector<RatVec>& simple() const { return simple_; }
    const std::vector<RatVec>& fundamental() const { return fundamental_; }
    bool positivity_adapted() const { return adapted_; }

    const RestrictedData& restricted() const { return restricted_; }

    RatVec theta_apply(const RatVec& v) const { return mat_apply(theta, v); }

    // restriction map r(v) = (v - theta v)/2, the projector onto the
    // (-1)-eigenspace along the (+1)-eigenspace
    RatVec restrict_weight(const RatVec& v) const;

    bool theta_negates(const RatVec& v) const;

    bool is_dominant(const RatVec& v) const { return rs.is_dominant(v, simple_); }
    bool is_analytic(const RatVec& v) const { return analytic.contains(v); }

    // integer fundamental-weight coordinates (adapted basis); nullopt when
    // not algebraically integral
    std::optional<IntVec> weight_coordinates(const RatVec& v) const;
    RatVec weight_from_coordinates(const IntVec& coords) const;

    // restricted reflection s_beta, beta in Pi'
    RatVec restricted_reflect(const RatVec& v, const RatVec& beta) const { return rs.reflect(v, beta); }

    // all elements of the restricted Weyl group as matrices (exhaustive
    // closure; intended for small restricted rank)
    std::vector<RatMat> restricted_weyl_group(size_t cap = 4096) const;

    // derivation entry point, called by validate(); kept public for tests
    void derive();

  private:
    friend struct SpaceValidator;

    std::vector<RatVec> positive_;
    std::vector<RatVec> simple_;
    std::vector<RatVec> fundamental_;
    bool adapted_ = false;
    RestrictedData restricted_;
};

struct ValidationIssue {
    std::string check;
    std::string witness;
    std::string to_string() const { return check + (witness.empty() ? "" : " [witness: " + witness + "]"); }
};

// runs every structural check; returns the first violation, nullopt when ok.
// On success the derived data of `spec` is populated.
std::optional<ValidationIssue> validate_spec(SpaceSpec& spec);

// ---- catalog ----------------------------------------------------------

struct CatalogError : std::runtime_error {
    explicit CatalogError(const std::string& msg) : std::runtime_error(msg) {}
};

// parses and validates a catalog from text; errors carry line numbers
std::vector<SpaceSpec> parse_catalog(const std::string& text);
std::vector<SpaceSpec> load_catalog(const std::string& path);

// the compiled-in default catalog
const std::string& bundled_catalog_text();
std::vector<SpaceSpec> bundled_catalog();

const SpaceSpec& find_space(const std::vector<SpaceSpec>& catalog, const std::string& name);

}  // namespace radon

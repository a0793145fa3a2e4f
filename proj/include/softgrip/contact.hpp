#pragma once

#include <string_view>

#include "softgrip/membrane.hpp"

namespace softgrip {

/// Which bodies carry the normal load against a flat object.
enum class ContactRegime {
    RimOnly,       ///< membrane recessed (h <= g); rigid rim touches the object
    PartialRim,    ///< membrane protrudes but is flattened back to the rim plane
    FullSilicone,  ///< membrane alone carries the load
};

/// Short CSV token: rim | partial | full.
std::string_view regime_token(ContactRegime r);
/// Display name: RimOnly | PartialRim | FullSilicone.
std::string_view regime_name(ContactRegime r);

struct HertzContact {
    double contact_radius = 0.0;  // m
    double area = 0.0;            // m^2
    double indentation = 0.0;     // m
};

/// Sphere of radius R with modulus E* pressed onto a rigid plane by load N.
HertzContact hertz_contact(double R, double E_star, double N);

/// Load at which a single sphere's Hertz indentation equals `depth`.
double hertz_load_for_indentation(double R, double E_star, double depth);

struct ContactSolution {
    ContactRegime regime = ContactRegime::RimOnly;
    double contact_radius_a_c = 0.0;   // m, per bulge
    double contact_area_A = 0.0;       // m^2, summed over parallel bulges
    double indentation_delta = 0.0;    // m
    double silicone_load_N_s = 0.0;    // N
    double rim_load_N_r = 0.0;         // N
    double friction_force_F_f = 0.0;   // N
    double mu_eff = 0.0;
};

/// Regime for pressure p and normal load N, using spec.height_model.
ContactRegime classify_regime(const MembraneSpec& spec, double p, double N);

/**
 * Full contact state at (p, N).
 *
 * Rim load is Coulomb friction with rim_friction_mu_rim; silicone load obeys
 * F = tau_s * A. In the partial regime the membrane is flattened to the rim
 * plane, so it carries exactly the Hertz load that produces an indentation
 * equal to the protrusion and the rim carries the rest.
 *
 * At N == 0, mu_eff is rim_friction_mu_rim in the rim regime and 0 otherwise.
 */
ContactSolution contact_solve(const MembraneSpec& spec, double p, double N);

/// contact_solve(...).mu_eff; N must be positive.
double friction_coefficient(const MembraneSpec& spec, double p, double N);

}  // namespace softgrip

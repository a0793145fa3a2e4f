#pragma once

#include "softgrip/membrane.hpp"
#include "softgrip/units.hpp"

namespace softgrip::testing {

using units::kpa_to_pa;
using units::mm_to_m;

/// Same values as configs/finger_synthetic.cfg. Reaches all three regimes
/// between 0 and 125 kPa at 3-4 N, with friction increasing in pressure.
inline MembraneSpec synthetic_finger() {
    MembraneSpec s;
    s.width_W = mm_to_m(6.0);
    s.length_L = mm_to_m(20.0);
    s.thickness_t = mm_to_m(1.0);
    s.rim_gap_g = mm_to_m(1.5);
    s.residual_stress_sigma0 = kpa_to_pa(20.0);
    s.youngs_modulus_E = kpa_to_pa(30.0);
    s.poisson_nu = 0.48;
    s.zero_pressure_modulus_E0 = kpa_to_pa(500.0);
    s.stiffness_pressure_factor_eta = 1e-6;
    s.max_bulge_h_max = mm_to_m(6.0);
    s.shear_strength_tau_s = kpa_to_pa(60.0);
    s.rim_friction_mu_rim = 0.2;
    return s;
}

/// a = 10 mm, sigma0 = 0.1 MPa, t = 0.5 mm, E = 1 MPa, nu = 0.48.
inline MembraneSpec reference_membrane() {
    MembraneSpec s;
    s.width_W = mm_to_m(20.0);
    s.length_L = mm_to_m(40.0);
    s.thickness_t = mm_to_m(0.5);
    s.rim_gap_g = mm_to_m(1.0);
    s.residual_stress_sigma0 = 1e5;
    s.youngs_modulus_E = 1e6;
    s.poisson_nu = 0.48;
    s.zero_pressure_modulus_E0 = 0.5e6;
    s.stiffness_pressure_factor_eta = 1e-5;
    s.max_bulge_h_max = mm_to_m(3.0);
    s.shear_strength_tau_s = 1e5;
    s.rim_friction_mu_rim = 0.2;
    return s;
}

/// No rim gap and a tall cap limit, so any pressure above a few kPa keeps
/// the membrane in full contact for loads up to tens of newtons.
inline MembraneSpec full_contact_finger() {
    MembraneSpec s = synthetic_finger();
    s.rim_gap_g = 0.0;
    s.max_bulge_h_max = mm_to_m(50.0);
    s.zero_pressure_modulus_E0 = kpa_to_pa(1500.0);
    return s;
}

}  // namespace softgrip::testing

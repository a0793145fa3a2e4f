#include "softgrip/contact.hpp"

#include <algorithm>
#include <cmath>

#include "softgrip/errors.hpp"
#include "softgrip/units.hpp"

namespace softgrip {

std::string_view regime_token(ContactRegime r) {
    switch (r) {
        case ContactRegime::RimOnly: return "rim";
        case ContactRegime::PartialRim: return "partial";
        case ContactRegime::FullSilicone: return "full";
    }
    return "?";
}

std::string_view regime_name(ContactRegime r) {
    switch (r) {
        case ContactRegime::RimOnly: return "RimOnly";
        case ContactRegime::PartialRim: return "PartialRim";
        case ContactRegime::FullSilicone: return "FullSilicone";
    }
    return "?";
}

HertzContact hertz_contact(double R, double E_star, double N) {
    if (!(R > 0.0)) throw DomainError("hertz_contact: radius must be positive");
    if (!(E_star > 0.0)) throw DomainError("hertz_contact: modulus must be positive");
    if (!(N >= 0.0)) throw DomainError("hertz_contact: load must be non-negative");
    HertzContact c;
    if (N == 0.0) return c;
    c.contact_radius = std::cbrt(3.0 * N * R / (4.0 * E_star));
    c.area = units::kPi * c.contact_radius * c.contact_radius;
    const double k = 3.0 * N / (4.0 * E_star * std::sqrt(R));
    c.indentation = std::cbrt(k * k);
    return c;
}

double hertz_load_for_indentation(double R, double E_star, double depth) {
    if (!(depth >= 0.0)) throw DomainError("hertz_load_for_indentation: negative depth");
    return (4.0 / 3.0) * E_star * std::sqrt(R) * depth * std::sqrt(depth);
}

namespace {

void check_inputs(double p, double N) {
    if (!(p >= 0.0)) throw DomainError("contact: pressure must be non-negative");
    if (!(N >= 0.0)) throw DomainError("contact: normal load must be non-negative");
}

struct CapState {
    double h;
    double s;
    double R;
    double E_star;
};

CapState cap_state(const MembraneSpec& spec, double p) {
    CapState st{};
    st.h = bulge_height(spec, p);
    st.s = protrusion(spec, st.h);
    st.E_star = effective_modulus(spec, p);
    st.R = st.s > 0.0 ? curvature_radius(spec, st.h) : 0.0;
    return st;
}

ContactRegime classify(const MembraneSpec& spec, const CapState& st, double N) {
    if (st.s <= 0.0) return ContactRegime::RimOnly;
    const double per_bulge = N / spec.parallel_contacts;
    const double delta = hertz_contact(st.R, st.E_star, per_bulge).indentation;
    return st.s >= delta ? ContactRegime::FullSilicone : ContactRegime::PartialRim;
}

}  // namespace

ContactRegime classify_regime(const MembraneSpec& spec, double p, double N) {
    check_inputs(p, N);
    return classify(spec, cap_state(spec, p), N);
}

ContactSolution contact_solve(const MembraneSpec& spec, double p, double N) {
    check_inputs(p, N);
    const CapState st = cap_state(spec, p);
    const double k = spec.parallel_contacts;
    const double mu_rim = spec.rim_friction_mu_rim;

    ContactSolution sol;
    sol.regime = classify(spec, st, N);

    switch (sol.regime) {
        case ContactRegime::RimOnly:
            sol.rim_load_N_r = N;
            sol.friction_force_F_f = mu_rim * N;
            sol.mu_eff = mu_rim;
            return sol;

        case ContactRegime::FullSilicone: {
            const HertzContact c = hertz_contact(st.R, st.E_star, N / k);
            sol.silicone_load_N_s = N;
            sol.contact_radius_a_c = c.contact_radius;
            sol.contact_area_A = k * c.area;
            sol.indentation_delta = c.indentation;
            sol.friction_force_F_f = spec.shear_strength_tau_s * sol.contact_area_A;
            break;
        }

        case ContactRegime::PartialRim: {
            const double per_bulge =
                std::clamp(hertz_load_for_indentation(st.R, st.E_star, st.s), 0.0, N / k);
            const HertzContact c = hertz_contact(st.R, st.E_star, per_bulge);
            sol.silicone_load_N_s = k * per_bulge;
            sol.rim_load_N_r = N - sol.silicone_load_N_s;
            sol.contact_radius_a_c = c.contact_radius;
            sol.contact_area_A = k * c.area;
            sol.indentation_delta = c.indentation;
            sol.friction_force_F_f =
                spec.shear_strength_tau_s * sol.contact_area_A + mu_rim * sol.rim_load_N_r;
            break;
        }
    }
    sol.mu_eff = N > 0.0 ? sol.friction_force_F_f / N : 0.0;
    return sol;
}

double friction_coefficient(const MembraneSpec& spec, double p, double N) {
    if (!(N > 0.0)) throw DomainError("friction_coefficient: undefined at zero normal load");
    return contact_solve(spec, p, N).mu_eff;
}

}  // namespace softgrip

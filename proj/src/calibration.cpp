#include "softgrip/calibration.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "softgrip/contact.hpp"
#include "softgrip/errors.hpp"
#include "softgrip/levenberg_marquardt.hpp"

namespace softgrip {

void validate(const ForceTrace& trace) {
    for (std::size_t i = 0; i < trace.samples.size(); ++i) {
        const ForceSample& s = trace.samples[i];
        if (!std::isfinite(s.time) || !std::isfinite(s.fy) || !std::isfinite(s.fz)) {
            throw DomainError("ForceTrace: non-finite value in sample " + std::to_string(i));
        }
        if (i > 0 && !(s.time > trace.samples[i - 1].time)) {
            throw DomainError("ForceTrace: time must be strictly increasing (sample " +
                              std::to_string(i) + ")");
        }
    }
}

double extract_mu(const ForceTrace& trace, double contact_threshold) {
    if (trace.samples.empty()) throw DomainError("extract_mu: empty trace");
    if (!(contact_threshold > 0.0)) throw DomainError("extract_mu: threshold must be positive");
    validate(trace);

    bool any = false;
    double best = 0.0;
    for (const ForceSample& s : trace.samples) {
        const double fz = std::abs(s.fz);
        if (fz < contact_threshold) continue;
        best = any ? std::max(best, std::abs(s.fy) / fz) : std::abs(s.fy) / fz;
        any = true;
    }
    if (!any) throw NoContactError("extract_mu: no sample reaches the contact threshold");
    return best;
}

void validate(const FrictionSample& s) {
    if (!(s.pressure >= 0.0)) throw DomainError("FrictionSample: pressure must be non-negative");
    if (!(s.normal_force > 0.0)) throw DomainError("FrictionSample: normal_force must be positive");
    if (!(s.mu_measured > 0.0)) throw DomainError("FrictionSample: mu must be positive");
}

std::vector<double> predict_mu_curve(const MembraneSpec& spec, std::span<const double> pressures,
                                     double normal_force) {
    std::vector<double> out;
    out.reserve(pressures.size());
    for (double p : pressures) out.push_back(friction_coefficient(spec, p, normal_force));
    return out;
}

FitMask parse_fit_mask(std::string_view text) {
    FitMask mask = FitMask::none();
    std::stringstream ss{std::string(text)};
    std::string item;
    while (std::getline(ss, item, ',')) {
        item.erase(0, item.find_first_not_of(" \t"));
        item.erase(item.find_last_not_of(" \t") + 1);
        if (item == "sigma0") mask.sigma0 = true;
        else if (item == "eta") mask.eta = true;
        else if (item == "tau_s") mask.tau_s = true;
        else if (item == "mu_rim") mask.mu_rim = true;
        else if (item == "E0" || item == "e0") mask.e0 = true;
        else if (!item.empty()) throw ParseError("unknown fit parameter '" + item + "'");
    }
    return mask;
}

namespace {

constexpr double kMuRimUpper = 2.0;

// Maps between MembraneSpec fields and the unconstrained optimisation vector.
class ParameterMap {
public:
    ParameterMap(const MembraneSpec& base, const FitMask& mask) : base_(base) {
        if (mask.sigma0) fields_.push_back(Field::Sigma0);
        if (mask.eta) fields_.push_back(Field::Eta);
        if (mask.tau_s) fields_.push_back(Field::TauS);
        if (mask.mu_rim) fields_.push_back(Field::MuRim);
        if (mask.e0) fields_.push_back(Field::E0);
    }

    Eigen::VectorXd encode(const MembraneSpec& s) const {
        Eigen::VectorXd x(static_cast<Eigen::Index>(fields_.size()));
        for (std::size_t i = 0; i < fields_.size(); ++i) {
            const double v = value(s, fields_[i]);
            if (fields_[i] == Field::MuRim) {
                if (!(v > 0.0 && v < kMuRimUpper)) {
                    throw DomainError("fit_parameters: initial mu_rim must lie in (0, 2)");
                }
                x(static_cast<Eigen::Index>(i)) = std::log(v / (kMuRimUpper - v));
            } else {
                if (!(v > 0.0)) {
                    throw DomainError("fit_parameters: initial value of a fitted parameter must be positive");
                }
                x(static_cast<Eigen::Index>(i)) = std::log(v);
            }
        }
        return x;
    }

    MembraneSpec decode(const Eigen::VectorXd& x) const {
        MembraneSpec s = base_;
        for (std::size_t i = 0; i < fields_.size(); ++i) {
            const double z = x(static_cast<Eigen::Index>(i));
            const double v = fields_[i] == Field::MuRim ? kMuRimUpper / (1.0 + std::exp(-z))
                                                        : std::exp(z);
            value(s, fields_[i]) = v;
        }
        return s;
    }

private:
    enum class Field { Sigma0, Eta, TauS, MuRim, E0 };

    static double& value(MembraneSpec& s, Field f) {
        switch (f) {
            case Field::Sigma0: return s.residual_stress_sigma0;
            case Field::Eta: return s.stiffness_pressure_factor_eta;
            case Field::TauS: return s.shear_strength_tau_s;
            case Field::MuRim: return s.rim_friction_mu_rim;
            case Field::E0: return s.zero_pressure_modulus_E0;
        }
        return s.shear_strength_tau_s;
    }
    static double value(const MembraneSpec& s, Field f) {
        return value(const_cast<MembraneSpec&>(s), f);
    }

    MembraneSpec base_;
    std::vector<Field> fields_;
};

struct Prediction {
    Eigen::VectorXd residual;
    std::vector<ContactRegime> regimes;
};

Prediction predict(const MembraneSpec& spec, std::span<const FrictionSample> samples) {
    Prediction out;
    out.residual.resize(static_cast<Eigen::Index>(samples.size()));
    out.regimes.reserve(samples.size());
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const ContactSolution c = contact_solve(spec, samples[i].pressure, samples[i].normal_force);
        out.residual(static_cast<Eigen::Index>(i)) = c.mu_eff - samples[i].mu_measured;
        out.regimes.push_back(c.regime);
    }
    return out;
}

}  // namespace

FitResult fit_parameters(const MembraneSpec& initial, std::span<const FrictionSample> samples,
                         const FitMask& mask, const FitOptions& options) {
    validate(initial);
    for (const FrictionSample& s : samples) validate(s);

    if (samples.size() < static_cast<std::size_t>(mask.count())) {
        throw ArityError("fit_parameters: need at least as many samples as fitted parameters");
    }
    std::set<double> pressures;
    for (const FrictionSample& s : samples) pressures.insert(s.pressure);
    if (pressures.size() < 2) {
        throw ArityError("fit_parameters: samples must span at least two distinct pressures");
    }

    const ParameterMap map(initial, mask);
    const double step = options.fd_relative_step;

    auto residuals = [&](const Eigen::VectorXd& x) {
        try {
            return predict(map.decode(x), samples).residual;
        } catch (const DomainError&) {
            return Eigen::VectorXd::Constant(static_cast<Eigen::Index>(samples.size()), HUGE_VAL)
                .eval();
        }
    };

    auto jacobian = [&](const Eigen::VectorXd& x, const Eigen::VectorXd& r0) {
        const auto m = static_cast<Eigen::Index>(samples.size());
        const std::vector<ContactRegime> centre = predict(map.decode(x), samples).regimes;
        Eigen::MatrixXd J(m, x.size());
        for (Eigen::Index j = 0; j < x.size(); ++j) {
            const double h = step * std::max(std::abs(x(j)), 1.0);
            Eigen::VectorXd xp = x, xm = x;
            xp(j) += h;
            xm(j) -= h;
            const Prediction plus = predict(map.decode(xp), samples);
            const Prediction minus = predict(map.decode(xm), samples);
            for (Eigen::Index i = 0; i < m; ++i) {
                const auto k = static_cast<std::size_t>(i);
                if (plus.regimes[k] == minus.regimes[k] || (plus.regimes[k] != centre[k] &&
                                                            minus.regimes[k] != centre[k])) {
                    J(i, j) = (plus.residual(i) - minus.residual(i)) / (2.0 * h);
                } else if (plus.regimes[k] == centre[k]) {
                    J(i, j) = (plus.residual(i) - r0(i)) / h;
                } else {
                    J(i, j) = (r0(i) - minus.residual(i)) / h;
                }
            }
        }
        return J;
    };

    LmOptions lm;
    lm.max_iterations = options.max_iterations;
    lm.rel_cost_tol = options.rel_cost_tol;
    lm.grad_tol = options.grad_tol;

    const LmResult res = levenberg_marquardt(residuals, jacobian, map.encode(initial), lm);

    FitResult out;
    out.spec = map.decode(res.x);
    out.mask = mask;
    out.iterations = res.iterations;
    out.converged = res.converged;
    out.initial_cost = res.initial_cost;
    out.final_cost = res.cost;
    out.rms_residual = std::sqrt(res.cost / static_cast<double>(samples.size()));
    if (!samples.empty()) out.material_label = samples.front().material_label;
    return out;
}

std::vector<FitResult> fit_by_material(const MembraneSpec& initial,
                                       std::span<const FrictionSample> samples,
                                       const FitMask& mask, const FitOptions& options) {
    std::vector<std::string> order;
    for (const FrictionSample& s : samples) {
        if (std::find(order.begin(), order.end(), s.material_label) == order.end()) {
            order.push_back(s.material_label);
        }
    }
    std::vector<FitResult> results;
    for (const std::string& label : order) {
        std::vector<FrictionSample> group;
        for (const FrictionSample& s : samples) {
            if (s.material_label == label) group.push_back(s);
        }
        FitResult r = fit_parameters(initial, group, mask, options);
        r.material_label = label;
        results.push_back(std::move(r));
    }
    return results;
}

}  // namespace softgrip

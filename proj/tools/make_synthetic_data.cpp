// Writes noiseless friction samples and a sliding force trace generated from
// a membrane config. Usage: make_synthetic_data <finger.cfg> <out_dir>
#include <algorithm>
#include <iostream>
#include <string>
#include <vector>

#include "softgrip/calibration.hpp"
#include "softgrip/config.hpp"
#include "softgrip/contact.hpp"
#include "softgrip/csv.hpp"

int main(int argc, char** argv) {
    using namespace softgrip;
    if (argc != 3) {
        std::cerr << "usage: make_synthetic_data <finger.cfg> <out_dir>\n";
        return 2;
    }
    const MembraneSpec spec = load_membrane_spec(argv[1]);
    const std::string dir = argv[2];

    std::vector<FrictionSample> samples;
    for (double force : {3.0, 3.5, 4.0}) {
        for (int i = 0; i < 20; ++i) {
            const double p = 125e3 * i / 19.0;
            samples.push_back({p, force, friction_coefficient(spec, p, force), "synthetic"});
        }
    }
    write_text_file(dir + "/synthetic_friction.csv", format_friction_samples_csv(samples));

    // Normal load ramps to 3 N, then the object slides and shear saturates.
    const ContactSolution c = contact_solve(spec, 75e3, 3.0);
    std::string trace = std::string(kForceTraceHeader) + "\n";
    for (int i = 0; i <= 100; ++i) {
        const double t = 0.01 * i;
        const double fz = 0.0 - 3.0 * std::min(1.0, t / 0.2);
        const double fy = c.mu_eff * 3.0 * std::min(1.0, std::max(0.0, (t - 0.2) / 0.3));
        trace += format_double(t) + "," + format_double(fy) + "," + format_double(fz) + "\n";
    }
    write_text_file(dir + "/synthetic_trace.csv", trace);
    return 0;
}

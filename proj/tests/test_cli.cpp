#include <gtest/gtest.h>

#include <algorithm>
#include <cstdlib>
#include <sys/wait.h>
#include <filesystem>
#include <sstream>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "softgrip/cli.hpp"
#include "softgrip/config.hpp"
#include "softgrip/grasp.hpp"

using namespace softgrip;
namespace fs = std::filesystem;

namespace {

const std::string kSource = SOFTGRIP_SOURCE_DIR;
const std::string kFinger = kSource + "/configs/finger_synthetic.cfg";
const std::string kSweep = kSource + "/configs/sweep_200g.cfg";

struct Invocation {
    int code;
    std::string out;
    std::string err;
};

Invocation run(std::vector<std::string> args) {
    args.insert(args.begin(), "softgrip");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = cli_main(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

class TempDir {
public:
    TempDir() {
        path_ = fs::temp_directory_path() /
                ("softgrip_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
                 "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
        fs::create_directories(path_);
    }
    ~TempDir() { fs::remove_all(path_); }
    std::string file(const std::string& name) const { return (path_ / name).string(); }

private:
    fs::path path_;
};

}  // namespace

TEST(Cli, MuAtZeroPressureIsRimFriction) {
    const Invocation r = run({"mu", "--config", kFinger, "--pressure-kpa", "0", "--force-n", "3"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("regime = RimOnly\n"), std::string::npos);
    EXPECT_NE(r.out.find("mu = 0.2\n"), std::string::npos);
}

TEST(Cli, BulgeModels) {
    const Invocation exact = run({"bulge", "--config", kFinger, "--pressure-kpa", "50"});
    EXPECT_EQ(exact.code, 0);
    EXPECT_NE(exact.out.find("height_model = exact"), std::string::npos);
    const Invocation linear = run({"bulge", "--config", kFinger, "--pressure-kpa", "50", "--linear"});
    EXPECT_NE(linear.out.find("height_model = linear"), std::string::npos);
    const Invocation flat = run({"bulge", "--config", kFinger, "--pressure-kpa", "0"});
    EXPECT_NE(flat.out.find("R_mm = inf"), std::string::npos);
    EXPECT_EQ(run({"bulge", "--config", kFinger, "--pressure-kpa", "50", "--exact", "--linear"}).code, 2);
}

TEST(Cli, MinForceMatchesLibrary) {
    const Invocation r = run({"grasp", "--config", kFinger, "--mass-kg", "0.2", "--pressure-kpa", "100",
                       "--min-force"});
    ASSERT_EQ(r.code, 0) << r.err;
    const double expected =
        min_normal_force(load_membrane_spec(kFinger), 0.2, 100e3, 2, 100.0);
    EXPECT_EQ(r.out, "min_force_n = " + format_double(expected) + "\n");
}

TEST(Cli, GraspFeasibility) {
    const Invocation r = run({"grasp", "--config", kFinger, "--mass-kg", "0.2", "--pressure-kpa", "0",
                       "--force-n", "10"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("feasible = true"), std::string::npos);
    EXPECT_NE(r.out.find("mu_required = 0.0981\n"), std::string::npos);
}

TEST(Cli, ExitCodes) {
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"--help"}).code, 0);
    EXPECT_EQ(run({"mu", "--config", kFinger}).code, 2);
    EXPECT_EQ(run({"mu", "--config", "/nonexistent.cfg", "--pressure-kpa", "0", "--force-n", "1"}).code, 2);
    EXPECT_EQ(run({"mu", "--config", kFinger, "--pressure-kpa", "-5", "--force-n", "1"}).code, 1);
    EXPECT_EQ(run({"grasp", "--config", kFinger, "--mass-kg", "0.2", "--pressure-kpa", "0"}).code, 2);
    const Invocation infeasible = run({"grasp", "--config", kFinger, "--mass-kg", "50", "--pressure-kpa",
                                "100", "--min-force", "--search-max-n", "5"});
    EXPECT_EQ(infeasible.code, 1);
    EXPECT_NE(infeasible.err.find("margin"), std::string::npos);
}

TEST(Cli, SweepIsReproducibleAcrossThreads) {
    TempDir dir;
    ASSERT_EQ(run({"sweep", "--config", kFinger, "--sweep", kSweep, "--out", dir.file("a.csv")}).code, 0);
    ASSERT_EQ(run({"sweep", "--config", kFinger, "--sweep", kSweep, "--out", dir.file("b.csv"),
                   "--threads", "4"}).code, 0);
    ASSERT_EQ(run({"sweep", "--config", kFinger, "--sweep", kSweep, "--out", dir.file("c.csv"),
                   "--seed", "7"}).code, 0);
    const std::string a = read_text_file(dir.file("a.csv"));
    EXPECT_EQ(a, read_text_file(dir.file("b.csv")));
    EXPECT_NE(a, read_text_file(dir.file("c.csv")));
    EXPECT_EQ(std::count(a.begin(), a.end(), '\n'), 19);
}

TEST(Cli, CalibrateRecoversGeneratingParameters) {
    TempDir dir;
    MembraneSpec guess = softgrip::testing::synthetic_finger();
    guess.residual_stress_sigma0 *= 1.4;
    guess.shear_strength_tau_s *= 0.7;
    guess.rim_friction_mu_rim = 0.3;
    write_text_file(dir.file("guess.cfg"), format_membrane_spec(guess));
    const Invocation r = run({"calibrate", "--config", dir.file("guess.cfg"), "--data",
                       kSource + "/data/synthetic_friction.csv", "--out", dir.file("fit.txt"),
                       "--fit", "sigma0,tau_s,mu_rim"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto kv = parse_key_values(read_text_file(dir.file("fit.txt")));
    ASSERT_EQ(kv.size(), 7u);
    EXPECT_EQ(kv[0].key, "material");
    EXPECT_EQ(kv[0].value, "synthetic");
    EXPECT_NEAR(parse_double(kv[1].value), 20e3, 20.0);
    EXPECT_NEAR(parse_double(kv[2].value), 60e3, 60.0);
    EXPECT_NEAR(parse_double(kv[3].value), 0.2, 2e-4);
    EXPECT_EQ(kv[6].value, "true");
    EXPECT_EQ(run({"calibrate", "--config", kFinger, "--data", kSource + "/data/synthetic_friction.csv",
                   "--out", dir.file("x.txt"), "--fit", "gamma"}).code, 2);
}

TEST(Cli, ExtractMu) {
    const Invocation r = run({"extract-mu", "--trace", kSource + "/data/synthetic_trace.csv"});
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(r.out.rfind("mu = ", 0), 0u);
    EXPECT_EQ(run({"extract-mu", "--trace", kSource + "/data/synthetic_trace.csv", "--threshold-n",
                   "100"}).code, 1);
}

TEST(CliBinary, RunsStandalone) {
    const std::string cmd = std::string("\"") + SOFTGRIP_CLI + "\" mu --config \"" + kFinger +
                            "\" --pressure-kpa 0 --force-n 3 > /dev/null";
    EXPECT_EQ(std::system(cmd.c_str()), 0);
    const std::string bad = std::string("\"") + SOFTGRIP_CLI + "\" bogus > /dev/null 2>&1";
    const int status = std::system(bad.c_str());
    EXPECT_EQ(WEXITSTATUS(status), 2);
}

#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "oneform/experiments.hpp"
#include "oneform/runio.hpp"

using namespace oneform;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    REQUIRE(f.good());
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

bool exists(const std::string& path) { return std::ifstream(path).good(); }

ExperimentConfig base_config(const std::string& name, const std::string& out) {
    ExperimentConfig cfg;
    cfg.experiment = name;
    cfg.seed = 4242;
    cfg.seed_set = true;
    cfg.out_path = out;
    return cfg;
}

} // namespace

TEST_CASE("config validation") {
    ExperimentConfig cfg = base_config("wz-scan", "/tmp/oneform_test_wz.csv");
    cfg.seed_set = false;
    CHECK_THROWS(run_experiment(cfg));  // seed is mandatory

    cfg = base_config("nonsense", "/tmp/oneform_test_x.csv");
    CHECK_THROWS(run_experiment(cfg));
    CHECK(!exists("/tmp/oneform_test_x.csv"));

    cfg = base_config("wz-scan", "/tmp/oneform_test_y.csv");
    cfg.sizes = {4};
    cfg.grid_set = true;
    cfg.grid_start = 0.05;
    cfg.grid_stop = 0.06;
    cfg.grid_step = 0.01;
    cfg.decoder = "bogus";
    CHECK_THROWS(run_experiment(cfg));
    CHECK(!exists("/tmp/oneform_test_y.csv"));
}

TEST_CASE("kappa-exact writes the table") {
    ExperimentConfig cfg = base_config("kappa-exact", "/tmp/oneform_test_kappa.csv");
    cfg.lx = cfg.ly = 2;
    cfg.theta = 0.0;
    run_experiment(cfg);
    const std::string csv = slurp(cfg.out_path);
    CHECK(csv.find("# oneform") != std::string::npos);
    CHECK(csv.find("# seed 4242") != std::string::npos);
    CHECK(csv.find("# lattice 2x2 torus") != std::string::npos);
    CHECK(csv.find("m_mask,q_x,q_y,kappa") != std::string::npos);
    CHECK(csv.find("0,1,1,1\n") != std::string::npos);  // all weight at the trivial sector
    const std::string summary = slurp(cfg.out_path + ".summary.json");
    CHECK(summary.find("\"sum_max_kappa\": 1.0") != std::string::npos);
}

TEST_CASE("byte-identical outputs across worker counts") {
    ExperimentConfig cfg = base_config("wz-scan", "/tmp/oneform_test_det.csv");
    cfg.sizes = {4, 6};
    cfg.grid_set = true;
    cfg.grid_start = 0.06;
    cfg.grid_stop = 0.12;
    cfg.grid_step = 0.03;
    cfg.samples = 400;

    setenv("ONEFORM_WORKERS", "1", 1);
    run_experiment(cfg);
    const std::string csv1 = slurp(cfg.out_path);
    const std::string json1 = slurp(cfg.out_path + ".summary.json");

    setenv("ONEFORM_WORKERS", "8", 1);
    run_experiment(cfg);
    CHECK(slurp(cfg.out_path) == csv1);
    CHECK(slurp(cfg.out_path + ".summary.json") == json1);
    unsetenv("ONEFORM_WORKERS");

    // rerun with same config and seed reproduces bytes again
    run_experiment(cfg);
    CHECK(slurp(cfg.out_path) == csv1);
}

TEST_CASE("criterion-1d and collapse round trip") {
    ExperimentConfig cfg = base_config("criterion-1d", "/tmp/oneform_test_crit.csv");
    cfg.sizes = {8, 12};
    cfg.grid_set = true;
    cfg.grid_start = 0.0;
    cfg.grid_stop = 1.5;
    cfg.grid_step = 0.5;
    run_experiment(cfg);
    CsvTable t = read_csv(cfg.out_path);
    CHECK(t.col("theta") == 0);
    CHECK(t.rows.size() == 8);

    // synthetic wz-style table for the collapse reader
    {
        std::ofstream f("/tmp/oneform_test_fake_wz.csv");
        f << "# oneform test\nL,p,mean_wz,stderr,n_samples\n";
        for (double L : {8.0, 16.0})
            for (int i = 0; i <= 10; ++i) {
                const double p = 0.08 + 0.005 * i;
                const double u = (p - 0.103) * std::pow(L, 1.0 / 1.5);
                f << L << "," << p << "," << 1.0 / (1.0 + std::exp(6 * u)) << ",0.002,100\n";
            }
    }
    ExperimentConfig cc = base_config("collapse", "/tmp/oneform_test_collapse.csv");
    cc.in_path = "/tmp/oneform_test_fake_wz.csv";
    cc.xc = 0.103;
    cc.nu = 1.5;
    cc.xc_set = true;
    run_experiment(cc);
    const std::string summary = slurp(cc.out_path + ".summary.json");
    CHECK(summary.find("collapse_quality") != std::string::npos);
    CHECK(summary.find("\"x_c\"") != std::string::npos);
}

TEST_CASE("rbim-check experiment") {
    ExperimentConfig cfg = base_config("rbim-check", "/tmp/oneform_test_rbim.csv");
    cfg.lx = cfg.ly = 2;
    cfg.gx = 0.5;
    run_experiment(cfg);
    const std::string summary = slurp(cfg.out_path + ".summary.json");
    CHECK(summary.find("max_rel_err") != std::string::npos);
}

// Drives the installed binary end to end through popen. The binary path
// arrives via STEERCERT_CLI (ctest sets it to the build-tree executable).
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <string>

#include <json.hpp>

#include "steercert/qudit.hpp"

using json = nlohmann::json;
using namespace steercert;

namespace {

struct CliResult {
    int status = -1;
    std::string out;
};

std::string cli_path() {
    const char* p = std::getenv("STEERCERT_CLI");
    REQUIRE_MESSAGE(p != nullptr, "STEERCERT_CLI must point at the steercert binary");
    return p;
}

// prefix lets a test place environment assignments before the binary
CliResult run_cli(const std::string& args, const std::string& prefix = "") {
    std::string cmd = prefix;
    if (!cmd.empty()) cmd += ' ';
    cmd += '"' + cli_path() + "\" " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    CliResult r;
    char buf[4096];
    std::size_t n = 0;
    while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
    const int rc = pclose(pipe);
    REQUIRE(rc != -1);
    r.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    return r;
}

json parse(const CliResult& r) { return json::parse(r.out); }

void write_unitary_file(const std::string& path, const ComplexMatrix& u) {
    std::ofstream out(path);
    REQUIRE(out.good());
    out << u.rows() << "\n" << std::setprecision(17);
    for (std::size_t r = 0; r < u.rows(); ++r) {
        for (std::size_t c = 0; c < u.cols(); ++c)
            out << u(r, c).real() << ',' << u(r, c).imag() << (c + 1 < u.cols() ? ' ' : '\n');
    }
}

} // namespace

TEST_CASE("bounds") {
    const CliResult r2 = run_cli("bounds --d 2 --json");
    CHECK(r2.status == 0);
    const json j2 = parse(r2);
    CHECK(j2["alpha_R"].get<double>() == doctest::Approx(1.707107).epsilon(1e-6));
    CHECK(j2["D_coh"].get<double>() == doctest::Approx(0.110028).epsilon(1e-5));
    CHECK(j2["Fproc_ent"].get<double>() == doctest::Approx(0.779944).epsilon(1e-5));
    CHECK(j2["D_ind"].get<double>() == doctest::Approx(0.146447).epsilon(1e-6));

    const json j8 = parse(run_cli("bounds --d 8 --json"));
    CHECK(j8["Fproc_sdu"].get<double>() == doctest::Approx(0.353553).epsilon(1e-6));

    const CliResult human = run_cli("bounds --d 4");
    CHECK(human.status == 0);
    CHECK(human.out.find("0.500000") != std::string::npos);
    CHECK(human.out.find("0.621421") != std::string::npos);

    const CliResult csv = run_cli("bounds --d 2 --csv");
    CHECK(csv.status == 0);
    CHECK(csv.out.rfind("d,alpha_R,ent_bound", 0) == 0);
    CHECK(csv.out.find("1.707107") != std::string::npos);

    CHECK(run_cli("bounds --d 1").status == 1);
    CHECK(run_cli("bounds --d 2 --json --csv").status == 1);
}

TEST_CASE("simulate") {
    const CliResult ideal = run_cli("simulate --d 4 --kernel sdu,ent --json");
    CHECK(ideal.status == 0);
    const json ji = parse(ideal);
    REQUIRE(ji.size() == 2);
    CHECK(ji[0]["kernel"] == "sdu");
    CHECK(ji[0]["value"].get<double>() == doctest::Approx(2.0).epsilon(1e-9));
    CHECK(ji[0]["certified"].get<bool>());
    CHECK(ji[1]["kernel"] == "ent");
    CHECK(std::abs(ji[1]["value"].get<double>()) < 1e-9);

    const CliResult flip = run_cli("simulate --d 2 --channel bitflip --kernel sdu,temporal --json");
    CHECK(flip.status == 2);
    const json jf = parse(flip);
    CHECK(jf[0]["value"].get<double>() == doctest::Approx(1.0).epsilon(1e-9));
    CHECK_FALSE(jf[0]["certified"].get<bool>());
    CHECK(jf[1]["kernel"] == "temporal");
    CHECK(jf[1]["value"].get<double>() == doctest::Approx(2.0).epsilon(1e-9));
    CHECK(jf[1]["certified"].get<bool>());

    const CliResult noisy = run_cli("simulate --d 2 --channel depolarizing:p=0.5 --json");
    CHECK(noisy.status == 2);
    CHECK(parse(noisy)[0]["value"].get<double>() == doctest::Approx(1.5).epsilon(1e-9));

    const CliResult human = run_cli("simulate --d 2");
    CHECK(human.status == 0);
    CHECK(human.out.find("CERTIFIED") != std::string::npos);

    CHECK(run_cli("simulate --d 2 --channel teleport").status == 1);
    CHECK(run_cli("simulate --d 2 --kernel bogus").status == 1);
    CHECK(run_cli("simulate --d 3 --kernel temporal").status == 1);
}

TEST_CASE("simulate with a unitary file") {
    const std::string path = "cli_test_unitary.txt";
    write_unitary_file(path, fourier_matrix(3));
    // misaligned channel alone degrades the kernel; compensating readout restores it
    const CliResult off =
        run_cli("simulate --d 3 --channel unitary:file=" + path + " --json");
    CHECK(off.status == 2);
    CHECK(parse(off)[0]["value"].get<double>() < 2.0 - 1e-6);
    const CliResult on = run_cli("simulate --d 3 --channel unitary:file=" + path +
                                 " --unitary file:" + path + " --json");
    CHECK(on.status == 0);
    CHECK(parse(on)[0]["value"].get<double>() == doctest::Approx(2.0).epsilon(1e-9));
    std::remove(path.c_str());
}

TEST_CASE("simulate config overlay") {
    const std::string path = "cli_test_config.json";
    {
        std::ofstream out(path);
        out << R"({"d": 3, "channel": "depolarizing:p=0.5", "kernels": ["sdu"]})";
    }
    const CliResult base = run_cli("simulate --config " + path + " --json");
    CHECK(base.status == 2);
    const json jb = parse(base);
    CHECK(jb[0]["d"].get<std::size_t>() == 3);
    CHECK(jb[0]["value"].get<double>() == doctest::Approx(4.0 / 3.0).epsilon(1e-9));
    // explicit flags beat file values
    const CliResult over = run_cli("simulate --config " + path + " --channel identity --json");
    CHECK(over.status == 0);
    const json jo = parse(over);
    CHECK(jo[0]["d"].get<std::size_t>() == 3);
    CHECK(jo[0]["value"].get<double>() == doctest::Approx(2.0).epsilon(1e-9));

    {
        std::ofstream out(path);
        out << R"({"warp": 9})";
    }
    CHECK(run_cli("simulate --config " + path).status == 1);
    std::remove(path.c_str());
}

TEST_CASE("certify-gate") {
    const CliResult toffoli = run_cli("certify-gate --d 8 --fprocess 0.666 --json");
    CHECK(toffoli.status == 0);
    const json jt = parse(toffoli);
    CHECK(jt["certified_sdu"].get<bool>());
    CHECK(jt["threshold_sdu"].get<double>() == doctest::Approx(0.353553).epsilon(1e-6));
    CHECK(jt["f_process_lower"].get<double>() - jt["threshold_sdu"].get<double>() ==
          doctest::Approx(0.312447).epsilon(1e-5));
    CHECK_FALSE(jt.contains("concurrence_lower"));

    const json jc = parse(run_cli("certify-gate --d 4 --f1 1 --f2 1 --json"));
    REQUIRE(jc.contains("concurrence_lower"));
    CHECK(jc["concurrence_lower"].get<double>() == doctest::Approx(1.0).epsilon(1e-9));

    const json jm = parse(run_cli("certify-gate --d 4 --fprocess 0.55 --json"));
    CHECK(jm["certified_sdu"].get<bool>());
    CHECK_FALSE(jm["certified_ent"].get<bool>());

    CHECK(run_cli("certify-gate --d 4 --fprocess 0.3 --json").status == 2);
    CHECK(run_cli("certify-gate --d 4 --f1 0.9").status == 1);
    CHECK(run_cli("certify-gate --d 4 --fprocess 0.9 --f1 0.9 --f2 0.9").status == 1);
    CHECK(run_cli("certify-gate --d 4").status == 1);
}

TEST_CASE("adversary") {
    const CliResult opt = run_cli("adversary --d 2 --strategy optimal --json");
    CHECK(opt.status == 0);
    const json jo = parse(opt);
    CHECK(jo["best_sdu"].get<double>() == doctest::Approx(1.707107).epsilon(1e-6));
    CHECK(jo["best_sdu"].get<double>() <= jo["bound_sdu"].get<double>() + 1e-9);
    CHECK(jo["best_temporal"].is_number());

    const json jp = parse(run_cli("adversary --d 4 --strategy preset:fixed-basis-measure --json"));
    CHECK(jp["best_sdu"].get<double>() == doctest::Approx(1.25).epsilon(1e-9));
    CHECK(jp["best_temporal"].is_null());

    const json jr = parse(run_cli("adversary --d 3 --strategy random --trials 200 --seed 11 --json"));
    CHECK(jr["best_sdu"].get<double>() <= jr["bound_sdu"].get<double>() + 1e-12);
    CHECK(jr["best_ent"].get<double>() <= -std::log2(3.0) + 1e-12);

    CHECK(run_cli("adversary --strategy bogus").status == 1);
}

TEST_CASE("robustness") {
    const CliResult csv = run_cli("robustness --d-min 2 --d-max 4");
    CHECK(csv.status == 0);
    CHECK(csv.out.rfind("d,p_sdu,p_ent\n2,0.292893,0.220056\n", 0) == 0);

    const json arr = parse(run_cli("robustness --d-min 2 --d-max 3 --json"));
    REQUIRE(arr.size() == 2);
    CHECK(arr[0]["d"].get<std::size_t>() == 2);
    CHECK(arr[0]["p_sdu"].get<double>() == doctest::Approx(0.292893).epsilon(1e-6));
    CHECK(arr[1]["d"].get<std::size_t>() == 3);

    CHECK(run_cli("robustness --d-min 1 --d-max 4").status == 1);
    CHECK(run_cli("robustness --d-min 8 --d-max 4").status == 1);
    CHECK(run_cli("robustness --d-min 2 --d-max 65").status == 1);
}

TEST_CASE("oneway") {
    const CliResult ideal = run_cli("oneway --json");
    CHECK(ideal.status == 0);
    const json ji = parse(ideal);
    CHECK(ji["value"].get<double>() == doctest::Approx(2.0).epsilon(1e-9));
    CHECK(ji["bound"].get<double>() == doctest::Approx(1.5).epsilon(1e-12));

    const CliResult noisy = run_cli("oneway --channel depolarizing:p=0.5 --json");
    CHECK(noisy.status == 2);
    CHECK(parse(noisy)["value"].get<double>() < 1.5);

    CHECK(run_cli("oneway --channel bitflip").status == 1);
}

TEST_CASE("equivalence") {
    const CliResult r = run_cli("equivalence --d 3 --trials 20 --seed 3 --json");
    CHECK(r.status == 0);
    const json j = parse(r);
    CHECK(j["d"].get<std::size_t>() == 3);
    CHECK(j["trials"].get<std::size_t>() == 20);
    CHECK(j["max_abs_diff"].get<double>() < 1e-12);
}

TEST_CASE("determinism and seeding") {
    const std::string cmd = "adversary --d 2 --strategy random --trials 60 --seed 17 --json";
    CHECK(run_cli(cmd).out == run_cli(cmd).out);

    const std::string eq = "equivalence --d 2 --trials 10 --seed 5 --json";
    CHECK(run_cli(eq).out == run_cli(eq).out);

    // the environment seed is the default; an explicit flag wins over it
    const CliResult env_seed =
        run_cli("adversary --d 2 --strategy random --trials 40 --json", "STEERCERT_SEED=123");
    const CliResult flag_seed = run_cli(
        "adversary --d 2 --strategy random --trials 40 --seed 123 --json", "STEERCERT_SEED=999");
    CHECK(env_seed.out == flag_seed.out);
    CHECK(run_cli("bounds --d 2", "STEERCERT_SEED=abc").status == 1);
}

TEST_CASE("usage surface") {
    CHECK(run_cli("--help").status == 0);
    CHECK(run_cli("simulate --help").status == 0);
    CHECK(run_cli("").status == 1);
    CHECK(run_cli("frobnicate").status == 1);
}

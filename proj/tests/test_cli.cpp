#include <array>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include "doctest.h"

namespace {

struct RunResult {
    int exit_code;
    std::string output;
};

RunResult run_cli(const std::string& args) {
    const std::string cmd = std::string(HYPERGHZ_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string output;
    std::array<char, 4096> chunk{};
    while (std::size_t n = std::fread(chunk.data(), 1, chunk.size(), pipe))
        output.append(chunk.data(), n);
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, output};
}

int count_lines(const std::string& s) {
    int n = 0;
    for (char c : s)
        if (c == '\n') ++n;
    return n;
}

}  // namespace

TEST_CASE("analyze all identifies every class and exits 0") {
    auto r = run_cli("analyze all");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("all 64 classes identified") != std::string::npos);
    CHECK(count_lines(r.output) == 66);  // header + 64 rows + summary
}

TEST_CASE("analyze of one class prints the flat record") {
    auto r = run_cli("analyze 1:+:1:+");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("spin1=-") != std::string::npos);
    CHECK(r.output.find("spin2=-") != std::string::npos);
    CHECK(r.output.find("i=1") != std::string::npos);
    CHECK(r.output.find("pol_sign=+") != std::string::npos);
    CHECK(r.output.find("verdict=PASS") != std::string::npos);
}

TEST_CASE("malformed state specs exit 2 naming the valid range") {
    auto r = run_cli("analyze 9:+:1:+");
    CHECK(r.exit_code == 2);
    CHECK(r.output.find("[1, 4]") != std::string::npos);
    CHECK(run_cli("analyze nonsense").exit_code == 2);
    CHECK(run_cli("bogus-subcommand").exit_code == 2);
    CHECK(run_cli("--help").exit_code == 0);
}

TEST_CASE("identical seeds give byte-identical output") {
    auto a = run_cli("generate --shots 256 --seed 99");
    auto b = run_cli("generate --shots 256 --seed 99");
    CHECK(a.exit_code == 0);
    CHECK(a.output == b.output);
    auto c = run_cli("analyze random --seed 31 --verbose");
    auto d = run_cli("analyze random --seed 31 --verbose");
    CHECK(c.output == d.output);
}

TEST_CASE("generate prints the exact quarter probabilities") {
    auto r = run_cli("generate");
    CHECK(r.exit_code == 0);
    CHECK(count_lines(r.output) == 5);  // header + four heralds
    CHECK(r.output.find("0.25") != std::string::npos);
}

TEST_CASE("sampled herald frequencies sit within the binomial bound") {
    auto s = run_cli("generate --shots 4096 --seed 7");
    CHECK(s.exit_code == 0);
    CHECK(s.output.find("seed=7 shots=4096") != std::string::npos);
    // three sigma of a p = 1/4 binomial over 4096 shots
    const double bound = 3.0 * std::sqrt(0.25 * 0.75 / 4096.0);
    std::size_t pos = 0;
    int found = 0;
    while ((pos = s.output.find("frequency=", pos)) != std::string::npos) {
        const double f = std::stod(s.output.substr(pos + 10));
        CHECK(std::abs(f - 0.25) < bound);
        ++found;
        ++pos;
    }
    CHECK(found == 4);
}

TEST_CASE("generate in physical mode reports the herald failure weight") {
    auto r = run_cli("generate --mode physical --g 1.088 --kappa-s 0.36 --gamma 0.1");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("herald_failure") != std::string::npos);
}

TEST_CASE("physical mode without cavity parameters is a usage error") {
    auto r = run_cli("generate --mode physical");
    CHECK(r.exit_code == 2);
    CHECK(r.output.find("requires cavity parameters") != std::string::npos);
}

TEST_CASE("swap emits the 64-row table and exits 0") {
    auto r = run_cli("swap");
    CHECK(r.exit_code == 0);
    CHECK(r.output.rfind("label,probability,remote_fidelity\n", 0) == 0);
    CHECK(count_lines(r.output) == 65);
    CHECK(r.output.find("1:+:1:+,0.015625,1.000000000") != std::string::npos);
}

TEST_CASE("sweep writes the pinned header and respects --out") {
    const std::string path = "/tmp/hyperghz_sweep_test.csv";
    auto r = run_cli("sweep --ks 0.0,0.2 --g-min 0.5 --g-max 1.0 --steps 3 --out " + path);
    CHECK(r.exit_code == 0);
    std::ifstream in(path);
    REQUIRE(in.good());
    std::string header;
    std::getline(in, header);
    CHECK(header ==
          "ks_over_k,g_over_ktot,omega_star_double,omega_star_single,F_plus,F_minus,E_plus,"
          "E_minus,F_prime,E_prime,status");
    int rows = 0;
    std::string line;
    while (std::getline(in, line))
        if (!line.empty()) ++rows;
    CHECK(rows == 6);
    std::remove(path.c_str());
}

TEST_CASE("coeffs prints the resonant lossless limits") {
    auto r = run_cli("coeffs --g 0 --kappa-s 0 --gamma 0.1");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("r_0=0") != std::string::npos);
    CHECK(r.output.find("t_0=-1") != std::string::npos);
    CHECK(r.output.find("r_0_prime=-1") != std::string::npos);
}

TEST_CASE("coeffs --solve reports both detunings") {
    auto r = run_cli("coeffs --g 0.696 --kappa-s 0.2 --gamma 0.1 --solve");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("omega_star_double=1.23041249") != std::string::npos);
    CHECK(r.output.find("omega_star_single=") != std::string::npos);
}

TEST_CASE("config file sets defaults that flags override") {
    const std::string cfg = "/tmp/hyperghz_cfg_test.ini";
    {
        std::ofstream out(cfg);
        out << "seed=31\n";
    }
    auto via_cfg = run_cli("analyze random --config " + cfg);
    auto via_flag = run_cli("analyze random --seed 31");
    CHECK(via_cfg.output == via_flag.output);
    auto overridden = run_cli("analyze random --config " + cfg + " --seed 77");
    auto direct = run_cli("analyze random --seed 77");
    CHECK(overridden.output == direct.output);
    std::remove(cfg.c_str());
}

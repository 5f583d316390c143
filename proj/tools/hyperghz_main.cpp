// Command-line front end: analyze, generate, swap, sweep, coeffs.
// Exit codes: 0 all checks passed, 1 a computational check failed,
// 2 usage error. All randomness flows from --seed; identical invocations
// produce identical bytes.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hyperghz/ghz.hpp"
#include "hyperghz/hgsa.hpp"
#include "hyperghz/hgsg.hpp"
#include "hyperghz/metrics.hpp"
#include "hyperghz/swapping.hpp"

namespace {

using namespace hyperghz;

constexpr std::uint64_t kDefaultSeed = 12345;

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return buf;
}

std::string fmt(const cx& v) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "%.9g%+.9gi", v.real(), v.imag());
    return buf;
}

struct OutputTarget {
    std::string path;
    std::ofstream file;

    std::ostream& stream() {
        if (path.empty()) return std::cout;
        if (!file.is_open()) {
            file.open(path);
            if (!file) throw std::runtime_error("cannot open output path: " + path);
        }
        return file;
    }
};

std::optional<HyperLabel> parse_label(const std::string& spec, std::string& error) {
    HyperLabel label;
    std::istringstream is(spec);
    std::string part;
    std::vector<std::string> parts;
    while (std::getline(is, part, ':')) parts.push_back(part);
    if (parts.size() != 4) {
        error = "state spec must be i:sign:j:sign (e.g. 1:+:1:+), 'all' or 'random'";
        return std::nullopt;
    }
    auto sign = [&](const std::string& s) { return s == "+" ? +1 : s == "-" ? -1 : 0; };
    try {
        label.pol_index = std::stoi(parts[0]);
        label.spat_index = std::stoi(parts[2]);
    } catch (const std::exception&) {
        error = "class indices must be integers in [1, 4]";
        return std::nullopt;
    }
    label.pol_sign = sign(parts[1]);
    label.spat_sign = sign(parts[3]);
    if (label.pol_index < 1 || label.pol_index > 4 || label.spat_index < 1 ||
        label.spat_index > 4) {
        error = "class indices must be in [1, 4]";
        return std::nullopt;
    }
    if (label.pol_sign == 0 || label.spat_sign == 0) {
        error = "signs must be + or -";
        return std::nullopt;
    }
    return label;
}

void print_record(std::ostream& os, const AnalysisRecord& rec, const HyperLabel& cls) {
    os << "spin1=" << (rec.spin1 > 0 ? "+" : "-") << "\n";
    os << "spin2=" << (rec.spin2 > 0 ? "+" : "-") << "\n";
    os << "pol=";
    for (int v : rec.pol) os << (v == 0 ? 'R' : 'L');
    os << "\npath=";
    for (int v : rec.path) os << (v == 0 ? '1' : '2');
    os << "\ni=" << cls.pol_index << "\npol_sign=" << (cls.pol_sign > 0 ? "+" : "-");
    os << "\nj=" << cls.spat_index << "\nspat_sign=" << (cls.spat_sign > 0 ? "+" : "-") << "\n";
}

int cmd_analyze(const std::string& spec, std::uint64_t seed, bool verbose, OutputTarget& out) {
    const std::vector<std::string> abc = {"A", "B", "C"};
    std::ostream& os = out.stream();

    if (spec == "all") {
        int failures = 0;
        os << "label,spin1,spin2,decoded,verdict\n";
        for (int i = 1; i <= 4; ++i)
            for (int p : {+1, -1})
                for (int j = 1; j <= 4; ++j)
                    for (int s : {+1, -1}) {
                        const HyperLabel label{i, p, j, s};
                        auto branches = run_hgsa_branches(make_hyper_ghz(label, abc));
                        bool ok = !branches.empty();
                        double total = 0;
                        for (const auto& br : branches) {
                            ok = ok && (br.classification == label);
                            total += br.probability;
                        }
                        ok = ok && std::abs(total - 1.0) < 1e-9;
                        const auto& rec = branches.front().record;
                        os << to_string(label) << "," << (rec.spin1 > 0 ? "+" : "-") << ","
                           << (rec.spin2 > 0 ? "+'" : "-'") << ","
                           << to_string(branches.front().classification) << ","
                           << (ok ? "PASS" : "FAIL") << "\n";
                        if (!ok) ++failures;
                    }
        os << (failures == 0 ? "all 64 classes identified\n"
                             : std::to_string(failures) + " classes misidentified\n");
        return failures == 0 ? 0 : 1;
    }

    HyperLabel label;
    if (spec == "random") {
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<int> idx(1, 4), coin(0, 1);
        label = {idx(rng), coin(rng) ? +1 : -1, idx(rng), coin(rng) ? +1 : -1};
        os << "drawn=" << to_string(label) << "\n";
    } else {
        std::string error;
        auto parsed = parse_label(spec, error);
        if (!parsed) {
            std::cerr << "analyze: " << error << "\n";
            return 2;
        }
        label = *parsed;
    }

    std::vector<std::string> trace;
    auto result = run_hgsa(make_hyper_ghz(label, abc), seed, verbose ? &trace : nullptr);
    for (const auto& line : trace) os << "# " << line << "\n";
    print_record(os, result.record, result.classification);
    const bool ok = result.classification == label;
    os << "verdict=" << (ok ? "PASS" : "FAIL") << "\n";
    return ok ? 0 : 1;
}

int cmd_generate(int shots, std::uint64_t seed, const InteractionMode& mode, OutputTarget& out) {
    std::ostream& os = out.stream();
    auto result = run_hgsg(seed, mode);
    os << "spin1,spin2,probability,fidelity,label\n";
    for (const auto& br : result.branches) {
        os << (br.spin1 > 0 ? "+" : "-") << "," << (br.spin2 > 0 ? "+'" : "-'") << ","
           << fmt(br.probability) << "," << fmt(br.fidelity) << "," << to_string(br.label)
           << "\n";
    }
    if (result.failure_probability > 1e-12)
        os << "herald_failure," << fmt(result.failure_probability) << "\n";

    if (shots > 0) {
        std::mt19937_64 rng(seed);
        std::uniform_real_distribution<double> uni(0.0, 1.0);
        std::vector<int> counts(result.branches.size() + 1, 0);
        for (int s = 0; s < shots; ++s) {
            double x = uni(rng);
            std::size_t pick = result.branches.size();
            for (std::size_t i = 0; i < result.branches.size(); ++i) {
                if (x < result.branches[i].probability) {
                    pick = i;
                    break;
                }
                x -= result.branches[i].probability;
            }
            counts[pick]++;
        }
        os << "seed=" << seed << " shots=" << shots << "\n";
        for (std::size_t i = 0; i < result.branches.size(); ++i) {
            const auto& br = result.branches[i];
            os << (br.spin1 > 0 ? "+" : "-") << (br.spin2 > 0 ? "+'" : "-'") << " count="
               << counts[i] << " frequency=" << fmt(double(counts[i]) / shots) << "\n";
        }
        if (counts.back() > 0)
            os << "failure count=" << counts.back()
               << " frequency=" << fmt(double(counts.back()) / shots) << "\n";
    }

    double total = result.failure_probability;
    for (const auto& br : result.branches) total += br.probability;
    bool ok = std::abs(total - 1.0) < 1e-9;
    if (!mode.physical)
        for (const auto& br : result.branches)
            ok = ok && std::abs(br.probability - 0.25) < 1e-12 &&
                 std::abs(br.fidelity - 1.0) < 1e-9;
    return ok ? 0 : 1;
}

int cmd_swap(OutputTarget& out) {
    auto report = verify_swap_table();
    write_swap_csv(out.stream(), report);
    return report.all_ok ? 0 : 1;
}

int cmd_sweep(const std::vector<double>& ks, double gmin, double gmax, int steps, double gamma,
              OutputTarget& out) {
    auto rows = sweep(ks, {gmin, gmax, steps}, gamma);
    write_sweep_csv(out.stream(), rows);
    for (const auto& r : rows)
        if (r.status != "ok") return 1;
    return 0;
}

int cmd_coeffs(const CavityParams& p, bool solve, OutputTarget& out) {
    std::ostream& os = out.stream();
    const auto d = double_sided_coeffs(p);
    const auto s = single_sided_coeffs(p);
    os << "omega=" << fmt(p.omega) << "\n";
    os << "r_h=" << fmt(d.r_h) << "\nt_h=" << fmt(d.t_h) << "\n";
    os << "r_0=" << fmt(d.r_0) << "\nt_0=" << fmt(d.t_0) << "\n";
    os << "r_h_prime=" << fmt(s.r_h_prime) << "\nr_0_prime=" << fmt(s.r_0_prime) << "\n";
    if (solve) {
        try {
            const double wd = solve_balanced_detuning(p);
            os << "omega_star_double=" << fmt(wd) << "\n";
        } catch (const DetuningError& e) {
            os << "omega_star_double=unsolvable (" << e.what() << ")\n";
        }
        try {
            const double ws = solve_pi_half_detuning(p);
            os << "omega_star_single=" << fmt(ws) << "\n";
        } catch (const DetuningError& e) {
            os << "omega_star_single=unsolvable (" << e.what() << ")\n";
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"hyperentangled-GHZ analyzer, generator and cavity-metrics toolkit"};
    app.set_config("--config", "", "flat key=value defaults, flags override");
    app.require_subcommand(1);

    std::uint64_t seed = kDefaultSeed;
    std::string mode_name = "ideal";
    CavityParams cavity;
    std::string out_path;
    bool verbose = false;

    app.add_option("--seed", seed, "deterministic seed (default 12345)")->capture_default_str();
    app.add_option("--mode", mode_name, "ideal or physical")
        ->check(CLI::IsMember({"ideal", "physical"}))
        ->capture_default_str();
    app.add_option("--g", cavity.g, "coupling strength in units of kappa");
    app.add_option("--kappa-s", cavity.kappa_s, "side leakage rate in units of kappa");
    app.add_option("--gamma", cavity.gamma, "exciton dipole decay rate (default 0.1)")
        ->capture_default_str();
    app.add_option("--omega", cavity.omega, "probe detuning from the cavity line");
    app.add_option("--out", out_path, "write the report to this path instead of stdout");
    app.add_flag("--verbose", verbose, "print per-stage state traces where available");

    auto* analyze = app.add_subcommand("analyze", "run the 64-class analyzer");
    analyze->fallthrough();
    std::string state_spec = "all";
    analyze->add_option("state", state_spec, "i:sign:j:sign, 'all' or 'random'");

    auto* generate = app.add_subcommand("generate", "herald hyperentangled classes");
    generate->fallthrough();
    int shots = 0;
    generate->add_option("--shots", shots, "sampled heralds on top of the exact table")
        ->check(CLI::NonNegativeNumber);

    app.add_subcommand("swap", "verify the nine-photon swapping table")->fallthrough();

    auto* sw = app.add_subcommand("sweep", "fidelity/efficiency sweep to CSV");
    sw->fallthrough();
    std::vector<double> ks_list = {0.0};
    double gmin = 0.1, gmax = 3.0;
    int steps = 30;
    sw->add_option("--ks", ks_list, "side-leakage ratios")->delimiter(',');
    sw->add_option("--g-min", gmin, "lowest g/(kappa+kappa_s)");
    sw->add_option("--g-max", gmax, "highest g/(kappa+kappa_s)");
    sw->add_option("--steps", steps, "grid points per ratio")->check(CLI::PositiveNumber);

    auto* co = app.add_subcommand("coeffs", "print transfer coefficients");
    co->fallthrough();
    bool solve = false;
    co->add_flag("--solve", solve, "also solve both detuning conditions");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        OutputTarget out{out_path, {}};
        InteractionMode mode = InteractionMode::ideal();
        if (mode_name == "physical") {
            if (app.count("--g") == 0) {
                std::cerr << "error: --mode physical requires cavity parameters (--g, "
                             "--kappa-s, --gamma, --omega)\n";
                return 2;
            }
            cavity.validate();
            mode = InteractionMode::with_coeffs(double_sided_coeffs(cavity));
        }
        if (app.got_subcommand("analyze")) return cmd_analyze(state_spec, seed, verbose, out);
        if (app.got_subcommand("generate")) return cmd_generate(shots, seed, mode, out);
        if (app.got_subcommand("swap")) return cmd_swap(out);
        if (app.got_subcommand("sweep")) return cmd_sweep(ks_list, gmin, gmax, steps, cavity.gamma, out);
        if (app.got_subcommand("coeffs")) return cmd_coeffs(cavity, solve, out);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

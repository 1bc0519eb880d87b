// Acceptance suite: checks the toolkit's limit values, optimal operating
// points, deployment regimes, scheduling optimality, and CLI determinism.
// Prints one line per criterion and exits with the number of failures.

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include <sys/wait.h>

#include "config.hpp"
#include "csv.hpp"
#include "greenradio/deployment.hpp"
#include "greenradio/scheduling.hpp"
#include "greenradio/tradeoffs.hpp"

using namespace greenradio;
namespace fs = std::filesystem;

namespace {

struct Options {
    std::string cli;
    std::string configs;
    std::string tmp;
};

int g_failures = 0;

void require(bool condition, const std::string& what) {
    if (!condition) {
        throw std::runtime_error(what);
    }
}

void criterion(int id, const std::string& name, double budget_s,
               const std::function<void()>& body) {
    const auto start = std::chrono::steady_clock::now();
    std::string error;
    try {
        body();
    } catch (const std::exception& e) {
        error = e.what();
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (error.empty() && elapsed > budget_s) {
        error = "runtime " + std::to_string(elapsed) + " s exceeds budget";
    }
    std::printf("[%s] criterion %02d: %s (%.3f ms, budget %g ms)\n",
                error.empty() ? "PASS" : "FAIL", id, name.c_str(), elapsed * 1e3, budget_s * 1e3);
    if (!error.empty()) {
        std::printf("       %s\n", error.c_str());
        ++g_failures;
    }
}

double rel_err(double value, double reference) {
    return std::abs(value - reference) / std::abs(reference);
}

int run_command(const std::string& command) {
    const int status = std::system(command.c_str());
    if (status == -1) {
        return -1;
    }
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

constexpr double kInvLn2 = 1.4426950408889634;
const SearchBracket kSeBracket{1e-9, 1e6, 1e-9};

DeploymentScenario alpha4_scenario() {
    DeploymentScenario s;
    s.area_m2 = 1e8;
    s.radius_min_m = 50.0;
    s.radius_max_m = 2500.0;
    s.path_loss = {4.0, 30.0, 1.0};
    s.link = {1e7, 4e-21, 0.0};
    s.power_model = {0.25, 1e-6, 500.0};
    s.edge_snr_target = 15.0;
    return s;
}

}  // namespace

int main(int argc, char** argv) {
    Options opt;
    for (int i = 1; i + 1 < argc; i += 2) {
        const std::string key = argv[i];
        if (key == "--cli") {
            opt.cli = argv[i + 1];
        } else if (key == "--configs") {
            opt.configs = argv[i + 1];
        } else if (key == "--tmp") {
            opt.tmp = argv[i + 1];
        }
    }
    if (opt.cli.empty() || opt.configs.empty() || opt.tmp.empty()) {
        std::fprintf(stderr, "usage: acceptance --cli PATH --configs DIR --tmp DIR\n");
        return 2;
    }
    fs::create_directories(opt.tmp);

    criterion(1, "zero-SE energy-efficiency limit equals 1/(N0 ln 2)", 1e-3, [] {
        const double ee = se_ee_ideal(1e-9, 1.0);
        require(rel_err(ee, 1.442695041) < 1e-6,
                "se_ee_ideal(1e-9) = " + std::to_string(ee));
    });

    criterion(2, "wideband transmit power approaches N0 R ln 2", 1e-3, [] {
        const double p = bw_pw_ideal(1e4, 1.0, 1.0);
        require(rel_err(p, std::numbers::ln2) < 1e-4, "bw_pw_ideal(1e4) = " + std::to_string(p));
    });

    criterion(3, "doubling the cell radius costs 12.04 dB of transmit power at alpha=4", 1e-3, [] {
        const DeploymentScenario s = alpha4_scenario();
        for (double r : {100.0, 500.0, 1000.0}) {
            const double db = 10.0 * std::log10(edge_tx_power_w(2.0 * r, s) / edge_tx_power_w(r, s));
            require(std::abs(db - 12.0412) < 1e-3, "doubling gain " + std::to_string(db) + " dB");
        }
    });

    criterion(4, "SE-EE bell peak at (1.442695, 0.530738), confirmed by a 1e5-point scan", 1.0, [] {
        const LinkParams link{1.0, 1.0, 0.0};
        const PowerModel pm{1.0, 1.0, 0.0};
        const OperatingPoint peak = peak_ee(link, pm, kSeBracket);
        require(rel_err(peak.x, 1.442695) < 1e-4, "peak SE " + std::to_string(peak.x));
        require(rel_err(peak.objective, 0.530738) < 1e-4, "peak EE " + std::to_string(peak.objective));

        const Extremum oracle = grid_maximum_oracle(
            [&](double se) { return se_ee_practical(se, link, pm); }, {0.1, 10.0, 1e-9}, 100000);
        require(rel_err(peak.x, oracle.x) < 1e-4, "grid oracle disagrees on SE");
        require(rel_err(peak.objective, oracle.value) < 1e-4, "grid oracle disagrees on EE");
    });

    criterion(5, "optimal bandwidth (0.693147, 1.884169) and EE duality R/P* = peak EE", 1.0, [] {
        const PowerModel pm{1.0, 1.0, 0.0};
        const OperatingPoint opt_w = optimal_bandwidth(1.0, 1.0, pm, {1e-6, 1e6, 1e-9});
        require(rel_err(opt_w.x, 0.693147) < 1e-4, "W* " + std::to_string(opt_w.x));
        require(rel_err(opt_w.objective, 1.884169) < 1e-4, "P* " + std::to_string(opt_w.objective));

        const OperatingPoint peak = peak_ee({1.0, 1.0, 0.0}, pm, kSeBracket);
        require(rel_err(1.0 / opt_w.objective, peak.objective) < 1e-6,
                "R/P* does not match the EE peak");
    });

    criterion(6, "energy-per-bit cup bottom at (0.693147, 1.884169)", 1.0, [] {
        const OperatingPoint opt_t = optimal_bit_duration(1.0, 1.0, {1.0, 0.0, 1.0}, {1e-6, 1e6, 1e-9});
        require(rel_err(opt_t.x, 0.693147) < 1e-4, "t* " + std::to_string(opt_t.x));
        require(rel_err(opt_t.objective, 1.884169) < 1e-4, "E* " + std::to_string(opt_t.objective));
    });

    criterion(7, "practical relations reduce to ideal ones under an ideal power model", 1.0, [] {
        std::mt19937 rng(20260808);
        std::uniform_real_distribution<double> u(0.0, 1.0);
        const PowerModel ideal = PowerModel::ideal();
        for (int i = 0; i < 1000; ++i) {
            const double w = std::pow(10.0, -2.0 + 6.0 * u(rng));
            const double n0 = std::pow(10.0, -4.0 + 4.0 * u(rng));
            const double se = std::pow(10.0, -6.0 + 7.477 * u(rng));
            const double tb = 1.0 / (std::pow(10.0, -6.0 + 7.477 * u(rng)) * w);
            require(rel_err(se_ee_practical(se, {w, n0, 0.0}, ideal), se_ee_ideal(se, n0)) < 1e-12,
                    "SE-EE reduction failed");
            require(rel_err(bw_pw_practical(w, se * w, n0, ideal), bw_pw_ideal(w, se * w, n0)) < 1e-12,
                    "BW-PW reduction failed");
            require(rel_err(dl_pw_practical(tb, w, n0, ideal), dl_pw_ideal(tb, w, n0)) < 1e-12,
                    "DL-PW reduction failed");
        }
    });

    criterion(8, "co-channel interference always lowers the achievable EE peak", 5.0, [] {
        std::mt19937 rng(424242);
        std::uniform_real_distribution<double> u(0.0, 1.0);
        for (int i = 0; i < 100; ++i) {
            const double w = std::pow(10.0, -1.0 + 2.0 * u(rng));
            const double n0 = 0.01 + 0.99 * u(rng);
            const PowerModel pm{0.2 + 0.8 * u(rng), 0.05 + 1.95 * u(rng), 3.0 * u(rng)};
            const LinkParams clean{w, n0, 0.0};
            const LinkParams jammed{w, n0, w * n0};
            require(peak_ee(jammed, pm, kSeBracket).objective <
                        peak_ee(clean, pm, kSeBracket).objective,
                    "interference did not lower the peak");
        }
    });

    criterion(9, "frozen deployment configs reproduce both DE-EE regimes", 5.0, [&] {
        using cli::cost_from_config;
        using cli::parse_config_file;
        using cli::scenario_from_config;

        const Curve sub = de_ee_sweep(
            scenario_from_config(parse_config_file(opt.configs + "/suburb.cfg")),
            cost_from_config(parse_config_file(opt.configs + "/cost_suburb.cfg")), 200);
        for (std::size_t i = 1; i < sub.points.size(); ++i) {
            require(sub.points[i].x <= sub.points[i - 1].x &&
                        sub.points[i].y <= sub.points[i - 1].y,
                    "suburban EE is not non-decreasing in DE along the sweep");
        }

        const Curve dense = de_ee_sweep(
            scenario_from_config(parse_config_file(opt.configs + "/dense_urban.cfg")),
            cost_from_config(parse_config_file(opt.configs + "/cost_dense_urban.cfg")), 200);
        bool found = false;
        for (std::size_t i = 0; i < dense.points.size() && !found; ++i) {
            for (std::size_t j = i + 1; j < dense.points.size() && !found; ++j) {
                const double de_gap = std::abs(dense.points[i].x - dense.points[j].x) /
                                      std::max(dense.points[i].x, dense.points[j].x);
                const double ee_gap = std::abs(dense.points[i].y - dense.points[j].y) /
                                      std::max(dense.points[i].y, dense.points[j].y);
                if (de_gap <= 0.01 && ee_gap > 0.10) {
                    found = true;
                }
            }
        }
        require(found, "no dense-urban radius pair shares DE within 1% with EE apart by 10%");
    });

    criterion(10, "lazy scheduling: even split, brute-force match, deadline monotone", 30.0, [] {
        const LinkParams link{1.0, 1.0, 0.0};
        const PowerModel ideal = PowerModel::ideal();

        // (a) Four identical packets at t=0 split the deadline exactly evenly.
        PacketBatch four;
        four.packet_bits.assign(4, 1.0);
        four.arrival_s.assign(4, 0.0);
        four.deadline_s = 2.0;
        const Schedule even = lazy_schedule(four, link, ideal);
        for (double d : even.durations_s) {
            require(d == 0.5, "durations not exactly T/4");
        }

        // (b) Two staggered packets against a 1e3 x 1e3 exhaustive grid.
        PacketBatch two;
        two.packet_bits = {1.0, 1.0};
        two.arrival_s = {0.0, 0.6};
        two.deadline_s = 1.0;
        const double lazy_j =
            schedule_energy_j(two, lazy_schedule(two, link, ideal), link, ideal);
        double best = 1e300;
        for (int i = 1; i <= 1000; ++i) {
            const double d1 = i * 1e-3;
            const double start2 = std::max(0.6, d1);
            for (int j = 1; j <= 1000; ++j) {
                const double d2 = j * (1.0 - start2) * 1e-3;
                if (d2 <= 0.0 || 1.0 / d2 > 500.0) {
                    continue;
                }
                best = std::min(best, packet_energy_j(1.0, d1, link, ideal) +
                                          packet_energy_j(1.0, d2, link, ideal));
            }
        }
        require(rel_err(lazy_j, best) < 1e-3, "brute-force oracle disagrees");
        require(lazy_j <= best * (1.0 + 1e-12), "oracle found a cheaper schedule");

        // (c) A longer deadline never costs more energy.
        std::mt19937 rng(1234);
        std::uniform_real_distribution<double> u(0.0, 1.0);
        for (int trial = 0; trial < 100; ++trial) {
            PacketBatch batch;
            const int n = 1 + static_cast<int>(6.0 * u(rng));
            batch.deadline_s = 1.0 + 2.0 * u(rng);
            double arrival = 0.0;
            for (int k = 0; k < n; ++k) {
                batch.packet_bits.push_back(0.2 + 2.8 * u(rng));
                arrival += 0.8 * batch.deadline_s * u(rng) / n;
                batch.arrival_s.push_back(arrival);
            }
            const double tight =
                schedule_energy_j(batch, lazy_schedule(batch, link, ideal), link, ideal);
            PacketBatch longer = batch;
            longer.deadline_s *= 2.0;
            const double loose =
                schedule_energy_j(longer, lazy_schedule(longer, link, ideal), link, ideal);
            require(loose <= tight * (1.0 + 1e-12), "extending the deadline raised the energy");
        }
    });

    criterion(11, "constant-EE contour in the BW-PW plane is non-monotone", 5.0, [] {
        const PowerModel pm{1.0, 0.2, 5.0};
        const double target = 0.98 * peak_ee({5.0, 1.0, 0.0}, pm, kSeBracket).objective;
        const EeContour contour =
            ee_contour_bw_pw(target, 1.0, pm, {0.5, 50.0, 120, Spacing::logarithmic});
        require(contour.lower.points.size() > 2, "contour too short");
        std::size_t min_i = 0;
        for (std::size_t i = 1; i < contour.lower.points.size(); ++i) {
            if (contour.lower.points[i].y < contour.lower.points[min_i].y) {
                min_i = i;
            }
        }
        require(min_i > 0 && min_i + 1 < contour.lower.points.size(),
                "power minimum is not interior");
        require(contour.lower.points.front().y > contour.lower.points[min_i].y &&
                    contour.lower.points.back().y > contour.lower.points[min_i].y,
                "power minimum is not flanked by larger values");
    });

    criterion(12, "shipped example configs reproduce the golden CSVs byte for byte", 10.0, [&] {
        const std::vector<std::array<std::string, 3>> runs = {
            {"curve se-ee", "se_ee_ideal.cfg", "se_ee_ideal.csv"},
            {"curve se-ee", "se_ee_bell.cfg", "se_ee_bell.csv"},
            {"curve bw-pw", "bw_pw_practical.cfg", "bw_pw_practical.csv"},
            {"curve dl-pw", "dl_pw_cup.cfg", "dl_pw_cup.csv"},
            {"curve de-ee", "de_ee_dense_urban.cfg", "de_ee_dense_urban.csv"},
            {"curve de-ee", "de_ee_suburb.cfg", "de_ee_suburb.csv"},
            {"schedule", "schedule_two_packets.cfg", "schedule_two_packets.csv"},
        };
        for (const auto& [command, cfg, golden] : runs) {
            const std::string out = opt.tmp + "/" + golden;
            const std::string invocation = "'" + opt.cli + "' " + command + " --config '" +
                                           opt.configs + "/examples/" + cfg + "' -o '" + out + "'";
            require(run_command(invocation) == 0, "command failed: " + invocation);
            require(cli::read_text_file(out) ==
                        cli::read_text_file(opt.configs + "/golden/" + golden),
                    golden + " differs from the golden file");
        }
        // Repetition is byte-identical.
        const std::string again = opt.tmp + "/se_ee_bell_again.csv";
        require(run_command("'" + opt.cli + "' curve se-ee --config '" + opt.configs +
                            "/examples/se_ee_bell.cfg' -o '" + again + "'") == 0,
                "repeat run failed");
        require(cli::read_text_file(again) ==
                    cli::read_text_file(opt.configs + "/golden/se_ee_bell.csv"),
                "repeat run is not byte-identical");

        // An infeasible plan exits with the domain status and says so.
        const std::string err_file = opt.tmp + "/plan_err.txt";
        const int status = run_command(
            "'" + opt.cli + "' plan --scenario '" + opt.configs + "/dense_urban.cfg' --cost '" +
            opt.configs + "/cost_dense_urban.cfg' --throughput 1e15 --budget 1e6 2> '" +
            err_file + "'");
        require(status == 3, "infeasible plan should exit 3, got " + std::to_string(status));
        require(cli::read_text_file(err_file).find("infeasible") != std::string::npos,
                "error line does not mention infeasibility");
    });

    if (g_failures == 0) {
        std::printf("all 12 criteria passed\n");
    } else {
        std::printf("%d criterion(s) failed\n", g_failures);
    }
    return g_failures;
}

#include <cstdint>
#include <fstream>
#include <iostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "tsnsim/bounds.hpp"
#include "tsnsim/config.hpp"
#include "tsnsim/sweep.hpp"

namespace {

void print_bounds(const tsnsim::BoundInput& b) {
    const tsnsim::DelayBounds db = tsnsim::cqf_delay_bounds(b);
    std::cout << "hops:              " << b.hops << '\n'
              << "cycle_time_ns:     " << b.cycle_time_ns << '\n'
              << "st_window_ns:      " << b.st_window_ns << '\n'
              << "prop_delay_ns:     " << b.prop_delay_ns << '\n'
              << "link_rate_bps:     " << b.link_rate_bps << '\n'
              << "streams_per_link:  " << b.streams_per_link << '\n'
              << "frame_bits:        " << b.frame_bits << '\n'
              << "conforming:        " << (db.conforming ? "yes" : "no")
              << '\n'
              << "d_min_ns:          " << db.d_min_ns << '\n'
              << "d_max_ns:          " << db.d_max_ns << '\n'
              << "worst_case_max_ns: " << tsnsim::cqf_nonconforming_max(b)
              << '\n'
              << "window_bits:       " << tsnsim::window_bits(b) << '\n'
              << "saturation_pi:     " << tsnsim::saturation_pi(b) << '\n';
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Deterministic discrete-event simulator for TSN egress scheduling "
        "(CQF, Paternoster, experimental 3-queue CQF) on a unidirectional "
        "switch ring"};
    app.require_subcommand(1);

    auto* run_cmd =
        app.add_subcommand("run", "Run a scenario sweep and emit CSV");
    std::string config_path;
    std::string out_path = "-";
    std::uint64_t seed_override = 0;
    int workers = 1;
    run_cmd->add_option("--config", config_path,
                        "JSON scenario config; defaults are used if omitted");
    run_cmd->add_option("--out", out_path, "Output CSV path ('-' = stdout)")
        ->capture_default_str();
    auto* seed_opt =
        run_cmd->add_option("--seed", seed_override, "Override config seed");
    run_cmd
        ->add_option("--parallel", workers,
                     "Worker threads for independent sweep points")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    run_cmd->callback([&]() {
        std::vector<std::string> warnings;
        tsnsim::SweepConfig cfg;
        if (!config_path.empty()) {
            cfg = tsnsim::load_config_file(config_path, &warnings);
        }
        for (const std::string& w : warnings) {
            std::cerr << "warning: " << w << '\n';
        }
        if (seed_opt->count() > 0) cfg.seed = seed_override;
        const std::vector<tsnsim::MetricsRow> rows =
            tsnsim::run_sweep(cfg, workers);
        if (out_path == "-") {
            tsnsim::emit_csv(rows, std::cout);
        } else {
            std::ofstream out(out_path);
            if (!out) {
                throw std::runtime_error("cannot write output file: " +
                                         out_path);
            }
            tsnsim::emit_csv(rows, out);
        }
    });

    auto* bounds_cmd = app.add_subcommand(
        "bounds", "Print analytic CQF delay bounds and saturation thresholds");
    tsnsim::BoundInput b;
    tsnsim::SimTime window_ns = 0;
    bounds_cmd->add_option("--hops", b.hops, "Path hop count")->required();
    bounds_cmd->add_option("--cycle-ns", b.cycle_time_ns, "Cycle time in ns")
        ->required();
    bounds_cmd->add_option("--prop-ns", b.prop_delay_ns,
                           "Link propagation delay in ns");
    bounds_cmd->add_option("--window-ns", window_ns,
                           "ST window in ns (default: half the cycle)");
    bounds_cmd->add_option("--streams", b.streams_per_link,
                           "Streams sharing one link");
    bounds_cmd->add_option("--frame-bits", b.frame_bits, "Frame size in bits");
    bounds_cmd->add_option("--rate-bps", b.link_rate_bps, "Link rate in bps");
    bounds_cmd->callback([&]() {
        b.st_window_ns = window_ns > 0 ? window_ns : b.cycle_time_ns / 2;
        print_bounds(b);
    });

    auto* defaults_cmd =
        app.add_subcommand("defaults", "Print the default config as JSON");
    defaults_cmd->callback(
        []() { std::cout << tsnsim::dump_default_config(); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const tsnsim::ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

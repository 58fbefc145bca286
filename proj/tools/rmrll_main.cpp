// Experiment runner for constrained subcodes of Reed-Muller codes: rate
// tables, bound curves, Monte Carlo bit-MAP sweeps and exhaustive oracles.
// Every command is a pure function of its configuration and seed, so reruns
// emit byte-identical files.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "rmrll/bounds.hpp"
#include "rmrll/errors.hpp"
#include "rmrll/experiments.hpp"
#include "rmrll/subcode.hpp"

namespace {

struct OutputOpts {
    std::string path;  // empty = stdout
    std::string format = "csv";
};

void add_output_opts(CLI::App* sub, OutputOpts& o, bool with_format = true) {
    sub->add_option("--out", o.path, "output file (default: stdout)");
    if (with_format)
        sub->add_option("--format", o.format, "output format")
            ->check(CLI::IsMember({"csv", "json"}));
    sub->set_config("--config", "", "flat key = value configuration file; flags override");
}

rmrll::OutputFormat parse_format(const OutputOpts& o) {
    return o.format == "json" ? rmrll::OutputFormat::Json : rmrll::OutputFormat::Csv;
}

void emit(const OutputOpts& o, const std::string& payload) {
    if (o.path.empty()) {
        std::cout << payload;
        return;
    }
    std::ofstream f(o.path, std::ios::binary);
    if (!f) throw std::invalid_argument("cannot open output file: " + o.path);
    f << payload;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"constrained Reed-Muller subcode experiments"};
    app.require_subcommand(1);
    app.allow_config_extras(false);

    rmrll::RatesConfig rates_cfg;
    OutputOpts rates_out;
    auto* rates = app.add_subcommand("rates", "exact subcode rates against their limits");
    rates->add_option("--d", rates_cfg.d, "minimum run of 0s between 1s (0 = full code)");
    rates->add_option("--rate", rates_cfg.rate, "target rate R of the code sequence");
    rates->add_option("--m-min", rates_cfg.m_min, "smallest m");
    rates->add_option("--m-max", rates_cfg.m_max, "largest m");
    add_output_opts(rates, rates_out);

    rmrll::BoundsConfig bounds_cfg;
    OutputOpts bounds_out;
    std::optional<int> bounds_chain_m;
    double bounds_delta = 0.1;
    auto* bounds = app.add_subcommand("bounds", "rate-bound curves over an R grid (CSV)");
    bounds->add_option("--d", bounds_cfg.d, "constraint parameter d");
    bounds->add_option("--grid-step", bounds_cfg.grid_step, "R grid step");
    bounds->add_option("--m", bounds_chain_m,
                       "emit the finite-m log-domain bound chain at this m instead of the curve");
    bounds->add_option("--delta", bounds_delta, "slack parameter for the bound chain");
    add_output_opts(bounds, bounds_out, /*with_format=*/false);

    rmrll::SimulateConfig sim_cfg;
    sim_cfg.ms.clear();
    OutputOpts sim_out;
    auto* sim = app.add_subcommand("simulate", "Monte Carlo bit-MAP error estimates");
    sim->add_option("--m", sim_cfg.ms, "block-length exponents (repeatable or comma separated)")
        ->required()
        ->delimiter(',');
    sim->add_option("--d", sim_cfg.d, "constraint parameter d (0 = full code)");
    sim->add_option("--rate", sim_cfg.rate, "target rate R");
    sim->add_option("--epsilon", sim_cfg.epsilon, "BEC erasure probability");
    sim->add_option("--p", sim_cfg.p, "BSC crossover probability");
    sim->add_option("--trials", sim_cfg.trials, "Monte Carlo trials per row");
    sim->add_option("--seed", sim_cfg.seed, "master seed");
    add_output_opts(sim, sim_out);

    rmrll::OracleConfig oracle_cfg;
    OutputOpts oracle_out;
    auto* oracle = app.add_subcommand("oracle", "exhaustive constrained-subcode census (JSON)");
    oracle->add_option("--m", oracle_cfg.m, "number of variables")->required();
    oracle->add_option("--r", oracle_cfg.r, "degree")->required();
    add_output_opts(oracle, oracle_out, /*with_format=*/false);

    rmrll::WeightsConfig weights_cfg;
    OutputOpts weights_out;
    auto* weights = app.add_subcommand("weights", "exact weight distribution of RM(m, r)");
    weights->add_option("--m", weights_cfg.m, "number of variables")->required();
    weights->add_option("--r", weights_cfg.r, "degree")->required();
    add_output_opts(weights, weights_out);

    rmrll::ChannelCapConfig cap_cfg;
    OutputOpts cap_out;
    auto* cap = app.add_subcommand("channel-cap", "channel capacity");
    cap->add_option("--epsilon", cap_cfg.epsilon, "BEC erasure probability");
    cap->add_option("--p", cap_cfg.p, "BSC crossover probability");
    cap->add_option("--sigma", cap_cfg.sigma, "BI-AWGN noise standard deviation");
    add_output_opts(cap, cap_out);

    try {
        app.parse(argc, argv);

        std::ostringstream buf;
        if (rates->parsed()) {
            rmrll::cmd_rates(rates_cfg, parse_format(rates_out), buf);
            emit(rates_out, buf.str());
        } else if (bounds->parsed()) {
            if (bounds_chain_m) {
                buf << "# finite-m bound chain, m = " << *bounds_chain_m
                    << ", delta = " << bounds_delta << "\n";
                buf << "R,r_m,t_m,log2_alpha,log2_beta_head,log2_beta_tail,log2_beta,log2_theta,"
                       "log2_eta\n";
                buf.precision(12);
                for (int i = 1; double(i) * bounds_cfg.grid_step < 1.0 - bounds_cfg.grid_step / 2;
                     ++i) {
                    const double R = double(i) * bounds_cfg.grid_step;
                    const rmrll::BoundEvaluation e =
                        rmrll::evaluate_bound_chain(*bounds_chain_m, R, bounds_delta);
                    buf << R << ',' << e.r_m << ',' << e.t_m << ',' << e.log2_alpha << ','
                        << e.log2_beta_head << ',' << e.log2_beta_tail << ',' << e.log2_beta << ','
                        << e.log2_theta << ',' << e.log2_eta << '\n';
                }
            } else {
                rmrll::cmd_bounds(bounds_cfg, buf);
            }
            emit(bounds_out, buf.str());
        } else if (sim->parsed()) {
            rmrll::cmd_simulate(sim_cfg, parse_format(sim_out), buf, &std::cerr);
            emit(sim_out, buf.str());
        } else if (oracle->parsed()) {
            rmrll::cmd_oracle(oracle_cfg, buf);
            emit(oracle_out, buf.str());
        } else if (weights->parsed()) {
            rmrll::cmd_weights(weights_cfg, parse_format(weights_out), buf);
            emit(weights_out, buf.str());
        } else if (cap->parsed()) {
            rmrll::cmd_channel_cap(cap_cfg, parse_format(cap_out), buf);
            emit(cap_out, buf.str());
        }
        return 0;
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const rmrll::guard_error& e) {
        std::cerr << "refused: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}

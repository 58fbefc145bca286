#include "rmrll/experiments.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <optional>
#include <ostream>
#include <string>

#include <nlohmann/json.hpp>

#include "rmrll/bounds.hpp"
#include "rmrll/channel.hpp"
#include "rmrll/decoding.hpp"
#include "rmrll/errors.hpp"
#include "rmrll/rll.hpp"
#include "rmrll/rm.hpp"
#include "rmrll/subcode.hpp"

namespace rmrll {

namespace {

using nlohmann::json;

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

} // namespace

void cmd_rates(const RatesConfig& cfg, OutputFormat f, std::ostream& out) {
    if (cfg.d < 0) throw std::invalid_argument("rates: d must be >= 0");
    if (!(cfg.rate > 0.0 && cfg.rate < 1.0)) throw std::invalid_argument("rates: rate must be in (0,1)");
    const int z = spacing_exponent(cfg.d);
    if (cfg.m_min < std::max(z, 1) || cfg.m_min > cfg.m_max)
        throw std::invalid_argument("rates: bad m range");

    json rows = json::array();
    if (f == OutputFormat::Csv) out << "m,d,z,r_m,rate,asymptote,gap\n";
    for (int m = cfg.m_min; m <= cfg.m_max; ++m) {
        const SubcodeRate r = subcode_rate(m, cfg.rate, cfg.d);
        const double gap = std::abs(r.value - r.asymptote);
        if (f == OutputFormat::Csv) {
            out << m << ',' << cfg.d << ',' << r.z << ',' << r.r_m << ',' << fmt(r.value) << ','
                << fmt(r.asymptote) << ',' << fmt(gap) << '\n';
        } else {
            rows.push_back({{"m", m},
                            {"d", cfg.d},
                            {"z", r.z},
                            {"r_m", r.r_m},
                            {"rate", r.value},
                            {"asymptote", r.asymptote},
                            {"gap", gap}});
        }
    }
    if (f == OutputFormat::Json) out << rows.dump(2) << '\n';
}

void cmd_bounds(const BoundsConfig& cfg, std::ostream& out) {
    if (cfg.d < 1) throw std::invalid_argument("bounds: d must be >= 1");
    if (!(cfg.grid_step > 0.0 && cfg.grid_step < 0.5))
        throw std::invalid_argument("bounds: grid-step must be in (0, 0.5)");

    const double c0 = noiseless_capacity(RllConstraint::d_infinity(cfg.d));
    out << "# rate-bound curves for the (d,inf) constraint, d = " << cfg.d << "\n";
    out << "# for the BEC read R = 1 - epsilon on the x-axis\n";
    out << "R,achievable,upper_bound,trivial,coset_baseline\n";
    for (int i = 1; double(i) * cfg.grid_step < 1.0 - cfg.grid_step / 2; ++i) {
        const double R = double(i) * cfg.grid_step;
        out << fmt(R) << ',' << fmt(achievable_rate(R, cfg.d)) << ','
            << fmt(subcode_rate_upper_bound(R)) << ',' << fmt(R) << ','
            << fmt(coset_baseline(c0, R)) << '\n';
    }
}

void cmd_simulate(const SimulateConfig& cfg, OutputFormat f, std::ostream& out,
                  std::ostream* timing_log) {
    if (cfg.ms.empty()) throw std::invalid_argument("simulate: need at least one m");
    if (cfg.epsilon.has_value() == cfg.p.has_value())
        throw std::invalid_argument("simulate: set exactly one of epsilon / p");
    if (cfg.trials < 1) throw std::invalid_argument("simulate: trials must be >= 1");
    if (cfg.d < 0) throw std::invalid_argument("simulate: d must be >= 0");

    const bool bec = cfg.epsilon.has_value();
    const ChannelModel ch = bec ? ChannelModel{Bec{*cfg.epsilon}} : ChannelModel{Bsc{*cfg.p}};
    const char* param_name = bec ? "epsilon" : "p";
    const double param = bec ? *cfg.epsilon : *cfg.p;

    json rows = json::array();
    if (f == OutputFormat::Csv) out << "m,d," << param_name << ",trials,pb,std_error\n";
    for (int m : cfg.ms) {
        const RmCode prior(m, rate_degree(m, cfg.rate));

        // d >= 1 transmits the constrained subcode of the prior code; d = 0 the code itself
        std::optional<SubcodeEncoder> sub;
        EncoderFn enc;
        if (cfg.d >= 1) {
            sub.emplace(make_subcode_spec(m, cfg.rate, cfg.d));
            enc = as_encoder(*sub);
        } else {
            enc = as_encoder(prior);
        }

        const auto t0 = std::chrono::steady_clock::now();
        const SimulationResult res =
            estimate_pb(enc, prior.generator(), ch,
                        bec ? DecoderKind::BecAnalytic : DecoderKind::ExhaustiveOracle,
                        cfg.trials, cfg.seed);
        const auto wall_ms =
            std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0)
                .count();
        if (timing_log)
            *timing_log << "simulate: m=" << m << " " << param_name << "=" << fmt(param)
                        << " trials=" << cfg.trials << " wall_ms=" << wall_ms << '\n';

        if (f == OutputFormat::Csv) {
            out << m << ',' << cfg.d << ',' << fmt(param) << ',' << cfg.trials << ','
                << fmt(res.pb) << ',' << fmt(res.std_error) << '\n';
        } else {
            rows.push_back({{"m", m},
                            {"d", cfg.d},
                            {param_name, param},
                            {"trials", cfg.trials},
                            {"pb", res.pb},
                            {"std_error", res.std_error}});
        }
    }
    if (f == OutputFormat::Json) out << rows.dump(2) << '\n';
}

void cmd_oracle(const OracleConfig& cfg, std::ostream& out) {
    const RmCode code(cfg.m, cfg.r);
    const SubcodeCensus census =
        largest_rll_subcode_bruteforce(code, RllConstraint::d_infinity(1));
    const BigInt filter = support_filter_count(code);

    const double n = double(code.length());
    const double code_rate = double(code.dim()) / n;

    json rep;
    rep["m"] = cfg.m;
    rep["r"] = cfg.r;
    rep["dim"] = code.dim();
    rep["code_log2_size"] = double(code.dim());
    rep["constrained_count"] = census.count.str();
    rep["constrained_count_log2"] = log2_big(census.count);
    rep["constrained_rate"] = log2_big(census.count) / n;
    rep["filter_count"] = filter.str();
    rep["filter_count_log2"] = log2_big(filter);
    rep["code_rate"] = code_rate;
    if (code_rate < 1.0)
        rep["rate_upper_bound_at_code_rate"] = subcode_rate_upper_bound(code_rate);
    else
        rep["rate_upper_bound_at_code_rate"] = nullptr;
    out << rep.dump(2) << '\n';
}

void cmd_weights(const WeightsConfig& cfg, OutputFormat f, std::ostream& out) {
    const RmCode code(cfg.m, cfg.r);
    const WeightDistribution wd = weight_distribution(code);
    if (f == OutputFormat::Csv) {
        out << "w,count\n";
        for (std::size_t w = 0; w <= wd.n(); ++w) out << w << ',' << wd.count(w) << '\n';
    } else {
        json rows = json::array();
        for (std::size_t w = 0; w <= wd.n(); ++w)
            rows.push_back({{"w", w}, {"count", wd.count(w)}});
        json rep{{"m", cfg.m}, {"r", cfg.r}, {"n", wd.n()}, {"dim", code.dim()}, {"counts", rows}};
        out << rep.dump(2) << '\n';
    }
}

void cmd_channel_cap(const ChannelCapConfig& cfg, OutputFormat f, std::ostream& out) {
    const int given = int(cfg.epsilon.has_value()) + int(cfg.p.has_value()) + int(cfg.sigma.has_value());
    if (given != 1)
        throw std::invalid_argument("channel-cap: set exactly one of epsilon / p / sigma");

    std::string name;
    double param, cap;
    if (cfg.epsilon) {
        name = "bec";
        param = *cfg.epsilon;
        cap = capacity(Bec{param});
    } else if (cfg.p) {
        name = "bsc";
        param = *cfg.p;
        cap = capacity(Bsc{param});
    } else {
        name = "biawgn";
        param = *cfg.sigma;
        cap = capacity(BiAwgn{param});
    }

    if (f == OutputFormat::Csv) {
        out << "channel,parameter,capacity\n";
        out << name << ',' << fmt(param) << ',' << fmt(cap) << '\n';
    } else {
        out << json{{"channel", name}, {"parameter", param}, {"capacity", cap}}.dump(2) << '\n';
    }
}

} // namespace rmrll

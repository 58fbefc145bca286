#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

namespace rmrll {

enum class OutputFormat { Csv, Json };

/// Rate table over a range of m: exact subcode rate against its limit.
struct RatesConfig {
    int d = 1;
    double rate = 0.5;  // target rate R of the ambient code sequence
    int m_min = 2;
    int m_max = 60;
};
void cmd_rates(const RatesConfig& cfg, OutputFormat fmt, std::ostream& out);

/// Rate-bound curves on an R grid (CSV): achievable rate, the nontrivial
/// upper bound, the trivial bound R, and the coset baseline.
struct BoundsConfig {
    int d = 1;
    double grid_step = 0.01;
};
void cmd_bounds(const BoundsConfig& cfg, std::ostream& out);

/// Monte Carlo bit-MAP error sweep. d >= 1 transmits the constrained subcode;
/// d = 0 transmits the full code RM(m, r_m). Exactly one of epsilon / p is set.
/// Per-row wall time goes to timing_log (when given), never into `out`, so the
/// emitted bytes are a pure function of the config and seed.
struct SimulateConfig {
    std::vector<int> ms{9};
    int d = 1;
    double rate = 0.5;
    std::optional<double> epsilon;
    std::optional<double> p;
    std::uint64_t trials = 1000;
    std::uint64_t seed = 1;
};
void cmd_simulate(const SimulateConfig& cfg, OutputFormat fmt, std::ostream& out,
                  std::ostream* timing_log = nullptr);

/// Exhaustive constrained-subcode census of one RM code (JSON report).
struct OracleConfig {
    int m = 3;
    int r = 1;
};
void cmd_oracle(const OracleConfig& cfg, std::ostream& out);

/// Weight-distribution dump of one RM code.
struct WeightsConfig {
    int m = 3;
    int r = 1;
};
void cmd_weights(const WeightsConfig& cfg, OutputFormat fmt, std::ostream& out);

/// Channel capacity for exactly one of epsilon (BEC), p (BSC), sigma (BI-AWGN).
struct ChannelCapConfig {
    std::optional<double> epsilon;
    std::optional<double> p;
    std::optional<double> sigma;
};
void cmd_channel_cap(const ChannelCapConfig& cfg, OutputFormat fmt, std::ostream& out);

} // namespace rmrll

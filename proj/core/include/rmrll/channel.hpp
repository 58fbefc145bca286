#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include "rmrll/bitvec.hpp"

namespace rmrll {

/// Binary memoryless symmetric channels as multiplicative noise laws
/// Y = (-1)^X * Z on {0,1} inputs. The BEC uses output alphabet {-1, 0, +1}
/// with 0 marking an erasure; the BSC uses {-1, +1}; BI-AWGN outputs reals.
struct Bec {
    double epsilon;
};
struct Bsc {
    double p;
};
struct BiAwgn {
    double sigma;
};
using ChannelModel = std::variant<Bec, Bsc, BiAwgn>;

inline constexpr double kErasureSymbol = 0.0;

/// Counter-based pseudorandom stream: identical (seed, stream) pairs yield an
/// identical sample sequence regardless of how many other streams exist, so
/// Monte Carlo trial t can draw from stream t independent of scheduling.
class RngStream {
public:
    RngStream(std::uint64_t master_seed, std::uint64_t stream);

    std::uint64_t master_seed() const { return seed_; }
    std::uint64_t stream() const { return stream_; }

    std::uint64_t next_u64();
    bool next_bit() { return next_u64() & 1u; }
    double next_unit();      // uniform on [0, 1)
    double next_gaussian();  // standard normal, Box-Muller

private:
    std::uint64_t seed_, stream_, state_;
    double cached_gaussian_ = 0.0;
    bool has_cached_gaussian_ = false;
};

/// Per-symbol independent noise; output length equals input length.
std::vector<double> transmit(const BitVector& x, const ChannelModel& ch, RngStream& rng);

double binary_entropy(double p);

/// BEC -> 1 - eps; BSC -> 1 - h_b(p); BI-AWGN -> mutual information with
/// equiprobable inputs by fixed composite-Simpson quadrature (abs error < 1e-6).
double capacity(const ChannelModel& ch);

} // namespace rmrll

#include "rmrll/channel.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace rmrll {

namespace {

// splitmix64 finalizer
std::uint64_t mix64(std::uint64_t x) {
    x ^= x >> 30;
    x *= 0xBF58476D1CE4E5B9ull;
    x ^= x >> 27;
    x *= 0x94D049BB133111EBull;
    x ^= x >> 31;
    return x;
}

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;

void validate(const ChannelModel& ch) {
    if (const auto* bec = std::get_if<Bec>(&ch)) {
        if (!(bec->epsilon >= 0.0 && bec->epsilon <= 1.0))
            throw std::invalid_argument("Bec: epsilon must be in [0,1]");
    } else if (const auto* bsc = std::get_if<Bsc>(&ch)) {
        if (!(bsc->p >= 0.0 && bsc->p <= 1.0))
            throw std::invalid_argument("Bsc: p must be in [0,1]");
    } else {
        if (!(std::get<BiAwgn>(ch).sigma > 0.0))
            throw std::invalid_argument("BiAwgn: sigma must be positive");
    }
}

} // namespace

RngStream::RngStream(std::uint64_t master_seed, std::uint64_t stream)
    : seed_(master_seed), stream_(stream) {
    // scatter streams across the underlying counter orbit so that consecutive
    // stream indices do not yield overlapping sequences
    state_ = mix64(master_seed ^ mix64(stream + kGolden));
}

std::uint64_t RngStream::next_u64() {
    state_ += kGolden;
    return mix64(state_);
}

double RngStream::next_unit() {
    return double(next_u64() >> 11) * 0x1.0p-53;
}

double RngStream::next_gaussian() {
    if (has_cached_gaussian_) {
        has_cached_gaussian_ = false;
        return cached_gaussian_;
    }
    const double u1 = double((next_u64() >> 11) + 1) * 0x1.0p-53;  // (0, 1]
    const double u2 = next_unit();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * std::numbers::pi * u2;
    cached_gaussian_ = radius * std::sin(angle);
    has_cached_gaussian_ = true;
    return radius * std::cos(angle);
}

std::vector<double> transmit(const BitVector& x, const ChannelModel& ch, RngStream& rng) {
    validate(ch);
    std::vector<double> y(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double sign = x.get(i) ? -1.0 : 1.0;
        if (const auto* bec = std::get_if<Bec>(&ch)) {
            y[i] = (rng.next_unit() < bec->epsilon) ? kErasureSymbol : sign;
        } else if (const auto* bsc = std::get_if<Bsc>(&ch)) {
            const double z = (rng.next_unit() < bsc->p) ? -1.0 : 1.0;
            y[i] = sign * z;
        } else {
            const double z = 1.0 + std::get<BiAwgn>(ch).sigma * rng.next_gaussian();
            y[i] = sign * z;
        }
    }
    return y;
}

double binary_entropy(double p) {
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("binary_entropy: p must be in [0,1]");
    if (p == 0.0 || p == 1.0) return 0.0;
    return -p * std::log2(p) - (1.0 - p) * std::log2(1.0 - p);
}

namespace {

// integrand of 1 - C for the BI-AWGN with equiprobable inputs: the density of
// Y given input 0 times log2(1 + exp(-2y/sigma^2))
double biawgn_integrand(double y, double sigma) {
    const double density = std::exp(-0.5 * (y - 1.0) * (y - 1.0) / (sigma * sigma)) /
                           (sigma * std::sqrt(2.0 * std::numbers::pi));
    const double l = -2.0 * y / (sigma * sigma);
    double softplus2;  // log2(1 + e^l)
    if (l > 36.0)
        softplus2 = l / std::numbers::ln2;
    else if (l < -36.0)
        softplus2 = std::exp(l) / std::numbers::ln2;
    else
        softplus2 = std::log1p(std::exp(l)) / std::numbers::ln2;
    return density * softplus2;
}

} // namespace

double capacity(const ChannelModel& ch) {
    validate(ch);
    if (const auto* bec = std::get_if<Bec>(&ch)) return 1.0 - bec->epsilon;
    if (const auto* bsc = std::get_if<Bsc>(&ch)) return 1.0 - binary_entropy(bsc->p);

    // composite Simpson over the effective support of the conditional density;
    // the panel count keeps the quadrature error well below 1e-6
    const double sigma = std::get<BiAwgn>(ch).sigma;
    const double lo = 1.0 - 12.0 * sigma, hi = 1.0 + 12.0 * sigma;
    const int panels = 20000;  // even
    const double h = (hi - lo) / panels;
    double sum = biawgn_integrand(lo, sigma) + biawgn_integrand(hi, sigma);
    for (int i = 1; i < panels; ++i)
        sum += biawgn_integrand(lo + h * i, sigma) * (i % 2 ? 4.0 : 2.0);
    return 1.0 - sum * h / 3.0;
}

} // namespace rmrll

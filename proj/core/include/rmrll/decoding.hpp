#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "rmrll/bitmat.hpp"
#include "rmrll/channel.hpp"
#include "rmrll/rm.hpp"
#include "rmrll/subcode.hpp"

namespace rmrll {

/// Largest code dimension for the exhaustive-Bayes decoder.
inline constexpr int kExhaustiveDimGuard = 20;

/// Per-position posteriors P(X_i = 1 | y) under a uniform prior over the code,
/// with the argmax estimate and a flag for exact ties (posterior 1/2).
struct BitPosterior {
    std::vector<double> p_one;
    std::vector<std::uint8_t> map_estimate;
    std::vector<std::uint8_t> tie;

    std::size_t size() const { return p_one.size(); }
};

/// Exact bit-MAP decoder for any linear code over the BEC. Unerased positions
/// get posterior 0 or 1 from the observation; an erased position is 0 or 1
/// when its generator column lies in the span of the unerased columns (the
/// forced value), and exactly 1/2 otherwise: the consistent set is a coset of
/// a subcode on which an undetermined coordinate takes each value equally often.
class BecMapDecoder {
public:
    explicit BecMapDecoder(const BitMatrix& generator);

    std::size_t block_length() const { return n_; }

    /// y uses the BEC alphabet: sign carries the bit, 0 is an erasure.
    /// Throws inconsistent_error when y matches no codeword.
    BitPosterior decode(std::span<const double> y) const;

    /// Number of erased positions with posterior exactly 1/2. Assumes y was
    /// produced by transmitting a codeword (then consistency is automatic),
    /// which lets the span construction stop as soon as it is full.
    std::size_t undetermined_count(std::span<const double> y) const;

private:
    std::size_t k_, n_;
    std::vector<BitVector> columns_;  // generator columns, one slot reserved for the observed bit
};

/// One-shot convenience wrapper around BecMapDecoder.
BitPosterior bec_bitmap(const BitMatrix& generator, std::span<const double> y);

/// Direct Bayes over all codewords: posterior_i = sum_{c : c_i = 1} P(y|c) / sum_c P(y|c).
/// BEC likelihoods are handled by exact consistent-set counting so results match
/// bec_bitmap bit for bit; BSC and BI-AWGN work in log domain.
class ExhaustiveMapDecoder {
public:
    ExhaustiveMapDecoder(const BitMatrix& generator, ChannelModel ch);

    BitPosterior decode(std::span<const double> y) const;

private:
    std::size_t n_;
    ChannelModel ch_;
    std::vector<BitVector> codewords_;
};

BitPosterior exhaustive_bitmap(const RmCode& code, const ChannelModel& ch, std::span<const double> y);

/// Message source + encoder hook for Monte Carlo runs.
struct EncoderFn {
    std::size_t message_bits = 0;
    std::size_t block_length = 0;
    std::function<BitVector(const BitVector&)> encode;
};
EncoderFn as_encoder(const RmCode& code);
EncoderFn as_encoder(const SubcodeEncoder& enc);

enum class DecoderKind {
    BecAnalytic,       // exact erasure bit-MAP, any dimension
    ExhaustiveOracle,  // direct Bayes, guarded by kExhaustiveDimGuard
};

struct SimulationResult {
    std::uint64_t trials = 0;
    double pb = 0.0;         // Monte Carlo estimate of the bit-MAP error
    double std_error = 0.0;  // sample std / sqrt(trials)
    std::vector<double> undetermined_trace;  // per-trial undetermined fraction (BEC analytic, on request)
};

/// Monte Carlo estimate of P_b = 1 - (1/n) sum_i E[max posterior], with
/// messages uniform over the encoder's message space and the decoder prior
/// uniform over the row space of prior_generator (the full linear code, even
/// when a constrained subcode is transmitted). Trial t draws from RngStream
/// (seed, t), so results do not depend on execution order.
SimulationResult estimate_pb(const EncoderFn& encoder, const BitMatrix& prior_generator,
                             const ChannelModel& ch, DecoderKind decoder, std::uint64_t trials,
                             std::uint64_t seed, bool keep_trace = false);

} // namespace rmrll

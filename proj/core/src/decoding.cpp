#include "rmrll/decoding.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <stdexcept>

#include "rmrll/errors.hpp"
#include "echelon.hpp"

namespace rmrll {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

void finalize_estimates(BitPosterior& post) {
    const std::size_t n = post.p_one.size();
    post.map_estimate.assign(n, 0);
    post.tie.assign(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        if (post.p_one[i] == 0.5)
            post.tie[i] = 1;
        else if (post.p_one[i] > 0.5)
            post.map_estimate[i] = 1;
    }
}

} // namespace

BecMapDecoder::BecMapDecoder(const BitMatrix& generator)
    : k_(generator.rows()), n_(generator.cols()) {
    columns_.reserve(n_);
    for (std::size_t j = 0; j < n_; ++j) columns_.emplace_back(k_ + 1);
    for (std::size_t r = 0; r < k_; ++r) {
        const BitVector& row = generator.row(r);
        for (int j = row.first_set(); j >= 0; j = row.first_set(std::size_t(j) + 1))
            columns_[std::size_t(j)].set(r, true);
    }
}

BitPosterior BecMapDecoder::decode(std::span<const double> y) const {
    if (y.size() != n_) throw std::invalid_argument("BecMapDecoder::decode: length mismatch");

    detail::Echelon span(k_ + 1);
    for (std::size_t j = 0; j < n_; ++j) {
        if (y[j] == kErasureSymbol) continue;
        BitVector col = columns_[j];
        col.set(k_, y[j] < 0.0);  // negative output carries input bit 1
        if (span.insert(std::move(col)) == int(k_))
            throw inconsistent_error("bec_bitmap: observation matches no codeword");
    }

    BitPosterior post;
    post.p_one.assign(n_, 0.0);
    for (std::size_t j = 0; j < n_; ++j) {
        if (y[j] != kErasureSymbol) {
            post.p_one[j] = y[j] < 0.0 ? 1.0 : 0.0;
            continue;
        }
        BitVector col = columns_[j];
        const int lead = span.reduce(col);
        if (lead < 0)
            post.p_one[j] = 0.0;  // forced to the zero combination of known bits
        else if (lead == int(k_))
            post.p_one[j] = 1.0;
        else
            post.p_one[j] = 0.5;  // column outside the known span: both values occur
    }
    finalize_estimates(post);
    return post;
}

std::size_t BecMapDecoder::undetermined_count(std::span<const double> y) const {
    if (y.size() != n_) throw std::invalid_argument("BecMapDecoder: length mismatch");

    detail::Echelon span(k_ + 1);
    std::size_t column_rank = 0;
    for (std::size_t j = 0; j < n_ && column_rank < k_; ++j) {
        if (y[j] == kErasureSymbol) continue;
        BitVector col = columns_[j];
        col.set(k_, y[j] < 0.0);
        const int lead = span.insert(std::move(col));
        if (lead >= 0 && lead < int(k_)) ++column_rank;
    }
    if (column_rank == k_) return 0;  // known columns span everything

    std::size_t undetermined = 0;
    for (std::size_t j = 0; j < n_; ++j) {
        if (y[j] != kErasureSymbol) continue;
        BitVector col = columns_[j];
        const int lead = span.reduce(col);
        if (lead >= 0 && lead < int(k_)) ++undetermined;
    }
    return undetermined;
}

BitPosterior bec_bitmap(const BitMatrix& generator, std::span<const double> y) {
    return BecMapDecoder(generator).decode(y);
}

ExhaustiveMapDecoder::ExhaustiveMapDecoder(const BitMatrix& generator, ChannelModel ch)
    : n_(generator.cols()), ch_(ch) {
    if (int(generator.rows()) > kExhaustiveDimGuard)
        throw guard_error("ExhaustiveMapDecoder: dimension exceeds oracle guard");
    const std::size_t k = generator.rows();
    codewords_.reserve(std::size_t(1) << k);
    BitVector cw(n_);
    codewords_.push_back(cw);
    for (std::uint64_t t = 1; t < (std::uint64_t(1) << k); ++t) {
        cw ^= generator.row(std::size_t(std::countr_zero(t)));
        codewords_.push_back(cw);
    }
}

BitPosterior ExhaustiveMapDecoder::decode(std::span<const double> y) const {
    if (y.size() != n_) throw std::invalid_argument("ExhaustiveMapDecoder::decode: length mismatch");
    BitPosterior post;
    post.p_one.assign(n_, 0.0);

    const bool count_exactly =
        std::holds_alternative<Bec>(ch_) ||
        (std::holds_alternative<Bsc>(ch_) &&
         (std::get<Bsc>(ch_).p == 0.0 || std::get<Bsc>(ch_).p == 1.0));

    if (count_exactly) {
        // likelihoods are 0/1 up to a constant factor: count codewords that can
        // produce y, so BEC posteriors are exactly 0, 1/2 or 1
        const bool flip_all = std::holds_alternative<Bsc>(ch_) && std::get<Bsc>(ch_).p == 1.0;
        std::vector<std::uint64_t> ones(n_, 0);
        std::uint64_t total = 0;
        for (const BitVector& c : codewords_) {
            bool consistent = true;
            for (std::size_t i = 0; i < n_ && consistent; ++i) {
                if (y[i] == kErasureSymbol && std::holds_alternative<Bec>(ch_)) continue;
                const bool received_one = flip_all ? (y[i] > 0.0) : (y[i] < 0.0);
                if (c.get(i) != received_one) consistent = false;
            }
            if (!consistent) continue;
            ++total;
            for (std::size_t i = 0; i < n_; ++i)
                if (c.get(i)) ++ones[i];
        }
        if (total == 0) throw inconsistent_error("exhaustive_bitmap: zero total likelihood");
        for (std::size_t i = 0; i < n_; ++i)
            post.p_one[i] = double(ones[i]) / double(total);
        finalize_estimates(post);
        return post;
    }

    // log-domain Bayes; constant per-symbol factors cancel in the ratio
    std::vector<double> loglik(codewords_.size());
    double best = kNegInf;
    for (std::size_t c = 0; c < codewords_.size(); ++c) {
        double ll = 0.0;
        if (const auto* bsc = std::get_if<Bsc>(&ch_)) {
            const double lp = std::log(bsc->p), lq = std::log(1.0 - bsc->p);
            for (std::size_t i = 0; i < n_; ++i) {
                const bool sent_one = codewords_[c].get(i);
                const bool received_one = y[i] < 0.0;
                ll += (sent_one == received_one) ? lq : lp;
            }
        } else {
            const double sigma = std::get<BiAwgn>(ch_).sigma;
            for (std::size_t i = 0; i < n_; ++i) {
                const double mean = codewords_[c].get(i) ? -1.0 : 1.0;
                const double dev = y[i] - mean;
                ll -= 0.5 * dev * dev / (sigma * sigma);
            }
        }
        loglik[c] = ll;
        best = std::max(best, ll);
    }
    if (best == kNegInf) throw inconsistent_error("exhaustive_bitmap: zero total likelihood");

    std::vector<double> one_mass(n_, 0.0);
    double total_mass = 0.0;
    for (std::size_t c = 0; c < codewords_.size(); ++c) {
        const double w = std::exp(loglik[c] - best);
        total_mass += w;
        const BitVector& cw = codewords_[c];
        for (int i = cw.first_set(); i >= 0; i = cw.first_set(std::size_t(i) + 1))
            one_mass[std::size_t(i)] += w;
    }
    for (std::size_t i = 0; i < n_; ++i) post.p_one[i] = one_mass[i] / total_mass;
    finalize_estimates(post);
    return post;
}

BitPosterior exhaustive_bitmap(const RmCode& code, const ChannelModel& ch,
                               std::span<const double> y) {
    return ExhaustiveMapDecoder(code.generator(), ch).decode(y);
}

EncoderFn as_encoder(const RmCode& code) {
    return EncoderFn{code.dim(), code.length(),
                     [&code](const BitVector& msg) { return code.encode(msg); }};
}

EncoderFn as_encoder(const SubcodeEncoder& enc) {
    return EncoderFn{enc.message_bits(), enc.block_length(),
                     [&enc](const BitVector& msg) { return enc.encode(msg); }};
}

SimulationResult estimate_pb(const EncoderFn& encoder, const BitMatrix& prior_generator,
                             const ChannelModel& ch, DecoderKind decoder, std::uint64_t trials,
                             std::uint64_t seed, bool keep_trace) {
    if (trials < 1) throw std::invalid_argument("estimate_pb: need at least one trial");
    if (encoder.block_length != prior_generator.cols())
        throw std::invalid_argument("estimate_pb: encoder and prior disagree on block length");
    const std::size_t n = encoder.block_length;

    const bool analytic = decoder == DecoderKind::BecAnalytic;
    if (analytic && !std::holds_alternative<Bec>(ch))
        throw std::invalid_argument("estimate_pb: analytic decoder requires the BEC");

    std::optional<BecMapDecoder> bec_dec;
    std::optional<ExhaustiveMapDecoder> oracle;
    if (analytic)
        bec_dec.emplace(prior_generator);
    else
        oracle.emplace(prior_generator, ch);

    SimulationResult res;
    res.trials = trials;
    if (keep_trace && analytic) res.undetermined_trace.reserve(trials);

    double mean = 0.0, m2 = 0.0;  // Welford
    for (std::uint64_t t = 0; t < trials; ++t) {
        RngStream rng(seed, t);
        BitVector msg(encoder.message_bits);
        for (std::size_t i = 0; i < encoder.message_bits; ++i) msg.set(i, rng.next_bit());
        const BitVector cw = encoder.encode(msg);
        const std::vector<double> y = transmit(cw, ch, rng);

        double term;
        if (analytic) {
            // determined positions always match the transmitted codeword, so the
            // per-trial error is carried entirely by the posterior-1/2 positions
            const std::size_t undetermined = bec_dec->undetermined_count(y);
            term = 0.5 * double(undetermined) / double(n);
            if (keep_trace) res.undetermined_trace.push_back(double(undetermined) / double(n));
        } else {
            const BitPosterior post = oracle->decode(y);
            double acc = 0.0;
            for (std::size_t i = 0; i < n; ++i)
                acc += std::max(post.p_one[i], 1.0 - post.p_one[i]);
            term = 1.0 - acc / double(n);
        }

        const double delta = term - mean;
        mean += delta / double(t + 1);
        m2 += delta * (term - mean);
    }

    res.pb = mean;
    res.std_error = trials > 1 ? std::sqrt(m2 / double(trials - 1) / double(trials)) : 0.0;
    return res;
}

} // namespace rmrll

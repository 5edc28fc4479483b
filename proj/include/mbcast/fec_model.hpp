#ifndef MBCAST_FEC_MODEL_HPP
#define MBCAST_FEC_MODEL_HPP

#include <cstdint>

namespace mbcast::fec {

// One segment's AL-FEC source block: k source symbols plus r repair symbols,
// each of symbol_size bytes, one symbol per packet.
struct RaptorCode {
    RaptorCode(int k, int r, int symbol_size);

    int k;
    int r;
    int symbol_size; // bytes

    int total_symbols() const { return k + r; }
    double code_rate() const { return static_cast<double>(k) / (k + r); }
};

// i.i.d. per-packet erasure channel.
struct ErasureChannel {
    explicit ErasureChannel(double per);

    double per; // packet loss probability in [0, 1]
};

// Probability that the decoder fails to recover the block given n received
// symbols: 1 below k, 0.85 * 0.567^(n-k) at or above k.
double decoder_failure_given_n(const RaptorCode& code, int n);

// Binomial probability of receiving exactly n of the k+r symbols.
// Log-domain evaluation; stable for blocks up to ~1e5 symbols.
double symbols_received_pmf(const RaptorCode& code, const ErasureChannel& channel, int n);

// Total probability of losing the segment: failure probability averaged over
// the reception distribution.
double segment_loss_probability(const RaptorCode& code, const ErasureChannel& channel);

// Dimension a code for a segment: k = ceil(bytes / symbol_size), repair count
// rounded up so the realized rate never exceeds the requested rate.
RaptorCode code_for_segment(std::int64_t segment_bytes, int symbol_size, double code_rate);

} // namespace mbcast::fec

#endif

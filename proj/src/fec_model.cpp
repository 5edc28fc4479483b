#include "mbcast/fec_model.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace mbcast::fec {

RaptorCode::RaptorCode(int k_, int r_, int symbol_size_)
    : k(k_), r(r_), symbol_size(symbol_size_) {
    if (k < 1) throw std::invalid_argument("RaptorCode: k must be >= 1");
    if (r < 0) throw std::invalid_argument("RaptorCode: r must be >= 0");
    if (symbol_size < 1) throw std::invalid_argument("RaptorCode: symbol_size must be >= 1");
}

ErasureChannel::ErasureChannel(double per_) : per(per_) {
    if (!(per >= 0.0 && per <= 1.0))
        throw std::invalid_argument("ErasureChannel: per must be in [0, 1]");
}

double decoder_failure_given_n(const RaptorCode& code, int n) {
    if (n < 0 || n > code.total_symbols())
        throw std::domain_error("decoder_failure_given_n: n out of [0, k+r]");
    if (n < code.k) return 1.0;
    return 0.85 * std::pow(0.567, n - code.k);
}

double symbols_received_pmf(const RaptorCode& code, const ErasureChannel& channel, int n) {
    const int total = code.total_symbols();
    if (n < 0 || n > total)
        throw std::domain_error("symbols_received_pmf: n out of [0, k+r]");

    const double per = channel.per;
    if (per == 0.0) return n == total ? 1.0 : 0.0;
    if (per == 1.0) return n == 0 ? 1.0 : 0.0;

    const double log_choose = std::lgamma(total + 1.0) - std::lgamma(n + 1.0) -
                              std::lgamma(total - n + 1.0);
    const double log_p = log_choose + n * std::log1p(-per) + (total - n) * std::log(per);
    return std::exp(log_p);
}

double segment_loss_probability(const RaptorCode& code, const ErasureChannel& channel) {
    double total = 0.0;
    for (int n = 0; n <= code.total_symbols(); ++n)
        total += decoder_failure_given_n(code, n) * symbols_received_pmf(code, channel, n);
    return total < 0.0 ? 0.0 : (total > 1.0 ? 1.0 : total);
}

RaptorCode code_for_segment(std::int64_t segment_bytes, int symbol_size, double code_rate) {
    if (segment_bytes < 1)
        throw std::invalid_argument("code_for_segment: segment_bytes must be >= 1");
    if (symbol_size < 1)
        throw std::invalid_argument("code_for_segment: symbol_size must be >= 1");
    if (!(code_rate > 0.0 && code_rate <= 1.0))
        throw std::domain_error("code_for_segment: code_rate must be in (0, 1]");

    const std::int64_t k64 = (segment_bytes + symbol_size - 1) / symbol_size;
    const auto total = static_cast<std::int64_t>(std::ceil(static_cast<double>(k64) / code_rate));
    if (k64 > 1'000'000'000 || total > 2'000'000'000)
        throw std::invalid_argument("code_for_segment: symbol count overflow (k=" +
                                    std::to_string(k64) + ")");
    const int k = static_cast<int>(k64);
    return RaptorCode(k, static_cast<int>(total - k64), symbol_size);
}

} // namespace mbcast::fec

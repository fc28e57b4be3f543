#include "seqcorr/patterns.hpp"

#include <bit>
#include <stdexcept>

#include "seqcorr/correlation.hpp"
#include "seqcorr/numbers.hpp"

namespace seqcorr {

namespace {

// Expands a histogram indexed by the integer whose binary digits are the
// window bits (first bit most significant) into one PatternCount per
// possible pattern, in ascending (lexicographic) order.
std::vector<PatternCount> tally(std::size_t window_len, std::size_t window_k,
                                std::optional<std::int64_t> lag_tau,
                                const std::vector<std::size_t>& histogram) {
    std::vector<PatternCount> out;
    out.reserve(histogram.size());
    for (std::size_t idx = 0; idx < histogram.size(); ++idx) {
        std::vector<std::uint8_t> pattern(window_len);
        for (std::size_t b = 0; b < window_len; ++b)
            pattern[b] = static_cast<std::uint8_t>((idx >> (window_len - 1 - b)) & 1);
        out.push_back(PatternCount{window_k, lag_tau, std::move(pattern), histogram[idx]});
    }
    return out;
}

void check_window_size(std::size_t window_len) {
    if (window_len > 20) throw std::invalid_argument("pattern window too large to enumerate");
}

}  // namespace

std::vector<PatternCount> joint_pattern_counts(const BinarySequence& s, const BinarySequence& t,
                                               std::size_t k) {
    if (k + 1 > std::min(s.period(), t.period()))
        throw std::invalid_argument("joint_pattern_counts: window exceeds a period");
    std::size_t window_len = 2 * k + 2;
    check_window_size(window_len);
    std::size_t n = common_period(s, t);
    std::vector<std::size_t> histogram(std::size_t{1} << window_len, 0);
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t idx = 0;
        auto si = static_cast<std::int64_t>(i);
        for (std::int64_t j = si - static_cast<std::int64_t>(k); j <= si; ++j)
            idx = idx << 1 | static_cast<std::size_t>(s[j]);
        for (std::int64_t j = si - static_cast<std::int64_t>(k); j <= si; ++j)
            idx = idx << 1 | static_cast<std::size_t>(t[j]);
        ++histogram[idx];
    }
    return tally(window_len, k, std::nullopt, histogram);
}

std::vector<PatternCount> auto_pattern_counts(const BinarySequence& s, std::int64_t tau,
                                              std::size_t k) {
    std::size_t period = s.period();
    if (!std::has_single_bit(period + 1))
        throw std::invalid_argument("auto_pattern_counts: period must be 2^n - 1");
    auto n = static_cast<std::size_t>(std::bit_width(period));  // period = 2^n - 1
    if (tau < 1 || static_cast<std::size_t>(tau) >= n)
        throw std::invalid_argument("auto_pattern_counts: need 1 <= tau < n");
    auto utau = static_cast<std::size_t>(tau);

    std::size_t window_len;
    bool split;
    if (k < std::min(utau, n - utau)) {
        split = true;
        window_len = 2 * k + 2;
    } else if (k >= utau && k + utau + 1 <= n) {
        split = false;
        window_len = k + utau + 1;
    } else {
        throw std::invalid_argument("auto_pattern_counts: k admits neither window shape");
    }
    check_window_size(window_len);

    std::vector<std::size_t> histogram(std::size_t{1} << window_len, 0);
    for (std::size_t i = 0; i < period; ++i) {
        std::size_t idx = 0;
        auto si = static_cast<std::int64_t>(i);
        if (split) {
            for (std::int64_t j = si - static_cast<std::int64_t>(k); j <= si; ++j)
                idx = idx << 1 | static_cast<std::size_t>(s[j]);
            for (std::int64_t j = si - static_cast<std::int64_t>(k); j <= si; ++j)
                idx = idx << 1 | static_cast<std::size_t>(s[j + tau]);
        } else {
            for (std::int64_t j = si - static_cast<std::int64_t>(k); j <= si + tau; ++j)
                idx = idx << 1 | static_cast<std::size_t>(s[j]);
        }
        ++histogram[idx];
    }
    return tally(window_len, k, tau, histogram);
}

}  // namespace seqcorr

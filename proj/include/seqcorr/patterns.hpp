#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "seqcorr/sequence.hpp"

// Window-pattern counters behind the correlation lemmas: joint windows of a
// sequence pair, and the two m-sequence autocorrelation window shapes (split
// windows for small k, one contiguous window once the halves touch).

namespace seqcorr {

struct PatternCount {
    std::size_t window_k;
    std::optional<std::int64_t> lag_tau;  // set for the auto counters only
    std::vector<std::uint8_t> pattern;
    std::size_t count;
};

/// Counts, for every e in {0,1}^{2k+2}, the positions i in [0, N) with
/// (s_{i-k}, ..., s_i, t_{i-k}, ..., t_i) = e, over the common period N with
/// cyclic indexing. Needs k+1 <= min(period s, period t). All 2^{2k+2}
/// patterns are reported (zero counts included), sorted by pattern.
std::vector<PatternCount> joint_pattern_counts(const BinarySequence& s, const BinarySequence& t,
                                               std::size_t k);

/// m-sequence auto window counts at shift tau, 1 <= tau < n, period 2^n - 1.
/// For k < min(tau, n-tau) the window is the split pair
/// (s_{i-k}, ..., s_i, s_{i-k+tau}, ..., s_{i+tau}) of length 2k+2; for
/// tau <= k <= n-tau-1 the halves overlap and the window is the contiguous
/// run (s_{i-k}, ..., s_{i+tau}) of length k+tau+1. Other k are rejected.
std::vector<PatternCount> auto_pattern_counts(const BinarySequence& s, std::int64_t tau,
                                              std::size_t k);

}  // namespace seqcorr

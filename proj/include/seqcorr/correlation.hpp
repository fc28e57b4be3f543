#pragma once

#include <cstdint>
#include <vector>

#include "seqcorr/residue.hpp"
#include "seqcorr/sequence.hpp"

// Exact classical and arithmetic correlations. Both sequences are expanded to
// the common period N = lcm of their declared periods; the classical value is
// N - 2*(Hamming distance) and the arithmetic value is N - 2*wt(W), where W
// is the binary expansion of S(2) - T^(tau)(2) when that difference is
// non-negative and of 2^N - 1 + S(2) - T^(tau)(2) otherwise.

namespace seqcorr {

/// Packs one common period into a width-N residue: bit i = s_{(i+tau) mod
/// period}. The declared period must divide N.
ResidueBits sequence_to_integer(const BinarySequence& s, std::int64_t tau, std::size_t n);

/// Common period of the pair (lcm of declared periods).
std::size_t common_period(const BinarySequence& s, const BinarySequence& t);

std::int64_t classical_crosscorrelation(const BinarySequence& s, const BinarySequence& t,
                                        std::int64_t tau);
std::int64_t classical_autocorrelation(const BinarySequence& s, std::int64_t tau);
std::int64_t arithmetic_crosscorrelation(const BinarySequence& s, const BinarySequence& t,
                                         std::int64_t tau);
std::int64_t arithmetic_autocorrelation(const BinarySequence& s, std::int64_t tau);

/// The lag-independent residue behind arithmetic crosscorrelation of
/// coprime-period pairs: Omega = sum_{k=0}^{q-1} lambda_k 2^{kp} reduced mod
/// 2^{pq} - 1 with lambda_k = sum_{m=0}^{p-1} (s_m - t_{m+kp}) 2^m. The
/// crosscorrelation at every lag equals pq - 2*wt(Omega). Periods must be
/// coprime and both > 1.
ResidueBits omega(const BinarySequence& s, const BinarySequence& t);

enum class Method { classical, arithmetic };

struct CorrelationProfile {
    Method method;
    bool is_auto;
    std::size_t common_period;
    std::vector<std::int64_t> values;  // index = lag
};

/// All-lag sweep over tau in [0, N). Each value satisfies |v| <= N and
/// v == N (mod 2). jobs > 1 spreads lags across threads.
CorrelationProfile cross_profile(const BinarySequence& s, const BinarySequence& t, Method method,
                                 unsigned jobs = 1);
CorrelationProfile auto_profile(const BinarySequence& s, Method method, unsigned jobs = 1);

}  // namespace seqcorr

#include "seqcorr/correlation.hpp"

#include <numeric>
#include <stdexcept>

#include "seqcorr/numbers.hpp"
#include "seqcorr/parallel.hpp"

namespace seqcorr {

namespace {

// Packed view of t shifted by tau, derived from the tau=0 packing: shifting
// the sequence left by tau divides the packed value by 2^tau mod 2^N - 1,
// i.e. rotates the residue left by N - tau.
ResidueBits rotate_for_lag(const ResidueBits& t0, std::int64_t tau) {
    std::size_t n = t0.width();
    std::size_t k = floor_mod(tau, n);
    return t0.rotated_left((n - k) % n);
}

std::int64_t classical_from_packed(const ResidueBits& x, const ResidueBits& y) {
    std::size_t n = x.width();
    return static_cast<std::int64_t>(n) - 2 * static_cast<std::int64_t>(x.hamming_distance(y));
}

std::int64_t arithmetic_from_packed(const ResidueBits& x, const ResidueBits& y) {
    // residue_subtract yields exactly the expansion the definition asks for:
    // x - y when non-negative, else 2^N - 1 + (x - y).
    std::size_t n = x.width();
    ResidueDifference d = residue_subtract(x, y);
    return static_cast<std::int64_t>(n) - 2 * static_cast<std::int64_t>(d.bits.weight());
}

}  // namespace

ResidueBits sequence_to_integer(const BinarySequence& s, std::int64_t tau, std::size_t n) {
    if (n == 0 || n % s.period() != 0)
        throw std::invalid_argument("sequence_to_integer: width must be a multiple of the period");
    ResidueBits out(n);
    for (std::size_t i = 0; i < n; ++i)
        out.set_bit(i, s[static_cast<std::int64_t>(i) + tau] != 0);
    return out;
}

std::size_t common_period(const BinarySequence& s, const BinarySequence& t) {
    return static_cast<std::size_t>(lcm(s.period(), t.period()));
}

std::int64_t classical_crosscorrelation(const BinarySequence& s, const BinarySequence& t,
                                        std::int64_t tau) {
    std::size_t n = common_period(s, t);
    return classical_from_packed(sequence_to_integer(s, 0, n), sequence_to_integer(t, tau, n));
}

std::int64_t classical_autocorrelation(const BinarySequence& s, std::int64_t tau) {
    return classical_crosscorrelation(s, s, tau);
}

std::int64_t arithmetic_crosscorrelation(const BinarySequence& s, const BinarySequence& t,
                                         std::int64_t tau) {
    std::size_t n = common_period(s, t);
    return arithmetic_from_packed(sequence_to_integer(s, 0, n), sequence_to_integer(t, tau, n));
}

std::int64_t arithmetic_autocorrelation(const BinarySequence& s, std::int64_t tau) {
    return arithmetic_crosscorrelation(s, s, tau);
}

ResidueBits omega(const BinarySequence& s, const BinarySequence& t) {
    std::size_t p = s.period(), q = t.period();
    if (p <= 1 || q <= 1) throw std::invalid_argument("omega: both periods must exceed 1");
    if (std::gcd(p, q) != 1) throw std::invalid_argument("omega: periods must be coprime");
    std::size_t n = p * q;

    // lambda_k = sum_m (s_m - t_{m+kp}) 2^m splits into a positive and a
    // negative part; across k the blocks [kp, (k+1)p) are disjoint, so the
    // parts pack into two residues subtracted once at the end.
    ResidueBits pos(n), neg(n);
    for (std::size_t k = 0; k < q; ++k) {
        for (std::size_t m = 0; m < p; ++m) {
            int sm = s[static_cast<std::int64_t>(m)];
            int tm = t[static_cast<std::int64_t>(m + k * p)];
            if (sm == tm) continue;
            (sm > tm ? pos : neg).set_bit(k * p + m, true);
        }
    }
    return residue_subtract(pos, neg).bits;
}

namespace {

CorrelationProfile sweep(const BinarySequence& s, const BinarySequence& t, Method method,
                         bool is_auto, unsigned jobs) {
    std::size_t n = common_period(s, t);
    ResidueBits x = sequence_to_integer(s, 0, n);
    ResidueBits t0 = sequence_to_integer(t, 0, n);
    CorrelationProfile out{method, is_auto, n, std::vector<std::int64_t>(n)};
    parallel_for(n, jobs, [&](std::size_t tau) {
        ResidueBits y = rotate_for_lag(t0, static_cast<std::int64_t>(tau));
        out.values[tau] =
            method == Method::classical ? classical_from_packed(x, y) : arithmetic_from_packed(x, y);
    });
    return out;
}

}  // namespace

CorrelationProfile cross_profile(const BinarySequence& s, const BinarySequence& t, Method method,
                                 unsigned jobs) {
    return sweep(s, t, method, false, jobs);
}

CorrelationProfile auto_profile(const BinarySequence& s, Method method, unsigned jobs) {
    return sweep(s, s, method, true, jobs);
}

}  // namespace seqcorr

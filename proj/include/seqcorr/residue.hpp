#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace seqcorr {

struct ResidueDifference;

/// A non-negative integer below 2^N stored as exactly N bits, packed into
/// 64-bit words with bit i the coefficient of 2^i. Carrier for one-period
/// base-2 expansions of sequences and their differences mod 2^N - 1.
class ResidueBits {
public:
    /// Zero value of the given width (width >= 1).
    explicit ResidueBits(std::size_t width);

    ResidueBits(std::size_t width, std::uint64_t value);

    /// Character i of the string is the coefficient of 2^i ("101" has the
    /// value 5, "011" the value 6).
    static ResidueBits from_bit_string(std::string_view bits);

    std::size_t width() const { return width_; }

    bool bit(std::size_t i) const {
        return (words_[i >> 6] >> (i & 63)) & 1u;
    }

    void set_bit(std::size_t i, bool v) {
        std::uint64_t m = 1ull << (i & 63);
        if (v)
            words_[i >> 6] |= m;
        else
            words_[i >> 6] &= ~m;
    }

    /// Number of set bits (the N_1 of the correlation formula).
    std::size_t weight() const;

    bool is_zero() const;
    bool is_all_ones() const;

    /// Cyclic left rotation by k positions: value becomes 2^k * value
    /// modulo 2^N - 1. The all-ones word is a fixed point.
    ResidueBits rotated_left(std::size_t k) const;

    /// Hamming distance to another residue of the same width.
    std::size_t hamming_distance(const ResidueBits& other) const;

    std::string to_bit_string() const;

    /// Numeric value; width must be <= 64.
    std::uint64_t value_u64() const;

    /// Integer comparison; widths must match.
    std::strong_ordering operator<=>(const ResidueBits& other) const;
    bool operator==(const ResidueBits& other) const;

private:
    void check_same_width(const ResidueBits& other) const;
    void mask_top();

    std::size_t width_ = 0;
    std::vector<std::uint64_t> words_;

    friend struct ResidueDifference;
    friend ResidueDifference residue_subtract(const ResidueBits&, const ResidueBits&);
};

/// Result of subtraction mod 2^N - 1: when value(a) >= value(b) the plain
/// difference with negative=false, otherwise 2^N - 1 + a - b with
/// negative=true.
struct ResidueDifference {
    ResidueBits bits;
    bool negative;
};

ResidueDifference residue_subtract(const ResidueBits& a, const ResidueBits& b);

}  // namespace seqcorr

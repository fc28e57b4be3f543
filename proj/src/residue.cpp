#include "seqcorr/residue.hpp"

#include <bit>
#include <stdexcept>

namespace seqcorr {

namespace {
constexpr std::size_t kWordBits = 64;

std::size_t word_count(std::size_t width) { return (width + kWordBits - 1) / kWordBits; }
}  // namespace

ResidueBits::ResidueBits(std::size_t width)
    : width_(width), words_(word_count(width), 0) {
    if (width == 0) throw std::invalid_argument("ResidueBits: width must be >= 1");
}

ResidueBits::ResidueBits(std::size_t width, std::uint64_t value) : ResidueBits(width) {
    if (width < 64 && value >> width)
        throw std::invalid_argument("ResidueBits: value does not fit the width");
    words_[0] = value;
}

ResidueBits ResidueBits::from_bit_string(std::string_view bits) {
    ResidueBits r(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] == '1')
            r.set_bit(i, true);
        else if (bits[i] != '0')
            throw std::invalid_argument("ResidueBits: bit string must be 0/1");
    }
    return r;
}

void ResidueBits::mask_top() {
    std::size_t r = width_ & (kWordBits - 1);
    if (r) words_.back() &= (~0ull >> (kWordBits - r));
}

std::size_t ResidueBits::weight() const {
    std::size_t w = 0;
    for (std::uint64_t word : words_) w += static_cast<std::size_t>(std::popcount(word));
    return w;
}

bool ResidueBits::is_zero() const {
    for (std::uint64_t word : words_)
        if (word) return false;
    return true;
}

bool ResidueBits::is_all_ones() const { return weight() == width_; }

std::size_t ResidueBits::hamming_distance(const ResidueBits& other) const {
    check_same_width(other);
    std::size_t d = 0;
    for (std::size_t i = 0; i < words_.size(); ++i)
        d += static_cast<std::size_t>(std::popcount(words_[i] ^ other.words_[i]));
    return d;
}

ResidueBits ResidueBits::rotated_left(std::size_t k) const {
    k %= width_;
    if (k == 0) return *this;
    // (v << k) | (v >> (N-k)) over the word array, then mask to N bits.
    ResidueBits out(width_);
    const std::size_t nw = words_.size();
    {
        std::size_t ws = k / kWordBits, bs = k % kWordBits;
        for (std::size_t i = 0; i + ws < nw; ++i) {
            out.words_[i + ws] |= (bs ? words_[i] << bs : words_[i]);
            if (bs && i + ws + 1 < nw)
                out.words_[i + ws + 1] |= words_[i] >> (kWordBits - bs);
        }
    }
    {
        std::size_t shift = width_ - k;
        std::size_t ws = shift / kWordBits, bs = shift % kWordBits;
        for (std::size_t j = 0; j + ws < nw; ++j) {
            out.words_[j] |= (bs ? words_[j + ws] >> bs : words_[j + ws]);
            if (bs && j + ws + 1 < nw)
                out.words_[j] |= words_[j + ws + 1] << (kWordBits - bs);
        }
    }
    out.mask_top();
    return out;
}

std::string ResidueBits::to_bit_string() const {
    std::string s(width_, '0');
    for (std::size_t i = 0; i < width_; ++i)
        if (bit(i)) s[i] = '1';
    return s;
}

std::uint64_t ResidueBits::value_u64() const {
    if (width_ > 64) throw std::logic_error("ResidueBits: value does not fit 64 bits");
    return words_[0];
}

void ResidueBits::check_same_width(const ResidueBits& other) const {
    if (width_ != other.width_)
        throw std::invalid_argument("ResidueBits: width mismatch");
}

std::strong_ordering ResidueBits::operator<=>(const ResidueBits& other) const {
    check_same_width(other);
    for (std::size_t i = words_.size(); i-- > 0;) {
        if (words_[i] != other.words_[i])
            return words_[i] < other.words_[i] ? std::strong_ordering::less
                                               : std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

bool ResidueBits::operator==(const ResidueBits& other) const {
    return width_ == other.width_ && words_ == other.words_;
}

ResidueDifference residue_subtract(const ResidueBits& a, const ResidueBits& b) {
    a.check_same_width(b);
    bool negative = a < b;
    const ResidueBits& hi = negative ? b : a;
    const ResidueBits& lo = negative ? a : b;
    ResidueBits out(a.width());
    // Schoolbook word subtraction with borrow; hi >= lo so no final borrow.
    std::uint64_t borrow = 0;
    for (std::size_t i = 0; i < out.words_.size(); ++i) {
        std::uint64_t x = hi.words_[i], y = lo.words_[i];
        std::uint64_t d = x - y - borrow;
        borrow = (x < y) || (borrow && x == y);
        out.words_[i] = d;
    }
    if (negative) {
        // 2^N - 1 + a - b = (2^N - 1) - (b - a): flip every bit.
        for (auto& w : out.words_) w = ~w;
        out.mask_top();
    }
    return {out, negative};
}

}  // namespace seqcorr

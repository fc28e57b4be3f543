#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "seqcorr/gf2poly.hpp"
#include "seqcorr/numbers.hpp"

// Periodic binary sequences and the three classical constructions: Legendre
// sequences, m-sequences (maximal-length LFSR output), and l-sequences
// (maximal-period FCSR output, generated arithmetically as a 2^{-i} orbit).

namespace seqcorr {

/// A binary sequence with a declared period N. The declared period is the
/// length of the stored bits and need not be minimal (expand_to_period
/// legitimately creates non-minimal declared periods). Index access is
/// cyclic over all integers, so s[-i] = s[N-i].
class BinarySequence {
public:
    /// Takes ownership of one period of bits; each entry must be 0 or 1.
    explicit BinarySequence(std::vector<std::uint8_t> bits);

    std::size_t period() const { return bits_.size(); }

    /// Cyclic access: bit at any integer index, negatives included.
    int operator[](std::int64_t i) const {
        return bits_[static_cast<std::size_t>(floor_mod(i, bits_.size()))];
    }

    const std::vector<std::uint8_t>& bits() const { return bits_; }

    std::size_t ones_count() const;

    /// Balanced: ones and zeros differ by one (odd N) or are equal (even N).
    bool is_balanced() const;

    /// Smallest d dividing the declared period such that the sequence is
    /// d-periodic.
    std::size_t minimal_period() const;

    bool operator==(const BinarySequence&) const = default;

private:
    std::vector<std::uint8_t> bits_;
};

/// Legendre sequence of period p (odd prime): bit n = 1 iff n is a nonzero
/// quadratic residue mod p; bit 0 = 0.
BinarySequence legendre_sequence(std::uint64_t p);

/// m-sequence of period 2^n - 1 from a primitive f of degree n >= 2 and a
/// nonzero seed (s_0, ..., s_{n-1}). The polynomial is the characteristic
/// polynomial of the recurrence: f(X) = X^n + sum c_j X^j gives
/// s_{i+n} = sum_j c_j s_{i+j} over GF(2).
BinarySequence m_sequence(Gf2Poly f, const std::vector<std::uint8_t>& seed);

/// Same, with the impulse seed (1, 0, ..., 0).
BinarySequence m_sequence(Gf2Poly f);

/// l-sequence of period p - 1: bit i = (a * 2^{-i} mod p) mod 2. Requires 2
/// to be a primitive root mod p and 1 <= a <= p - 1.
BinarySequence l_sequence(std::uint64_t p, std::uint64_t a = 1);

/// Cyclic left shift: bit i of the result is bit (i + tau) of s.
BinarySequence shift(const BinarySequence& s, std::int64_t tau);

/// Repeats s to declared period m; m must be a multiple of s.period().
BinarySequence expand_to_period(const BinarySequence& s, std::size_t m);

/// Parameter bundle naming one of the supported constructions, the handle
/// used by serialization and the CLI.
struct LegendreSpec {
    std::uint64_t p;
    bool operator==(const LegendreSpec&) const = default;
};
struct MSequenceSpec {
    Gf2Poly poly;
    std::vector<std::uint8_t> seed;  // empty = impulse default
    bool operator==(const MSequenceSpec&) const = default;
};
struct LSequenceSpec {
    std::uint64_t p;
    std::uint64_t a = 1;
    bool operator==(const LSequenceSpec&) const = default;
};
struct LiteralSpec {
    std::vector<std::uint8_t> bits;
    bool operator==(const LiteralSpec&) const = default;
};

using SequenceSpec = std::variant<LegendreSpec, MSequenceSpec, LSequenceSpec, LiteralSpec>;

/// Builds the sequence a spec describes (validating its parameters).
BinarySequence generate(const SequenceSpec& spec);

/// Compact one-token form: "legendre:7", "mseq:1011" (coefficient string,
/// constant term first), "mseq:1011:100" (explicit seed), "lseq:11",
/// "lseq:11:3", "bits:0110". parse_spec round-trips format_spec output.
std::string format_spec(const SequenceSpec& spec);
SequenceSpec parse_spec(const std::string& text);

}  // namespace seqcorr

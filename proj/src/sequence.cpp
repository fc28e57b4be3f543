#include "seqcorr/sequence.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>
#include <string>

#include "seqcorr/numbers.hpp"

namespace seqcorr {

namespace {

[[noreturn]] void fail(const std::string& what) { throw std::invalid_argument(what); }

void require_bits(const std::vector<std::uint8_t>& bits) {
    for (std::uint8_t b : bits)
        if (b > 1) fail("sequence entries must be 0 or 1");
}

std::uint64_t parse_u64(std::string_view s, const char* what) {
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size())
        fail(std::string("invalid ") + what + ": '" + std::string(s) + "'");
    return v;
}

std::vector<std::uint8_t> parse_bit_chars(std::string_view s, const char* what) {
    if (s.empty()) fail(std::string(what) + " must be nonempty");
    std::vector<std::uint8_t> bits;
    bits.reserve(s.size());
    for (char c : s) {
        if (c != '0' && c != '1') fail(std::string(what) + " must be a 0/1 string");
        bits.push_back(static_cast<std::uint8_t>(c - '0'));
    }
    return bits;
}

}  // namespace

BinarySequence::BinarySequence(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
    if (bits_.empty()) fail("sequence period must be positive");
    require_bits(bits_);
}

std::size_t BinarySequence::ones_count() const {
    return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), std::uint8_t{1}));
}

bool BinarySequence::is_balanced() const {
    std::size_t ones = ones_count(), zeros = bits_.size() - ones;
    if (bits_.size() % 2 == 0) return ones == zeros;
    return ones == zeros + 1 || zeros == ones + 1;
}

std::size_t BinarySequence::minimal_period() const {
    std::size_t n = bits_.size();
    for (std::size_t d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        bool periodic = true;
        for (std::size_t i = d; i < n && periodic; ++i) periodic = bits_[i] == bits_[i - d];
        if (periodic) return d;
    }
    return n;
}

BinarySequence legendre_sequence(std::uint64_t p) {
    if (p < 3 || !is_prime(p)) fail("legendre_sequence requires an odd prime");
    std::vector<std::uint8_t> bits(p);
    for (std::uint64_t n = 0; n < p; ++n)
        bits[n] = legendre_symbol(static_cast<std::int64_t>(n), p) == 1 ? 1 : 0;
    return BinarySequence(std::move(bits));
}

BinarySequence m_sequence(Gf2Poly f, const std::vector<std::uint8_t>& seed) {
    int n = f.degree();
    if (n < 2) fail("m_sequence requires degree >= 2");
    if (!is_primitive(f)) fail("m_sequence requires a primitive polynomial: " + f.to_expr());
    if (seed.size() != static_cast<std::size_t>(n))
        fail("seed length must equal the polynomial degree");
    require_bits(seed);
    if (std::count(seed.begin(), seed.end(), std::uint8_t{1}) == 0) fail("seed must be nonzero");

    std::size_t period = (std::size_t{1} << n) - 1;
    std::vector<std::uint8_t> bits(seed.begin(), seed.end());
    bits.reserve(period);
    // s_{i+n} = sum_j c_j s_{i+j} with f(X) = X^n + sum c_j X^j over GF(2).
    while (bits.size() < period) {
        std::size_t i = bits.size() - static_cast<std::size_t>(n);
        std::uint8_t b = 0;
        for (int j = 0; j < n; ++j)
            if (f.coeff(static_cast<unsigned>(j))) b ^= bits[i + static_cast<std::size_t>(j)];
        bits.push_back(b);
    }
    return BinarySequence(std::move(bits));
}

BinarySequence m_sequence(Gf2Poly f) {
    int n = f.degree();
    if (n < 2) fail("m_sequence requires degree >= 2");
    std::vector<std::uint8_t> impulse(static_cast<std::size_t>(n), 0);
    impulse[0] = 1;
    return m_sequence(f, impulse);
}

BinarySequence l_sequence(std::uint64_t p, std::uint64_t a) {
    if (p < 3 || !is_prime(p)) fail("l_sequence requires an odd prime");
    if (!is_primitive_root(2, p))
        fail("l_sequence requires 2 to be a primitive root mod p; it is not for p = " +
             std::to_string(p));
    if (a == 0 || a >= p) fail("l_sequence multiplier must lie in [1, p-1]");

    std::uint64_t inv2 = mod_inverse(2, p);
    std::vector<std::uint8_t> bits(p - 1);
    std::uint64_t x = a;
    for (std::size_t i = 0; i + 1 < p; ++i) {
        bits[i] = static_cast<std::uint8_t>(x & 1);
        x = static_cast<std::uint64_t>((static_cast<unsigned __int128>(x) * inv2) % p);
    }
    return BinarySequence(std::move(bits));
}

BinarySequence shift(const BinarySequence& s, std::int64_t tau) {
    std::size_t n = s.period();
    std::vector<std::uint8_t> bits(n);
    for (std::size_t i = 0; i < n; ++i)
        bits[i] = static_cast<std::uint8_t>(s[static_cast<std::int64_t>(i) + tau]);
    return BinarySequence(std::move(bits));
}

BinarySequence expand_to_period(const BinarySequence& s, std::size_t m) {
    if (m == 0 || m % s.period() != 0)
        fail("expand_to_period needs a positive multiple of the period");
    std::vector<std::uint8_t> bits;
    bits.reserve(m);
    while (bits.size() < m) bits.insert(bits.end(), s.bits().begin(), s.bits().end());
    return BinarySequence(std::move(bits));
}

BinarySequence generate(const SequenceSpec& spec) {
    return std::visit(
        [](const auto& sp) -> BinarySequence {
            using T = std::decay_t<decltype(sp)>;
            if constexpr (std::is_same_v<T, LegendreSpec>) {
                return legendre_sequence(sp.p);
            } else if constexpr (std::is_same_v<T, MSequenceSpec>) {
                return sp.seed.empty() ? m_sequence(sp.poly) : m_sequence(sp.poly, sp.seed);
            } else if constexpr (std::is_same_v<T, LSequenceSpec>) {
                return l_sequence(sp.p, sp.a);
            } else {
                return BinarySequence(sp.bits);
            }
        },
        spec);
}

std::string format_spec(const SequenceSpec& spec) {
    return std::visit(
        [](const auto& sp) -> std::string {
            using T = std::decay_t<decltype(sp)>;
            if constexpr (std::is_same_v<T, LegendreSpec>) {
                return "legendre:" + std::to_string(sp.p);
            } else if constexpr (std::is_same_v<T, MSequenceSpec>) {
                std::string out = "mseq:" + sp.poly.to_coeff_string();
                if (!sp.seed.empty()) {
                    out += ':';
                    for (std::uint8_t b : sp.seed) out += static_cast<char>('0' + b);
                }
                return out;
            } else if constexpr (std::is_same_v<T, LSequenceSpec>) {
                std::string out = "lseq:" + std::to_string(sp.p);
                if (sp.a != 1) out += ':' + std::to_string(sp.a);
                return out;
            } else {
                std::string out = "bits:";
                for (std::uint8_t b : sp.bits) out += static_cast<char>('0' + b);
                return out;
            }
        },
        spec);
}

SequenceSpec parse_spec(const std::string& text) {
    std::vector<std::string_view> parts;
    std::string_view rest = text;
    while (true) {
        std::size_t colon = rest.find(':');
        if (colon == std::string_view::npos) {
            parts.push_back(rest);
            break;
        }
        parts.push_back(rest.substr(0, colon));
        rest = rest.substr(colon + 1);
    }
    const std::string_view kind = parts[0];
    auto arity = [&](std::size_t lo, std::size_t hi) {
        if (parts.size() - 1 < lo || parts.size() - 1 > hi)
            fail("malformed sequence spec: '" + text + "'");
    };
    if (kind == "legendre") {
        arity(1, 1);
        return LegendreSpec{parse_u64(parts[1], "prime")};
    }
    if (kind == "mseq") {
        arity(1, 2);
        MSequenceSpec sp{Gf2Poly::parse_coeff_string(parts[1]), {}};
        if (parts.size() == 3) sp.seed = parse_bit_chars(parts[2], "seed");
        return sp;
    }
    if (kind == "lseq") {
        arity(1, 2);
        LSequenceSpec sp{parse_u64(parts[1], "prime")};
        if (parts.size() == 3) sp.a = parse_u64(parts[2], "multiplier");
        return sp;
    }
    if (kind == "bits") {
        arity(1, 1);
        return LiteralSpec{parse_bit_chars(parts[1], "bits")};
    }
    fail("unknown sequence kind: '" + std::string(kind) + "'");
}

}  // namespace seqcorr

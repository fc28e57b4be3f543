#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "doctest.h"
#include "seqcorr/gf2poly.hpp"
#include "seqcorr/sequence.hpp"

using namespace seqcorr;

namespace {

BinarySequence seq(const std::string& s) {
    std::vector<std::uint8_t> bits;
    for (char c : s) bits.push_back(static_cast<std::uint8_t>(c - '0'));
    return BinarySequence(std::move(bits));
}

std::string str(const BinarySequence& s) {
    std::string out;
    for (std::uint8_t b : s.bits()) out += static_cast<char>('0' + b);
    return out;
}

}  // namespace

TEST_CASE("BinarySequence basics") {
    BinarySequence s = seq("0110100");
    CHECK(s.period() == 7);
    CHECK(s.ones_count() == 3);
    CHECK(s.is_balanced());

    SUBCASE("cyclic indexing over all integers") {
        CHECK(s[0] == 0);
        CHECK(s[1] == 1);
        CHECK(s[7] == s[0]);
        CHECK(s[9] == s[2]);
        CHECK(s[-1] == s[6]);
        CHECK(s[-7] == s[0]);
        CHECK(s[-15] == s[6]);
        for (std::int64_t i = 0; i < 7; ++i) CHECK(s[-i] == s[7 - i]);
    }

    SUBCASE("balance cases") {
        CHECK(seq("01").is_balanced());
        CHECK(seq("0110").is_balanced());
        CHECK_FALSE(seq("00").is_balanced());
        CHECK_FALSE(seq("1111").is_balanced());
        CHECK(seq("110").is_balanced());  // odd period, counts differ by one
        CHECK(seq("100").is_balanced());
        CHECK_FALSE(seq("10000").is_balanced());
    }

    SUBCASE("constructor validation") {
        CHECK_THROWS_AS(BinarySequence(std::vector<std::uint8_t>{}), std::invalid_argument);
        CHECK_THROWS_AS(BinarySequence(std::vector<std::uint8_t>{0, 2, 1}), std::invalid_argument);
    }
}

TEST_CASE("minimal period") {
    CHECK(seq("010101").minimal_period() == 2);
    CHECK(seq("0110100").minimal_period() == 7);
    CHECK(seq("1111").minimal_period() == 1);
    CHECK(seq("0101010").minimal_period() == 7);  // 7 has no proper divisor period
    CHECK(seq("011011").minimal_period() == 3);
    CHECK(seq("01100110").minimal_period() == 4);
    CHECK(expand_to_period(seq("01"), 10).minimal_period() == 2);
}

TEST_CASE("Legendre sequences") {
    CHECK(str(legendre_sequence(3)) == "010");
    CHECK(str(legendre_sequence(7)) == "0110100");
    CHECK(str(legendre_sequence(11)) == "01011100010");

    SUBCASE("structural properties for all odd primes up to 100") {
        for (std::uint64_t p : {3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61,
                                67, 71, 73, 79, 83, 89, 97}) {
            BinarySequence s = legendre_sequence(p);
            CAPTURE(p);
            CHECK(s.period() == p);
            CHECK(s[0] == 0);
            CHECK(s.ones_count() == (p - 1) / 2);
            CHECK(s.is_balanced());
            CHECK(s.minimal_period() == p);
        }
    }

    SUBCASE("rejects non-primes and p = 2") {
        CHECK_THROWS_AS(legendre_sequence(2), std::invalid_argument);
        CHECK_THROWS_AS(legendre_sequence(1), std::invalid_argument);
        CHECK_THROWS_AS(legendre_sequence(9), std::invalid_argument);
        CHECK_THROWS_AS(legendre_sequence(91), std::invalid_argument);
    }
}

TEST_CASE("m-sequences") {
    const Gf2Poly f = Gf2Poly::parse_expr("x^3+x^2+1");

    SUBCASE("impulse response of x^3+x^2+1") {
        CHECK(str(m_sequence(f)) == "1001110");
    }

    SUBCASE("every primitive polynomial gives a maximal, nearly balanced sequence") {
        for (unsigned n = 2; n <= 8; ++n) {
            for (const Gf2Poly& g : all_primitive_polys(n)) {
                BinarySequence s = m_sequence(g);
                CAPTURE(g.to_expr());
                std::size_t period = (std::size_t{1} << n) - 1;
                CHECK(s.period() == period);
                CHECK(s.minimal_period() == period);
                CHECK(s.ones_count() == (std::size_t{1} << (n - 1)));
            }
        }
    }

    SUBCASE("all nonzero seeds are cyclic shifts of the impulse sequence") {
        const Gf2Poly g = Gf2Poly::parse_expr("x^4+x^3+1");
        BinarySequence base = m_sequence(g);
        for (unsigned mask = 1; mask < 16; ++mask) {
            std::vector<std::uint8_t> seed(4);
            for (unsigned j = 0; j < 4; ++j) seed[j] = (mask >> j) & 1u;
            BinarySequence s = m_sequence(g, seed);
            bool found = false;
            for (std::int64_t k = 0; k < 15 && !found; ++k) found = s == shift(base, k);
            CAPTURE(mask);
            CHECK(found);
        }
    }

    SUBCASE("input validation") {
        CHECK_THROWS_AS(m_sequence(f, {0, 0, 0}), std::invalid_argument);
        CHECK_THROWS_AS(m_sequence(f, {1, 0}), std::invalid_argument);
        CHECK_THROWS_AS(m_sequence(f, {1, 0, 2}), std::invalid_argument);
        CHECK_THROWS_AS(m_sequence(Gf2Poly::parse_expr("x^4+x^3+x^2+x+1")),
                        std::invalid_argument);  // irreducible but not primitive
        CHECK_THROWS_AS(m_sequence(Gf2Poly::parse_expr("x+1")), std::invalid_argument);
    }
}

TEST_CASE("l-sequences") {
    CHECK(str(l_sequence(5)) == "1100");
    CHECK(str(l_sequence(11)) == "1011101000");
    CHECK(str(l_sequence(13)) == "110111001000");
    CHECK(l_sequence(11).period() == 10);

    SUBCASE("half-period complement for every admissible prime up to 100") {
        for (std::uint64_t p : {3, 5, 11, 13, 19, 29, 37, 53, 59, 61, 67, 83}) {
            BinarySequence s = l_sequence(p);
            CAPTURE(p);
            std::int64_t half = static_cast<std::int64_t>((p - 1) / 2);
            for (std::int64_t i = 0; i < half; ++i) CHECK(s[i + half] == 1 - s[i]);
            CHECK(s.is_balanced());
            CHECK(s.minimal_period() == p - 1);
        }
    }

    SUBCASE("other multipliers are cyclic shifts") {
        BinarySequence base = l_sequence(11);
        CHECK(l_sequence(11, 2) == shift(base, -1));  // a = 2 delays the 2^{-i} orbit one step
        for (std::uint64_t a = 1; a <= 10; ++a) {
            BinarySequence s = l_sequence(11, a);
            bool found = false;
            for (std::int64_t k = 0; k < 10 && !found; ++k) found = s == shift(base, k);
            CAPTURE(a);
            CHECK(found);
        }
    }

    SUBCASE("distinct diagnostics for the two admissibility failures") {
        CHECK_THROWS_WITH_AS(l_sequence(9), "l_sequence requires an odd prime",
                             std::invalid_argument);
        CHECK_THROWS_WITH_AS(
            l_sequence(7),
            "l_sequence requires 2 to be a primitive root mod p; it is not for p = 7",
            std::invalid_argument);
        CHECK_THROWS_AS(l_sequence(2), std::invalid_argument);
        CHECK_THROWS_AS(l_sequence(11, 0), std::invalid_argument);
        CHECK_THROWS_AS(l_sequence(11, 11), std::invalid_argument);
    }
}

TEST_CASE("cyclic shifts") {
    BinarySequence s = seq("1001110");
    CHECK(str(shift(s, 2)) == "0111010");
    CHECK(shift(s, 0) == s);
    CHECK(shift(s, 7) == s);
    CHECK(shift(s, -3) == shift(s, 4));
    CHECK(shift(shift(s, 3), 5) == shift(s, 8));
    CHECK(shift(s, 2).ones_count() == s.ones_count());
    for (std::int64_t tau = -8; tau <= 8; ++tau) {
        for (std::int64_t i = 0; i < 7; ++i) CHECK(shift(s, tau)[i] == s[i + tau]);
    }
}

TEST_CASE("expand_to_period") {
    CHECK(str(expand_to_period(seq("01"), 6)) == "010101");
    BinarySequence s = seq("110");
    CHECK(expand_to_period(s, 3) == s);
    CHECK(expand_to_period(s, 9).period() == 9);
    CHECK(expand_to_period(s, 9).minimal_period() == 3);
    CHECK_THROWS_AS(expand_to_period(s, 0), std::invalid_argument);
    CHECK_THROWS_AS(expand_to_period(s, 4), std::invalid_argument);
}

TEST_CASE("sequence specs") {
    SUBCASE("formatting") {
        CHECK(format_spec(LegendreSpec{7}) == "legendre:7");
        CHECK(format_spec(MSequenceSpec{Gf2Poly::parse_expr("x^3+x^2+1"), {}}) == "mseq:1011");
        CHECK(format_spec(MSequenceSpec{Gf2Poly::parse_expr("x^3+x^2+1"), {1, 0, 0}}) ==
              "mseq:1011:100");
        CHECK(format_spec(LSequenceSpec{11}) == "lseq:11");
        CHECK(format_spec(LSequenceSpec{11, 3}) == "lseq:11:3");
        CHECK(format_spec(LiteralSpec{{0, 1, 1, 0}}) == "bits:0110");
    }

    SUBCASE("parse round-trips") {
        for (const char* text : {"legendre:13", "mseq:1011", "mseq:1011:110", "lseq:11",
                                 "lseq:11:3", "bits:0110"}) {
            SequenceSpec sp = parse_spec(text);
            CHECK(format_spec(sp) == text);
            CHECK(parse_spec(format_spec(sp)) == sp);
        }
    }

    SUBCASE("generate matches the direct constructors") {
        CHECK(generate(parse_spec("legendre:7")) == legendre_sequence(7));
        CHECK(generate(parse_spec("mseq:1011")) == m_sequence(Gf2Poly::parse_expr("x^3+x^2+1")));
        CHECK(generate(parse_spec("mseq:1011:100")) ==
              m_sequence(Gf2Poly::parse_expr("x^3+x^2+1"), {1, 0, 0}));
        CHECK(generate(parse_spec("lseq:11:3")) == l_sequence(11, 3));
        CHECK(generate(parse_spec("bits:0110")) == seq("0110"));
    }

    SUBCASE("malformed specs are rejected") {
        for (const char* text : {"", "foo:3", "legendre", "legendre:x", "legendre:7:3",
                                 "mseq", "mseq:1011:100:1", "mseq:10x1", "lseq:11:3:4",
                                 "bits:", "bits:012", "bits"}) {
            CAPTURE(text);
            CHECK_THROWS_AS(parse_spec(text), std::invalid_argument);
        }
    }

    SUBCASE("generate validates spec parameters") {
        CHECK_THROWS_AS(generate(parse_spec("legendre:8")), std::invalid_argument);
        CHECK_THROWS_AS(generate(parse_spec("lseq:7")), std::invalid_argument);
        CHECK_THROWS_AS(generate(parse_spec("mseq:11111")), std::invalid_argument);
    }
}

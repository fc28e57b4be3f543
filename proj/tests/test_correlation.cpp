#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <random>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "naive_reference.hpp"
#include "seqcorr/correlation.hpp"
#include "seqcorr/gf2poly.hpp"
#include "seqcorr/sequence.hpp"

using namespace seqcorr;

namespace {

BinarySequence seq(const std::string& s) {
    std::vector<std::uint8_t> bits;
    for (char c : s) bits.push_back(static_cast<std::uint8_t>(c - '0'));
    return BinarySequence(std::move(bits));
}

BinarySequence random_seq(std::size_t period, std::mt19937_64& rng) {
    std::vector<std::uint8_t> bits(period);
    for (auto& b : bits) b = static_cast<std::uint8_t>(rng() & 1);
    return BinarySequence(std::move(bits));
}

}  // namespace

TEST_CASE("sequence_to_integer packs one common period") {
    BinarySequence s = seq("101");
    CHECK(sequence_to_integer(s, 0, 3).value_u64() == 5);
    CHECK(sequence_to_integer(s, 1, 3).value_u64() == 6);
    CHECK(sequence_to_integer(s, -1, 3).value_u64() == 3);
    CHECK(sequence_to_integer(s, 0, 6).value_u64() == 45);  // 101101
    CHECK(sequence_to_integer(s, 0, 6).width() == 6);
    CHECK_THROWS_AS(sequence_to_integer(s, 0, 4), std::invalid_argument);
    CHECK_THROWS_AS(sequence_to_integer(s, 0, 0), std::invalid_argument);
}

TEST_CASE("common_period is the lcm of declared periods") {
    CHECK(common_period(seq("0101"), seq("011011")) == 12);
    CHECK(common_period(legendre_sequence(7), legendre_sequence(11)) == 77);
    CHECK(common_period(seq("01"), seq("01")) == 2);
}

TEST_CASE("classical autocorrelation") {
    SUBCASE("m-sequences are two-valued: N at lag 0, otherwise -1") {
        for (unsigned n = 2; n <= 6; ++n) {
            BinarySequence s = m_sequence(first_primitive_poly(n));
            std::int64_t period = static_cast<std::int64_t>(s.period());
            CHECK(classical_autocorrelation(s, 0) == period);
            for (std::int64_t tau = 1; tau < period; ++tau) {
                CAPTURE(n);
                CAPTURE(tau);
                CHECK(classical_autocorrelation(s, tau) == -1);
            }
        }
    }

    SUBCASE("l-sequence half-period lag hits the signed trough") {
        CHECK(classical_autocorrelation(l_sequence(11), 5) == -10);
        CHECK(classical_autocorrelation(l_sequence(13), 6) == -12);
    }
}

TEST_CASE("classical crosscorrelation matches direct counting") {
    std::mt19937_64 rng(0xc1a551ca1u);
    for (int iter = 0; iter < 60; ++iter) {
        std::size_t ps = 2 + rng() % 11, pt = 2 + rng() % 11;
        BinarySequence s = random_seq(ps, rng), t = random_seq(pt, rng);
        auto tau = static_cast<std::int64_t>(rng() % (ps * pt));
        CHECK(classical_crosscorrelation(s, t, tau) == naive::classical_cross(s, t, tau));
    }
}

TEST_CASE("arithmetic crosscorrelation of Legendre pairs is lag-independent") {
    BinarySequence s7 = legendre_sequence(7);
    for (std::int64_t tau : {0, 1, 5, 76})
        CHECK(arithmetic_crosscorrelation(s7, legendre_sequence(11), tau) == -1);
    for (std::int64_t tau : {0, 40})
        CHECK(arithmetic_crosscorrelation(s7, legendre_sequence(13), tau) == 5);
    for (std::int64_t tau : {0, 3})
        CHECK(arithmetic_crosscorrelation(s7, legendre_sequence(17), tau) == -13);
}

TEST_CASE("arithmetic autocorrelation") {
    SUBCASE("lag 0 gives the period for any sequence") {
        CHECK(arithmetic_autocorrelation(legendre_sequence(13), 0) == 13);
        CHECK(arithmetic_autocorrelation(seq("0110"), 0) == 4);
        CHECK(arithmetic_autocorrelation(seq("1111"), 0) == 4);
    }

    SUBCASE("m-sequence of x^4+x^3+1, all nonzero lags") {
        BinarySequence s = m_sequence(Gf2Poly::parse_expr("x^4+x^3+1"));
        const std::int64_t expected[] = {-1, 1, 1, 7, 1, 3, -3, 3, -3, -1, -7, -1, -1, 1};
        std::int64_t worst = 0;
        for (std::int64_t tau = 1; tau <= 14; ++tau) {
            std::int64_t v = arithmetic_autocorrelation(s, tau);
            CHECK(v == expected[tau - 1]);
            worst = std::max(worst, std::abs(v));
        }
        CHECK(worst == 7);
    }

    SUBCASE("l-sequences have identically zero arithmetic autocorrelation") {
        BinarySequence s = l_sequence(11);
        for (std::int64_t tau = 1; tau < 10; ++tau) CHECK(arithmetic_autocorrelation(s, tau) == 0);
    }
}

TEST_CASE("omega residue") {
    BinarySequence s = legendre_sequence(7), t = legendre_sequence(11);
    ResidueBits w = omega(s, t);
    CHECK(w.width() == 77);
    CHECK(w.weight() == 39);
    std::int64_t value = 77 - 2 * static_cast<std::int64_t>(w.weight());
    for (std::int64_t tau : {0, 1, 5}) CHECK(arithmetic_crosscorrelation(s, t, tau) == value);

    SUBCASE("rejects non-coprime and degenerate periods") {
        CHECK_THROWS_AS(omega(legendre_sequence(3), m_sequence(Gf2Poly::parse_expr("x^2+x+1"))),
                        std::invalid_argument);
        CHECK_THROWS_AS(omega(m_sequence(Gf2Poly::parse_expr("x^4+x+1")),
                              m_sequence(Gf2Poly::parse_expr("x^4+x^3+1"))),
                        std::invalid_argument);
        CHECK_THROWS_AS(omega(seq("1"), legendre_sequence(3)), std::invalid_argument);
        CHECK_THROWS_AS(omega(legendre_sequence(3), seq("0")), std::invalid_argument);
    }

    SUBCASE("matches the swept value on random coprime pairs") {
        std::mt19937_64 rng(0x0a3e9a11u);
        int done = 0;
        while (done < 25) {
            std::size_t ps = 2 + rng() % 19, pt = 2 + rng() % 19;
            if (std::gcd(ps, pt) != 1) continue;
            BinarySequence a = random_seq(ps, rng), b = random_seq(pt, rng);
            ResidueBits om = omega(a, b);
            std::int64_t expect =
                static_cast<std::int64_t>(om.width()) - 2 * static_cast<std::int64_t>(om.weight());
            auto tau = static_cast<std::int64_t>(rng() % om.width());
            CHECK(arithmetic_crosscorrelation(a, b, tau) == expect);
            ++done;
        }
    }
}

TEST_CASE("profiles agree with per-lag evaluation") {
    BinarySequence s = seq("0101"), t = seq("011011");
    for (Method m : {Method::classical, Method::arithmetic}) {
        CorrelationProfile prof = cross_profile(s, t, m);
        CHECK(prof.method == m);
        CHECK_FALSE(prof.is_auto);
        CHECK(prof.common_period == 12);
        CHECK(prof.values.size() == 12);
        for (std::int64_t tau = 0; tau < 12; ++tau) {
            std::int64_t direct = m == Method::classical
                                      ? classical_crosscorrelation(s, t, tau)
                                      : arithmetic_crosscorrelation(s, t, tau);
            CHECK(prof.values[static_cast<std::size_t>(tau)] == direct);
        }
    }

    SUBCASE("every value has the period's parity and magnitude bound") {
        std::mt19937_64 rng(0x9e3779b9u);
        for (int iter = 0; iter < 20; ++iter) {
            BinarySequence a = random_seq(2 + rng() % 14, rng);
            BinarySequence b = random_seq(2 + rng() % 14, rng);
            for (Method m : {Method::classical, Method::arithmetic}) {
                CorrelationProfile prof = cross_profile(a, b, m);
                auto n = static_cast<std::int64_t>(prof.common_period);
                for (std::int64_t v : prof.values) {
                    CHECK(std::abs(v) <= n);
                    CHECK((v - n) % 2 == 0);
                }
            }
        }
    }

    SUBCASE("auto profile is the self cross profile") {
        BinarySequence a = m_sequence(Gf2Poly::parse_expr("x^4+x+1"));
        for (Method m : {Method::classical, Method::arithmetic}) {
            CorrelationProfile ap = auto_profile(a, m);
            CHECK(ap.is_auto);
            CHECK(ap.common_period == 15);
            CHECK(ap.values[0] == 15);
            CHECK(ap.values == cross_profile(a, a, m).values);
        }
    }

    SUBCASE("thread count does not change results") {
        BinarySequence a = legendre_sequence(11), b = legendre_sequence(13);
        for (Method m : {Method::classical, Method::arithmetic}) {
            CHECK(cross_profile(a, b, m, 1).values == cross_profile(a, b, m, 4).values);
        }
        CHECK(auto_profile(a, Method::arithmetic, 1).values ==
              auto_profile(a, Method::arithmetic, 3).values);
    }
}

TEST_CASE("arithmetic profiles match the schoolbook reference") {
    std::mt19937_64 rng(0x5eedf00du);
    int done = 0;
    while (done < 40) {
        std::size_t ps = 2 + rng() % 19, pt = 2 + rng() % 19;
        if (std::gcd(ps, pt) != 1) continue;
        BinarySequence s = random_seq(ps, rng), t = random_seq(pt, rng);
        CorrelationProfile prof = cross_profile(s, t, Method::arithmetic);
        bool all_match = true, constant = true;
        for (std::size_t tau = 0; tau < prof.values.size(); ++tau) {
            all_match = all_match && prof.values[tau] ==
                                         naive::arithmetic_cross(s, t, static_cast<std::int64_t>(tau));
            constant = constant && prof.values[tau] == prof.values[0];
        }
        CAPTURE(ps);
        CAPTURE(pt);
        CHECK(all_match);
        CHECK(constant);  // coprime periods force lag independence
        ++done;
    }

    SUBCASE("non-coprime periods need not be constant") {
        BinarySequence s = m_sequence(Gf2Poly::parse_expr("x^4+x+1"));
        BinarySequence t = m_sequence(Gf2Poly::parse_expr("x^4+x^3+1"));
        CorrelationProfile prof = cross_profile(s, t, Method::arithmetic);
        bool constant = true;
        for (std::int64_t v : prof.values) constant = constant && v == prof.values[0];
        CHECK_FALSE(constant);
        for (std::size_t tau = 0; tau < prof.values.size(); ++tau)
            CHECK(prof.values[tau] == naive::arithmetic_cross(s, t, static_cast<std::int64_t>(tau)));
    }
}

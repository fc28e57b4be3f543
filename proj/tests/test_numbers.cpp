#include <numeric>
#include <set>
#include <stdexcept>

#include "doctest.h"
#include "seqcorr/numbers.hpp"

using namespace seqcorr;

TEST_CASE("is_prime agrees with a sieve up to 1000") {
    std::vector<bool> composite(1001, false);
    for (std::size_t i = 2; i <= 1000; ++i)
        for (std::size_t j = 2 * i; j <= 1000; j += i) composite[j] = true;
    for (std::uint64_t n = 0; n <= 1000; ++n) CHECK(is_prime(n) == (n >= 2 && !composite[n]));
}

TEST_CASE("is_prime handles large 64-bit inputs") {
    CHECK(is_prime(2305843009213693951ull));   // 2^61 - 1
    CHECK(!is_prime(2147483647ull * 3));
    CHECK(is_prime(18446744073709551557ull));  // largest 64-bit prime
    CHECK(!is_prime(3215031751ull));           // strong pseudoprime to bases 2,3,5,7
}

TEST_CASE("mod_pow and mod_inverse") {
    CHECK(mod_pow(2, 10, 1000) == 24);
    CHECK(mod_pow(7, 0, 13) == 1);
    CHECK(mod_pow(0, 0, 13) == 1);
    // Fermat: x^(p-1) == 1 mod p, exercised at full 64-bit width
    CHECK(mod_pow(12345, 2305843009213693950ull, 2305843009213693951ull) == 1);
    for (std::uint64_t m : {3ull, 7ull, 97ull, 65537ull})
        for (std::uint64_t a = 1; a < std::min<std::uint64_t>(m, 50); ++a) {
            if (std::gcd(a, m) != 1) continue;
            CHECK((a * mod_inverse(static_cast<std::int64_t>(a), m)) % m == 1);
        }
    CHECK(mod_inverse(-3, 7) == mod_inverse(4, 7));
    CHECK_THROWS_AS(mod_inverse(6, 9), std::invalid_argument);
}

TEST_CASE("legendre_symbol basics and multiplicativity") {
    // quadratic residues mod 7 are {1, 2, 4}
    std::set<std::int64_t> qr7;
    for (std::int64_t n = 1; n < 7; ++n)
        if (legendre_symbol(n, 7) == 1) qr7.insert(n);
    CHECK(qr7 == std::set<std::int64_t>{1, 2, 4});
    CHECK(legendre_symbol(0, 7) == 0);
    CHECK(legendre_symbol(14, 7) == 0);
    CHECK(legendre_symbol(-1, 7) == legendre_symbol(6, 7));
    CHECK_THROWS_AS(legendre_symbol(2, 9), std::invalid_argument);
    CHECK_THROWS_AS(legendre_symbol(1, 2), std::invalid_argument);
    for (std::uint64_t p : {3ull, 5ull, 7ull, 11ull, 13ull, 97ull})
        for (std::int64_t a = 1; a < 30; ++a)
            for (std::int64_t b = 1; b < 30; ++b)
                CHECK(legendre_symbol(a * b, p) == legendre_symbol(a, p) * legendre_symbol(b, p));
}

TEST_CASE("el3 is the greatest even integer below p/3") {
    CHECK(el3(7) == 2);
    CHECK(el3(11) == 2);
    CHECK(el3(13) == 4);
    CHECK(el3(19) == 6);
    CHECK(el3(29) == 8);
    CHECK(el3(97) == 32);
    for (std::uint64_t p = 7; p <= 200; ++p) {
        if (!is_prime(p)) continue;
        std::uint64_t e = el3(p);
        CHECK(e % 2 == 0);
        CHECK(3 * e < p);
        CHECK(3 * (e + 2) >= p);
    }
    CHECK_THROWS_AS(el3(5), std::invalid_argument);
    CHECK_THROWS_AS(el3(9), std::invalid_argument);
}

TEST_CASE("prime_factors, multiplicative_order, primitive roots") {
    CHECK(prime_factors(2047) == std::vector<std::uint64_t>{23, 89});
    CHECK(prime_factors(1024) == std::vector<std::uint64_t>{2});
    CHECK(prime_factors((1ull << 36) - 1) == std::vector<std::uint64_t>{3, 5, 7, 13, 19, 37, 73, 109});
    CHECK(multiplicative_order(2, 7) == 3);
    CHECK(multiplicative_order(2, 11) == 10);
    CHECK(multiplicative_order(1, 7) == 1);
    CHECK(!is_primitive_root(2, 7));
    CHECK(is_primitive_root(2, 11));
    CHECK(is_primitive_root(2, 13));
    CHECK(is_primitive_root(2, 5));
    CHECK(!is_primitive_root(2, 17));
    // brute-force cross-check
    for (std::uint64_t p : {3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull}) {
        for (std::uint64_t a = 1; a < p; ++a) {
            std::uint64_t ord = 1, x = a % p;
            while (x != 1) {
                x = (x * a) % p;
                ++ord;
            }
            CHECK(multiplicative_order(a, p) == ord);
            CHECK(is_primitive_root(a, p) == (ord == p - 1));
        }
    }
}

TEST_CASE("lcm guards overflow") {
    CHECK(lcm(4, 6) == 12);
    CHECK(lcm(7, 13) == 91);
    CHECK_THROWS_AS(lcm((1ull << 40) + 1, (1ull << 40) - 1), std::overflow_error);
}

TEST_CASE("floor_mod implements cyclic indexing") {
    CHECK(floor_mod(0, 7) == 0);
    CHECK(floor_mod(13, 7) == 6);
    CHECK(floor_mod(-1, 7) == 6);
    CHECK(floor_mod(-7, 7) == 0);
    CHECK(floor_mod(-15, 7) == 6);
}

TEST_CASE("gcd of Mersenne-style numbers follows the exponent gcd") {
    for (std::uint64_t a = 1; a <= 16; ++a)
        for (std::uint64_t b = 1; b <= 16; ++b)
            CHECK(std::gcd((1ull << a) - 1, (1ull << b) - 1) == (1ull << std::gcd(a, b)) - 1);
}
